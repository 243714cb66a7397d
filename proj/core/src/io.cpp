#include "chromfold/io.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "chromfold/error.hpp"
#include "json.hpp"

namespace chromfold {

namespace {

using nlohmann::json;

json vector_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Eigen::VectorXd vector_from(const json& j) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  return v;
}

json curve_json(const ClosedCurve& curve) {
  json points = json::array();
  for (const auto& p : curve.points()) points.push_back({p.x(), p.y()});
  return {{"points", points}};
}

// Vertices of a regular tetrahedron centred at the origin.
std::array<Eigen::Vector3d, 4> regular_simplex_corners() {
  return {Eigen::Vector3d(1, 1, 1), Eigen::Vector3d(1, -1, -1), Eigen::Vector3d(-1, 1, -1),
          Eigen::Vector3d(-1, -1, 1)};
}

}  // namespace

std::string complex_to_json(const ChromaticComplex& complex, const Realization* realization) {
  json doc;
  doc["dim"] = complex.dim();
  json vertices = json::array();
  for (const auto& v : complex.vertices()) vertices.push_back({{"color", v.color}, {"view", v.view.members()}});
  doc["vertices"] = vertices;
  doc["top_cells"] = complex.top_cells();
  if (complex.periodic()) doc["shifts"] = complex.shifts();
  if (realization != nullptr) {
    json positions = json::array();
    for (const auto& p : realization->positions()) positions.push_back(vector_json(p));
    doc["chart"] = realization->chart() == Chart::kBarycentric ? "barycentric" : "ambient";
    doc["positions"] = positions;
    if (realization->period() > 0.0) doc["period"] = realization->period();
  }
  return doc.dump(2);
}

ComplexDocument complex_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
    std::vector<ChromaticVertex> vertices;
    for (const auto& v : doc.at("vertices"))
      vertices.push_back({v.at("color").get<int>(), ColorSet::of(v.at("view").get<std::vector<int>>())});
    auto cells = doc.at("top_cells").get<std::vector<Cell>>();
    std::vector<std::vector<LatticeShift>> shifts;
    if (doc.contains("shifts")) shifts = doc["shifts"].get<std::vector<std::vector<LatticeShift>>>();
    ComplexDocument out{ChromaticComplex(doc.at("dim").get<int>(), std::move(vertices), std::move(cells),
                                         std::move(shifts)),
                        std::nullopt};
    if (doc.contains("positions")) {
      std::vector<Eigen::VectorXd> positions;
      for (const auto& p : doc["positions"]) positions.push_back(vector_from(p));
      const std::string chart = doc.value("chart", std::string("barycentric"));
      if (chart == "barycentric")
        out.realization = Realization::barycentric(std::move(positions));
      else if (chart == "ambient")
        out.realization = Realization::ambient(std::move(positions), doc.value("period", 0.0));
      else
        throw Error("unknown chart '" + chart + "'");
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed complex document: ") + e.what());
  }
}

std::string curve_to_json(const ClosedCurve& curve) { return curve_json(curve).dump(2); }

ClosedCurve curve_from_json(const std::string& text) {
  try {
    const json doc = json::parse(text);
    std::vector<Eigen::Vector2d> points;
    for (const auto& p : doc.at("points")) {
      if (p.size() != 2) throw Error("curve points must have two coordinates");
      points.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
    return ClosedCurve(std::move(points));
  } catch (const json::exception& e) {
    throw Error(std::string("malformed curve document: ") + e.what());
  }
}

std::string frames_to_json(const std::vector<ClosedCurve>& frames) {
  json out = json::array();
  for (const auto& f : frames) out.push_back(curve_json(f));
  return out.dump(2);
}

void write_off(std::ostream& out, const ChromaticComplex& complex, const Realization& realization, bool colored) {
  if (realization.chart() != Chart::kBarycentric) throw Error("OFF export needs a barycentric realization");
  const int n = complex.dim();
  if (n < 1 || n > 3) throw Error("OFF export supports dimensions 1 to 3");
  const auto corners = regular_simplex_corners();

  std::vector<std::vector<int>> faces;
  for (const auto& cell : complex.top_cells()) {
    if (n <= 2) {
      faces.push_back(cell);
    } else {
      for (std::size_t skip = 0; skip < cell.size(); ++skip) {
        std::vector<int> face;
        for (std::size_t k = 0; k < cell.size(); ++k)
          if (k != skip) face.push_back(cell[k]);
        faces.push_back(face);
      }
    }
  }

  static constexpr std::array<std::array<double, 4>, 4> kPalette{{
      {0.85, 0.20, 0.20, 1.0},
      {0.20, 0.65, 0.25, 1.0},
      {0.20, 0.35, 0.85, 1.0},
      {0.90, 0.70, 0.10, 1.0},
  }};

  out << (colored ? "COFF\n" : "OFF\n");
  out << complex.vertex_count() << ' ' << faces.size() << " 0\n";
  out.precision(17);
  for (std::size_t v = 0; v < complex.vertex_count(); ++v) {
    const Eigen::VectorXd& b = realization.position(static_cast<VertexId>(v));
    Eigen::Vector3d p = Eigen::Vector3d::Zero();
    for (Eigen::Index k = 0; k < b.size(); ++k) p += b[k] * corners[static_cast<std::size_t>(k)];
    out << p.x() << ' ' << p.y() << ' ' << p.z();
    if (colored) {
      const auto& c = kPalette[static_cast<std::size_t>(complex.vertex(static_cast<VertexId>(v)).color) % 4];
      out << ' ' << c[0] << ' ' << c[1] << ' ' << c[2] << ' ' << c[3];
    }
    out << '\n';
  }
  for (const auto& f : faces) {
    out << f.size();
    for (int v : f) out << ' ' << v;
    out << '\n';
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << contents;
}

}  // namespace chromfold
