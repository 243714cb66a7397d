#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "chromfold/collapse.hpp"
#include "chromfold/curves.hpp"
#include "chromfold/error.hpp"
#include "chromfold/eversion.hpp"
#include "chromfold/io.hpp"
#include "chromfold/jiggling.hpp"
#include "chromfold/root_isolation.hpp"
#include "chromfold/snapshot_oracle.hpp"
#include "chromfold/subdivision.hpp"

namespace chromfold::cli {

using nlohmann::json;

namespace {

json vector_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

json matrix_json(const Eigen::MatrixXd& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i).transpose()));
  return out;
}

Eigen::VectorXd to_vector(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

// Row-major square matrix from a flat list.
Eigen::MatrixXd square_matrix(const std::string& text, const char* what) {
  const auto values = parse_list(text);
  const auto n = static_cast<Eigen::Index>(std::lround(std::sqrt(static_cast<double>(values.size()))));
  if (n == 0 || n * n != static_cast<Eigen::Index>(values.size()))
    throw Error(std::string(what) + " needs n*n comma-separated entries");
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = values[static_cast<std::size_t>(i * n + j)];
  return m;
}

json witness_json(const Witness& w) {
  json out{{"cell", w.cell}, {"face", w.face}, {"kernel", vector_json(w.kernel)},
           {"derivative", matrix_json(w.derivative)}, {"singular_value", w.singular_value}};
  if (w.t) out["t"] = *w.t;
  return out;
}

json certificate_json(const Certificate& c) {
  json witnesses = json::array();
  for (const auto& w : c.witnesses) witnesses.push_back(witness_json(w));
  return {{"pass", c.pass}, {"witnesses", witnesses}};
}

json steps_json(const Filtration& f) {
  json steps = json::array();
  for (const auto& s : f.steps) steps.push_back({{"cell", s.cell}, {"face", s.face}});
  return steps;
}

json simplices_json(const SimplicialComplex& k) {
  json out = json::array();
  for (const auto& s : k.maximal_cells()) out.push_back(s);
  return out;
}

std::vector<PlaneField> fields_of(const JiggleArgs& args) {
  std::vector<PlaneField> fields;
  for (const auto& f : args.fields) {
    PlaneField field{square_matrix(f, "--field")};
    if (field.matrix.rows() != args.n) throw Error("--field must be " + std::to_string(args.n) + "x" + std::to_string(args.n));
    fields.push_back(std::move(field));
  }
  if (fields.empty()) fields.push_back(PlaneField::exponential(args.n));
  return fields;
}

// Graph of the section: n = 1 as (x, u, 0), n = 2 as (x1, x2, u1).
void write_section_off(std::ostream& out, const JiggledSection& section) {
  const int n = section.model().dim();
  if (n > 2) throw Error("section export supports n <= 2");
  std::vector<Eigen::Vector3d> points;
  std::vector<std::vector<std::size_t>> faces;
  for (std::size_t c = 0; c < section.pieces().size(); ++c) {
    const auto& piece = section.pieces()[c];
    std::vector<std::size_t> face;
    for (Eigen::Index k = 0; k < piece.points.rows(); ++k) {
      const Eigen::VectorXd x = piece.points.row(k).transpose();
      const Eigen::VectorXd u = section.value(c, x);
      face.push_back(points.size());
      points.emplace_back(n == 1 ? Eigen::Vector3d(x[0], u[0], 0.0) : Eigen::Vector3d(x[0], x[1], u[0]));
    }
    faces.push_back(std::move(face));
  }
  out << "OFF\n" << points.size() << ' ' << faces.size() << " 0\n";
  out.precision(17);
  for (const auto& p : points) out << p.x() << ' ' << p.y() << ' ' << p.z() << '\n';
  for (const auto& f : faces) {
    out << f.size();
    for (auto v : f) out << ' ' << v;
    out << '\n';
  }
}

SimplicialComplex complex_arg(const CollapseArgs& args) {
  if (!args.in.empty()) return SimplicialComplex::from_chromatic(complex_from_json(read_file(args.in)).complex);
  if (args.n < 0) throw Error("give --in or --n");
  return SimplicialComplex::from_chromatic(*standard_simplex(args.n));
}

}  // namespace

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      throw Error("not a number: '" + item + "'");
    }
    if (used != item.size()) throw Error("not a number: '" + item + "'");
    out.push_back(value);
  }
  if (out.empty()) throw Error("empty number list");
  return out;
}

void emit(const Output& out, const std::string& text) {
  if (out.path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  write_file(out.path, text.back() == '\n' ? text : text + "\n");
}

void emit(const Output& out, const json& doc) { emit(out, doc.dump(2)); }

int run_subdivide(const SubdivideArgs& args) {
  const PlacementParameter mu(args.mu);
  if (args.in.empty()) {
    const IteratedFolding f = iterate(args.n, args.r, mu);
    emit(args.out, complex_to_json(f.finest(), &f.finest_realization()));
    return kOk;
  }
  auto doc = complex_from_json(read_file(args.in));
  auto base = std::make_shared<const ChromaticComplex>(std::move(doc.complex));
  if (doc.realization) {
    const IteratedFolding f = iterate(base, *doc.realization, args.r, mu);
    emit(args.out, complex_to_json(f.finest(), &f.finest_realization()));
    return kOk;
  }
  ComplexPtr current = base;
  for (int k = 0; k < args.r; ++k) current = chromatic_subdivide_complex(current).subdivided;
  emit(args.out, complex_to_json(*current));
  return kOk;
}

int run_oracle(const OracleArgs& args) {
  const CrossValidationReport report = cross_validate(args.n);
  json doc{{"n", args.n},
           {"executions", report.executions},
           {"subdivision_cells", report.subdivision_cells},
           {"fubini", fubini(args.n + 1)},
           {"match", report.match()}};
  auto cells_json = [](const std::vector<std::vector<ChromaticVertex>>& cells) {
    json out = json::array();
    for (const auto& cell : cells) {
      json c = json::array();
      for (const auto& v : cell) c.push_back({{"color", v.color}, {"view", v.view.members()}});
      out.push_back(c);
    }
    return out;
  };
  if (!report.match()) {
    doc["only_in_oracle"] = cells_json(report.only_in_oracle);
    doc["only_in_subdivision"] = cells_json(report.only_in_subdivision);
  }
  if (args.list) {
    json executions = json::array();
    for (const auto& e : enumerate_executions(args.n)) {
      json blocks = json::array();
      for (ColorSet b : e.blocks) blocks.push_back(b.members());
      json cell = json::array();
      for (const auto& v : top_cell_of(e)) cell.push_back({{"color", v.color}, {"view", v.view.members()}});
      executions.push_back({{"blocks", blocks}, {"cell", cell}});
    }
    doc["listing"] = executions;
  }
  emit(args.out, doc);
  return report.match() ? kOk : kCertificateFailed;
}

int run_fold(const FoldArgs& args) {
  const IteratedFolding f = iterate(args.n, args.r, PlacementParameter(args.mu));
  json doc{{"n", args.n},
           {"r", args.r},
           {"mu", args.mu},
           {"cells", f.finest().cell_count()},
           {"vertex_map", f.composite_fold.vertex_map()},
           {"simplicial", is_simplicial(f.composite_fold)},
           {"chromatic", preserves_colors(f.composite_fold)}};
  if (args.r > 0) doc["min_singular_value"] = min_fold_singular_value(f);
  if (!args.point.empty()) {
    const FoldEvaluator eval(f);
    const Eigen::VectorXd x = to_vector(parse_list(args.point));
    if (x.size() != args.n + 1) throw Error("--point needs n + 1 barycentric coordinates");
    const auto [cell, local] = eval.locate(x);
    doc["point"] = vector_json(x);
    doc["cell"] = cell;
    doc["image"] = vector_json(eval.fold(x));
  }
  emit(args.out, doc);
  return kOk;
}

int run_unfold(const FoldArgs& args) {
  if (args.point.empty()) throw Error("unfold needs --point");
  const IteratedFolding f = iterate(args.n, args.r, PlacementParameter(args.mu));
  const FoldEvaluator eval(f);
  const Eigen::VectorXd x = to_vector(parse_list(args.point));
  json doc{{"n", args.n},
           {"r", args.r},
           {"mu", args.mu},
           {"t", args.t},
           {"point", vector_json(x)},
           {"value", vector_json(unfolding_homotopy(eval, args.t, x))}};
  emit(args.out, doc);
  return kOk;
}

int run_jiggle(const JiggleArgs& args) {
  const TorusModel model(args.n, args.period);
  const JiggledSection section = build_section(model, args.r, PlacementParameter(args.mu));
  const auto fields = fields_of(args);
  bool pass = true;
  json checks = json::array();
  for (const auto& field : fields) {
    const Certificate qt = check_quasi_transverse(section, field);
    json entry{{"field", matrix_json(field.matrix)}, {"quasi_transverse", certificate_json(qt)}};
    pass = pass && qt.pass;
    if (args.pencil_to_exp) {
      const Certificate pc = check_pencil(section, {PlaneField::exponential(args.n), field});
      entry["pencil_from_exp"] = certificate_json(pc);
      pass = pass && pc.pass;
    }
    checks.push_back(entry);
  }
  json doc{{"n", args.n},
           {"L", args.period},
           {"r", args.r},
           {"mu", args.mu},
           {"pieces", section.pieces().size()},
           {"max_face_mismatch", section.max_face_mismatch()},
           {"checks", checks},
           {"pass", pass}};
  if (args.r >= 1) doc["verticality"] = verticality(section);
  if (!args.export_format.empty()) {
    if (args.export_format != "off") throw Error("unknown export format '" + args.export_format + "'");
    if (args.export_path.empty()) throw Error("--export needs --export-path");
    std::ofstream file(args.export_path);
    if (!file) throw Error("cannot write '" + args.export_path + "'");
    write_section_off(file, section);
  }
  emit(args.out, doc);
  return pass ? kOk : kCertificateFailed;
}

int run_minimal_r(const JiggleArgs& args) {
  const TorusModel model(args.n, args.period);
  const auto r = minimal_order(model, fields_of(args), args.pencil_to_exp, args.r_max, PlacementParameter(args.mu));
  json doc{{"n", args.n}, {"L", args.period}, {"mu", args.mu}, {"r_max", args.r_max}};
  doc["r"] = r ? json(*r) : json(nullptr);
  emit(args.out, doc);
  return r ? kOk : kCertificateFailed;
}

int run_pencil(const PencilArgs& args) {
  const Eigen::MatrixXd d = square_matrix(args.derivative, "--D");
  const FieldPencil pencil{{square_matrix(args.from, "--from")}, {square_matrix(args.to, "--to")}};
  if (pencil.from.matrix.rows() != d.rows() || pencil.to.matrix.rows() != d.rows())
    throw Error("--D, --from and --to must have the same size");
  const Eigen::MatrixXd base = d - Eigen::MatrixXd::Identity(d.rows(), d.cols()) - pencil.from.matrix;
  const Polynomial q = determinant_polynomial(base, pencil.from.matrix - pencil.to.matrix);
  const auto root = pencil_root(d, pencil);
  json doc{{"coefficients", q.coefficients()}, {"pass", !root.has_value()}};
  if (root) doc["t"] = *root;
  emit(args.out, doc);
  return root ? kCertificateFailed : kOk;
}

int run_collapse(const CollapseArgs& args) {
  const SimplicialComplex k = complex_arg(args);
  SimplicialComplex whole;
  SimplicialComplex target;
  if (args.target == "bottom") {
    PrismComplex prism = whitney_prism(k);
    whole = prism.complex;
    target = prism.bottom();
  } else if (args.target == "vertex") {
    whole = k;
    target = SimplicialComplex::from_cells({{k.simplices().begin()->front()}});
  } else {
    throw Error("--target must be 'bottom' or 'vertex'");
  }
  const CollapseResult result = collapse_to(whole, target);
  json doc{{"target", args.target},
           {"cells", whole.size()},
           {"success", result.success},
           {"steps", steps_json(result.filtration)},
           {"remaining", simplices_json(result.remaining)}};
  if (result.success) doc["replay_matches"] = replay(whole, result.filtration) == target;
  emit(args.out, doc);
  return result.success ? kOk : kCertificateFailed;
}

int run_prism(const CollapseArgs& args) {
  const PrismComplex prism = whitney_prism(complex_arg(args));
  json doc{{"top_cells", prism.top_cells}, {"bottom", simplices_json(prism.bottom())}, {"top", simplices_json(prism.top())}};
  emit(args.out, doc);
  return kOk;
}

int run_turning(const CurveArgs& args) {
  if (args.inputs.size() != 1) throw Error("turning takes one curve file");
  const ClosedCurve c = curve_from_json(read_file(args.inputs[0]));
  emit(args.out, json{{"points", c.size()}, {"length", c.length()}, {"turning_number", turning_number(c)}});
  return kOk;
}

int run_wg(const CurveArgs& args) {
  if (args.inputs.size() != 2) throw Error("wg takes two curve files");
  const ClosedCurve a = curve_from_json(read_file(args.inputs[0]));
  const ClosedCurve b = curve_from_json(read_file(args.inputs[1]));
  const HomotopyFrames h = whitney_graustein(a, b, args.steps);
  emit(args.out, frames_to_json(h.frames));
  return kOk;
}

int run_eversion_check(const EversionArgs& args) {
  EversionGrid grid;
  char x1 = 0, x2 = 0;
  std::istringstream in(args.grid);
  if (!(in >> grid.polar >> x1 >> grid.azimuthal >> x2 >> grid.times) || x1 != 'x' || x2 != 'x' || !in.eof() ||
      grid.polar < 1 || grid.azimuthal < 1 || grid.times < 2)
    throw Error("--grid must look like 32x32x16 (times >= 2)");
  const EversionCertificate c = verify_formal_immersion(grid);
  json doc{{"grid", {grid.polar, grid.azimuthal, grid.times}},
           {"samples", c.samples},
           {"min_area", c.min_area},
           {"max_norm_defect", c.max_norm_defect},
           {"max_start_error", c.max_start_error},
           {"max_end_error", c.max_end_error},
           {"pass", c.pass}};
  emit(args.out, doc);
  return c.pass ? kOk : kCertificateFailed;
}

int run_export_off(const ExportArgs& args) {
  const ComplexDocument doc = complex_from_json(read_file(args.in));
  if (!doc.realization) throw Error("export-off needs a complex with positions");
  std::ostringstream out;
  write_off(out, doc.complex, *doc.realization, args.colored);
  emit(args.out, out.str());
  return kOk;
}

int run_figures(const FiguresArgs& args) {
  std::filesystem::create_directories(args.dir);
  const std::filesystem::path dir(args.dir);
  const PlacementParameter mu(1.0);

  // Dimension-1 sawtooth: vertices in chart order with their fold labels.
  {
    const IteratedFolding f = iterate(1, 1, mu);
    const auto& k = f.finest();
    std::vector<std::pair<double, int>> verts;
    for (std::size_t v = 0; v < k.vertex_count(); ++v)
      verts.emplace_back(f.finest_realization().position(static_cast<VertexId>(v))[1],
                         f.composite_fold(static_cast<VertexId>(v)));
    std::sort(verts.begin(), verts.end());
    json vertices = json::array(), graph = json::array(), arrows = json::array();
    for (const auto& [x, label] : verts) {
      vertices.push_back({{"x", x}, {"fold", label}});
      graph.push_back({x, static_cast<double>(label)});
      arrows.push_back({{"from", x}, {"to", static_cast<double>(label)}});
    }
    write_file((dir / "fig4.json").string(),
               json{{"vertices", vertices}, {"fold_graph", graph}, {"arrows", arrows}}.dump(2) + "\n");
  }
  // Dimension-2 subdivision colored by fold image.
  {
    const IteratedFolding f = iterate(2, 1, mu);
    std::ostringstream out;
    write_off(out, f.finest(), f.finest_realization(), true);
    write_file((dir / "fig5.off").string(), out.str());
  }
  // Order-1 jiggling over the circle of length 2 with vertical fibers.
  {
    const TorusModel model(1, 2);
    const JiggledSection s = build_section(model, 1, mu);
    std::vector<std::pair<double, double>> graph;
    for (std::size_t c = 0; c < s.pieces().size(); ++c)
      for (Eigen::Index k = 0; k < 2; ++k) {
        const Eigen::VectorXd x = s.pieces()[c].points.row(k).transpose();
        graph.emplace_back(x[0], s.value(c, x)[0]);
      }
    std::sort(graph.begin(), graph.end());
    graph.erase(std::unique(graph.begin(), graph.end(),
                            [](const auto& a, const auto& b) { return std::abs(a.first - b.first) < 1e-12; }),
                graph.end());
    json points = json::array(), fibers = json::array();
    for (const auto& [x, u] : graph) {
      points.push_back({x, u});
      fibers.push_back(x);
    }
    write_file((dir / "fig6.json").string(),
               json{{"period", model.period()}, {"order", 1}, {"graph", points}, {"fibers", fibers}}.dump(2) + "\n");
  }
  emit(Output{}, json{{"written", {"fig4.json", "fig5.off", "fig6.json"}}, {"dir", args.dir}});
  return kOk;
}

}  // namespace chromfold::cli
