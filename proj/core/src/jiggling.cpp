#include "chromfold/jiggling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "chromfold/error.hpp"
#include "chromfold/root_isolation.hpp"

namespace chromfold {

namespace {

// Kuhn simplices of the cubes anchored at every point of [0, cubes)^n.
// `wrap` > 0 reduces vertices modulo wrap and records the shifts.
struct KuhnBuild {
  std::vector<ChromaticVertex> vertices;
  std::vector<Eigen::VectorXd> positions;
  std::vector<Cell> cells;
  std::vector<std::vector<LatticeShift>> shifts;
};

KuhnBuild kuhn(int n, int cubes, int wrap) {
  const int side = wrap > 0 ? wrap : cubes + 1;
  KuhnBuild out;
  std::size_t total = 1;
  for (int d = 0; d < n; ++d) total *= static_cast<std::size_t>(side);
  auto coords_of = [&](std::size_t id) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int d = 0; d < n; ++d) {
      p[static_cast<std::size_t>(d)] = static_cast<int>(id % static_cast<std::size_t>(side));
      id /= static_cast<std::size_t>(side);
    }
    return p;
  };
  auto id_of = [&](const std::vector<int>& p) {
    std::size_t id = 0;
    for (int d = n - 1; d >= 0; --d) id = id * static_cast<std::size_t>(side) + static_cast<std::size_t>(p[static_cast<std::size_t>(d)]);
    return static_cast<VertexId>(id);
  };
  for (std::size_t id = 0; id < total; ++id) {
    const auto p = coords_of(id);
    const int color = std::accumulate(p.begin(), p.end(), 0) % (n + 1);
    out.vertices.push_back({color, ColorSet::singleton(color)});
    Eigen::VectorXd x(n);
    for (int d = 0; d < n; ++d) x(d) = p[static_cast<std::size_t>(d)];
    out.positions.push_back(std::move(x));
  }

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::size_t anchors = 1;
  for (int d = 0; d < n; ++d) anchors *= static_cast<std::size_t>(cubes);
  for (std::size_t a = 0; a < anchors; ++a) {
    std::vector<int> g(static_cast<std::size_t>(n));
    std::size_t rest = a;
    for (int d = 0; d < n; ++d) {
      g[static_cast<std::size_t>(d)] = static_cast<int>(rest % static_cast<std::size_t>(cubes));
      rest /= static_cast<std::size_t>(cubes);
    }
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Cell cell;
      std::vector<LatticeShift> shift;
      std::vector<int> p = g;
      for (int k = 0; k <= n; ++k) {
        if (k > 0) ++p[static_cast<std::size_t>(perm[static_cast<std::size_t>(k - 1)])];
        if (wrap > 0) {
          std::vector<int> reduced(p.size());
          LatticeShift s(p.size());
          for (std::size_t d = 0; d < p.size(); ++d) {
            s[d] = p[d] >= wrap ? 1 : 0;
            reduced[d] = p[d] - wrap * s[d];
          }
          cell.push_back(id_of(reduced));
          shift.push_back(std::move(s));
        } else {
          cell.push_back(id_of(p));
        }
      }
      out.cells.push_back(std::move(cell));
      if (wrap > 0) out.shifts.push_back(std::move(shift));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

std::vector<std::vector<int>> faces_of(int slots, int min_size, int max_size) {
  std::vector<std::vector<int>> faces;
  for (unsigned mask = 1; mask < (1u << slots); ++mask) {
    const int size = std::popcount(mask);
    if (size < min_size || size > max_size) continue;
    std::vector<int> face;
    for (int s = 0; s < slots; ++s)
      if (mask & (1u << s)) face.push_back(s);
    faces.push_back(std::move(face));
  }
  return faces;
}

Eigen::MatrixXd face_basis(const Eigen::MatrixXd& points, const std::vector<int>& face) {
  Eigen::MatrixXd dirs(points.cols(), static_cast<Eigen::Index>(face.size()) - 1);
  for (std::size_t k = 1; k < face.size(); ++k)
    dirs.col(static_cast<Eigen::Index>(k) - 1) = (points.row(face[k]) - points.row(face[0])).transpose();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(dirs);
  return qr.householderQ() * Eigen::MatrixXd::Identity(dirs.rows(), dirs.cols());
}

// Smallest singular value of M restricted to span(Q) and a unit vector realizing it.
std::pair<double, Eigen::VectorXd> restricted_min_singular(const Eigen::MatrixXd& m, const Eigen::MatrixXd& q) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m * q, Eigen::ComputeFullV);
  const Eigen::Index last = q.cols() - 1;
  const double sigma = svd.singularValues().size() > last ? svd.singularValues()(last) : 0.0;
  Eigen::VectorXd v = q * svd.matrixV().col(last);
  return {sigma, v.normalized()};
}

}  // namespace

TorusModel::TorusModel(int n, int period)
    : n_(n), period_(period), realization_(Realization::ambient({}, 0.0)) {
  if (n < 1 || n + 1 >= ColorSet::kMaxColors) throw Error("torus dimension must be at least 1");
  if (period < n + 1 || period % (n + 1) != 0)
    throw Error("period must be a positive multiple of n + 1 = " + std::to_string(n + 1));
  KuhnBuild b = kuhn(n, period, period);
  complex_ = std::make_shared<const ChromaticComplex>(n, std::move(b.vertices), std::move(b.cells), std::move(b.shifts));
  realization_ = Realization::ambient(std::move(b.positions), period);
}

Eigen::VectorXd TorusModel::reduce(const Eigen::VectorXd& x) const {
  Eigen::VectorXd out(x.size());
  for (Eigen::Index d = 0; d < x.size(); ++d) out(d) = x(d) - period_ * std::floor(x(d) / period_);
  return out;
}

Eigen::VectorXd TorusModel::exp(const Eigen::VectorXd& x, const Eigen::VectorXd& u) const { return reduce(x + u); }

std::pair<ComplexPtr, Realization> kuhn_grid_patch(int n, int size) {
  if (n < 1 || size < 1) throw Error("grid patch needs n >= 1 and size >= 1");
  KuhnBuild b = kuhn(n, size, 0);
  auto complex = std::make_shared<const ChromaticComplex>(n, std::move(b.vertices), std::move(b.cells));
  return {complex, Realization::ambient(std::move(b.positions))};
}

JiggledSection::JiggledSection(const TorusModel& model, IteratedFolding folding)
    : model_(&model), folding_(std::move(folding)) {
  const auto& finest = folding_.finest();
  const auto& real = folding_.finest_realization();
  const auto& base_real = folding_.realizations.front();
  const int n = model.dim();
  pieces_.reserve(finest.cell_count());
  std::vector<Eigen::VectorXd> vertex_value(finest.vertex_count());
  for (std::size_t c = 0; c < finest.cell_count(); ++c) {
    SectionPiece piece;
    piece.root_cell = folding_.root_cell[c];
    piece.points = real.cell_points(finest, c);
    const Eigen::MatrixXd image = base_real.cell_points(folding_.base(), piece.root_cell);
    piece.derivative = edge_matrix(image) * edge_matrix(piece.points).inverse();
    piece.offset = image.row(0).transpose() - piece.derivative * piece.points.row(0).transpose();
    for (int k = 0; k <= n; ++k) {
      const Eigen::VectorXd value = (image.row(k) - piece.points.row(k)).transpose();
      auto& slot = vertex_value[static_cast<std::size_t>(finest.top_cell(c)[static_cast<std::size_t>(k)])];
      if (slot.size() == 0) {
        slot = value;
      } else {
        mismatch_ = std::max(mismatch_, (slot - value).norm());
      }
    }
    pieces_.push_back(std::move(piece));
  }
}

Eigen::VectorXd JiggledSection::value(std::size_t piece, const Eigen::VectorXd& x) const {
  const auto& p = pieces_.at(piece);
  return p.derivative * x + p.offset - x;
}

JiggledSection build_section(const TorusModel& model, int r, PlacementParameter mu, std::size_t limit) {
  JiggledSection section(model, iterate(model.complex(), model.realization(), r, mu, limit));
  if (section.max_face_mismatch() > kTestTolerance)
    throw Error("jiggled section is discontinuous (mismatch " + std::to_string(section.max_face_mismatch()) + ")");
  return section;
}

Certificate check_quasi_transverse(const JiggledSection& section, const PlaneField& field, std::size_t max_witnesses) {
  const int n = section.model().dim();
  if (field.matrix.rows() != n || field.matrix.cols() != n) throw Error("plane field has the wrong size");
  const auto faces = faces_of(n + 1, 2, n + 1);
  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(n, n);
  Certificate cert;
  for (std::size_t c = 0; c < section.pieces().size(); ++c) {
    const auto& piece = section.pieces()[c];
    const Eigen::MatrixXd m = piece.derivative - identity - field.matrix;
    for (const auto& face : faces) {
      const auto [sigma, kernel] = restricted_min_singular(m, face_basis(piece.points, face));
      if (sigma > kRankTolerance) continue;
      cert.pass = false;
      if (cert.witnesses.size() < max_witnesses)
        cert.witnesses.push_back({c, face, std::nullopt, kernel, piece.derivative, sigma});
      if (cert.witnesses.size() >= max_witnesses) return cert;
    }
  }
  return cert;
}

std::optional<double> pencil_root(const Eigen::MatrixXd& derivative, const FieldPencil& pencil) {
  const Eigen::Index n = derivative.rows();
  const Eigen::MatrixXd base = derivative - Eigen::MatrixXd::Identity(n, n) - pencil.from.matrix;
  const Eigen::MatrixXd direction = pencil.from.matrix - pencil.to.matrix;
  return find_root(determinant_polynomial(base, direction), 0.0, 1.0);
}

Certificate check_pencil(const JiggledSection& section, const FieldPencil& pencil, std::size_t max_witnesses) {
  const int n = section.model().dim();
  if (pencil.from.matrix.rows() != n || pencil.to.matrix.rows() != n) throw Error("pencil has the wrong size");
  constexpr int kSamples = 65;
  const auto lower_faces = faces_of(n + 1, 2, n);
  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(n, n);
  Certificate cert;
  auto record = [&](Witness w) {
    cert.pass = false;
    if (cert.witnesses.size() < max_witnesses) cert.witnesses.push_back(std::move(w));
    return cert.witnesses.size() >= max_witnesses;
  };
  for (std::size_t c = 0; c < section.pieces().size(); ++c) {
    const auto& piece = section.pieces()[c];
    if (auto t = pencil_root(piece.derivative, pencil)) {
      const Eigen::MatrixXd m = piece.derivative - identity - pencil.at(*t).matrix;
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
      std::vector<int> all(static_cast<std::size_t>(n) + 1);
      std::iota(all.begin(), all.end(), 0);
      if (record({c, all, *t, svd.matrixV().col(n - 1), piece.derivative, svd.singularValues()(n - 1)})) return cert;
    }
    for (const auto& face : lower_faces) {
      const Eigen::MatrixXd q = face_basis(piece.points, face);
      for (int k = 0; k < kSamples; ++k) {
        const double t = static_cast<double>(k) / (kSamples - 1);
        const Eigen::MatrixXd m = piece.derivative - identity - pencil.at(t).matrix;
        const auto [sigma, kernel] = restricted_min_singular(m, q);
        if (sigma > kRankTolerance) continue;
        if (record({c, face, t, kernel, piece.derivative, sigma})) return cert;
        break;
      }
    }
  }
  return cert;
}

std::optional<int> minimal_order(const TorusModel& model, const std::vector<PlaneField>& fields,
                                 bool include_pencils_to_exp, int r_max, PlacementParameter mu, std::size_t limit) {
  const PlaneField exp_field = PlaneField::exponential(model.dim());
  for (int r = 0; r <= r_max; ++r) {
    const JiggledSection section = build_section(model, r, mu, limit);
    bool ok = true;
    for (const auto& field : fields) {
      if (!check_quasi_transverse(section, field).pass ||
          (include_pencils_to_exp && !check_pencil(section, {exp_field, field}).pass)) {
        ok = false;
        break;
      }
    }
    if (ok) return r;
  }
  return std::nullopt;
}

double verticality(const JiggledSection& section) {
  const int n = section.model().dim();
  const auto faces = faces_of(n + 1, 2, n + 1);
  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(n, n);
  double worst = 0.0;
  for (const auto& piece : section.pieces()) {
    const Eigen::MatrixXd slope = piece.derivative - identity;
    for (const auto& face : faces) {
      // A unit horizontal direction v lifts to (v, slope v); its angle to the
      // fiber is atan(1 / |slope v|), largest where |slope v| is smallest.
      const double sigma = restricted_min_singular(slope, face_basis(piece.points, face)).first;
      worst = std::max(worst, std::atan2(1.0, sigma));
    }
  }
  return worst;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> exp_slide(const TorusModel& model, double t, const Eigen::VectorXd& x,
                                                      const Eigen::VectorXd& u) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error("slide time must lie in [0, 1]");
  return {model.reduce(x + t * u), (1.0 - t) * u};
}

}  // namespace chromfold
