#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chromfold/complex.hpp"
#include "chromfold/curves.hpp"
#include "chromfold/realization.hpp"

namespace chromfold {

struct ComplexDocument {
  ChromaticComplex complex;
  std::optional<Realization> realization;
};

/// {"dim", "vertices": [{"color", "view"}], "top_cells", "positions"?}.
/// Periodic complexes add "period" and "shifts".
std::string complex_to_json(const ChromaticComplex& complex, const Realization* realization = nullptr);
ComplexDocument complex_from_json(const std::string& text);

/// {"points": [[x, y], ...]}
std::string curve_to_json(const ClosedCurve& curve);
ClosedCurve curve_from_json(const std::string& text);
/// Array of curve objects.
std::string frames_to_json(const std::vector<ClosedCurve>& frames);

/// Writes an OFF file for a barycentric realization with dim <= 3. Vertices are
/// placed on a regular simplex in R^3; edges of a 1-complex become 2-gons and
/// tetrahedra contribute their boundary triangles. With `colored`, emits COFF
/// with one RGBA color per vertex color.
void write_off(std::ostream& out, const ChromaticComplex& complex, const Realization& realization,
               bool colored = false);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace chromfold
