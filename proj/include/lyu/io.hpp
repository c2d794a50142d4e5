#ifndef LYU_IO_HPP
#define LYU_IO_HPP

#include <string>

#include <json.hpp>

#include "lyu/compose.hpp"

namespace lyu::io {

using nlohmann::json;

// ---------------------------------------------------------------------------
// JSON object forms.  Complexes: {"n", "facets": [[1-based vertices]]} with
// "void": true for the void complex.  Ideals: {"n", "gens": [[exponents]]}.

json complex_to_json(const SimplicialComplex& delta);
// non-maximal input faces are dropped; *normalized_warning reports it
SimplicialComplex complex_from_json(const json& j, bool* normalized_warning = nullptr);

json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const json& j);

json betti_to_json(const BettiTable& t);
BettiTable betti_from_json(const json& j);

json nu_to_json(const NuTable& t);
NuTable nu_from_json(const json& j);

json lyubeznik_to_json(const LyubeznikTable& t);
LyubeznikTable lyubeznik_from_json(const json& j);

json composition_report_to_json(const CompositionReport& r);

// ---------------------------------------------------------------------------
// Terse text input: one facet per line ("1 2 3") or one monomial per line
// ("x1*x2^2"); variable count inferred from the largest index.

enum class TextKind { facets, monomials };
TextKind sniff_text(const std::string& text);

SimplicialComplex complex_from_text(const std::string& text, bool* normalized_warning = nullptr);
MonomialIdeal ideal_from_text(const std::string& text);
Monomial parse_monomial(const std::string& token, int nvars);

// ---------------------------------------------------------------------------
// Rendering.

// grid with rows j - i, columns i (Macaulay2 layout)
std::string betti_text(const BettiTable& t);
// same grid shape for nu-tables
std::string nu_text(const NuTable& t);
// upper-triangular matrix with a blank lower triangle
std::string lyubeznik_text(const LyubeznikTable& t);

std::string betti_csv(const BettiTable& t);
std::string nu_csv(const NuTable& t);
std::string lyubeznik_csv(const LyubeznikTable& t);

}  // namespace lyu::io

#endif
