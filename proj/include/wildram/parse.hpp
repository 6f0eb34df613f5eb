#pragma once

#include <string>

#include "wildram/fpseries.hpp"

namespace wildram {

/// Parse a series expression such as "z - 2*z^3 + z^4" over F_p into an
/// exact polynomial. Grammar: signed terms joined by + or -, each an
/// integer, a power of z, or integer '*' power of z; '*' is optional;
/// whitespace-insensitive. Coefficients are reduced mod p at parse time.
FpSeries parse_series(const std::string& text, const Prime& p);

struct SeriesLiteral {
    Prime p;
    FpSeries g;
    std::string name; // the left-hand identifier
};

/// Full literal form "p=5; g = z + z^3 + 2*z^4".
SeriesLiteral parse_series_literal(const std::string& text);

/// Canonical text: ascending degrees, coefficients as residues in [0, p),
/// unit coefficients elided; "0" for the zero series.
std::string render_series(const FpSeries& g);

} // namespace wildram
