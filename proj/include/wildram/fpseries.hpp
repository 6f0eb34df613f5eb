#pragma once

#include "wildram/prime.hpp"
#include "wildram/series.hpp"

namespace wildram {

using FpSeries = TruncatedSeries<FieldElement>;

/// The modulus carried by the series' coefficients.
inline Prime series_modulus(const FpSeries& g) { return Prime(g.coeff(0).modulus()); }

} // namespace wildram
