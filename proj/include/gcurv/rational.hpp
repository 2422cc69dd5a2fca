#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace gcurv {

// Exact rational scalar used throughout the library wherever a value is a
// rational by construction (curvatures, measures, transport plans, Gamma
// forms). Floats appear only downstream of eigensolvers.
using Rat = boost::multiprecision::mpq_rational;

// Canonical "num/den" rendering (always includes the denominator, so report
// files are uniform and byte-stable).
inline std::string rat_string(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

// Parses "n", "n/d" or a plain decimal such as "0.25" into an exact rational.
Rat parse_rational(const std::string& text);

// A small dense symmetric matrix of exact rationals, used for assembling
// quadratic forms before any float conversion.
using RatMatrix = std::vector<std::vector<Rat>>;

inline RatMatrix rat_matrix(int rows, int cols) {
    return RatMatrix(rows, std::vector<Rat>(cols, Rat(0)));
}

}  // namespace gcurv
