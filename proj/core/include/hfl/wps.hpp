#pragma once

#include "hfl/errors.hpp"
#include "hfl/rational.hpp"

#include <string>
#include <vector>

namespace hfl {

// Point of a weighted projective space P(w0,...,wn) with exact rational
// coordinates. Equality is geometric (over the algebraic closure): two
// rational representatives of one complex point compare equal even when the
// weighted rescaling would need irrational roots.
struct WPSPoint {
    std::vector<long> weights;
    std::vector<Rat> coords;

    WPSPoint() = default;
    WPSPoint(std::vector<long> w, std::vector<Rat> x);

    size_t dim() const { return weights.size(); }
    std::vector<bool> support() const;

    // Rescale so the first nonzero weight-1 coordinate becomes 1 (always a
    // rational operation). Used for reports; equality never relies on it.
    WPSPoint normalized() const;

    std::string to_string() const; // "w=1,1,2;x=1,2,3"
};

// Same support and x_i^{w_j} y_j^{w_i} == y_i^{w_j} x_j^{w_i} for all pairs
// of supported indices. Throws on weight mismatch.
bool wps_equal(const WPSPoint& x, const WPSPoint& y);

// Torus action in the distinguished chart: coordinate 0 fixed, coordinate
// i >= 1 scaled by t[i-1]^{w_i}. Scalars must be nonzero.
WPSPoint torus_act(const std::vector<Rat>& t, const WPSPoint& x);

// True iff the gcd of the weights of the nonzero coordinates exceeds 1
// (the point sits in the orbifold singular locus).
bool is_orbifold_singular(const WPSPoint& x);

} // namespace hfl
