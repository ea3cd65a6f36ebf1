#pragma once

#include "hfl/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hfl {

// Sparse multivariate polynomial with integer coefficients, just enough to
// generate and dump the chart invariant polynomials. Variables are indexed
// x0, x1, ... (coefficient slots of the direction germs).
class Poly {
  public:
    using Monomial = std::vector<std::pair<int, int>>; // (variable, power), sorted by variable

    Poly() = default;
    static Poly constant(Int c);
    static Poly variable(int v, int power = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Int& c) const;

    Rat eval(const std::vector<Rat>& values) const;

    // Weighted degree check helper: every monomial's total degree under the
    // weight "1 per variable occurrence".
    bool is_homogeneous(int degree) const;

    std::string to_string() const; // e.g. "x1*x2 - x0*x3"

  private:
    std::map<Monomial, Int> terms_;
    void prune();
};

} // namespace hfl
