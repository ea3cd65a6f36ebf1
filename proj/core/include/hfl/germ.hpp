#pragma once

#include "hfl/errors.hpp"
#include "hfl/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hfl {

// Default truncation window for germs created without an explicit one.
// Overridable through the HFL_TRUNC environment variable (read once).
long default_trunc();

// Truncated Laurent germ over Q in a local coordinate z, tracked modulo
// z^trunc. Negative valuations are allowed (Hecke transition matrices
// contain z^{-d} entries). Canonical form: no stored coefficient at an
// exponent >= trunc, no leading or trailing zero coefficients; the zero
// germ stores no coefficients at all and only remembers its window.
//
// Window propagation is pessimistic: an operation's result window is the
// largest one on which the result is fully determined by the operands'
// stored data, so recomputing at higher precision and truncating always
// reproduces the low-precision result.
class Germ {
  public:
    Germ() : Germ(zero(default_trunc())) {}
    Germ(long val, std::vector<Rat> coeffs, long trunc);

    static Germ zero(long trunc);
    static Germ monomial(Rat c, long exp, long trunc);
    static Germ one(long trunc) { return monomial(Rat(1), 0, trunc); }
    static Germ constant(Rat c, long trunc) { return monomial(std::move(c), 0, trunc); }

    long trunc() const { return trunc_; }
    bool is_zero() const { return coeffs_.empty(); }

    // Exponent of the lowest nonzero coefficient; nullopt for a germ that
    // vanishes on its whole window (the "infinity" sentinel).
    std::optional<long> order() const;
    // Certified order; throws precision_error when the germ is zero on its
    // window (the order could be anything >= trunc).
    long order_certified(const char* what = "order") const;

    const Rat& leading() const;
    // Coefficient at exponent k; exact. Throws precision_error for
    // k >= trunc (outside the window nothing is known).
    Rat coeff(long k) const;

    Germ operator-() const;
    friend Germ operator+(const Germ& x, const Germ& y);
    friend Germ operator-(const Germ& x, const Germ& y);
    friend Germ operator*(const Germ& x, const Germ& y);

    Germ scaled(const Rat& c) const;
    Germ shifted(long k) const; // multiply by z^k
    // Restrict to a smaller window t <= trunc.
    Germ truncated(long t) const;

    // Meromorphic inversion: valuation v maps to -v, relative precision is
    // preserved (result window = trunc - 2v). Zero germ -> "non-invertible".
    Germ inverse() const;

    // Pullback along the sheet involution z -> -z.
    Germ sigma() const;
    // (even, odd) with x = even + odd, sigma(even) = even, sigma(odd) = -odd.
    std::pair<Germ, Germ> parity_split() const;
    bool sigma_even() const;
    bool sigma_odd() const;

    Germ pow(unsigned long e) const;
    // Square root; defined for even valuation and a leading coefficient
    // that is a square in Q. nullopt otherwise.
    std::optional<Germ> sqrt() const;

    // Strict structural equality (same window, same coefficients).
    bool operator==(const Germ& o) const;
    bool operator!=(const Germ& o) const { return !(*this == o); }
    // Equality on the common window min(trunc, o.trunc).
    bool agrees_with(const Germ& o) const;

    // "v=<val>;t=<trunc>;c0,c1,..." with rationals as "p/q" or "p".
    std::string to_string() const;

  private:
    long val_ = 0;
    long trunc_;
    std::vector<Rat> coeffs_; // coeffs_[i] is the coefficient of z^(val_+i)

    void normalize();
};

// min(trunc) comparison helper used all over the test oracles.
inline long common_window(const Germ& x, const Germ& y) {
    return std::min(x.trunc(), y.trunc());
}

} // namespace hfl
