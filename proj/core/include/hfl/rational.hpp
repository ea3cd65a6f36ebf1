#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace hfl {

// Exact rational coefficient field. Everything downstream is polynomial
// identities over Q, so no floating point appears anywhere in the library.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat_of(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q".
inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("cannot parse rational: '" + s + "'");
    if (sgn(r.get_den()) == 0)
        throw std::invalid_argument("zero denominator in rational: '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// Exact square root in Q, if one exists.
inline std::optional<Rat> rat_sqrt(const Rat& r) {
    if (sgn(r) < 0) return std::nullopt;
    if (sgn(r) == 0) return Rat(0);
    const Int& num = r.get_num();
    const Int& den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    Rat s(sn, sd);
    s.canonicalize();
    return s;
}

inline Rat rat_pow(const Rat& r, unsigned long e) {
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), r.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), r.get_den().get_mpz_t(), e);
    Rat out(num, den);
    out.canonicalize();
    return out;
}

} // namespace hfl
