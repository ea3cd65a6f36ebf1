#pragma once

#include "hfl/germ.hpp"

#include <cstdint>
#include <random>

namespace hfl {

// Seeded deterministic source for the randomized oracle suites. mt19937_64
// output is pinned by the standard, and we avoid std distributions (whose
// algorithms are not), so runs are byte-reproducible across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    long uniform(long lo, long hi) { // inclusive bounds
        return lo + static_cast<long>(raw() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rat rational() { // small exact rationals
        long num = uniform(-9, 9);
        long den = uniform(1, 4);
        return rat_of(num, den);
    }

    Rat nonzero_rational() {
        Rat r = rational();
        while (sgn(r) == 0) r = rational();
        return r;
    }

    // Random germ with the given exact order, window, and parity stride.
    // step = 1 gives a generic germ, step = 2 keeps one parity class.
    Germ germ_with_order(long ord, long trunc, long step = 1) {
        std::vector<Rat> c;
        for (long e = ord; e < trunc; ++e) {
            if ((e - ord) % step == 0)
                c.push_back(e == ord ? nonzero_rational() : rational());
            else
                c.push_back(Rat(0));
        }
        return Germ(ord, std::move(c), trunc);
    }

    // sigma-odd germ (odd exponents only) with given odd order.
    Germ odd_germ(long ord, long trunc) { return germ_with_order(ord, trunc, 2); }
    // sigma-even germ (even exponents only) with given even order.
    Germ even_germ(long ord, long trunc) { return germ_with_order(ord, trunc, 2); }

  private:
    std::mt19937_64 eng_;
};

} // namespace hfl
