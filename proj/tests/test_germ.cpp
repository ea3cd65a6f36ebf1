#include "hfl/germ.hpp"
#include "hfl/rng.hpp"

#include <doctest.h>

using namespace hfl;

namespace {
Germ g(long val, std::vector<Rat> c, long t) { return Germ(val, std::move(c), t); }
} // namespace

TEST_CASE("addition") {
    Germ z = Germ::monomial(Rat(1), 1, 8);
    CHECK((z + (-z)).is_zero());

    Germ x = g(0, {Rat(1), Rat(0), Rat(1)}, 8); // 1 + z^2
    Germ y = Germ::monomial(Rat(1), 1, 6);
    Germ s = x + y;
    CHECK(s.trunc() == 6);
    CHECK(s == g(0, {Rat(1), Rat(1), Rat(1)}, 6));

    Germ laurent = Germ::monomial(Rat(1), -1, 8);
    Germ sum = laurent + z;
    CHECK(sum.coeff(-1) == 1);
    CHECK(sum.coeff(1) == 1);
    CHECK(sum.coeff(0) == 0);
}

TEST_CASE("multiplication") {
    Germ one_plus = g(0, {Rat(1), Rat(1)}, 4);
    Germ one_minus = g(0, {Rat(1), Rat(-1)}, 4);
    CHECK(one_plus * one_minus == g(0, {Rat(1), Rat(0), Rat(-1)}, 4)); // 1 - z^2

    CHECK(Germ::monomial(Rat(1), -2, 6) * Germ::monomial(Rat(1), 3, 6) ==
          Germ::monomial(Rat(1), 1, 4)); // window: min(6+3, 6-2) = 4

    Germ two = g(0, {Rat(2), Rat(0), Rat(3)}, 6); // 2 + 3z^2
    CHECK(two.scaled(rat_of(1, 2)) == g(0, {Rat(1), Rat(0), rat_of(3, 2)}, 6));

    // valuations add exactly
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        Germ a = rng.germ_with_order(rng.uniform(-2, 3), 9);
        Germ b = rng.germ_with_order(rng.uniform(-2, 3), 9);
        CHECK(*(a * b).order() == *a.order() + *b.order());
    }
}

TEST_CASE("inversion") {
    Germ x = g(0, {Rat(1), Rat(0), Rat(1)}, 5); // 1 + z^2
    Germ inv = x.inverse();
    CHECK(inv == g(0, {Rat(1), Rat(0), Rat(-1), Rat(0), Rat(1)}, 5)); // 1 - z^2 + z^4
    CHECK((x * inv).agrees_with(Germ::one(5)));

    CHECK(Germ::constant(Rat(2), 6).inverse() == Germ::constant(rat_of(1, 2), 6));
    CHECK(Germ::monomial(Rat(1), 1, 6).inverse() == Germ::monomial(Rat(1), -1, 4));

    CHECK_THROWS_AS(Germ::zero(5).inverse(), domain_error);

    // two-sided inverse on random units within the window
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        Germ u = rng.germ_with_order(rng.uniform(-3, 3), rng.uniform(5, 12));
        Germ ui = u.inverse();
        CHECK((u * ui).agrees_with(Germ::one((u * ui).trunc())));
        CHECK((ui * u).agrees_with(Germ::one((ui * u).trunc())));
    }
}

TEST_CASE("sheet involution") {
    Germ x = g(1, {Rat(1), Rat(1)}, 6); // z + z^2
    CHECK(x.sigma() == g(1, {Rat(-1), Rat(1)}, 6));
    CHECK(g(0, {Rat(1), Rat(0), Rat(0), Rat(1)}, 6).sigma() ==
          g(0, {Rat(1), Rat(0), Rat(0), Rat(-1)}, 6));

    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        Germ r = rng.germ_with_order(rng.uniform(-3, 3), 9);
        CHECK(r.sigma().sigma() == r);
    }
}

TEST_CASE("parity split") {
    auto [even, odd] = g(0, {Rat(1), Rat(1), Rat(1)}, 7).parity_split();
    CHECK(even == g(0, {Rat(1), Rat(0), Rat(1)}, 7));
    CHECK(odd == Germ::monomial(Rat(1), 1, 7));

    auto [e2, o2] = Germ::monomial(Rat(1), 3, 7).parity_split();
    CHECK(e2.is_zero());
    CHECK(o2 == Germ::monomial(Rat(1), 3, 7));

    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        Germ r = rng.germ_with_order(rng.uniform(-4, 2), 10);
        auto [ev, od] = r.parity_split();
        CHECK(ev + od == r);
        CHECK(ev.sigma() == ev);
        CHECK(od.sigma() == -od);
        auto [se, so] = r.sigma().parity_split();
        CHECK(se == ev);
        CHECK(so == -od);
    }
}

TEST_CASE("order") {
    CHECK(*g(2, {Rat(1), Rat(1)}, 6).order() == 2);
    CHECK(!Germ::zero(6).order().has_value());
    CHECK(*Germ::monomial(rat_of(3, 2), -1, 6).order() == -1);
    CHECK_THROWS_AS(Germ::zero(6).order_certified(), precision_error);
}

TEST_CASE("window bookkeeping") {
    // coefficient queries outside the window are refused
    Germ x = g(0, {Rat(1)}, 3);
    CHECK_THROWS_AS(x.coeff(3), precision_error);
    CHECK(x.coeff(2) == 0);

    // product window: min(Tx + vy, Ty + vx)
    Germ a = g(1, {Rat(1)}, 4);  // z mod z^4
    Germ b = g(2, {Rat(1)}, 10); // z^2 mod z^10
    CHECK((a * b).trunc() == 6);

    // inversion keeps relative precision
    Germ u = g(2, {Rat(1), Rat(1)}, 7);
    CHECK(u.inverse().trunc() == 7 - 2 * 2);

    CHECK_THROWS_AS(x.truncated(5), precision_error);
}

TEST_CASE("square root") {
    Germ u = g(0, {Rat(4), Rat(0), Rat(1)}, 6);
    auto s = u.sqrt();
    REQUIRE(s.has_value());
    CHECK((*s * *s).agrees_with(u));
    CHECK(s->leading() == 2);

    CHECK(!g(0, {Rat(2)}, 4).sqrt().has_value());  // 2 is not a rational square
    CHECK(!g(1, {Rat(1)}, 4).sqrt().has_value());  // odd valuation
    auto se = g(2, {Rat(9), Rat(1)}, 8).sqrt();
    REQUIRE(se.has_value());
    CHECK((*se * *se).agrees_with(g(2, {Rat(9), Rat(1)}, 8)));
}

TEST_CASE("text format") {
    Germ x = g(0, {Rat(1), Rat(0), Rat(3)}, 5);
    CHECK(x.to_string() == "v=0;t=5;1,0,3");
    CHECK(Germ::monomial(rat_of(-3, 2), -1, 4).to_string() == "v=-1;t=4;-3/2");
    CHECK(Germ::zero(5).to_string() == "v=0;t=5;");
}
