#include "hfl/local_higgs.hpp"
#include "hfl/oracle.hpp"
#include "hfl/rng.hpp"

#include <doctest.h>

using namespace hfl;

namespace {

GermMatrix2 companion(long div, long lambda, long t) {
    return GermMatrix2(Germ::zero(t), Germ::monomial(Rat(1), div, t),
                       Germ::monomial(Rat(1), 2 * lambda - div, t), Germ::zero(t));
}

} // namespace

TEST_CASE("conjugation") {
    long t = 8;
    GermMatrix2 phi = companion(0, 1, t);
    CHECK(conjugate(phi, GermMatrix2::identity(t)).agrees_with(phi));

    GermMatrix2 g(Germ::one(t), Germ::one(t), Germ::zero(t), Germ::one(t));
    GermMatrix2 expect(Germ::monomial(Rat(-1), 2, t), Germ(0, {Rat(1), Rat(0), Rat(-1)}, t),
                       Germ::monomial(Rat(1), 2, t), Germ::monomial(Rat(1), 2, t));
    CHECK(conjugate(phi, g).agrees_with(expect));

    Rng rng(17);
    for (int i = 0; i < 100; ++i) {
        GermMatrix2 m(Germ::zero(t), Germ::zero(t), Germ::zero(t), Germ::zero(t));
        Germ a = rng.germ_with_order(rng.uniform(0, 2), t);
        m = GermMatrix2(a, rng.germ_with_order(rng.uniform(0, 2), t),
                        rng.germ_with_order(rng.uniform(0, 2), t), -a);
        GermMatrix2 s = random_sl2(rng, t);
        GermMatrix2 c = conjugate(m, s);
        CHECK(c.det().agrees_with(m.det()));
        CHECK(c.trace().agrees_with(m.trace()));
    }

    GermMatrix2 singular(Germ::one(t), Germ::one(t), Germ::one(t), Germ::one(t));
    CHECK_THROWS_AS(conjugate(phi, singular), domain_error);
}

TEST_CASE("normal form") {
    long t = 8;
    SUBCASE("already in companion shape") {
        NormalFormResult r = normal_form({companion(0, 1, t), 1});
        CHECK(r.div_order == 0);
        CHECK(r.lambda_order == 1);
        CHECK(r.reduced.agrees_with(companion(0, 1, t)));
    }
    SUBCASE("unipotent scramble is undone") {
        GermMatrix2 m(Germ::monomial(Rat(-1), 2, t), Germ(0, {Rat(1), Rat(0), Rat(-1)}, t),
                      Germ::monomial(Rat(1), 2, t), Germ::monomial(Rat(1), 2, t));
        NormalFormResult r = normal_form({m, 1});
        CHECK(r.div_order == 0);
        CHECK(r.lambda_order == 1);
        CHECK(r.reduced.agrees_with(companion(0, 1, t)));
        CHECK(conjugate(m, r.gauge).agrees_with(r.reduced));
    }
    SUBCASE("factored power and higher order") {
        NormalFormResult r = normal_form({companion(2, 3, 12), 3});
        CHECK(r.div_order == 2);
        CHECK(r.lambda_order == 3);
    }
    SUBCASE("odd determinant order is rejected") {
        // z^2 [[0,1],[z,0]] has det of order 5
        GermMatrix2 m(Germ::zero(10), Germ::monomial(Rat(1), 2, 10),
                      Germ::monomial(Rat(1), 3, 10), Germ::zero(10));
        LocalHiggsData h{m, 2};
        CHECK_THROWS_AS(normal_form(h), domain_error);
    }
    SUBCASE("nonzero trace is rejected") {
        GermMatrix2 m(Germ::one(8), Germ::one(8), Germ::monomial(Rat(1), 2, 8), Germ::zero(8));
        CHECK_THROWS_AS(normal_form({m, 1}), domain_error);
    }
    SUBCASE("diagonalizable boundary case D = Lambda") {
        Rng rng(23);
        GermMatrix2 m = conjugate(companion(2, 2, 10), random_sl2(rng, 10));
        NormalFormResult r = normal_form({m, 2});
        CHECK(r.div_order == 2);
        CHECK(r.reduced.agrees_with(companion(2, 2, 10)));
    }
}

TEST_CASE("hecke field") {
    SUBCASE("direct substitutions") {
        long t = 24;
        GermMatrix2 m = hecke_higgs(5, Germ::zero(t), Germ::monomial(Rat(1), 2, t));
        CHECK(m.at(0, 0).is_zero());
        CHECK(m.at(0, 1).agrees_with(Germ::monomial(Rat(1), 4, m.at(0, 1).trunc())));
        CHECK(m.at(1, 0).agrees_with(Germ::monomial(Rat(1), 6, m.at(1, 0).trunc())));

        GermMatrix2 m2 = hecke_higgs(5, Germ::monomial(Rat(1), 3, t), Germ::one(t));
        CHECK(m2.at(0, 0).agrees_with(Germ::monomial(Rat(1), 8, m2.at(0, 0).trunc())));
        CHECK(m2.at(0, 1).agrees_with(Germ(0, {Rat(1), 0, 0, 0, 0, 0, Rat(-1)}, m2.at(0, 1).trunc())));
        CHECK(m2.at(1, 0).agrees_with(Germ::monomial(Rat(1), 10, m2.at(1, 0).trunc())));
        CHECK(m2.at(1, 1).agrees_with(Germ::monomial(Rat(-1), 8, m2.at(1, 1).trunc())));

        GermMatrix2 m3 = hecke_higgs(3, Germ::monomial(Rat(1), 1, t), Germ::one(t));
        CHECK(m3.at(0, 0).agrees_with(Germ::monomial(Rat(1), 4, m3.at(0, 0).trunc())));
        CHECK(m3.at(0, 1).agrees_with(Germ(0, {Rat(1), 0, Rat(-1)}, m3.at(0, 1).trunc())));
        CHECK(m3.at(1, 0).agrees_with(Germ::monomial(Rat(1), 6, m3.at(1, 0).trunc())));
    }
    SUBCASE("parity and degeneracy guards") {
        long t = 12;
        CHECK_THROWS_AS(hecke_higgs(4, Germ::monomial(Rat(1), 1, t), Germ::one(t)), domain_error);
        CHECK_THROWS_AS(hecke_higgs(3, Germ::one(t), Germ::one(t)), domain_error); // a not odd
        CHECK_THROWS_AS(hecke_higgs(3, Germ::monomial(Rat(1), 1, t),
                                    Germ::monomial(Rat(1), 1, t)),
                        domain_error); // b not even
        CHECK_THROWS_AS(hecke_higgs(3, Germ::zero(t), Germ::zero(t)), domain_error);
    }
    SUBCASE("vanishing b uses the exchanged-frame formula") {
        long t = 24;
        GermMatrix2 m = hecke_higgs(5, Germ::monomial(Rat(2), 1, t), Germ::zero(t));
        // [[0, a^2],[z^{10}/a^2, 0]] with a = 2z
        CHECK(m.at(0, 0).is_zero());
        CHECK(m.at(0, 1).agrees_with(Germ::monomial(Rat(4), 2, m.at(0, 1).trunc())));
        CHECK(m.at(1, 0).agrees_with(Germ::monomial(rat_of(1, 4), 8, m.at(1, 0).trunc())));
        CHECK(m.agrees_with(hecke_field_via_transition(5, Germ::monomial(Rat(2), 1, t),
                                                       Germ::zero(t))));
    }
}

TEST_CASE("vanishing divisor") {
    long t = 16;
    GermMatrix2 m(Germ::zero(t), Germ::monomial(Rat(1), 4, t), Germ::monomial(Rat(1), 6, t),
                  Germ::zero(t));
    CHECK(vanishing_divisor(m) == 4);
    CHECK(vanishing_divisor(companion(3, 5, 16).scaled(Rat(2))) == 3);
    CHECK_THROWS_AS(vanishing_divisor(GermMatrix2::zero(4)), precision_error);
}

TEST_CASE("eigen twist orders") {
    SUBCASE("split diagonal") {
        long t = 8;
        GermMatrix2 m(Germ::monomial(Rat(1), 1, t), Germ::zero(t), Germ::zero(t),
                      Germ::monomial(Rat(-1), 1, t));
        EigenTwistOrders tw = eigen_twist_orders(m, 1);
        CHECK(tw.plus == 0);
        CHECK(tw.minus == 0);
    }
    SUBCASE("odd-zero model with unit direction") {
        GermMatrix2 m = hecke_higgs(5, Germ::monomial(Rat(1), 3, 24), Germ::one(24));
        // kernel section (b+a, z^5/b) = (1+z^3, z^5) is non-vanishing
        EigenTwistOrders tw = eigen_twist_orders(m, 5);
        CHECK(tw.plus == 0);
        CHECK(tw.minus == 0);
    }
    SUBCASE("order-2 even-zero dichotomy") {
        GermMatrix2 same = even_hecke_field(1, Germ::one(8), Germ::one(8));
        EigenTwistOrders tw = eigen_twist_orders(same, 1);
        CHECK(tw.plus == 1);
        CHECK(tw.minus == 0);
        GermMatrix2 opp = even_hecke_field(1, Germ::constant(Rat(-1), 8), Germ::one(8));
        tw = eigen_twist_orders(opp, 1);
        CHECK(tw.plus == 0);
        CHECK(tw.minus == 1);
    }
    SUBCASE("twists add up to the vanishing order on Hecke models") {
        Rng rng(31);
        for (int i = 0; i < 60; ++i) {
            long d = 5;
            long n = rng.uniform(0, 2);
            auto [a, b] = random_hecke_pair(rng, d, n, 4 * d + 4);
            GermMatrix2 m = hecke_higgs(d, a, b);
            EigenTwistOrders tw = eigen_twist_orders(m, d);
            CHECK(tw.plus + tw.minus == vanishing_divisor(m));
        }
    }
}
