#include "hfl/hecke.hpp"
#include "hfl/oracle.hpp"
#include "hfl/rng.hpp"

#include <doctest.h>

using namespace hfl;

namespace {

HeckeParam param(long d, const Germ& a, const Germ& b) { return HeckeParam(d, a, b); }

Germ zpow(Rat c, long e, long t) { return Germ::monomial(std::move(c), e, t); }

} // namespace

TEST_CASE("parameter reduction and strata") {
    CHECK(*stratum_of(param(5, zpow(Rat(1), 1, 5), Germ::one(5))) == 0);
    CHECK(*stratum_of(param(5, zpow(Rat(1), 3, 5), zpow(Rat(1), 2, 5))) == 2);
    CHECK(*stratum_of(param(5, Germ::zero(5), zpow(Rat(1), 2, 5))) == 2);
    CHECK(!stratum_of(HeckeParam::bottom(5)).has_value());
    // data beyond z^{d-n} is quotiented away
    HeckeParam p1 = param(5, Germ(1, {Rat(1), Rat(0), Rat(0), Rat(0)}, 5), Germ::one(5));
    HeckeParam p2 = param(5, Germ(1, {Rat(1), Rat(0), Rat(0), Rat(0), Rat(5)}, 6), Germ::one(6));
    CHECK(p1 == p2);
    // everything of order >= (d+1)/2 collapses to the bottom class
    CHECK(param(5, zpow(Rat(1), 3, 5), Germ::zero(5)).is_bottom());
    CHECK(param(5, Germ::zero(5), zpow(Rat(2), 4, 5)).is_bottom());

    CHECK_THROWS_AS(param(4, zpow(Rat(1), 1, 5), Germ::one(5)), domain_error);
    CHECK_THROWS_AS(param(5, Germ::one(5), Germ::one(5)), domain_error); // parity
}

TEST_CASE("group action") {
    long d = 5;
    HeckeParam p = param(d, zpow(Rat(1), 1, d), Germ::one(d));
    GroupElement one(d, Germ::one(d));
    CHECK(act(one, p) == p);

    GroupElement two(d, Germ::constant(Rat(2), d));
    HeckeParam q = act(two, p);
    CHECK(q.a() == zpow(Rat(2), 1, 5));
    CHECK(canonicalize(q).canonical == canonicalize(p).canonical);

    GroupElement g(d, Germ(0, {Rat(1), Rat(0), Rat(1)}, d));
    HeckeParam r = act(g, p);
    CHECK(r.a() == Germ(1, {Rat(1), Rat(0), Rat(1)}, 5));
    CHECK(r.b() == Germ(0, {Rat(1), Rat(0), Rat(1)}, 5));

    CHECK_THROWS_AS(GroupElement(d, zpow(Rat(1), 1, d) + Germ::one(d)), domain_error);
    CHECK_THROWS_AS(GroupElement(d, zpow(Rat(1), 2, d)), domain_error); // not a unit
    CHECK_THROWS_AS(act(GroupElement(3, Germ::one(3)), p), domain_error);
}

TEST_CASE("canonical forms") {
    long d = 5;
    HeckeParam p = param(d, zpow(Rat(4), 1, d), Germ(0, {Rat(2), Rat(0), Rat(3)}, d));
    Canonicalized c = canonicalize(p);
    CHECK(c.canonical.b() == Germ::one(5));
    CHECK(c.canonical.a() == Germ(1, {Rat(2), Rat(0), Rat(-3)}, 5)); // 2z - 3z^3
    // the witness carries p onto the canonical representative
    HeckeParam moved(d, p.a() * c.witness, p.b() * c.witness);
    CHECK(moved == c.canonical);

    HeckeParam already = param(d, zpow(Rat(1), 1, d), Germ::one(d));
    CHECK(canonicalize(already).canonical == already);

    HeckeParam point = param(d, Germ::zero(d), zpow(Rat(1), 2, d));
    CHECK(canonicalize(point).canonical == point);
    CHECK(point.a().is_zero());

    // odd-stratum representative: leading side is a
    HeckeParam odd = param(d, zpow(Rat(3), 1, d), zpow(Rat(6), 2, d));
    Canonicalized co = canonicalize(odd);
    CHECK(co.canonical.a() == zpow(Rat(1), 1, 4));
    CHECK(co.canonical.b() == zpow(Rat(2), 2, 4));
}

TEST_CASE("orbit soundness and completeness") {
    Rng rng(41);
    for (long d : {3L, 5L, 7L, 9L}) {
        for (int i = 0; i < 100; ++i) {
            long n = rng.uniform(0, (d - 1) / 2);
            auto [a, b] = random_hecke_pair(rng, d, n, d);
            HeckeParam p(d, a, b);
            if (p.is_bottom()) continue;
            GroupElement g = random_group_element(rng, d);
            CHECK(canonicalize(act(g, p)).canonical == canonicalize(p).canonical);
        }
    }
    // distinct u-coordinates => distinct canonical forms
    long d = 7;
    for (int i = 0; i < 200; ++i) {
        long n = rng.uniform(0, (d - 3) / 2);
        auto [a1, b1] = random_hecke_pair(rng, d, n, d);
        auto [a2, b2] = random_hecke_pair(rng, d, n, d);
        HeckeParam p1(d, a1, b1), p2(d, a2, b2);
        if (p1.is_bottom() || p2.is_bottom()) continue;
        if (u_coordinate(p1) != u_coordinate(p2))
            CHECK(canonicalize(p1).canonical != canonicalize(p2).canonical);
        else
            CHECK(canonicalize(p1).canonical == canonicalize(p2).canonical);
    }
}

TEST_CASE("u coordinates") {
    long d = 5;
    CHECK(u_coordinate(param(d, zpow(Rat(2), 1, d), Germ::one(d))) ==
          std::vector<Rat>{Rat(2), Rat(0)});
    CHECK(u_coordinate(param(d, zpow(Rat(4), 1, d), Germ(0, {Rat(2), Rat(0), Rat(3)}, d))) ==
          std::vector<Rat>{Rat(2), Rat(-3)});
    CHECK_THROWS_AS(u_coordinate(param(d, Germ::zero(d), zpow(Rat(1), 2, d))), domain_error);
    // length (d-2n-1)/2 on each stratum
    CHECK(u_coordinate(param(7, zpow(Rat(1), 1, 7), zpow(Rat(1), 2, 7))).size() == 2);
    CHECK(u_coordinate(param(7, zpow(Rat(1), 3, 7), zpow(Rat(1), 2, 7))).size() == 1);
}

TEST_CASE("atlas inventory") {
    // strata count: n = 0..(d-1)/2
    for (long d : {3L, 5L, 7L, 9L}) {
        long count = 0;
        for (long n = 0; 2 * n < d; ++n) ++count;
        CHECK(count == (d + 1) / 2);
    }
    auto atlas5 = chart_atlas(5);
    // V0, V1, N(1,0), N(2,1), 3N(2,0)
    CHECK(atlas5.size() == 5);
    auto atlas3 = chart_atlas(3);
    CHECK(atlas3.size() == 2); // V0, N(1,0)
    for (const auto& c : chart_atlas(9)) {
        if (c.kind == ChartId::Kind::KN) {
            CHECK((c.k - c.n) % 2 == 1);
            CHECK(c.k <= 9 - c.n - 2);
        }
    }
}

TEST_CASE("chart membership and images") {
    long d = 5;
    ChartId n10 = ChartId::N(1, 0);
    HeckeParam p = param(d, zpow(Rat(4), 1, d), Germ(0, {Rat(2), Rat(0), Rat(3)}, d));
    CHECK(chart_contains(n10, p));
    WPSPoint y = chart_image(n10, p);
    CHECK(y.weights == std::vector<long>{1, 1, 2});
    CHECK(wps_equal(y, WPSPoint({1, 1, 2}, {Rat(2), Rat(4), Rat(12)})));
    CHECK(wps_equal(y, WPSPoint({1, 1, 2}, {Rat(1), Rat(2), Rat(3)})));

    // generic symbolic generators match the worked d=5 pattern
    for (const auto& cp : chart_polynomials(5)) {
        if (!(cp.chart == n10)) continue;
        REQUIRE(cp.polys.size() == 3);
        CHECK(cp.polys[0].to_string() == "x0");
        CHECK(cp.polys[1].to_string() == "x1");
        CHECK(cp.polys[2].to_string() == "-x0*x3 + x1*x2");
        for (size_t i = 0; i < cp.polys.size(); ++i)
            CHECK(cp.polys[i].is_homogeneous(static_cast<int>(cp.weights[i])));
    }

    // the V_l part of the chart: x0 = 0
    HeckeParam pl = param(d, zpow(Rat(1), 1, d), zpow(Rat(1), 2, d));
    CHECK(chart_contains(n10, pl));
    CHECK(sgn(chart_image(n10, pl).coords[0]) == 0);

    // not in chart: order of a is 3
    HeckeParam pn = param(d, zpow(Rat(1), 3, d), Germ::one(d));
    CHECK(!chart_contains(n10, pn));
    CHECK_THROWS_AS(chart_image(n10, pn), domain_error);

    // symbolic evaluation agrees with the germ-division image on members
    Rng rng(53);
    for (long dd : {5L, 7L}) {
        for (const auto& cp : chart_polynomials(dd)) {
            for (int i = 0; i < 25; ++i) {
                HeckeParam q = sample_chart_member(rng, dd, cp.chart);
                std::vector<Rat> slots = coefficient_slots(q);
                std::vector<Rat> vals;
                for (const auto& poly : cp.polys) vals.push_back(poly.eval(slots));
                CHECK(wps_equal(WPSPoint(cp.weights, vals), chart_image(cp.chart, q)));
            }
        }
    }
}

TEST_CASE("order-5 inverse chart") {
    HeckeParam p = chart_inverse_order5(WPSPoint({1, 1, 2}, {Rat(1), Rat(2), Rat(3)}));
    CHECK(p.a() == zpow(Rat(4), 1, 5));
    CHECK(p.b() == Germ(0, {Rat(2), Rat(0), Rat(3)}, 5));

    HeckeParam q = chart_inverse_order5(WPSPoint({1, 1, 2}, {Rat(1), Rat(1), Rat(0)}));
    CHECK(q.a() == zpow(Rat(1), 1, 5));
    CHECK(q.b() == Germ::one(5));

    HeckeParam bottom = chart_inverse_order5(WPSPoint({1, 1, 2}, {Rat(0), Rat(0), Rat(1)}));
    CHECK(bottom.stratum() == 2);
    CHECK(bottom.b() == zpow(Rat(1), 2, 3));

    CHECK_THROWS_AS(chart_inverse_order5(WPSPoint({1, 1, 2}, {Rat(1), Rat(0), Rat(3)})),
                    domain_error);
}

TEST_CASE("gluing") {
    long d = 5;
    // p = (z, 1+z^2) sits in V0 and N(1,0)
    HeckeParam p = param(d, zpow(Rat(1), 1, d), Germ(0, {Rat(1), Rat(0), Rat(1)}, d));
    GluingReport rep = gluing_check(ChartId::V(0), ChartId::N(1, 0), p);
    CHECK(rep.same_orbit);
    CHECK(rep.coordinate_change_ok);
    CHECK(rep.symbolic_ok);
    CHECK(rep.pass());

    // disjoint charts: precondition error
    HeckeParam deep = param(d, zpow(Rat(1), 3, d), zpow(Rat(1), 2, d));
    CHECK_THROWS_AS(gluing_check(ChartId::V(0), ChartId::N(1, 0), deep), domain_error);
}

TEST_CASE("even-zero parameters") {
    long t = 8;
    SUBCASE("extension datum") {
        EvenHeckeParam p(2, Germ::zero(t), Germ::one(t));
        EvenExtensionDatum e = even_extension_datum(p);
        REQUIRE(e.holomorphic);
        CHECK(e.datum.agrees_with(Germ::one(e.datum.trunc())));
        CHECK(*e.order == 0);

        EvenHeckeParam p2(2, zpow(Rat(1), 1, t), Germ::one(t));
        e = even_extension_datum(p2);
        REQUIRE(e.holomorphic);
        CHECK(e.datum == Germ(0, {Rat(1), Rat(2)}, 2)); // (1+z)/(1-z) = 1 + 2z mod z^2
        CHECK(*e.order == 0);

        // b - a = z: the datum (2+z)/z has a pole, classification branch
        EvenHeckeParam p3(2, Germ::one(t), Germ(0, {Rat(1), Rat(1)}, t));
        e = even_extension_datum(p3);
        CHECK(!e.holomorphic);
        CHECK(e.type.n == 0);
        CHECK(e.type.l_plus == 1);

        CHECK_THROWS_AS(even_extension_datum(EvenHeckeParam(2, Germ::zero(t), Germ::zero(t))),
                        domain_error);
    }
    SUBCASE("degeneration type") {
        EvenDegeneration ty = even_degeneration_type(EvenHeckeParam(1, Germ::one(t), Germ::one(t)));
        CHECK(ty.n == 0);
        CHECK(ty.l_plus == 1);
        CHECK(ty.l_minus == 0);
        CHECK(ty.plus_clamped);

        ty = even_degeneration_type(
            EvenHeckeParam(1, Germ::constant(Rat(-1), t), Germ::one(t)));
        CHECK(ty.n == 0);
        CHECK(ty.l_plus == 0);
        CHECK(ty.l_minus == 1);

        ty = even_degeneration_type(EvenHeckeParam(2, Germ::zero(t), zpow(Rat(1), 1, t)));
        CHECK(ty.n == 1);
        CHECK(ty.l_plus == 0);
        CHECK(ty.l_minus == 0);
    }
    SUBCASE("class equality uses the reduced data") {
        EvenHeckeParam a(2, Germ::zero(t), zpow(Rat(1), 1, t));
        EvenHeckeParam b(2, zpow(Rat(1), 1, t), zpow(Rat(1), 1, t));
        // both have 2n >= m: bottom class
        CHECK(!a.stratum().has_value());
        CHECK(!b.stratum().has_value());
        CHECK(a.class_equal(b));
        EvenHeckeParam c(2, Germ::zero(t), Germ::one(t));
        CHECK(!a.class_equal(c));
    }
}
