#include "hfl/io.hpp"

#include <doctest.h>

using namespace hfl;

TEST_CASE("germ text roundtrip") {
    Germ g = parse_germ("v=0;t=5;1,0,3");
    CHECK(g == Germ(0, {Rat(1), Rat(0), Rat(3)}, 5));
    CHECK(parse_germ(g.to_string()) == g);

    Germ laurent = parse_germ("v=-1;t=4;-3/2,0,1/7");
    CHECK(laurent.coeff(-1) == rat_of(-3, 2));
    CHECK(laurent.coeff(1) == rat_of(1, 7));
    CHECK(parse_germ(laurent.to_string()) == laurent);

    Germ zero = parse_germ("0");
    CHECK(zero.is_zero());
    CHECK(parse_germ("v=0;t=7;").is_zero());
    CHECK(parse_germ("v=2;t=7;0,0").is_zero());

    CHECK_THROWS_AS(parse_germ("nonsense"), domain_error);
    CHECK_THROWS_AS(parse_germ("v=0;t=5;1/0"), std::exception);
}

TEST_CASE("matrix text roundtrip") {
    GermMatrix2 m(Germ::zero(6), Germ::one(6), Germ::monomial(Rat(1), 2, 6), Germ::zero(6));
    GermMatrix2 back = parse_matrix(m.to_string());
    CHECK(back.agrees_with(m));
    CHECK(back.at(0, 1) == Germ::one(6));
    CHECK_THROWS_AS(parse_matrix("v=0;t=5;1"), domain_error);
}

TEST_CASE("weighted point text") {
    WPSPoint y = parse_wps("w=1,1,2;x=1,2,3");
    CHECK(y.weights == std::vector<long>{1, 1, 2});
    CHECK(y.coords[2] == 3);
    CHECK(parse_wps(y.to_string()).coords == y.coords);
    CHECK_THROWS_AS(parse_wps("w=1,1;x=0,0"), domain_error);
    CHECK_THROWS_AS(parse_wps("x=1,2"), domain_error);
}
