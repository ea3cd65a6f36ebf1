#pragma once

#include "hfl/germ.hpp"
#include "hfl/hecke.hpp"
#include "hfl/local_higgs.hpp"
#include "hfl/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hfl {

// One randomized or exhaustive property suite. Deterministic under a fixed
// seed; failures are one-line machine-readable records.
struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    long cases = 0;
    bool pass = false;
    double seconds = 0.0;
    std::vector<std::string> failures;
    std::vector<std::string> notes; // flags surfaced by the suite
};

std::vector<std::string> oracle_suite_names();
bool is_oracle_suite(const std::string& name);

// cases == 0 picks the suite's default volume.
SuiteResult run_oracle_suite(const std::string& name, std::uint64_t seed, long cases = 0);

// Generation helpers shared with the tests -------------------------------

// Random parity-valid direction pair for an order-d zero: a sigma-odd,
// b sigma-even, min order n, windows trunc.
std::pair<Germ, Germ> random_hecke_pair(Rng& rng, long d, long n, long trunc);

// Random unit sigma-even germ mod z^d.
GroupElement random_group_element(Rng& rng, long d);

// Random determinant-one germ matrix (product of unipotent elementaries
// and a rational diagonal torus factor).
GermMatrix2 random_sl2(Rng& rng, long trunc);

// Random member of a chart (uniformly over the chart's order signatures).
HeckeParam sample_chart_member(Rng& rng, long d, const ChartId& c);

// Independent transition-matrix route for the induced Higgs field: the
// diagonal local field conjugated by [[1/b, -a z^{-d}],[0, b z^{-d}]]
// expressed in the involution-diagonalizing frame.
GermMatrix2 hecke_field_via_transition(long d, const Germ& a, const Germ& b);

} // namespace hfl
