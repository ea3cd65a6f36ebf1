#pragma once

#include "hfl/errors.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hfl {

// Zero-multiplicity profile of a quadratic differential: genus g >= 2 and
// the zero orders m_1..m_n with sum 4g-4. Whether the differential admits a
// global square root cannot be decided from the multiplicities alone, so
// irreducibility statements require the caller-asserted flag.
struct QDProfile {
    long genus = 2;
    std::vector<long> mults;
    bool assume_no_global_sqrt = true;

    void validate() const;
    long n_odd() const;
    long n_even() const;
    long zero_count() const { return static_cast<long>(mults.size()); }
};

struct SpectralNumerology {
    long n_odd = 0;
    long n_even = 0;
    long normalized_genus = 0; // 2g - 1 + n_odd/2
    long prym_dim = 0;         // g - 1 + n_odd/2
    long branch_count = 0;     // = n_odd
    bool unbranched = false;
};

SpectralNumerology spectral_numerology(const QDProfile& p);

// One coefficient per zero, 0 <= D_i <= floor(m_i / 2).
struct HiggsDivisor {
    std::vector<long> coeffs;
    long deg() const;
    bool operator==(const HiggsDivisor& o) const { return coeffs == o.coeffs; }
    // componentwise dominance
    bool leq(const HiggsDivisor& o) const;
};

// Local fibre contribution of one zero of the quadratic differential.
struct ZeroFibre {
    long mult = 0;
    long div = 0;
    bool odd = false;
    bool saturated = false; // even zero with D = m/2
    long affine_params = 0; // odd: (m-2D-1)/2; even unsaturated: m/2-D-1
    bool punctured_line = false; // even unsaturated zeros carry one C^* factor
    std::string describe() const;
};

struct Stratum {
    HiggsDivisor divisor;
    long deg = 0;
    long dim = 0;      // 3g - 3 - deg
    long prym_dim = 0; // g - 1 + n_odd/2
    long r1 = 0;       // number of unsaturated even zeros
    long r2 = 0;       // total affine parameter count
    std::vector<ZeroFibre> per_zero;
    std::optional<unsigned long long> real_points; // only when n_odd >= 1
    bool is_open = false;   // D = 0
    bool is_lowest = false; // D maximal
};

std::vector<Stratum> enumerate_strata(const QDProfile& p);

// Per-stratum count of split-real points: 2^{2g-2+n-n0} with n0 the number
// of saturated even zeros. Requires at least one odd zero.
unsigned long long count_real_points(const QDProfile& p, const HiggsDivisor& d);

// Sum over all strata; equals 2^{2g-2} prod (m_i + 1) when every zero is odd.
unsigned long long total_real_points(const QDProfile& p);

struct PosetEdge {
    size_t from = 0, to = 0; // indices into enumerate_strata order
};

// Covering relations of the degeneration order (componentwise <=, degree
// difference one). Unique minimum D = 0, unique maximum D_max.
std::vector<PosetEdge> degeneration_poset(const QDProfile& p);

enum class ComponentKind { Irreducible, ConnectedFourComponents };

struct ComponentClassification {
    ComponentKind kind = ComponentKind::Irreducible;
    std::string note;
};

// Needs assume_no_global_sqrt; with an odd zero the fibre is irreducible,
// all-even profiles are connected with four irreducible components (and the
// pullback to the normalized spectral curve is generically two-to-one).
ComponentClassification classify_components(const QDProfile& p);

enum class GlobalFibreKind {
    HeckeBundleOverPrym,    // all zeros odd
    ProjectiveLineBundle,   // zeros in {1,3}: (P^1)^k fibre
    NormalizedToric,        // zeros in {1,3,5}: (P^1)^k x P(1,1,2)^l after normalization
    NoGlobalFibreing        // even zeros present
};

struct GlobalFibreDescription {
    GlobalFibreKind kind = GlobalFibreKind::HeckeBundleOverPrym;
    long p1_factors = 0;     // number of order-3 zeros
    long p112_factors = 0;   // number of order-5 zeros
    std::string text;
};

GlobalFibreDescription global_fibre_description(const QDProfile& p);

// Warnings attached to reports (closed-form cross-checks that conflict with
// the derived stratum sums, flagged rather than adjudicated).
std::vector<std::string> profile_warnings(const QDProfile& p);

// Exhaustive profile generator for a given genus: all multisets of positive
// zero orders summing to 4g-4 (weakly decreasing).
std::vector<std::vector<long>> all_profiles(long genus);

} // namespace hfl
