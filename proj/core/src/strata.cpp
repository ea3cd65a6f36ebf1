#include "hfl/strata.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hfl {

void QDProfile::validate() const {
    if (genus < 2) throw domain_error("profile: genus must be at least 2");
    if (mults.empty()) throw domain_error("profile: at least one zero required");
    long sum = 0;
    for (long m : mults) {
        if (m < 1) throw domain_error("profile: zero orders must be positive");
        sum += m;
    }
    if (sum != 4 * genus - 4)
        throw domain_error("profile: zero orders sum to " + std::to_string(sum) + " != 4g-4 = " +
                           std::to_string(4 * genus - 4));
}

long QDProfile::n_odd() const {
    return static_cast<long>(std::count_if(mults.begin(), mults.end(), [](long m) { return m % 2 != 0; }));
}

long QDProfile::n_even() const { return zero_count() - n_odd(); }

SpectralNumerology spectral_numerology(const QDProfile& p) {
    p.validate();
    SpectralNumerology out;
    out.n_odd = p.n_odd();
    out.n_even = p.n_even();
    if (out.n_odd % 2 != 0)
        throw domain_error("profile: odd number of odd-order zeros is impossible (sum is even)");
    out.normalized_genus = 2 * p.genus - 1 + out.n_odd / 2;
    out.prym_dim = p.genus - 1 + out.n_odd / 2;
    out.branch_count = out.n_odd;
    out.unbranched = out.n_odd == 0;
    return out;
}

long HiggsDivisor::deg() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0L); }

bool HiggsDivisor::leq(const HiggsDivisor& o) const {
    if (coeffs.size() != o.coeffs.size()) return false;
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] > o.coeffs[i]) return false;
    return true;
}

std::string ZeroFibre::describe() const {
    std::ostringstream os;
    if (odd) {
        os << "odd zero (order " << mult << ", D=" << div << "): C^" << affine_params;
    } else if (saturated) {
        os << "even zero (order " << mult << ", D=" << div << "): point (saturated)";
    } else {
        os << "even zero (order " << mult << ", D=" << div << "): C^* x C^" << affine_params;
    }
    return os.str();
}

namespace {

ZeroFibre zero_fibre(long mult, long div) {
    ZeroFibre f;
    f.mult = mult;
    f.div = div;
    f.odd = mult % 2 != 0;
    if (f.odd) {
        f.affine_params = (mult - 2 * div - 1) / 2;
    } else if (div == mult / 2) {
        f.saturated = true;
    } else {
        f.punctured_line = true;
        f.affine_params = mult / 2 - div - 1;
    }
    return f;
}

unsigned long long pow2(long e) {
    if (e < 0 || e >= 63) throw domain_error("2^" + std::to_string(e) + " outside counting range");
    return 1ULL << e;
}

long saturated_count(const QDProfile& p, const HiggsDivisor& d) {
    long n0 = 0;
    for (size_t i = 0; i < p.mults.size(); ++i)
        if (p.mults[i] % 2 == 0 && d.coeffs[i] == p.mults[i] / 2) ++n0;
    return n0;
}

void check_divisor(const QDProfile& p, const HiggsDivisor& d) {
    if (d.coeffs.size() != p.mults.size())
        throw domain_error("Higgs divisor: coefficient count mismatch");
    for (size_t i = 0; i < d.coeffs.size(); ++i)
        if (d.coeffs[i] < 0 || d.coeffs[i] > p.mults[i] / 2)
            throw domain_error("Higgs divisor: coefficient out of range at zero " + std::to_string(i));
}

} // namespace

unsigned long long count_real_points(const QDProfile& p, const HiggsDivisor& d) {
    p.validate();
    check_divisor(p, d);
    if (p.n_odd() == 0)
        throw domain_error("real-point count requires an odd-order zero");
    long n0 = saturated_count(p, d);
    return pow2(2 * p.genus - 2 + p.zero_count() - n0);
}

std::vector<Stratum> enumerate_strata(const QDProfile& p) {
    SpectralNumerology num = spectral_numerology(p);
    const size_t n = p.mults.size();
    std::vector<long> caps(n);
    for (size_t i = 0; i < n; ++i) caps[i] = p.mults[i] / 2;

    std::vector<Stratum> out;
    std::vector<long> d(n, 0);
    while (true) {
        Stratum s;
        s.divisor.coeffs = d;
        s.deg = s.divisor.deg();
        s.dim = 3 * p.genus - 3 - s.deg;
        s.prym_dim = num.prym_dim;
        for (size_t i = 0; i < n; ++i) {
            ZeroFibre f = zero_fibre(p.mults[i], d[i]);
            s.r1 += f.punctured_line ? 1 : 0;
            s.r2 += f.affine_params;
            s.per_zero.push_back(std::move(f));
        }
        if (num.n_odd >= 1) s.real_points = count_real_points(p, s.divisor);
        s.is_open = s.deg == 0;
        s.is_lowest = true;
        for (size_t i = 0; i < n; ++i) s.is_lowest = s.is_lowest && d[i] == caps[i];
        out.push_back(std::move(s));

        size_t i = 0;
        while (i < n && d[i] == caps[i]) d[i++] = 0;
        if (i == n) break;
        ++d[i];
    }
    return out;
}

unsigned long long total_real_points(const QDProfile& p) {
    p.validate();
    if (p.n_odd() == 0)
        throw domain_error("real-point count requires an odd-order zero");
    unsigned long long total = 0;
    for (const Stratum& s : enumerate_strata(p)) total += *s.real_points;
    return total;
}

std::vector<PosetEdge> degeneration_poset(const QDProfile& p) {
    std::vector<Stratum> strata = enumerate_strata(p);
    std::vector<PosetEdge> edges;
    for (size_t i = 0; i < strata.size(); ++i)
        for (size_t j = 0; j < strata.size(); ++j)
            if (strata[j].deg == strata[i].deg + 1 && strata[i].divisor.leq(strata[j].divisor))
                edges.push_back({i, j});
    return edges;
}

ComponentClassification classify_components(const QDProfile& p) {
    p.validate();
    if (!p.assume_no_global_sqrt)
        throw domain_error("component classification: the no-global-square-root hypothesis "
                           "is not asserted for this profile");
    ComponentClassification out;
    if (p.n_odd() >= 1) {
        out.kind = ComponentKind::Irreducible;
        out.note = "irreducible complex space";
    } else {
        out.kind = ComponentKind::ConnectedFourComponents;
        out.note = "connected with four irreducible components; the pullback to the "
                   "normalized spectral curve is generically two-to-one";
    }
    return out;
}

GlobalFibreDescription global_fibre_description(const QDProfile& p) {
    p.validate();
    GlobalFibreDescription out;
    bool all_odd = p.n_even() == 0;
    long max_mult = *std::max_element(p.mults.begin(), p.mults.end());
    out.p1_factors = static_cast<long>(std::count(p.mults.begin(), p.mults.end(), 3L));
    out.p112_factors = static_cast<long>(std::count(p.mults.begin(), p.mults.end(), 5L));
    std::ostringstream os;
    if (!all_odd) {
        out.kind = GlobalFibreKind::NoGlobalFibreing;
        os << "no global fibreing over the twisted Prym variety; the Hecke-parameter bundle "
              "surjects birationally onto the fibre (the gluing map is not injective)";
        bool others_simple = true;
        long even_order = 0;
        long even_count = 0;
        for (long m : p.mults) {
            if (m % 2 == 0) {
                even_order = m;
                ++even_count;
            } else if (m != 1) {
                others_simple = false;
            }
        }
        if (even_count == 1 && others_simple && even_order == 2)
            os << "; the normalisation is a P^1-bundle over the twisted Prym variety";
        if (even_count == 1 && others_simple && even_order == 4)
            os << "; the normalisation is a P(1,1,2)-bundle over the twisted Prym variety";
    } else if (max_mult <= 3) {
        out.kind = GlobalFibreKind::ProjectiveLineBundle;
        os << "holomorphic fibre bundle over the twisted Prym variety with fibre (P^1)^"
           << out.p1_factors;
    } else if (max_mult <= 5) {
        out.kind = GlobalFibreKind::NormalizedToric;
        os << "up to normalisation a holomorphic fibre bundle with fibre (P^1)^" << out.p1_factors
           << " x P(1,1,2)^" << out.p112_factors << " over the twisted Prym variety";
    } else {
        out.kind = GlobalFibreKind::HeckeBundleOverPrym;
        os << "holomorphic fibre bundle over the twisted Prym variety; fibre = product of "
              "compact Hecke-parameter moduli, one factor per higher-order zero";
    }
    out.text = os.str();
    return out;
}

std::vector<std::string> profile_warnings(const QDProfile& p) {
    p.validate();
    std::vector<std::string> out;
    // closed-form r2 is only valid while no even zero is saturated
    if (p.n_even() > 0)
        out.push_back("closed-form fibre rank r2 = 2g-2-deg(D)-n_even-n_odd/2 assumes no even "
                      "zero is saturated; per-zero counts are used on saturated strata");
    // profiles with one even zero of order 2d and the rest simple: the two
    // printed closed forms disagree except at d = 2
    long even_count = 0, even_order = 0;
    bool others_simple = true;
    for (long m : p.mults) {
        if (m % 2 == 0) {
            ++even_count;
            even_order = m;
        } else if (m != 1) {
            others_simple = false;
        }
    }
    if (even_count == 1 && others_simple && p.n_odd() >= 1) {
        long dd = even_order / 2;
        unsigned long long base = pow2(6 * p.genus - 6 - 2 * dd);
        unsigned long long derived = static_cast<unsigned long long>(2 * dd + 1) * base;
        unsigned long long printed = static_cast<unsigned long long>(4 * dd - 3) * base;
        if (derived != printed) {
            std::ostringstream os;
            os << "real-point total for one order-" << even_order << " zero plus simple zeros: "
               << "stratum sum gives (2d+1)*2^{6g-6-2d} = " << derived
               << ", the printed closed form (4d-3)*2^{6g-6-2d} = " << printed
               << " (they agree only at d=2); the stratum sum is reported";
            out.push_back(os.str());
        }
    }
    return out;
}

std::vector<std::vector<long>> all_profiles(long genus) {
    if (genus < 2) throw domain_error("profiles: genus must be at least 2");
    long total = 4 * genus - 4;
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    // weakly decreasing partitions of 4g-4
    auto rec = [&](auto&& self, long remaining, long max_part) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (long part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, total, total);
    return out;
}

} // namespace hfl
