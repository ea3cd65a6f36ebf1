#include "hfl/hecke.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace hfl {

namespace {

struct EffOrd {
    long value;
    bool exact;
};

// order when visible; the window as a lower bound otherwise
EffOrd eff_ord(const Germ& g) {
    if (auto o = g.order()) return {*o, true};
    return {g.trunc(), false};
}

} // namespace

HeckeParam::HeckeParam(long d, Germ a, Germ b) {
    if (d < 1 || d % 2 == 0)
        throw domain_error("Hecke parameter: divisor order d must be odd and positive");
    if (!a.sigma_odd()) throw domain_error("Hecke parameter: a must be sigma-odd");
    if (!b.sigma_even()) throw domain_error("Hecke parameter: b must be sigma-even");
    d_ = d;
    EffOrd ea = eff_ord(a), eb = eff_ord(b);
    long n = std::min(ea.value, eb.value);
    if (2 * n >= d) {
        bottom_ = true;
        a_ = Germ::zero(1);
        b_ = Germ::zero(1);
        return;
    }
    bool certified = (ea.value <= eb.value && ea.exact) || (eb.value <= ea.value && eb.exact);
    if (!certified)
        throw precision_error("Hecke parameter: stratum indeterminate at this precision");
    long w = d - n;
    if (a.trunc() < w || b.trunc() < w)
        throw precision_error("Hecke parameter: window shorter than the class storage z^" +
                              std::to_string(w));
    n_ = n;
    a_ = a.truncated(w);
    b_ = b.truncated(w);
}

HeckeParam HeckeParam::bottom(long d) {
    HeckeParam p;
    p.d_ = d;
    p.bottom_ = true;
    p.a_ = Germ::zero(1);
    p.b_ = Germ::zero(1);
    return p;
}

long HeckeParam::stratum() const {
    if (bottom_) throw domain_error("bottom class: no stratum index");
    return n_;
}

bool HeckeParam::operator==(const HeckeParam& o) const {
    if (d_ != o.d_ || bottom_ != o.bottom_) return false;
    if (bottom_) return true;
    return n_ == o.n_ && a_ == o.a_ && b_ == o.b_;
}

std::string HeckeParam::to_string() const {
    std::ostringstream os;
    os << "Heck_" << d_ << "[";
    if (bottom_)
        os << "0";
    else
        os << "a: " << a_.to_string() << " | b: " << b_.to_string();
    os << "]";
    return os.str();
}

GroupElement::GroupElement(long d, Germ phi) : d_(d) {
    if (d < 1) throw domain_error("group element: invalid divisor order");
    if (!phi.sigma_even()) throw domain_error("group element: must be sigma-even");
    auto o = phi.order();
    if (!o || *o != 0) throw domain_error("group element: constant term must be nonzero");
    if (phi.trunc() < d)
        throw precision_error("group element: window shorter than z^" + std::to_string(d));
    phi_ = phi.truncated(d);
}

HeckeParam act(const GroupElement& g, const HeckeParam& p) {
    if (g.d() != p.d()) throw domain_error("act: mismatched divisor orders");
    if (p.is_bottom()) return p;
    return HeckeParam(p.d(), g.germ() * p.a(), g.germ() * p.b());
}

std::optional<long> stratum_of(const HeckeParam& p) {
    if (p.is_bottom()) return std::nullopt;
    return p.stratum();
}

Canonicalized canonicalize(const HeckeParam& p) {
    if (p.is_bottom()) return {p, Germ::one(1)};
    long n = p.stratum();
    const bool n_even = n % 2 == 0;
    const Germ& lead = n_even ? p.b() : p.a(); // parity forces which side attains n
    Germ w = lead.inverse().shifted(n);        // z^n / lead, a unit germ
    return {HeckeParam(p.d(), p.a() * w, p.b() * w), w};
}

std::vector<Rat> u_coordinate(const HeckeParam& p) {
    if (p.is_bottom()) throw domain_error("bottom class: no coordinates");
    long n = p.stratum();
    long span = p.d() - 2 * n;
    if (span <= 1) throw domain_error("point stratum, no coordinates");
    Germ u = (n % 2 == 0) ? p.a() * p.b().inverse() : p.b() * p.a().inverse();
    std::vector<Rat> out;
    for (long e = 1; e <= span - 2; e += 2) out.push_back(u.coeff(e));
    return out;
}

std::string ChartId::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::V: os << "V" << n; break;
        case Kind::N: os << "N(" << l << "," << n << ")"; break;
        case Kind::KN: os << k << "N(" << l << "," << n << ")"; break;
    }
    return os.str();
}

namespace {

void validate_chart(long d, const ChartId& c) {
    if (d < 1 || d % 2 == 0) throw domain_error("chart: d must be odd and positive");
    long top = (d - 1) / 2;
    switch (c.kind) {
        case ChartId::Kind::V:
            if (c.n < 0 || c.n > top) throw domain_error("chart V: stratum out of range");
            if (d - 2 * c.n < 3) throw domain_error("chart V: point stratum has no coordinates");
            return;
        case ChartId::Kind::N:
            if (!(0 <= c.n && c.n < c.l && c.l <= top))
                throw domain_error("chart N: need 0 <= n < l <= (d-1)/2");
            if ((c.l - c.n) % 2 == 0)
                throw domain_error("chart N: l - n must be odd (use a refined chart)");
            return;
        case ChartId::Kind::KN:
            if (!(0 <= c.n && c.n < c.l && c.l <= top))
                throw domain_error("chart kN: need 0 <= n < l <= (d-1)/2");
            if ((c.l - c.n) % 2 != 0) throw domain_error("chart kN: l - n must be even");
            if ((c.k - c.n) % 2 == 0 || c.k <= c.l || c.k > d - c.n - 2)
                throw domain_error("chart kN: need l < k <= d-n-2 with k - n odd");
            return;
    }
}

// Normalizing side of the chart: the germ whose order is pinned to the stop
// index. Odd stop exponents live on the sigma-odd side.
const Germ& stop_side(const ChartId& c, const HeckeParam& p) {
    return c.stop() % 2 != 0 ? p.a() : p.b();
}
const Germ& free_side(const ChartId& c, const HeckeParam& p) {
    return c.stop() % 2 != 0 ? p.b() : p.a();
}

} // namespace

std::vector<ChartId> chart_atlas(long d) {
    if (d < 1 || d % 2 == 0) throw domain_error("chart atlas: d must be odd and positive");
    std::vector<ChartId> out;
    long top = (d - 1) / 2;
    for (long n = 0; n <= top; ++n)
        if (d - 2 * n >= 3) out.push_back(ChartId::V(n));
    for (long n = 0; n <= top; ++n) {
        for (long l = n + 1; l <= top; ++l) {
            if ((l - n) % 2 != 0) {
                out.push_back(ChartId::N(l, n));
            } else {
                for (long k = l + 1; k <= d - n - 2; ++k)
                    if ((k - n) % 2 != 0) out.push_back(ChartId::KN(k, l, n));
            }
        }
    }
    return out;
}

bool chart_contains(const ChartId& c, const HeckeParam& p) {
    validate_chart(p.d(), c);
    if (p.is_bottom()) return false;
    long n1 = p.stratum();
    if (c.kind == ChartId::Kind::V) return n1 == c.n;
    long s = c.stop();
    auto og = stop_side(c, p).order();
    if (!og || *og != s) return false;
    auto oh = free_side(c, p).order();
    long h_ord = oh ? *oh : free_side(c, p).trunc(); // >= window when invisible
    if (c.kind == ChartId::Kind::N) return h_ord == c.n || (oh ? h_ord > c.l : true);
    return h_ord == c.n || (oh && h_ord == c.l);
}

WPSPoint chart_image(const ChartId& c, const HeckeParam& p) {
    if (!chart_contains(c, p)) throw domain_error("chart membership violated: " + c.to_string());
    long d = p.d();
    if (c.kind == ChartId::Kind::V) {
        std::vector<Rat> u = u_coordinate(p);
        std::vector<Rat> coords;
        coords.reserve(u.size() + 1);
        coords.push_back(Rat(1));
        coords.insert(coords.end(), u.begin(), u.end());
        std::vector<long> weights(coords.size(), 1);
        return WPSPoint(std::move(weights), std::move(coords));
    }
    long s = c.stop();
    long K = (d - s - c.n) / 2;
    const Germ& g = stop_side(c, p);
    const Germ& h = free_side(c, p);
    Rat xs = g.leading();
    Germ b_series = (h * g.inverse()).shifted(s).scaled(xs);
    std::vector<Rat> coords;
    coords.reserve(static_cast<size_t>(K) + 1);
    coords.push_back(b_series.coeff(c.n));
    coords.push_back(xs);
    Rat xp = xs;
    for (long j = 2; j <= K; ++j) {
        coords.push_back(xp * b_series.coeff(c.n + 2 * (j - 1)));
        xp *= xs;
    }
    std::vector<long> weights;
    weights.push_back(1);
    for (long j = 1; j <= K; ++j) weights.push_back(j);
    return WPSPoint(std::move(weights), std::move(coords));
}

HeckeParam chart_preimage(long d, const ChartId& c, const WPSPoint& y) {
    validate_chart(d, c);
    if (c.kind == ChartId::Kind::V) {
        if (sgn(y.coords.at(0)) == 0)
            throw domain_error("chart preimage: point outside the affine u-chart");
        long n = c.n;
        long w = d - n;
        std::vector<Rat> ucoeffs;
        for (size_t j = 1; j < y.coords.size(); ++j) ucoeffs.push_back(y.coords[j] / y.coords[0]);
        // canonical representative: minimum side z^n, other side z^n * u
        std::vector<Rat> other(static_cast<size_t>(w - n - 1), Rat(0));
        for (size_t j = 0; j < ucoeffs.size(); ++j) {
            long e = n + 1 + 2 * static_cast<long>(j);
            if (e < w) other[static_cast<size_t>(e - n - 1)] = ucoeffs[j];
        }
        Germ lead = Germ::monomial(Rat(1), n, w);
        Germ rest(n + 1, std::move(other), w);
        return n % 2 == 0 ? HeckeParam(d, rest, lead) : HeckeParam(d, lead, rest);
    }
    long s = c.stop();
    long K = (d - s - c.n) / 2;
    if (y.coords.size() != static_cast<size_t>(K) + 1)
        throw domain_error("chart preimage: wrong coordinate count");
    const Rat& y1 = y.coords.at(1);
    if (sgn(y1) == 0)
        throw domain_error("chart preimage: excluded locus (stop coordinate vanishes)");
    long w = d - c.n;
    Germ g = Germ::monomial(y1, s, w);
    std::vector<Rat> hcoeffs(static_cast<size_t>(w - c.n), Rat(0));
    hcoeffs[0] = y.coords.at(0);
    Rat yp(1);
    for (long j = 1; j <= K - 1; ++j) {
        yp *= y1;
        long e = c.n + 2 * j;
        if (e < w) hcoeffs[static_cast<size_t>(e - c.n)] = y.coords.at(static_cast<size_t>(j) + 1) / yp;
    }
    Germ h(c.n, std::move(hcoeffs), w);
    HeckeParam p = s % 2 != 0 ? HeckeParam(d, g, h) : HeckeParam(d, h, g);
    if (!chart_contains(c, p)) throw domain_error("chart preimage: point is not an image point");
    return p;
}

HeckeParam chart_inverse_order5(const WPSPoint& y) {
    if (y.weights != std::vector<long>{1, 1, 2})
        throw domain_error("order-5 inverse: expects a point of P(1,1,2)");
    const Rat &y0 = y.coords[0], &y1 = y.coords[1], &y2 = y.coords[2];
    if (sgn(y1) == 0) {
        if (sgn(y0) == 0) // distinguished point lands on the point stratum
            return HeckeParam(5, Germ::zero(5), Germ::monomial(Rat(1), 2, 5));
        throw domain_error("order-5 inverse: excluded locus (y0 : 0 : y2)");
    }
    Germ a = Germ::monomial(y1 * y1, 1, 5);
    Germ b = Germ(0, {y0 * y1, Rat(0), y2}, 5);
    return HeckeParam(5, a, b);
}

std::string order5_sign_flag() {
    return "order-5 chart sign flag: series division yields u0(psi(y0:y1:y2)) = "
           "(y1/y0) z - (y2/y0^2) z^3; the printed source formula carries "
           "'+ (y2/y0^2) z^3'. The derived minus sign is used throughout.";
}

std::vector<Rat> coefficient_slots(const HeckeParam& p) {
    std::vector<Rat> slots(static_cast<size_t>(p.d()), Rat(0));
    if (p.is_bottom()) return slots;
    for (long e = 0; e < p.d(); ++e) {
        const Germ& g = e % 2 != 0 ? p.a() : p.b();
        if (e < g.trunc()) slots[static_cast<size_t>(e)] = g.coeff(e);
    }
    return slots;
}

const std::vector<ChartPolynomials>& chart_polynomials(long d) {
    static std::mutex mu;
    static std::map<long, std::vector<ChartPolynomials>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    std::vector<ChartPolynomials> all;
    for (const ChartId& c : chart_atlas(d)) {
        if (c.kind == ChartId::Kind::V) continue;
        long s = c.stop();
        long n = c.n;
        long K = (d - s - n) / 2;
        // D_j = x_s^j * [z^{2j}] (1 + x_{s+2}/x_s z^2 + ...)^{-1}, cleared.
        std::vector<Poly> D(static_cast<size_t>(K), Poly::constant(1));
        for (long j = 1; j < K; ++j) {
            Poly acc;
            for (long i = 1; i <= j; ++i) {
                Poly t = Poly::variable(static_cast<int>(s + 2 * i));
                if (i > 1) t = t * Poly::variable(static_cast<int>(s), static_cast<int>(i - 1));
                acc = acc + t * D[static_cast<size_t>(j - i)];
            }
            D[static_cast<size_t>(j)] = -acc;
        }
        ChartPolynomials cp;
        cp.chart = c;
        cp.weights.push_back(1);
        for (long j = 1; j <= K; ++j) cp.weights.push_back(j);
        cp.polys.push_back(Poly::variable(static_cast<int>(n)));
        cp.polys.push_back(Poly::variable(static_cast<int>(s)));
        for (long kdx = 1; kdx <= K - 1; ++kdx) {
            Poly pk;
            for (long i = 0; i <= kdx; ++i) {
                Poly t = Poly::variable(static_cast<int>(n + 2 * i));
                if (i > 0) t = t * Poly::variable(static_cast<int>(s), static_cast<int>(i));
                pk = pk + t * D[static_cast<size_t>(kdx - i)];
            }
            cp.polys.push_back(pk);
        }
        all.push_back(std::move(cp));
    }
    auto [pos, inserted] = cache.emplace(d, std::move(all));
    return pos->second;
}

GluingReport gluing_check(const ChartId& c1, const ChartId& c2, const HeckeParam& p) {
    if (!chart_contains(c1, p) || !chart_contains(c2, p))
        throw domain_error("gluing check: parameter must lie in both charts");
    GluingReport rep;
    rep.image1 = chart_image(c1, p);
    rep.image2 = chart_image(c2, p);
    HeckeParam q1 = chart_preimage(p.d(), c1, rep.image1);
    HeckeParam q2 = chart_preimage(p.d(), c2, rep.image2);
    rep.canonical_p = canonicalize(p).canonical;
    rep.canonical_q1 = canonicalize(q1).canonical;
    rep.canonical_q2 = canonicalize(q2).canonical;
    rep.same_orbit = rep.canonical_q1 == rep.canonical_p && rep.canonical_q2 == rep.canonical_p;
    // evaluate the coordinate change: section through c1, re-imaged in c2
    rep.coordinate_change_ok = wps_equal(chart_image(c2, q1), rep.image2) &&
                               wps_equal(chart_image(c1, q2), rep.image1);
    // closed-form check: the generated invariant polynomials evaluated on
    // the canonical representative must reproduce the germ-division image
    auto symbolic_matches = [&](const ChartId& c, const WPSPoint& img) {
        if (c.kind == ChartId::Kind::V) return true;
        for (const auto& cp : chart_polynomials(p.d())) {
            if (!(cp.chart == c)) continue;
            std::vector<Rat> slots = coefficient_slots(rep.canonical_p);
            std::vector<Rat> vals;
            for (const auto& poly : cp.polys) vals.push_back(poly.eval(slots));
            return wps_equal(WPSPoint(cp.weights, std::move(vals)), img);
        }
        return false;
    };
    rep.symbolic_ok = symbolic_matches(c1, rep.image1) && symbolic_matches(c2, rep.image2);
    rep.message = rep.pass() ? "consistent" : "inconsistent chart transition";
    return rep;
}

// ---------------------------------------------------------------------------

EvenHeckeParam::EvenHeckeParam(long m, Germ a, Germ b) : m_(m) {
    if (m < 1) throw domain_error("even-zero parameter: local order must be positive");
    if (a.trunc() < m || b.trunc() < m)
        throw precision_error("even-zero parameter: window shorter than z^" + std::to_string(m));
    a_ = a.truncated(m);
    b_ = b.truncated(m);
}

bool EvenHeckeParam::is_zero_class() const { return a_.is_zero() && b_.is_zero(); }

std::optional<long> EvenHeckeParam::raw_order() const {
    auto oa = a_.order(), ob = b_.order();
    if (!oa && !ob) return std::nullopt;
    if (!oa) return ob;
    if (!ob) return oa;
    return std::min(*oa, *ob);
}

std::optional<long> EvenHeckeParam::stratum() const {
    auto n = raw_order();
    if (!n || 2 * *n >= m_) return std::nullopt;
    return n;
}

bool EvenHeckeParam::class_equal(const EvenHeckeParam& o) const {
    if (m_ != o.m_) return false;
    auto n1 = stratum(), n2 = o.stratum();
    if (!n1 || !n2) return !n1 && !n2; // both bottom
    if (*n1 != *n2) return false;
    long w = m_ - *n1;
    return a_.truncated(w) == o.a_.truncated(w) && b_.truncated(w) == o.b_.truncated(w);
}

EvenDegeneration even_degeneration_type(const EvenHeckeParam& p) {
    auto n = p.raw_order();
    if (!n) throw domain_error("even-zero classification: zero class");
    EvenDegeneration out;
    out.n = *n;
    Germ diff = p.b() - p.a();
    Germ sum = p.b() + p.a();
    if (auto o = diff.order()) {
        out.l_plus = *o - out.n;
    } else {
        out.l_plus = p.m() - out.n;
        out.plus_clamped = true;
    }
    if (auto o = sum.order()) {
        out.l_minus = *o - out.n;
    } else {
        out.l_minus = p.m() - out.n;
        out.minus_clamped = true;
    }
    return out;
}

EvenExtensionDatum even_extension_datum(const EvenHeckeParam& p) {
    if (p.is_zero_class()) throw domain_error("extension datum: zero class");
    EvenExtensionDatum out;
    out.type = even_degeneration_type(p);
    Germ diff = p.b() - p.a();
    if (diff.is_zero()) return out; // b = a mod z^m: degenerates to the sigma(y)-side twist
    Germ datum = (p.b() + p.a()) * diff.inverse();
    auto ord = datum.order();
    if (ord && *ord < 0) return out; // pole: classification branch
    out.holomorphic = true;
    out.datum = datum;
    if (ord) out.order = *ord;
    return out;
}

GermMatrix2 even_hecke_field(long m, const Germ& a, const Germ& b) {
    if (m < 1) throw domain_error("even-zero model: local order must be positive");
    GermMatrix2 out = hecke_field(m, a, b);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            auto ord = out.at(i, j).order();
            if (ord && *ord < 0)
                throw domain_error("inconsistent Hecke data: non-holomorphic induced Higgs field");
        }
    return out;
}

} // namespace hfl
