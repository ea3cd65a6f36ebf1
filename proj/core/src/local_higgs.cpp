#include "hfl/local_higgs.hpp"

#include <algorithm>
#include <sstream>

namespace hfl {

GermMatrix2 GermMatrix2::identity(long trunc) {
    return GermMatrix2(Germ::one(trunc), Germ::zero(trunc), Germ::zero(trunc), Germ::one(trunc));
}

GermMatrix2 GermMatrix2::zero(long trunc) {
    return GermMatrix2(Germ::zero(trunc), Germ::zero(trunc), Germ::zero(trunc), Germ::zero(trunc));
}

GermMatrix2 GermMatrix2::constant(const Rat& a11, const Rat& a12, const Rat& a21, const Rat& a22,
                                  long trunc) {
    return GermMatrix2(Germ::constant(a11, trunc), Germ::constant(a12, trunc),
                       Germ::constant(a21, trunc), Germ::constant(a22, trunc));
}

long GermMatrix2::window() const {
    long w = e_[0].trunc();
    for (int i = 1; i < 4; ++i) w = std::min(w, e_[static_cast<size_t>(i)].trunc());
    return w;
}

GermMatrix2 GermMatrix2::operator+(const GermMatrix2& o) const {
    return GermMatrix2(e_[0] + o.e_[0], e_[1] + o.e_[1], e_[2] + o.e_[2], e_[3] + o.e_[3]);
}

GermMatrix2 GermMatrix2::operator-(const GermMatrix2& o) const {
    return GermMatrix2(e_[0] - o.e_[0], e_[1] - o.e_[1], e_[2] - o.e_[2], e_[3] - o.e_[3]);
}

GermMatrix2 GermMatrix2::operator*(const GermMatrix2& o) const {
    return GermMatrix2(e_[0] * o.e_[0] + e_[1] * o.e_[2], e_[0] * o.e_[1] + e_[1] * o.e_[3],
                       e_[2] * o.e_[0] + e_[3] * o.e_[2], e_[2] * o.e_[1] + e_[3] * o.e_[3]);
}

GermMatrix2 GermMatrix2::scaled(const Germ& g) const {
    return GermMatrix2(e_[0] * g, e_[1] * g, e_[2] * g, e_[3] * g);
}

GermMatrix2 GermMatrix2::scaled(const Rat& c) const {
    return GermMatrix2(e_[0].scaled(c), e_[1].scaled(c), e_[2].scaled(c), e_[3].scaled(c));
}

GermMatrix2 GermMatrix2::shifted(long k) const {
    return GermMatrix2(e_[0].shifted(k), e_[1].shifted(k), e_[2].shifted(k), e_[3].shifted(k));
}

Germ GermMatrix2::trace() const { return e_[0] + e_[3]; }

Germ GermMatrix2::det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

GermMatrix2 GermMatrix2::adjugate() const {
    return GermMatrix2(e_[3], -e_[1], -e_[2], e_[0]);
}

GermMatrix2 GermMatrix2::inverse() const {
    Germ d = det();
    if (d.is_zero()) throw domain_error("singular gauge: det vanishes on the window");
    return adjugate().scaled(d.inverse());
}

bool GermMatrix2::agrees_with(const GermMatrix2& o) const {
    for (int i = 0; i < 4; ++i)
        if (!e_[static_cast<size_t>(i)].agrees_with(o.e_[static_cast<size_t>(i)])) return false;
    return true;
}

std::string GermMatrix2::to_string() const {
    std::ostringstream os;
    os << e_[0].to_string() << ";" << e_[1].to_string() << ";" << e_[2].to_string() << ";"
       << e_[3].to_string();
    return os.str();
}

GermMatrix2 conjugate(const GermMatrix2& phi, const GermMatrix2& g) {
    Germ d = g.det();
    if (d.is_zero()) throw domain_error("singular gauge: det vanishes on the window");
    return (g.adjugate() * phi * g).scaled(d.inverse());
}

void LocalHiggsData::validate() const {
    if (!matrix.trace().is_zero())
        throw domain_error("invalid Higgs data: nonzero trace");
    Germ d = matrix.det();
    long ord = d.order_certified("det order");
    if (ord % 2 != 0) throw domain_error("invalid Higgs data: det has odd vanishing order");
    if (ord != 2 * lambda_order)
        throw domain_error("invalid Higgs data: order(det) = " + std::to_string(ord) +
                           " != 2*lambda_order");
}

long vanishing_divisor(const GermMatrix2& m) {
    std::optional<long> div;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (auto o = m.at(i, j).order())
                div = div ? std::min(*div, *o) : *o;
    if (!div) throw precision_error("vanishing divisor: matrix vanishes on its whole window");
    // a zero entry with a window shorter than the candidate could hide a
    // lower-order term
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!m.at(i, j).order() && m.at(i, j).trunc() < *div)
                throw precision_error("vanishing divisor: indeterminate at this precision");
    return *div;
}

namespace {

// Constant gauge P = [phi0*v | v] bringing the leading matrix of phi to the
// shape [[0,1],[*,0]] (Cayley-Hamilton: phi0^2 = -det(phi0) Id).
GermMatrix2 jordan_shape_gauge(const GermMatrix2& phi, long window) {
    Rat p[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) p[i][j] = phi.at(i, j).coeff(0);
    const Rat candidates[3][2] = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}};
    for (const auto& v : candidates) {
        Rat w0 = p[0][0] * v[0] + p[0][1] * v[1];
        Rat w1 = p[1][0] * v[0] + p[1][1] * v[1];
        Rat detP = w0 * v[1] - w1 * v[0];
        if (sgn(detP) != 0) return GermMatrix2::constant(w0, v[0], w1, v[1], window);
    }
    throw domain_error("invalid Higgs data: leading matrix is scalar");
}

} // namespace

NormalFormResult normal_form(const LocalHiggsData& h) {
    h.validate();
    const GermMatrix2& m = h.matrix;
    long lambda = h.lambda_order;
    long div = vanishing_divisor(m);
    if (div > lambda) throw domain_error("invalid Higgs data: div(Phi) exceeds lambda order");

    GermMatrix2 phi = m.shifted(-div);
    if (phi.window() <= 0)
        throw precision_error("normal form: window too short to certify the leading matrix");

    GermMatrix2 p = jordan_shape_gauge(phi, phi.window());
    GermMatrix2 phi1 = conjugate(phi, p);

    // phi1 = [[a, b],[c, -a]] with b a unit; [[b,0],[-a,1]] finishes the job.
    Germ a = phi1.at(0, 0), b = phi1.at(0, 1);
    GermMatrix2 hgauge(b, Germ::zero(b.trunc()), -a, Germ::one(a.trunc()));
    GermMatrix2 gauge = p * hgauge;
    GermMatrix2 phi2 = conjugate(phi1, hgauge); // [[0,1],[-det(phi),0]]

    Germ w = phi2.at(1, 0); // z^{2L-2D} * unit^2
    long rel = 2 * (lambda - div);
    NormalFormResult out;
    out.div_order = div;
    out.lambda_order = lambda;
    Germ unit2 = w.shifted(-rel);
    if (auto s = unit2.sqrt(); s && !s->is_zero()) {
        GermMatrix2 g3(s->inverse(), Germ::zero(s->trunc()), Germ::zero(s->trunc()),
                       Germ::one(s->trunc()));
        gauge = gauge * g3;
        out.scalar_unit = *s;
    } else {
        out.residual_unit = unit2;
    }
    out.gauge = gauge;
    out.reduced = conjugate(m, gauge);
    return out;
}

GermMatrix2 hecke_field(long twist, const Germ& a, const Germ& b) {
    if (a.is_zero() && b.is_zero())
        throw domain_error("inconsistent Hecke data: direction vanishes on the window");
    const bool swap = b.is_zero();
    const Germ& g = swap ? a : b; // invertible side
    const Germ& f = swap ? b : a;
    Germ ginv = g.inverse();
    Germ diag = (f * ginv).shifted(twist);        // (f/g) z^twist
    Germ off1 = g * g - f * f;                    // g^2 - f^2
    Germ off2 = (ginv * ginv).shifted(2 * twist); // z^{2 twist} / g^2
    return GermMatrix2(diag, off1, off2, -diag);
}

GermMatrix2 hecke_higgs(long d, const Germ& a, const Germ& b) {
    if (d < 1 || d % 2 == 0) throw domain_error("hecke_higgs: twist order must be odd and positive");
    if (!a.sigma_odd()) throw domain_error("hecke_higgs: a must be sigma-odd");
    if (!b.sigma_even()) throw domain_error("hecke_higgs: b must be sigma-even");
    GermMatrix2 out = hecke_field(d, a, b);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            auto ord = out.at(i, j).order();
            if (ord && *ord < 0)
                throw domain_error("inconsistent Hecke data: non-holomorphic induced Higgs field");
        }
    Germ expected_det = Germ::monomial(Rat(-1), 2 * d, out.det().trunc());
    if (!out.det().agrees_with(expected_det))
        throw domain_error("inconsistent Hecke data: det != -z^{2d}");
    return out;
}

namespace {

struct KernelVec {
    Germ first, second;
};

// Primitive kernel generator of the singular matrix M, from the row with
// the better-conditioned cofactor vector.
KernelVec primitive_kernel(const GermMatrix2& M) {
    KernelVec r1{M.at(0, 1), -M.at(0, 0)};
    KernelVec r2{M.at(1, 1), -M.at(1, 0)};
    auto common_order = [](const KernelVec& v) -> std::optional<long> {
        auto o1 = v.first.order(), o2 = v.second.order();
        if (!o1 && !o2) return std::nullopt;
        if (!o1) return o2;
        if (!o2) return o1;
        return std::min(*o1, *o2);
    };
    auto c1 = common_order(r1), c2 = common_order(r2);
    if (!c1 && !c2) throw precision_error("eigen kernel: matrix vanishes on its window");
    KernelVec v = (!c2 || (c1 && *c1 <= *c2)) ? r1 : r2;
    long co = (!c2 || (c1 && *c1 <= *c2)) ? *c1 : *c2;
    v.first = v.first.shifted(-co);
    v.second = v.second.shifted(-co);
    return v;
}

long twist_of_kernel(const GermMatrix2& m, const KernelVec& w) {
    // Section order relative to the frame that the induced inclusion uses:
    // recovered from the off-diagonal entry carrying the double twist.
    auto o21 = m.at(1, 0).order();
    auto o12 = m.at(0, 1).order();
    long two_twist;
    if (o21) {
        long e = w.second.order_certified("eigen twist");
        two_twist = *o21 - 2 * e;
    } else if (o12) {
        long e = w.first.order_certified("eigen twist");
        two_twist = *o12 - 2 * e;
    } else {
        return 0; // split diagonal model
    }
    if (two_twist < 0 || two_twist % 2 != 0)
        throw domain_error("eigen twist: non-integral twist order (matrix not of model shape)");
    return two_twist / 2;
}

} // namespace

EigenTwistOrders eigen_twist_orders(const GermMatrix2& m, long lambda_order) {
    Germ d = m.det();
    long ord = d.order_certified("eigen twist: det order");
    if (ord != 2 * lambda_order)
        throw domain_error("eigen twist: order(det) != 2*lambda_order");
    Germ unit2 = (-d).shifted(-2 * lambda_order);
    auto u = unit2.sqrt();
    if (!u || u->is_zero())
        throw domain_error("eigen twist: -det/z^{2L} has no rational square root");
    Germ lam = u->shifted(lambda_order);
    GermMatrix2 lam_id(lam, Germ::zero(lam.trunc()), Germ::zero(lam.trunc()), lam);
    EigenTwistOrders out;
    out.plus = twist_of_kernel(m, primitive_kernel(m + lam_id));
    out.minus = twist_of_kernel(m, primitive_kernel(m - lam_id));
    return out;
}

} // namespace hfl
