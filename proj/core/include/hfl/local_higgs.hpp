#pragma once

#include "hfl/germ.hpp"

#include <array>
#include <optional>
#include <string>

namespace hfl {

// 2x2 matrix over germs. Carries local Higgs fields (the dz factor and the
// twisting-line frame are implicit), gauge and transition matrices. Each
// entry tracks its own window; window() is the common reliable one.
class GermMatrix2 {
  public:
    GermMatrix2() = default;
    GermMatrix2(Germ a11, Germ a12, Germ a21, Germ a22)
        : e_{{std::move(a11), std::move(a12), std::move(a21), std::move(a22)}} {}

    static GermMatrix2 identity(long trunc);
    static GermMatrix2 zero(long trunc);
    static GermMatrix2 constant(const Rat& a11, const Rat& a12, const Rat& a21, const Rat& a22,
                                long trunc);

    const Germ& at(int i, int j) const { return e_[static_cast<size_t>(2 * i + j)]; }
    Germ& at(int i, int j) { return e_[static_cast<size_t>(2 * i + j)]; }

    long window() const;

    GermMatrix2 operator+(const GermMatrix2& o) const;
    GermMatrix2 operator-(const GermMatrix2& o) const;
    GermMatrix2 operator*(const GermMatrix2& o) const;
    GermMatrix2 scaled(const Germ& g) const;
    GermMatrix2 scaled(const Rat& c) const;
    GermMatrix2 shifted(long k) const; // multiply every entry by z^k

    Germ trace() const;
    Germ det() const;
    GermMatrix2 adjugate() const;
    // adj/det inverse; requires det invertible as a Laurent germ.
    GermMatrix2 inverse() const;

    bool agrees_with(const GermMatrix2& o) const;

    std::string to_string() const; // four germ strings joined by ';'

  private:
    std::array<Germ, 4> e_{};
};

// g^{-1} * phi * g via adjugate/det. Throws domain_error("singular gauge")
// when det(g) vanishes on its window.
GermMatrix2 conjugate(const GermMatrix2& phi, const GermMatrix2& g);

// Local Higgs field in a fixed frame: traceless, det of certified vanishing
// order 2*lambda_order.
struct LocalHiggsData {
    GermMatrix2 matrix;
    long lambda_order = 1;

    void validate() const; // trace == 0 on window, order(det) == 2*lambda_order
};

// min over entries of the vanishing order, certified against every entry's
// window. Throws precision_error when the window cannot certify it.
long vanishing_divisor(const GermMatrix2& m);

struct NormalFormResult {
    long div_order = 0;    // D: vanishing order of the matrix
    long lambda_order = 0; // Lambda: half the vanishing order of det
    GermMatrix2 gauge;     // possibly non-unimodular (det a unit germ)
    GermMatrix2 reduced;   // = conjugate(input, gauge)
    // reduced = z^D * scalar_unit * [[0,1],[z^{2L-2D},0]] when the square
    // root of -det/z^{2L} exists over Q; otherwise scalar_unit is empty and
    // reduced is z^D*[[0,1],[W,0]] with residual_unit = W/z^{2L-2D}.
    std::optional<Germ> scalar_unit;
    std::optional<Germ> residual_unit;
};

// Gauge reduction to the companion shape. Follows the constructive proof:
// factor z^D, constant gauge to phi(0) = [[0,1],[*,0]], then conjugate by
// [[b,0],[-a,1]]; the square root in the classical unimodular gauge is
// avoided since scalars cancel under conjugation.
NormalFormResult normal_form(const LocalHiggsData& h);

// Higgs field induced on the Hecke transformation at an order-d zero with
// direction germs (a, b), in the induced frame:
//   [[ (a/b) z^d, b^2 - a^2 ], [ z^{2d}/b^2, -(a/b) z^d ]].
// When b vanishes on its window the symmetric formula (roles of a and b
// exchanged, from the reordered frame) is used. No parity assumptions.
GermMatrix2 hecke_field(long twist, const Germ& a, const Germ& b);

// Parity-checked wrapper for odd-order zeros: d odd, a sigma-odd,
// b sigma-even, not both zero. Verifies all four entries come out
// holomorphic and det == -z^{2d} exactly ("inconsistent Hecke data" else).
GermMatrix2 hecke_higgs(long d, const Germ& a, const Germ& b);

struct EigenTwistOrders {
    long plus = 0;
    long minus = 0;
};

// Local twist orders of the two eigenline inclusions, from kernel germ
// vectors of (m -+ z^Lambda * u * Id) where u = sqrt(-det/z^{2 Lambda}).
// The "plus" branch is the kernel of (m + z^Lambda u Id), which for Hecke
// models is spanned by (b - a, -z^d/b): with that labeling an order-2
// even-zero model with a0 = b0 has plus-twist 1 (twist at y) and an
// a0 = -b0 model has minus-twist 1 (twist at sigma y).
EigenTwistOrders eigen_twist_orders(const GermMatrix2& m, long lambda_order);

} // namespace hfl
