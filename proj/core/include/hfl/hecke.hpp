#pragma once

#include "hfl/germ.hpp"
#include "hfl/local_higgs.hpp"
#include "hfl/poly.hpp"
#include "hfl/wps.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hfl {

// Hecke parameter at an order-d zero, d odd: a pair of direction germs
// (a sigma-odd, b sigma-even) modulo the defining equivalence, stored in
// reduced form mod z^{d-n} with n = min(ord a, ord b). Classes whose data
// vanishes on the reduced window (2n >= d) collapse to the distinguished
// bottom class [0].
class HeckeParam {
  public:
    HeckeParam(long d, Germ a, Germ b);

    static HeckeParam bottom(long d);

    long d() const { return d_; }
    bool is_bottom() const { return bottom_; }
    // n = min(ord a, ord b); throws domain_error on the bottom class.
    long stratum() const;
    const Germ& a() const { return a_; }
    const Germ& b() const { return b_; }

    bool operator==(const HeckeParam& o) const;
    bool operator!=(const HeckeParam& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    HeckeParam() = default;
    long d_ = 0;
    long n_ = 0;
    bool bottom_ = false;
    Germ a_, b_;
};

// Element of the invariant unit-germ group at the zero: a sigma-even unit
// germ modulo z^d.
class GroupElement {
  public:
    GroupElement(long d, Germ phi);
    long d() const { return d_; }
    const Germ& germ() const { return phi_; }

  private:
    long d_;
    Germ phi_;
};

// Orbit map (phi a, phi b), reduced. Mismatched d -> domain_error.
HeckeParam act(const GroupElement& g, const HeckeParam& p);

// n = min(ord a, ord b); nullopt for the bottom class.
std::optional<long> stratum_of(const HeckeParam& p);

struct Canonicalized {
    HeckeParam canonical;
    // group germ carrying p to the canonical representative (known on a
    // window sufficient for the class action)
    Germ witness;
};

// Unique orbit representative: for n even (b realizes the minimum) the pair
// is carried to (a z^n / b, z^n); for n odd to (z^n, b z^n / a). Two
// parameters share a group orbit iff their canonical forms are equal, so
// this operation doubles as the orbit-equality oracle.
Canonicalized canonicalize(const HeckeParam& p);

// Affine orbit coordinates on the stratum: the coefficients of
// u = a/b (n even) resp. b/a (n odd) mod z^{d-2n} on the odd monomial
// basis z, z^3, ..., z^{d-2n-2}. Point stratum (n = (d-1)/2) has none.
std::vector<Rat> u_coordinate(const HeckeParam& p);

// Chart identifiers of the orbit atlas. V(n) is the affine u-chart of the
// n-th stratum; N(l, n) with l - n odd is the two-stratum chart whose
// invariants land in P(1,1,2,...,(d-l-n)/2); kN(k; l, n) with l - n even
// refines it with stop index k (k - n odd, l < k <= d-n-2).
struct ChartId {
    enum class Kind { V, N, KN };
    Kind kind = Kind::V;
    long n = 0;
    long l = 0;
    long k = 0;

    static ChartId V(long n) { return {Kind::V, n, 0, 0}; }
    static ChartId N(long l, long n) { return {Kind::N, n, l, 0}; }
    static ChartId KN(long k, long l, long n) { return {Kind::KN, n, l, k}; }

    // stop index: the exponent whose coefficient is the normalized leading
    // invariant (l for N charts, k for refined ones)
    long stop() const { return kind == Kind::KN ? k : l; }

    bool operator==(const ChartId& o) const {
        return kind == o.kind && n == o.n && l == o.l && k == o.k;
    }
    std::string to_string() const;
};

// All coordinate charts for Heck_d (V-charts below the point stratum,
// N charts, refined kN charts), validated against d.
std::vector<ChartId> chart_atlas(long d);

bool chart_contains(const ChartId& c, const HeckeParam& p);

// Invariant-polynomial image. V(n): (1 : u_1 : u_3 : ...) in P^r with unit
// weights. N/kN: (B_n : x_s : x_s B_{n+2} : ... : x_s^{K-1} B_{d-s-2}) in
// P(1, 1, 2, ..., K) where B = h x_s z^s / g is the stop-normalized series
// and K = (d - s - n)/2. Throws "chart membership violated".
WPSPoint chart_image(const ChartId& c, const HeckeParam& p);

// Distinguished section of the chart map: rebuilds the representative
// (g, h) = (Y1 z^s, Y0 z^n + sum_j Y_{j+1}/Y1^j z^{n+2j}). Requires the
// weight-1 stop coordinate Y1 to be nonzero (V-charts: Y0 != 0).
HeckeParam chart_preimage(long d, const ChartId& c, const WPSPoint& y);

// Printed inverse of the order-5 chart N(1,0):
//   (y0 : y1 : y2) |-> (y1^2 z, y0 y1 + y2 z^2),
// extended to (0:0:1) by the point class (0, z^2). Excluded locus
// (y0 : 0 : y2) with y0 != 0 -> domain_error.
HeckeParam chart_inverse_order5(const WPSPoint& y);

// Series division gives u0 after this inverse as (y1/y0) z - (y2/y0^2) z^3;
// the printed source formula carries "+" on the z^3 term. Reports quote
// this flag rather than silently adopting either sign.
std::string order5_sign_flag();

struct GluingReport {
    bool same_orbit = false;
    bool coordinate_change_ok = false;
    bool symbolic_ok = true; // symbolic closed-form check, when applicable
    WPSPoint image1, image2;
    HeckeParam canonical_p = HeckeParam::bottom(1);
    HeckeParam canonical_q1 = HeckeParam::bottom(1);
    HeckeParam canonical_q2 = HeckeParam::bottom(1);
    std::string message;
    bool pass() const { return same_orbit && coordinate_change_ok && symbolic_ok; }
};

// Verifies that the two chart images of p determine the same orbit (via
// canonical forms of the chart sections) and that the coordinate change
// between the charts evaluates exactly on p, including the closed-form
// polynomial expressions where one side is a u-chart.
GluingReport gluing_check(const ChartId& c1, const ChartId& c2, const HeckeParam& p);

// Symbolic generators of the chart maps: integer-coefficient polynomials in
// the coefficient slots x_0..x_{d-1} (odd slots from a, even slots from b).
// Generated once per d by series division with polynomial coefficients;
// guarded for concurrent first use.
struct ChartPolynomials {
    ChartId chart;
    std::vector<long> weights;
    std::vector<Poly> polys;
};
const std::vector<ChartPolynomials>& chart_polynomials(long d);

// Coefficient-slot vector of the reduced representative (zero beyond the
// class window), for evaluating chart polynomials.
std::vector<Rat> coefficient_slots(const HeckeParam& p);

// ---------------------------------------------------------------------------
// Hecke parameters at one preimage of an even-order zero: local order m,
// no parity constraints. Stored raw mod z^m; the class reduction
// (mod z^{m-n}, bottom when 2n >= m) applies to equality only, since the
// degeneration classifiers need the raw data.
class EvenHeckeParam {
  public:
    EvenHeckeParam(long m, Germ a, Germ b);

    long m() const { return m_; }
    const Germ& a() const { return a_; }
    const Germ& b() const { return b_; }

    bool is_zero_class() const; // a = b = 0 mod z^m
    // min(ord a, ord b) on the raw data; nullopt when both vanish mod z^m.
    std::optional<long> raw_order() const;
    // class stratum: n when 2n < m, nullopt for the bottom class.
    std::optional<long> stratum() const;

    bool class_equal(const EvenHeckeParam& o) const;

  private:
    long m_;
    Germ a_, b_;
};

struct EvenDegeneration {
    long n = 0;       // common vanishing order of the direction
    long l_plus = 0;  // y-side eigenline twist: ord(b-a) - n
    long l_minus = 0; // sigma(y)-side twist: ord(b+a) - n
    bool plus_clamped = false;  // ord(b-a) exceeded the window
    bool minus_clamped = false; // ord(b+a) exceeded the window
};

// Degeneration classification of an even-zero Hecke parameter; the twist
// orders are cross-validated against eigen_twist_orders of the induced
// Higgs field (plus = n + l_plus, minus = n + l_minus).
EvenDegeneration even_degeneration_type(const EvenHeckeParam& p);

struct EvenExtensionDatum {
    bool holomorphic = false;
    Germ datum;                 // (b+a)/(b-a) mod the window, when holomorphic
    std::optional<long> order;  // its vanishing order (= local Higgs-divisor
                                // coefficient on the nonvanishing locus n = 0)
    EvenDegeneration type;      // classification branch otherwise
};

EvenExtensionDatum even_extension_datum(const EvenHeckeParam& p);

// Induced local Higgs field for the even-zero model (exponent m, no parity).
GermMatrix2 even_hecke_field(long m, const Germ& a, const Germ& b);

} // namespace hfl
