#include "hfl/report.hpp"

#include <json.hpp>

#include <sstream>

namespace hfl {

using nlohmann::json;

namespace {

std::string dump(const json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

json wps_json(const WPSPoint& y) {
    json j;
    j["weights"] = y.weights;
    json coords = json::array();
    for (const auto& c : y.coords) coords.push_back(rat_to_string(c));
    j["coords"] = coords;
    j["text"] = y.to_string();
    j["normalized"] = y.normalized().to_string();
    return j;
}

json numerology_json(const QDProfile& p) {
    SpectralNumerology num = spectral_numerology(p);
    json j;
    j["n_odd"] = num.n_odd;
    j["n_even"] = num.n_even;
    j["normalized_genus"] = num.normalized_genus;
    j["prym_dim"] = num.prym_dim;
    j["branch_count"] = num.branch_count;
    j["unbranched"] = num.unbranched;
    j["formula"] = {{"normalized_genus", "2g-1+n_odd/2"}, {"prym_dim", "g-1+n_odd/2"}};
    return j;
}

json profile_json(const QDProfile& p) {
    return json{{"genus", p.genus},
                {"zeros", p.mults},
                {"assume_no_global_sqrt", p.assume_no_global_sqrt}};
}

json stratum_json(const Stratum& s) {
    json j;
    j["D"] = s.divisor.coeffs;
    j["deg"] = s.deg;
    j["dim"] = s.dim;
    j["prym_dim"] = s.prym_dim;
    j["r1"] = s.r1;
    j["r2"] = s.r2;
    json fibre = json::array();
    for (const auto& f : s.per_zero) fibre.push_back(f.describe());
    j["fibre"] = fibre;
    if (s.real_points) j["real_points"] = *s.real_points;
    j["is_open"] = s.is_open;
    j["is_lowest"] = s.is_lowest;
    return j;
}

json strata_json(const QDProfile& p) {
    json j;
    j["profile"] = profile_json(p);
    j["numerology"] = numerology_json(p);
    json arr = json::array();
    for (const Stratum& s : enumerate_strata(p)) arr.push_back(stratum_json(s));
    j["strata"] = arr;
    json edges = json::array();
    for (const PosetEdge& e : degeneration_poset(p)) edges.push_back({e.from, e.to});
    j["poset_edges"] = edges;
    if (p.assume_no_global_sqrt) {
        ComponentClassification c = classify_components(p);
        j["classification"] = c.kind == ComponentKind::Irreducible
                                  ? "irreducible"
                                  : "connected, 4 irreducible components";
        j["classification_note"] = c.note;
    } else {
        j["classification"] = "hypothesis not asserted";
    }
    j["global_fibre"] = global_fibre_description(p).text;
    j["warnings"] = profile_warnings(p);
    j["formula"] = {{"dim", "3g-3-deg(D)"},
                    {"dim_bundle", "prym_dim + r1 + r2"},
                    {"real_points", "2^{2g-2+n-n0}"}};
    return j;
}

} // namespace

std::string strata_report_json(const QDProfile& p, bool pretty) {
    return dump(strata_json(p), pretty);
}

std::string strata_report_text(const QDProfile& p) {
    std::ostringstream os;
    SpectralNumerology num = spectral_numerology(p);
    os << "profile: genus " << p.genus << ", zeros (";
    for (size_t i = 0; i < p.mults.size(); ++i) os << (i ? "," : "") << p.mults[i];
    os << ")\n";
    os << "normalized spectral curve: genus " << num.normalized_genus << ", prym dim "
       << num.prym_dim << (num.unbranched ? ", unbranched" : "") << "\n";
    auto strata = enumerate_strata(p);
    os << "strata: " << strata.size() << "\n";
    for (const Stratum& s : strata) {
        os << "  D=(";
        for (size_t i = 0; i < s.divisor.coeffs.size(); ++i)
            os << (i ? "," : "") << s.divisor.coeffs[i];
        os << ") deg=" << s.deg << " dim=" << s.dim << " r1=" << s.r1 << " r2=" << s.r2;
        if (s.real_points) os << " real=" << *s.real_points;
        if (s.is_open) os << " [open]";
        if (s.is_lowest) os << " [lowest]";
        os << "\n";
    }
    if (p.assume_no_global_sqrt) {
        ComponentClassification c = classify_components(p);
        os << "components: " << c.note << "\n";
    }
    os << "global: " << global_fibre_description(p).text << "\n";
    for (const auto& w : profile_warnings(p)) os << "warning: " << w << "\n";
    return os.str();
}

std::string poset_dot(const QDProfile& p) {
    auto strata = enumerate_strata(p);
    auto edges = degeneration_poset(p);
    std::ostringstream os;
    os << "digraph degeneration {\n  rankdir=BT;\n";
    for (size_t i = 0; i < strata.size(); ++i) {
        os << "  s" << i << " [label=\"D=(";
        for (size_t j = 0; j < strata[i].divisor.coeffs.size(); ++j)
            os << (j ? "," : "") << strata[i].divisor.coeffs[j];
        os << ")\\ndim " << strata[i].dim << "\"];\n";
    }
    for (const PosetEdge& e : edges) os << "  s" << e.from << " -> s" << e.to << ";\n";
    os << "}\n";
    return os.str();
}

std::string realpoints_report_json(const QDProfile& p, bool pretty) {
    json j;
    j["profile"] = profile_json(p);
    j["numerology"] = numerology_json(p);
    json arr = json::array();
    unsigned long long total = 0;
    for (const Stratum& s : enumerate_strata(p)) {
        json e;
        e["D"] = s.divisor.coeffs;
        e["real_points"] = *s.real_points;
        total += *s.real_points;
        arr.push_back(e);
    }
    j["per_stratum"] = arr;
    j["total"] = total;
    j["formula"] = {{"per_stratum", "2^{2g-2+n-n0} = 2^{2 prym_dim} * 2^{n_even - n0}"},
                    {"all_odd_total", "2^{2g-2} prod(m_i+1)"}};
    if (p.n_even() == 0) {
        unsigned long long closed = 1ULL << (2 * p.genus - 2);
        for (long m : p.mults) closed *= static_cast<unsigned long long>(m + 1);
        j["all_odd_closed_form"] = closed;
    }
    j["warnings"] = profile_warnings(p);
    return dump(j, pretty);
}

std::string realpoints_report_text(const QDProfile& p) {
    std::ostringstream os;
    unsigned long long total = 0;
    for (const Stratum& s : enumerate_strata(p)) {
        os << "  D=(";
        for (size_t i = 0; i < s.divisor.coeffs.size(); ++i)
            os << (i ? "," : "") << s.divisor.coeffs[i];
        os << "): " << *s.real_points << "\n";
        total += *s.real_points;
    }
    os << "total: " << total << "\n";
    for (const auto& w : profile_warnings(p)) os << "warning: " << w << "\n";
    return os.str();
}

namespace {

json canon_json(const HeckeParam& p) {
    json j;
    j["d"] = p.d();
    if (p.is_bottom()) {
        j["stratum"] = "bottom";
        return j;
    }
    j["stratum"] = p.stratum();
    Canonicalized c = canonicalize(p);
    j["canonical"] = {{"a", c.canonical.a().to_string()}, {"b", c.canonical.b().to_string()}};
    j["witness"] = c.witness.to_string();
    if (p.d() - 2 * p.stratum() > 1) {
        json u = json::array();
        for (const auto& r : u_coordinate(p)) u.push_back(rat_to_string(r));
        j["u"] = u;
        j["u_basis"] = "z, z^3, ..., z^{d-2n-2}";
    } else {
        j["u"] = "point stratum, no coordinates";
    }
    json charts = json::array();
    for (const ChartId& c2 : chart_atlas(p.d())) {
        if (c2.kind == ChartId::Kind::V || !chart_contains(c2, p)) continue;
        json e;
        e["chart"] = c2.to_string();
        e["image"] = wps_json(chart_image(c2, p));
        charts.push_back(e);
    }
    j["charts"] = charts;
    j["formula"] = {{"canonical", "n even: (a z^n / b, z^n); n odd: (z^n, b z^n / a)"},
                    {"u", "n even: a/b mod z^{d-2n}; n odd: b/a mod z^{d-2n}"}};
    return j;
}

} // namespace

std::string canon_report_json(const HeckeParam& p, bool pretty) {
    return dump(canon_json(p), pretty);
}

std::string canon_report_text(const HeckeParam& p) {
    std::ostringstream os;
    os << "d = " << p.d() << "\n";
    if (p.is_bottom()) {
        os << "stratum: bottom class [0]\n";
        return os.str();
    }
    os << "stratum: n = " << p.stratum() << "\n";
    Canonicalized c = canonicalize(p);
    os << "canonical a: " << c.canonical.a().to_string() << "\n";
    os << "canonical b: " << c.canonical.b().to_string() << "\n";
    if (p.d() - 2 * p.stratum() > 1) {
        os << "u = (";
        auto u = u_coordinate(p);
        for (size_t i = 0; i < u.size(); ++i) os << (i ? ", " : "") << rat_to_string(u[i]);
        os << ") on basis z, z^3, ..., z^{d-2n-2}\n";
    } else {
        os << "point stratum, no coordinates\n";
    }
    for (const ChartId& c2 : chart_atlas(p.d())) {
        if (c2.kind == ChartId::Kind::V || !chart_contains(c2, p)) continue;
        os << "chart " << c2.to_string() << ": "
           << chart_image(c2, p).normalized().to_string() << "\n";
    }
    return os.str();
}

std::string even_report_json(const EvenHeckeParam& p, bool pretty) {
    json j;
    j["m"] = p.m();
    j["a"] = p.a().to_string();
    j["b"] = p.b().to_string();
    if (p.is_zero_class()) {
        j["stratum"] = "bottom";
        return dump(j, pretty);
    }
    auto s = p.stratum();
    j["stratum"] = s ? json(*s) : json("bottom");
    EvenDegeneration t = even_degeneration_type(p);
    j["degeneration"] = {{"n", t.n},
                         {"l_plus", t.l_plus},
                         {"l_minus", t.l_minus},
                         {"plus_clamped", t.plus_clamped},
                         {"minus_clamped", t.minus_clamped}};
    EvenExtensionDatum e = even_extension_datum(p);
    if (e.holomorphic) {
        j["extension_datum"] = e.datum.to_string();
        if (e.order) j["extension_datum_order"] = *e.order;
    } else {
        j["extension_datum"] = "degenerates: eigenline twisted on one side only";
    }
    j["formula"] = {{"datum", "(b+a)/(b-a) mod z^m"},
                    {"twists", "l_plus = ord(b-a)-n, l_minus = ord(b+a)-n"}};
    return dump(j, pretty);
}

std::string even_report_text(const EvenHeckeParam& p) {
    std::ostringstream os;
    os << "m = " << p.m() << "\n";
    if (p.is_zero_class()) {
        os << "zero class [0]\n";
        return os.str();
    }
    EvenDegeneration t = even_degeneration_type(p);
    os << "n = " << t.n << ", twist at y: " << t.l_plus << (t.plus_clamped ? " (clamped)" : "")
       << ", twist at sigma(y): " << t.l_minus << (t.minus_clamped ? " (clamped)" : "") << "\n";
    EvenExtensionDatum e = even_extension_datum(p);
    if (e.holomorphic)
        os << "extension datum: " << e.datum.to_string()
           << (e.order ? " (order " + std::to_string(*e.order) + ")" : "") << "\n";
    else
        os << "extension datum degenerates: eigenline twisted on one side only\n";
    return os.str();
}

namespace {

json poly_json(const Poly& p) {
    json monos = json::array();
    for (const auto& [m, c] : p.terms()) {
        json mono;
        mono["c"] = c.get_str();
        json vars = json::array();
        for (const auto& [v, e] : m) vars.push_back({v, e});
        mono["m"] = vars;
        monos.push_back(mono);
    }
    return json{{"text", p.to_string()}, {"monomials", monos}};
}

} // namespace

std::string atlas_report_json(long d, bool pretty) {
    json j;
    j["d"] = d;
    j["variables"] = "x_e is the coefficient of z^e; odd e from the sigma-odd germ a, even e from b";
    json charts = json::array();
    for (const auto& cp : chart_polynomials(d)) {
        json e;
        e["chart"] = cp.chart.to_string();
        e["n"] = cp.chart.n;
        e["stop"] = cp.chart.stop();
        e["weights"] = cp.weights;
        json gens = json::array();
        for (const auto& p : cp.polys) gens.push_back(poly_json(p));
        e["generators"] = gens;
        charts.push_back(e);
    }
    j["charts"] = charts;
    json vcharts = json::array();
    for (const ChartId& c : chart_atlas(d))
        if (c.kind == ChartId::Kind::V)
            vcharts.push_back({{"chart", c.to_string()},
                               {"target", "P^" + std::to_string((d - 2 * c.n - 1) / 2)},
                               {"map", "affine u-chart"}});
    j["v_charts"] = vcharts;
    if (d == 5) j["sign_flag"] = order5_sign_flag();
    return dump(j, pretty);
}

std::string atlas_report_text(long d) {
    std::ostringstream os;
    os << "atlas for d = " << d << "\n";
    for (const ChartId& c : chart_atlas(d)) {
        if (c.kind == ChartId::Kind::V) {
            os << "  " << c.to_string() << ": affine u-chart into P^"
               << (d - 2 * c.n - 1) / 2 << "\n";
            continue;
        }
    }
    for (const auto& cp : chart_polynomials(d)) {
        os << "  " << cp.chart.to_string() << " -> P(";
        for (size_t i = 0; i < cp.weights.size(); ++i) os << (i ? "," : "") << cp.weights[i];
        os << "): ";
        for (size_t i = 0; i < cp.polys.size(); ++i)
            os << (i ? " : " : "") << cp.polys[i].to_string();
        os << "\n";
    }
    if (d == 5) os << order5_sign_flag() << "\n";
    return os.str();
}

std::string hecke_field_report_json(long d, const Germ& a, const Germ& b, bool pretty) {
    json j;
    j["d"] = d;
    j["a"] = a.to_string();
    j["b"] = b.to_string();
    GermMatrix2 m = hecke_higgs(d, a, b);
    j["matrix"] = m.to_string();
    j["vanishing_divisor"] = vanishing_divisor(m);
    EigenTwistOrders tw = eigen_twist_orders(m, d);
    j["eigen_twist"] = {{"plus", tw.plus}, {"minus", tw.minus}};
    j["formula"] = {{"matrix", "[[(a/b) z^d, b^2-a^2],[z^{2d}/b^2, -(a/b) z^d]]"},
                    {"vanishing_divisor", "2 min(ord a, ord b)"}};
    return dump(j, pretty);
}

std::string normal_form_report_json(const LocalHiggsData& h, bool pretty) {
    json j;
    j["matrix"] = h.matrix.to_string();
    j["lambda_order"] = h.lambda_order;
    NormalFormResult r = normal_form(h);
    j["div_order"] = r.div_order;
    j["gauge"] = r.gauge.to_string();
    j["reduced"] = r.reduced.to_string();
    if (r.scalar_unit) j["scalar_unit"] = r.scalar_unit->to_string();
    if (r.residual_unit) j["residual_unit"] = r.residual_unit->to_string();
    j["formula"] = {{"reduced", "z^D * s * [[0,1],[z^{2L-2D},0]]"}};
    return dump(j, pretty);
}

} // namespace hfl
