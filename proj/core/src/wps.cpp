#include "hfl/wps.hpp"

#include <numeric>
#include <sstream>

namespace hfl {

WPSPoint::WPSPoint(std::vector<long> w, std::vector<Rat> x)
    : weights(std::move(w)), coords(std::move(x)) {
    if (weights.size() != coords.size())
        throw domain_error("weighted point: weight/coordinate length mismatch");
    if (weights.empty()) throw domain_error("weighted point: empty");
    bool any = false;
    for (const auto& c : coords) any = any || sgn(c) != 0;
    if (!any) throw domain_error("weighted point: all coordinates vanish");
    for (long wi : weights)
        if (wi < 1) throw domain_error("weighted point: weights must be positive");
}

std::vector<bool> WPSPoint::support() const {
    std::vector<bool> s(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) s[i] = sgn(coords[i]) != 0;
    return s;
}

WPSPoint WPSPoint::normalized() const {
    for (size_t i = 0; i < coords.size(); ++i) {
        if (weights[i] == 1 && sgn(coords[i]) != 0) {
            Rat lambda = Rat(1) / coords[i];
            WPSPoint out = *this;
            for (size_t j = 0; j < coords.size(); ++j)
                out.coords[j] *= rat_pow(lambda, static_cast<unsigned long>(weights[j]));
            return out;
        }
    }
    return *this;
}

std::string WPSPoint::to_string() const {
    std::ostringstream os;
    os << "w=";
    for (size_t i = 0; i < weights.size(); ++i) os << (i ? "," : "") << weights[i];
    os << ";x=";
    for (size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << rat_to_string(coords[i]);
    return os.str();
}

bool wps_equal(const WPSPoint& x, const WPSPoint& y) {
    if (x.weights != y.weights) throw domain_error("weighted point equality: weight mismatch");
    if (x.support() != y.support()) return false;
    for (size_t i = 0; i < x.coords.size(); ++i) {
        if (sgn(x.coords[i]) == 0) continue;
        for (size_t j = i + 1; j < x.coords.size(); ++j) {
            if (sgn(x.coords[j]) == 0) continue;
            unsigned long wi = static_cast<unsigned long>(x.weights[i]);
            unsigned long wj = static_cast<unsigned long>(x.weights[j]);
            Rat lhs = rat_pow(x.coords[i], wj) * rat_pow(y.coords[j], wi);
            Rat rhs = rat_pow(y.coords[i], wj) * rat_pow(x.coords[j], wi);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

WPSPoint torus_act(const std::vector<Rat>& t, const WPSPoint& x) {
    if (t.size() + 1 != x.coords.size())
        throw domain_error("torus action: expected " + std::to_string(x.coords.size() - 1) +
                           " scalars");
    for (const auto& s : t)
        if (sgn(s) == 0) throw domain_error("torus action: zero scalar");
    WPSPoint out = x;
    for (size_t i = 1; i < x.coords.size(); ++i)
        out.coords[i] *= rat_pow(t[i - 1], static_cast<unsigned long>(x.weights[i]));
    return out;
}

bool is_orbifold_singular(const WPSPoint& x) {
    long g = 0;
    for (size_t i = 0; i < x.coords.size(); ++i)
        if (sgn(x.coords[i]) != 0) g = std::gcd(g, x.weights[i]);
    return g > 1;
}

} // namespace hfl
