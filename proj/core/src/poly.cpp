#include "hfl/poly.hpp"

#include "hfl/errors.hpp"

#include <sstream>

namespace hfl {

Poly Poly::constant(Int c) {
    Poly p;
    if (sgn(c) != 0) p.terms_[{}] = std::move(c);
    return p;
}

Poly Poly::variable(int v, int power) {
    Poly p;
    if (power == 0) return constant(1);
    p.terms_[{{v, power}}] = 1;
    return p;
}

void Poly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = sgn(it->second) == 0 ? terms_.erase(it) : std::next(it);
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.terms_[m] += c;
    r.prune();
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m;
            size_t i = 0, j = 0;
            while (i < m1.size() || j < m2.size()) {
                if (j == m2.size() || (i < m1.size() && m1[i].first < m2[j].first))
                    m.push_back(m1[i++]);
                else if (i == m1.size() || m2[j].first < m1[i].first)
                    m.push_back(m2[j++]);
                else {
                    m.emplace_back(m1[i].first, m1[i].second + m2[j].second);
                    ++i, ++j;
                }
            }
            r.terms_[m] += c1 * c2;
        }
    }
    r.prune();
    return r;
}

Poly Poly::scaled(const Int& c) const {
    Poly r = *this;
    for (auto& [m, coef] : r.terms_) coef *= c;
    r.prune();
    return r;
}

Rat Poly::eval(const std::vector<Rat>& values) const {
    Rat out(0);
    for (const auto& [m, c] : terms_) {
        Rat t(c);
        for (const auto& [v, p] : m) {
            if (v < 0 || static_cast<size_t>(v) >= values.size())
                throw domain_error("polynomial evaluation: missing value for x" + std::to_string(v));
            t *= rat_pow(values[static_cast<size_t>(v)], static_cast<unsigned long>(p));
        }
        out += t;
    }
    return out;
}

bool Poly::is_homogeneous(int degree) const {
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (const auto& [v, p] : m) d += p;
        if (d != degree) return false;
    }
    return true;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int a = c;
        if (first) {
            if (sgn(a) < 0) os << "-", a = -a;
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        bool coef_one = (a == 1) && !m.empty();
        if (!coef_one) os << a.get_str();
        bool need_star = !coef_one;
        for (const auto& [v, p] : m) {
            if (need_star) os << "*";
            os << "x" << v;
            if (p > 1) os << "^" << p;
            need_star = true;
        }
        first = false;
    }
    return os.str();
}

} // namespace hfl
