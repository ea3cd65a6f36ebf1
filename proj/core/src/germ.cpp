#include "hfl/germ.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace hfl {

long default_trunc() {
    static const long t = [] {
        if (const char* env = std::getenv("HFL_TRUNC")) {
            long v = std::strtol(env, nullptr, 10);
            if (v >= 2 && v <= 512) return v;
        }
        return 16L;
    }();
    return t;
}

Germ::Germ(long val, std::vector<Rat> coeffs, long trunc)
    : val_(val), trunc_(trunc), coeffs_(std::move(coeffs)) {
    normalize();
}

Germ Germ::zero(long trunc) { return Germ(0, {}, trunc); }

Germ Germ::monomial(Rat c, long exp, long trunc) {
    return Germ(exp, {std::move(c)}, trunc);
}

void Germ::normalize() {
    // drop the unknown region
    if (!coeffs_.empty() && val_ + static_cast<long>(coeffs_.size()) > trunc_)
        coeffs_.resize(std::max<long>(0, trunc_ - val_));
    size_t lead = 0;
    while (lead < coeffs_.size() && sgn(coeffs_[lead]) == 0) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        val_ = 0;
        return;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        val_ += static_cast<long>(lead);
    }
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::optional<long> Germ::order() const {
    if (coeffs_.empty()) return std::nullopt;
    return val_;
}

long Germ::order_certified(const char* what) const {
    if (coeffs_.empty())
        throw precision_error(std::string(what) + ": indeterminate at this precision (germ vanishes on its window)");
    return val_;
}

const Rat& Germ::leading() const {
    if (coeffs_.empty()) throw domain_error("leading coefficient of zero germ");
    return coeffs_.front();
}

Rat Germ::coeff(long k) const {
    if (k >= trunc_)
        throw precision_error("coefficient at exponent " + std::to_string(k) +
                              " is outside the window z^" + std::to_string(trunc_));
    if (coeffs_.empty() || k < val_ || k >= val_ + static_cast<long>(coeffs_.size()))
        return Rat(0);
    return coeffs_[static_cast<size_t>(k - val_)];
}

Germ Germ::operator-() const {
    Germ r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Germ operator+(const Germ& x, const Germ& y) {
    long t = std::min(x.trunc_, y.trunc_);
    long lo = std::min(x.coeffs_.empty() ? t : x.val_, y.coeffs_.empty() ? t : y.val_);
    std::vector<Rat> c;
    if (lo < t) {
        c.resize(static_cast<size_t>(t - lo), Rat(0));
        auto acc = [&](const Germ& g) {
            for (size_t i = 0; i < g.coeffs_.size(); ++i) {
                long e = g.val_ + static_cast<long>(i);
                if (e < t) c[static_cast<size_t>(e - lo)] += g.coeffs_[i];
            }
        };
        acc(x);
        acc(y);
    }
    return Germ(lo, std::move(c), t);
}

Germ operator-(const Germ& x, const Germ& y) { return x + (-y); }

Germ operator*(const Germ& x, const Germ& y) {
    long vx = x.coeffs_.empty() ? x.trunc_ : x.val_;
    long vy = y.coeffs_.empty() ? y.trunc_ : y.val_;
    long t = std::min(x.trunc_ + vy, y.trunc_ + vx);
    if (x.coeffs_.empty() || y.coeffs_.empty()) return Germ::zero(t);
    long lo = vx + vy;
    std::vector<Rat> c(static_cast<size_t>(std::max<long>(t - lo, 0)), Rat(0));
    for (size_t i = 0; i < x.coeffs_.size(); ++i) {
        long ei = x.val_ + static_cast<long>(i);
        for (size_t j = 0; j < y.coeffs_.size(); ++j) {
            long e = ei + y.val_ + static_cast<long>(j);
            if (e < t) c[static_cast<size_t>(e - lo)] += x.coeffs_[i] * y.coeffs_[j];
        }
    }
    return Germ(lo, std::move(c), t);
}

Germ Germ::scaled(const Rat& c) const {
    if (sgn(c) == 0) return zero(trunc_);
    Germ r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

Germ Germ::shifted(long k) const {
    Germ r = *this;
    r.val_ += k;
    r.trunc_ += k;
    r.normalize();
    return r;
}

Germ Germ::truncated(long t) const {
    if (t > trunc_)
        throw precision_error("cannot widen window from z^" + std::to_string(trunc_) +
                              " to z^" + std::to_string(t));
    Germ r = *this;
    r.trunc_ = t;
    r.normalize();
    return r;
}

Germ Germ::inverse() const {
    if (coeffs_.empty()) throw domain_error("non-invertible: zero germ");
    long k = trunc_ - val_; // relative window of the unit part
    std::vector<Rat> u(coeffs_.begin(), coeffs_.end());
    u.resize(static_cast<size_t>(k), Rat(0));
    std::vector<Rat> d(static_cast<size_t>(k), Rat(0));
    Rat lead_inv = Rat(1) / u[0];
    d[0] = lead_inv;
    for (long m = 1; m < k; ++m) {
        Rat s(0);
        for (long j = 1; j <= m; ++j) s += u[static_cast<size_t>(j)] * d[static_cast<size_t>(m - j)];
        d[static_cast<size_t>(m)] = -lead_inv * s;
    }
    return Germ(-val_, std::move(d), k - val_);
}

Germ Germ::sigma() const {
    Germ r = *this;
    for (size_t i = 0; i < r.coeffs_.size(); ++i)
        if ((r.val_ + static_cast<long>(i)) % 2 != 0) r.coeffs_[i] = -r.coeffs_[i];
    return r;
}

std::pair<Germ, Germ> Germ::parity_split() const {
    std::vector<Rat> even = coeffs_, odd = coeffs_;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        bool is_odd = ((val_ + static_cast<long>(i)) % 2 + 2) % 2 == 1;
        (is_odd ? even : odd)[i] = Rat(0);
    }
    return {Germ(val_, std::move(even), trunc_), Germ(val_, std::move(odd), trunc_)};
}

bool Germ::sigma_even() const { return parity_split().second.is_zero(); }
bool Germ::sigma_odd() const { return parity_split().first.is_zero(); }

Germ Germ::pow(unsigned long e) const {
    if (e == 0) return Germ::one(trunc_);
    Germ r = *this;
    for (unsigned long i = 1; i < e; ++i) r = r * (*this);
    return r;
}

std::optional<Germ> Germ::sqrt() const {
    if (coeffs_.empty()) return zero((trunc_ + 1) / 2); // s^2 = 0 mod z^T pins s mod z^ceil(T/2)
    if (((val_ % 2) + 2) % 2 != 0) return std::nullopt;
    auto s0 = rat_sqrt(coeffs_[0]);
    if (!s0) return std::nullopt;
    long k = trunc_ - val_;
    std::vector<Rat> u(coeffs_.begin(), coeffs_.end());
    u.resize(static_cast<size_t>(k), Rat(0));
    std::vector<Rat> s(static_cast<size_t>(k), Rat(0));
    s[0] = *s0;
    Rat half_inv = Rat(1) / (Rat(2) * s[0]);
    for (long m = 1; m < k; ++m) {
        Rat acc = u[static_cast<size_t>(m)];
        for (long j = 1; j < m; ++j) acc -= s[static_cast<size_t>(j)] * s[static_cast<size_t>(m - j)];
        s[static_cast<size_t>(m)] = acc * half_inv;
    }
    return Germ(val_ / 2, std::move(s), trunc_ - val_ / 2);
}

bool Germ::operator==(const Germ& o) const {
    return val_ == o.val_ && trunc_ == o.trunc_ && coeffs_ == o.coeffs_;
}

bool Germ::agrees_with(const Germ& o) const {
    long t = std::min(trunc_, o.trunc_);
    return (truncated(t) - o.truncated(t)).is_zero();
}

std::string Germ::to_string() const {
    std::ostringstream os;
    os << "v=" << (coeffs_.empty() ? 0 : val_) << ";t=" << trunc_ << ";";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ",";
        os << rat_to_string(coeffs_[i]);
    }
    return os.str();
}

} // namespace hfl
