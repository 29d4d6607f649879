#include "hallfock/monomial.hpp"

#include <algorithm>

#include "hallfock/errors.hpp"

namespace hallfock {

Monomial Monomial::var(VarId v, std::int32_t e) {
    Monomial m;
    if (e != 0) m.e_.push_back({v, e});
    return m;
}

std::int32_t Monomial::exponent(VarId v) const {
    for (const auto& [var, exp] : e_)
        if (var == v) return exp;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.e_.reserve(e_.size() + o.e_.size());
    auto a = e_.begin(), b = o.e_.begin();
    while (a != e_.end() && b != o.e_.end()) {
        if (a->first < b->first) {
            r.e_.push_back(*a++);
        } else if (b->first < a->first) {
            r.e_.push_back(*b++);
        } else {
            std::int32_t s = a->second + b->second;
            if (s != 0) r.e_.push_back({a->first, s});
            ++a;
            ++b;
        }
    }
    r.e_.insert(r.e_.end(), a, e_.end());
    r.e_.insert(r.e_.end(), b, o.e_.end());
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const { return *this * o.pow(-1); }

Monomial Monomial::pow(std::int32_t k) const {
    Monomial r;
    if (k == 0) return r;
    r.e_.reserve(e_.size());
    for (const auto& [v, e] : e_) r.e_.push_back({v, e * k});
    return r;
}

Monomial Monomial::min(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto ia = a.e_.begin(), ib = b.e_.begin();
    while (ia != a.e_.end() || ib != b.e_.end()) {
        VarId v;
        std::int32_t ea = 0, eb = 0;
        if (ib == b.e_.end() || (ia != a.e_.end() && ia->first < ib->first)) {
            v = ia->first;
            ea = ia->second;
            ++ia;
        } else if (ia == a.e_.end() || ib->first < ia->first) {
            v = ib->first;
            eb = ib->second;
            ++ib;
        } else {
            v = ia->first;
            ea = ia->second;
            eb = ib->second;
            ++ia;
            ++ib;
        }
        std::int32_t m = std::min(ea, eb);
        if (m != 0) r.e_.push_back({v, m});
    }
    return r;
}

Monomial Monomial::max(const Monomial& a, const Monomial& b) {
    return (a * b) / Monomial::min(a, b);
}

bool Monomial::divisible_by(const Monomial& o) const {
    for (const auto& [v, e] : o.e_)
        if (exponent(v) < e) return false;
    return true;
}

bool Monomial::has_negative_exponent() const {
    for (const auto& [v, e] : e_)
        if (e < 0) return true;
    return false;
}

bool Monomial::any_of(const std::vector<VarId>& vars) const {
    for (const auto& [v, e] : e_)
        if (std::find(vars.begin(), vars.end(), v) != vars.end()) return true;
    return false;
}

std::int32_t Monomial::extract(VarId v) {
    for (auto it = e_.begin(); it != e_.end(); ++it) {
        if (it->first == v) {
            std::int32_t e = it->second;
            e_.erase(it);
            return e;
        }
    }
    return 0;
}

void Monomial::set_exponent(VarId v, std::int32_t e) {
    extract(v);
    if (e == 0) return;
    auto it = std::lower_bound(e_.begin(), e_.end(), v,
                               [](const Entry& a, VarId b) { return a.first < b; });
    e_.insert(it, {v, e});
}

Monomial Monomial::substituted(VarId v, const Monomial& m) const {
    Monomial r = *this;
    std::int32_t e = r.extract(v);
    if (e == 0) return r;
    return r * m.pow(e);
}

std::int64_t Monomial::total_degree() const {
    std::int64_t d = 0;
    for (const auto& [v, e] : e_) d += e;
    return d;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
    auto ia = a.e_.begin(), ib = b.e_.begin();
    while (ia != a.e_.end() || ib != b.e_.end()) {
        VarId va = ia != a.e_.end() ? ia->first : VarId(INT32_MAX);
        VarId vb = ib != b.e_.end() ? ib->first : VarId(INT32_MAX);
        std::int32_t ea = 0, eb = 0;
        if (va <= vb) ea = ia->second;
        if (vb <= va) eb = ib->second;
        if (va < vb) {
            // a has an exponent on an earlier variable where b has 0
            if (ea != 0) return ea > 0 ? 1 : -1;
            ++ia;
        } else if (vb < va) {
            if (eb != 0) return eb > 0 ? -1 : 1;
            ++ib;
        } else {
            if (ea != eb) return ea > eb ? 1 : -1;
            ++ia;
            ++ib;
        }
    }
    return 0;
}

std::string Monomial::str() const {
    if (e_.empty()) return "1";
    std::string s;
    bool first = true;
    for (const auto& [v, e] : e_) {
        if (!first) s += "*";
        first = false;
        s += VarReg::name(v);
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

} // namespace hallfock
