#include "hallfock/poly.hpp"

#include <algorithm>

#include "hallfock/errors.hpp"

namespace hallfock {

namespace {
bool term_before(const LaurentPoly::Term& a, const LaurentPoly::Term& b) {
    return Monomial::compare(a.mono, b.mono) > 0; // lex descending
}
} // namespace

LaurentPoly LaurentPoly::constant(const Rat& c) {
    LaurentPoly p;
    if (c != 0) p.t_.push_back({Monomial(), c});
    return p;
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const Rat& c) {
    LaurentPoly p;
    if (c != 0) p.t_.push_back({m, c});
    return p;
}

LaurentPoly LaurentPoly::variable(VarId v, std::int32_t e) {
    return monomial(Monomial::var(v, e));
}

LaurentPoly LaurentPoly::from_sorted(std::vector<Term> ts) {
    LaurentPoly p;
    p.t_ = std::move(ts);
    return p;
}

bool LaurentPoly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_[0].mono.is_one());
}

bool LaurentPoly::is_one() const {
    return t_.size() == 1 && t_[0].mono.is_one() && t_[0].coeff == 1;
}

const LaurentPoly::Term& LaurentPoly::leading() const {
    if (t_.empty()) throw argument_error("leading term of zero polynomial");
    return t_.front();
}

const Rat& LaurentPoly::coeff_of(const Monomial& m) const {
    static const Rat kZero = 0;
    auto it = std::lower_bound(t_.begin(), t_.end(), m, [](const Term& t, const Monomial& mm) {
        return Monomial::compare(t.mono, mm) > 0;
    });
    if (it != t_.end() && it->mono == m) return it->coeff;
    return kZero;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r;
    r.t_.reserve(t_.size() + o.t_.size());
    auto a = t_.begin(), b = o.t_.begin();
    while (a != t_.end() && b != o.t_.end()) {
        int c = Monomial::compare(a->mono, b->mono);
        if (c > 0) {
            r.t_.push_back(*a++);
        } else if (c < 0) {
            r.t_.push_back(*b++);
        } else {
            Rat s = a->coeff + b->coeff;
            if (s != 0) r.t_.push_back({a->mono, std::move(s)});
            ++a;
            ++b;
        }
    }
    r.t_.insert(r.t_.end(), a, t_.end());
    r.t_.insert(r.t_.end(), b, o.t_.end());
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.t_) t.coeff = -t.coeff;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) { return *this = *this + o; }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this = *this - o; }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    if (o.t_.size() == 1) return mono_scaled(o.t_[0].mono, o.t_[0].coeff);
    if (t_.size() == 1) return o.mono_scaled(t_[0].mono, t_[0].coeff);
    std::map<Monomial, Rat> acc;
    for (const auto& a : t_)
        for (const auto& b : o.t_) {
            Monomial m = a.mono * b.mono;
            auto [it, fresh] = acc.try_emplace(std::move(m), 0);
            it->second += a.coeff * b.coeff;
        }
    LaurentPoly r;
    r.t_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) r.t_.push_back({m, std::move(c)});
    std::sort(r.t_.begin(), r.t_.end(), term_before);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
    if (c == 0) return {};
    LaurentPoly r = *this;
    for (auto& t : r.t_) t.coeff *= c;
    return r;
}

LaurentPoly LaurentPoly::mono_scaled(const Monomial& m, const Rat& c) const {
    if (c == 0) return {};
    LaurentPoly r;
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.push_back({t.mono * m, t.coeff * c});
    // multiplying by a fixed monomial preserves the order
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly r = constant(1);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return r;
}

bool LaurentPoly::equals(const LaurentPoly& o) const {
    if (t_.size() != o.t_.size()) return false;
    for (std::size_t i = 0; i < t_.size(); ++i)
        if (t_[i].coeff != o.t_[i].coeff || !(t_[i].mono == o.t_[i].mono)) return false;
    return true;
}

Monomial LaurentPoly::min_exponents() const {
    if (t_.empty()) return {};
    Monomial m = t_[0].mono;
    for (std::size_t i = 1; i < t_.size(); ++i) m = Monomial::min(m, t_[i].mono);
    return m;
}

bool LaurentPoly::is_ordinary() const {
    for (const auto& t : t_)
        if (t.mono.has_negative_exponent()) return false;
    return true;
}

Rat LaurentPoly::content() const {
    if (t_.empty()) return 0;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& t : t_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    }
    Rat c(num_gcd, den_lcm);
    c.canonicalize();
    if (t_[0].coeff < 0) c = -c;
    return c;
}

std::vector<VarId> LaurentPoly::variables() const {
    std::vector<VarId> vs;
    for (const auto& t : t_)
        for (const auto& [v, e] : t.mono.entries())
            if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    return vs;
}

bool LaurentPoly::depends_on(VarId v) const {
    for (const auto& t : t_)
        if (t.mono.exponent(v) != 0) return true;
    return false;
}

std::int32_t LaurentPoly::degree(VarId v) const {
    std::int32_t d = 0;
    bool first = true;
    for (const auto& t : t_) {
        std::int32_t e = t.mono.exponent(v);
        if (first || e > d) d = e;
        first = false;
    }
    return d;
}

std::int32_t LaurentPoly::low_degree(VarId v) const {
    std::int32_t d = 0;
    bool first = true;
    for (const auto& t : t_) {
        std::int32_t e = t.mono.exponent(v);
        if (first || e < d) d = e;
        first = false;
    }
    return d;
}

std::vector<LaurentPoly> LaurentPoly::coeffs_in(VarId v, std::int32_t& low) const {
    low = low_degree(v);
    std::int32_t high = degree(v);
    std::vector<LaurentPoly> cs(static_cast<std::size_t>(high - low + 1));
    for (const auto& t : t_) {
        Monomial m = t.mono;
        std::int32_t e = m.extract(v);
        cs[static_cast<std::size_t>(e - low)] += monomial(m, t.coeff);
    }
    return cs;
}

LaurentPoly LaurentPoly::from_coeffs_in(VarId v, std::int32_t low,
                                        const std::vector<LaurentPoly>& cs) {
    LaurentPoly r;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        std::int32_t e = low + static_cast<std::int32_t>(i);
        r += cs[i].mono_scaled(Monomial::var(v, e));
    }
    return r;
}

LaurentPoly LaurentPoly::derivative(VarId v) const {
    LaurentPoly r;
    for (const auto& t : t_) {
        std::int32_t e = t.mono.exponent(v);
        if (e == 0) continue;
        Monomial m = t.mono;
        m.set_exponent(v, e - 1);
        r += monomial(m, t.coeff * e);
    }
    return r;
}

LaurentPoly LaurentPoly::substituted(VarId v, const Monomial& m) const {
    LaurentPoly r;
    for (const auto& t : t_) r += monomial(t.mono.substituted(v, m), t.coeff);
    return r;
}

LaurentPoly LaurentPoly::substituted_poly(VarId v, const LaurentPoly& p) const {
    std::int32_t low;
    std::vector<LaurentPoly> cs = coeffs_in(v, low);
    if (low < 0 && p.is_zero())
        throw evaluation_pole_error("substituting 0 into a negative power");
    if (low < 0) throw argument_error("polynomial substitution into a Laurent exponent");
    LaurentPoly r;
    // Horner
    for (std::size_t i = cs.size(); i-- > 0;) r = r * p + cs[i];
    return r;
}

Rat LaurentPoly::eval(const std::map<VarId, Rat>& point) const {
    Rat sum = 0;
    for (const auto& t : t_) {
        Rat v = t.coeff;
        for (const auto& [var, e] : t.mono.entries()) {
            auto it = point.find(var);
            if (it == point.end())
                throw argument_error("missing assignment for " + VarReg::name(var));
            const Rat& x = it->second;
            if (x == 0 && e < 0) throw evaluation_pole_error();
            unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
            mpz_class pn, pd;
            mpz_pow_ui(pn.get_mpz_t(), x.get_num().get_mpz_t(), a);
            mpz_pow_ui(pd.get_mpz_t(), x.get_den().get_mpz_t(), a);
            Rat p(pn, pd);
            p.canonicalize();
            if (e < 0) p = 1 / p;
            v *= p;
        }
        sum += v;
    }
    return sum;
}

std::string LaurentPoly::str() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : t_) {
        Rat c = t.coeff;
        if (first) {
            if (c < 0) {
                s += "-";
                c = -c;
            }
        } else {
            s += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        first = false;
        if (t.mono.is_one()) {
            s += c.get_str();
        } else {
            if (c != 1) s += c.get_str() + "*";
            s += t.mono.str();
        }
    }
    return s;
}

LaurentPoly operator*(const Rat& c, const LaurentPoly& p) { return p.scaled(c); }

} // namespace hallfock
