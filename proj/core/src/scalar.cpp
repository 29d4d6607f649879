#include "hallfock/scalar.hpp"

#include "hallfock/errors.hpp"
#include "hallfock/varreg.hpp"

namespace hallfock {

Scalar Scalar::normalize(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw division_by_zero_error();
    Scalar s;
    if (num.is_zero()) return s;

    // clear Laurent monomials from both parts
    Monomial mn = num.min_exponents();
    Monomial md = den.min_exponents();
    LaurentPoly n = num.mono_scaled(mn.inverse());
    LaurentPoly d = den.mono_scaled(md.inverse());

    if (!d.is_one()) {
        LaurentPoly g = LaurentPoly::gcd(n, d);
        if (!g.is_one() && !g.is_constant()) {
            LaurentPoly qn, qd;
            if (!LaurentPoly::try_divide(n, g, qn) || !LaurentPoly::try_divide(d, g, qd))
                throw internal_error("gcd does not divide");
            n = qn;
            d = qd;
        }
    }

    // denominator: integer-primitive, positive lex-leading coefficient
    Rat c = d.content();
    d = d.scaled(1 / c);
    n = n.scaled(1 / c).mono_scaled(mn / md);
    s.num_ = n;
    s.den_ = d;
    return s;
}

Scalar Scalar::variable(VarId v, std::int32_t e) {
    return from_poly(LaurentPoly::variable(v, e));
}

Scalar Scalar::monomial(const Monomial& m, const Rat& c) {
    return from_poly(LaurentPoly::monomial(m, c));
}

Scalar Scalar::q1() { return variable(VarReg::q1); }
Scalar Scalar::q2() { return variable(VarReg::q2); }
Scalar Scalar::q() { return monomial(Monomial::var(VarReg::q1) * Monomial::var(VarReg::q2)); }
Scalar Scalar::u(int i) { return variable(VarReg::u(i)); }
Scalar Scalar::z(int a) { return variable(VarReg::z(a)); }

bool Scalar::is_rational(Rat* out) const {
    if (!den_.is_one() || !num_.is_constant()) return false;
    if (out) *out = num_.is_zero() ? Rat(0) : num_.constant_term();
    return true;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_.equals(o.den_)) return normalize(num_ + o.num_, den_);
    return normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    Scalar s = *this;
    s.num_ = -s.num_;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return Scalar();
    // cross-reduce to keep the gcds small
    Scalar a = normalize(num_, o.den_);
    Scalar b = normalize(o.num_, den_);
    Scalar s;
    s.num_ = a.num_ * b.num_;
    s.den_ = a.den_ * b.den_;
    // contents may have shifted; re-normalize the denominator sign/content
    Rat c = s.den_.is_zero() ? Rat(1) : s.den_.content();
    if (c != 1) {
        s.den_ = s.den_.scaled(1 / c);
        s.num_ = s.num_.scaled(1 / c);
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw division_by_zero_error("inverse of zero");
    return normalize(den_, num_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(int k) const {
    if (k == 0) return Scalar(1);
    Scalar base = k < 0 ? inverse() : *this;
    unsigned n = static_cast<unsigned>(k < 0 ? -k : k);
    Scalar r(1);
    while (n > 0) {
        if (n & 1u) r = r * base;
        n >>= 1u;
        if (n > 0) base = base * base;
    }
    return r;
}

Rat Scalar::eval_at(const std::map<VarId, Rat>& assignment) const {
    Rat d = den_.eval(assignment);
    if (d == 0) throw evaluation_pole_error();
    return num_.eval(assignment) / d;
}

bool Scalar::depends_on_z() const {
    for (const auto& p : {&num_, &den_})
        for (VarId v : p->variables())
            if (VarReg::is_z(v)) return true;
    return false;
}

Scalar Scalar::substituted(VarId v, const Monomial& m) const {
    return normalize(num_.substituted(v, m), den_.substituted(v, m));
}

Scalar Scalar::derivative(VarId v) const {
    // (n/d)' = (n'd - nd')/d^2
    return normalize(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

std::string Scalar::str() const {
    if (is_zero()) return "0";
    // scale both sides so the printed coefficients are integers
    mpz_class lcm = 1;
    for (const auto& t : num_.terms())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    LaurentPoly n = num_.scaled(Rat(lcm));
    LaurentPoly d = den_.scaled(Rat(lcm));
    if (d.is_one()) return n.str();
    auto wrap = [](const LaurentPoly& p) {
        if (p.term_count() == 1 && p.leading().coeff > 0) return p.str();
        return "(" + p.str() + ")";
    };
    return wrap(n) + "/" + wrap(d);
}

Scalar operator*(int c, const Scalar& s) { return Scalar(c) * s; }
Scalar operator+(int c, const Scalar& s) { return Scalar(c) + s; }
Scalar operator-(int c, const Scalar& s) { return Scalar(c) - s; }

Scalar qq_factor(int k) {
    return (1 - Scalar::variable(VarReg::q1, k)) * (1 - Scalar::variable(VarReg::q2, k));
}

} // namespace hallfock
