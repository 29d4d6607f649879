#pragma once

#include <map>
#include <string>

#include "hallfock/poly.hpp"

namespace hallfock {

// Element of Q(q1, q2, u1.., z1..) in canonical form: den is an ordinary
// integer-primitive polynomial with no monomial factor and positive
// lex-leading coefficient, gcd(num, den) is a unit, and the single Laurent
// monomial of the fraction lives in num.  Equal field values have identical
// representations.  Immutable after construction.
class Scalar {
public:
    Scalar() : num_(), den_(LaurentPoly::constant(1)) {}
    Scalar(int v) : Scalar(Rat(v)) {}
    Scalar(const Rat& v) : num_(LaurentPoly::constant(v)), den_(LaurentPoly::constant(1)) {}

    static Scalar normalize(const LaurentPoly& num, const LaurentPoly& den);
    static Scalar from_poly(const LaurentPoly& p) { return normalize(p, LaurentPoly::constant(1)); }
    static Scalar variable(VarId v, std::int32_t e = 1);
    static Scalar monomial(const Monomial& m, const Rat& c = 1);

    static Scalar q1();
    static Scalar q2();
    static Scalar q(); // q1*q2
    static Scalar u(int i);
    static Scalar z(int a);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_rational(Rat* out = nullptr) const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(int k) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const { return num_.equals(o.num_) && den_.equals(o.den_); }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator==(int v) const { return *this == Scalar(v); }
    bool operator!=(int v) const { return !(*this == v); }

    // Exact value at a rational point covering all variables; throws
    // evaluation_pole_error if the denominator vanishes there.
    Rat eval_at(const std::map<VarId, Rat>& assignment) const;

    bool depends_on(VarId v) const { return num_.depends_on(v) || den_.depends_on(v); }
    bool depends_on_z() const;

    Scalar substituted(VarId v, const Monomial& m) const;
    Scalar derivative(VarId v) const;

    // Fixed serialization grammar: integer coefficients, q1 q2 u<i> z<a>,
    // ^ integer powers, *, +, -, and at most one top-level /.
    std::string str() const;
    static Scalar parse(const std::string& text);

private:
    LaurentPoly num_, den_;
};

Scalar operator*(int c, const Scalar& s);
Scalar operator+(int c, const Scalar& s);
Scalar operator-(int c, const Scalar& s);

// (1 - q1^k)(1 - q2^k), the ubiquitous pairing factor.
Scalar qq_factor(int k);

} // namespace hallfock
