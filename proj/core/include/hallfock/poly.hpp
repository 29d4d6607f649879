#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "hallfock/monomial.hpp"

namespace hallfock {

using Rat = mpq_class;

// Sparse Laurent polynomial with exact rational coefficients.  Terms are
// kept sorted by monomial (lex descending), no zero coefficients stored.
class LaurentPoly {
public:
    struct Term {
        Monomial mono;
        Rat coeff;
    };

    LaurentPoly() = default;
    static LaurentPoly zero() { return {}; }
    static LaurentPoly constant(const Rat& c);
    static LaurentPoly monomial(const Monomial& m, const Rat& c = 1);
    static LaurentPoly variable(VarId v, std::int32_t e = 1);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return t_.size() == 1; }
    bool is_one() const;
    std::size_t term_count() const { return t_.size(); }
    const std::vector<Term>& terms() const { return t_; }

    // Leading term in the lex-descending order.
    const Term& leading() const;
    const Rat& coeff_of(const Monomial& m) const;
    Rat constant_term() const { return coeff_of(Monomial()); }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    bool operator==(const LaurentPoly& o) const { return equals(o); }
    bool operator!=(const LaurentPoly& o) const { return !equals(o); }

    LaurentPoly scaled(const Rat& c) const;
    LaurentPoly mono_scaled(const Monomial& m, const Rat& c = 1) const;
    LaurentPoly pow(unsigned k) const;

    bool equals(const LaurentPoly& o) const;

    // Componentwise minimum of exponents over all terms (the largest
    // monomial m with *this = m * ordinary polynomial).
    Monomial min_exponents() const;
    bool is_ordinary() const;

    // gcd of the integer numerators / lcm of denominators of the
    // coefficients, signed by the leading coefficient.  Zero for the zero
    // polynomial.
    Rat content() const;

    std::vector<VarId> variables() const;
    bool depends_on(VarId v) const;
    std::int32_t degree(VarId v) const;
    std::int32_t low_degree(VarId v) const;

    // Dense coefficient list in v from low_degree(v) to degree(v); the
    // returned polys do not involve v.
    std::vector<LaurentPoly> coeffs_in(VarId v, std::int32_t& low) const;
    static LaurentPoly from_coeffs_in(VarId v, std::int32_t low,
                                      const std::vector<LaurentPoly>& cs);

    LaurentPoly derivative(VarId v) const;
    LaurentPoly substituted(VarId v, const Monomial& m) const;
    LaurentPoly substituted_poly(VarId v, const LaurentPoly& p) const;

    // Exact evaluation; requires every variable with a negative exponent to
    // get a nonzero value.
    Rat eval(const std::map<VarId, Rat>& point) const;

    std::string str() const;

    // Exact division: q with a == b*q, or false.  a and b must be ordinary
    // in their common variables (Laurent monomial factors are fine, they
    // are stripped and re-applied).
    static bool try_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q);

    // Multivariate gcd over Q of the ordinary parts (Laurent monomial
    // factors of the inputs are ignored).  Result is integer-primitive with
    // positive leading coefficient; gcd(0,0) = 0.
    static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

    // Internal: construct from a sorted term vector (no checks).
    static LaurentPoly from_sorted(std::vector<Term> ts);

private:
    std::vector<Term> t_; // sorted by monomial, lex descending
};

LaurentPoly operator*(const Rat& c, const LaurentPoly& p);

} // namespace hallfock
