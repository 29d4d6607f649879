#pragma once

#include "hallfock/scalar.hpp"

namespace hallfock {

// One-variable Laurent-expansion utilities for rational functions, used by
// the residue calculus.  All results are exact.

// Coefficient of v^k in the expansion of num/den at v = 0 (den must not be
// identically zero; den is allowed any Laurent structure in v).
Scalar series_coeff_at_zero(const LaurentPoly& num, const LaurentPoly& den, VarId v,
                            std::int32_t k);

// Residue at v = 0, i.e. the coefficient of v^-1 at 0.
Scalar residue_at_zero(const LaurentPoly& num, const LaurentPoly& den, VarId v);
Scalar residue_at_zero(const Scalar& f, VarId v);

// Residue at v = infinity (with sum over all residues = 0).
Scalar residue_at_infinity(const LaurentPoly& num, const LaurentPoly& den, VarId v);
Scalar residue_at_infinity(const Scalar& f, VarId v);

// Sum of the residues at every finite nonzero pole, computed from the total
// residue theorem as -Res_0 - Res_inf.
Scalar residue_sum_excluding_origin(const LaurentPoly& num, const LaurentPoly& den, VarId v);

// Residue at the (possibly multiple) pole v = p, p a monomial in other
// variables.  Pole order is read off from the multiplicity of (v - p) in
// den.
Scalar residue_at_monomial_pole(const Scalar& f, VarId v, const Monomial& p);

} // namespace hallfock
