#pragma once

#include "hallfock/report.hpp"
#include "hallfock/series.hpp"
#include "hallfock/symfunc.hpp"

namespace hallfock {
namespace shuffle {

// The zeta kernel (1-xq1)(1-xq2)/((1-x)(1-xq)) at an arbitrary argument.
Scalar zeta_fn(const Scalar& x);

// A linear denominator factor z_{zi} - scale * z_{zj} (slots 0-based,
// scale a monomial in q1, q2).
struct LinFactor {
    int zi, zj;
    Monomial scale;
    bool operator<(const LinFactor& o) const {
        if (zi != o.zi) return zi < o.zi;
        if (zj != o.zj) return zj < o.zj;
        return Monomial::compare(scale, o.scale) < 0;
    }
    bool operator==(const LinFactor& o) const {
        return zi == o.zi && zj == o.zj && scale == o.scale;
    }
    LaurentPoly poly() const;
};

// Rational function in z_1..z_n with the poles tracked structurally:
// value = num / (den_mono * prod den_factors).
struct RationalFn {
    int nvars = 0;
    LaurentPoly num;
    Monomial den_mono;
    std::vector<LinFactor> den_factors; // multiset

    Scalar value() const;
    RationalFn permuted(const std::vector<int>& perm) const;
    bool is_symmetric_exact() const;
};

// Symmetric rational function; symmetry is verified exactly on
// construction (n <= 3 in exact mode).
struct ShuffleElement {
    RationalFn fn;
};

// wall-crossing kernel r_{n,m}; includes the global (-q)^n
RationalFn r_kernel(int n, int m);
// floor-difference exponent sequence of r_{n,m}
std::vector<int> d_sequence(int n, int m);

// Sum over all n! permutations (no 1/n! prefactor).
ShuffleElement symmetrize(const RationalFn& f);

// (1/(n!n'!)) Sym[A B' prod zeta(z_i/z_j)], the shuffle product.
ShuffleElement star(const ShuffleElement& A, const ShuffleElement& B);

// Laurent coefficient of prod z_i^{t_i} of G on the equal-modulus contours
// (|q1|, |q2| > 1), by iterated one-variable residue extraction.
Scalar equal_contour_coeff(const RationalFn& G, const std::vector<int>& t);

// The operator (pref) * CT[ G * X(z_1..z_N) ] with X the negative-half
// vertex factor, applied to f.
SymFunc apply_equal_contour(const RationalFn& G, const Rat& pref, const SymFunc& f);

// Psi(H_{-n,m}) in its symmetrized equal-contour form (1/n!) Int R_{n,m} X.
SymFunc psi_H_minus_via_shuffle(int n, int m, const SymFunc& f);

// Verifies that the equal-contour integral of star(R_{n,m}, R_{n',m'})
// agrees with the composition of Fock operators on all p_lambda up to cap.
IdentityResult star_vs_fock(int n, int m, int n2, int m2, int cap);

} // namespace shuffle
} // namespace hallfock
