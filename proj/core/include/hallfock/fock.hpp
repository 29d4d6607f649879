#pragma once

#include <optional>

#include "hallfock/symfunc.hpp"

namespace hallfock {
namespace fock {

// Generators of the elliptic Hall algebra as they act on the Fock space.
// P and Q live on rays through a primitive lattice vector; central charges
// are represented, hard-wired to (c1, c2) = (1, q^-1).
struct Generator {
    enum class Kind { H, P, Q };
    Kind kind = Kind::H;
    int n = 0;
    int m = 0;

    static Generator H(int n, int m) { return {Kind::H, n, m}; }
    static Generator P(int n, int m) { return {Kind::P, n, m}; }
    static Generator Q(int n, int m) { return {Kind::Q, n, m}; }

    std::string str() const;
};

// coeff * product of factors, applied right-to-left as operators.
struct GeneratorWord {
    std::vector<Generator> factors;
    Scalar coeff = Scalar(1);
};

using GeneratorSum = std::vector<GeneratorWord>;

// m > -n r, the membership test for the subalgebra A^(r).
bool in_Ar(int n, int m, int r);

// P_{ka,kb} as a polynomial in H_{a,b}, ..., H_{ka,kb} (formal logarithm of
// the exponential generating relation); gcd(a,b) = 1, k >= 1.
GeneratorSum p_from_h_ray(int a, int b, int k);
// H_{ka,kb} as a polynomial in the P's on the ray (k >= 0).
GeneratorSum h_from_p_ray(int a, int b, int k);
// Q_{ka,kb} as a polynomial in the P's on the ray (k >= 0); every
// coefficient is divisible by (1 - q^-1) for k >= 1.
GeneratorSum q_from_p_ray(int a, int b, int k);

// Multiplication by p_k / the pairing-plane adjoint live in symfunc.hpp
// (apply_p, apply_p_dagger).

// Psi(H_{n,m}) on the Fock space: the constant term of the normal-ordered
// vertex-operator integrand, expanded per the contour ordering.  n != 0.
SymFunc apply_psi_H(int n, int m, const SymFunc& f);

// Action of a single generator / word / sum.
SymFunc apply_generator(const Generator& g, const SymFunc& f);
SymFunc apply_word(const GeneratorWord& w, const SymFunc& f);
SymFunc apply_sum(const GeneratorSum& s, const SymFunc& f);

// Psi(P_{n,m}) and Psi(Q_{n,m}) for arbitrary lattice points.
SymFunc apply_P(int n, int m, const SymFunc& f);
SymFunc apply_Q(int n, int m, const SymFunc& f);

// The A_m / B_m operators from the k+k' cases of the H commutation:
// sum A_m x^-m = exp[sum p_m (1-q^-m)/(m x^m)], B with adjoints and (1-q^m).
SymFunc apply_A(int m, const SymFunc& f);
SymFunc apply_B(int m, const SymFunc& f);

// Optional global ceiling on the kernel-series expansion order; the exact
// enumeration is finite on its own, so the ceiling only exists to detect
// runaway requests.  0 = automatic.
void set_truncation_bound(int bound);
int truncation_bound();

// parse "H(1,2);P(0,1)" (right-to-left composition, ';'-separated)
GeneratorWord parse_word(const std::string& text);

} // namespace fock
} // namespace hallfock

#include "hallfock/report.hpp"

namespace hallfock {
namespace fock {

// Verifies [Psi(P_{n,m}), Psi(P_{n',m'})] against the first presentation
// relation (same-slope pairs) on every p_lambda with |lambda| <= max_deg.
IdentityResult check_relation1(int n, int m, int n2, int m2, int max_deg);

// Verifies the lattice-triangle relation; requires n m' > n' m and an empty
// triangle (checked combinatorially).
IdentityResult check_relation2(int n, int m, int n2, int m2, int max_deg);

// The five commutation identities used in the proof of the Fock action,
// over k, k' in [kmin, kmax], m, m' in [1, mmax], vectors up to max_deg.
SuiteReport check_need_suite(int kmin, int kmax, int mmax, int max_deg);

// The two exponential-commutation identities as formal series in z, w up to
// the given total order, on vectors up to max_deg.
SuiteReport computation_identities_check(int order, int max_deg);

} // namespace fock
} // namespace hallfock
