#pragma once

#include <functional>
#include <map>
#include <string>

#include "hallfock/partition.hpp"
#include "hallfock/scalar.hpp"

namespace hallfock {

// Finite signed sum of monomials in q1, q2, u_i (and, when convenient,
// z-variables): Chern-root data for plethystic evaluation.
class TorusCharacter {
public:
    TorusCharacter() = default;

    void add(const Monomial& m, long mult);
    const std::map<Monomial, long>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    TorusCharacter operator+(const TorusCharacter& o) const;
    TorusCharacter operator-() const;
    TorusCharacter scaled(long c) const;

    // p_n of the character: sum of c * m^n over terms.
    LaurentPoly power_sum(int n) const;

    std::string str() const;

private:
    std::map<Monomial, long> t_;
};

// Runtime degree cap for symmetric-function arithmetic; operations that
// would exceed it throw degree_cap_error instead of truncating.
int degree_cap();
void set_degree_cap(int cap);
struct DegreeCapGuard {
    int saved;
    explicit DegreeCapGuard(int cap) : saved(degree_cap()) { set_degree_cap(cap); }
    ~DegreeCapGuard() { set_degree_cap(saved); }
};

// Element of the ring of symmetric functions in the power-sum basis with
// Scalar coefficients.  The grading is by partition size.
class SymFunc {
public:
    SymFunc() = default;
    static SymFunc one() { return scalar_multiple(Scalar(1)); }
    static SymFunc zero() { return {}; }
    static SymFunc scalar_multiple(const Scalar& c);
    static SymFunc p(int k);             // power sum p_k (k >= 1)
    static SymFunc p(const Partition& l); // p_lambda
    static SymFunc term(const Partition& l, const Scalar& c);

    bool is_zero() const { return t_.empty(); }
    const std::map<Partition, Scalar>& terms() const { return t_; }
    Scalar coeff(const Partition& l) const;
    int degree() const; // max partition size present; -1 for 0
    bool is_homogeneous(int* deg = nullptr) const;
    SymFunc homogeneous_part(int k) const;

    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator-(const SymFunc& o) const;
    SymFunc operator-() const;
    SymFunc operator*(const SymFunc& o) const;
    SymFunc scaled(const Scalar& c) const;
    SymFunc& operator+=(const SymFunc& o) { return *this = *this + o; }
    SymFunc& operator-=(const SymFunc& o) { return *this = *this - o; }

    bool operator==(const SymFunc& o) const;
    bool operator!=(const SymFunc& o) const { return !(*this == o); }

    std::string str() const;
    std::string json() const;
    static SymFunc from_json(const std::string& text);

private:
    std::map<Partition, Scalar> t_;
    void insert(const Partition& l, const Scalar& c);
};

// <p_lambda, p_mu> = delta z_lambda
Scalar pairing_standard(const SymFunc& f, const SymFunc& g);
// <p_lambda, p_mu>_{A^2} = delta z_lambda prod (1-q1^li)(1-q2^li)
Scalar pairing_plane(const SymFunc& f, const SymFunc& g);

// Complete / elementary symmetric functions from the exponential generating
// series; h_0 = e_0 = 1.
SymFunc h_poly(int k);
SymFunc e_poly(int k);

// Ring homomorphism Lambda -> Scalar determined by p_n -> p_n(A).
Scalar plethysm_eval(const SymFunc& f, const TorusCharacter& A);

// f[X +/- (1-q1)(1-q2)(z_1 + ... )]: substitute
// p_n -> p_n +/- (1-q1^n)(1-q2^n) sum z_i^n.
SymFunc plethysm_shift(const SymFunc& f, int sign, const std::vector<VarId>& zvars);

// Multiplication by p_k and its pairing-plane adjoint
// k (1-q1^k)(1-q2^k) d/dp_k.
SymFunc apply_p(int k, const SymFunc& f);
SymFunc apply_p_dagger(int k, const SymFunc& f);
// Standard-pairing adjoint k d/dp_k (no q-factors).
SymFunc apply_p_perp(int k, const SymFunc& f);

// Multiplies the degree-k component by ((1-q1)(1-q2))^{+-k}.
SymFunc deg_rescale(const SymFunc& f, int sign);

} // namespace hallfock
