#pragma once

#include "hallfock/symfunc.hpp"

namespace hallfock {

// Class function on S(k): a value at every cycle type of size k.  Virtual
// characters have Scalar values (usually plain rationals).
class ClassFunction {
public:
    explicit ClassFunction(int k);
    int group_size() const { return k_; }

    const Scalar& value(const Partition& cycle_type) const;
    void set_value(const Partition& cycle_type, const Scalar& v);

    // trivial / sign characters, the indicator-like character whose
    // Frobenius image is p_k, and the regular representation
    static ClassFunction trivial(int k);
    static ClassFunction sign(int k);
    static ClassFunction power_sum_character(int k);
    static ClassFunction regular(int k);
    // indicator of a single cycle type (value 1 there, 0 elsewhere)
    static ClassFunction indicator(const Partition& cycle_type);

    bool operator==(const ClassFunction& o) const;

private:
    int k_;
    std::map<Partition, Scalar> v_;
};

// Frobenius characteristic: M -> sum_{|l|=k} p_l / z_l * Tr_M(w_l).
SymFunc frobenius(const ClassFunction& M);
// Inverse on degree-k symmetric functions: Tr(w_l) = z_l * coeff(p_l).
ClassFunction frobenius_inv(const SymFunc& f, int k);

// Induction from the Young subgroup S(k) x S(l), summed over cycle-type
// splittings (no group-element enumeration).
ClassFunction induce(const ClassFunction& A, const ClassFunction& B);

// The class function N on S(l) realizing Hom_{S(k)}(P, Res M); adjoint of
// induce(P, -) under the standard pairing.
ClassFunction restrict_hom(const ClassFunction& P, const ClassFunction& M);

// Signed trace of the k-cycle on the full exterior algebra of
// L1^{+k} (+) L2^{+k}, by enumerating the invariant wedge monomials.
// Equals (1-q1^k)(1-q2^k).
Scalar cycle_trace_exterior(int k);

} // namespace hallfock
