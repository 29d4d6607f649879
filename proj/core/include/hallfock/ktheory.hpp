#pragma once

#include "hallfock/report.hpp"
#include "hallfock/symfunc.hpp"

namespace hallfock {
namespace ktheory {

// r-tuple of partitions indexing a torus fixed point of the framed-sheaf
// moduli space; boxes are addressed (i, x, y) with x the column and y the
// row of a cell in the i-th constituent (0-based), weight u_i q1^x q2^y.
class RPartition {
public:
    RPartition() = default;
    explicit RPartition(std::vector<Partition> components);

    int rank() const { return static_cast<int>(c_.size()); }
    int size() const;
    const std::vector<Partition>& components() const { return c_; }

    bool operator==(const RPartition& o) const { return c_ == o.c_; }
    bool operator<(const RPartition& o) const;

    std::string str() const;

private:
    std::vector<Partition> c_;
};

struct BoxWeight {
    Monomial value; // u_i q1^x q2^y
};

// Localized K-theory class: Scalar entry per fixed point of a given size.
struct FixedPointVector {
    int r = 1;
    int d = 0;
    std::map<RPartition, Scalar> entries;

    bool operator==(const FixedPointVector& o) const;
    std::string json() const;
    static FixedPointVector from_json(const std::string& text);
};

// All r-partitions of total size d.
std::vector<RPartition> rpartitions(int r, int d);
// Number of r-partitions of size d via the generating-function convolution.
long rpartition_count(int r, int d);

// Torus character of the universal sheaf's fiber at the fixed point:
// sum_i u_i (1 - (1-q1)(1-q2) sum_boxes q1^x q2^y).
TorusCharacter fixed_point_character(const RPartition& lam);

// Universal-class map: entry at lambda is f evaluated plethystically at the
// fixed-point character.
FixedPointVector gamma_eval(const SymFunc& f, int r, int d);

// All ways of adding one box, with the box weight.
std::vector<std::pair<RPartition, BoxWeight>> add_boxes(const RPartition& mu);

// Lagrange coefficients c_1..c_s with sum_m c_m w^m equal to 1 at the
// target box weight and 0 at the other addable weights.
std::vector<Scalar> vandermonde_select(const RPartition& mu, const RPartition& target);

// The same selector with a common polynomial denominator, c_m =
// numerators[m-1] / denom; lets the delta property be checked without
// fraction arithmetic.
struct VandermondeSystem {
    std::vector<Monomial> weights;
    std::vector<LaurentPoly> numerators;
    LaurentPoly denom;
    int target = -1;
    bool solves_exactly() const;
};
VandermondeSystem vandermonde_system(const RPartition& mu, const RPartition& target);

// Phi(H_{sign*1, m}) on the universal class f, evaluated at every fixed
// point of size d by residues at the Chern-root poles (z = 0 and infinity
// excluded).  sign is +1 or -1.
FixedPointVector phi_H1_residues(int sign, int m, const SymFunc& f, int r, int d);

// Stretch mode: n = 2 iterated-residue evaluation (validated only against
// the Fock side).
FixedPointVector phi_H2_residues(int sign, int m, const SymFunc& f, int r, int d);

// Residue at z = 0 of the universal-class integrand at character chi; the
// regularity certificate of the intertwining theorem.  n in {1, 2}.
Scalar residue_at_zero_certificate(int sign, int n, int m, const SymFunc& f,
                                   const TorusCharacter& chi);

// Compares gamma_eval . Psi(H) with the residue side at every fixed point
// of sizes 0..d, for f over the p-basis up to f_deg.
SuiteReport intertwine_check(int r, int d, int n, int m, int f_deg);

} // namespace ktheory
} // namespace hallfock
