#pragma once

#include "hallfock/report.hpp"

namespace hallfock {
namespace suites {

struct Config {
    int max_degree = 6;
    int rank = 1;
    unsigned seed = 1;
    int probabilistic_points = 5;
};

// Heisenberg commutation [p_k^dag, p_l] and the vanishing same-type
// commutators, k,l <= kmax on all p_lambda with |lambda| <= vec_deg.
SuiteReport heisenberg(int kmax, int vec_deg);

// Frobenius multiplicativity and reciprocity over all cycle-type indicator
// characters with k + l <= total.
SuiteReport frobenius_suite(int total);

// The five proof identities (wraps fock::check_need_suite).
SuiteReport need(int krange, int mmax, int vec_deg);

// Presentation relation samples on the |n| <= 1 rays and triangles.
SuiteReport eha_relations(int vec_deg);

// Vacuum identities for H_{1,m}, H_{-1,m}, H_{n,0}, and the boundary zeros
// H_{n,m}(1) = 0 for m in {-1..-nr+1}, n <= nmax, r <= rmax.
SuiteReport vacuum(int mmax, int nmax, int rmax);

// Exponential commutation identities (wraps computation_identities_check).
SuiteReport computation(int order, int vec_deg);

// Exterior-algebra trace identity up to kmax.
SuiteReport trace(int kmax);

// Shuffle homomorphism: star-vs-fock pairs plus the equal- vs
// nested-contour equivalence at n = 2.
SuiteReport shuffle_suite(int mrange, int cap);

// Distinct box weights and Lagrange selection for |mu| <= musize, r <= rmax.
SuiteReport weights(int musize, int rmax);

// Theorem-main grid for one rank: generators P(0,m), H(1,m), H(-1,m).
SuiteReport intertwine_grid(int r, int d, int f_deg, int mmax);

// Boundary dichotomy: zero certificates inside A^(r), nonzero at H(-1,r).
SuiteReport boundary(int rmax);

// name -> suite with default parameters; throws argument_error on unknown
// names.  Known names: heisenberg, frobenius, need, eha-relations, vacuum,
// computation, trace, shuffle, weights, boundary, intertwine.
SuiteReport run_named(const std::string& name, const Config& cfg);
std::vector<std::string> suite_names();

} // namespace suites
} // namespace hallfock
