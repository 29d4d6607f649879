#include <numeric>

#include "hallfock/errors.hpp"
#include "hallfock/fock.hpp"

namespace hallfock {
namespace fock {

namespace {

int absgcd(int a, int b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

bool in_upper_half(int n, int m) { return n > 0 || (n == 0 && m > 0); }
bool in_lower_half(int n, int m) { return n < 0 || (n == 0 && m < 0); }

SymFunc commutator_P(int n, int m, int n2, int m2, const SymFunc& f) {
    return apply_P(n, m, apply_P(n2, m2, f)) - apply_P(n2, m2, apply_P(n, m, f));
}

std::string pair_str(int n, int m, int n2, int m2) {
    return "(" + std::to_string(n) + "," + std::to_string(m) + "),(" + std::to_string(n2) +
           "," + std::to_string(m2) + ")";
}

// interior lattice points of the closed triangle (0,0),(n,m),(n+n',m+m'),
// edges included, vertices excluded
bool triangle_empty(int n, int m, int n2, int m2) {
    long ax = n, ay = m, bx = n + n2, by = m + m2;
    // edge conditions: gcd of the difference vector counts lattice points
    if (absgcd(n, m) > 1) return false;
    if (absgcd(n2, m2) > 1) return false;
    if (absgcd(static_cast<int>(bx), static_cast<int>(by)) > 1) return false;
    // interior points via Pick: area = i + b/2 - 1, boundary b = 3 here
    long twice_area = ax * by - ay * bx;
    if (twice_area < 0) twice_area = -twice_area;
    // i = area - b/2 + 1 = twice_area/2 - 3/2 + 1; empty iff twice_area == 1
    return twice_area == 1;
}

} // namespace

IdentityResult check_relation1(int n, int m, int n2, int m2, int max_deg) {
    std::string params = pair_str(n, m, n2, m2);
    if (static_cast<long>(n) * m2 != static_cast<long>(n2) * m)
        throw argument_error("relation-1 needs collinear lattice points");
    if (!in_upper_half(n, m)) throw argument_error("relation-1 needs (n,m) in the upper half");
    // expected: nonzero only for exactly opposite points, with the central
    // factor specialized at (c1, c2) = (1, q^-1)
    Scalar expected; // scalar multiple of Id
    if (n2 == -n && m2 == -m) {
        int d = absgcd(n, m);
        Scalar qs = Scalar::q();
        Scalar denom = qs.pow(-d) - Scalar(1);
        expected = Scalar(d) * qq_factor(d) * (Scalar(1) - qs.pow(m)) / denom;
    }
    DegreeCapGuard guard(max_deg + std::abs(m) + std::abs(m2) + 2);
    for (const auto& l : partitions_up_to(max_deg)) {
        SymFunc f = SymFunc::p(l);
        SymFunc lhs = commutator_P(n, m, n2, m2, f);
        SymFunc rhs = f.scaled(expected);
        if (lhs != rhs)
            return IdentityResult::fail("relation-1", params,
                                        "witness p" + l.str() + ": got " + lhs.str() +
                                            ", expected " + rhs.str());
    }
    return IdentityResult::ok("relation-1", params);
}

IdentityResult check_relation2(int n, int m, int n2, int m2, int max_deg) {
    std::string params = pair_str(n, m, n2, m2);
    if (static_cast<long>(n) * m2 <= static_cast<long>(n2) * m)
        throw argument_error("relation-2 needs n m' > n' m");
    if (!triangle_empty(n, m, n2, m2))
        throw argument_error("relation-2 triangle is not empty: " + params);
    int d = absgcd(n, m) * absgcd(n2, m2);
    Scalar qs = Scalar::q();
    // central factor at (c1, c2) = (1, q^-1): c1^a c2^b -> q^-b
    Scalar central(1);
    int sn = n + n2, sm = m + m2;
    if (in_lower_half(n, m) && in_upper_half(n2, m2)) {
        if (in_upper_half(sn, sm))
            central = qs.pow(-m);
        else if (in_lower_half(sn, sm))
            central = qs.pow(m2);
    }
    Scalar front = qq_factor(d) / (qs.inverse() - Scalar(1)) * central;
    DegreeCapGuard guard(max_deg + std::abs(m) + std::abs(m2) + 2);
    for (const auto& l : partitions_up_to(max_deg)) {
        SymFunc f = SymFunc::p(l);
        SymFunc lhs = commutator_P(n, m, n2, m2, f);
        SymFunc rhs = apply_Q(sn, sm, f).scaled(front);
        if (lhs != rhs)
            return IdentityResult::fail("relation-2", params,
                                        "witness p" + l.str() + ": got " + lhs.str() +
                                            ", expected " + rhs.str());
    }
    return IdentityResult::ok("relation-2", params);
}

SuiteReport check_need_suite(int kmin, int kmax, int mmax, int max_deg) {
    SuiteReport rep;
    rep.suite = "need";
    DegreeCapGuard guard(max_deg + 2 * (std::abs(kmin) + kmax + mmax) + 4);
    std::vector<Partition> basis = partitions_up_to(max_deg);
    Scalar qs = Scalar::q();

    auto expect_on_basis = [&](const std::string& name, const std::string& params,
                               const std::function<SymFunc(const SymFunc&)>& lhs,
                               const std::function<SymFunc(const SymFunc&)>& rhs) {
        for (const auto& l : basis) {
            SymFunc f = SymFunc::p(l);
            SymFunc a = lhs(f), b = rhs(f);
            if (a != b) {
                rep.add(IdentityResult::fail(name, params,
                                             "witness p" + l.str() + ": got " + a.str() +
                                                 ", expected " + b.str()));
                return;
            }
        }
        rep.add(IdentityResult::ok(name, params));
    };

    for (int m = 1; m <= mmax; ++m)
        for (int m2 = 1; m2 <= mmax; ++m2) {
            // need-1: same-sign zero commutators
            expect_on_basis("need-1", "m=" + std::to_string(m) + ",m'=" + std::to_string(m2),
                            [&](const SymFunc& f) { return commutator_P(0, m, 0, m2, f); },
                            [&](const SymFunc&) { return SymFunc::zero(); });
            expect_on_basis("need-1", "m=-" + std::to_string(m) + ",m'=-" + std::to_string(m2),
                            [&](const SymFunc& f) { return commutator_P(0, -m, 0, -m2, f); },
                            [&](const SymFunc&) { return SymFunc::zero(); });
            // need-2
            Scalar val;
            if (m == m2) val = Scalar(m) * qq_factor(m) * qs.pow(m);
            expect_on_basis("need-2", "m=" + std::to_string(m) + ",m'=" + std::to_string(m2),
                            [&](const SymFunc& f) { return commutator_P(0, m, 0, -m2, f); },
                            [&](const SymFunc& f) { return f.scaled(val); });
        }

    for (int k = kmin; k <= kmax; ++k)
        for (int m = 1; m <= mmax; ++m) {
            std::string params = "k=" + std::to_string(k) + ",m=" + std::to_string(m);
            Scalar qqm = qq_factor(m);
            // need-3, sign +
            expect_on_basis("need-3(+)", params,
                            [&](const SymFunc& f) {
                                return apply_psi_H(1, k, apply_P(0, m, f)) -
                                       apply_P(0, m, apply_psi_H(1, k, f));
                            },
                            [&](const SymFunc& f) {
                                return apply_psi_H(1, k + m, f).scaled(-qqm);
                            });
            // need-3, sign -
            expect_on_basis("need-3(-)", params,
                            [&](const SymFunc& f) {
                                return apply_psi_H(-1, k, apply_P(0, -m, f)) -
                                       apply_P(0, -m, apply_psi_H(-1, k, f));
                            },
                            [&](const SymFunc& f) {
                                return apply_psi_H(-1, k - m, f).scaled(-qqm);
                            });
            // need-4, sign +: q^m factor
            expect_on_basis("need-4(+)", params,
                            [&](const SymFunc& f) {
                                return apply_psi_H(1, k, apply_P(0, -m, f)) -
                                       apply_P(0, -m, apply_psi_H(1, k, f));
                            },
                            [&](const SymFunc& f) {
                                return apply_psi_H(1, k - m, f).scaled(qqm * qs.pow(m));
                            });
            // need-4, sign -: no q factor
            expect_on_basis("need-4(-)", params,
                            [&](const SymFunc& f) {
                                return apply_psi_H(-1, k, apply_P(0, m, f)) -
                                       apply_P(0, m, apply_psi_H(-1, k, f));
                            },
                            [&](const SymFunc& f) {
                                return apply_psi_H(-1, k + m, f).scaled(qqm);
                            });
        }

    // need-5 with the A_m / B_m series
    Scalar front = qq_factor(1) / (qs.inverse() - Scalar(1));
    for (int k = kmin; k <= kmax; ++k)
        for (int k2 = kmin; k2 <= kmax; ++k2) {
            std::string params = "k=" + std::to_string(k) + ",k'=" + std::to_string(k2);
            int s = k + k2;
            expect_on_basis("need-5", params,
                            [&](const SymFunc& f) {
                                return apply_psi_H(1, k, apply_psi_H(-1, k2, f)) -
                                       apply_psi_H(-1, k2, apply_psi_H(1, k, f));
                            },
                            [&](const SymFunc& f) {
                                if (s > 0) return apply_A(s, f).scaled(front);
                                if (s == 0) return f.scaled(front * (Scalar(1) - qs.pow(k)));
                                return apply_B(-s, f).scaled(-front * qs.pow(k));
                            });
        }
    return rep;
}

SuiteReport computation_identities_check(int order, int max_deg) {
    if (order < 1) throw argument_error("order must be >= 1");
    SuiteReport rep;
    rep.suite = "computation";
    DegreeCapGuard guard(max_deg + 2 * order + 2);
    std::vector<Partition> basis = partitions_up_to(max_deg);

    // zeta(x)^-1 = exp[-sum x^k (1-q1^k)(1-q2^k)/k]: coefficient of x^c
    auto zeta_inv_coeff = [&](int c) {
        Scalar out;
        for (const auto& nu : partitions_of(c)) {
            Scalar w(Rat(nu.length() % 2 == 0 ? 1 : -1) / nu.z());
            for (int part : nu.parts()) w *= qq_factor(part);
            out += w;
        }
        return out;
    };
    // multiplication operator: coefficient of w^-b in exp[sum p_k w^-k / k]
    auto mul_block = [&](int b) { return h_poly(b); };
    // scaled multiplication: coefficient of w^-b in exp[-sum p_k w^-k/(k q^k)]
    auto mul_block_q = [&](int b) {
        SymFunc out;
        for (const auto& nu : partitions_of(b)) {
            Scalar c(Rat(nu.length() % 2 == 0 ? 1 : -1) / nu.z());
            out += SymFunc::term(nu, c * Scalar::q().pow(-b));
        }
        return out;
    };
    // adjoint blocks: coefficient of z^a in exp[+-sum p_k^dag z^k / k]
    auto dag_block = [&](int a, int sign, const SymFunc& f) {
        SymFunc out;
        for (const auto& mu : partitions_of(a)) {
            Scalar c(Rat(sign < 0 && mu.length() % 2 == 1 ? -1 : 1) / mu.z());
            SymFunc g = f;
            for (int part : mu.parts()) {
                g = apply_p_dagger(part, g);
                if (g.is_zero()) break;
            }
            out += g.scaled(c);
        }
        return out;
    };

    // computation-1, coefficient of z^a w^-b:
    //   dag^-(a) mul(b) = sum_c zc_inv(c) mul(b-c) dag^-(a-c)
    for (int a = 0; a <= order; ++a)
        for (int b = 0; a + b <= order; ++b) {
            std::string params = "z^" + std::to_string(a) + " w^-" + std::to_string(b);
            bool okay = true;
            std::string witness;
            for (const auto& l : basis) {
                SymFunc f = SymFunc::p(l);
                SymFunc lhs = dag_block(a, -1, mul_block(b) * f);
                SymFunc rhs;
                for (int c = 0; c <= std::min(a, b); ++c)
                    rhs += (mul_block(b - c) * dag_block(a - c, -1, f)).scaled(zeta_inv_coeff(c));
                if (lhs != rhs) {
                    okay = false;
                    witness = "witness p" + l.str();
                    break;
                }
            }
            rep.add(okay ? IdentityResult::ok("computation-1", params)
                         : IdentityResult::fail("computation-1", params, witness));
        }

    // computation-2, coefficient of z^a w^-b, with zeta(w/z)^-1 expanded via
    // zeta(x) = zeta(1/(xq)) as a series in z/w:
    //   dag^+(a) mulq(b) = sum_c zc_inv_q(c) mulq(b-c) dag^+(a-c)
    // where zc_inv_q(c) is the coefficient of (z/w)^c in zeta(z/(wq))^-1,
    // i.e. zeta_inv_coeff(c) * q^-c.
    for (int a = 0; a <= order; ++a)
        for (int b = 0; a + b <= order; ++b) {
            std::string params = "z^" + std::to_string(a) + " w^-" + std::to_string(b);
            bool okay = true;
            std::string witness;
            for (const auto& l : basis) {
                SymFunc f = SymFunc::p(l);
                SymFunc lhs = dag_block(a, +1, mul_block_q(b) * f);
                SymFunc rhs;
                for (int c = 0; c <= std::min(a, b); ++c)
                    rhs += (mul_block_q(b - c) * dag_block(a - c, +1, f))
                               .scaled(zeta_inv_coeff(c) * Scalar::q().pow(-c));
                if (lhs != rhs) {
                    okay = false;
                    witness = "witness p" + l.str();
                    break;
                }
            }
            rep.add(okay ? IdentityResult::ok("computation-2", params)
                         : IdentityResult::fail("computation-2", params, witness));
        }

    // zeta(x) zeta(x)^-1 = 1 as series, and zeta(x) = zeta(1/(xq)) exactly
    {
        // series product: sum_{c} zeta_coeff(c) zeta_inv_coeff(order-c) = delta
        auto zeta_coeff = [&](int c) {
            Scalar out;
            for (const auto& nu : partitions_of(c)) {
                Scalar w(Rat(1) / nu.z());
                for (int part : nu.parts()) w *= qq_factor(part);
                out += w;
            }
            return out;
        };
        bool okay = true;
        for (int t = 0; t <= order && okay; ++t) {
            Scalar s;
            for (int c = 0; c <= t; ++c) s += zeta_coeff(c) * zeta_inv_coeff(t - c);
            okay = (t == 0) ? (s == Scalar(1)) : s.is_zero();
        }
        rep.add(okay ? IdentityResult::ok("zeta-series-inverse", "order " + std::to_string(order))
                     : IdentityResult::fail("zeta-series-inverse", "", "series product != 1"));
    }
    {
        VarId x = VarReg::z(1);
        Scalar xv = Scalar::variable(x);
        Scalar q1 = Scalar::q1(), q2 = Scalar::q2(), qs = Scalar::q();
        auto zeta_of = [&](const Scalar& t) {
            return (Scalar(1) - t * q1) * (Scalar(1) - t * q2) /
                   ((Scalar(1) - t) * (Scalar(1) - t * qs));
        };
        bool okay = zeta_of(xv) == zeta_of((xv * qs).inverse());
        rep.add(okay ? IdentityResult::ok("zeta-functional-equation", "zeta(x) = zeta(1/(xq))")
                     : IdentityResult::fail("zeta-functional-equation", "", "mismatch"));
    }
    return rep;
}

} // namespace fock
} // namespace hallfock
