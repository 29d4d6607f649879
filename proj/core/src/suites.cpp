#include "hallfock/suites.hpp"

#include <algorithm>

#include "hallfock/classfunc.hpp"
#include "hallfock/errors.hpp"
#include "hallfock/fock.hpp"
#include "hallfock/ktheory.hpp"
#include "hallfock/parallel.hpp"
#include "hallfock/shuffle.hpp"

namespace hallfock {
namespace suites {

namespace {

// run independent checks in a pool, keep report order deterministic
SuiteReport pooled(const std::string& name,
                   std::vector<std::function<IdentityResult()>> jobs) {
    SuiteReport rep;
    rep.suite = name;
    std::vector<IdentityResult> out(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t i) { out[i] = jobs[i](); });
    for (auto& r : out) rep.add(std::move(r));
    return rep;
}

} // namespace

SuiteReport heisenberg(int kmax, int vec_deg) {
    std::vector<std::function<IdentityResult()>> jobs;
    for (int k = 1; k <= kmax; ++k)
        for (int l = 1; l <= kmax; ++l) {
            jobs.push_back([k, l, vec_deg]() -> IdentityResult {
                DegreeCapGuard guard(vec_deg + k + l + 2);
                std::string params = "k=" + std::to_string(k) + ",l=" + std::to_string(l);
                Scalar expected;
                if (k == l) expected = Scalar(k) * qq_factor(k);
                for (const auto& lam : partitions_up_to(vec_deg)) {
                    SymFunc f = SymFunc::p(lam);
                    SymFunc comm = apply_p_dagger(k, apply_p(l, f)) -
                                   apply_p(l, apply_p_dagger(k, f));
                    if (comm != f.scaled(expected))
                        return IdentityResult::fail("heisenberg-commutator", params,
                                                    "witness p" + lam.str());
                    // same-type commutators vanish
                    if (apply_p(k, apply_p(l, f)) != apply_p(l, apply_p(k, f)))
                        return IdentityResult::fail("pp-commute", params, "witness p" + lam.str());
                    if (apply_p_dagger(k, apply_p_dagger(l, f)) !=
                        apply_p_dagger(l, apply_p_dagger(k, f)))
                        return IdentityResult::fail("pdag-pdag-commute", params,
                                                    "witness p" + lam.str());
                }
                return IdentityResult::ok("heisenberg-commutator", params);
            });
        }
    return pooled("heisenberg", std::move(jobs));
}

SuiteReport frobenius_suite(int total) {
    std::vector<std::function<IdentityResult()>> jobs;
    for (int k = 0; k <= total; ++k)
        for (int l = 0; k + l <= total; ++l) {
            jobs.push_back([k, l]() -> IdentityResult {
                DegreeCapGuard guard(k + l + 2);
                std::string params = "k=" + std::to_string(k) + ",l=" + std::to_string(l);
                for (const auto& a : partitions_of(k))
                    for (const auto& b : partitions_of(l)) {
                        ClassFunction A = ClassFunction::indicator(a);
                        ClassFunction B = ClassFunction::indicator(b);
                        SymFunc lhs = frobenius(induce(A, B));
                        SymFunc rhs = frobenius(A) * frobenius(B);
                        if (lhs != rhs)
                            return IdentityResult::fail(
                                "frobenius-multiplicative", params,
                                "witness indicators " + a.str() + ", " + b.str());
                    }
                return IdentityResult::ok("frobenius-multiplicative", params);
            });
        }
    // Frobenius reciprocity: <ch restrict_hom(p_k-char, M), g> =
    // <ch M, p_k g> for all cycle-type characters M and p-basis g
    for (int k = 1; k <= total; ++k)
        for (int l = 0; k + l <= total; ++l) {
            jobs.push_back([k, l]() -> IdentityResult {
                DegreeCapGuard guard(k + l + 2);
                std::string params = "k=" + std::to_string(k) + ",l=" + std::to_string(l);
                ClassFunction P = ClassFunction::power_sum_character(k);
                for (const auto& mt : partitions_of(k + l)) {
                    ClassFunction M = ClassFunction::indicator(mt);
                    SymFunc lhs_f = frobenius(restrict_hom(P, M));
                    SymFunc chM = frobenius(M);
                    for (const auto& g : partitions_of(l)) {
                        Scalar lhs = pairing_standard(lhs_f, SymFunc::p(g));
                        Scalar rhs = pairing_standard(chM, SymFunc::p(k) * SymFunc::p(g));
                        if (lhs != rhs)
                            return IdentityResult::fail("frobenius-reciprocity", params,
                                                        "witness M=" + mt.str() +
                                                            " g=" + g.str());
                    }
                }
                return IdentityResult::ok("frobenius-reciprocity", params);
            });
        }
    return pooled("frobenius", std::move(jobs));
}

SuiteReport need(int krange, int mmax, int vec_deg) {
    SuiteReport rep = fock::check_need_suite(-krange, krange, mmax, vec_deg);
    rep.suite = "need";
    return rep;
}

SuiteReport eha_relations(int vec_deg) {
    std::vector<std::function<IdentityResult()>> jobs;
    auto rel1 = [vec_deg](int n, int m, int n2, int m2) {
        return std::function<IdentityResult()>(
            [=]() { return fock::check_relation1(n, m, n2, m2, vec_deg); });
    };
    auto rel2 = [vec_deg](int n, int m, int n2, int m2) {
        return std::function<IdentityResult()>(
            [=]() { return fock::check_relation2(n, m, n2, m2, vec_deg); });
    };
    // relation-1 on the rays (0, +-m), (+-1, 0), (+-1, +-1)
    for (int m = 1; m <= 3; ++m) jobs.push_back(rel1(0, m, 0, -m));
    jobs.push_back(rel1(0, 1, 0, 2));   // same ray, commuting
    jobs.push_back(rel1(1, 0, -1, 0));  // central factor degenerates to 0
    jobs.push_back(rel1(1, 1, -1, -1));
    jobs.push_back(rel1(1, -1, -1, 1));
    jobs.push_back(rel1(1, 0, 2, 0));   // same ray through (1,0), n = 2 engine
    // relation-2 on empty triangles
    jobs.push_back(rel2(1, 0, 0, 1));    // -> (1-q1)(1-q2) P(1,1)
    jobs.push_back(rel2(1, -1, 0, 1));   // -> Q(1,0) case
    jobs.push_back(rel2(1, 1, -1, 0));   // -> Q(0,1), "otherwise" case
    jobs.push_back(rel2(-1, -1, 2, 1));  // sum in upper half: c1^n c2^m factor
    jobs.push_back(rel2(-1, -1, 1, 0));  // sum in lower half: c1^-n' c2^-m' factor
    jobs.push_back(rel2(-1, 1, 1, -2));  // lower-half sum with m' != 0
    return pooled("eha-relations", std::move(jobs));
}

SuiteReport vacuum(int mmax, int nmax, int rmax) {
    SuiteReport rep;
    rep.suite = "vacuum";
    DegreeCapGuard guard(mmax + 2);
    SymFunc one = SymFunc::one();
    Scalar qs = Scalar::q();
    for (int m = 0; m <= mmax; ++m) {
        SymFunc got = fock::apply_psi_H(1, m, one);
        bool okay = got == h_poly(m);
        rep.add(okay ? IdentityResult::ok("vacuum-h", "m=" + std::to_string(m))
                     : IdentityResult::fail("vacuum-h", "m=" + std::to_string(m),
                                            "got " + got.str()));
    }
    for (int m = 1; m <= mmax; ++m) {
        SymFunc got = fock::apply_psi_H(-1, m, one);
        Scalar c = qs.pow(1 - m);
        if (m % 2 == 0) c = -c;
        bool okay = got == e_poly(m).scaled(c);
        rep.add(okay ? IdentityResult::ok("vacuum-e", "m=" + std::to_string(m))
                     : IdentityResult::fail("vacuum-e", "m=" + std::to_string(m),
                                            "got " + got.str()));
    }
    for (int n = 1; n <= nmax; ++n) {
        SymFunc got = fock::apply_psi_H(n, 0, one);
        rep.add(got == one
                    ? IdentityResult::ok("vacuum-identity", "n=" + std::to_string(n))
                    : IdentityResult::fail("vacuum-identity", "n=" + std::to_string(n),
                                           "got " + got.str()));
        for (int r = 1; r <= rmax; ++r)
            for (int m = -1; m > -n * r; --m) {
                SymFunc z = fock::apply_psi_H(n, m, one);
                std::string params = "n=" + std::to_string(n) + ",m=" + std::to_string(m);
                rep.add(z.is_zero() ? IdentityResult::ok("vacuum-zero", params)
                                    : IdentityResult::fail("vacuum-zero", params,
                                                           "got " + z.str()));
            }
    }
    {
        SymFunc z = fock::apply_psi_H(2, -1, one);
        rep.add(z.is_zero() ? IdentityResult::ok("vacuum-zero", "n=2,m=-1")
                            : IdentityResult::fail("vacuum-zero", "n=2,m=-1", "got " + z.str()));
    }
    return rep;
}

SuiteReport computation(int order, int vec_deg) {
    return fock::computation_identities_check(order, vec_deg);
}

SuiteReport trace(int kmax) {
    SuiteReport rep;
    rep.suite = "trace";
    for (int k = 1; k <= kmax; ++k) {
        Scalar got = cycle_trace_exterior(k);
        Scalar want = qq_factor(k);
        rep.add(got == want
                    ? IdentityResult::ok("exterior-trace", "k=" + std::to_string(k))
                    : IdentityResult::fail("exterior-trace", "k=" + std::to_string(k),
                                           "got " + got.str()));
    }
    return rep;
}

SuiteReport shuffle_suite(int mrange, int cap) {
    std::vector<std::function<IdentityResult()>> jobs;
    for (int m = -mrange; m <= mrange; ++m)
        for (int m2 = -mrange; m2 <= mrange; ++m2)
            jobs.push_back([m, m2, cap]() { return shuffle::star_vs_fock(1, m, 1, m2, cap); });
    for (int m = -mrange; m <= mrange; ++m)
        for (int m2 : {0, 1})
            jobs.push_back([m, m2, cap]() { return shuffle::star_vs_fock(1, m, 2, m2, cap); });
    // equal-contour vs nested-contour at n = 2
    for (int m = -2; m <= 2; ++m)
        jobs.push_back([m, cap]() -> IdentityResult {
            DegreeCapGuard guard(cap + std::abs(m) + 2);
            std::string params = "n=2,m=" + std::to_string(m);
            for (const auto& l : partitions_up_to(cap)) {
                SymFunc f = SymFunc::p(l);
                SymFunc jp = shuffle::psi_H_minus_via_shuffle(2, m, f);
                SymFunc kp = fock::apply_psi_H(-2, m, f);
                if (jp != kp)
                    return IdentityResult::fail("jp-vs-kp", params, "witness p" + l.str());
            }
            return IdentityResult::ok("jp-vs-kp", params);
        });
    return pooled("shuffle", std::move(jobs));
}

SuiteReport weights(int musize, int rmax) {
    std::vector<std::function<IdentityResult()>> jobs;
    for (int r = 1; r <= rmax; ++r)
        for (int d = 0; d <= musize; ++d)
            jobs.push_back([r, d]() -> IdentityResult {
                std::string params = "r=" + std::to_string(r) + ",|mu|=" + std::to_string(d);
                for (const auto& mu : ktheory::rpartitions(r, d)) {
                    auto boxes = ktheory::add_boxes(mu);
                    for (std::size_t i = 0; i < boxes.size(); ++i)
                        for (std::size_t j = i + 1; j < boxes.size(); ++j)
                            if (boxes[i].second.value == boxes[j].second.value)
                                return IdentityResult::fail("box-weights", params,
                                                            "equal weights at mu=" + mu.str());
                    // Lagrange selection solves exactly: delta on box weights
                    for (const auto& [target, bw] : boxes) {
                        auto sys = ktheory::vandermonde_system(mu, target);
                        if (!sys.solves_exactly())
                            return IdentityResult::fail("box-weights", params,
                                                        "selector fails at mu=" + mu.str() +
                                                            " target=" + target.str());
                    }
                }
                return IdentityResult::ok("box-weights", params);
            });
    return pooled("weights", std::move(jobs));
}

SuiteReport intertwine_grid(int r, int d, int f_deg, int mmax) {
    SuiteReport rep;
    rep.suite = "intertwine";
    std::vector<std::pair<int, int>> gens;
    for (int m = 1; m <= mmax; ++m) gens.push_back({0, m}); // P(0,m)
    for (int m = -r + 1; m <= mmax; ++m) gens.push_back({1, m});
    for (int m = r + 1; m <= r + mmax; ++m) gens.push_back({-1, m});
    std::vector<SuiteReport> parts(gens.size());
    parallel_for(gens.size(), [&](std::size_t i) {
        parts[i] = ktheory::intertwine_check(r, d, gens[i].first, gens[i].second, f_deg);
    });
    for (const auto& p : parts) rep.merge(p);
    return rep;
}

SuiteReport boundary(int rmax) {
    SuiteReport rep;
    rep.suite = "boundary";
    // inside A^(r): certificates vanish for the generators of the
    // acceptance grid; at the boundary H(-1, r) they do not
    for (int r = 1; r <= rmax; ++r) {
        for (int d = 0; d <= 2; ++d)
            for (const auto& lam : ktheory::rpartitions(r, d)) {
                TorusCharacter chi = ktheory::fixed_point_character(lam);
                bool okay = true;
                std::string witness;
                DegreeCapGuard guard(8);
                for (int m = -r + 1; m <= 3 && okay; ++m) {
                    Scalar c = ktheory::residue_at_zero_certificate(1, 1, m, SymFunc::one(), chi);
                    if (!c.is_zero()) {
                        okay = false;
                        witness = "H(1," + std::to_string(m) + ") at " + lam.str() + ": " + c.str();
                    }
                }
                for (int m = r + 1; m <= r + 3 && okay; ++m) {
                    Scalar c = ktheory::residue_at_zero_certificate(-1, 1, m, SymFunc::one(), chi);
                    if (!c.is_zero()) {
                        okay = false;
                        witness =
                            "H(-1," + std::to_string(m) + ") at " + lam.str() + ": " + c.str();
                    }
                }
                std::string params = "r=" + std::to_string(r) + " at " + lam.str();
                rep.add(okay ? IdentityResult::ok("certificate-zero", params)
                             : IdentityResult::fail("certificate-zero", params, witness));
            }
        // the boundary generator H(-1, r) has a nonzero certificate
        {
            DegreeCapGuard guard(8);
            std::vector<Partition> comp;
            comp.push_back(Partition::single(1));
            for (int i = 1; i < r; ++i) comp.push_back(Partition());
            ktheory::RPartition lam(comp);
            TorusCharacter chi = ktheory::fixed_point_character(lam);
            Scalar c = ktheory::residue_at_zero_certificate(-1, 1, r, SymFunc::one(), chi);
            std::string params = "r=" + std::to_string(r) + " at " + lam.str();
            bool okay = !c.is_zero();
            if (r == 1) okay = okay && c == Scalar::u(1); // the worked value
            rep.add(okay ? IdentityResult::ok("certificate-nonzero", params)
                         : IdentityResult::fail("certificate-nonzero", params,
                                                "certificate " + c.str()));
        }
    }
    return rep;
}

SuiteReport run_named(const std::string& name, const Config& cfg) {
    if (name == "heisenberg") return heisenberg(5, std::min(cfg.max_degree + 1, 7));
    if (name == "frobenius") return frobenius_suite(6);
    if (name == "need") return need(3, 3, std::min(cfg.max_degree, 5));
    if (name == "eha-relations") return eha_relations(std::min(cfg.max_degree, 5));
    if (name == "vacuum") return vacuum(4, 3, std::min(cfg.rank, 2));
    if (name == "computation") return computation(4, std::min(cfg.max_degree, 4));
    if (name == "trace") return trace(6);
    if (name == "shuffle") return shuffle_suite(2, std::min(cfg.max_degree, 4));
    if (name == "weights") return weights(5, 3);
    if (name == "boundary") return boundary(2);
    if (name == "intertwine")
        return intertwine_grid(cfg.rank, 3, std::min(cfg.max_degree, 3), 3);
    throw argument_error("unknown suite '" + name + "'");
}

std::vector<std::string> suite_names() {
    return {"heisenberg", "frobenius",  "need",    "eha-relations", "vacuum", "computation",
            "trace",      "shuffle",    "weights", "boundary",      "intertwine"};
}

} // namespace suites
} // namespace hallfock
