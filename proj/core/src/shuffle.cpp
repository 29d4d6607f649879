#include "hallfock/shuffle.hpp"

#include <algorithm>
#include <numeric>

#include "hallfock/errors.hpp"
#include "hallfock/fock.hpp"

namespace hallfock {
namespace shuffle {

namespace {

constexpr int kExactVarCap = 3;

VarId zvar(int slot) { return VarReg::z(slot + 1); }

int floordiv(long a, long b) {
    long q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return static_cast<int>(q);
}

Monomial q_mono() { return Monomial::var(VarReg::q1) * Monomial::var(VarReg::q2); }

} // namespace

Scalar zeta_fn(const Scalar& x) {
    Scalar q1 = Scalar::q1(), q2 = Scalar::q2(), q = Scalar::q();
    return (Scalar(1) - x * q1) * (Scalar(1) - x * q2) /
           ((Scalar(1) - x) * (Scalar(1) - x * q));
}

LaurentPoly LinFactor::poly() const {
    return LaurentPoly::variable(zvar(zi)) -
           LaurentPoly::monomial(scale * Monomial::var(zvar(zj)));
}

Scalar RationalFn::value() const {
    LaurentPoly den = LaurentPoly::monomial(den_mono);
    for (const auto& f : den_factors) den = den * f.poly();
    return Scalar::normalize(num, den);
}

RationalFn RationalFn::permuted(const std::vector<int>& perm) const {
    RationalFn r;
    r.nvars = nvars;
    r.den_mono = den_mono;
    // substitute z_i -> z_{perm[i]} via temporaries to avoid collisions
    LaurentPoly p = num;
    Monomial dm = den_mono;
    std::vector<VarId> tmp;
    for (int i = 0; i < nvars; ++i) tmp.push_back(VarReg::z(100 + i + 1));
    for (int i = 0; i < nvars; ++i) p = p.substituted(zvar(i), Monomial::var(tmp[static_cast<std::size_t>(i)]));
    for (int i = 0; i < nvars; ++i)
        p = p.substituted(tmp[static_cast<std::size_t>(i)],
                          Monomial::var(zvar(perm[static_cast<std::size_t>(i)])));
    Monomial m;
    for (const auto& [v, e] : den_mono.entries()) {
        bool mapped = false;
        for (int i = 0; i < nvars; ++i)
            if (v == zvar(i)) {
                m = m * Monomial::var(zvar(perm[static_cast<std::size_t>(i)]), e);
                mapped = true;
            }
        if (!mapped) m = m * Monomial::var(v, e);
    }
    r.num = p;
    r.den_mono = m;
    for (const auto& f : den_factors)
        r.den_factors.push_back({perm[static_cast<std::size_t>(f.zi)],
                                 perm[static_cast<std::size_t>(f.zj)], f.scale});
    std::sort(r.den_factors.begin(), r.den_factors.end());
    return r;
}

bool RationalFn::is_symmetric_exact() const {
    Scalar v = value();
    for (int i = 0; i + 1 < nvars; ++i) {
        std::vector<int> perm(static_cast<std::size_t>(nvars));
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]);
        if (permuted(perm).value() != v) return false;
    }
    return true;
}

std::vector<int> d_sequence(int n, int m) {
    std::vector<int> d(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        d[static_cast<std::size_t>(i - 1)] =
            floordiv(static_cast<long>(m) * i, n) - floordiv(static_cast<long>(m) * (i - 1), n);
    return d;
}

RationalFn r_kernel(int n, int m) {
    if (n < 1) throw argument_error("r_kernel needs n >= 1");
    if (n > kExactVarCap) throw capability_error("exact mode is capped at 3 variables");
    RationalFn r;
    r.nvars = n;
    std::vector<int> d = d_sequence(n, m);
    Monomial q = q_mono();
    // (-q)^n * prod z_i^{d_i} * prod_{i<n} z_i * prod_{i<j} (z_i - z_j)
    //                         * prod_{j>i+1} (z_i - q z_j)
    // over prod_{i<j} (z_i - q1 z_j)(z_i - q2 z_j)
    Monomial lead = q.pow(n);
    for (int i = 0; i < n; ++i) lead = lead * Monomial::var(zvar(i), d[static_cast<std::size_t>(i)]);
    for (int i = 0; i + 1 < n; ++i) lead = lead * Monomial::var(zvar(i));
    r.num = LaurentPoly::monomial(lead, (n % 2 == 0) ? 1 : -1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            r.num = r.num * (LaurentPoly::variable(zvar(i)) - LaurentPoly::variable(zvar(j)));
            if (j > i + 1)
                r.num = r.num * (LaurentPoly::variable(zvar(i)) -
                                 LaurentPoly::monomial(q * Monomial::var(zvar(j))));
            r.den_factors.push_back({i, j, Monomial::var(VarReg::q1)});
            r.den_factors.push_back({i, j, Monomial::var(VarReg::q2)});
        }
    std::sort(r.den_factors.begin(), r.den_factors.end());
    return r;
}

namespace {

// multiset union of factor lists
std::vector<LinFactor> factor_union(const std::vector<std::vector<LinFactor>>& lists) {
    std::map<LinFactor, int> mult;
    for (const auto& l : lists) {
        std::map<LinFactor, int> here;
        for (const auto& f : l) ++here[f];
        for (const auto& [f, c] : here) mult[f] = std::max(mult[f], c);
    }
    std::vector<LinFactor> u;
    for (const auto& [f, c] : mult)
        for (int i = 0; i < c; ++i) u.push_back(f);
    return u;
}

// cancel factors and monomials that divide the numerator
void reduce(RationalFn& r) {
    for (std::size_t i = 0; i < r.den_factors.size();) {
        LaurentPoly q;
        if (LaurentPoly::try_divide(r.num, r.den_factors[i].poly(), q)) {
            r.num = q;
            r.den_factors.erase(r.den_factors.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    // fold the numerator's monomial content into den_mono
    Monomial m = r.num.min_exponents();
    if (!m.is_one()) {
        r.num = r.num.mono_scaled(m.inverse());
        r.den_mono = r.den_mono / m;
    }
    // den_mono can cancel against itself only via num; keep as is
}

RationalFn sum_over_perms(const RationalFn& f, const std::vector<std::vector<int>>& perms,
                          const Rat& scale) {
    std::vector<RationalFn> terms;
    terms.reserve(perms.size());
    for (const auto& p : perms) terms.push_back(f.permuted(p));
    std::vector<std::vector<LinFactor>> lists;
    for (const auto& t : terms) lists.push_back(t.den_factors);
    std::vector<LinFactor> common = factor_union(lists);
    // common denominator monomial: componentwise max
    Monomial cm;
    for (const auto& t : terms) cm = Monomial::max(cm, t.den_mono);
    LaurentPoly num;
    for (const auto& t : terms) {
        LaurentPoly part = t.num.mono_scaled(cm / t.den_mono);
        // multiply by the missing factors
        std::map<LinFactor, int> have;
        for (const auto& f2 : t.den_factors) ++have[f2];
        std::map<LinFactor, int> want;
        for (const auto& f2 : common) ++want[f2];
        for (const auto& [f2, c] : want) {
            int missing = c - have[f2];
            for (int i = 0; i < missing; ++i) part = part * f2.poly();
        }
        num += part;
    }
    RationalFn out;
    out.nvars = f.nvars;
    out.num = num.scaled(scale);
    out.den_mono = cm;
    out.den_factors = std::move(common);
    reduce(out);
    return out;
}

std::vector<std::vector<int>> all_perms(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

ShuffleElement symmetrize(const RationalFn& f) {
    if (f.nvars > kExactVarCap)
        throw capability_error("exact symmetrization is capped at 3 variables");
    RationalFn s = sum_over_perms(f, all_perms(f.nvars), 1);
    if (!s.is_symmetric_exact()) throw internal_error("symmetrization failed");
    return ShuffleElement{std::move(s)};
}

ShuffleElement star(const ShuffleElement& A, const ShuffleElement& B) {
    int n = A.fn.nvars, n2 = B.fn.nvars;
    if (n + n2 > kExactVarCap)
        throw capability_error("star product exceeds the 3-variable exact cap");
    if (n2 == 0) return A;
    if (n == 0) return B;
    // relabel B's variables to slots n..n+n2-1
    RationalFn b = B.fn;
    {
        b.nvars = n + n2;
        std::vector<int> perm(static_cast<std::size_t>(n + n2));
        for (int i = 0; i < n2; ++i) perm[static_cast<std::size_t>(i)] = n + i;
        for (int i = n2; i < n + n2; ++i) perm[static_cast<std::size_t>(i)] = i - n2;
        b = b.permuted(perm);
    }
    RationalFn prod;
    prod.nvars = n + n2;
    prod.num = A.fn.num * b.num;
    prod.den_mono = A.fn.den_mono * b.den_mono;
    prod.den_factors = A.fn.den_factors;
    prod.den_factors.insert(prod.den_factors.end(), b.den_factors.begin(), b.den_factors.end());
    Monomial q1 = Monomial::var(VarReg::q1), q2 = Monomial::var(VarReg::q2);
    Monomial one;
    for (int i = 0; i < n; ++i)
        for (int j = n; j < n + n2; ++j) {
            // zeta(z_i / z_j) = (z_j - q1 z_i)(z_j - q2 z_i) /
            //                   ((z_j - z_i)(z_j - q z_i))
            prod.num = prod.num *
                       (LaurentPoly::variable(zvar(j)) -
                        LaurentPoly::monomial(q1 * Monomial::var(zvar(i)))) *
                       (LaurentPoly::variable(zvar(j)) -
                        LaurentPoly::monomial(q2 * Monomial::var(zvar(i))));
            prod.den_factors.push_back({j, i, one});
            prod.den_factors.push_back({j, i, q_mono()});
        }
    Rat fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (int i = 2; i <= n2; ++i) fact *= i;
    RationalFn s = sum_over_perms(prod, all_perms(n + n2), 1 / fact);
    if (!s.is_symmetric_exact()) throw internal_error("star product is not symmetric");
    return ShuffleElement{std::move(s)};
}

namespace {

enum class Size { Big, Small, Ambiguous, Unit };

Size classify(const Monomial& scale) {
    bool pos = false, neg = false;
    for (const auto& [v, e] : scale.entries()) {
        if (e > 0) pos = true;
        if (e < 0) neg = true;
    }
    if (pos && neg) return Size::Ambiguous;
    if (pos) return Size::Big;
    if (neg) return Size::Small;
    return Size::Unit;
}

struct CandidateFactor {
    int zi, zj;
    Monomial scale; // pole of z_{zi} at scale * z_{zj}
};

// One variable of the iterated equal-contour extraction.
Scalar ct_one_var(const Scalar& F, int v, int nvars, std::vector<CandidateFactor>& cands) {
    VarId zv = zvar(v);
    // contribution of the pole at z_v = 0
    Scalar out = series_coeff_at_zero(F.num(), F.den(), zv, 0);
    std::vector<CandidateFactor> remaining, with_v;
    for (const auto& c : cands) {
        if (c.zi == v || c.zj == v)
            with_v.push_back(c);
        else
            remaining.push_back(c);
    }
    // inside poles: z_v = scale * z_b with |scale| < 1 (from factors
    // (z_v - scale z_b)), or z_v = z_a / scale with |scale| > 1 (from
    // factors (z_a - scale z_v))
    std::vector<std::pair<Monomial, int>> poles; // (scale, other slot)
    for (const auto& c : with_v) {
        if (c.zi == v && c.zj != v) {
            Size s = classify(c.scale);
            if (s == Size::Small)
                poles.push_back({c.scale, c.zj});
            else if (s == Size::Ambiguous || s == Size::Unit)
                poles.push_back({c.scale, c.zj}); // verified below
        } else if (c.zj == v && c.zi != v) {
            Monomial inv = c.scale.inverse();
            Size s = classify(inv);
            if (s == Size::Small || s == Size::Ambiguous || s == Size::Unit)
                poles.push_back({inv, c.zi});
        }
    }
    // dedupe pole positions
    std::sort(poles.begin(), poles.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return Monomial::compare(a.first, b.first) < 0;
    });
    poles.erase(std::unique(poles.begin(), poles.end(),
                            [](const auto& a, const auto& b) {
                                return a.second == b.second && a.first == b.first;
                            }),
                poles.end());
    Scalar F_over_z = F * Scalar::variable(zv, -1);
    for (const auto& [scale, other] : poles) {
        Monomial p = scale * Monomial::var(zvar(other));
        Scalar res = residue_at_monomial_pole(F_over_z, zv, p);
        if (res.is_zero()) continue;
        Size s = classify(scale);
        if (s == Size::Ambiguous || s == Size::Unit)
            throw capability_error(
                "equal-contour pole with modulus not determined by |q1|,|q2| > 1");
        out += res;
        // substituted candidates for the remaining variables
        for (const auto& c : with_v) {
            if (c.zi == v && c.zj != v && c.zj != other) {
                // (scale' z_other - c.scale z_{c.zj}) -> (z_other - (c.scale/scale') z_cj)
                remaining.push_back({other, c.zj, c.scale / scale});
            } else if (c.zj == v && c.zi != v && c.zi != other) {
                remaining.push_back({c.zi, other, c.scale * scale});
            }
        }
    }
    (void)nvars;
    cands = std::move(remaining);
    return out;
}

} // namespace

namespace {

// G is z-homogeneous in all our uses; the total z-degree pins which
// coefficients can be nonzero.
int z_total_degree(const RationalFn& G) {
    auto zdeg = [&](const Monomial& m) {
        std::int64_t d = 0;
        for (int i = 0; i < G.nvars; ++i) d += m.exponent(zvar(i));
        return d;
    };
    std::int64_t deg = 0;
    bool first = true;
    for (const auto& t : G.num.terms()) {
        std::int64_t d = zdeg(t.mono);
        if (first)
            deg = d;
        else if (d != deg)
            throw internal_error("non-homogeneous shuffle numerator");
        first = false;
    }
    deg -= zdeg(G.den_mono);
    deg -= static_cast<std::int64_t>(G.den_factors.size());
    return static_cast<int>(deg);
}

struct PreparedContour {
    int nvars = 0;
    int zdeg = 0;
    Scalar F0;
    std::vector<CandidateFactor> cands;
    std::map<std::vector<int>, Scalar> memo;
};

PreparedContour prepare_contour(const RationalFn& G) {
    PreparedContour p;
    p.nvars = G.nvars;
    p.zdeg = z_total_degree(G);
    LaurentPoly den = LaurentPoly::monomial(G.den_mono);
    for (const auto& f : G.den_factors) den = den * f.poly();
    p.F0 = Scalar::normalize(G.num, den);
    for (const auto& f : G.den_factors) p.cands.push_back({f.zi, f.zj, f.scale});
    return p;
}

Scalar contour_coeff(PreparedContour& p, const std::vector<int>& t) {
    auto it = p.memo.find(t);
    if (it != p.memo.end()) return it->second;
    Monomial shift;
    for (int i = 0; i < p.nvars; ++i)
        shift = shift * Monomial::var(zvar(i), -t[static_cast<std::size_t>(i)]);
    Scalar F = p.F0 * Scalar::monomial(shift);
    std::vector<CandidateFactor> cands = p.cands;
    for (int v = 0; v < p.nvars; ++v) {
        if (F.is_zero()) break;
        F = ct_one_var(F, v, p.nvars, cands);
    }
    if (F.depends_on_z())
        throw internal_error("equal-contour coefficient still depends on z");
    p.memo.emplace(t, F);
    return F;
}

} // namespace

Scalar equal_contour_coeff(const RationalFn& G, const std::vector<int>& t) {
    if (static_cast<int>(t.size()) != G.nvars) throw argument_error("wrong exponent count");
    PreparedContour p = prepare_contour(G);
    return contour_coeff(p, t);
}

SymFunc apply_equal_contour(const RationalFn& G, const Rat& pref, const SymFunc& f) {
    const int N = G.nvars;
    SymFunc out;
    std::map<int, SymFunc> comps;
    for (const auto& [l, c] : f.terms()) comps[l.size()] += SymFunc::term(l, c);
    PreparedContour prep = prepare_contour(G);
    const int m = prep.zdeg;

    // X(z_1..z_N) = exp[-sum z^-k p_k/(k q^k)] exp[sum z^k p_k^dag / k]
    auto creation_block = [&](int c) {
        if (c == 0) return SymFunc::one();
        Scalar s = Scalar::monomial(q_mono().pow(-c), (c % 2 == 0) ? 1 : -1);
        return e_poly(c).scaled(s);
    };
    auto annihilate = [&](int b, const SymFunc& g) {
        if (b == 0) return g;
        SymFunc outg;
        for (const auto& mu : partitions_of(b)) {
            SymFunc h = g;
            for (int part : mu.parts()) {
                h = apply_p_dagger(part, h);
                if (h.is_zero()) break;
            }
            outg += h.scaled(Scalar(1 / mu.z()));
        }
        return outg;
    };
    std::function<void(int, int, std::vector<int>&, const std::function<void(const std::vector<int>&)>&)>
        tuples = [&](int slots, int total, std::vector<int>& cur,
                     const std::function<void(const std::vector<int>&)>& cb) {
            if (slots == 1) {
                cur.push_back(total);
                cb(cur);
                cur.pop_back();
                return;
            }
            for (int v = 0; v <= total; ++v) {
                cur.push_back(v);
                tuples(slots - 1, total - v, cur, cb);
                cur.pop_back();
            }
        };

    for (const auto& [k, g] : comps) {
        if (k + m < 0) continue;
        std::map<std::vector<int>, SymFunc> ann_cache, cre_cache;
        for (int btot = 0; btot <= k; ++btot) {
            int ctot = btot + m;
            if (ctot < 0) continue;
            std::vector<int> cur;
            tuples(N, btot, cur, [&](const std::vector<int>& b) {
                std::vector<int> bs(b);
                std::sort(bs.begin(), bs.end());
                auto ai = ann_cache.find(bs);
                if (ai == ann_cache.end()) {
                    SymFunc gb = g;
                    for (int bi : bs) gb = annihilate(bi, gb);
                    ai = ann_cache.emplace(bs, std::move(gb)).first;
                }
                if (ai->second.is_zero()) return;
                std::vector<int> cur2;
                tuples(N, ctot, cur2, [&](const std::vector<int>& c) {
                    std::vector<int> t(static_cast<std::size_t>(N));
                    for (int i = 0; i < N; ++i)
                        t[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] -
                                                         b[static_cast<std::size_t>(i)];
                    Scalar kappa = contour_coeff(prep, t);
                    if (kappa.is_zero()) return;
                    std::vector<int> cs(c);
                    std::sort(cs.begin(), cs.end());
                    auto ci = cre_cache.find(cs);
                    if (ci == cre_cache.end()) {
                        SymFunc prod = SymFunc::one();
                        for (int cc : cs) prod = prod * creation_block(cc);
                        ci = cre_cache.emplace(cs, std::move(prod)).first;
                    }
                    out += (ci->second * ai->second).scaled(kappa * Scalar(pref));
                });
            });
        }
    }
    return out;
}

SymFunc psi_H_minus_via_shuffle(int n, int m, const SymFunc& f) {
    ShuffleElement R = symmetrize(r_kernel(n, m));
    Rat fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    return apply_equal_contour(R.fn, 1 / fact, f);
}

IdentityResult star_vs_fock(int n, int m, int n2, int m2, int cap) {
    std::string params = "R(" + std::to_string(n) + "," + std::to_string(m) + ") * R(" +
                         std::to_string(n2) + "," + std::to_string(m2) + ")";
    ShuffleElement S = star(symmetrize(r_kernel(n, m)), symmetrize(r_kernel(n2, m2)));
    Rat fact = 1;
    for (int i = 2; i <= n + n2; ++i) fact *= i;
    DegreeCapGuard guard(cap + std::abs(m) + std::abs(m2) + 2);
    for (const auto& l : partitions_up_to(cap)) {
        SymFunc f = SymFunc::p(l);
        SymFunc lhs = fock::apply_psi_H(-n, m, fock::apply_psi_H(-n2, m2, f));
        SymFunc rhs = apply_equal_contour(S.fn, 1 / fact, f);
        if (lhs != rhs)
            return IdentityResult::fail("star-vs-fock", params,
                                        "witness p" + l.str() + ": fock " + lhs.str() +
                                            " vs shuffle " + rhs.str());
    }
    return IdentityResult::ok("star-vs-fock", params);
}

} // namespace shuffle
} // namespace hallfock
