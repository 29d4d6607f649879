#include "hallfock/ktheory.hpp"

#include <algorithm>

#include "hallfock/errors.hpp"
#include "hallfock/fock.hpp"
#include "hallfock/series.hpp"

#include <json.hpp>

namespace hallfock {
namespace ktheory {

RPartition::RPartition(std::vector<Partition> components) : c_(std::move(components)) {
    if (c_.empty()) throw argument_error("r must be >= 1");
}

int RPartition::size() const {
    int s = 0;
    for (const auto& p : c_) s += p.size();
    return s;
}

bool RPartition::operator<(const RPartition& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    return c_ < o.c_;
}

std::string RPartition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += c_[i].str();
    }
    return s + ")";
}

bool FixedPointVector::operator==(const FixedPointVector& o) const {
    return r == o.r && d == o.d && entries == o.entries;
}

std::string FixedPointVector::json() const {
    nlohmann::json j;
    j["r"] = r;
    j["d"] = d;
    j["entries"] = nlohmann::json::array();
    for (const auto& [lam, c] : entries) {
        nlohmann::json e;
        e["rpartition"] = nlohmann::json::array();
        for (const auto& p : lam.components()) e["rpartition"].push_back(p.parts());
        e["coeff"] = c.str();
        j["entries"].push_back(std::move(e));
    }
    return j.dump();
}

FixedPointVector FixedPointVector::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    FixedPointVector v;
    v.r = j.at("r").get<int>();
    v.d = j.at("d").get<int>();
    for (const auto& e : j.at("entries")) {
        std::vector<Partition> comps;
        for (const auto& p : e.at("rpartition"))
            comps.push_back(Partition(p.get<std::vector<int>>()));
        v.entries.emplace(RPartition(std::move(comps)),
                          Scalar::parse(e.at("coeff").get<std::string>()));
    }
    return v;
}

std::vector<RPartition> rpartitions(int r, int d) {
    if (r < 1) throw argument_error("r must be >= 1");
    if (d < 0) throw argument_error("d must be >= 0");
    std::vector<RPartition> out;
    std::vector<Partition> cur;
    std::function<void(int, int)> rec = [&](int i, int rem) {
        if (i == r - 1) {
            for (const auto& p : partitions_of(rem)) {
                cur.push_back(p);
                out.push_back(RPartition(cur));
                cur.pop_back();
            }
            return;
        }
        for (int s = 0; s <= rem; ++s)
            for (const auto& p : partitions_of(s)) {
                cur.push_back(p);
                rec(i + 1, rem - s);
                cur.pop_back();
            }
    };
    rec(0, d);
    return out;
}

long rpartition_count(int r, int d) {
    // r-fold convolution of the partition-count sequence
    std::vector<long> acc(static_cast<std::size_t>(d) + 1, 0);
    acc[0] = 1;
    for (int i = 0; i < r; ++i) {
        std::vector<long> next(acc.size(), 0);
        for (int a = 0; a <= d; ++a) {
            if (acc[static_cast<std::size_t>(a)] == 0) continue;
            for (int b = 0; a + b <= d; ++b)
                next[static_cast<std::size_t>(a + b)] +=
                    acc[static_cast<std::size_t>(a)] * partition_count(b);
        }
        acc = std::move(next);
    }
    return acc[static_cast<std::size_t>(d)];
}

TorusCharacter fixed_point_character(const RPartition& lam) {
    TorusCharacter chi;
    for (int i = 0; i < lam.rank(); ++i) {
        Monomial ui = Monomial::var(VarReg::u(i + 1));
        chi.add(ui, 1);
        const Partition& p = lam.components()[static_cast<std::size_t>(i)];
        for (int y = 0; y < p.length(); ++y)
            for (int x = 0; x < p.part(y); ++x) {
                Monomial cell = ui * Monomial::var(VarReg::q1, x) * Monomial::var(VarReg::q2, y);
                // -(1-q1)(1-q2) * cell
                chi.add(cell, -1);
                chi.add(cell * Monomial::var(VarReg::q1), 1);
                chi.add(cell * Monomial::var(VarReg::q2), 1);
                chi.add(cell * Monomial::var(VarReg::q1) * Monomial::var(VarReg::q2), -1);
            }
    }
    return chi;
}

FixedPointVector gamma_eval(const SymFunc& f, int r, int d) {
    FixedPointVector v;
    v.r = r;
    v.d = d;
    for (const auto& lam : rpartitions(r, d)) {
        Scalar c = plethysm_eval(f, fixed_point_character(lam));
        if (!c.is_zero()) v.entries.emplace(lam, c);
    }
    return v;
}

std::vector<std::pair<RPartition, BoxWeight>> add_boxes(const RPartition& mu) {
    std::vector<std::pair<RPartition, BoxWeight>> out;
    for (int i = 0; i < mu.rank(); ++i) {
        const Partition& p = mu.components()[static_cast<std::size_t>(i)];
        for (int y = 0; y <= p.length(); ++y) {
            int len = y < p.length() ? p.part(y) : 0;
            if (y > 0 && p.part(y - 1) <= len) continue; // not addable
            std::vector<int> parts = p.parts();
            if (y < p.length())
                ++parts[static_cast<std::size_t>(y)];
            else
                parts.push_back(1);
            std::vector<Partition> comps = mu.components();
            comps[static_cast<std::size_t>(i)] = Partition(std::move(parts));
            Monomial w = Monomial::var(VarReg::u(i + 1)) * Monomial::var(VarReg::q1, len) *
                         Monomial::var(VarReg::q2, y);
            out.push_back({RPartition(std::move(comps)), BoxWeight{w}});
        }
    }
    return out;
}

VandermondeSystem vandermonde_system(const RPartition& mu, const RPartition& target) {
    auto boxes = add_boxes(mu);
    int t = -1;
    for (std::size_t i = 0; i < boxes.size(); ++i)
        if (boxes[i].first == target) t = static_cast<int>(i);
    if (t < 0) throw argument_error("target is not reachable by adding one box");
    // distinct weights make the interpolation solvable
    for (std::size_t i = 0; i < boxes.size(); ++i)
        for (std::size_t j = i + 1; j < boxes.size(); ++j)
            if (boxes[i].second.value == boxes[j].second.value)
                throw degenerate_input_error("two addable boxes share a weight");
    // p(x) = (x / w_t) prod_{j != t} (x - w_j)/(w_t - w_j) has p(w_j) = delta,
    // no constant term; its x^1..x^s coefficients are the selector.
    std::size_t s = boxes.size();
    VandermondeSystem sys;
    sys.weights.reserve(s);
    for (const auto& [lam, bw] : boxes) sys.weights.push_back(bw.value);
    Monomial wt = boxes[static_cast<std::size_t>(t)].second.value;
    std::vector<LaurentPoly> poly{LaurentPoly::constant(1)}; // coefficients in x
    sys.denom = LaurentPoly::monomial(wt);
    for (std::size_t j = 0; j < s; ++j) {
        if (static_cast<int>(j) == t) continue;
        LaurentPoly wj = LaurentPoly::monomial(boxes[j].second.value);
        // multiply poly by (x - w_j)
        std::vector<LaurentPoly> next(poly.size() + 1);
        for (std::size_t a = 0; a < poly.size(); ++a) {
            next[a + 1] += poly[a];
            next[a] -= poly[a] * wj;
        }
        poly = std::move(next);
        sys.denom = sys.denom * (LaurentPoly::monomial(wt) - wj);
    }
    sys.numerators.assign(s, LaurentPoly());
    for (std::size_t a = 0; a < s && a < poly.size(); ++a) sys.numerators[a] = poly[a];
    sys.target = t;
    return sys;
}

bool VandermondeSystem::solves_exactly() const {
    for (std::size_t j = 0; j < weights.size(); ++j) {
        LaurentPoly sum;
        LaurentPoly wp = LaurentPoly::constant(1);
        const LaurentPoly wj = LaurentPoly::monomial(weights[j]);
        for (const auto& n : numerators) {
            wp = wp * wj;
            sum += n * wp;
        }
        // delta: equals denom at the target weight, 0 elsewhere
        if (static_cast<int>(j) == target) {
            if (!sum.equals(denom)) return false;
        } else if (!sum.is_zero()) {
            return false;
        }
    }
    return true;
}

std::vector<Scalar> vandermonde_select(const RPartition& mu, const RPartition& target) {
    VandermondeSystem sys = vandermonde_system(mu, target);
    std::vector<Scalar> coeffs;
    coeffs.reserve(sys.numerators.size());
    for (const auto& n : sys.numerators) coeffs.push_back(Scalar::normalize(n, sys.denom));
    return coeffs;
}

namespace {

// Builds the one-variable universal-class integrand (including the measure
// dz/z) at character chi as a num/den pair:
//   sign -: (-q) z^{m-1} wedge(chi/(zq)) f[chi + (1-q1)(1-q2) z]
//   sign +:      z^{m-1} wedge(-chi/z)  f[chi - (1-q1)(1-q2) z]
struct Integrand {
    LaurentPoly num, den;
};

TorusCharacter shifted_character(const TorusCharacter& chi, int sign, VarId z) {
    TorusCharacter ext = chi;
    Monomial zm = Monomial::var(z);
    // +- (1-q1)(1-q2) z as a signed monomial sum
    ext.add(zm, sign);
    ext.add(zm * Monomial::var(VarReg::q1), -sign);
    ext.add(zm * Monomial::var(VarReg::q2), -sign);
    ext.add(zm * Monomial::var(VarReg::q1) * Monomial::var(VarReg::q2), sign);
    return ext;
}

// wedge(chi / (z q)) for sign -, wedge(-chi / z) for sign +, as num/den.
void append_wedge(Integrand& g, const TorusCharacter& chi, int sign, VarId z) {
    Monomial q = Monomial::var(VarReg::q1) * Monomial::var(VarReg::q2);
    for (const auto& [w, c] : chi.terms()) {
        // sign -: (1 - w/(zq))^c = ((zq - w)/(zq))^c
        // sign +: (1 - w/z)^(-c) = ((z - w)/z)^(-c)
        LaurentPoly lin;
        Monomial shift;
        if (sign < 0) {
            lin = LaurentPoly::monomial(Monomial::var(z) * q) - LaurentPoly::monomial(w);
            shift = Monomial::var(z) * q;
        } else {
            lin = LaurentPoly::variable(z) - LaurentPoly::monomial(w);
            shift = Monomial::var(z);
        }
        long e = sign < 0 ? c : -c;
        for (long i = 0; i < (e > 0 ? e : -e); ++i) {
            if (e > 0) {
                g.num = g.num * lin;
                g.den = g.den * LaurentPoly::monomial(shift);
            } else {
                g.den = g.den * lin;
                g.num = g.num * LaurentPoly::monomial(shift);
            }
        }
    }
}

Integrand build_integrand_H1(int sign, int m, const SymFunc& f, const TorusCharacter& chi,
                             VarId z) {
    Integrand g;
    g.num = LaurentPoly::variable(z, m - 1);
    g.den = LaurentPoly::constant(1);
    if (sign < 0) {
        Monomial q = Monomial::var(VarReg::q1) * Monomial::var(VarReg::q2);
        g.num = g.num.mono_scaled(q, -1); // the (-q) prefactor
    }
    append_wedge(g, chi, sign, z);
    Scalar fp = plethysm_eval(f, shifted_character(chi, sign < 0 ? 1 : -1, z));
    g.num = g.num * fp.num();
    g.den = g.den * fp.den();
    return g;
}

} // namespace

FixedPointVector phi_H1_residues(int sign, int m, const SymFunc& f, int r, int d) {
    if (sign != 1 && sign != -1) throw argument_error("sign must be +-1");
    FixedPointVector v;
    v.r = r;
    v.d = d;
    VarId z = VarReg::z(90);
    for (const auto& lam : rpartitions(r, d)) {
        TorusCharacter chi = fixed_point_character(lam);
        Integrand g = build_integrand_H1(sign, m, f, chi, z);
        Scalar val = residue_sum_excluding_origin(g.num, g.den, z);
        if (val.depends_on(z)) throw internal_error("residue sum still depends on z");
        if (!val.is_zero()) v.entries.emplace(lam, val);
    }
    return v;
}

Scalar build_integrand_H2(int sign, int m, const SymFunc& f, const TorusCharacter& chi,
                          VarId z1, VarId z2);

Scalar residue_at_zero_certificate(int sign, int n, int m, const SymFunc& f,
                                   const TorusCharacter& chi) {
    if (sign != 1 && sign != -1) throw argument_error("sign must be +-1");
    if (n == 1) {
        VarId z = VarReg::z(90);
        Integrand g = build_integrand_H1(sign, m, f, chi, z);
        return residue_at_zero(g.num, g.den, z);
    }
    if (n != 2) throw argument_error("certificate implemented for n in {1,2}");
    // iterated: residue at 0 in the innermost variable, then the outer
    // contour integral of what that residue contributes
    VarId z1 = VarReg::z(91), z2 = VarReg::z(92);
    VarId inner = sign < 0 ? z1 : z2;
    VarId outer = sign < 0 ? z2 : z1;
    Scalar g = build_integrand_H2(sign, m, f, chi, z1, z2);
    Scalar inner_res = residue_at_zero(g.num(), g.den(), inner);
    if (inner_res.is_zero()) return inner_res;
    return residue_sum_excluding_origin(inner_res.num(), inner_res.den(), outer);
}

// Two-variable universal-class integrand for H_{+-2,m}, measure included:
//   kernel z1 (z1 - z2) / ((z1 - q1 z2)(z1 - q2 z2))  (after the exact
//   cancellation of (1 - z2 q/z1) against the zeta numerator)
Scalar build_integrand_H2(int sign, int m, const SymFunc& f, const TorusCharacter& chi,
                          VarId z1, VarId z2) {
    std::vector<int> d(2);
    auto fdiv = [](long a, long b) {
        long q = a / b, r = a % b;
        if (r != 0 && ((r < 0) != (b < 0))) --q;
        return static_cast<int>(q);
    };
    d[0] = fdiv(m, 2);
    d[1] = m - d[0];
    Integrand g;
    g.num = LaurentPoly::monomial(Monomial::var(z1, d[0] - 1) * Monomial::var(z2, d[1] - 1));
    g.den = LaurentPoly::constant(1);
    // kernel
    g.num = g.num * LaurentPoly::variable(z1) *
            (LaurentPoly::variable(z1) - LaurentPoly::variable(z2));
    g.den = g.den *
            (LaurentPoly::variable(z1) -
             LaurentPoly::monomial(Monomial::var(VarReg::q1) * Monomial::var(z2))) *
            (LaurentPoly::variable(z1) -
             LaurentPoly::monomial(Monomial::var(VarReg::q2) * Monomial::var(z2)));
    if (sign < 0) {
        Monomial q2m = (Monomial::var(VarReg::q1) * Monomial::var(VarReg::q2)).pow(2);
        g.num = g.num.mono_scaled(q2m); // (-q)^2 = q^2
    }
    append_wedge(g, chi, sign, z1);
    append_wedge(g, chi, sign, z2);
    TorusCharacter ext = shifted_character(chi, sign < 0 ? 1 : -1, z1);
    ext = shifted_character(ext, sign < 0 ? 1 : -1, z2);
    Scalar fp = plethysm_eval(f, ext);
    return Scalar::normalize(g.num * fp.num(), g.den * fp.den());
}

FixedPointVector phi_H2_residues(int sign, int m, const SymFunc& f, int r, int d) {
    if (sign != 1 && sign != -1) throw argument_error("sign must be +-1");
    FixedPointVector v;
    v.r = r;
    v.d = d;
    VarId z1 = VarReg::z(91), z2 = VarReg::z(92);
    // contour nesting: minus: U < |z1| < |z2| < 0,inf (z1 innermost);
    // plus: U < |z2| < |z1| < 0,inf (z2 innermost).  The kernel poles that
    // link the two variables sit outside the inner contour.
    VarId inner = sign < 0 ? z1 : z2;
    VarId outer = sign < 0 ? z2 : z1;
    for (const auto& lam : rpartitions(r, d)) {
        TorusCharacter chi = fixed_point_character(lam);
        Scalar g = build_integrand_H2(sign, m, f, chi, z1, z2);
        // inner variable: all residues except 0, infinity, and the
        // variable-linking kernel poles
        Scalar step = residue_sum_excluding_origin(g.num(), g.den(), inner);
        for (VarId qv : {VarReg::q1, VarReg::q2}) {
            Monomial pole;
            if (sign < 0)
                pole = Monomial::var(qv) * Monomial::var(z2); // z1 = q_a z2
            else
                pole = Monomial::var(z1) / Monomial::var(qv); // z2 = z1 / q_a
            step -= residue_at_monomial_pole(g, inner, pole);
        }
        Scalar val = residue_sum_excluding_origin(step.num(), step.den(), outer);
        if (val.depends_on(z1) || val.depends_on(z2))
            throw internal_error("stretch residue still depends on z");
        if (!val.is_zero()) v.entries.emplace(lam, val);
    }
    return v;
}

SuiteReport intertwine_check(int r, int d, int n, int m, int f_deg) {
    SuiteReport rep;
    rep.suite = "intertwine";
    std::string gen = (n == 0 ? "P(0," : "H(" + std::to_string(n) + ",") + std::to_string(m) + ")";
    DegreeCapGuard guard(f_deg + std::abs(m) + 4);
    for (int dd = 0; dd <= d; ++dd) {
        for (const auto& l : partitions_up_to(f_deg)) {
            SymFunc f = SymFunc::p(l);
            std::string params = "r=" + std::to_string(r) + " d=" + std::to_string(dd) +
                                 " gen=" + gen + " f=p" + l.str();
            FixedPointVector lhs, rhs;
            if (n == 0) {
                if (m < 1) throw argument_error("P(0,m) intertwining needs m >= 1");
                lhs = gamma_eval(apply_p(m, f), r, dd);
                FixedPointVector gf = gamma_eval(f, r, dd);
                FixedPointVector pm = gamma_eval(SymFunc::p(m), r, dd);
                rhs.r = r;
                rhs.d = dd;
                for (const auto& [lam, c] : gf.entries) {
                    auto it = pm.entries.find(lam);
                    if (it == pm.entries.end()) continue;
                    Scalar prod = c * it->second;
                    if (!prod.is_zero()) rhs.entries.emplace(lam, prod);
                }
            } else if (n == 1 || n == -1) {
                lhs = gamma_eval(fock::apply_psi_H(n, m, f), r, dd);
                rhs = phi_H1_residues(n, m, f, r, dd);
            } else if (n == 2 || n == -2) {
                lhs = gamma_eval(fock::apply_psi_H(n, m, f), r, dd);
                rhs = phi_H2_residues(n > 0 ? 1 : -1, m, f, r, dd);
            } else {
                throw argument_error("residue side implemented for |n| <= 2");
            }
            if (lhs == rhs) {
                rep.add(IdentityResult::ok("intertwine", params));
            } else {
                std::string witness;
                for (const auto& lam : rpartitions(r, dd)) {
                    Scalar a, b;
                    auto ia = lhs.entries.find(lam);
                    if (ia != lhs.entries.end()) a = ia->second;
                    auto ib = rhs.entries.find(lam);
                    if (ib != rhs.entries.end()) b = ib->second;
                    if (a != b) {
                        witness = "at " + lam.str() + ": Fock side " + a.str() +
                                  ", residue side " + b.str();
                        break;
                    }
                }
                rep.add(IdentityResult::fail("intertwine", params, witness));
            }
        }
    }
    return rep;
}

} // namespace ktheory
} // namespace hallfock
