#include "hallfock/fock.hpp"

#include <atomic>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>

#include "hallfock/errors.hpp"

namespace hallfock {
namespace fock {

std::string Generator::str() const {
    switch (kind) {
        case Kind::H: return "H(" + std::to_string(n) + "," + std::to_string(m) + ")";
        case Kind::P: return "P(" + std::to_string(n) + "," + std::to_string(m) + ")";
        case Kind::Q: return "Q(" + std::to_string(n) + "," + std::to_string(m) + ")";
    }
    return "?";
}

bool in_Ar(int n, int m, int r) {
    if (r < 1) throw argument_error("rank must be >= 1");
    return m > -n * r;
}

namespace {

std::atomic<int> g_trunc{0};

int floordiv(long a, long b) {
    long q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return static_cast<int>(q);
}

std::vector<int> floor_exponents(int m, int N) {
    std::vector<int> d(static_cast<std::size_t>(N));
    for (int i = 1; i <= N; ++i)
        d[static_cast<std::size_t>(i - 1)] =
            floordiv(static_cast<long>(m) * i, N) - floordiv(static_cast<long>(m) * (i - 1), N);
    return d;
}

// --- kernel series ------------------------------------------------------

// A factor of the expanded kernel: a series sum_t coeff(t) * ratio^t where
// ratio^t adds +t to pos_var's exponent and -t to neg_var's.
struct SeriesFactor {
    int pos_var, neg_var; // 0-based variable slots
    bool binomial = false;
    Monomial base;    // geometric: coeff(t) = sign * base^t; binomial: coeff(1) = -base
    int t_min = 0;    // geometric only
    int sign = 1;     // geometric only
};

std::vector<SeriesFactor> kernel_factors(int N, bool minus) {
    std::vector<SeriesFactor> fs;
    Monomial q1 = Monomial::var(VarReg::q1), q2 = Monomial::var(VarReg::q2);
    Monomial q = q1 * q2;
    Monomial one;
    if (!minus) {
        // ratios z_j / z_i, i < j
        for (int i = 0; i + 1 < N; ++i)
            fs.push_back({i + 1, i, false, q, 0, 1}); // 1/(1 - q z_{i+1}/z_i)
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j) {
                // zeta(z_j/z_i)^-1 = (1-x)(1-qx) / ((1-q1 x)(1-q2 x))
                fs.push_back({j, i, true, one, 0, 1});
                fs.push_back({j, i, true, q, 0, 1});
                fs.push_back({j, i, false, q1, 0, 1});
                fs.push_back({j, i, false, q2, 0, 1});
            }
    } else {
        // ratios w = z_i / z_j, i < j
        for (int i = 0; i + 1 < N; ++i)
            fs.push_back({i, i + 1, false, q.inverse(), 1, -1}); // -sum_{t>=1} q^-t w^t
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j) {
                // zeta(z_j/z_i) = zeta(w/q):  inverse is
                // (1 - w/q)(1 - w) / ((1 - w/q2)(1 - w/q1))
                fs.push_back({i, j, true, q.inverse(), 0, 1});
                fs.push_back({i, j, true, one, 0, 1});
                fs.push_back({i, j, false, q1.inverse(), 0, 1});
                fs.push_back({i, j, false, q2.inverse(), 0, 1});
            }
    }
    return fs;
}

struct KernelKey {
    int N;
    bool minus;
    std::vector<int> e;
    bool operator<(const KernelKey& o) const {
        if (N != o.N) return N < o.N;
        if (minus != o.minus) return minus < o.minus;
        return e < o.e;
    }
};

// Exact coefficient of prod z_i^{e_i} in the kernel expansion, by forward
// dynamic programming over the factors.  The enumeration is finite: each
// factor monomial moves exponent weight along the variable order, and the
// total movement is pinned by the target's potential.
LaurentPoly kernel_coeff_compute(int N, bool minus, const std::vector<int>& e) {
    long sum = std::accumulate(e.begin(), e.end(), 0L);
    if (sum != 0) return {};
    if (N == 1) return e[0] == 0 ? LaurentPoly::constant(1) : LaurentPoly();
    // potential: weights increase along the expansion direction
    auto potential = [&](const std::vector<int>& v) {
        long p = 0;
        for (int i = 0; i < N; ++i) {
            long w = minus ? (N - i) : (i + 1);
            p += w * v[static_cast<std::size_t>(i)];
        }
        return p;
    };
    long pot = potential(e);
    if (pot < 0) return {};
    int bound = truncation_bound();

    std::vector<SeriesFactor> fs = kernel_factors(N, minus);
    // state: residual exponent vector still to be produced by the remaining
    // factors; value: accumulated coefficient
    std::map<std::vector<int>, LaurentPoly> states;
    states.emplace(e, LaurentPoly::constant(1));
    for (const SeriesFactor& f : fs) {
        int gap = f.pos_var > f.neg_var ? f.pos_var - f.neg_var : f.neg_var - f.pos_var;
        std::map<std::vector<int>, LaurentPoly> next;
        for (const auto& [rem, acc] : states) {
            long budget = potential(rem);
            if (budget < 0) continue;
            int t_max = f.binomial ? 1 : static_cast<int>(budget / gap);
            if (bound > 0 && t_max > bound)
                throw internal_error("kernel series needs order " + std::to_string(t_max) +
                                     " > truncation bound " + std::to_string(bound));
            for (int t = 0; t <= t_max; ++t) {
                LaurentPoly c;
                if (t == 0) {
                    if (!f.binomial && f.t_min > 0) continue; // no constant term
                    c = LaurentPoly::constant(1);
                } else if (f.binomial) {
                    c = LaurentPoly::monomial(f.base, -1);
                } else {
                    if (t < f.t_min) continue;
                    c = LaurentPoly::monomial(f.base.pow(t), Rat(f.sign));
                }
                std::vector<int> nrem = rem;
                nrem[static_cast<std::size_t>(f.pos_var)] -= t;
                nrem[static_cast<std::size_t>(f.neg_var)] += t;
                auto [it, fresh] = next.try_emplace(std::move(nrem), LaurentPoly());
                it->second += acc * c;
            }
        }
        states = std::move(next);
        if (states.empty()) return {};
    }
    std::vector<int> zero(static_cast<std::size_t>(N), 0);
    auto it = states.find(zero);
    return it == states.end() ? LaurentPoly() : it->second;
}

const LaurentPoly& kernel_coeff(int N, bool minus, const std::vector<int>& e) {
    static std::mutex mtx;
    static std::map<KernelKey, LaurentPoly> cache;
    KernelKey key{N, minus, e};
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(std::move(key), kernel_coeff_compute(N, minus, e)).first;
    return it->second;
}

// --- per-variable exponential blocks -------------------------------------

// creation block: coefficient of z^-c in the creation exponential
SymFunc creation_block(int c, bool minus) {
    if (c == 0) return SymFunc::one();
    if (!minus) return h_poly(c);
    // (-1)^c q^-c e_c
    Scalar s = Scalar::monomial(
        (Monomial::var(VarReg::q1) * Monomial::var(VarReg::q2)).pow(-c), (c % 2 == 0) ? 1 : -1);
    return e_poly(c).scaled(s);
}

// annihilation block: sum over partitions of b with the exponential signs,
// applied through the pairing-plane adjoints
SymFunc apply_annihilation_block(int b, bool minus, const SymFunc& f) {
    if (b == 0) return f;
    SymFunc out;
    for (const auto& mu : partitions_of(b)) {
        Rat c = 1 / mu.z();
        if (!minus && mu.length() % 2 == 1) c = -c; // exp[-sum ...]
        SymFunc g = f;
        for (int part : mu.parts()) {
            g = apply_p_dagger(part, g);
            if (g.is_zero()) break;
        }
        if (!g.is_zero()) out += g.scaled(Scalar(c));
    }
    return out;
}

void ordered_tuples(int N, int total, std::vector<int>& cur,
                    const std::function<void(const std::vector<int>&)>& cb) {
    if (static_cast<int>(cur.size()) == N - 1) {
        cur.push_back(total);
        cb(cur);
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= total; ++v) {
        cur.push_back(v);
        ordered_tuples(N, total - v, cur, cb);
        cur.pop_back();
    }
}

} // namespace

void set_truncation_bound(int bound) {
    if (bound < 0) throw argument_error("truncation bound must be >= 0");
    g_trunc.store(bound);
}

int truncation_bound() { return g_trunc.load(); }

SymFunc apply_psi_H(int n, int m, const SymFunc& f) {
    if (n == 0) throw argument_error("apply_psi_H needs n != 0");
    const int N = n > 0 ? n : -n;
    const bool minus = n < 0;
    std::vector<int> d = floor_exponents(m, N);

    SymFunc out;
    // process homogeneous components separately
    std::map<int, SymFunc> comps;
    for (const auto& [l, c] : f.terms()) comps[l.size()] += SymFunc::term(l, c);

    Scalar prefactor(1);
    if (minus) {
        Scalar mq = -Scalar::q();
        prefactor = mq.pow(N);
    }

    for (const auto& [k, g] : comps) {
        if (k + m < 0) continue;
        // cache annihilation results by sorted profile
        std::map<std::vector<int>, SymFunc> ann_cache;
        std::map<std::vector<int>, SymFunc> cre_cache;
        for (int btot = 0; btot <= k; ++btot) {
            std::vector<int> cur;
            ordered_tuples(N, btot, cur, [&](const std::vector<int>& b) {
                std::vector<int> bs(b);
                std::sort(bs.begin(), bs.end());
                auto ai = ann_cache.find(bs);
                if (ai == ann_cache.end()) {
                    SymFunc gb = g;
                    for (int bi : bs) gb = apply_annihilation_block(bi, minus, gb);
                    ai = ann_cache.emplace(bs, std::move(gb)).first;
                }
                if (ai->second.is_zero()) return;
                int ctot = btot + m;
                if (ctot < 0) return;
                std::vector<int> cur2;
                ordered_tuples(N, ctot, cur2, [&](const std::vector<int>& c) {
                    std::vector<int> e(static_cast<std::size_t>(N));
                    for (int i = 0; i < N; ++i)
                        e[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] -
                                                         b[static_cast<std::size_t>(i)] -
                                                         d[static_cast<std::size_t>(i)];
                    const LaurentPoly& kappa = kernel_coeff(N, minus, e);
                    if (kappa.is_zero()) return;
                    std::vector<int> cs(c);
                    std::sort(cs.begin(), cs.end());
                    auto ci = cre_cache.find(cs);
                    if (ci == cre_cache.end()) {
                        SymFunc prod = SymFunc::one();
                        for (int cc : cs) prod = prod * creation_block(cc, minus);
                        ci = cre_cache.emplace(cs, std::move(prod)).first;
                    }
                    out += (ci->second * ai->second).scaled(Scalar::from_poly(kappa));
                });
            });
        }
    }
    out = out.scaled(prefactor);

    // homogeneity check: every output degree must be input degree + m
    for (const auto& [l, c] : out.terms()) {
        bool found = false;
        for (const auto& [k, g] : comps)
            if (l.size() == k + m) found = true;
        if (!found) throw internal_error("apply_psi_H produced an off-degree term");
    }
    return out;
}

// --- ray conversions ------------------------------------------------------

namespace {

using RayPoly = std::map<std::vector<int>, Rat>; // multiset of levels -> coeff

RayPoly ray_mul(const RayPoly& a, const RayPoly& b) {
    RayPoly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            std::vector<int> m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            std::sort(m.begin(), m.end(), std::greater<int>());
            r[m] += ca * cb;
        }
    for (auto it = r.begin(); it != r.end();)
        it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

// P_k as a polynomial in levels H_1..H_k: P_k = k H_k - sum_{i<k} P_i H_{k-i}
const RayPoly& p_in_h(int k) {
    static std::mutex mtx;
    static std::map<int, RayPoly> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    for (int j = 1; j <= k; ++j) {
        if (cache.count(j)) continue;
        RayPoly p;
        p[{j}] = Rat(j);
        for (int i = 1; i < j; ++i) {
            RayPoly h;
            h[{j - i}] = 1;
            for (const auto& [m, c] : ray_mul(cache.at(i), h)) {
                p[m] -= c;
                if (p[m] == 0) p.erase(m);
            }
        }
        cache.emplace(j, std::move(p));
    }
    return cache.at(k);
}

bool coprime(int a, int b) {
    int g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
    return g == 1;
}

} // namespace

GeneratorSum p_from_h_ray(int a, int b, int k) {
    if (k < 1) throw argument_error("p_from_h_ray needs k >= 1");
    if (!coprime(a, b) || (a == 0 && b == 0))
        throw argument_error("(a,b) must be a primitive lattice vector");
    GeneratorSum out;
    for (const auto& [mult, c] : p_in_h(k)) {
        GeneratorWord w;
        w.coeff = Scalar(c);
        for (int j : mult) w.factors.push_back(Generator::H(j * a, j * b));
        out.push_back(std::move(w));
    }
    return out;
}

GeneratorSum h_from_p_ray(int a, int b, int k) {
    if (k < 0) throw argument_error("h_from_p_ray needs k >= 0");
    if (!coprime(a, b) || (a == 0 && b == 0))
        throw argument_error("(a,b) must be a primitive lattice vector");
    GeneratorSum out;
    if (k == 0) {
        out.push_back(GeneratorWord{});
        return out;
    }
    for (const auto& mu : partitions_of(k)) {
        GeneratorWord w;
        w.coeff = Scalar(Rat(1) / mu.z());
        for (int j : mu.parts()) w.factors.push_back(Generator::P(j * a, j * b));
        out.push_back(std::move(w));
    }
    return out;
}

GeneratorSum q_from_p_ray(int a, int b, int k) {
    if (k < 0) throw argument_error("q_from_p_ray needs k >= 0");
    if (!coprime(a, b) || (a == 0 && b == 0))
        throw argument_error("(a,b) must be a primitive lattice vector");
    GeneratorSum out;
    if (k == 0) {
        out.push_back(GeneratorWord{});
        return out;
    }
    Scalar qinv = Scalar::q().inverse();
    for (const auto& mu : partitions_of(k)) {
        GeneratorWord w;
        Scalar c(Rat(1) / mu.z());
        for (int j : mu.parts()) {
            c *= Scalar(1) - qinv.pow(j);
            w.factors.push_back(Generator::P(j * a, j * b));
        }
        w.coeff = c;
        out.push_back(std::move(w));
    }
    return out;
}

// --- application ----------------------------------------------------------

SymFunc apply_P(int n, int m, const SymFunc& f) {
    if (n == 0 && m == 0) throw argument_error("P(0,0) is not a generator");
    if (n == 0) {
        if (m > 0) return apply_p(m, f);
        Scalar qm = Scalar::q().pow(-m);
        return apply_p_dagger(-m, f).scaled(-qm);
    }
    int g = std::gcd(n < 0 ? -n : n, m < 0 ? -m : m);
    return apply_sum(p_from_h_ray(n / g, m / g, g), f);
}

SymFunc apply_Q(int n, int m, const SymFunc& f) {
    if (n == 0 && m == 0) return f; // Q_{0,0} = 1
    int g = std::gcd(n < 0 ? -n : n, m < 0 ? -m : m);
    return apply_sum(q_from_p_ray(n / g, m / g, g), f);
}

SymFunc apply_generator(const Generator& g, const SymFunc& f) {
    switch (g.kind) {
        case Generator::Kind::H:
            if (g.n != 0) return apply_psi_H(g.n, g.m, f);
            if (g.m == 0) return f;
            return apply_sum(h_from_p_ray(0, g.m > 0 ? 1 : -1, g.m > 0 ? g.m : -g.m), f);
        case Generator::Kind::P:
            return apply_P(g.n, g.m, f);
        case Generator::Kind::Q:
            return apply_Q(g.n, g.m, f);
    }
    throw internal_error("unknown generator kind");
}

SymFunc apply_word(const GeneratorWord& w, const SymFunc& f) {
    SymFunc g = f;
    for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
        g = apply_generator(*it, g);
        if (g.is_zero()) break;
    }
    return g.scaled(w.coeff);
}

SymFunc apply_sum(const GeneratorSum& s, const SymFunc& f) {
    SymFunc out;
    for (const auto& w : s) out += apply_word(w, f);
    return out;
}

SymFunc apply_A(int m, const SymFunc& f) {
    if (m < 0) throw argument_error("A_m needs m >= 0");
    if (m == 0) return f;
    Scalar qinv = Scalar::q().inverse();
    SymFunc am;
    for (const auto& mu : partitions_of(m)) {
        Scalar c(Rat(1) / mu.z());
        for (int j : mu.parts()) c *= Scalar(1) - qinv.pow(j);
        am += SymFunc::term(mu, c);
    }
    return am * f;
}

SymFunc apply_B(int m, const SymFunc& f) {
    if (m < 0) throw argument_error("B_m needs m >= 0");
    if (m == 0) return f;
    Scalar qs = Scalar::q();
    SymFunc out;
    for (const auto& mu : partitions_of(m)) {
        Scalar c(Rat(1) / mu.z());
        for (int j : mu.parts()) c *= Scalar(1) - qs.pow(j);
        SymFunc g = f;
        for (int j : mu.parts()) {
            g = apply_p_dagger(j, g);
            if (g.is_zero()) break;
        }
        out += g.scaled(c);
    }
    return out;
}

// --- word parsing ----------------------------------------------------------

namespace {

void skip_space(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

int parse_int(const std::string& s, std::size_t& i) {
    skip_space(s, i);
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) throw parse_error("expected integer", start);
    return std::stoi(s.substr(start, i - start));
}

} // namespace

GeneratorWord parse_word(const std::string& text) {
    GeneratorWord w;
    std::size_t i = 0;
    bool expect_atom = true;
    while (true) {
        skip_space(text, i);
        if (i >= text.size()) break;
        if (!expect_atom) {
            if (text[i] != ';') throw parse_error("expected ';'", i);
            ++i;
            expect_atom = true;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
        std::string name = text.substr(start, i - start);
        skip_space(text, i);
        if (i >= text.size() || text[i] != '(') throw parse_error("expected '('", i);
        ++i;
        if (name == "H" || name == "P" || name == "Q") {
            int n = parse_int(text, i);
            skip_space(text, i);
            if (i >= text.size() || text[i] != ',') throw parse_error("expected ','", i);
            ++i;
            int m = parse_int(text, i);
            skip_space(text, i);
            if (i >= text.size() || text[i] != ')') throw parse_error("expected ')'", i);
            ++i;
            Generator::Kind kind = name == "H"   ? Generator::Kind::H
                                   : name == "P" ? Generator::Kind::P
                                                 : Generator::Kind::Q;
            w.factors.push_back({kind, n, m});
        } else if (name == "pdag") {
            int k = parse_int(text, i);
            skip_space(text, i);
            if (i >= text.size() || text[i] != ')') throw parse_error("expected ')'", i);
            ++i;
            if (k < 1) throw parse_error("pdag needs k >= 1", start);
            // pdag(k) = -q^-k P(0,-k)
            w.factors.push_back(Generator::P(0, -k));
            w.coeff *= -Scalar::q().pow(-k);
        } else {
            throw parse_error("unknown operator '" + name + "'", start);
        }
        expect_atom = false;
    }
    if (expect_atom && !w.factors.empty()) throw parse_error("trailing ';'", i);
    return w;
}

} // namespace fock
} // namespace hallfock
