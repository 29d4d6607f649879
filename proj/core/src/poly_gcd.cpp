#include <algorithm>

#include "hallfock/errors.hpp"
#include "hallfock/poly.hpp"

// Multivariate gcd over Q via the primitive-part recursion: pick a main
// variable, split content / primitive part, and run a subresultant PRS on
// the primitive parts.  Exact division is multivariate long division by
// leading monomials.

namespace hallfock {

namespace {

LaurentPoly strip_monomial(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    Monomial m = p.min_exponents();
    if (m.is_one()) return p;
    return p.mono_scaled(m.inverse());
}

// Integer-primitive, positive leading coefficient.
LaurentPoly normalized(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(1 / p.content());
}

// Multivariate long division, exact or bust.
bool divide_exact(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q) {
    if (b.is_zero()) return false;
    q = LaurentPoly();
    if (a.is_zero()) return true;
    if (b.is_monomial()) {
        q = a.mono_scaled(b.leading().mono.inverse(), 1 / b.leading().coeff);
        return true;
    }
    LaurentPoly r = a;
    const Monomial& lead_m = b.leading().mono;
    const Rat& lead_c = b.leading().coeff;
    std::vector<LaurentPoly::Term> qterms;
    // bound: every reduction strictly lowers the leading monomial
    while (!r.is_zero()) {
        const auto& lt = r.leading();
        if (!lt.mono.divisible_by(lead_m)) return false;
        Monomial qm = lt.mono / lead_m;
        Rat qc = lt.coeff / lead_c;
        qterms.push_back({qm, qc});
        r -= b.mono_scaled(qm, qc);
    }
    std::sort(qterms.begin(), qterms.end(), [](const auto& x, const auto& y) {
        return Monomial::compare(x.mono, y.mono) > 0;
    });
    q = LaurentPoly::from_sorted(std::move(qterms));
    return true;
}

// Univariate view helpers where "coefficients" are polynomials in the other
// variables.
struct UniView {
    std::vector<LaurentPoly> c; // c[0] + c[1] x + ... (ordinary in x)
    int deg() const { return static_cast<int>(c.size()) - 1; }
    const LaurentPoly& lead() const { return c.back(); }
    bool is_zero() const { return c.empty(); }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
};

UniView to_uni(const LaurentPoly& p, VarId x) {
    std::int32_t low;
    UniView u;
    u.c = p.coeffs_in(x, low);
    if (low != 0) throw internal_error("to_uni expects ordinary polynomial");
    u.trim();
    return u;
}

LaurentPoly from_uni(const UniView& u, VarId x) {
    return LaurentPoly::from_coeffs_in(x, 0, u.c);
}

UniView uni_scale(const UniView& u, const LaurentPoly& s) {
    UniView r;
    r.c.reserve(u.c.size());
    for (const auto& ci : u.c) r.c.push_back(ci * s);
    r.trim();
    return r;
}

bool uni_divide_exact(const UniView& a, const LaurentPoly& s, UniView& out) {
    out.c.clear();
    out.c.reserve(a.c.size());
    for (const auto& ci : a.c) {
        LaurentPoly q;
        if (!divide_exact(ci, s, q)) return false;
        out.c.push_back(q);
    }
    out.trim();
    return true;
}

// Pseudo-remainder of a by b in x: lc(b)^(deg a - deg b + 1) * a mod b.
UniView pseudo_rem(UniView a, const UniView& b) {
    int db = b.deg();
    const LaurentPoly& lb = b.lead();
    int e = a.deg() - db + 1;
    while (!a.is_zero() && a.deg() >= db) {
        int shift = a.deg() - db;
        LaurentPoly la = a.lead();
        // a = a*lb - la * x^shift * b
        for (auto& ci : a.c) ci = ci * lb;
        for (int i = 0; i <= db; ++i)
            a.c[static_cast<std::size_t>(i + shift)] -= la * b.c[static_cast<std::size_t>(i)];
        a.trim();
        --e;
    }
    // a degree can drop by more than one per step; make the multiplier exact
    if (e > 0) {
        LaurentPoly s = lb.pow(static_cast<unsigned>(e));
        for (auto& ci : a.c) ci = ci * s;
    }
    return a;
}

LaurentPoly gcd_impl(const LaurentPoly& A, const LaurentPoly& B);

LaurentPoly uni_content(const UniView& u) {
    LaurentPoly g;
    for (const auto& ci : u.c) {
        g = gcd_impl(g, ci);
        if (g.is_one()) break;
    }
    return g;
}

LaurentPoly gcd_impl(const LaurentPoly& A, const LaurentPoly& B) {
    if (A.is_zero()) return normalized(strip_monomial(B));
    if (B.is_zero()) return normalized(strip_monomial(A));
    LaurentPoly a = normalized(strip_monomial(A));
    LaurentPoly b = normalized(strip_monomial(B));
    if (a.is_constant() || b.is_constant()) return LaurentPoly::constant(1);
    if (a.equals(b)) return a;
    {
        LaurentPoly q;
        if (divide_exact(a, b, q)) return b;
        if (divide_exact(b, a, q)) return a;
    }
    // main variable: one both depend on, else gcd is a gcd of contents
    std::vector<VarId> va = a.variables();
    VarId x = -1;
    for (VarId v : va)
        if (b.depends_on(v)) {
            x = v;
            break;
        }
    if (x < 0) {
        // no common variable: gcd of the contents w.r.t. disjoint splits is
        // gcd of full coefficient contents, a constant over Q
        return LaurentPoly::constant(1);
    }

    UniView ua = to_uni(a, x), ub = to_uni(b, x);
    LaurentPoly ca = uni_content(ua), cb = uni_content(ub);
    LaurentPoly cg = gcd_impl(ca, cb);
    UniView pa, pb;
    if (!uni_divide_exact(ua, ca, pa) || !uni_divide_exact(ub, cb, pb))
        throw internal_error("content division failed");

    if (pa.deg() < pb.deg()) std::swap(pa, pb);
    // subresultant PRS (Brown-Traub)
    LaurentPoly g = LaurentPoly::constant(1), h = LaurentPoly::constant(1);
    while (true) {
        int delta = pa.deg() - pb.deg();
        UniView r = pseudo_rem(pa, pb);
        if (r.is_zero()) break;
        if (r.deg() == 0) {
            // constant (in x) remainder: primitive gcd is trivial
            pb.c.assign(1, LaurentPoly::constant(1));
            break;
        }
        // divisor = g * h^delta
        LaurentPoly divisor = g * h.pow(static_cast<unsigned>(delta));
        UniView nr;
        if (!uni_divide_exact(r, divisor, nr)) throw internal_error("subresultant division failed");
        pa = std::move(pb);
        pb = std::move(nr);
        g = pa.lead();
        // h = h^(1-delta) * g^delta
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            LaurentPoly q;
            if (!divide_exact(g.pow(static_cast<unsigned>(delta)),
                              h.pow(static_cast<unsigned>(delta - 1)), q))
                throw internal_error("subresultant h-update failed");
            h = q;
        }
    }
    // primitive part of pb
    LaurentPoly cpb = uni_content(pb);
    UniView prim;
    if (!uni_divide_exact(pb, cpb, prim)) throw internal_error("primitive part failed");
    return normalized(cg * from_uni(prim, x));
}

} // namespace

bool LaurentPoly::try_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q) {
    if (b.is_zero()) return false;
    // allow Laurent inputs by stripping monomials
    Monomial ma = a.min_exponents(), mb = b.min_exponents();
    LaurentPoly sa = a.mono_scaled(ma.inverse());
    LaurentPoly sb = b.mono_scaled(mb.inverse());
    LaurentPoly q0;
    if (!divide_exact(sa, sb, q0)) return false;
    q = q0.mono_scaled(ma / mb);
    return true;
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
    return gcd_impl(a, b);
}

} // namespace hallfock
