#include "hallfock/series.hpp"

#include "hallfock/errors.hpp"

namespace hallfock {

namespace {

// Dense v-coefficient split with explicit low offset.
struct VSplit {
    std::int32_t low = 0;
    std::vector<LaurentPoly> c;
};

VSplit split(const LaurentPoly& p, VarId v) {
    VSplit s;
    if (p.is_zero()) return s;
    s.c = p.coeffs_in(v, s.low);
    return s;
}

} // namespace

Scalar series_coeff_at_zero(const LaurentPoly& num, const LaurentPoly& den, VarId v,
                            std::int32_t k) {
    if (den.is_zero()) throw division_by_zero_error();
    if (num.is_zero()) return Scalar();
    VSplit n = split(num, v);
    VSplit d = split(den, v);
    // num/den = v^(n.low - d.low) * (sum n_i v^i) / (sum d_i v^i), d_0 != 0
    const LaurentPoly& d0 = d.c[0];
    if (d0.is_zero()) throw internal_error("series split lost the low term");
    // want coefficient of v^k overall: index j = k - (n.low - d.low) into the
    // Taylor series of N~/D~
    std::int64_t j = static_cast<std::int64_t>(k) - n.low + d.low;
    if (j < 0) return Scalar();
    // series division: c_j with c_j * d0 = n_j - sum_{i<j} c_i d_{j-i};
    // keep b_j = c_j * d0^(j+1) polynomial to avoid intermediate fractions
    std::vector<LaurentPoly> b(static_cast<std::size_t>(j) + 1);
    std::vector<LaurentPoly> d0pow(static_cast<std::size_t>(j) + 1);
    d0pow[0] = LaurentPoly::constant(1);
    for (std::size_t i = 1; i <= static_cast<std::size_t>(j); ++i) d0pow[i] = d0pow[i - 1] * d0;
    auto ncoef = [&](std::int64_t idx) -> LaurentPoly {
        if (idx < 0 || idx >= static_cast<std::int64_t>(n.c.size())) return {};
        return n.c[static_cast<std::size_t>(idx)];
    };
    auto dcoef = [&](std::int64_t idx) -> LaurentPoly {
        if (idx < 0 || idx >= static_cast<std::int64_t>(d.c.size())) return {};
        return d.c[static_cast<std::size_t>(idx)];
    };
    for (std::int64_t t = 0; t <= j; ++t) {
        LaurentPoly acc = ncoef(t) * d0pow[static_cast<std::size_t>(t)];
        for (std::int64_t i = 0; i < t; ++i) {
            LaurentPoly di = dcoef(t - i);
            if (di.is_zero()) continue;
            acc -= b[static_cast<std::size_t>(i)] * di *
                   d0pow[static_cast<std::size_t>(t - 1 - i)];
        }
        b[static_cast<std::size_t>(t)] = std::move(acc);
    }
    return Scalar::normalize(b[static_cast<std::size_t>(j)], d0pow[static_cast<std::size_t>(j)] * d0);
}

Scalar residue_at_zero(const LaurentPoly& num, const LaurentPoly& den, VarId v) {
    return series_coeff_at_zero(num, den, v, -1);
}

Scalar residue_at_zero(const Scalar& f, VarId v) {
    return residue_at_zero(f.num(), f.den(), v);
}

namespace {
LaurentPoly invert_var(const LaurentPoly& p, VarId v) {
    return p.substituted(v, Monomial::var(v, -1));
}
} // namespace

Scalar residue_at_infinity(const LaurentPoly& num, const LaurentPoly& den, VarId v) {
    // Res_inf f = -Res_0 [ f(1/w) / w^2 ]
    LaurentPoly n = invert_var(num, v).mono_scaled(Monomial::var(v, -2));
    LaurentPoly d = invert_var(den, v);
    return -residue_at_zero(n, d, v);
}

Scalar residue_at_infinity(const Scalar& f, VarId v) {
    return residue_at_infinity(f.num(), f.den(), v);
}

Scalar residue_sum_excluding_origin(const LaurentPoly& num, const LaurentPoly& den, VarId v) {
    return -(residue_at_zero(num, den, v) + residue_at_infinity(num, den, v));
}

Scalar residue_at_monomial_pole(const Scalar& f, VarId v, const Monomial& p) {
    // factor out (v - p)^e from the denominator
    LaurentPoly lin = LaurentPoly::variable(v) - LaurentPoly::monomial(p);
    LaurentPoly rest = f.den();
    int order = 0;
    LaurentPoly q;
    while (LaurentPoly::try_divide(rest, lin, q)) {
        rest = q;
        ++order;
    }
    if (order == 0) return Scalar();
    if (order == 1) {
        // num(p) / (d/dv den)(p)
        LaurentPoly dd = f.den().derivative(v);
        return Scalar::normalize(f.num().substituted(v, p), dd.substituted(v, p));
    }
    // higher order: res = 1/(e-1)! * d^(e-1)/dv^(e-1) [num/rest] at v = p
    Scalar g = Scalar::normalize(f.num(), rest);
    Rat fact = 1;
    for (int i = 1; i < order; ++i) {
        g = g.derivative(v);
        fact *= i;
    }
    return g.substituted(v, p) * Scalar(Rat(1) / fact);
}

} // namespace hallfock
