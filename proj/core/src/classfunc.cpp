#include "hallfock/classfunc.hpp"

#include "hallfock/errors.hpp"

namespace hallfock {

ClassFunction::ClassFunction(int k) : k_(k) {
    if (k < 0) throw argument_error("group size must be >= 0");
    for (const auto& l : partitions_of(k)) v_.emplace(l, Scalar());
}

const Scalar& ClassFunction::value(const Partition& cycle_type) const {
    auto it = v_.find(cycle_type);
    if (it == v_.end()) throw argument_error("cycle type has wrong size");
    return it->second;
}

void ClassFunction::set_value(const Partition& cycle_type, const Scalar& v) {
    auto it = v_.find(cycle_type);
    if (it == v_.end()) throw argument_error("cycle type has wrong size");
    it->second = v;
}

ClassFunction ClassFunction::trivial(int k) {
    ClassFunction f(k);
    for (const auto& l : partitions_of(k)) f.set_value(l, Scalar(1));
    return f;
}

ClassFunction ClassFunction::sign(int k) {
    ClassFunction f(k);
    for (const auto& l : partitions_of(k)) {
        int s = (k - l.length()) % 2 == 0 ? 1 : -1;
        f.set_value(l, Scalar(s));
    }
    return f;
}

ClassFunction ClassFunction::power_sum_character(int k) {
    if (k < 1) throw argument_error("power_sum_character needs k >= 1");
    ClassFunction f(k);
    f.set_value(Partition::single(k), Scalar(k));
    return f;
}

ClassFunction ClassFunction::regular(int k) {
    ClassFunction f(k);
    Rat fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    f.set_value(Partition(std::vector<int>(static_cast<std::size_t>(k), 1)), Scalar(fact));
    return f;
}

ClassFunction ClassFunction::indicator(const Partition& cycle_type) {
    ClassFunction f(cycle_type.size());
    f.set_value(cycle_type, Scalar(1));
    return f;
}

bool ClassFunction::operator==(const ClassFunction& o) const {
    return k_ == o.k_ && v_ == o.v_;
}

SymFunc frobenius(const ClassFunction& M) {
    SymFunc f;
    for (const auto& l : partitions_of(M.group_size())) {
        const Scalar& tr = M.value(l);
        if (tr.is_zero()) continue;
        f += SymFunc::term(l, tr * Scalar(Rat(1) / l.z()));
    }
    return f;
}

ClassFunction frobenius_inv(const SymFunc& f, int k) {
    ClassFunction M(k);
    for (const auto& [l, c] : f.terms()) {
        if (l.size() != k) throw argument_error("frobenius_inv needs a degree-k function");
        M.set_value(l, c * Scalar(l.z()));
    }
    return M;
}

namespace {

// Enumerate splittings of nu into an ordered pair of sub-multisets, the
// first of total size k.  Callback gets (alpha, beta).
void splittings(const Partition& nu, int k,
                const std::function<void(const Partition&, const Partition&)>& cb) {
    // group nu into (value, multiplicity) runs and choose how many of each
    std::vector<std::pair<int, int>> runs;
    for (int x : nu.parts()) {
        if (!runs.empty() && runs.back().first == x)
            ++runs.back().second;
        else
            runs.push_back({x, 1});
    }
    std::vector<int> take(runs.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rem) {
        if (i == runs.size()) {
            if (rem != 0) return;
            std::vector<int> a, b;
            for (std::size_t j = 0; j < runs.size(); ++j) {
                for (int t = 0; t < take[j]; ++t) a.push_back(runs[j].first);
                for (int t = take[j]; t < runs[j].second; ++t) b.push_back(runs[j].first);
            }
            cb(Partition(std::move(a)), Partition(std::move(b)));
            return;
        }
        for (int t = 0; t <= runs[i].second && t * runs[i].first <= rem; ++t) {
            take[i] = t;
            rec(i + 1, rem - t * runs[i].first);
        }
        take[i] = 0;
    };
    rec(0, k);
}

} // namespace

ClassFunction induce(const ClassFunction& A, const ClassFunction& B) {
    int k = A.group_size(), l = B.group_size();
    ClassFunction out(k + l);
    for (const auto& nu : partitions_of(k + l)) {
        Scalar acc;
        splittings(nu, k, [&](const Partition& alpha, const Partition& beta) {
            Scalar va = A.value(alpha);
            if (va.is_zero()) return;
            Scalar vb = B.value(beta);
            if (vb.is_zero()) return;
            acc += va * vb * Scalar(nu.z() / (alpha.z() * beta.z()));
        });
        out.set_value(nu, acc);
    }
    return out;
}

ClassFunction restrict_hom(const ClassFunction& P, const ClassFunction& M) {
    int k = P.group_size(), n = M.group_size();
    if (k > n) throw argument_error("restricting below the trivial group");
    // skew by ch(P) under the standard pairing, in the p-basis
    SymFunc chM = frobenius(M);
    SymFunc chP = frobenius(P);
    SymFunc out;
    for (const auto& [alpha, c] : chP.terms()) {
        SymFunc g = chM;
        for (int part : alpha.parts()) g = apply_p_perp(part, g);
        out += g.scaled(c);
    }
    return frobenius_inv(out, n - k);
}

Scalar cycle_trace_exterior(int k) {
    if (k < 1) throw argument_error("cycle_trace_exterior needs k >= 1");
    if (k > 14) throw argument_error("k too large for wedge enumeration");
    // Basis of the exterior algebra: a pair of subsets (A, B) of the k
    // copies of L1 and L2.  The k-cycle shifts indices; a monomial
    // contributes to the trace only if both subsets are shift-invariant,
    // and then contributes sign(permutation on ordered wedge factors)
    // times (-1)^{|A|+|B|} q1^{|A|} q2^{|B|}.
    const unsigned full = (1u << k) - 1u;
    auto rot = [&](unsigned s) { return ((s << 1) | (s >> (k - 1))) & full; };
    auto cyclic_sign = [&](unsigned s) {
        // permutation induced on the ordered elements of the invariant set
        std::vector<int> elems;
        for (int i = 0; i < k; ++i)
            if (s & (1u << i)) elems.push_back(i);
        std::vector<int> image;
        for (int e : elems) image.push_back((e + 1) % k);
        // count inversions of image relative to sorted order
        int inv = 0;
        for (std::size_t a = 0; a < image.size(); ++a)
            for (std::size_t b = a + 1; b < image.size(); ++b)
                if (image[a] > image[b]) ++inv;
        return inv % 2 == 0 ? 1 : -1;
    };
    Scalar trace;
    for (unsigned a = 0; a <= full; ++a) {
        if (rot(a) != a) continue;
        for (unsigned b = 0; b <= full; ++b) {
            if (rot(b) != b) continue;
            int na = __builtin_popcount(a), nb = __builtin_popcount(b);
            int sign = cyclic_sign(a) * cyclic_sign(b) * (((na + nb) % 2 == 0) ? 1 : -1);
            Monomial w = Monomial::var(VarReg::q1, na) * Monomial::var(VarReg::q2, nb);
            trace += Scalar::monomial(w, sign);
        }
    }
    return trace;
}

} // namespace hallfock
