#include "hallfock/symfunc.hpp"

#include <atomic>

#include "hallfock/errors.hpp"

#include <json.hpp>

namespace hallfock {

void TorusCharacter::add(const Monomial& m, long mult) {
    if (mult == 0) return;
    auto [it, fresh] = t_.try_emplace(m, 0);
    it->second += mult;
    if (it->second == 0) t_.erase(it);
}

TorusCharacter TorusCharacter::operator+(const TorusCharacter& o) const {
    TorusCharacter r = *this;
    for (const auto& [m, c] : o.t_) r.add(m, c);
    return r;
}

TorusCharacter TorusCharacter::operator-() const { return scaled(-1); }

TorusCharacter TorusCharacter::scaled(long c) const {
    TorusCharacter r;
    if (c == 0) return r;
    for (const auto& [m, k] : t_) r.t_.emplace(m, k * c);
    return r;
}

LaurentPoly TorusCharacter::power_sum(int n) const {
    LaurentPoly s;
    for (const auto& [m, c] : t_) s += LaurentPoly::monomial(m.pow(n), Rat(c));
    return s;
}

std::string TorusCharacter::str() const {
    LaurentPoly s = power_sum(1);
    return s.str();
}

namespace {
std::atomic<int> g_degree_cap{8};
}

int degree_cap() { return g_degree_cap.load(); }
void set_degree_cap(int cap) {
    if (cap < 0) throw argument_error("degree cap must be >= 0");
    g_degree_cap.store(cap);
}

void SymFunc::insert(const Partition& l, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(l, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

SymFunc SymFunc::scalar_multiple(const Scalar& c) {
    SymFunc f;
    f.insert(Partition(), c);
    return f;
}

SymFunc SymFunc::p(int k) {
    if (k < 1) throw argument_error("p_k needs k >= 1");
    return term(Partition::single(k), Scalar(1));
}

SymFunc SymFunc::p(const Partition& l) { return term(l, Scalar(1)); }

SymFunc SymFunc::term(const Partition& l, const Scalar& c) {
    if (l.size() > degree_cap())
        throw degree_cap_error("degree " + std::to_string(l.size()) + " exceeds cap " +
                               std::to_string(degree_cap()));
    SymFunc f;
    f.insert(l, c);
    return f;
}

Scalar SymFunc::coeff(const Partition& l) const {
    auto it = t_.find(l);
    return it == t_.end() ? Scalar() : it->second;
}

int SymFunc::degree() const {
    int d = -1;
    for (const auto& [l, c] : t_) d = std::max(d, l.size());
    return d;
}

bool SymFunc::is_homogeneous(int* deg) const {
    int d = -1;
    for (const auto& [l, c] : t_) {
        if (d < 0)
            d = l.size();
        else if (l.size() != d)
            return false;
    }
    if (deg) *deg = d;
    return true;
}

SymFunc SymFunc::homogeneous_part(int k) const {
    SymFunc r;
    for (const auto& [l, c] : t_)
        if (l.size() == k) r.t_.emplace(l, c);
    return r;
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    SymFunc r = *this;
    for (const auto& [l, c] : o.t_) r.insert(l, c);
    return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const { return *this + (-o); }

SymFunc SymFunc::operator-() const {
    SymFunc r;
    for (const auto& [l, c] : t_) r.t_.emplace(l, -c);
    return r;
}

SymFunc SymFunc::operator*(const SymFunc& o) const {
    SymFunc r;
    int cap = degree_cap();
    for (const auto& [la, ca] : t_)
        for (const auto& [lb, cb] : o.t_) {
            if (la.size() + lb.size() > cap)
                throw degree_cap_error("product degree " +
                                       std::to_string(la.size() + lb.size()) +
                                       " exceeds cap " + std::to_string(cap));
            r.insert(la.concat(lb), ca * cb);
        }
    return r;
}

SymFunc SymFunc::scaled(const Scalar& c) const {
    SymFunc r;
    if (c.is_zero()) return r;
    for (const auto& [l, k] : t_) r.insert(l, k * c);
    return r;
}

bool SymFunc::operator==(const SymFunc& o) const {
    return t_.size() == o.t_.size() &&
           std::equal(t_.begin(), t_.end(), o.t_.begin(),
                      [](const auto& a, const auto& b) {
                          return a.first == b.first && a.second == b.second;
                      });
}

std::string SymFunc::str() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [l, c] : t_) {
        if (!first) s += " + ";
        first = false;
        std::string cs = c.str();
        if (l.empty()) {
            s += cs;
        } else if (c.is_one()) {
            s += "p" + l.str();
        } else {
            bool simple = cs.find_first_of("+-/") == std::string::npos ||
                          (cs[0] == '-' && cs.find_first_of("+-/", 1) == std::string::npos);
            s += (simple ? cs : "(" + cs + ")") + "*p" + l.str();
        }
    }
    return s;
}

std::string SymFunc::json() const {
    nlohmann::json j;
    j["terms"] = nlohmann::json::array();
    for (const auto& [l, c] : t_) {
        nlohmann::json t;
        t["partition"] = l.parts();
        t["coeff"] = c.str();
        j["terms"].push_back(std::move(t));
    }
    return j.dump();
}

SymFunc SymFunc::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SymFunc f;
    for (const auto& t : j.at("terms")) {
        std::vector<int> parts = t.at("partition").get<std::vector<int>>();
        Scalar c = Scalar::parse(t.at("coeff").get<std::string>());
        f.insert(Partition(std::move(parts)), c);
    }
    return f;
}

Scalar pairing_standard(const SymFunc& f, const SymFunc& g) {
    Scalar s;
    for (const auto& [l, c] : f.terms()) {
        Scalar d = g.coeff(l);
        if (d.is_zero()) continue;
        s += c * d * Scalar(l.z());
    }
    return s;
}

Scalar pairing_plane(const SymFunc& f, const SymFunc& g) {
    Scalar s;
    for (const auto& [l, c] : f.terms()) {
        Scalar d = g.coeff(l);
        if (d.is_zero()) continue;
        Scalar w = c * d * Scalar(l.z());
        for (int part : l.parts()) w *= qq_factor(part);
        s += w;
    }
    return s;
}

SymFunc h_poly(int k) {
    if (k < 0) throw argument_error("h_k needs k >= 0");
    SymFunc f;
    for (const auto& l : partitions_of(k)) f += SymFunc::term(l, Scalar(Rat(1) / l.z()));
    return f;
}

SymFunc e_poly(int k) {
    if (k < 0) throw argument_error("e_k needs k >= 0");
    SymFunc f;
    for (const auto& l : partitions_of(k)) {
        int sign = (k - l.length()) % 2 == 0 ? 1 : -1;
        f += SymFunc::term(l, Scalar(Rat(sign) / l.z()));
    }
    return f;
}

Scalar plethysm_eval(const SymFunc& f, const TorusCharacter& A) {
    std::map<int, Scalar> pn; // cache p_n(A)
    Scalar out;
    for (const auto& [l, c] : f.terms()) {
        Scalar v = c;
        for (int part : l.parts()) {
            auto it = pn.find(part);
            if (it == pn.end())
                it = pn.emplace(part, Scalar::from_poly(A.power_sum(part))).first;
            v *= it->second;
        }
        out += v;
    }
    return out;
}

SymFunc plethysm_shift(const SymFunc& f, int sign, const std::vector<VarId>& zvars) {
    if (sign != 1 && sign != -1) throw argument_error("sign must be +-1");
    std::map<int, Scalar> shift; // (1-q1^n)(1-q2^n) sum z^n
    auto shift_of = [&](int n) {
        auto it = shift.find(n);
        if (it == shift.end()) {
            LaurentPoly zsum;
            for (VarId v : zvars) zsum += LaurentPoly::variable(v, n);
            it = shift.emplace(n, Scalar(sign) * qq_factor(n) * Scalar::from_poly(zsum)).first;
        }
        return it->second;
    };
    SymFunc out;
    for (const auto& [l, c] : f.terms()) {
        SymFunc acc = SymFunc::scalar_multiple(c);
        for (int part : l.parts())
            acc = acc * SymFunc::p(part) + acc.scaled(shift_of(part));
        out += acc;
    }
    return out;
}

SymFunc apply_p(int k, const SymFunc& f) {
    if (k < 1) throw argument_error("apply_p needs k >= 1");
    return SymFunc::p(k) * f;
}

SymFunc apply_p_dagger(int k, const SymFunc& f) {
    if (k < 1) throw argument_error("apply_p_dagger needs k >= 1");
    SymFunc r;
    Scalar factor = Scalar(k) * qq_factor(k);
    for (const auto& [l, c] : f.terms()) {
        int mult = l.multiplicity(k);
        if (mult == 0) continue;
        r += SymFunc::term(l.remove_one(k), c * Scalar(mult) * factor);
    }
    return r;
}

SymFunc apply_p_perp(int k, const SymFunc& f) {
    if (k < 1) throw argument_error("apply_p_perp needs k >= 1");
    SymFunc r;
    for (const auto& [l, c] : f.terms()) {
        int mult = l.multiplicity(k);
        if (mult == 0) continue;
        r += SymFunc::term(l.remove_one(k), c * Scalar(mult * k));
    }
    return r;
}

SymFunc deg_rescale(const SymFunc& f, int sign) {
    if (sign != 1 && sign != -1) throw argument_error("sign must be +-1");
    SymFunc r;
    Scalar base = qq_factor(1);
    for (const auto& [l, c] : f.terms())
        r += SymFunc::term(l, c * base.pow(sign * l.size()));
    return r;
}

} // namespace hallfock
