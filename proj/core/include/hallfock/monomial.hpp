#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hallfock/varreg.hpp"

namespace hallfock {

// Laurent monomial: sparse exponent map sorted by variable id, no zero
// exponents stored.
class Monomial {
public:
    using Entry = std::pair<VarId, std::int32_t>;

    Monomial() = default;
    static Monomial var(VarId v, std::int32_t e = 1);

    bool is_one() const { return e_.empty(); }
    std::int32_t exponent(VarId v) const;
    const std::vector<Entry>& entries() const { return e_; }

    Monomial operator*(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;
    Monomial pow(std::int32_t k) const;
    Monomial inverse() const { return pow(-1); }

    // Componentwise min / max (gcd and lcm of monomials).
    static Monomial min(const Monomial& a, const Monomial& b);
    static Monomial max(const Monomial& a, const Monomial& b);

    // True if every exponent is >= the other's (i.e. o divides *this as
    // ordinary monomials).
    bool divisible_by(const Monomial& o) const;

    bool has_negative_exponent() const;
    bool depends_on(VarId v) const { return exponent(v) != 0; }
    bool any_of(const std::vector<VarId>& vars) const;

    // Removes v, returning its exponent.
    std::int32_t extract(VarId v);
    void set_exponent(VarId v, std::int32_t e);

    // Substitute v -> m (monomial in other variables), i.e. v^e becomes m^e.
    Monomial substituted(VarId v, const Monomial& m) const;

    std::int64_t total_degree() const;

    // Lex compare with variable significance by id (q1 first); higher
    // exponent on the first differing variable makes the monomial greater.
    static int compare(const Monomial& a, const Monomial& b);
    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }
    bool operator<(const Monomial& o) const { return compare(*this, o) < 0; }

    std::string str() const;

private:
    std::vector<Entry> e_;
};

} // namespace hallfock
