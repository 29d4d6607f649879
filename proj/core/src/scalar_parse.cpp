#include <cctype>

#include "hallfock/errors.hpp"
#include "hallfock/scalar.hpp"
#include "hallfock/varreg.hpp"

namespace hallfock {

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, i); }

    long integer() {
        skip_ws();
        std::size_t start = i;
        bool neg = eat('-');
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            fail("expected integer");
        long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > 1000000) throw parse_error("integer too large", start);
            ++i;
        }
        return neg ? -v : v;
    }

    LaurentPoly atom() {
        skip_ws();
        if (eat('(')) {
            LaurentPoly p = sum();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            return LaurentPoly::constant(Rat(integer()));
        }
        if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
            std::size_t start = i;
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])))) ++i;
            std::string name = s.substr(start, i - start);
            VarId v = VarReg::lookup(name);
            if (v < 0) {
                // accept u<i> / z<a> not seen before
                if (name.size() >= 2 && (name[0] == 'u' || name[0] == 'z')) {
                    bool digits = true;
                    for (std::size_t k = 1; k < name.size(); ++k)
                        if (!std::isdigit(static_cast<unsigned char>(name[k]))) digits = false;
                    if (digits) {
                        int idx = std::stoi(name.substr(1));
                        v = name[0] == 'u' ? VarReg::u(idx) : VarReg::z(idx);
                    }
                }
            }
            if (v < 0) throw parse_error("unknown variable '" + name + "'", start);
            return LaurentPoly::variable(v);
        }
        fail("expected atom");
    }

    LaurentPoly factor() {
        bool neg = false;
        while (true) {
            skip_ws();
            if (eat('-'))
                neg = !neg;
            else if (eat('+'))
                ;
            else
                break;
        }
        LaurentPoly p = atom();
        if (eat('^')) {
            long e = integer();
            if (p.is_monomial()) {
                const auto& t = p.leading();
                Rat c;
                if (e >= 0) {
                    mpz_class n, d;
                    mpz_pow_ui(n.get_mpz_t(), t.coeff.get_num().get_mpz_t(),
                               static_cast<unsigned long>(e));
                    mpz_pow_ui(d.get_mpz_t(), t.coeff.get_den().get_mpz_t(),
                               static_cast<unsigned long>(e));
                    c = Rat(n, d);
                } else {
                    if (t.coeff == 0) throw parse_error("0 to negative power", i);
                    mpz_class n, d;
                    mpz_pow_ui(n.get_mpz_t(), t.coeff.get_den().get_mpz_t(),
                               static_cast<unsigned long>(-e));
                    mpz_pow_ui(d.get_mpz_t(), t.coeff.get_num().get_mpz_t(),
                               static_cast<unsigned long>(-e));
                    c = Rat(n, d);
                }
                c.canonicalize();
                p = LaurentPoly::monomial(t.mono.pow(static_cast<std::int32_t>(e)), c);
            } else {
                if (e < 0) fail("negative power of a non-monomial");
                p = p.pow(static_cast<unsigned>(e));
            }
        }
        return neg ? -p : p;
    }

    LaurentPoly product() {
        LaurentPoly p = factor();
        while (eat('*')) p = p * factor();
        return p;
    }

    LaurentPoly sum() {
        LaurentPoly p = product();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++i;
                p = p + product();
            } else if (c == '-') {
                ++i;
                p = p - product();
            } else {
                break;
            }
        }
        return p;
    }

    Scalar scalar() {
        LaurentPoly n = sum();
        if (eat('/')) {
            LaurentPoly d = sum();
            skip_ws();
            if (i != s.size()) fail("trailing input");
            return Scalar::normalize(n, d);
        }
        skip_ws();
        if (i != s.size()) fail("trailing input");
        return Scalar::from_poly(n);
    }
};

} // namespace

Scalar Scalar::parse(const std::string& text) {
    Parser p(text);
    return p.scalar();
}

} // namespace hallfock
