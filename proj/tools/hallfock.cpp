#include <CLI11.hpp>

#include <cctype>
#include <iostream>

#include "hallfock/classfunc.hpp"
#include "hallfock/errors.hpp"
#include "hallfock/fock.hpp"
#include "hallfock/ktheory.hpp"
#include "hallfock/shuffle.hpp"
#include "hallfock/suites.hpp"

namespace {

using namespace hallfock;

// exit codes: 0 success, 1 identity failure, 2 usage error
constexpr int kOk = 0;
constexpr int kIdentityFailure = 1;
constexpr int kUsage = 2;

// tiny expression grammar for symmetric functions on the command line:
//   expr := term (('+'|'-') term)* ; term := factor ('*' factor)*
//   factor := INT | p<k> | p[a,b,..] | h<k> | e<k> | '(' expr ')'
// JSON input ({"terms": ...}) is accepted as well.
struct SymParser {
    const std::string& s;
    std::size_t i = 0;
    explicit SymParser(const std::string& text) : s(text) {}

    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    int integer() {
        ws();
        std::size_t start = i;
        if (i < s.size() && s[i] == '-') ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw parse_error("expected integer", start);
        return std::stoi(s.substr(start, i - start));
    }
    SymFunc factor() {
        ws();
        if (eat('(')) {
            SymFunc f = expr();
            if (!eat(')')) throw parse_error("expected ')'", i);
            return f;
        }
        if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '-'))
            return SymFunc::scalar_multiple(Scalar(integer()));
        if (i >= s.size()) throw parse_error("expected factor", i);
        char c = s[i];
        if (c == 'p' || c == 'h' || c == 'e') {
            ++i;
            if (c == 'p' && i < s.size() && s[i] == '[') {
                ++i;
                std::vector<int> parts;
                if (!eat(']')) {
                    parts.push_back(integer());
                    while (eat(',')) parts.push_back(integer());
                    if (!eat(']')) throw parse_error("expected ']'", i);
                }
                return SymFunc::p(Partition(std::move(parts)));
            }
            int k = integer();
            if (c == 'p') return SymFunc::p(k);
            if (c == 'h') return h_poly(k);
            return e_poly(k);
        }
        throw parse_error(std::string("unexpected '") + c + "'", i);
    }
    SymFunc term() {
        SymFunc f = factor();
        while (eat('*')) f = f * factor();
        return f;
    }
    SymFunc expr() {
        SymFunc f = term();
        while (true) {
            ws();
            if (eat('+'))
                f += term();
            else if (i < s.size() && s[i] == '-' && !std::isdigit(static_cast<unsigned char>(
                                                        i + 1 < s.size() ? s[i + 1] : '\0'))) {
                ++i;
                f -= term();
            } else if (eat('-')) {
                f -= term();
            } else {
                break;
            }
        }
        return f;
    }
};

SymFunc parse_symfunc(const std::string& text) {
    std::size_t j = 0;
    while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j < text.size() && text[j] == '{') return SymFunc::from_json(text);
    SymParser p(text);
    SymFunc f = p.expr();
    p.ws();
    if (p.i != text.size()) throw parse_error("trailing input", p.i);
    return f;
}

std::vector<fock::Generator> parse_generator_list(const std::string& text) {
    std::vector<fock::Generator> out;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || (text[i] == ',' && depth == 0)) {
            std::string atom = text.substr(start, i - start);
            if (!atom.empty()) {
                fock::GeneratorWord w = fock::parse_word(atom);
                if (w.factors.size() != 1 || !w.coeff.is_one())
                    throw argument_error("expected a single generator, got '" + atom + "'");
                out.push_back(w.factors[0]);
            }
            start = i + 1;
        } else if (i < text.size() && text[i] == '(') {
            ++depth;
        } else if (i < text.size() && text[i] == ')') {
            --depth;
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact elliptic-Hall / Fock-space computation engine"};
    app.require_subcommand(1);

    int max_degree = 6;
    int rank = 1;
    unsigned seed = 1;
    int truncation = 0;
    bool json = false;
    app.add_option("--max-degree", max_degree, "degree cap for symmetric functions");
    app.add_option("--rank", rank, "framing rank r");
    app.add_option("--seed", seed, "seed for randomized pre-checks");
    app.add_option("--truncation", truncation, "kernel series order ceiling (0 = auto)");
    app.add_flag("--json", json, "machine-readable output");

    auto* act = app.add_subcommand("act", "apply an operator word to a symmetric function");
    std::string word_text, sym_text;
    act->add_option("word", word_text, "operator word, e.g. \"H(1,2);P(0,1)\"")->required();
    act->add_option("symfunc", sym_text, "input, e.g. \"1\", \"p[2,1]\", or JSON")->required();

    auto* verify = app.add_subcommand("verify", "run a named identity suite");
    std::string suite_name;
    int trace_k = 6;
    verify->add_option("suite", suite_name, "one of: heisenberg frobenius need eha-relations "
                                            "vacuum computation trace shuffle weights boundary "
                                            "intertwine")
        ->required();
    verify->add_option("--k", trace_k, "trace suite: maximum cycle length");

    auto* inter = app.add_subcommand("intertwine", "universal-class intertwining checks");
    int inter_d = 2;
    std::string gens_text = "H(1,0),H(1,1),P(0,1)";
    bool allow_boundary = false;
    inter->add_option("--r", rank, "framing rank");
    inter->add_option("--d", inter_d, "maximum instanton number");
    inter->add_option("--gens", gens_text, "comma-separated generators");
    inter->add_flag("--allow-boundary", allow_boundary,
                    "also evaluate generators outside A^(r), reporting the z=0 residue");

    auto* shuf = app.add_subcommand("shuffle", "shuffle-algebra star product");
    int sn = 1, sm = 0, sn2 = 1, sm2 = 1;
    bool shuffle_check = false;
    shuf->add_option("--n", sn);
    shuf->add_option("--m", sm);
    shuf->add_option("--n2", sn2);
    shuf->add_option("--m2", sm2);
    shuf->add_flag("--check", shuffle_check, "verify the star product against operator composition");

    auto* localize = app.add_subcommand("localize", "evaluate a universal class at fixed points");
    std::string loc_sym = "1";
    int loc_d = 1;
    localize->add_option("symfunc", loc_sym)->required();
    localize->add_option("--d", loc_d, "instanton number");
    localize->add_option("--rank", rank, "framing rank");

    auto* tracecmd = app.add_subcommand("trace", "exterior-algebra trace identity");
    tracecmd->add_option("--k", trace_k, "maximum cycle length");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        set_degree_cap(max_degree + 10);
        fock::set_truncation_bound(truncation);
        suites::Config cfg;
        cfg.max_degree = max_degree;
        cfg.rank = rank;
        cfg.seed = seed;

        if (*act) {
            fock::GeneratorWord w = fock::parse_word(word_text);
            SymFunc f = parse_symfunc(sym_text);
            SymFunc out = fock::apply_word(w, f);
            for (const auto& [l, c] : out.terms())
                if (c.depends_on_z())
                    throw internal_error("z-variable leaked into the result");
            std::cout << (json ? out.json() : out.str()) << "\n";
            return kOk;
        }
        if (*verify) {
            SuiteReport rep = suite_name == "trace" ? suites::trace(trace_k)
                                                    : suites::run_named(suite_name, cfg);
            std::cout << (json ? rep.json() : rep.text());
            return rep.pass() ? kOk : kIdentityFailure;
        }
        if (*inter) {
            auto gens = parse_generator_list(gens_text);
            SuiteReport rep;
            rep.suite = "intertwine";
            for (const auto& g : gens) {
                if (g.kind == fock::Generator::Kind::P && g.n == 0) {
                    rep.merge(ktheory::intertwine_check(rank, inter_d, 0, g.m, max_degree));
                    continue;
                }
                if (g.kind != fock::Generator::Kind::H)
                    throw argument_error("intertwine grid accepts H(n,m) and P(0,m) generators");
                if (!fock::in_Ar(g.n, g.m, rank)) {
                    if (!allow_boundary) {
                        std::cerr << "generator " << g.str() << " is outside A^(" << rank
                                  << "): membership needs m > -n*r = " << -g.n * rank
                                  << " (use --allow-boundary to evaluate anyway)\n";
                        return kUsage;
                    }
                    // boundary mode: report the z = 0 residue certificates
                    DegreeCapGuard guard(max_degree + std::abs(g.m) + 4);
                    for (int dd = 0; dd <= inter_d; ++dd)
                        for (const auto& lam : ktheory::rpartitions(rank, dd)) {
                            Scalar c = ktheory::residue_at_zero_certificate(
                                g.n > 0 ? 1 : -1, std::abs(g.n), g.m, SymFunc::one(),
                                ktheory::fixed_point_character(lam));
                            rep.add(IdentityResult::ok(
                                "boundary-certificate",
                                g.str() + " at " + lam.str() + ": residue " + c.str()));
                        }
                    continue;
                }
                rep.merge(ktheory::intertwine_check(rank, inter_d, g.n, g.m, max_degree));
            }
            std::cout << (json ? rep.json() : rep.text());
            return rep.pass() ? kOk : kIdentityFailure;
        }
        if (*shuf) {
            if (shuffle_check) {
                IdentityResult r = shuffle::star_vs_fock(sn, sm, sn2, sm2, max_degree);
                SuiteReport rep;
                rep.suite = "shuffle";
                rep.add(r);
                std::cout << (json ? rep.json() : rep.text());
                return rep.pass() ? kOk : kIdentityFailure;
            }
            shuffle::ShuffleElement s = shuffle::star(
                shuffle::symmetrize(shuffle::r_kernel(sn, sm)),
                shuffle::symmetrize(shuffle::r_kernel(sn2, sm2)));
            std::cout << s.fn.value().str() << "\n";
            return kOk;
        }
        if (*localize) {
            SymFunc f = parse_symfunc(loc_sym);
            ktheory::FixedPointVector v = ktheory::gamma_eval(f, rank, loc_d);
            if (json) {
                std::cout << v.json() << "\n";
            } else {
                for (const auto& [lam, c] : v.entries)
                    std::cout << lam.str() << ": " << c.str() << "\n";
            }
            return kOk;
        }
        if (*tracecmd) {
            SuiteReport rep = suites::trace(trace_k);
            std::cout << (json ? rep.json() : rep.text());
            return rep.pass() ? kOk : kIdentityFailure;
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const argument_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIdentityFailure;
    }
    return kUsage;
}
