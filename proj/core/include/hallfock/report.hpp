#pragma once

#include <string>
#include <vector>

namespace hallfock {

// One verified identity: name, parameter rendering, outcome, and a witness
// description when it failed.
struct IdentityResult {
    std::string name;
    std::string params;
    bool pass = false;
    std::string witness; // empty on pass

    static IdentityResult ok(std::string name, std::string params = "") {
        return {std::move(name), std::move(params), true, ""};
    }
    static IdentityResult fail(std::string name, std::string params, std::string witness) {
        return {std::move(name), std::move(params), false, std::move(witness)};
    }
};

struct SuiteReport {
    std::string suite;
    std::vector<IdentityResult> results;

    bool pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
    std::size_t failed() const {
        std::size_t n = 0;
        for (const auto& r : results)
            if (!r.pass) ++n;
        return n;
    }
    void add(IdentityResult r) { results.push_back(std::move(r)); }
    void merge(const SuiteReport& o) {
        results.insert(results.end(), o.results.begin(), o.results.end());
    }

    std::string text() const;
    std::string json() const;
};

} // namespace hallfock
