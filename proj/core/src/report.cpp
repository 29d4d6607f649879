#include "hallfock/report.hpp"

#include <json.hpp>

namespace hallfock {

std::string SuiteReport::text() const {
    std::string s = "suite " + suite + ": " + (pass() ? "PASS" : "FAIL") + " (" +
                    std::to_string(results.size() - failed()) + "/" +
                    std::to_string(results.size()) + ")\n";
    for (const auto& r : results) {
        s += (r.pass ? "  ok   " : "  FAIL ") + r.name;
        if (!r.params.empty()) s += " [" + r.params + "]";
        if (!r.pass && !r.witness.empty()) s += "\n       " + r.witness;
        s += "\n";
    }
    return s;
}

std::string SuiteReport::json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["pass"] = pass();
    j["identities"] = nlohmann::json::array();
    for (const auto& r : results) {
        nlohmann::json e;
        e["name"] = r.name;
        e["params"] = r.params;
        e["status"] = r.pass ? "pass" : "fail";
        if (!r.pass) e["witness"] = r.witness;
        j["identities"].push_back(std::move(e));
    }
    return j.dump(2);
}

} // namespace hallfock
