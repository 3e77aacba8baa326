#ifndef LIE2KIT_REPORT_HPP
#define LIE2KIT_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace lie2kit {

struct CheckResult {
    std::string id;              // short stable identifier, e.g. "k1.assoc"
    std::string law;             // the identity being checked, human readable
    bool pass = false;
    std::string counterexample;  // first failing instance, empty when passing
};

// Deterministic verification record: same seed and inputs give byte-identical
// output.
struct Report {
    std::string subject;
    uint64_t seed = 0;
    int samples = 0;
    std::vector<CheckResult> checks;

    void add(const std::string& id, const std::string& law, bool pass,
             const std::string& counterexample = "") {
        checks.push_back({id, law, pass, counterexample});
    }

    void merge(const Report& other) {
        for (const auto& c : other.checks) checks.push_back(c);
    }

    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    std::string text() const;
};

} // namespace lie2kit

#endif
