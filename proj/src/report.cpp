#include "lie2kit/report.hpp"

#include <sstream>

namespace lie2kit {

std::string Report::text() const {
    std::ostringstream os;
    os << "== " << subject;
    if (samples > 0) os << "  (seed " << seed << ", " << samples << " samples)";
    os << "\n";
    for (const auto& c : checks) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.id;
        if (!c.law.empty()) os << "  " << c.law;
        os << "\n";
        if (!c.pass && !c.counterexample.empty())
            os << "       counterexample: " << c.counterexample << "\n";
    }
    os << (ok() ? "all checks passed" : "CHECKS FAILED") << "\n";
    return os.str();
}

} // namespace lie2kit
