#pragma once

#include <string>
#include <vector>

namespace periscope {

struct VerifyLine {
    std::string text;
    bool pass = false;
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyLine> lines;
    bool passed() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
};

// Each suite wraps library calls only; a suite passes iff every line passes.
VerifyReport verify_table1();
VerifyReport verify_bounds();
VerifyReport verify_nt_counterexamples();
VerifyReport verify_ultra_closure_suite();
VerifyReport verify_bipartite_espr_formula();
VerifyReport verify_irr_montecarlo();

std::vector<std::string> verify_suite_names();
VerifyReport run_verify_suite(const std::string& name);

}  // namespace periscope
