#pragma once

#include <string>
#include <vector>

namespace taftlie {

enum class CheckStatus { pass, fail, not_applicable };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "n/a";
    }
}

/// One verified identity or structural claim.  `witness` names the basis
/// elements involved when the check fails (or why it does not apply).
struct CheckResult {
    std::string check;
    CheckStatus status = CheckStatus::pass;
    std::string witness;
};

struct Report {
    std::vector<CheckResult> checks;

    void add(std::string name, CheckStatus st, std::string witness = {}) {
        checks.push_back({std::move(name), st, std::move(witness)});
    }
    void pass(std::string name) { add(std::move(name), CheckStatus::pass); }
    void fail(std::string name, std::string witness) {
        add(std::move(name), CheckStatus::fail, std::move(witness));
    }
    void skip(std::string name, std::string why) {
        add(std::move(name), CheckStatus::not_applicable, std::move(why));
    }

    bool all_pass() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail) return false;
        return true;
    }

    const CheckResult* first_failure() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail) return &c;
        return nullptr;
    }

    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
};

}  // namespace taftlie
