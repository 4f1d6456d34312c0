// Structured pass/fail records.  A Certificate collects the named checks of
// one seeded scenario; its overall status is the conjunction of the mandatory
// checks.  The `claim` string states the rank/dimension condition being
// certified and is emitted under the report key "paper_ref".

#ifndef MONADCERT_CERTIFICATE_HPP
#define MONADCERT_CERTIFICATE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace monadcert {

struct CheckRecord {
    std::string name;
    std::string claim;
    bool passed = false;
    bool mandatory = true;
    std::vector<std::pair<std::string, long long>> dims;
    long long samples = 0;
    int attempts = 1;
};

struct Certificate {
    std::string scenario;
    std::uint32_t prime = 0;
    std::uint64_t seed = 0;
    int attempts = 1;
    std::vector<CheckRecord> checks;

    CheckRecord& add(std::string name, std::string claim, bool passed, bool mandatory = true) {
        checks.push_back(CheckRecord{std::move(name), std::move(claim), passed, mandatory, {}, 0, 1});
        return checks.back();
    }

    bool pass() const {
        for (const CheckRecord& c : checks)
            if (c.mandatory && !c.passed) return false;
        return true;
    }
};

}  // namespace monadcert

#endif
