// Run configuration and JSON reports.
//
// Reports are deterministic: identical (prime, seed, config) produce byte
// identical JSON.  Wall-clock timings are therefore only filled in when
// explicitly requested; the default is an empty timings object.

#ifndef MONADCERT_REPORT_HPP
#define MONADCERT_REPORT_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "monadcert/certificate.hpp"
#include "monadcert/field.hpp"

namespace monadcert {

using Json = nlohmann::ordered_json;

inline const char* kSemantics =
    "A PASS certifies the stated rank conditions for the specialized instance "
    "over F_p; by upper-semicontinuity of cohomology ranks this witnesses "
    "generic validity in the family over the prime field and supports, but "
    "does not formally prove, the characteristic-0 statement.";

struct ScenarioConfig {
    int genus = 11;
    std::uint32_t prime = 32003;
    std::uint64_t seed = 1;
    int trials = 1;
    int max_retries = 64;
    long long sample_count = 1000;  // pointwise checks

    FieldCtx field_ctx() const { return FieldCtx{prime, seed}; }
    void validate() const {
        field_ctx().validate();
        if (trials < 1) throw CheckFailure("trials must be >= 1");
        if (max_retries < 1 || max_retries > 4096) throw CheckFailure("max_retries out of range");
        if (sample_count < 1) throw CheckFailure("sample_count must be >= 1");
    }
};

struct Report {
    std::string version = "1";
    std::string command;
    ScenarioConfig config;
    std::vector<Certificate> certificates;
    bool timed = false;
    std::vector<std::pair<std::string, long long>> timings_ms;

    bool pass() const {
        for (const Certificate& c : certificates)
            if (!c.pass()) return false;
        return !certificates.empty();
    }
};

inline Json check_to_json(const CheckRecord& c, const std::string& prefix) {
    Json j;
    j["name"] = prefix.empty() ? c.name : prefix + c.name;
    j["paper_ref"] = c.claim;
    j["status"] = c.passed ? "pass" : (c.mandatory ? "fail" : "info");
    Json dims = Json::object();
    for (const auto& [k, v] : c.dims) dims[k] = v;
    j["dims"] = dims;
    j["samples"] = c.samples;
    j["attempts"] = c.attempts;
    return j;
}

inline Json report_to_json(const Report& r) {
    Json j;
    j["version"] = r.version;
    Json cfg;
    cfg["command"] = r.command;
    cfg["genus"] = r.config.genus;
    cfg["prime"] = r.config.prime;
    cfg["seed"] = r.config.seed;
    cfg["trials"] = r.config.trials;
    cfg["max_retries"] = r.config.max_retries;
    cfg["samples"] = r.config.sample_count;
    cfg["semantics"] = kSemantics;
    j["config"] = cfg;
    Json certs = Json::array();
    for (std::size_t i = 0; i < r.certificates.size(); ++i) {
        const Certificate& cert = r.certificates[i];
        std::string prefix =
            r.certificates.size() > 1 ? cert.scenario + "[" + std::to_string(i) + "]." : "";
        Json head;
        head["name"] = prefix.empty() ? cert.scenario : prefix + "summary";
        head["paper_ref"] = "conjunction of the mandatory checks below";
        head["status"] = cert.pass() ? "pass" : "fail";
        head["dims"] = Json::object();
        head["samples"] = 0;
        head["attempts"] = cert.attempts;
        certs.push_back(head);
        for (const CheckRecord& c : cert.checks) certs.push_back(check_to_json(c, prefix));
    }
    j["certificates"] = certs;
    Json t = Json::object();
    if (r.timed)
        for (const auto& [k, v] : r.timings_ms) t[k] = v;
    j["timings"] = t;
    return j;
}

}  // namespace monadcert

#endif
