#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monadcert/pipeline.hpp"

using namespace monadcert;

namespace {
const CheckRecord* find_check(const Certificate& cert, const std::string& name) {
    for (const CheckRecord& c : cert.checks)
        if (c.name == name) return &c;
    return nullptr;
}

long long dim_of(const CheckRecord& c, const std::string& key) {
    for (const auto& [k, v] : c.dims)
        if (k == key) return v;
    FAIL("missing dim ", key);
    return -1;
}
}  // namespace

TEST_CASE("genus 11 construction certificate") {
    ScenarioConfig cfg;
    cfg.genus = 11;
    cfg.seed = 101;
    Report r = run_scenario(cfg);
    REQUIRE(r.certificates.size() == 1);
    const Certificate& cert = r.certificates.front();
    CHECK(cert.pass());
    auto* mk = find_check(cert, "mu_K_surjective");
    REQUIRE(mk != nullptr);
    CHECK(mk->passed);
    CHECK(dim_of(*mk, "h0_K_2") == 6);
    auto* shape = find_check(cert, "monad_shape");
    REQUIRE(shape != nullptr);
    CHECK(dim_of(*shape, "h1_F_m1") == 4);
    CHECK(dim_of(*shape, "h1_Fdual_m1") == 3);
}

TEST_CASE("genus 13 construction: corank statistics and structured divisor") {
    ScenarioConfig cfg;
    cfg.genus = 13;
    cfg.seed = 31;
    cfg.sample_count = 300;
    Report r = run_scenario(cfg);
    const Certificate& cert = r.certificates.front();
    CHECK(cert.pass());
    auto* cor = find_check(cert, "corank_at_most_one");
    REQUIRE(cor != nullptr);
    CHECK(cor->passed);
    CHECK(dim_of(*cor, "max_corank") <= 1);
    CHECK(dim_of(*cor, "delta_corank1") > 0);
    auto* dd = find_check(cert, "delta_divisor");
    REQUIRE(dd != nullptr);
    CHECK(dim_of(*dd, "system_dim") == 7);
    auto* h0e = find_check(cert, "h0_E_formula");
    REQUIRE(h0e != nullptr);
    CHECK(dim_of(*h0e, "h0_E") == 6);
}

TEST_CASE("low genus trials") {
    for (int g = 5; g <= 7; ++g) {
        ScenarioConfig cfg;
        cfg.genus = g;
        cfg.seed = 7;
        cfg.trials = 3;
        Report r = run_scenario(cfg);
        CHECK(r.certificates.size() == 3);
        for (const Certificate& cert : r.certificates) {
            INFO("genus ", g);
            CHECK(cert.pass());
        }
    }
}

TEST_CASE("survey certifies sampled monads and the mixed reduction") {
    ScenarioConfig cfg;
    cfg.genus = 13;
    cfg.seed = 11;
    cfg.trials = 5;
    Report r = random_monad_survey(cfg);
    CHECK(r.certificates.size() == 5);
    for (const Certificate& cert : r.certificates) {
        CHECK(cert.pass());
        auto* mm = find_check(cert, "mixed_monad_reduction");
        REQUIRE(mm != nullptr);
        CHECK(mm->passed);
        auto* h0e = find_check(cert, "h0_E_formula");
        REQUIRE(h0e != nullptr);
        CHECK(dim_of(*h0e, "h0_E_display") == 6);
    }
    CHECK_THROWS_AS(static_cast<void>(random_monad_survey(
                        []{ ScenarioConfig c; c.genus = 7; return c; }())),
                    CheckFailure);
}

TEST_CASE("configuration sweep over admissible line/point data") {
    ScenarioConfig cfg;
    cfg.seed = 23;
    cfg.trials = 10;
    Report r = configuration_sweep(cfg);
    const Certificate& cert = r.certificates.front();
    CHECK(cert.pass());
    auto* c1 = find_check(cert, "cubic_generation_three_lines_four_points");
    REQUIRE(c1 != nullptr);
    CHECK(dim_of(*c1, "admissible") >= 10);
    CHECK(dim_of(*c1, "pass") == dim_of(*c1, "admissible"));
}

TEST_CASE("reports are byte-identical for identical configuration") {
    ScenarioConfig cfg;
    cfg.genus = 9;
    cfg.seed = 404;
    Report a = run_scenario(cfg);
    Report b = run_scenario(cfg);
    CHECK(report_to_json(a).dump() == report_to_json(b).dump());
    CHECK(report_to_json(a).dump().find("paper_ref") != std::string::npos);
}

TEST_CASE("changing the seed changes the sampled data but not the verdict") {
    ScenarioConfig a, b;
    a.genus = b.genus = 10;
    a.seed = 1;
    b.seed = 2;
    Report ra = run_scenario(a), rb = run_scenario(b);
    CHECK(ra.pass());
    CHECK(rb.pass());
    CHECK(report_to_json(ra).dump() != report_to_json(rb).dump());
}

TEST_CASE("cohomology table of E matches the expected section counts") {
    ScenarioConfig cfg;
    cfg.genus = 11;
    cfg.seed = 5;
    CohTable t = scenario_coh_table(cfg, -1, 1);
    long long h0_at_0 = -1, h1_at_0 = -1;
    for (const CohEntry& e : t.entries) {
        if (e.l == 0 && e.i == 0) h0_at_0 = e.dim;
        if (e.l == 0 && e.i == 1) h1_at_0 = e.dim;
    }
    CHECK(h0_at_0 == 8);
    CHECK(h1_at_0 == 0);
    Json j = coh_table_to_json(t, cfg);
    CHECK(j["entries"].size() == 6);
    CHECK_THROWS_AS(static_cast<void>(scenario_coh_table(cfg, 3, -1)), CheckFailure);
}

TEST_CASE("config validation rejects bad inputs") {
    ScenarioConfig cfg;
    cfg.prime = 32004;
    CHECK_THROWS_AS(static_cast<void>(run_scenario(cfg)), CheckFailure);
    cfg.prime = 32003;
    cfg.trials = 0;
    CHECK_THROWS_AS(static_cast<void>(run_scenario(cfg)), CheckFailure);
    cfg.trials = 1;
    cfg.genus = 4;
    CHECK_THROWS_AS(static_cast<void>(run_scenario(cfg)), CheckFailure);
}
