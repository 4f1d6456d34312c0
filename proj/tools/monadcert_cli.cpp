// Command-line front end: seeded scenario verification, random monad surveys,
// configuration sweeps, and cohomology tables.  Exit codes: 0 when every
// mandatory check passes, 1 when any fails, 2 on configuration errors.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "monadcert/pipeline.hpp"

namespace {

using namespace monadcert;

void print_report(const Report& report) {
    for (const Certificate& cert : report.certificates) {
        std::cout << cert.scenario << "  (prime " << cert.prime << ", seed " << cert.seed
                  << ", attempts " << cert.attempts << ")\n";
        for (const CheckRecord& c : cert.checks) {
            std::cout << "  [" << (c.passed ? "pass" : (c.mandatory ? "FAIL" : "info")) << "] "
                      << c.name;
            if (!c.dims.empty()) {
                std::cout << "  {";
                bool first = true;
                for (const auto& [k, v] : c.dims) {
                    std::cout << (first ? "" : ", ") << k << "=" << v;
                    first = false;
                }
                std::cout << "}";
            }
            if (c.samples) std::cout << "  samples=" << c.samples;
            std::cout << "\n";
        }
        std::cout << "  => " << (cert.pass() ? "PASS" : "FAIL") << "\n";
    }
    const ValidationStats& s = stats();
    std::cout << "internal checks: rank-nullity " << s.rank_nullity_checks << ", euler "
              << s.euler_checks << ", two-route " << s.two_route_checks << ", section-epi "
              << s.epi_section_checks << ", violations " << s.violations << "\n";
}

int write_json(const Json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot open " << path << " for writing\n";
        return 2;
    }
    out << j.dump(2) << "\n";
    return 0;
}

int finish(const Report& report, const std::string& json_path) {
    print_report(report);
    if (!json_path.empty()) {
        int rc = write_json(report_to_json(report), json_path);
        if (rc) return rc;
    }
    return report.pass() ? 0 : 1;
}

bool parse_window(const std::string& spec, int& lmin, int& lmax) {
    auto pos = spec.find("..");
    if (pos == std::string::npos) return false;
    try {
        lmin = std::stoi(spec.substr(0, pos));
        lmax = std::stoi(spec.substr(pos + 2));
    } catch (...) {
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified monad and curve constructions over a prime field"};
    app.require_subcommand(1);

    ScenarioConfig cfg;
    std::string json_path;
    bool timed = false;

    auto add_common = [&](CLI::App* cmd, bool with_genus) {
        if (with_genus) cmd->add_option("--genus", cfg.genus, "genus, 5..13")->required();
        cmd->add_option("--prime", cfg.prime, "prime modulus (default 32003)");
        cmd->add_option("--seed", cfg.seed, "master seed");
        cmd->add_option("--json", json_path, "write the JSON report to this path");
        cmd->add_flag("--timed", timed, "include wall-clock timings in the report");
    };

    CLI::App* verify = app.add_subcommand("verify", "run the genus scenario and certify it");
    add_common(verify, true);
    verify->add_option("--trials", cfg.trials, "independent trials");
    verify->add_option("--samples", cfg.sample_count, "pointwise sample count");
    verify->add_option("--max-retries", cfg.max_retries, "bound on genericity retries");

    CLI::App* survey = app.add_subcommand("survey", "sample random monads and verify them");
    add_common(survey, true);
    survey->add_option("--trials", cfg.trials, "number of sampled monads");

    CLI::App* appb = app.add_subcommand("appendix-b",
                                        "sweep random three-line/four-point configurations");
    add_common(appb, false);
    appb->add_option("--configs", cfg.trials, "number of admissible configurations");

    std::string window = "-2..3";
    CLI::App* table = app.add_subcommand("table", "print a cohomology table of E");
    add_common(table, true);
    table->add_option("--window", window, "twist window LMIN..LMAX");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            Report report = run_scenario(cfg);
            report.timed = timed;
            return finish(report, json_path);
        }
        if (survey->parsed()) {
            Report report = random_monad_survey(cfg);
            report.timed = timed;
            long long pass = 0;
            for (const Certificate& c : report.certificates) pass += c.pass() ? 1 : 0;
            std::cout << "pass rate: " << pass << "/" << report.certificates.size() << "\n";
            return finish(report, json_path);
        }
        if (appb->parsed()) {
            Report report = configuration_sweep(cfg);
            report.timed = timed;
            return finish(report, json_path);
        }
        if (table->parsed()) {
            int lmin = 0, lmax = 0;
            if (!parse_window(window, lmin, lmax)) {
                std::cerr << "bad window spec: " << window << "\n";
                return 2;
            }
            CohTable t = scenario_coh_table(cfg, lmin, lmax);
            std::cout << "l:   ";
            for (int l = t.lmin; l <= t.lmax; ++l) std::cout << l << "\t";
            std::cout << "\n";
            for (int i = 0; i <= 1; ++i) {
                std::cout << "h^" << i << ": ";
                for (const CohEntry& e : t.entries)
                    if (e.i == i) std::cout << e.dim << "\t";
                std::cout << "\n";
            }
            if (!json_path.empty()) return write_json(coh_table_to_json(t, cfg), json_path);
            return 0;
        }
    } catch (const CheckFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
