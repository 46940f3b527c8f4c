#ifndef NOETHER_CLI_HPP
#define NOETHER_CLI_HPP

#include <noether/dump.hpp>
#include <noether/suites.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace noether {

enum class ExitCode : int { Pass = 0, Failure = 1, Usage = 2 };

inline void print_text(std::ostream& out, const std::vector<SuiteReport>& reports) {
    std::size_t width = 0;
    for (const auto& r : reports)
        for (const auto& c : r.checks)
            width = std::max(width, c.id.size() + c.expected.dump().size() + c.observed.dump().size() + 22);
    std::size_t passed = 0;
    for (const auto& r : reports) {
        out << "== " << r.suite << "  " << (r.pass ? "PASS" : "FAIL") << "  (" << std::fixed << std::setprecision(1)
            << r.elapsed_ms << " ms)\n";
        for (const auto& c : r.checks) {
            const auto row = c.id + " expected " + c.expected.dump() + " observed " + c.observed.dump();
            out << "  " << (c.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(static_cast<int>(width)) << row
                << c.description << '\n';
        }
        for (const auto& n : r.notes) out << "  note: " << n << '\n';
        passed += r.pass ? 1 : 0;
    }
    out << passed << "/" << reports.size() << " suites passed\n";
}

inline void print_list(std::ostream& out) {
    std::size_t width = 0;
    for (const auto& s : suite_catalog()) width = std::max(width, s.name.size());
    for (const auto& s : suite_catalog())
        out << std::left << std::setw(static_cast<int>(width + 2)) << s.name << s.summary << '\n';
}

inline std::vector<std::string> parse_suite_list(const std::string& arg) {
    if (arg == "all" || arg.empty()) return suite_names();
    std::vector<std::string> names;
    std::stringstream ss(arg);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item.empty()) continue;
        find_suite(item);
        if (std::find(names.begin(), names.end(), item) == names.end()) names.push_back(item);
    }
    if (names.empty()) throw std::invalid_argument("no suites selected");
    // stable catalog order regardless of how they were listed
    std::vector<std::string> ordered;
    for (const auto& n : suite_names())
        if (std::find(names.begin(), names.end(), n) != names.end()) ordered.push_back(n);
    return ordered;
}

/// Entry point shared by the noether tool and the tests.
inline int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact certificates for spin, G2 and SL_n orbit computations", "noether"};
    app.require_subcommand(1);

    RunConfig config;
    std::string suites = "all";
    std::string format = "text";
    std::string dump;
    std::size_t jobs = 1;

    auto* run = app.add_subcommand("run", "run verification suites");
    run->add_option("--suites", suites, "comma separated suite names, or all")->envname("NOETHER_SUITES");
    run->add_option("--prime", config.prime, "primary prime")->envname("NOETHER_PRIME");
    run->add_option("--confirm-prime", config.confirm_prime, "confirmation prime")->envname("NOETHER_CONFIRM_PRIME");
    run->add_option("--seed", config.seed, "random seed")->envname("NOETHER_SEED");
    run->add_option("--trials", config.trials, "random points per genericity claim")->envname("NOETHER_TRIALS");
    run->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->envname("NOETHER_FORMAT");
    run->add_flag("--stretch", config.stretch, "also run the invariant quartic check")->envname("NOETHER_STRETCH");
    run->add_option("--dump", dump, "write representation matrices as JSON to this path")->envname("NOETHER_DUMP");
    run->add_option("--jobs", jobs, "worker threads")->envname("NOETHER_JOBS");
    app.add_subcommand("list", "list suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : static_cast<int>(ExitCode::Usage);
    }

    if (app.got_subcommand("list")) {
        print_list(out);
        return static_cast<int>(ExitCode::Pass);
    }

    std::vector<std::string> names;
    try {
        config.validate();
        names = parse_suite_list(suites);
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::Usage);
    }

    if (!dump.empty()) {
        std::ofstream file(dump);
        if (!file) {
            err << "usage error: cannot write " << dump << '\n';
            return static_cast<int>(ExitCode::Usage);
        }
        file << dump_suites(names).dump() << '\n';
    }

    const auto reports = run_suites(names, config, jobs);
    if (format == "json")
        out << reports_json(reports, config).dump(2) << '\n';
    else
        print_text(out, reports);
    const bool pass = std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.pass; });
    return static_cast<int>(pass ? ExitCode::Pass : ExitCode::Failure);
}

}  // namespace noether

#endif  // NOETHER_CLI_HPP
