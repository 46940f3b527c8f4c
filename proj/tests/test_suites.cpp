#include <noether/cli.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace noether;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    args.insert(args.begin(), "noether");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

const std::vector<SuiteReport>& default_reports() {
    static const auto reports = run_suites(suite_names(), RunConfig{}, 4);
    return reports;
}

std::map<std::string, json> observed_values(const SuiteReport& r) {
    std::map<std::string, json> out;
    for (const auto& c : r.checks) out[c.id] = c.observed;
    return out;
}

class ScopedEnv {
public:
    ScopedEnv(const char* name, const char* value) : name_(name) { setenv(name, value, 1); }
    ~ScopedEnv() { unsetenv(name_); }

private:
    const char* name_;
};

const std::set<std::string> kReportKeys = {"suite", "checks", "seed", "primes", "elapsed_ms", "pass"};
const std::set<std::string> kCheckKeys = {"id", "description", "expected", "observed", "provenance", "anchor", "pass"};

void expect_schema(const json& report) {
    for (const auto& k : kReportKeys) EXPECT_TRUE(report.contains(k)) << k;
    EXPECT_TRUE(report["suite"].is_string());
    EXPECT_TRUE(report["checks"].is_array());
    EXPECT_TRUE(report["seed"].is_number_unsigned());
    EXPECT_TRUE(report["primes"].is_array());
    EXPECT_TRUE(report["elapsed_ms"].is_number());
    EXPECT_TRUE(report["pass"].is_boolean());
    bool all = true;
    for (const auto& c : report["checks"]) {
        for (const auto& k : kCheckKeys) EXPECT_TRUE(c.contains(k)) << k;
        EXPECT_TRUE(c["pass"].is_boolean());
        all = all && c["pass"].get<bool>();
    }
    EXPECT_EQ(report["pass"].get<bool>(), all);
}

}  // namespace

TEST(Catalog, EightSuitesInStableOrder) {
    EXPECT_EQ(suite_names(), (std::vector<std::string>{"g2_octonion", "spin7", "spin10", "spin11", "spin14", "coregular_free",
                                                       "branching", "sln_quotient"}));
    for (const auto& s : suite_catalog()) {
        EXPECT_FALSE(s.checks.empty()) << s.name;
        std::set<std::string> ids;
        for (const auto& c : s.checks) {
            EXPECT_FALSE(c.provenance.empty()) << s.name << "/" << c.id;
            EXPECT_FALSE(c.anchor.empty()) << s.name << "/" << c.id;
            EXPECT_TRUE(ids.insert(c.id).second) << "duplicate id " << c.id;
        }
    }
    EXPECT_THROW(find_suite("spin9"), std::invalid_argument);
}

TEST(Suites, DefaultConfigPasses) {
    for (const auto& r : default_reports()) {
        EXPECT_TRUE(r.pass) << r.suite;
        for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << r.suite << "/" << c.id << " observed " << c.observed.dump();
    }
}

TEST(Suites, RationalReplayWhereConfigured) {
    for (const auto& r : default_reports()) {
        const bool expected = r.suite == "g2_octonion" || r.suite == "spin7" || r.suite == "sln_quotient";
        EXPECT_EQ(r.rational_replay, expected) << r.suite;
        EXPECT_EQ(r.primes, (std::vector<std::uint64_t>{1000003, 999983}));
    }
}

TEST(Suites, CrossSuiteConsistency) {
    const auto& reports = default_reports();
    auto get = [&](const std::string& suite, const std::string& id) {
        for (const auto& r : reports)
            if (r.suite == suite) return r.find(id)->observed;
        return json();
    };
    EXPECT_EQ(get("spin7", "stabilizer_dim"), get("g2_octonion", "derivation_dim"));
    EXPECT_EQ(get("spin7", "killing_rank"), get("g2_octonion", "derivation_killing_rank"));
}

TEST(Suites, DeterministicAndThreadIndependent) {
    RunConfig config;
    config.seed = 5;
    const std::vector<std::string> names{"spin7", "spin10", "branching", "sln_quotient"};
    const auto a = without_timing(reports_json(run_suites(names, config, 1), config));
    const auto b = without_timing(reports_json(run_suites(names, config, 1), config));
    const auto c = without_timing(reports_json(run_suites(names, config, 4), config));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
}

TEST(Suites, SeedChangeKeepsCertificates) {
    for (const std::string name : {"g2_octonion", "spin10", "coregular_free"}) {
        RunConfig one, two;
        one.seed = 1;
        two.seed = 987654321;
        const auto r1 = run_suite(find_suite(name), one);
        const auto r2 = run_suite(find_suite(name), two);
        EXPECT_TRUE(r1.pass && r2.pass) << name;
        EXPECT_EQ(observed_values(r1), observed_values(r2)) << name;
    }
}

TEST(Suites, PrimeSwapKeepsCertificates) {
    RunConfig swapped;
    std::swap(swapped.prime, swapped.confirm_prime);
    const auto r1 = run_suite(find_suite("spin11"), RunConfig{});
    const auto r2 = run_suite(find_suite("spin11"), swapped);
    EXPECT_EQ(observed_values(r1), observed_values(r2));
}

TEST(Suites, SmallPrimeIsFlaggedNotFatal) {
    RunConfig config;
    config.prime = 5;
    config.confirm_prime = 7;
    SuiteReport r;
    EXPECT_NO_THROW(r = run_suite(find_suite("g2_octonion"), config));
    bool flagged = false;
    for (const auto& n : r.notes) flagged = flagged || n.rfind("prime-too-small", 0) == 0;
    EXPECT_TRUE(flagged);
    EXPECT_EQ(r.checks.size(), find_suite("g2_octonion").checks.size());
}

TEST(Suites, FailureIsReportedWithoutAborting) {
    SuiteSpec spec = find_suite("spin7");
    spec.checks[4].expected = 13;  // stabilizer_dim
    const auto r = run_suite(spec, RunConfig{});
    EXPECT_FALSE(r.pass);
    EXPECT_FALSE(r.find("stabilizer_dim")->pass);
    EXPECT_EQ(r.find("stabilizer_dim")->observed, 14);
    EXPECT_TRUE(r.find("killing_rank")->pass);
}

TEST(Suites, StretchRunsQuartic) {
    RunConfig config;
    config.stretch = true;
    const auto r = run_suite(find_suite("spin11"), config);
    ASSERT_NE(r.find("quartic_invariants"), nullptr);
    EXPECT_EQ(r.find("quartic_invariants")->observed, 1);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(run_suite(find_suite("spin11"), RunConfig{}).find("quartic_invariants"), nullptr);
}

TEST(Suites, ConfigValidation) {
    RunConfig c;
    EXPECT_NO_THROW(c.validate());
    c.prime = 4;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c.prime = 3;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c.prime = c.confirm_prime;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = RunConfig{};
    c.trials = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Json, ReportSchema) {
    const auto doc = reports_json(default_reports(), RunConfig{});
    EXPECT_TRUE(doc["pass"].get<bool>());
    ASSERT_EQ(doc["suites"].size(), 8u);
    for (const auto& r : doc["suites"]) expect_schema(r);
}

TEST(Json, GoldenFile) {
    std::ifstream in(std::string(NOETHER_TEST_DIR) + "/golden/spin7_sln_seed0.json");
    ASSERT_TRUE(in.good());
    const auto golden = json::parse(in);
    const auto r = cli({"run", "--suites", "spin7,sln_quotient", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(without_timing(json::parse(r.out)), golden);
}

TEST(Cli, ListSuites) {
    const auto r = cli({"list"});
    EXPECT_EQ(r.code, 0);
    std::istringstream lines(r.out);
    std::vector<std::string> names;
    for (std::string line; std::getline(lines, line);) names.push_back(line.substr(0, line.find(' ')));
    EXPECT_EQ(names, suite_names());
    EXPECT_NE(r.out.find("spin11  "), std::string::npos);
    EXPECT_NE(r.out.find("stabilizer SL5"), std::string::npos);
}

TEST(Cli, RunSpinSeven) {
    const auto r = cli({"run", "--suites", "spin7", "--seed", "42"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("stabilizer_dim expected 14 observed 14"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("1/1 suites passed"), std::string::npos);
}

TEST(Cli, JsonDocumentForAllSuites) {
    const auto r = cli({"run", "--format", "json", "--jobs", "4"});
    EXPECT_EQ(r.code, 0);
    const auto doc = json::parse(r.out);
    ASSERT_EQ(doc["suites"].size(), 8u);
    for (const auto& s : doc["suites"]) expect_schema(s);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(cli({"run", "--prime", "4"}).code, 2);
    EXPECT_EQ(cli({"run", "--prime", "999983"}).code, 2);
    EXPECT_EQ(cli({"run", "--suites", "spin9"}).code, 2);
    EXPECT_EQ(cli({"run", "--format", "xml"}).code, 2);
    EXPECT_EQ(cli({"run", "--trials", "0"}).code, 2);
    EXPECT_EQ(cli({"run", "--unknown"}).code, 2);
    EXPECT_EQ(cli({}).code, 2);
    EXPECT_EQ(cli({"run", "--help"}).code, 0);
}

TEST(Cli, EnvironmentOverridesAndFlagsWin) {
    {
        ScopedEnv env("NOETHER_PRIME", "4");
        EXPECT_EQ(cli({"run", "--suites", "spin7"}).code, 2);
        EXPECT_EQ(cli({"run", "--suites", "spin7", "--prime", "1000003"}).code, 0);
    }
    {
        ScopedEnv env("NOETHER_FORMAT", "json");
        const auto r = cli({"run", "--suites", "branching"});
        EXPECT_EQ(r.code, 0);
        EXPECT_TRUE(json::accept(r.out));
        EXPECT_EQ(cli({"run", "--suites", "branching", "--format", "text"}).out.rfind("== branching", 0), 0u);
    }
    {
        ScopedEnv env("NOETHER_SUITES", "spin10");
        EXPECT_NE(cli({"run"}).out.find("== spin10"), std::string::npos);
        EXPECT_EQ(cli({"run"}).out.find("== spin7"), std::string::npos);
    }
}

TEST(Cli, DumpWritesRepresentations) {
    const auto path = std::filesystem::temp_directory_path() / "noether_dump_test.json";
    const auto r = cli({"run", "--suites", "spin7,g2_octonion", "--dump", path.string()});
    EXPECT_EQ(r.code, 0);
    std::ifstream in(path);
    const auto doc = json::parse(in);
    ASSERT_EQ(doc["representations"].size(), 1u);
    const auto& spin = doc["representations"][0];
    EXPECT_EQ(spin["dimension"], 8);
    EXPECT_EQ(spin["matrices"].size(), 21u);
    EXPECT_EQ(spin["field"], "Q");
    EXPECT_EQ(doc["g2_derivations"]["matrices"].size(), 14u);
    // the dumped derivations are integral
    for (const auto& m : doc["g2_derivations"]["matrices"])
        for (const auto& row : m)
            for (const auto& e : row) EXPECT_TRUE(e.is_number_integer());
    std::filesystem::remove(path);
    EXPECT_EQ(cli({"run", "--suites", "spin7", "--dump", "/nonexistent/dir/x.json"}).code, 2);
}
