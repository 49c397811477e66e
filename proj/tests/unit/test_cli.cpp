#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "sublin/cli/commands.hpp"
#include "sublin/generators.hpp"

using namespace sublin;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "sublin");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    auto dir = fs::temp_directory_path() / "sublin-cli-tests";
    fs::create_directories(dir);
    return dir / name;
}

const std::vector<std::string> kQuick{"--scale", "0.05", "--estimator-scale", "1e-4"};

std::vector<std::string> with_quick(std::vector<std::string> args) {
    args.insert(args.end(), kQuick.begin(), kQuick.end());
    return args;
}

}  // namespace

TEST_CASE("config keys") {
    cli::RunConfig cfg;
    CHECK_THROWS_AS(cli::apply_setting(cfg, "epsilom", "0.2"), UsageError);
    CHECK_THROWS_AS(cli::apply_setting(cfg, "epsilon", "0.2x"), UsageError);
    CHECK_THROWS_AS(cli::apply_setting(cfg, "seeds", "1,-2"), UsageError);
    cli::apply_setting(cfg, "seeds", "3,1,2");
    CHECK(cfg.seeds == std::vector<std::uint64_t>{3, 1, 2});
    cli::apply_setting(cfg, "mode", "dichotomy");
    cli::apply_setting(cfg, "access", "hybrid");
    CHECK(cfg.task == cli::Task::Dichotomy);
    CHECK(cfg.mode == Mode::Hybrid);
    CHECK(cli::mode_name(cfg) == "dichotomy");
    cli::apply_setting(cfg, "mode", "list");
    CHECK(cli::mode_name(cfg) == "list");
}

TEST_CASE("config file is overridden by flags") {
    auto path = scratch("run.cfg");
    std::ofstream(path) << "# quick run\nmode = list\nepsilon=0.2\nseed=4\ninstance=empty:n=30\n";
    cli::RunConfig cfg;
    cli::load_config_file(cfg, path.string());
    CHECK(cfg.mode == Mode::List);
    CHECK(cfg.pipeline.epsilon == 0.2);

    auto r = invoke(with_quick({"estimate", "--config", path.string(), "--epsilon", "0.25"}));
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["mode"] == "list");
    CHECK(j["config"]["epsilon"] == 0.25);
    CHECK(j["config"]["seed"] == 4);
    CHECK(j["run"]["instance"] == "empty:n=30");

    std::ofstream(path) << "bogus=1\n";
    CHECK(invoke({"estimate", "--config", path.string()}).code == cli::kUsageError);
}

TEST_CASE("SUBLIN_SEED sets the default seed") {
    ::setenv("SUBLIN_SEED", "77", 1);
    auto r = invoke(with_quick({"estimate", "--instance", "empty:n=20"}));
    CHECK(nlohmann::json::parse(r.out)["config"]["seed"] == 77);
    r = invoke(with_quick({"estimate", "--instance", "empty:n=20", "--seed", "5"}));
    CHECK(nlohmann::json::parse(r.out)["config"]["seed"] == 5);
    ::unsetenv("SUBLIN_SEED");
}

TEST_CASE("exit codes") {
    CHECK(invoke({}).code == cli::kUsageError);
    CHECK(invoke({"estimate", "--no-such-flag"}).code == cli::kUsageError);
    CHECK(invoke({"estimate", "--mode", "sideways"}).code == cli::kUsageError);
    CHECK(invoke({"estimate", "--graph", "/nonexistent/graph.txt"}).code == cli::kUsageError);
    CHECK(invoke({"verify", "--graph", "/nonexistent/graph.txt"}).code == cli::kUsageError);
    CHECK(invoke({"estimate", "--instance", "erdos-renyi:n=10,q=3"}).code == cli::kUsageError);

    auto ok = invoke({"verify"});
    CHECK(ok.code == cli::kOk);
    CHECK(ok.out.find("FAIL") == std::string::npos);
    auto bad = invoke({"verify", "--inject-fault"});
    CHECK(bad.code == cli::kVerificationFailed);
    CHECK(bad.out.find("FAIL") != std::string::npos);
    CHECK(bad.out.find("potential-increase") != std::string::npos);
}

TEST_CASE("estimate on the empty graph passes verification in every mode") {
    for (const char* mode : {"matrix", "list", "hybrid", "dichotomy", "plugin"}) {
        auto r = invoke(with_quick({"estimate", "--mode", mode, "--instance", "empty:n=40", "--verify"}));
        CHECK(r.code == cli::kOk);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["alpha"] == 0.0);
        CHECK(j["schema"] == 1);
    }
}

TEST_CASE("estimate writes a verified CSV row") {
    auto csv = scratch("est.csv");
    auto json = scratch("est.json");
    auto r = invoke(with_quick({"estimate", "--instance", "erdos-renyi:n=200,p=0.15", "--verify", "--csv", csv.string(),
                                "--json", json.string()}));
    CHECK(r.code == cli::kOk);
    CHECK(r.err.find("PASS interval") != std::string::npos);
    std::ifstream in(csv);
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    CHECK(header == "mode,n,m,eps,gamma,scale,seed,alpha,lower,upper,mu_exact,q_matrix,q_list,ops,ms");
    CHECK(row.rfind("matrix,200,", 0) == 0);
    CHECK(row.find(",100,") != std::string::npos);  // mu_exact
    std::ifstream jin(json);
    auto j = nlohmann::json::parse(jin);
    CHECK(j["verification"].size() >= 5);
}

TEST_CASE("dichotomy report carries a branch tag") {
    auto r = invoke(with_quick({"estimate", "--mode", "dichotomy", "--access", "list", "--instance",
                                "perfect-matching:n=60"}));
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    auto branch = j["dichotomy"]["branch"].get<std::string>();
    CHECK((branch == "witness" || branch == "value"));
}

TEST_CASE("sweep") {
    cli::RunConfig cfg;
    cfg.instance = "erdos-renyi:n=$n,p=0.1";
    cfg.pipeline.scale = 0.02;
    cfg.pipeline.estimator_scale = 1e-4;
    cfg.mode = Mode::List;
    cfg.sizes = {60};
    cfg.seeds = {2, 1};
    auto one = cli::run_sweep(cfg);
    CHECK(std::isnan(one.slope));
    REQUIRE(one.rows.size() == 2);
    CHECK(one.rows[0].seed == 1);

    cfg.sizes = {80, 40};
    auto two = cli::run_sweep(cfg);
    CHECK(two.rows.front().n == 40);
    CHECK(std::isfinite(two.slope));

    cfg.seeds.clear();
    CHECK_THROWS_AS(cli::run_sweep(cfg), UsageError);
    CHECK(invoke({"sweep", "--seeds", "", "--sizes", "40"}).code == cli::kUsageError);

    auto r = invoke(with_quick({"sweep", "--instance", "empty:n=$n", "--sizes", "30", "--seeds", "1"}));
    CHECK(r.code == 0);
    CHECK(r.err.find("slope nan") != std::string::npos);
}

TEST_CASE("log-log slope") {
    CHECK(cli::loglog_slope({{10, 100}, {100, 10000}}) == doctest::Approx(2.0));
    CHECK(cli::loglog_slope({{2, 8}, {4, 64}, {8, 512}}) == doctest::Approx(3.0));
    CHECK(std::isnan(cli::loglog_slope({{5, 1}, {5, 2}})));
}

TEST_CASE("generate round trip") {
    auto path = scratch("k4.txt");
    CHECK(invoke({"generate", "--instance", "complete:n=4", "--out", path.string()}).code == 0);
    auto g = load_graph(path.string());
    CHECK(g.n() == 4);
    CHECK(g.m() == 6);

    auto hidden = scratch("hidden.txt");
    CHECK(invoke({"generate", "--instance", "hidden-perfect-matching:n=20,eps=0.25", "--seed", "3", "--out",
                  hidden.string()})
              .code == 0);
    auto expected = generate(GeneratorSpec::parse("hidden-perfect-matching:n=20,eps=0.25"), Seed(3));
    auto loaded = load_graph(hidden.string());
    CHECK(loaded.n() == expected.n());
    CHECK(std::vector<Edge>(loaded.edges().begin(), loaded.edges().end()) ==
          std::vector<Edge>(expected.edges().begin(), expected.edges().end()));

    auto r = invoke({"generate", "--instance", "complete:n=4"});
    auto lines = std::count(r.out.begin(), r.out.end(), '\n');
    CHECK(lines == 7);  // header and six edges
}
