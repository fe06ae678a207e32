#include "coinqubit/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "coinqubit/json_io.hpp"
#include "coinqubit/malevich.hpp"
#include "coinqubit/superposition.hpp"
#include "coinqubit/tomography.hpp"
#include "test_support.hpp"

using namespace coinqubit;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::filesystem::path scratch(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("coinqubit_cli_test_" + name);
}

}  // namespace

TEST(Cli, CheckClassical) {
    const auto r = invoke({"check", "--p1", "1", "--p2", "1", "--p3", "1"});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(r.out, "{\"class\":\"classical\",\"radius2\":0.75}\n");
}

TEST(Cli, CheckFromInlineState) {
    const auto r = invoke({"check", "--state", R"({"kind":"coin-state","p1":0.5,"p2":0.5,"p3":1})"});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(r.out, "{\"class\":\"pure\",\"radius2\":0.25}\n");
}

TEST(Cli, StateFromFile) {
    const auto path = scratch("state.json");
    std::ofstream(path) << R"({"kind":"coin-state","p1":0.6,"p2":0.7,"p3":0.8})";
    const auto r = invoke({"purity", "--state", path.string()});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(Json::parse(r.out).at("purity").get<double>(), purity({0.6, 0.7, 0.8}));
    std::filesystem::remove(path);
}

TEST(Cli, Fidelity) {
    const auto r = invoke({"fidelity", "--state1", R"({"p1":0.5,"p2":0.5,"p3":1})", "--state2",
                           R"({"p1":1,"p2":0.5,"p3":0.5})"});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(r.out, "{\"fidelity\":0.5}\n");
}

TEST(Cli, SuperposeBasisFixture) {
    const auto r = invoke({"superpose", "--state1", R"({"p1":0.5,"p2":0.5,"p3":1})", "--state2",
                           R"({"p1":0.5,"p2":0.5,"p3":0})", "--weights", R"({"p1":1,"p2":0.5,"p3":0.5})"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    const Json j = Json::parse(r.out);
    EXPECT_EQ(coin_state_from_json(j.at("result")), ProbabilityTriple(1.0, 0.5, 0.5));
    EXPECT_EQ(j.at("paths_agree"), true);
    EXPECT_EQ(j.at("fallback_used"), true);
    EXPECT_NEAR(j.at("normalization").get<double>(), 1.0, 1e-15);
}

TEST(Cli, SuperposeMatchesLibraryBitForBit) {
    const ProbabilityTriple p = coinqubit::testing::pure_from_angles(1.1, 0.4).triple;
    const ProbabilityTriple q = coinqubit::testing::pure_from_angles(2.0, 2.5).triple;
    const ProbabilityTriple w{1.0, 0.5, 0.5};
    const auto r = invoke({"superpose", "--state1", dump(coin_state_json(p)), "--state2",
                           dump(coin_state_json(q)), "--weights", dump(coin_state_json(w))});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    const auto expected = superpose_general(p, q, SuperpositionWeights(w));
    const Json j = Json::parse(r.out);
    EXPECT_EQ(coin_state_from_json(j.at("result")), expected.state);
    EXPECT_EQ(j.at("normalization").get<double>(), expected.normalization);
    EXPECT_EQ(j.at("paths_agree"), true);
    EXPECT_EQ(j.at("fallback_used"), false);
}

TEST(Cli, DomainErrorsExitTwoWithJson) {
    const auto r = invoke({"purity", "--p1", "1", "--p2", "1", "--p3", "1"});
    EXPECT_EQ(r.code, cli::kExitDomain);
    EXPECT_TRUE(r.out.empty());
    const Json j = Json::parse(r.err);
    EXPECT_EQ(j.at("error").at("code"), "classical_state");
    EXPECT_TRUE(j.at("error").at("message").is_string());

    const auto range = invoke({"check", "--p1", "1.5", "--p2", "0.5", "--p3", "0.5"});
    EXPECT_EQ(range.code, cli::kExitDomain);
    EXPECT_EQ(Json::parse(range.err).at("error").at("code"), "out_of_range");

    const auto degenerate =
        invoke({"superpose", "--state1", R"({"p1":0.5,"p2":0.5,"p3":1})", "--state2",
                R"({"p1":0.5,"p2":0.5,"p3":1})", "--weights", R"({"p1":0,"p2":0.5,"p3":0.5})"});
    EXPECT_EQ(degenerate.code, cli::kExitDomain);
    EXPECT_EQ(Json::parse(degenerate.err).at("error").at("code"), "degenerate_superposition");
}

TEST(Cli, UsageErrorsExitOne) {
    EXPECT_EQ(invoke({}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"frobnicate"}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"check", "--p1", "0.5", "--bogus", "1"}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"check", "--p1", "0.5"}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"check", "--p1", "abc", "--p2", "0.5", "--p3", "0.5"}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"check", "--state", "{not json"}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"check", "--state", "/nonexistent/state.json"}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"render", "--p1", "1", "--p2", "1", "--p3", "1", "--scale", "0"}).code,
              cli::kExitUsage);
    EXPECT_EQ(invoke({"sample", "--p1", "0.5", "--p2", "0.5", "--p3", "0.5", "--n", "0"}).code,
              cli::kExitUsage);
    EXPECT_EQ(invoke({"partner", "--p1", "0.5", "--p2", "0.5", "--p3", "1", "--sign", "x"}).code,
              cli::kExitUsage);
}

TEST(Cli, HelpExitsZero) {
    const auto r = invoke({"--help"});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_NE(r.out.find("superpose"), std::string::npos);
}

TEST(Cli, Partner) {
    const auto r = invoke({"partner", "--p1", "1", "--p2", "0.5", "--p3", "0.5", "--sign", "-"});
    ASSERT_EQ(r.code, cli::kExitOk);
    EXPECT_LT(coinqubit::testing::max_abs_diff(coin_state_from_json(Json::parse(r.out)), {0.0, 0.5, 0.5}),
              1e-15);
}

TEST(Cli, Triada) {
    const auto r = invoke({"triada", "--p1", "0.5", "--p2", "0.5", "--p3", "1"});
    ASSERT_EQ(r.code, cli::kExitOk);
    const Json j = Json::parse(r.out);
    const auto t = triada_sides({0.5, 0.5, 1.0});
    EXPECT_EQ(j.at("L1").get<double>(), t.l1());
    EXPECT_EQ(j.at("L2").get<double>(), t.l2());
    EXPECT_EQ(j.at("L3").get<double>(), t.l3());
}

TEST(Cli, RenderMatchesGolden) {
    const std::string golden = read_file(COINQUBIT_TEST_DATA_DIR "/triada_half_labels.svg");
    const auto r = invoke({"render", "--p1", "0.5", "--p2", "0.5", "--p3", "0.5", "--labels"});
    ASSERT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(r.out, golden);

    const auto path = scratch("triada.svg");
    const auto to_file = invoke({"render", "--p1", "0.5", "--p2", "0.5", "--p3", "0.5", "--labels",
                                 "--out", path.string()});
    ASSERT_EQ(to_file.code, cli::kExitOk);
    EXPECT_TRUE(to_file.out.empty());
    EXPECT_EQ(read_file(path), golden);
    std::filesystem::remove(path);
}

TEST(Cli, SampleWithExplicitSeed) {
    const auto csv = scratch("flips.csv");
    const auto r = invoke({"sample", "--p1", "0.7", "--p2", "0.5", "--p3", "0.5", "--n", "1000",
                           "--seed", "42", "--flips", csv.string()});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    const Json j = Json::parse(r.out);
    const auto flips = sample_flips({0.7, 0.5, 0.5}, 1000, 42);
    const auto report = estimate(flips, 42);
    EXPECT_EQ(coin_state_from_json(j.at("estimate")), report.estimate);
    EXPECT_EQ(j.at("seed").get<std::uint64_t>(), 42u);
    EXPECT_EQ(j.at("counts").get<std::vector<std::uint64_t>>(), std::vector<std::uint64_t>(3, 1000));
    EXPECT_EQ(j.at("reconstruction").at("purity").get<double>(), reconstruct(report).purity);

    std::ostringstream expected_csv;
    write_flips_csv(expected_csv, flips);
    EXPECT_EQ(read_file(csv), expected_csv.str());
    std::filesystem::remove(csv);
}

TEST(Cli, SampleSeedFromEnvironment) {
    ::setenv("COIN_QUBIT_SEED", "77", 1);
    const auto r = invoke({"sample", "--p1", "0.5", "--p2", "0.5", "--p3", "0.5", "--n", "100"});
    ::setenv("COIN_QUBIT_SEED", "not-a-number", 1);
    const auto bad = invoke({"sample", "--p1", "0.5", "--p2", "0.5", "--p3", "0.5", "--n", "100"});
    ::unsetenv("COIN_QUBIT_SEED");
    const auto fallback = invoke({"sample", "--p1", "0.5", "--p2", "0.5", "--p3", "0.5", "--n", "100"});

    ASSERT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(Json::parse(r.out).at("seed").get<std::uint64_t>(), 77u);
    EXPECT_EQ(coin_state_from_json(Json::parse(r.out).at("estimate")),
              estimate(sample_flips({0.5, 0.5, 0.5}, 100, 77), 77).estimate);
    EXPECT_EQ(bad.code, cli::kExitUsage);
    ASSERT_EQ(fallback.code, cli::kExitOk);
    EXPECT_EQ(Json::parse(fallback.out).at("seed").get<std::uint64_t>(), 0u);
}

TEST(Cli, ConvertState) {
    const auto r = invoke({"convert", "--p1", "1", "--p2", "0.5", "--p3", "0.5"});
    ASSERT_EQ(r.code, cli::kExitOk);
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j.at("class"), "pure");
    EXPECT_EQ(j.at("positive"), true);
    EXPECT_EQ(j.at("density").at("re"), Json::parse("[[0.5,0.5],[0.5,0.5]]"));
    EXPECT_NEAR(j.at("spinor").at("amplitude0").get<double>(), std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(j.at("complex").at("re").get<double>(), std::sqrt(0.5), 1e-15);

    const auto mixed = invoke({"convert", "--p1", "0.5", "--p2", "0.5", "--p3", "0.5"});
    ASSERT_EQ(mixed.code, cli::kExitOk);
    EXPECT_FALSE(Json::parse(mixed.out).contains("spinor"));

    const auto classical = invoke({"convert", "--p1", "1", "--p2", "1", "--p3", "1"});
    ASSERT_EQ(classical.code, cli::kExitOk);
    EXPECT_EQ(Json::parse(classical.out).at("positive"), false);
}

TEST(Cli, ConvertBack) {
    const auto d = invoke({"convert", "--density", R"({"re":[[0.5,0],[0,0.5]],"im":[[0,-0.5],[0.5,0]]})"});
    ASSERT_EQ(d.code, cli::kExitOk) << d.err;
    EXPECT_EQ(coin_state_from_json(Json::parse(d.out)), ProbabilityTriple(0.5, 1.0, 0.5));

    const auto z = invoke({"convert", "--re", "0", "--im", "0"});
    ASSERT_EQ(z.code, cli::kExitOk);
    EXPECT_EQ(coin_state_from_json(Json::parse(z.out)).p3(), 0.0);

    EXPECT_EQ(invoke({"convert", "--re", "2"}).code, cli::kExitDomain);
    EXPECT_EQ(invoke({"convert", "--density", R"({"re":[[0.5,0.2],[0.1,0.5]]})"}).code,
              cli::kExitDomain);
}

TEST(Cli, Mean) {
    const auto r = invoke({"mean", "--p1", "0.6", "--p2", "0.7", "--p3", "0.8", "--x", "1", "--y", "2",
                           "--z1", "3", "--z2", "-1"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    const Json j = Json::parse(r.out);
    EXPECT_NEAR(j.at("quantum").get<double>(), 3.2, 1e-14);
    EXPECT_NEAR(j.at("classical").at("sum").get<double>(), 3.2, 1e-14);
    EXPECT_NEAR(j.at("second_moments").at("Z2").get<double>(), 7.4, 1e-14);

    const auto obs = invoke({"mean", "--p1", "0.6", "--p2", "0.7", "--p3", "0.8", "--obs",
                             R"({"x":1,"y":2,"z1":3,"z2":-1})"});
    ASSERT_EQ(obs.code, cli::kExitOk);
    EXPECT_EQ(obs.out, r.out);
    EXPECT_EQ(invoke({"mean", "--p1", "0.6", "--p2", "0.7", "--p3", "0.8", "--obs", "{}", "--x", "1"}).code,
              cli::kExitUsage);
}
