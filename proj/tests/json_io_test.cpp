#include "coinqubit/json_io.hpp"

#include <random>

#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "test_support.hpp"

using namespace coinqubit;
using coinqubit::testing::code_of;

TEST(Dump, SeventeenSignificantDigits) {
    EXPECT_EQ(dump(Json(0.1)), "0.10000000000000001");
    EXPECT_EQ(dump(Json(0.75)), "0.75");
    EXPECT_EQ(dump(Json(1.0)), "1");
    EXPECT_EQ(dump(Json::parse(R"({"a":[1,2.5],"b":"s","c":true})")),
              R"({"a":[1,2.5],"b":"s","c":true})");
}

TEST(Dump, RoundTripsDoublesExactly) {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int i = 0; i < 1000; ++i) {
        const double v = u(rng);
        ASSERT_EQ(Json::parse(dump(Json(v))).get<double>(), v);
    }
}

TEST(CoinState, RoundTrip) {
    const ProbabilityTriple p{0.1, 0.25, 1.0 / 3.0};
    const Json j = coin_state_json(p);
    EXPECT_EQ(j.at("kind"), "coin-state");
    EXPECT_EQ(coin_state_from_json(Json::parse(dump(j))), p);
    EXPECT_EQ(dump(j).rfind(R"({"kind":"coin-state","p1":0.10000000000000001,)", 0), 0u);
}

TEST(CoinState, KindIsOptionalButChecked) {
    EXPECT_EQ(coin_state_from_json(Json::parse(R"({"p1":0.5,"p2":0.5,"p3":1})")),
              ProbabilityTriple(0.5, 0.5, 1.0));
    EXPECT_EQ(code_of([] { coin_state_from_json(Json::parse(R"({"kind":"x","p1":0.5,"p2":0.5,"p3":1})")); }),
              ErrorCode::invalid_argument);
    EXPECT_EQ(code_of([] { coin_state_from_json(Json::parse(R"({"p1":0.5,"p2":0.5})")); }),
              ErrorCode::invalid_argument);
    EXPECT_EQ(code_of([] { coin_state_from_json(Json::parse(R"({"p1":"a","p2":0.5,"p3":1})")); }),
              ErrorCode::invalid_argument);
    EXPECT_EQ(code_of([] { coin_state_from_json(Json::parse("[1,2,3]")); }),
              ErrorCode::invalid_argument);
    EXPECT_EQ(code_of([] { coin_state_from_json(Json::parse(R"({"p1":1.5,"p2":0.5,"p3":1})")); }),
              ErrorCode::out_of_range);
}

TEST(Observable, MissingMembersDefaultToZero) {
    const auto o = observable_from_json(Json::parse(R"({"x":1,"z2":-1})"));
    EXPECT_EQ(o.x, 1.0);
    EXPECT_EQ(o.y, 0.0);
    EXPECT_EQ(o.z1, 0.0);
    EXPECT_EQ(o.z2, -1.0);
    EXPECT_EQ(code_of([] { observable_from_json(Json::parse(R"({"x":"1"})")); }),
              ErrorCode::invalid_argument);
}

TEST(Density, RoundTrip) {
    std::mt19937_64 rng(62);
    for (int i = 0; i < 500; ++i) {
        const auto p = coinqubit::testing::random_quantum(rng);
        const auto rho = prob_to_density(p);
        const auto back = density_from_json(Json::parse(dump(density_json(rho))));
        ASSERT_LT(coinqubit::testing::max_abs_diff(density_to_prob(back), p), 1e-15);
    }
}

TEST(Density, ImaginaryPartOptional) {
    const auto rho = density_from_json(Json::parse(R"({"re":[[0.5,0.5],[0.5,0.5]]})"));
    EXPECT_EQ(density_to_prob(rho), ProbabilityTriple(1.0, 0.5, 0.5));
}

TEST(Density, Errors) {
    EXPECT_EQ(code_of([] { density_from_json(Json::parse(R"({"re":[[1,0]]})")); }),
              ErrorCode::invalid_argument);
    EXPECT_EQ(code_of([] { density_from_json(Json::parse(R"({"im":[[0,0],[0,0]]})")); }),
              ErrorCode::invalid_argument);
    EXPECT_EQ(code_of([] { density_from_json(Json::parse(R"({"re":[[0.5,0.2],[0.1,0.5]]})")); }),
              ErrorCode::not_hermitian);
    EXPECT_EQ(code_of([] { density_from_json(Json::parse(R"({"re":[[0.6,0],[0,0.6]]})")); }),
              ErrorCode::trace_not_one);
}
