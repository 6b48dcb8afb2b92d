#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <vector>

#include "hedgenash/hedge.hpp"
#include "hedgenash/rng.hpp"
#include "hedgenash/schedule.hpp"
#include "test_helpers.hpp"

using namespace hedgenash;
using hedgenash::testing::identity2;
using hedgenash::testing::random_game;
using hedgenash::testing::rps01;

TEST_CASE("hedge_step fixes uniform play on the cyclic game") {
    const SymmetricGame rps = rps01();
    for (double alpha : {0.01, 0.5, 2.0, 50.0}) {
        const MixedStrategy next = hedge_step(rps, MixedStrategy::uniform(3), alpha);
        for (int i = 0; i < 3; ++i) CHECK(next[i] == doctest::Approx(1.0 / 3).epsilon(1e-14));
    }
}

TEST_CASE("hedge_step matches the closed-form two-strategy update") {
    // With alpha = 2 ln 2 the winning strategy's weight doubles.
    const SymmetricGame g(2, {1.0, 0.0, 0.0, 0.0});
    const MixedStrategy next = hedge_step(g, MixedStrategy::uniform(2), 2.0 * std::log(2.0));
    CHECK(next[0] == doctest::Approx(2.0 / 3).epsilon(1e-14));
    CHECK(next[1] == doctest::Approx(1.0 / 3).epsilon(1e-14));
}

TEST_CASE("hedge_step approaches the identity as the rate vanishes") {
    Rng rng(3);
    const SymmetricGame game = random_game(4, 17);
    const MixedStrategy x = random_interior_strategy(4, rng);
    const MixedStrategy next = hedge_step(game, x, 1e-12);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(next[i] - x[i]) <= 1e-9);
}

TEST_CASE("hedge_step validates its inputs") {
    const SymmetricGame game = random_game(3, 1);
    CHECK_THROWS_AS(hedge_step(game, MixedStrategy::pure(3, 0), 0.1), std::invalid_argument);
    CHECK_THROWS_AS(hedge_step(game, MixedStrategy::uniform(3), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(hedge_step(game, MixedStrategy::uniform(3), -1.0), std::invalid_argument);
    CHECK_THROWS_AS(hedge_step(game, MixedStrategy::uniform(4), 0.1), std::invalid_argument);
}

TEST_CASE("advance tracks the average recursion and the score view") {
    const SymmetricGame game = random_game(4, 23);
    HedgeState state(game, 0.3);

    const std::vector<double> x0 = state.iterate_masses();
    state.advance(game);
    const std::vector<double> x1 = state.iterate_masses();
    for (int i = 0; i < 4; ++i) {
        CHECK(state.average_masses()[static_cast<size_t>(i)] ==
              doctest::Approx((x0[static_cast<size_t>(i)] + x1[static_cast<size_t>(i)]) / 2.0)
                  .epsilon(1e-15));
    }

    // 100 more steps: the recursive average equals the stored-iterate mean.
    std::vector<std::vector<double>> iterates{x0, x1};
    for (int k = 0; k < 100; ++k) {
        state.advance(game);
        iterates.push_back(state.iterate_masses());
    }
    for (int i = 0; i < 4; ++i) {
        double mean = 0.0;
        for (const auto& it : iterates) mean += it[static_cast<size_t>(i)];
        mean /= static_cast<double>(iterates.size());
        CHECK(std::abs(state.average_masses()[static_cast<size_t>(i)] - mean) <= 1e-12);
    }
}

TEST_CASE("the cyclic game stays at the uniform fixed point") {
    const SymmetricGame rps = rps01();
    HedgeState state(rps, 0.25);
    for (int k = 0; k < 300; ++k) {
        state.advance(rps);
        for (int i = 0; i < 3; ++i) {
            CHECK(state.iterate_masses()[static_cast<size_t>(i)] ==
                  doctest::Approx(1.0 / 3).epsilon(1e-13));
            CHECK(state.average_masses()[static_cast<size_t>(i)] ==
                  doctest::Approx(1.0 / 3).epsilon(1e-13));
        }
    }
}

TEST_CASE("score-based iterates equal the directly iterated map") {
    Rng rng(9);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const int n = 3 + static_cast<int>(seed);
        const SymmetricGame game = random_game(n, 100 + seed);
        const double alpha = 0.1 + 0.2 * static_cast<double>(seed);

        HedgeState state(game, alpha);
        MixedStrategy direct = MixedStrategy::uniform(n);
        for (int k = 0; k < 1000; ++k) {
            state.advance(game);
            direct = hedge_step(game, direct, alpha);
        }
        for (int i = 0; i < n; ++i) {
            CHECK(std::abs(state.iterate_masses()[static_cast<size_t>(i)] - direct[i]) <= 1e-10);
        }
    }
}

TEST_CASE("iterates and averages stay on the simplex with bounded scores") {
    const SymmetricGame game = random_game(5, 31);
    HedgeState state(game, 0.4);
    for (int k = 1; k <= 500; ++k) {
        state.advance(game);
        double sum_it = 0.0, sum_avg = 0.0;
        for (int i = 0; i < 5; ++i) {
            CHECK(state.iterate_masses()[static_cast<size_t>(i)] >= 0.0);
            CHECK(state.average_masses()[static_cast<size_t>(i)] >= 0.0);
            sum_it += state.iterate_masses()[static_cast<size_t>(i)];
            sum_avg += state.average_masses()[static_cast<size_t>(i)];
            CHECK(state.scores()[static_cast<size_t>(i)] >= 0.0);
            CHECK(state.scores()[static_cast<size_t>(i)] <= static_cast<double>(k));
        }
        CHECK(std::abs(sum_it - 1.0) <= 1e-12);
        CHECK(std::abs(sum_avg - 1.0) <= 1e-12);
    }
}

TEST_CASE("per-step log drop is bounded by alpha e^alpha") {
    const double alpha = 0.5;
    const double drop = alpha * std::exp(alpha);
    for (std::uint64_t seed : {11ull, 12ull}) {
        const SymmetricGame game = random_game(4, seed);
        HedgeState state(game, alpha);
        std::vector<double> prev = state.log_iterate();
        for (int k = 0; k < 400; ++k) {
            state.advance(game);
            for (int i = 0; i < 4; ++i) {
                CHECK(state.log_iterate()[static_cast<size_t>(i)] >=
                      prev[static_cast<size_t>(i)] - drop - 1e-12);
            }
            prev = state.log_iterate();
        }
    }
}

TEST_CASE("log_iterate stays usable after masses underflow") {
    // Strategy 1 loses by a full payoff unit every step; its mass underflows
    // near k ~ 700/alpha but the log view keeps the exact linear decay.
    const SymmetricGame g(2, {1.0, 1.0, 0.0, 0.0});
    HedgeState state(g, 1.0);
    for (int k = 0; k < 800; ++k) state.advance(g);
    CHECK(state.iterate_masses()[1] == 0.0);  // underflowed
    CHECK(state.log_iterate()[1] == doctest::Approx(-800.0).epsilon(1e-9));
    CHECK(state.log_iterate()[0] == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("run_trajectory on the cyclic game reports zero error throughout") {
    const auto records = run_trajectory(rps01(), 0.1, 1000);
    REQUIRE(records.size() == 1001);
    for (const TrajectoryRecord& r : records) {
        CHECK(r.eps_average <= 1e-15);
        CHECK(r.eps_iterate <= 1e-15);
        CHECK(std::abs(r.regret_avg) <= 1e-15);
    }
}

TEST_CASE("run_trajectory row counts follow the stride contract") {
    const SymmetricGame game = random_game(3, 5);
    CHECK(run_trajectory(game, 0.1, 1000, 7).size() ==
          static_cast<size_t>((1000 + 6) / 7) + 1);
    CHECK(run_trajectory(game, 0.1, 1000, 1).size() == 1001);
    CHECK(run_trajectory(game, 0.1, 0).size() == 1);
    // Default stride keeps roughly a thousand records.
    CHECK(run_trajectory(game, 0.1, 5000).size() == 1001);
    CHECK(default_observe_stride(5000) == 5);
}

TEST_CASE("zero-sum runs meet the classical average bound") {
    const SymmetricGame game = generate(GeneratorSpec{Family::symmetric_zero_sum, 5, 7});
    const auto records = run_trajectory(game, 0.05, 10000);
    const TrajectoryRecord& last = records.back();
    const double bound = std::log(5.0) / (0.05 * 10001.0) + std::expm1(0.05);
    CHECK(last.eps_average <= bound);
}

TEST_CASE("coordination game sits at the mixed fixed point from uniform start") {
    // Regression pin: the uniform start is an exact fixed point, so the
    // reported error is exactly zero.
    const auto records = run_trajectory(identity2(), 0.1, 10000);
    CHECK(records.back().eps_average == 0.0);
    CHECK(records.back().eps_iterate == 0.0);
}

TEST_CASE("trajectories are deterministic") {
    const SymmetricGame game = random_game(4, 77);
    const auto a = run_trajectory(game, 0.2, 500, 13);
    const auto b = run_trajectory(game, 0.2, 500, 13);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].k == b[i].k);
        CHECK(a[i].eps_average == b[i].eps_average);
        CHECK(a[i].eps_iterate == b[i].eps_iterate);
        CHECK(a[i].regret_avg == b[i].regret_avg);
    }
}

TEST_CASE("custom interior starts are accepted and boundary starts rejected") {
    const SymmetricGame game = random_game(3, 2);
    const MixedStrategy start({0.8, 0.1, 0.1});
    const auto records = run_trajectory(game, 0.1, 50, 1, start);
    CHECK(records.size() == 51);
    CHECK_THROWS_AS(HedgeState(game, 0.1, MixedStrategy::pure(3, 1)), std::invalid_argument);
    CHECK_THROWS_AS(run_trajectory(game, 0.1, -1), std::invalid_argument);
}
