#include <doctest.h>

#include <cmath>

#include "tsc/sweep.hpp"

using namespace tsc;

TEST_CASE("depolarizing sampler edge rates") {
    Rng rng(1);
    CHECK(sample_error(NoiseModel{0.0}, 50, rng).is_identity());
    CHECK(sample_error(NoiseModel{1.0}, 50, rng).weight() == 50);
    CHECK_THROWS_AS(sample_error(NoiseModel{1.5}, 10, rng), Error);
}

TEST_CASE("depolarizing sampler marginal frequency") {
    double p = 0.13;
    std::size_t n = 40, samples = 2500;  // 1e5 qubit draws
    Rng rng(42);
    std::size_t hits = 0, ycount = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        auto e = sample_error(NoiseModel{p}, n, rng);
        hits += e.weight();
        for (std::size_t q = 0; q < n; ++q)
            if (e.x(q) && e.z(q)) ++ycount;
    }
    double total = double(n * samples);
    double sigma = std::sqrt(p * (1 - p) / total);
    CHECK(std::abs(double(hits) / total - p) < 3 * sigma);
    // each Pauli appears with rate p/3
    double sigy = std::sqrt((p / 3) * (1 - p / 3) / total);
    CHECK(std::abs(double(ycount) / total - p / 3) < 3 * sigy);
}

TEST_CASE("run_trial never fails at p = 0") {
    auto dec = make_decoder(Family::square_octagon_torus, "tscc", 1);
    Rng rng(7);
    for (int t = 0; t < 20; ++t) CHECK_FALSE(run_trial(*dec, NoiseModel{0.0}, rng));
}

TEST_CASE("sweep is deterministic and worker-count independent") {
    SweepConfig cfg;
    cfg.family = Family::square_octagon_torus;
    cfg.algorithm = "tscc";
    cfg.sizes = {1};
    cfg.p_min = 0.02;
    cfg.p_max = 0.03;
    cfg.p_step = 0.01;
    cfg.trials = 60;
    cfg.seed = 99;
    cfg.workers = 1;
    auto a = sweep(cfg);
    cfg.workers = 4;
    auto b = sweep(cfg);
    REQUIRE(a.rows.size() == b.rows.size());
    CHECK(sweep_csv(a) == sweep_csv(b));
    // p = 0 row has exactly zero failures
    cfg.p_min = cfg.p_max = 0.0;
    auto z = sweep(cfg);
    CHECK(z.rows.at(0).failures == 0);
}

TEST_CASE("csv round trip") {
    SweepConfig cfg;
    cfg.family = Family::square_octagon_torus;
    cfg.algorithm = "tscc";
    cfg.sizes = {1};
    cfg.p_min = 0.02;
    cfg.p_max = 0.02;
    cfg.trials = 30;
    cfg.seed = 5;
    auto res = sweep(cfg);
    auto rows = sweep_rows_from_csv(sweep_csv(res));
    REQUIRE(rows.size() == res.rows.size());
    CHECK(rows[0].failures == res.rows[0].failures);
    CHECK(rows[0].n_qubits == res.rows[0].n_qubits);
    CHECK(rows[0].p == doctest::Approx(res.rows[0].p));
}

TEST_CASE("wilson interval brackets the point estimate") {
    for (auto [f, n] : {std::pair{0ul, 100ul}, {3ul, 100ul}, {50ul, 100ul}, {100ul, 100ul}}) {
        auto [lo, hi] = wilson_interval(f, n);
        double rate = double(f) / double(n);
        CHECK(lo <= rate + 1e-12);
        CHECK(hi >= rate - 1e-12);
        CHECK(lo >= 0.0);
        CHECK(hi <= 1.0);
    }
}

TEST_CASE("threshold estimation on synthetic curves") {
    // two curves crossing exactly at p = 0.02
    std::vector<SweepRow> rows;
    for (double p : {0.01, 0.02, 0.03}) {
        SweepRow a;
        a.lattice_size = 2;
        a.p = p;
        a.failure_rate = 0.1 + (p - 0.02) * 2.0;  // slope 2
        rows.push_back(a);
        SweepRow b;
        b.lattice_size = 4;
        b.p = p;
        b.failure_rate = 0.1 + (p - 0.02) * 6.0;  // slope 6, crosses at 0.02
        rows.push_back(b);
    }
    auto est = estimate_threshold(rows);
    REQUIRE(est.found);
    CHECK(est.p_cross == doctest::Approx(0.02).epsilon(0.01));
    CHECK(est.bracket_low <= est.p_cross);
    CHECK(est.bracket_high >= est.p_cross);

    // monotone non-crossing curves -> no crossing
    std::vector<SweepRow> mono;
    for (double p : {0.01, 0.02, 0.03}) {
        SweepRow a;
        a.lattice_size = 2;
        a.p = p;
        a.failure_rate = 0.2 + p;
        mono.push_back(a);
        SweepRow b;
        b.lattice_size = 4;
        b.p = p;
        b.failure_rate = 0.05 + p;
        mono.push_back(b);
    }
    CHECK_FALSE(estimate_threshold(mono).found);
}

TEST_CASE("failure rate grows with p (within interval slack)") {
    SweepConfig cfg;
    cfg.family = Family::square_octagon_torus;
    cfg.algorithm = "tscc";
    cfg.sizes = {1};
    cfg.p_min = 0.005;
    cfg.p_max = 0.045;
    cfg.p_step = 0.02;
    cfg.trials = 300;
    cfg.seed = 17;
    auto res = sweep(cfg);
    REQUIRE(res.rows.size() == 3);
    for (std::size_t i = 0; i + 1 < res.rows.size(); ++i)
        CHECK(res.rows[i + 1].wilson_95_high >=
              res.rows[i].wilson_95_low - (res.rows[i].wilson_95_high - res.rows[i].wilson_95_low));
}

TEST_CASE("decoder factory rejects unknown algorithms") {
    CHECK_THROWS_AS(make_decoder(Family::square_torus, "nope", 2), Error);
}
