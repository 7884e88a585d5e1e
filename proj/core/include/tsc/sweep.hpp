#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "tsc/decoders.hpp"
#include "tsc/noise.hpp"

namespace tsc {

/* Decoder factory shared by the simulation harness and the CLI. Supported
 * pairs: honeycomb + cubic-projection / cubic-colored-matching,
 * square-octagon + tscc, triangular + five-squares,
 * square or rotated-surface + subsystem-surface. */
std::unique_ptr<Decoder> make_decoder(Family family, const std::string& algorithm,
                                      std::size_t size, std::size_t size2 = 0);

struct SweepConfig {
    Family family = Family::square_octagon_torus;
    std::string algorithm = "tscc";
    std::vector<std::size_t> sizes = {2, 4};
    double p_min = 0.005;
    double p_max = 0.0275;
    double p_step = 0.0025;
    std::size_t trials = 2000;
    std::uint64_t seed = 1;
    std::size_t workers = 0;  // 0 = TSC_WORKERS env or hardware concurrency

    std::vector<double> p_grid() const;
};

struct SweepRow {
    std::string family;
    std::size_t lattice_size = 0;
    std::size_t n_qubits = 0;
    double p = 0.0;
    std::size_t trials = 0;
    std::size_t failures = 0;
    double failure_rate = 0.0;
    double wilson_95_low = 0.0;
    double wilson_95_high = 0.0;
    std::uint64_t seed = 0;
    double wall_time = 0.0;  // seconds; lands in the manifest, not the CSV
};

struct SweepResult {
    SweepConfig config;
    std::vector<SweepRow> rows;
};

/* One decoding trial: sample, measure, decode, compare against the bare
 * logical operators. Returns true on a logical failure. */
bool run_trial(const Decoder& decoder, const NoiseModel& model, Rng& rng);

using SweepProgress = std::function<void(const SweepRow&)>;
SweepResult sweep(const SweepConfig& config, const SweepProgress& progress = nullptr);

/* Wilson 95% interval. */
std::pair<double, double> wilson_interval(std::size_t failures, std::size_t trials);

struct ThresholdEstimate {
    bool found = false;
    double p_cross = 0.0;
    double bracket_low = 0.0;
    double bracket_high = 0.0;
};
/* Pairwise curve crossings via linear interpolation on log failure rate. */
ThresholdEstimate estimate_threshold(const SweepResult& result);
ThresholdEstimate estimate_threshold(const std::vector<SweepRow>& rows);

std::string sweep_csv(const SweepResult& result);
std::vector<SweepRow> sweep_rows_from_csv(const std::string& csv);

std::size_t resolve_worker_count(std::size_t requested);

}  // namespace tsc
