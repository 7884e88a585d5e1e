#include "tsc/sweep.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace tsc {

std::unique_ptr<Decoder> make_decoder(Family family, const std::string& algorithm,
                                      std::size_t size, std::size_t size2) {
    if (algorithm == "cubic-projection" || algorithm == "cubic-colored-matching") {
        CubicCode code = extract_cubic_code(build_family(family, size, size2));
        if (algorithm == "cubic-projection")
            return std::make_unique<CubicProjectionDecoder>(std::move(code));
        return std::make_unique<CubicColoredMatchingDecoder>(std::move(code));
    }
    if (algorithm == "tscc")
        return std::make_unique<TsccDecoder>(
            extract_tscc_code(build_family(family, size, size2)));
    if (algorithm == "five-squares")
        return std::make_unique<FiveSquaresDecoder>(extract_five_squares_code(
            five_squares_construction(build_family(family, size, size2))));
    if (algorithm == "subsystem-surface")
        return std::make_unique<SubsystemSurfaceDecoder>(extract_subsystem_surface_code(
            subsystem_surface_construction(build_family(family, size, size2))));
    throw Error("unknown decoding algorithm: " + algorithm);
}

std::vector<double> SweepConfig::p_grid() const {
    std::vector<double> out;
    for (double p = p_min; p <= p_max + 1e-12; p += p_step) out.push_back(p);
    return out;
}

bool run_trial(const Decoder& decoder, const NoiseModel& model, Rng& rng) {
    const auto& code = decoder.code();
    auto error = sample_error(model, code.n_qubits, rng);
    auto syndrome = code.measure_syndrome(error);
    auto outcome = decoder.decode(syndrome);
    return code.logical_failure(error, outcome.estimate);
}

std::size_t resolve_worker_count(std::size_t requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("TSC_WORKERS")) {
        auto v = std::strtoul(env, nullptr, 10);
        if (v > 0) return v;
    }
    auto hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

std::pair<double, double> wilson_interval(std::size_t failures, std::size_t trials) {
    if (trials == 0) return {0.0, 1.0};
    double z = 1.959963984540054;
    double n = double(trials), phat = double(failures) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (phat + z2 / (2 * n)) / denom;
    double half = z * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

SweepResult sweep(const SweepConfig& config, const SweepProgress& progress) {
    SweepResult result;
    result.config = config;
    auto grid = config.p_grid();
    std::size_t workers = resolve_worker_count(config.workers);

    for (auto size : config.sizes) {
        auto decoder = make_decoder(config.family, config.algorithm, size);
        const auto& code = decoder->code();
        for (std::size_t pi = 0; pi < grid.size(); ++pi) {
            NoiseModel model{grid[pi]};
            auto t0 = std::chrono::steady_clock::now();
            std::vector<std::size_t> fails(workers, 0);
            auto work = [&](std::size_t w) {
                std::size_t local = 0;
                for (std::size_t t = w; t < config.trials; t += workers) {
                    Rng rng(Rng::derive(config.seed, size, pi, t));
                    bool failed = run_trial(*decoder, model, rng);
                    if (failed) ++local;
                    if (t % 1000 == 0) {
                        // inline soundness audit: re-run the postcondition
                        Rng rng2(Rng::derive(config.seed, size, pi, t));
                        auto err = sample_error(model, code.n_qubits, rng2);
                        auto syn = code.measure_syndrome(err);
                        auto est = decoder->decode(syn).estimate;
                        if (!(code.measure_syndrome(est) == syn))
                            throw ContractViolation("sweep audit: decoder syndrome mismatch");
                    }
                }
                fails[w] = local;
            };
            if (workers == 1) {
                work(0);
            } else {
                std::vector<std::thread> pool;
                for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
                for (auto& th : pool) th.join();
            }
            std::size_t failures = 0;
            for (auto f : fails) failures += f;
            auto t1 = std::chrono::steady_clock::now();
            SweepRow row;
            row.family = family_name(config.family);
            row.lattice_size = size;
            row.n_qubits = code.n_qubits;
            row.p = grid[pi];
            row.trials = config.trials;
            row.failures = failures;
            row.failure_rate = config.trials ? double(failures) / double(config.trials) : 0.0;
            auto [lo, hi] = wilson_interval(failures, config.trials);
            row.wilson_95_low = lo;
            row.wilson_95_high = hi;
            row.seed = config.seed;
            row.wall_time = std::chrono::duration<double>(t1 - t0).count();
            if (progress) progress(row);
            result.rows.push_back(row);
        }
    }
    return result;
}

ThresholdEstimate estimate_threshold(const SweepResult& result) {
    return estimate_threshold(result.rows);
}

ThresholdEstimate estimate_threshold(const std::vector<SweepRow>& rows) {
    // group rows by size
    std::vector<std::size_t> sizes;
    for (const auto& r : rows)
        if (std::find(sizes.begin(), sizes.end(), r.lattice_size) == sizes.end())
            sizes.push_back(r.lattice_size);
    std::sort(sizes.begin(), sizes.end());
    if (sizes.size() < 2) return {};

    auto curve = [&](std::size_t size) {
        std::vector<std::pair<double, double>> pts;  // (p, rate)
        for (const auto& r : rows)
            if (r.lattice_size == size) pts.push_back({r.p, r.failure_rate});
        std::sort(pts.begin(), pts.end());
        return pts;
    };

    std::vector<std::array<double, 3>> crossings;  // (p, lo, hi)
    for (std::size_t a = 0; a < sizes.size(); ++a) {
        for (std::size_t b = a + 1; b < sizes.size(); ++b) {
            auto ca = curve(sizes[a]), cb = curve(sizes[b]);
            std::size_t m = std::min(ca.size(), cb.size());
            for (std::size_t i = 0; i + 1 < m; ++i) {
                // linear interpolation on log failure rates; skip zero rows
                if (ca[i].second <= 0 || cb[i].second <= 0 || ca[i + 1].second <= 0 ||
                    cb[i + 1].second <= 0)
                    continue;
                double d1 = std::log(ca[i].second) - std::log(cb[i].second);
                double d2 = std::log(ca[i + 1].second) - std::log(cb[i + 1].second);
                if (d1 == 0.0 && d2 == 0.0) continue;
                if ((d1 <= 0 && d2 > 0) || (d1 >= 0 && d2 < 0) || d1 == 0.0) {
                    double t = (d1 == d2) ? 0.5 : d1 / (d1 - d2);
                    double p = ca[i].first + t * (ca[i + 1].first - ca[i].first);
                    crossings.push_back({p, ca[i].first, ca[i + 1].first});
                }
            }
        }
    }
    if (crossings.empty()) return {};
    ThresholdEstimate est;
    est.found = true;
    double sum = 0, lo = crossings[0][1], hi = crossings[0][2];
    for (auto [p, l, h] : crossings) {
        sum += p;
        lo = std::min(lo, l);
        hi = std::max(hi, h);
    }
    est.p_cross = sum / double(crossings.size());
    est.bracket_low = lo;
    est.bracket_high = hi;
    return est;
}

std::string sweep_csv(const SweepResult& result) {
    std::ostringstream os;
    os << "family,lattice_size,n_qubits,p,trials,failures,failure_rate,wilson_95_low,"
          "wilson_95_high,seed\n";
    os.precision(10);
    for (const auto& r : result.rows) {
        os << r.family << ',' << r.lattice_size << ',' << r.n_qubits << ',' << r.p << ','
           << r.trials << ',' << r.failures << ',' << r.failure_rate << ',' << r.wilson_95_low
           << ',' << r.wilson_95_high << ',' << r.seed << '\n';
    }
    return os.str();
}

std::vector<SweepRow> sweep_rows_from_csv(const std::string& csv) {
    std::vector<SweepRow> rows;
    std::istringstream in(csv);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            continue;
        }
        SweepRow r;
        std::istringstream ls(line);
        std::string tok;
        auto next = [&]() {
            if (!std::getline(ls, tok, ',')) throw Error("bad sweep CSV row: " + line);
            return tok;
        };
        r.family = next();
        r.lattice_size = std::stoul(next());
        r.n_qubits = std::stoul(next());
        r.p = std::stod(next());
        r.trials = std::stoul(next());
        r.failures = std::stoul(next());
        r.failure_rate = std::stod(next());
        r.wilson_95_low = std::stod(next());
        r.wilson_95_high = std::stod(next());
        r.seed = std::stoull(next());
        rows.push_back(r);
    }
    return rows;
}

}  // namespace tsc
