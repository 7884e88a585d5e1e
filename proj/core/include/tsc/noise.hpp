#pragma once

#include <cstdint>

#include "tsc/pauli.hpp"

namespace tsc {

/* Counter-derived PRNG: SplitMix64 streams keyed by hashing the run seed
 * with the lattice size, grid index and trial index, so results never depend
 * on the worker count or on scheduling. */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double next_double() { return double(next() >> 11) * 0x1.0p-53; }

    static std::uint64_t mix(std::uint64_t x) {
        Rng r(x);
        return r.next();
    }
    static std::uint64_t derive(std::uint64_t base, std::uint64_t a, std::uint64_t b,
                                std::uint64_t c) {
        return mix(mix(mix(mix(base) ^ a) ^ b) ^ c);
    }

  private:
    std::uint64_t state_;
};

struct NoiseModel {
    double p = 0.0;  // depolarizing: X, Y, Z each with probability p/3
};

/* i.i.d. per qubit: identity with probability 1-p, else uniform over XYZ. */
PauliOperator sample_error(const NoiseModel& model, std::size_t n, Rng& rng);

}  // namespace tsc
