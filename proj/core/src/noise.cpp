#include "tsc/noise.hpp"

namespace tsc {

PauliOperator sample_error(const NoiseModel& model, std::size_t n, Rng& rng) {
    if (model.p < 0.0 || model.p > 1.0) throw Error("depolarizing rate must be in [0,1]");
    PauliOperator e(n);
    if (model.p <= 0.0) return e;
    std::uint64_t thresh;
    if (model.p >= 1.0) {
        thresh = UINT64_MAX;
    } else {
        long double t = (long double)model.p * 18446744073709551616.0L;
        thresh = t >= 18446744073709551615.0L ? UINT64_MAX : (std::uint64_t)t;
    }
    for (std::size_t q = 0; q < n; ++q) {
        std::uint64_t r = rng.next();
        bool hit = model.p >= 1.0 ? true : r < thresh;
        if (!hit) continue;
        e.apply("XYZ"[rng.next() % 3], q);
    }
    return e;
}

}  // namespace tsc
