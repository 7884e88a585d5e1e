#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tsc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionError : Error {
    using Error::Error;
};
struct BudgetError : Error {
    using Error::Error;
};
struct ParityError : Error {
    using Error::Error;
};
struct ConstructionError : Error {
    using Error::Error;
};
struct ContractViolation : Error {
    using Error::Error;
};

namespace gf2 {

/* Packed bit vector over GF(2). All linear algebra in the library is done on
 * these; 64 bits per word, word 0 holds bits 0..63. */
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v = true) {
        if (v)
            w_[i >> 6] |= std::uint64_t(1) << (i & 63);
        else
            w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    bool operator==(const BitVec&) const = default;

    std::size_t popcount() const;
    bool none() const;
    /* Index of lowest set bit, or -1. */
    long lowest_set() const;
    /* Parity of the AND of two vectors (i.e. <a,b> over GF(2)). */
    static bool dot(const BitVec& a, const BitVec& b);

    const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& words() { return w_; }

  private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

/* Incremental row-echelon span over GF(2) with leftmost-pivot reduction.
 * Rows are inserted one at a time; the span remembers, for every echelon row,
 * which of the accepted inserts combine to it, so dependent vectors can be
 * expressed over the accepted generator set. Pivot order is deterministic. */
class SpanIndex {
  public:
    explicit SpanIndex(std::size_t ncols) : ncols_(ncols) {}

    /* Insert v. Returns the generator index assigned to v if it was
     * independent of the current span, or -1 if dependent. */
    long insert(const BitVec& v);

    bool contains(const BitVec& v) const;
    /* Residual of v after elimination against the span. */
    BitVec reduce(BitVec v) const;
    /* If v is in the span, the combination of accepted generators producing
     * it (bit i set = generator i participates); otherwise nullopt. */
    std::optional<BitVec> express(const BitVec& v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return ncols_; }
    std::size_t generators() const { return n_gens_; }

  private:
    std::size_t ncols_;
    std::size_t n_gens_ = 0;               // accepted inserts
    std::vector<BitVec> rows_;             // echelon rows
    std::vector<BitVec> combos_;           // combo over accepted generators
    std::vector<long> pivots_;             // pivot column per echelon row
};

std::size_t rank_of(const std::vector<BitVec>& rows, std::size_t ncols);

/* Basis of { v : <row_i, v> = 0 for all i } (right kernel). Deterministic:
 * free columns in increasing order. */
std::vector<BitVec> kernel_basis(const std::vector<BitVec>& rows, std::size_t ncols);

/* Basis of the intersection of span(a) and span(b) (Zassenhaus). */
std::vector<BitVec> intersect_spans(const std::vector<BitVec>& a,
                                    const std::vector<BitVec>& b,
                                    std::size_t ncols);

/* One solution v of the linear system <row_i, v> = rhs_i, restricted to the
 * variable set `allowed` when given (other coordinates forced to zero).
 * Returns nullopt when the system is inconsistent. */
std::optional<BitVec> solve(const std::vector<BitVec>& rows, const BitVec& rhs,
                            std::size_t ncols,
                            const std::vector<std::size_t>* allowed = nullptr);

}  // namespace gf2
}  // namespace tsc
