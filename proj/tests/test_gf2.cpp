#include <doctest.h>

#include <random>

#include "tsc/gf2.hpp"

using namespace tsc;
using gf2::BitVec;

namespace {
BitVec from_bits(std::initializer_list<int> bits) {
    BitVec v(bits.size());
    std::size_t i = 0;
    for (int b : bits) {
        if (b) v.set(i);
        ++i;
    }
    return v;
}
}  // namespace

TEST_CASE("bitvec basics") {
    BitVec v(130);
    v.set(0);
    v.set(64);
    v.set(129);
    CHECK(v.popcount() == 3);
    CHECK(v.lowest_set() == 0);
    v.flip(0);
    CHECK(v.lowest_set() == 64);
    BitVec w(130);
    w.set(64);
    CHECK(BitVec::dot(v, w));
    w.set(129);
    CHECK_FALSE(BitVec::dot(v, w));
}

TEST_CASE("span index rank, membership, expression") {
    gf2::SpanIndex s(4);
    CHECK(s.insert(from_bits({1, 1, 0, 0})) == 0);
    CHECK(s.insert(from_bits({0, 1, 1, 0})) == 1);
    CHECK(s.insert(from_bits({1, 0, 1, 0})) == -1);  // sum of the first two
    CHECK(s.rank() == 2);
    CHECK(s.contains(from_bits({1, 0, 1, 0})));
    CHECK_FALSE(s.contains(from_bits({0, 0, 0, 1})));
    auto e = s.express(from_bits({1, 0, 1, 0}));
    REQUIRE(e.has_value());
    CHECK(e->get(0));
    CHECK(e->get(1));
    CHECK_FALSE(s.express(from_bits({1, 1, 1, 1})).has_value());
}

TEST_CASE("kernel basis is the full orthogonal complement") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t ncols = 1 + std::size_t(rng() % 12);
        std::size_t nrows = rng() % 8;
        std::vector<BitVec> rows;
        for (std::size_t r = 0; r < nrows; ++r) {
            BitVec v(ncols);
            for (std::size_t c = 0; c < ncols; ++c)
                if (rng() & 1) v.set(c);
            rows.push_back(v);
        }
        auto kern = gf2::kernel_basis(rows, ncols);
        CHECK(kern.size() == ncols - gf2::rank_of(rows, ncols));
        for (const auto& k : kern)
            for (const auto& r : rows) CHECK_FALSE(BitVec::dot(k, r));
        CHECK(gf2::rank_of(kern, ncols) == kern.size());
    }
}

TEST_CASE("span intersection via Zassenhaus") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t ncols = 2 + std::size_t(rng() % 10);
        auto rand_rows = [&](std::size_t k) {
            std::vector<BitVec> rows;
            for (std::size_t r = 0; r < k; ++r) {
                BitVec v(ncols);
                for (std::size_t c = 0; c < ncols; ++c)
                    if (rng() & 1) v.set(c);
                rows.push_back(v);
            }
            return rows;
        };
        auto a = rand_rows(rng() % 6), b = rand_rows(rng() % 6);
        auto inter = gf2::intersect_spans(a, b, ncols);
        auto join = a;
        join.insert(join.end(), b.begin(), b.end());
        std::size_t expect =
            gf2::rank_of(a, ncols) + gf2::rank_of(b, ncols) - gf2::rank_of(join, ncols);
        CHECK(inter.size() == expect);
        gf2::SpanIndex sa(ncols), sb(ncols);
        for (const auto& r : a) sa.insert(r);
        for (const auto& r : b) sb.insert(r);
        for (const auto& v : inter) {
            CHECK(sa.contains(v));
            CHECK(sb.contains(v));
        }
    }
}

TEST_CASE("linear solve with restricted variables") {
    // rows over 6 columns; solve for <row_i, x> = rhs_i with x supported on
    // columns {0, 2, 4}.
    std::vector<BitVec> rows = {from_bits({1, 0, 1, 0, 0, 0}), from_bits({0, 1, 0, 0, 1, 0})};
    BitVec rhs(2);
    rhs.set(0);
    rhs.set(1);
    std::vector<std::size_t> allowed = {0, 2, 4};
    auto x = gf2::solve(rows, rhs, 6, &allowed);
    REQUIRE(x.has_value());
    for (std::size_t c : {1u, 3u, 5u}) CHECK_FALSE(x->get(c));
    CHECK(BitVec::dot(rows[0], *x) == true);
    CHECK(BitVec::dot(rows[1], *x) == true);

    // Inconsistent: require <e1, x> = 1 with x forbidden on column 1.
    std::vector<BitVec> rows2 = {from_bits({0, 1, 0, 0, 0, 0})};
    BitVec rhs2(1);
    rhs2.set(0);
    std::vector<std::size_t> allowed2 = {0, 2};
    CHECK_FALSE(gf2::solve(rows2, rhs2, 6, &allowed2).has_value());
}
