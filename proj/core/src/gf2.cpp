#include "tsc/gf2.hpp"

#include <bit>

namespace tsc::gf2 {

std::size_t BitVec::popcount() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

bool BitVec::none() const {
    for (auto w : w_)
        if (w) return false;
    return true;
}

long BitVec::lowest_set() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k]) return long(k * 64 + std::countr_zero(w_[k]));
    return -1;
}

bool BitVec::dot(const BitVec& a, const BitVec& b) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < a.w_.size(); ++k) acc ^= a.w_[k] & b.w_[k];
    return std::popcount(acc) & 1;
}

long SpanIndex::insert(const BitVec& v) {
    BitVec r = v;
    BitVec c(n_gens_ + 1);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (r.get(std::size_t(pivots_[i]))) {
            r ^= rows_[i];
            // Combos are over the final generator index space; widen lazily.
            BitVec ci = combos_[i];
            for (std::size_t b = 0; b < ci.size() && b < c.size(); ++b)
                if (ci.get(b)) c.flip(b);
        }
    }
    long p = r.lowest_set();
    if (p < 0) return -1;
    c.set(n_gens_);
    // Keep echelon rows sorted by pivot so reduction is leftmost-first.
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, r);
    combos_.insert(combos_.begin() + pos, c);
    pivots_.insert(pivots_.begin() + pos, p);
    return long(n_gens_++);
}

BitVec SpanIndex::reduce(BitVec v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(std::size_t(pivots_[i]))) v ^= rows_[i];
    return v;
}

bool SpanIndex::contains(const BitVec& v) const { return reduce(v).none(); }

std::optional<BitVec> SpanIndex::express(const BitVec& v) const {
    BitVec r = v;
    BitVec c(n_gens_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (r.get(std::size_t(pivots_[i]))) {
            r ^= rows_[i];
            for (std::size_t b = 0; b < combos_[i].size(); ++b)
                if (combos_[i].get(b)) c.flip(b);
        }
    }
    if (!r.none()) return std::nullopt;
    return c;
}

std::size_t rank_of(const std::vector<BitVec>& rows, std::size_t ncols) {
    SpanIndex s(ncols);
    for (const auto& r : rows) s.insert(r);
    return s.rank();
}

std::vector<BitVec> kernel_basis(const std::vector<BitVec>& rows, std::size_t ncols) {
    // Reduced row echelon form with pivot bookkeeping.
    std::vector<BitVec> m = rows;
    std::vector<long> pivot_of_col(ncols, -1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < m.size(); ++col) {
        std::size_t sel = m.size();
        for (std::size_t i = r; i < m.size(); ++i)
            if (m[i].get(col)) {
                sel = i;
                break;
            }
        if (sel == m.size()) continue;
        std::swap(m[r], m[sel]);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != r && m[i].get(col)) m[i] ^= m[r];
        pivot_of_col[col] = long(r);
        ++r;
    }
    std::vector<BitVec> kernel;
    for (std::size_t col = 0; col < ncols; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        BitVec v(ncols);
        v.set(col);
        for (std::size_t c2 = 0; c2 < ncols; ++c2) {
            long pr = pivot_of_col[c2];
            if (pr >= 0 && m[std::size_t(pr)].get(col)) v.set(c2);
        }
        kernel.push_back(v);
    }
    return kernel;
}

std::vector<BitVec> intersect_spans(const std::vector<BitVec>& a,
                                    const std::vector<BitVec>& b,
                                    std::size_t ncols) {
    // Zassenhaus: eliminate rows (x|x) for x in a and (y|0) for y in b; rows
    // that become zero in the left block carry intersection elements on the
    // right block.
    std::vector<BitVec> m;
    auto wide = [&](const BitVec& left, const BitVec& right) {
        BitVec v(2 * ncols);
        for (std::size_t i = 0; i < ncols; ++i) {
            if (left.get(i)) v.set(i);
            if (right.get(i)) v.set(ncols + i);
        }
        return v;
    };
    BitVec zero(ncols);
    for (const auto& x : a) m.push_back(wide(x, x));
    for (const auto& y : b) m.push_back(wide(y, zero));

    std::vector<BitVec> echelon;
    std::vector<long> pivots;
    std::vector<BitVec> inter;
    for (auto v : m) {
        for (std::size_t i = 0; i < echelon.size(); ++i)
            if (v.get(std::size_t(pivots[i]))) v ^= echelon[i];
        long p = v.lowest_set();
        if (p < 0) continue;
        if (std::size_t(p) >= ncols) {
            BitVec x(ncols);
            for (std::size_t i = 0; i < ncols; ++i)
                if (v.get(ncols + i)) x.set(i);
            inter.push_back(x);
            continue;
        }
        std::size_t pos = 0;
        while (pos < pivots.size() && pivots[pos] < p) ++pos;
        echelon.insert(echelon.begin() + pos, v);
        pivots.insert(pivots.begin() + pos, p);
    }
    // The recorded rows span the intersection; thin them to a basis.
    SpanIndex basis(ncols);
    std::vector<BitVec> out;
    for (const auto& x : inter)
        if (basis.insert(x) >= 0) out.push_back(x);
    return out;
}

std::optional<BitVec> solve(const std::vector<BitVec>& rows, const BitVec& rhs,
                            std::size_t ncols,
                            const std::vector<std::size_t>* allowed) {
    // Columns of the system are the allowed variables; build the transposed
    // elimination on [A | rhs] where A_{ij} = rows[i].get(var_j).
    std::vector<std::size_t> vars;
    if (allowed) {
        vars = *allowed;
    } else {
        vars.resize(ncols);
        for (std::size_t i = 0; i < ncols; ++i) vars[i] = i;
    }
    std::size_t nr = rows.size(), nc = vars.size();
    std::vector<BitVec> aug(nr, BitVec(nc + 1));
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j)
            if (rows[i].get(vars[j])) aug[i].set(j);
        if (rhs.get(i)) aug[i].set(nc);
    }
    std::vector<long> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < nc && r < nr; ++col) {
        std::size_t sel = nr;
        for (std::size_t i = r; i < nr; ++i)
            if (aug[i].get(col)) {
                sel = i;
                break;
            }
        if (sel == nr) continue;
        std::swap(aug[r], aug[sel]);
        for (std::size_t i = 0; i < nr; ++i)
            if (i != r && aug[i].get(col)) aug[i] ^= aug[r];
        pivot_col.push_back(long(col));
        ++r;
    }
    for (std::size_t i = r; i < nr; ++i)
        if (aug[i].get(nc)) return std::nullopt;  // 0 = 1 row -> inconsistent
    BitVec x(ncols);
    for (std::size_t i = 0; i < r; ++i)
        if (aug[i].get(nc)) x.set(vars[std::size_t(pivot_col[i])]);
    return x;
}

}  // namespace tsc::gf2
