#include "tsc/pauli.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace tsc {

PauliOperator PauliOperator::from_string(const std::string& s, std::size_t n) {
    PauliOperator p(n);
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        if (tok == "I") continue;
        if (tok.size() < 2) throw Error("bad Pauli token: " + tok);
        char c = tok[0];
        std::size_t q = std::stoul(tok.substr(1));
        if (q < 1 || q > n) throw DimensionError("qubit index out of range: " + tok);
        p.apply(c, q - 1);
    }
    return p;
}

void PauliOperator::apply(char pauli, std::size_t qubit) {
    switch (pauli) {
        case 'X': x_.flip(qubit); break;
        case 'Z': z_.flip(qubit); break;
        case 'Y':
            x_.flip(qubit);
            z_.flip(qubit);
            break;
        default: throw Error(std::string("bad Pauli letter: ") + pauli);
    }
}

std::size_t PauliOperator::weight() const {
    std::size_t w = 0;
    const auto& xw = x_.words();
    const auto& zw = z_.words();
    for (std::size_t k = 0; k < xw.size(); ++k) w += std::popcount(xw[k] | zw[k]);
    return w;
}

bool PauliOperator::commutes_with(const PauliOperator& o) const {
    if (n_ != o.n_) throw DimensionError("commutes: qubit count mismatch");
    return !(gf2::BitVec::dot(x_, o.z_) ^ gf2::BitVec::dot(z_, o.x_));
}

PauliOperator& PauliOperator::operator*=(const PauliOperator& o) {
    if (n_ != o.n_) throw DimensionError("multiply: qubit count mismatch");
    x_ ^= o.x_;
    z_ ^= o.z_;
    return *this;
}

gf2::BitVec PauliOperator::to_symplectic() const {
    gf2::BitVec v(2 * n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (x_.get(i)) v.set(i);
        if (z_.get(i)) v.set(n_ + i);
    }
    return v;
}

PauliOperator PauliOperator::from_symplectic(const gf2::BitVec& v) {
    std::size_t n = v.size() / 2;
    PauliOperator p(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (v.get(i)) p.x_.set(i);
        if (v.get(n + i)) p.z_.set(i);
    }
    return p;
}

gf2::BitVec PauliOperator::to_symplectic_flipped() const {
    gf2::BitVec v(2 * n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (z_.get(i)) v.set(i);
        if (x_.get(i)) v.set(n_ + i);
    }
    return v;
}

std::string PauliOperator::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < n_; ++i) {
        bool xb = x_.get(i), zb = z_.get(i);
        if (!xb && !zb) continue;
        if (!out.empty()) out += ' ';
        out += xb ? (zb ? 'Y' : 'X') : 'Z';
        out += std::to_string(i + 1);
    }
    return out.empty() ? "I" : out;
}

bool commutes(const PauliOperator& a, const PauliOperator& b) { return a.commutes_with(b); }
PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) { return a * b; }

SymplecticBasis SymplecticBasis::from(std::size_t n, std::vector<PauliOperator> rows) {
    SymplecticBasis b(n);
    for (auto& r : rows) b.push_back(r);
    return b;
}

void SymplecticBasis::push_back(const PauliOperator& p) {
    if (p.num_qubits() != n_) throw DimensionError("basis row qubit count mismatch");
    rows_.push_back(p);
    span_.reset();
}

const gf2::SpanIndex& SymplecticBasis::span() const {
    if (!span_) {
        gf2::SpanIndex s(2 * n_);
        for (const auto& r : rows_) s.insert(r.to_symplectic());
        span_ = std::move(s);
    }
    return *span_;
}

std::size_t SymplecticBasis::rank() const { return span().rank(); }

bool SymplecticBasis::in_span(const PauliOperator& p) const {
    if (p.num_qubits() != n_) throw DimensionError("in_span qubit count mismatch");
    return span().contains(p.to_symplectic());
}

MembershipReport rank_and_membership(const SymplecticBasis& basis, const PauliOperator& p) {
    return MembershipReport{basis.in_span(p), basis.rank()};
}

SymplecticBasis centralizer_basis(const SymplecticBasis& gens) {
    std::size_t n = gens.num_qubits();
    std::vector<gf2::BitVec> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens.rows()) rows.push_back(g.to_symplectic_flipped());
    auto kernel = gf2::kernel_basis(rows, 2 * n);
    SymplecticBasis out(n);
    for (const auto& v : kernel) out.push_back(PauliOperator::from_symplectic(v));
    return out;
}

namespace {

/* Visit all weight-w Paulis on n qubits; stop early when f returns true. */
template <typename F>
bool foreach_weight_w(std::size_t n, std::size_t w, F&& f) {
    std::vector<std::size_t> qubits(w);
    std::vector<int> types(w, 0);  // 0=X 1=Y 2=Z
    for (std::size_t i = 0; i < w; ++i) qubits[i] = i;
    if (w > n) return false;
    while (true) {
        std::fill(types.begin(), types.end(), 0);
        while (true) {
            if (f(qubits, types)) return true;
            std::size_t k = 0;
            while (k < w && types[k] == 2) types[k++] = 0;
            if (k == w) break;
            ++types[k];
        }
        // next combination
        std::size_t i = w;
        while (i > 0) {
            --i;
            if (qubits[i] != i + n - w) {
                ++qubits[i];
                for (std::size_t j = i + 1; j < w; ++j) qubits[j] = qubits[j - 1] + 1;
                break;
            }
            if (i == 0) return false;
        }
        if (w == 0) return false;
    }
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    long double acc = 1;
    for (std::uint64_t i = 0; i < k; ++i) acc = acc * (long double)(n - i) / (long double)(i + 1);
    return acc > 1e18L ? UINT64_MAX : (std::uint64_t)(acc + 0.5L);
}

}  // namespace

std::optional<std::size_t> minimum_weight_in_coset(const SymplecticBasis& space,
                                                   const SymplecticBasis& exclude,
                                                   std::size_t max_w,
                                                   std::uint64_t budget) {
    std::size_t n = space.num_qubits();
    if (max_w > n) throw DimensionError("minimum_weight_in_coset: max_w > n");
    std::uint64_t cost = 0;
    for (std::size_t w = 1; w <= max_w; ++w) {
        std::uint64_t c = binom(n, w);
        for (std::size_t i = 0; i < w && c < UINT64_MAX / 3; ++i) c *= 3;
        cost = (cost > UINT64_MAX - c) ? UINT64_MAX : cost + c;
    }
    if (cost > budget)
        throw BudgetError("minimum_weight_in_coset: enumeration over " + std::to_string(cost) +
                          " candidates exceeds budget " + std::to_string(budget));

    const auto& in = space.span();
    const auto& ex = exclude.span();
    for (std::size_t w = 1; w <= max_w; ++w) {
        bool found = foreach_weight_w(n, w, [&](const std::vector<std::size_t>& qs,
                                                const std::vector<int>& ts) {
            PauliOperator p(n);
            for (std::size_t i = 0; i < qs.size(); ++i)
                p.apply("XYZ"[std::size_t(ts[i])], qs[i]);
            auto v = p.to_symplectic();
            return in.contains(v) && !ex.contains(v);
        });
        if (found) return w;
    }
    return std::nullopt;
}

std::optional<std::size_t> minimum_weight_in_coset_on_support(
    const SymplecticBasis& space, const SymplecticBasis& exclude,
    const std::vector<std::size_t>& support, std::size_t max_dim) {
    std::size_t n = space.num_qubits();
    // Subspace of span(space) with support inside the window: constrain every
    // coordinate outside `support` to zero, i.e. intersect with the window
    // subspace spanned by the single-qubit X/Z vectors on `support`.
    std::vector<gf2::BitVec> window;
    for (auto q : support) {
        gf2::BitVec vx(2 * n), vz(2 * n);
        vx.set(q);
        vz.set(n + q);
        window.push_back(vx);
        window.push_back(vz);
    }
    std::vector<gf2::BitVec> rows;
    for (const auto& r : space.rows()) rows.push_back(r.to_symplectic());
    auto sub = gf2::intersect_spans(rows, window, 2 * n);
    if (sub.size() > max_dim)
        throw BudgetError("coset search window subspace dimension " + std::to_string(sub.size()) +
                          " too large to enumerate");
    const auto& ex = exclude.span();
    std::optional<std::size_t> best;
    // Gray-code walk over the subspace.
    std::uint64_t total = std::uint64_t(1) << sub.size();
    gf2::BitVec cur(2 * n);
    std::uint64_t prev_gray = 0;
    for (std::uint64_t k = 1; k < total; ++k) {
        std::uint64_t gray = k ^ (k >> 1);
        std::uint64_t diff = gray ^ prev_gray;
        prev_gray = gray;
        cur ^= sub[std::size_t(std::countr_zero(diff))];
        auto p = PauliOperator::from_symplectic(cur);
        std::size_t w = p.weight();
        if ((!best || w < *best) && w > 0 && !ex.contains(cur)) best = w;
    }
    return best;
}

std::vector<std::pair<PauliOperator, PauliOperator>> symplectic_pairs(
    const std::vector<PauliOperator>& ops, const SymplecticBasis& iso) {
    // Work through coset representatives modulo span(iso); repeatedly take the
    // first op anticommuting with some later op, pair them, and sweep both out
    // of the remaining list.
    std::vector<PauliOperator> pool;
    gf2::SpanIndex seen = iso.span();  // copy
    for (const auto& p : ops) {
        if (seen.insert(p.to_symplectic()) >= 0) pool.push_back(p);
    }
    std::vector<std::pair<PauliOperator, PauliOperator>> pairs;
    while (!pool.empty()) {
        PauliOperator a = pool.front();
        pool.erase(pool.begin());
        std::size_t j = pool.size();
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (!a.commutes_with(pool[i])) {
                j = i;
                break;
            }
        if (j == pool.size())
            throw Error("symplectic_pairs: element without anticommuting partner");
        PauliOperator b = pool[j];
        pool.erase(pool.begin() + long(j));
        for (auto& r : pool) {
            if (!r.commutes_with(b)) r *= a;
            if (!r.commutes_with(a)) r *= b;
        }
        pairs.emplace_back(a, b);
    }
    return pairs;
}

}  // namespace tsc
