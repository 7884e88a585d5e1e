#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tsc/gf2.hpp"

namespace tsc {

/* Phase-free n-qubit Pauli operator stored as paired X/Z bit vectors.
 * The group is used modulo <iI>: only commutation relations matter here, so
 * no sign is tracked. Qubit indices are 0-based internally; the text format
 * ("X1 Z4 Y8") is 1-based to match the usual figures. */
class PauliOperator {
  public:
    PauliOperator() = default;
    explicit PauliOperator(std::size_t n) : n_(n), x_(n), z_(n) {}

    static PauliOperator identity(std::size_t n) { return PauliOperator(n); }
    /* Parse the text form, e.g. "X1 Z4 Y8" or "I". */
    static PauliOperator from_string(const std::string& s, std::size_t n);

    std::size_t num_qubits() const { return n_; }
    bool x(std::size_t i) const { return x_.get(i); }
    bool z(std::size_t i) const { return z_.get(i); }
    void set_x(std::size_t i) { x_.flip(i); }
    void set_z(std::size_t i) { z_.flip(i); }
    void set_y(std::size_t i) {
        x_.flip(i);
        z_.flip(i);
    }
    /* Multiply by a single-qubit Pauli given as 'X','Y','Z'. */
    void apply(char pauli, std::size_t qubit);

    std::size_t weight() const;
    bool is_identity() const { return x_.none() && z_.none(); }

    bool commutes_with(const PauliOperator& o) const;
    PauliOperator& operator*=(const PauliOperator& o);
    friend PauliOperator operator*(PauliOperator a, const PauliOperator& b) { return a *= b; }
    bool operator==(const PauliOperator&) const = default;

    /* Length-2n symplectic vector (x-block then z-block). */
    gf2::BitVec to_symplectic() const;
    static PauliOperator from_symplectic(const gf2::BitVec& v);
    /* (z-block | x-block): dot(a.flipped, b.symplectic) = 0 iff a,b commute. */
    gf2::BitVec to_symplectic_flipped() const;

    std::string to_string() const;

  private:
    std::size_t n_ = 0;
    gf2::BitVec x_, z_;
};

bool commutes(const PauliOperator& a, const PauliOperator& b);
PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);

/* A list of phase-free Paulis with their GF(2) rank as length-2n vectors. */
class SymplecticBasis {
  public:
    SymplecticBasis() = default;
    explicit SymplecticBasis(std::size_t n) : n_(n) {}
    static SymplecticBasis from(std::size_t n, std::vector<PauliOperator> rows);

    void push_back(const PauliOperator& p);
    std::size_t num_qubits() const { return n_; }
    const std::vector<PauliOperator>& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }
    std::size_t rank() const;

    /* Echelonized index over the rows; cached after first use. */
    const gf2::SpanIndex& span() const;

    bool in_span(const PauliOperator& p) const;

  private:
    std::size_t n_ = 0;
    std::vector<PauliOperator> rows_;
    mutable std::optional<gf2::SpanIndex> span_;
};

struct MembershipReport {
    bool in_span;
    std::size_t rank;
};
MembershipReport rank_and_membership(const SymplecticBasis& basis, const PauliOperator& p);

/* Basis of the centralizer C(gens): all phase-free Paulis commuting with
 * every generator; 2n - rank(gens) independent elements. */
SymplecticBasis centralizer_basis(const SymplecticBasis& gens);

/* Smallest weight w <= max_w of a Pauli in span(space) \ span(exclude),
 * by exhaustive enumeration of weight-w Paulis. Throws BudgetError when the
 * enumeration would exceed `budget` candidate operators. */
std::optional<std::size_t> minimum_weight_in_coset(const SymplecticBasis& space,
                                                   const SymplecticBasis& exclude,
                                                   std::size_t max_w,
                                                   std::uint64_t budget = 200'000'000);

/* Same search restricted to Paulis supported on `support`: the subspace of
 * span(space) living on those qubits is enumerated exhaustively. Intended for
 * locally generated codes where a low-weight coset element, when it exists,
 * can be found inside some bounded neighborhood. Throws BudgetError when that
 * subspace has dimension above ~26. */
std::optional<std::size_t> minimum_weight_in_coset_on_support(
    const SymplecticBasis& space, const SymplecticBasis& exclude,
    const std::vector<std::size_t>& support, std::size_t max_dim = 26);

/* Symplectic Gram-Schmidt: split span(ops) modulo span(iso) into
 * anticommuting pairs (x_i, z_i). `iso` must be isotropic relative to the
 * listed ops (used for logical-operator extraction). */
std::vector<std::pair<PauliOperator, PauliOperator>> symplectic_pairs(
    const std::vector<PauliOperator>& ops, const SymplecticBasis& iso);

}  // namespace tsc
