#pragma once

#include "schurq/field.hpp"
#include "schurq/linalg.hpp"
#include "schurq/partition.hpp"

#include <map>
#include <string>
#include <vector>

namespace schurq {

// A homogeneous element of the ring Omega = C[p_1, p_3, p_5, ...] of degree k,
// as exact coordinates on the power-sum basis {p_mu : mu odd partition of k}.
// Zero coordinates are never stored.
class OmegaElem {
  public:
    OmegaElem() = default; // zero of degree 0
    static OmegaElem zero(int degree);
    static OmegaElem unit() { return p_monomial(Partition()); }
    // Basis element p_mu; throws std::invalid_argument unless mu is odd.
    static OmegaElem p_monomial(const Partition& mu);

    int degree() const { return degree_; }
    bool is_zero() const { return coords_.empty(); }
    const std::map<Partition, FieldElem>& coords() const { return coords_; }
    FieldElem coeff(const Partition& mu) const;

    OmegaElem operator+(const OmegaElem& o) const;
    OmegaElem operator-(const OmegaElem& o) const;
    OmegaElem operator*(const OmegaElem& o) const;
    OmegaElem scaled(const FieldElem& c) const;
    bool operator==(const OmegaElem& o) const;
    bool operator!=(const OmegaElem& o) const { return !(*this == o); }

    // Substitute p_r -> x_1^r + ... + x_n^r and evaluate exactly.
    FieldElem evaluate(const std::vector<FieldElem>& xs) const;

    std::string str() const;

  private:
    int degree_ = 0;
    std::map<Partition, FieldElem> coords_;
};

// q_r: the t^r coefficient of exp(2 sum_{s odd} p_s t^s / s); q_0 = 1.
OmegaElem q_gen(int r);

// Two-row function Q_{(a,b)} = q_a q_b + 2 sum_{i=1..b} (-1)^i q_{a+i} q_{b-i},
// with Q_{(a,0)} = q_a. Requires a > b >= 0.
OmegaElem schur_q_two_row(int a, int b);

// Schur Q-function for a strict partition, via the Pfaffian of the
// antisymmetric matrix of two-row functions (padding one zero part when
// the length is odd). Throws std::invalid_argument for non-strict input.
OmegaElem schur_q(const Partition& lambda);

// Transition matrix M with rows nu in DP_k, columns mu in OP_k (canonical
// order), such that Q_nu = sum_mu M[nu][mu] p_mu.
FieldMatrix transition_matrix(int k);

enum class TableKind { phi, psi };

// Character table: rows indexed by DP_k, columns by OP_k.
struct CharTable {
    int k;
    TableKind kind;
    std::vector<Partition> rows; // DP_k
    std::vector<Partition> cols; // OP_k
    FieldMatrix entries;

    const FieldElem& at(int nu_index, int mu_index) const {
        return entries.at(nu_index, mu_index);
    }
    const FieldElem& value(const Partition& nu, const Partition& mu) const;
    std::string grid() const; // plain-text grid in canonical order
};

// Irreducible character values phi_nu(gamma^mu) of the spin symmetric group
// algebra, from the linear system (sqrt2)^{l(mu)} p_mu =
//   sum_nu phi_nu(gamma^mu) (sqrt2)^{-l(nu)-eps(nu)} Q_nu.
CharTable phi_table(int k);

// Irreducible character values psi_nu(sigma^{(mu,())}) of the Sergeev
// algebra, from 2^{l(mu)} p_mu = sum_nu psi_nu (sqrt2)^{-l(nu)-d(nu)} Q_nu.
CharTable psi_table(int k);

// Substitute the table back into its defining identity and check that both
// sides agree identically in Omega^k.
bool verify_table_identity(const CharTable& table);

} // namespace schurq
