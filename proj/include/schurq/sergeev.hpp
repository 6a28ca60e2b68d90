#pragma once

#include "schurq/field.hpp"
#include "schurq/linalg.hpp"
#include "schurq/partition.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace schurq {

// Permutation of {0..k-1}; img_[j] is the image of point j.
// Composition (w*v)(j) = w(v(j)).
class Perm {
  public:
    Perm() = default;
    explicit Perm(int k);                 // identity
    explicit Perm(std::vector<int> img);  // validates
    static Perm adjacent(int k, int i);   // transposition (i, i+1), 0-based i

    int k() const { return static_cast<int>(img_.size()); }
    int operator()(int j) const { return img_[j]; }
    Perm operator*(const Perm& v) const;
    Perm inverse() const;
    bool is_identity() const;
    long lehmer_rank() const; // rank in lexicographic order of one-line forms
    bool operator<(const Perm& o) const { return img_ < o.img_; }
    bool operator==(const Perm& o) const { return img_ == o.img_; }
    std::string str() const; // one-line, 1-based: "(2 1 3)"

  private:
    std::vector<int> img_;
};

// Lexicographically smallest reduced word (0-based generator indices i,
// meaning the adjacent transposition (i, i+1)) with w = s_{i1} s_{i2} ...
std::vector<int> lex_min_reduced_word(const Perm& w);
// Any factorization of w into adjacent transpositions (bubble sort).
std::vector<int> adjacent_word(const Perm& w);

namespace test_hooks {
// When set, bk_mul drops the Clifford conjugation-reordering sign.
// Used only to exercise fault detection in the verification harness.
extern bool bk_sign_fault;
} // namespace test_hooks

// Element of the Sergeev algebra B_k in the normal form
//   sum c_{I,w} xi_I sigma_w,   I subset of {1..k}, w in S_k,
// where xi_I is the ascending product of Clifford generators over I.
// The Z2-degree of a basis term is |I| mod 2.
class BkElem {
  public:
    using Key = std::pair<uint32_t, Perm>; // (bitmask of I, w)

    explicit BkElem(int k) : k_(k) {}
    static BkElem zero(int k) { return BkElem(k); }
    static BkElem unit(int k);
    static BkElem basis(int k, uint32_t mask, const Perm& w,
                        FieldElem coeff = FieldElem::one());
    // Clifford basis element xi_I (identity permutation part).
    static BkElem clifford(int k, uint32_t mask, FieldElem coeff = FieldElem::one());

    int k() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, FieldElem>& terms() const { return terms_; }
    FieldElem coeff(uint32_t mask, const Perm& w) const;
    // True when every permutation component is the identity.
    bool is_clifford() const;
    // 0 or 1 when homogeneous, nullopt when mixed (zero counts as homogeneous 0).
    std::optional<int> degree() const;

    BkElem operator+(const BkElem& o) const;
    BkElem operator-(const BkElem& o) const;
    BkElem operator-() const { return scaled(FieldElem(-1)); }
    BkElem operator*(const BkElem& o) const;
    BkElem scaled(const FieldElem& c) const;
    bool operator==(const BkElem& o) const { return k_ == o.k_ && terms_ == o.terms_; }
    bool operator!=(const BkElem& o) const { return !(*this == o); }

    SparseVec flatten() const; // index = lehmer(w) * 2^k + mask
    static BkElem unflatten(int k, const SparseVec& v);

    std::string str() const; // "c * xi{1,3} * s(2 1 3)" terms joined by " + "

  private:
    int k_;
    std::map<Key, FieldElem> terms_;
};

BkElem pow(const BkElem& x, int e);

struct BkGenerators {
    BkElem tau;                 // (xi_{1}, id)
    std::vector<BkElem> sigma;  // sigma_1 .. sigma_{k-1}
    std::vector<BkElem> tau_i;  // tau_1 .. tau_k via the defining conjugation
};
BkGenerators bk_generators(int k);

// gamma~_j = (1/sqrt2)(tau_j - tau_{j+1}) sigma_j, 1 <= j <= k-1.
BkElem theta_gamma(int j, int k);

// Class element gamma^mu: for each part the block product of consecutive
// gamma~'s, multiplied left to right. Requires |mu| = k.
BkElem gamma_mu(const Partition& mu, int k);

// Class element sigma^{(lambda,mu)} = x_1 x_2 ... y_1 y_2 ... with the
// y-blocks ending in a tau factor. Requires |lambda| + |mu| = k.
BkElem sigma_class(const Partition& lambda, const Partition& mu, int k);

struct RelationCheck {
    std::string name;
    bool pass;
};

// Verifies the defining relations of B_k, the Clifford relations for the
// tau_i, the spin relations for the gamma~_j, and the anticommutation
// between the two families, inside the concrete model.
std::vector<RelationCheck> check_presentation(int k);

// Dimension of the unital subalgebra generated, by iterated span closure.
long subalgebra_dim(const std::vector<BkElem>& gens);

// Rank of {xi_I * gamma_w : I subset [k], w in S_k}, where gamma_w is the
// product of gamma~'s along the lex-smallest reduced word of w. Equals
// 2^k k! exactly when the map C_k (x) A_k -> B_k is an isomorphism.
long theta_image_dim(int k);

// The simple Clifford module X_k = C_k e with its ordered basis
// {xi^eps} (k even) or {xi^eps} + {xi^eps xi_k} (k odd), the left-action
// matrices of the generators, and for odd k the odd endomorphism z_k.
struct XkModule {
    int k = 0;
    int r = 0; // floor(k/2)
    std::vector<BkElem> basis;         // elements of C_k
    std::vector<int> basis_degree;     // Clifford word length mod 2
    std::vector<FieldMatrix> xi_action; // left action of xi_1..xi_k
    FieldMatrix z_action;              // odd k only

    int dim() const { return static_cast<int>(basis.size()); }
    // Matrix of the left action of a Clifford element on the basis.
    FieldMatrix action(const BkElem& c) const;
};

XkModule xk_build(int k);

// Trace of the left action of a Clifford element on X_k.
FieldElem xk_char(const XkModule& xk, const BkElem& c);
FieldElem xk_char(int k, const BkElem& c);

// Ch[X_k](Xi) for the blockwise product Xi of the (xi_j - xi_{j+1});
// mu must be an odd partition, k = |mu|.
FieldElem xi_product_coeff(const Partition& mu);

} // namespace schurq
