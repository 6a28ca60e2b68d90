#pragma once

#include "schurq/field.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace schurq {

// Sparse exact vector: terms sorted by index, no explicit zeros.
class SparseVec {
  public:
    using Term = std::pair<long, FieldElem>;

    SparseVec() = default;
    explicit SparseVec(std::vector<Term> terms);

    static SparseVec unit(long index, FieldElem coeff = FieldElem::one());

    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& front() const { return terms_.front(); }
    FieldElem at(long index) const;

    void add_term(long index, const FieldElem& c); // accumulate one entry
    SparseVec& axpy(const FieldElem& c, const SparseVec& o); // *this += c*o
    SparseVec scaled(const FieldElem& c) const;
    SparseVec operator+(const SparseVec& o) const;
    SparseVec operator-(const SparseVec& o) const;
    bool operator==(const SparseVec& o) const { return terms_ == o.terms_; }

  private:
    std::vector<Term> terms_;
};

// Row-echelon span over the field, pivots keyed by smallest index.
class EchelonBasis {
  public:
    // Reduce v against the basis; the residual is zero iff v is in the span.
    SparseVec reduce(SparseVec v) const;
    // Insert v if independent; returns true when the dimension grew.
    bool insert(SparseVec v);
    size_t dim() const { return rows_.size(); }
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    bool spans_same(const EchelonBasis& other) const;
    const std::map<long, SparseVec>& rows() const { return rows_; }

  private:
    std::map<long, SparseVec> rows_;
};

// Echelon span that tracks coordinates of inserted vectors, for exact
// membership with representation (used to restrict operators to subspaces).
class CoordEchelon {
  public:
    // tag identifies the inserted vector in solve() output coordinates.
    bool insert(SparseVec v, long tag);
    size_t dim() const { return rows_.size(); }
    // Express v in terms of the inserted vectors; nullopt if not in the span.
    std::optional<std::vector<std::pair<long, FieldElem>>> solve(SparseVec v) const;

  private:
    struct Row {
        SparseVec vec;
        SparseVec combo; // coordinates over inserted tags
    };
    std::map<long, Row> rows_;
};

// Kernel of the sparse linear system given by equation rows over unknowns
// 0..ncols-1. Returns a basis of the solution space.
std::vector<SparseVec> nullspace(const std::vector<SparseVec>& equations, long ncols);

// Dense exact matrix over Q(i, sqrt2).
class FieldMatrix {
  public:
    FieldMatrix() : rows_(0), cols_(0) {}
    FieldMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static FieldMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    FieldElem& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const FieldElem& at(int i, int j) const {
        return data_[static_cast<size_t>(i) * cols_ + j];
    }

    FieldMatrix operator*(const FieldMatrix& o) const;
    FieldMatrix operator+(const FieldMatrix& o) const;
    FieldMatrix operator-(const FieldMatrix& o) const;
    FieldMatrix scaled(const FieldElem& c) const;
    bool operator==(const FieldMatrix& o) const;

    FieldElem trace() const;
    int rank() const;
    // Gauss-Jordan with first-nonzero pivoting; throws std::domain_error
    // if the matrix is singular or not square.
    FieldMatrix inverse() const;

  private:
    int rows_, cols_;
    std::vector<FieldElem> data_;
};

} // namespace schurq
