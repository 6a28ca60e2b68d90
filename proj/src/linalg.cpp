#include "schurq/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace schurq {

SparseVec::SparseVec(std::vector<Term> terms) : terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
    std::vector<Term> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().first == t.first)
            merged.back().second += t.second;
        else
            merged.push_back(std::move(t));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Term& t) { return t.second.is_zero(); }),
                 merged.end());
    terms_ = std::move(merged);
}

SparseVec SparseVec::unit(long index, FieldElem coeff) {
    SparseVec v;
    if (!coeff.is_zero())
        v.terms_.push_back({index, std::move(coeff)});
    return v;
}

FieldElem SparseVec::at(long index) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), index,
        [](const Term& t, long idx) { return t.first < idx; });
    if (it != terms_.end() && it->first == index)
        return it->second;
    return FieldElem::zero();
}

void SparseVec::add_term(long index, const FieldElem& c) {
    if (c.is_zero())
        return;
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), index,
        [](const Term& t, long idx) { return t.first < idx; });
    if (it != terms_.end() && it->first == index) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    } else {
        terms_.insert(it, {index, c});
    }
}

SparseVec& SparseVec::axpy(const FieldElem& c, const SparseVec& o) {
    if (c.is_zero() || o.empty())
        return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() ||
            (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
            out.push_back({o.terms_[j].first, c * o.terms_[j].second});
            if (out.back().second.is_zero())
                out.pop_back();
            ++j;
        } else {
            FieldElem v = terms_[i].second + c * o.terms_[j].second;
            if (!v.is_zero())
                out.push_back({terms_[i].first, std::move(v)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

SparseVec SparseVec::scaled(const FieldElem& c) const {
    SparseVec out;
    if (c.is_zero())
        return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        out.terms_.push_back({t.first, c * t.second});
    return out;
}

SparseVec SparseVec::operator+(const SparseVec& o) const {
    SparseVec out = *this;
    out.axpy(FieldElem::one(), o);
    return out;
}

SparseVec SparseVec::operator-(const SparseVec& o) const {
    SparseVec out = *this;
    out.axpy(FieldElem(-1), o);
    return out;
}

SparseVec EchelonBasis::reduce(SparseVec v) const {
    std::vector<SparseVec::Term> done;
    while (!v.empty()) {
        auto [idx, c] = v.front();
        auto it = rows_.find(idx);
        if (it == rows_.end()) {
            done.push_back({idx, c});
            SparseVec rest;
            for (size_t j = 1; j < v.terms().size(); ++j)
                rest.add_term(v.terms()[j].first, v.terms()[j].second);
            v = std::move(rest);
        } else {
            v.axpy(-c, it->second);
        }
    }
    // residual entries are untouched by pivots; rebuild once
    SparseVec out;
    for (auto& t : done)
        out.add_term(t.first, t.second);
    return out;
}

bool EchelonBasis::insert(SparseVec v) {
    // In-place reduction: repeatedly eliminate leading entries with pivots.
    while (!v.empty()) {
        auto [idx, c] = v.front();
        auto it = rows_.find(idx);
        if (it == rows_.end()) {
            rows_[idx] = v.scaled(c.inverse());
            return true;
        }
        v.axpy(-c, it->second);
    }
    return false;
}

bool EchelonBasis::spans_same(const EchelonBasis& other) const {
    if (dim() != other.dim())
        return false;
    for (const auto& [piv, row] : other.rows_)
        if (!contains(row))
            return false;
    return true;
}

bool CoordEchelon::insert(SparseVec v, long tag) {
    SparseVec combo = SparseVec::unit(tag);
    while (!v.empty()) {
        auto [idx, c] = v.front();
        auto it = rows_.find(idx);
        if (it == rows_.end()) {
            FieldElem inv = c.inverse();
            rows_[idx] = Row{v.scaled(inv), combo.scaled(inv)};
            return true;
        }
        v.axpy(-c, it->second.vec);
        combo.axpy(-c, it->second.combo);
    }
    return false;
}

std::optional<std::vector<std::pair<long, FieldElem>>>
CoordEchelon::solve(SparseVec v) const {
    SparseVec combo;
    while (!v.empty()) {
        auto [idx, c] = v.front();
        auto it = rows_.find(idx);
        if (it == rows_.end())
            return std::nullopt;
        v.axpy(-c, it->second.vec);
        combo.axpy(c, it->second.combo);
    }
    return combo.terms();
}

std::vector<SparseVec> nullspace(const std::vector<SparseVec>& equations, long ncols) {
    EchelonBasis ech;
    for (const auto& eq : equations)
        ech.insert(eq);

    std::vector<bool> is_pivot(static_cast<size_t>(ncols), false);
    for (const auto& [piv, row] : ech.rows())
        is_pivot[static_cast<size_t>(piv)] = true;

    std::vector<SparseVec> kernel;
    for (long f = 0; f < ncols; ++f) {
        if (is_pivot[static_cast<size_t>(f)])
            continue;
        // x[f] = 1, other free vars 0; back-substitute pivots in
        // descending order (each echelon row only references larger indices).
        std::map<long, FieldElem> x;
        x[f] = FieldElem::one();
        for (auto it = ech.rows().rbegin(); it != ech.rows().rend(); ++it) {
            const long p = it->first;
            FieldElem acc;
            for (const auto& [j, c] : it->second.terms()) {
                if (j == p)
                    continue;
                auto xi = x.find(j);
                if (xi != x.end())
                    acc += c * xi->second;
            }
            if (!acc.is_zero())
                x[p] = -acc;
        }
        SparseVec v;
        for (auto& [j, c] : x)
            v.add_term(j, c);
        kernel.push_back(std::move(v));
    }
    return kernel;
}

FieldMatrix FieldMatrix::identity(int n) {
    FieldMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = FieldElem::one();
    return m;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("matrix size mismatch in product");
    FieldMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int m = 0; m < cols_; ++m) {
            const FieldElem& x = at(i, m);
            if (x.is_zero())
                continue;
            for (int j = 0; j < o.cols_; ++j) {
                const FieldElem& y = o.at(m, j);
                if (!y.is_zero())
                    out.at(i, j) += x * y;
            }
        }
    return out;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix size mismatch in sum");
    FieldMatrix out(rows_, cols_);
    for (size_t t = 0; t < data_.size(); ++t)
        out.data_[t] = data_[t] + o.data_[t];
    return out;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix size mismatch in difference");
    FieldMatrix out(rows_, cols_);
    for (size_t t = 0; t < data_.size(); ++t)
        out.data_[t] = data_[t] - o.data_[t];
    return out;
}

FieldMatrix FieldMatrix::scaled(const FieldElem& c) const {
    FieldMatrix out(rows_, cols_);
    for (size_t t = 0; t < data_.size(); ++t)
        out.data_[t] = data_[t] * c;
    return out;
}

bool FieldMatrix::operator==(const FieldMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

FieldElem FieldMatrix::trace() const {
    FieldElem t;
    for (int i = 0; i < std::min(rows_, cols_); ++i)
        t += at(i, i);
    return t;
}

int FieldMatrix::rank() const {
    FieldMatrix m = *this;
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int piv = -1;
        for (int i = rank; i < rows_; ++i)
            if (!m.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        for (int j = 0; j < cols_; ++j)
            std::swap(m.at(piv, j), m.at(rank, j));
        FieldElem inv = m.at(rank, col).inverse();
        for (int j = col; j < cols_; ++j)
            m.at(rank, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == rank || m.at(i, col).is_zero())
                continue;
            FieldElem f = m.at(i, col);
            for (int j = col; j < cols_; ++j)
                m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

FieldMatrix FieldMatrix::inverse() const {
    if (rows_ != cols_)
        throw std::domain_error("inverse of non-square matrix");
    const int n = rows_;
    FieldMatrix m = *this;
    FieldMatrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!m.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0)
            throw std::domain_error("singular matrix");
        for (int j = 0; j < n; ++j) {
            std::swap(m.at(piv, j), m.at(col, j));
            std::swap(inv.at(piv, j), inv.at(col, j));
        }
        FieldElem f = m.at(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            m.at(col, j) *= f;
            inv.at(col, j) *= f;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || m.at(i, col).is_zero())
                continue;
            FieldElem g = m.at(i, col);
            for (int j = 0; j < n; ++j) {
                m.at(i, j) -= g * m.at(col, j);
                inv.at(i, j) -= g * inv.at(col, j);
            }
        }
    }
    return inv;
}

} // namespace schurq
