#include "schurq/omega.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace schurq {

OmegaElem OmegaElem::zero(int degree) {
    OmegaElem z;
    z.degree_ = degree;
    return z;
}

OmegaElem OmegaElem::p_monomial(const Partition& mu) {
    if (!mu.is_odd())
        throw std::invalid_argument("p-monomial index must be an odd partition: " +
                                    mu.str());
    OmegaElem e;
    e.degree_ = mu.weight();
    e.coords_[mu] = FieldElem::one();
    return e;
}

FieldElem OmegaElem::coeff(const Partition& mu) const {
    auto it = coords_.find(mu);
    return it == coords_.end() ? FieldElem::zero() : it->second;
}

OmegaElem OmegaElem::operator+(const OmegaElem& o) const {
    if (!is_zero() && !o.is_zero() && degree_ != o.degree_)
        throw std::invalid_argument("degree mismatch in Omega sum");
    OmegaElem out = *this;
    if (out.is_zero())
        out.degree_ = o.degree_;
    for (const auto& [mu, c] : o.coords_) {
        auto it = out.coords_.find(mu);
        if (it == out.coords_.end()) {
            out.coords_[mu] = c;
        } else {
            it->second += c;
            if (it->second.is_zero())
                out.coords_.erase(it);
        }
    }
    return out;
}

OmegaElem OmegaElem::operator-(const OmegaElem& o) const {
    return *this + o.scaled(FieldElem(-1));
}

OmegaElem OmegaElem::scaled(const FieldElem& c) const {
    OmegaElem out = OmegaElem::zero(degree_);
    if (c.is_zero())
        return out;
    for (const auto& [mu, v] : coords_)
        out.coords_[mu] = v * c;
    return out;
}

static Partition concat_sorted(const Partition& x, const Partition& y) {
    std::vector<int> parts = x.parts();
    parts.insert(parts.end(), y.parts().begin(), y.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(parts);
}

OmegaElem OmegaElem::operator*(const OmegaElem& o) const {
    OmegaElem out = OmegaElem::zero(degree_ + o.degree_);
    for (const auto& [mu, c] : coords_)
        for (const auto& [nu, d] : o.coords_) {
            Partition key = concat_sorted(mu, nu);
            FieldElem v = c * d;
            auto it = out.coords_.find(key);
            if (it == out.coords_.end()) {
                out.coords_[key] = v;
            } else {
                it->second += v;
                if (it->second.is_zero())
                    out.coords_.erase(it);
            }
        }
    return out;
}

bool OmegaElem::operator==(const OmegaElem& o) const {
    if (is_zero() && o.is_zero())
        return true;
    return degree_ == o.degree_ && coords_ == o.coords_;
}

FieldElem OmegaElem::evaluate(const std::vector<FieldElem>& xs) const {
    // power sums of the point, indexed by exponent
    std::map<int, FieldElem> psums;
    auto power_sum = [&](int r) {
        auto it = psums.find(r);
        if (it != psums.end())
            return it->second;
        FieldElem s;
        for (const auto& x : xs)
            s += pow(x, r);
        psums[r] = s;
        return s;
    };
    FieldElem total;
    for (const auto& [mu, c] : coords_) {
        FieldElem term = c;
        for (int part : mu.parts())
            term *= power_sum(part);
        total += term;
    }
    return total;
}

std::string OmegaElem::str() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mu, c] : coords_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.short_str() << ")*p" << mu.str();
    }
    return os.str();
}

namespace {

// Graded truncated series: component [d] is homogeneous of degree d.
using Series = std::vector<OmegaElem>;

Series series_mul(const Series& f, const Series& g, int max_deg) {
    Series out(max_deg + 1);
    for (int d = 0; d <= max_deg; ++d)
        out[d] = OmegaElem::zero(d);
    for (int a = 0; a <= max_deg; ++a) {
        if (f[a].is_zero())
            continue;
        for (int b = 0; a + b <= max_deg; ++b) {
            if (g[b].is_zero())
                continue;
            out[a + b] = out[a + b] + f[a] * g[b];
        }
    }
    return out;
}

// exp(2 sum_{s odd <= max_deg} p_s t^s / s) truncated at degree max_deg;
// component r is q_r.
Series q_series(int max_deg) {
    Series f(max_deg + 1);
    for (int d = 0; d <= max_deg; ++d)
        f[d] = OmegaElem::zero(d);
    for (int s = 1; s <= max_deg; s += 2)
        f[s] = OmegaElem::p_monomial(Partition({s})).scaled(FieldElem::rational(2, s));

    Series out(max_deg + 1);
    for (int d = 0; d <= max_deg; ++d)
        out[d] = OmegaElem::zero(d);
    out[0] = OmegaElem::unit();

    Series power = f; // f^m / m!
    Rational factorial(1);
    for (int m = 1; m <= max_deg; ++m) {
        factorial *= m;
        if (m > 1)
            power = series_mul(power, f, max_deg);
        FieldElem inv_fact = FieldElem(Rational(1) / factorial);
        for (int d = m; d <= max_deg; ++d)
            out[d] = out[d] + power[d].scaled(inv_fact);
    }
    return out;
}

OmegaElem pfaffian(const std::vector<std::vector<OmegaElem>>& a,
                   std::vector<int> idx) {
    if (idx.empty())
        return OmegaElem::unit();
    // expansion along the row of the first active index
    const int i0 = idx[0];
    OmegaElem total;
    bool started = false;
    for (size_t t = 1; t < idx.size(); ++t) {
        std::vector<int> rest;
        for (size_t s = 1; s < idx.size(); ++s)
            if (s != t)
                rest.push_back(idx[s]);
        OmegaElem term = a[i0][idx[t]] * pfaffian(a, rest);
        if (t % 2 == 0)
            term = term.scaled(FieldElem(-1));
        total = started ? total + term : term;
        started = true;
    }
    return total;
}

} // namespace

OmegaElem q_gen(int r) {
    if (r < 0)
        throw std::invalid_argument("q_gen needs r >= 0");
    if (r == 0)
        return OmegaElem::unit();
    return q_series(r)[r];
}

OmegaElem schur_q_two_row(int a, int b) {
    if (a <= b || b < 0)
        throw std::invalid_argument("two-row function needs a > b >= 0");
    auto qs = q_series(a + b);
    if (b == 0)
        return qs[a];
    OmegaElem out = qs[a] * qs[b];
    for (int i = 1; i <= b; ++i) {
        OmegaElem term = (qs[a + i] * qs[b - i]).scaled(FieldElem(2));
        out = (i % 2 == 1) ? out - term : out + term;
    }
    return out;
}

OmegaElem schur_q(const Partition& lambda) {
    if (!lambda.is_strict())
        throw std::invalid_argument("Schur Q-function index must be strict: " +
                                    lambda.str());
    if (lambda.empty())
        return OmegaElem::unit();
    std::vector<int> parts = lambda.parts();
    if (parts.size() == 1)
        return q_gen(parts[0]);
    if (parts.size() % 2 == 1)
        parts.push_back(0); // pad to even length
    const int m = static_cast<int>(parts.size());
    std::vector<std::vector<OmegaElem>> a(m, std::vector<OmegaElem>(m));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            a[i][j] = schur_q_two_row(parts[i], parts[j]);
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i)
        idx[i] = i;
    return pfaffian(a, idx);
}

FieldMatrix transition_matrix(int k) {
    if (k < 1)
        throw std::invalid_argument("transition matrix needs k >= 1");
    auto dps = enumerate_partitions(k, PartitionFamily::strict);
    auto ops = enumerate_partitions(k, PartitionFamily::odd);
    if (dps.size() != ops.size())
        throw std::logic_error("strict/odd partition counts differ");
    FieldMatrix m(static_cast<int>(dps.size()), static_cast<int>(ops.size()));
    for (size_t i = 0; i < dps.size(); ++i) {
        OmegaElem q = schur_q(dps[i]);
        for (size_t j = 0; j < ops.size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = q.coeff(ops[j]);
    }
    return m;
}

const FieldElem& CharTable::value(const Partition& nu, const Partition& mu) const {
    for (size_t i = 0; i < rows.size(); ++i)
        if (rows[i] == nu)
            for (size_t j = 0; j < cols.size(); ++j)
                if (cols[j] == mu)
                    return entries.at(static_cast<int>(i), static_cast<int>(j));
    throw std::invalid_argument("no table entry for " + nu.str() + ", " + mu.str());
}

std::string CharTable::grid() const {
    std::vector<std::vector<std::string>> cells(rows.size() + 1);
    cells[0].push_back(kind == TableKind::phi ? "phi" : "psi");
    for (const auto& mu : cols)
        cells[0].push_back(mu.str());
    for (size_t i = 0; i < rows.size(); ++i) {
        cells[i + 1].push_back(rows[i].str());
        for (size_t j = 0; j < cols.size(); ++j)
            cells[i + 1].push_back(
                entries.at(static_cast<int>(i), static_cast<int>(j)).short_str());
    }
    std::vector<size_t> width(cols.size() + 1, 0);
    for (const auto& row : cells)
        for (size_t j = 0; j < row.size(); ++j)
            width[j] = std::max(width[j], row[j].size());
    std::ostringstream os;
    for (const auto& row : cells) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j)
                os << "  ";
            os << std::string(width[j] - row[j].size(), ' ') << row[j];
        }
        os << "\n";
    }
    return os.str();
}

namespace {

CharTable build_table(int k, TableKind kind) {
    if (k < 1)
        throw std::invalid_argument("character table needs k >= 1");
    CharTable t;
    t.k = k;
    t.kind = kind;
    t.rows = enumerate_partitions(k, PartitionFamily::strict);
    t.cols = enumerate_partitions(k, PartitionFamily::odd);
    FieldMatrix m = transition_matrix(k);
    FieldMatrix minv = m.inverse(); // p_mu = sum_nu minv[mu][nu] Q_nu
    const int nrows = static_cast<int>(t.rows.size());
    t.entries = FieldMatrix(nrows, nrows);
    for (int i = 0; i < nrows; ++i) {
        auto nu_stats = partition_stats(t.rows[i], k);
        for (int j = 0; j < nrows; ++j) {
            auto mu_stats = partition_stats(t.cols[j], k);
            FieldElem scale =
                kind == TableKind::phi
                    ? FieldElem::sqrt2_pow(mu_stats.length + nu_stats.length +
                                           nu_stats.epsilon)
                    : FieldElem::two_pow(mu_stats.length) *
                          FieldElem::sqrt2_pow(nu_stats.length + nu_stats.d);
            t.entries.at(i, j) = scale * minv.at(j, i);
        }
    }
    return t;
}

} // namespace

CharTable phi_table(int k) { return build_table(k, TableKind::phi); }
CharTable psi_table(int k) { return build_table(k, TableKind::psi); }

bool verify_table_identity(const CharTable& table) {
    const int k = table.k;
    std::vector<OmegaElem> qfuns;
    qfuns.reserve(table.rows.size());
    for (const auto& nu : table.rows)
        qfuns.push_back(schur_q(nu));
    for (size_t j = 0; j < table.cols.size(); ++j) {
        const Partition& mu = table.cols[j];
        auto mu_stats = partition_stats(mu, k);
        FieldElem lhs_scale = table.kind == TableKind::phi
                                  ? FieldElem::sqrt2_pow(mu_stats.length)
                                  : FieldElem::two_pow(mu_stats.length);
        OmegaElem lhs = OmegaElem::p_monomial(mu).scaled(lhs_scale);
        OmegaElem rhs = OmegaElem::zero(k);
        for (size_t i = 0; i < table.rows.size(); ++i) {
            auto nu_stats = partition_stats(table.rows[i], k);
            long e = table.kind == TableKind::phi
                         ? -(nu_stats.length + nu_stats.epsilon)
                         : -(nu_stats.length + nu_stats.d);
            FieldElem c = table.at(static_cast<int>(i), static_cast<int>(j)) *
                          FieldElem::sqrt2_pow(e);
            rhs = rhs + qfuns[i].scaled(c);
        }
        if (lhs != rhs)
            return false;
    }
    return true;
}

} // namespace schurq
