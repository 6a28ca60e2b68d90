#include "schurq/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schurq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t j = 0; j < parts_.size(); ++j) {
        if (parts_[j] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (j > 0 && parts_[j] > parts_[j - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::is_strict() const {
    for (size_t j = 1; j < parts_.size(); ++j)
        if (parts_[j] >= parts_[j - 1])
            return false;
    return true;
}

bool Partition::is_odd() const {
    for (int p : parts_)
        if (p % 2 == 0)
            return false;
    return true;
}

bool Partition::operator<(const Partition& o) const {
    // canonical order = descending lexicographic on part sequences
    return o.parts_ < parts_;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t j = 0; j < parts_.size(); ++j) {
        if (j)
            os << ",";
        os << parts_[j];
    }
    os << ")";
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    std::string s = text;
    auto l = s.find('(');
    auto r = s.rfind(')');
    if (l == std::string::npos || r == std::string::npos || r < l)
        throw std::invalid_argument("bad partition: " + text);
    s = s.substr(l + 1, r - l - 1);
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty())
            continue;
        parts.push_back(std::stoi(tok));
    }
    return Partition(parts);
}

namespace {

void enumerate_rec(int remaining, int max_part, PartitionFamily family,
                   std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        if (family == PartitionFamily::odd && p % 2 == 0)
            continue;
        prefix.push_back(p);
        int next_max = (family == PartitionFamily::strict) ? p - 1 : p;
        enumerate_rec(remaining - p, next_max, family, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int k, PartitionFamily family) {
    if (k < 0)
        throw std::invalid_argument("partition weight must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate_rec(k, k, family, prefix, out);
    if (k == 0)
        out = {Partition()};
    return out;
}

PartitionStats partition_stats(const Partition& nu, int k) {
    if (nu.weight() != k)
        throw std::invalid_argument("partition weight mismatch: |" + nu.str() +
                                    "| != " + std::to_string(k));
    int l = nu.length();
    int sign = ((k - l) % 2 == 0) ? 1 : -1;
    return PartitionStats{l, sign, sign == 1 ? 0 : 1, l % 2, nu.is_strict()};
}

} // namespace schurq
