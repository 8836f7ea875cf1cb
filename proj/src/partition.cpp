#include "sdpdeg/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sdpdeg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::strict() const {
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i] <= parts_[i + 1]) return false;
    return true;
}

Partition Partition::add(const Partition& other) const {
    if (parts_.size() != other.parts_.size())
        throw std::invalid_argument("partition add: length mismatch");
    std::vector<int> out(parts_.size());
    for (std::size_t i = 0; i < parts_.size(); ++i) out[i] = parts_[i] + other.parts_[i];
    return Partition(std::move(out));
}

Partition Partition::append_zero() const {
    std::vector<int> out = parts_;
    out.push_back(0);
    return Partition(std::move(out));
}

Partition Partition::drop_last() const {
    if (parts_.empty()) throw std::invalid_argument("drop_last on empty partition");
    std::vector<int> out(parts_.begin(), parts_.end() - 1);
    return Partition(std::move(out));
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

Partition rho(int k) {
    if (k < 1) throw std::invalid_argument("rho requires k >= 1");
    std::vector<int> p(k);
    for (int i = 0; i < k; ++i) p[i] = k - i;
    return Partition(std::move(p));
}

Partition rho0(int k) {
    if (k < 0) throw std::invalid_argument("rho0 requires k >= 0");
    std::vector<int> p(k + 1);
    for (int i = 0; i <= k; ++i) p[i] = k - i;
    return Partition(std::move(p));
}

namespace {

void enumerate_rec(int length, int max_part, int budget, std::vector<int>& prefix,
                   std::vector<Partition>& out) {
    if (static_cast<int>(prefix.size()) == length) {
        out.emplace_back(prefix);
        return;
    }
    int hi = std::min(max_part, budget);
    for (int v = hi; v >= 0; --v) {
        prefix.push_back(v);
        enumerate_rec(length, v, budget - v, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int length, int max_weight) {
    if (length < 1) throw std::invalid_argument("enumerate_partitions requires length >= 1");
    if (max_weight < 0) throw std::invalid_argument("enumerate_partitions requires weight >= 0");
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate_rec(length, max_weight, max_weight, prefix, out);
    return out;
}

}  // namespace sdpdeg
