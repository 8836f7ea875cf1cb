#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace sdpdeg {

/// Skew-symmetric matrix over a commutative ring R, stored as the strict
/// upper triangle. entry(i,i) = 0 and entry(j,i) = -entry(i,j) are implied.
template <class R>
class SkewMatrix {
  public:
    explicit SkewMatrix(std::size_t size) : n_(size), upper_(size * (size ? size - 1 : 0) / 2) {}

    std::size_t size() const { return n_; }

    void set_upper(std::size_t i, std::size_t j, R value) {
        upper_[index(i, j)] = std::move(value);
    }

    R entry(std::size_t i, std::size_t j) const {
        if (i == j) return R{};
        if (i < j) return upper_[index(i, j)];
        return -upper_[index(j, i)];
    }

    const R& upper(std::size_t i, std::size_t j) const { return upper_[index(i, j)]; }

  private:
    std::size_t index(std::size_t i, std::size_t j) const {
        // row i, column j with i < j
        return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
    }
    std::size_t n_;
    std::vector<R> upper_;
};

namespace detail {

template <class R>
R pfaffian_rec(const SkewMatrix<R>& M, const std::vector<std::size_t>& idx, const R& one) {
    const std::size_t k = idx.size();
    if (k == 0) return one;
    R total{};
    std::vector<std::size_t> rest(k - 2);
    for (std::size_t j = 1; j < k; ++j) {
        std::size_t p = 0;
        for (std::size_t t = 1; t < k; ++t)
            if (t != j) rest[p++] = idx[t];
        R term = M.entry(idx[0], idx[j]) * pfaffian_rec(M, rest, one);
        if (j % 2 == 1)
            total += term;
        else
            total -= term;
    }
    return total;
}

}  // namespace detail

/// Pfaffian by recursive first-row expansion:
/// Pf(M) = sum_{j>=2} (-1)^j M[1,j] Pf(M with rows/cols 1,j removed),
/// Pf of the 0x0 matrix is the ring's 1. Sizes here stay <= 8.
template <class R>
R pfaffian(const SkewMatrix<R>& M, const R& one = R(1)) {
    if (M.size() % 2 != 0) throw std::invalid_argument("pfaffian requires even size");
    std::vector<std::size_t> idx(M.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return detail::pfaffian_rec(M, idx, one);
}

}  // namespace sdpdeg
