#include "sdpdeg/schur_weights.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "sdpdeg/skew.hpp"

namespace sdpdeg {

namespace {

std::mutex bracket_mutex;
std::map<std::vector<int>, Int> bracket_cache;

Int bracket_pair(int i, int j) {
    // ((i,j)) = sum_{t=j+1}^{i} C(i+j, t)
    Int s = 0;
    for (int t = j + 1; t <= i; ++t) s += binomial(Int(i + j), t);
    return s;
}

Int bracket_impl(const std::vector<int>& lam);

Int bracket_lookup(std::vector<int> lam) {
    {
        std::lock_guard<std::mutex> lock(bracket_mutex);
        auto it = bracket_cache.find(lam);
        if (it != bracket_cache.end()) return it->second;
    }
    Int v = bracket_impl(lam);
    std::lock_guard<std::mutex> lock(bracket_mutex);
    return bracket_cache.emplace(std::move(lam), std::move(v)).first->second;
}

Int bracket_impl(const std::vector<int>& lam) {
    const std::size_t k = lam.size();
    if (k == 0) return 1;
    if (k == 1) return pow2(lam[0]);
    if (k == 2) return bracket_pair(lam[0], lam[1]);
    if (k % 2 == 0) {
        SkewMatrix<Int> M(k);
        for (std::size_t s = 0; s < k; ++s)
            for (std::size_t t = s + 1; t < k; ++t)
                M.set_upper(s, t, bracket_pair(lam[s], lam[t]));
        return pfaffian(M);
    }
    // odd length: alternating expansion over removed parts
    Int total = 0;
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<int> rest;
        rest.reserve(k - 1);
        for (std::size_t t = 0; t < k; ++t)
            if (t != j) rest.push_back(lam[t]);
        Int term = pow2(lam[j]) * bracket_lookup(std::move(rest));
        if (j % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

}  // namespace

Int bracket(const Partition& lambda) {
    if (!lambda.strict())
        throw std::invalid_argument("bracket requires strict partition, got " + lambda.str());
    return bracket_lookup(lambda.parts());
}

namespace {

std::mutex bseries_mutex;
std::map<int, UniPoly> bsingle_cache;  // node-stable: callers hold references
std::map<std::pair<int, int>, UniPoly> bpair_cache;

// b_i(n) = 2^{-i} sum_{a+b=i} C(n,a) C(n+b-1,b): the h^i coefficient of
// (1+h/2)^n (1-h/2)^{-n} with both factors expanded in polynomial binomials.
UniPoly b_single_impl(int i) {
    UniPoly acc;
    for (int a = 0; a <= i; ++a) {
        int b = i - a;
        acc += poly_binomial_shifted(0, a) * poly_binomial_shifted(b - 1, b);
    }
    return acc * Rat(Int(1), pow2(i));
}

}  // namespace

const UniPoly& b_single(int i) {
    if (i < 0) throw std::invalid_argument("b_single requires i >= 0");
    {
        std::lock_guard<std::mutex> lock(bseries_mutex);
        auto it = bsingle_cache.find(i);
        if (it != bsingle_cache.end()) return it->second;
    }
    UniPoly p = b_single_impl(i);
    std::lock_guard<std::mutex> lock(bseries_mutex);
    return bsingle_cache.emplace(i, std::move(p)).first->second;
}

const UniPoly& b_pair(int i, int j) {
    if (i <= j || j < 0) throw std::invalid_argument("b_pair requires i > j >= 0");
    {
        std::lock_guard<std::mutex> lock(bseries_mutex);
        auto it = bpair_cache.find({i, j});
        if (it != bpair_cache.end()) return it->second;
    }
    UniPoly r;
    if (j == 0) {
        r = b_single(i);
    } else {
        r = b_single(i) * b_single(j);
        for (int k = 1; k <= j; ++k) {
            UniPoly term = (b_single(i + k) * b_single(j - k)) * Rat(2);
            if (k % 2 == 1)
                r -= term;
            else
                r += term;
        }
    }
    std::lock_guard<std::mutex> lock(bseries_mutex);
    return bpair_cache.emplace(std::make_pair(i, j), std::move(r)).first->second;
}

UniPoly b_general(const Partition& lambda) {
    if (!lambda.strict())
        throw std::invalid_argument("b_general requires strict partition, got " + lambda.str());
    const std::size_t k = lambda.length();
    if (k == 0) return UniPoly::one();
    if (k % 2 == 0) {
        SkewMatrix<UniPoly> M(k);
        for (std::size_t s = 0; s < k; ++s)
            for (std::size_t t = s + 1; t < k; ++t)
                M.set_upper(s, t, b_pair(lambda.part(s), lambda.part(t)));
        return pfaffian(M, UniPoly::one());
    }
    if (lambda.part(k - 1) > 0) return b_general(lambda.append_zero());
    return b_general(lambda.drop_last());
}

std::vector<UniPoly> b_series(int truncation_order) {
    std::vector<UniPoly> out;
    out.reserve(truncation_order + 1);
    for (int i = 0; i <= truncation_order; ++i) out.push_back(b_single(i));
    return out;
}

}  // namespace sdpdeg
