#pragma once

#include <vector>

#include "sdpdeg/numbers.hpp"
#include "sdpdeg/partition.hpp"
#include "sdpdeg/unipoly.hpp"

namespace sdpdeg {

/// The integer weight ((lambda)) attached to a strict partition:
///   k = 1:    ((i))   = 2^i
///   k = 2:    ((i,j)) = sum_{t=j+1}^{i} C(i+j, t)
///   k even:   Pfaffian of the skew matrix with (s,t) entry ((lambda_s, lambda_t))
///   k odd:    sum_j (-1)^{j-1} 2^{lambda_j} ((lambda with lambda_j removed))
///   (( ))     = 1
/// Values are keyed by the partition including trailing zeros: ((2)) = 4
/// while ((2,0)) = 3, both used as written. Memoized; thread-safe.
Int bracket(const Partition& lambda);

/// Coefficient of h^i in (1+h/2)^n / (1-h/2)^n as an exact polynomial in n:
/// b_i(n) = 2^{-i} sum_{a+b=i} C(n,a) C(n+b-1,b). Memoized.
const UniPoly& b_single(int i);

/// b_{(i,j)} with i > j >= 0:
///   j = 0: b_i
///   else:  b_i b_j - 2 sum_{k=1}^{j} (-1)^{k-1} b_{i+k} b_{j-k}
const UniPoly& b_pair(int i, int j);

/// Specialization b_lambda(n) of the Schur Q-function at equal Chern roots,
/// by the three-case rule: even length -> Pfaffian of (b_{(l_s,l_t)});
/// odd length with positive last part -> append a zero; odd length ending
/// in zero -> drop it; empty partition -> 1.
UniPoly b_general(const Partition& lambda);

/// b_0 .. b_T as a truncated series (used by the series-identity checks).
std::vector<UniPoly> b_series(int truncation_order);

}  // namespace sdpdeg
