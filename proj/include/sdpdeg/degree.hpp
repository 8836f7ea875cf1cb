#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sdpdeg/numbers.hpp"

namespace sdpdeg {

/// Query for the algebraic degree delta(m, n, r): m constraints, n x n
/// symmetric matrices, optimal rank r of Y. Valid when
/// 1 <= m <= C(n+1,2)-1 and 1 <= r <= n-1.
struct DegreeQuery {
    int m = 0;
    int n = 0;
    int r = 0;
};

enum class Method {
    none,             // Pataki-infeasible, value 0
    closed_form,      // one of the fixed closed-form families
    smooth,           // general formula inside the smooth range
    dual_smooth,      // general formula on the dual query
    complementary_dim,// m = C(n-r+1,2): degree of the determinantal variety
    conjecture,       // general formula outside the smooth range
    class_formula,    // Euler-number second difference (cross-check only)
};

std::string method_name(Method m);

struct DegreeResult {
    Int value;
    bool pataki_ok = false;
    Method method = Method::none;
    bool conjectural = false;
    std::vector<std::pair<Method, Int>> cross_checks;
};

/// Thrown when independently evaluated routes disagree; carries all values.
class CrossCheckError : public std::runtime_error {
  public:
    CrossCheckError(DegreeQuery q, std::vector<std::pair<Method, Int>> routes);
    const DegreeQuery query;
    const std::vector<std::pair<Method, Int>> routes;
};

void validate_query(const DegreeQuery& q);

/// Pataki's inequalities: C(n-r+1,2) <= m and C(r+1,2) <= C(n+1,2) - m.
bool pataki_check(int m, int n, int r);

/// Feasible rank interval [lo, hi] for (m, n); empty -> lo > hi.
std::pair<int, int> pataki_interval(int m, int n);

/// (C(n+1,2) - m, n, n - r); an involution.
DegreeQuery dual_query(int m, int n, int r);

/// C(n-r+1,2) <= m < C(n-r+2,2), where the rank-r locus is smooth.
bool in_smooth_range(int m, int n, int r);

/// Degree of the rank-<=r determinantal variety in the full matrix space:
/// prod_{j=0}^{n-r-1} C(n+j, n-r-j) / C(2j+1, j); the product is exact.
Int determinantal_degree(int n, int r);

/// Specialized Pragacz intersection number e(m, n, r); equals the Euler
/// number of the rank locus when that locus is smooth. Returns 0 when
/// m < C(n-r+1,2).
Int euler_number(int m, int n, int r);

/// General formula inside the smooth range (throws outside it).
Int delta_smooth(int m, int n, int r);

/// Same expression evaluated outside the smooth range (conjectural).
Int delta_conjecture(int m, int n, int r);

/// Class-Formula route: (-1)^{m-C(n-r+1,2)} (e(m) - 2 e(m-1) + e(m-2));
/// defined on the smooth range only.
Int delta_via_class(int m, int n, int r);

/// Closed forms: r = n-1 (any feasible m); r = n-2 with m in {3,4,5};
/// r = n-3 with m in {6,...,9}; plus the complementary-dimension case
/// m = C(n-r+1,2). Empty when no family applies.
std::optional<Int> delta_closed(int m, int n, int r);

/// Dispatcher: 0 when Pataki fails; otherwise evaluates every available
/// route (smooth, dual_smooth, conjecture outside the smooth range,
/// closed form, complementary dimension, class formula), records them in
/// cross_checks, and requires exact agreement.
DegreeResult delta(int m, int n, int r);

struct TableRow {
    int m, n, r;
    DegreeResult result;
};

struct TableRowSum {
    int n, r;
    Int sum;  // sum of delta(m, n, r) over the Pataki-feasible m range
};

struct DegreeTable {
    std::vector<TableRow> rows;
    std::vector<TableRowSum> row_sums;
};

/// All Pataki-feasible (m, n, r) for 2 <= n <= n_max and
/// 1 <= m <= min(m_max, C(n+1,2)-1), with per-(n, r) row sums.
/// m_max < 0 means the full range per n.
DegreeTable degree_table(int n_max, int m_max = -1);

}  // namespace sdpdeg
