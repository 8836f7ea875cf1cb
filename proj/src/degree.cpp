#include "sdpdeg/degree.hpp"

#include <sstream>

#include "sdpdeg/partition.hpp"
#include "sdpdeg/schur_weights.hpp"

namespace sdpdeg {

std::string method_name(Method m) {
    switch (m) {
        case Method::none: return "none";
        case Method::closed_form: return "closed_form";
        case Method::smooth: return "smooth";
        case Method::dual_smooth: return "dual_smooth";
        case Method::complementary_dim: return "complementary_dim";
        case Method::conjecture: return "conjecture";
        case Method::class_formula: return "class_formula";
    }
    return "?";
}

CrossCheckError::CrossCheckError(DegreeQuery q, std::vector<std::pair<Method, Int>> rs)
    : std::runtime_error([&] {
          std::ostringstream os;
          os << "cross-check mismatch for delta(" << q.m << "," << q.n << "," << q.r << "):";
          for (const auto& [meth, val] : rs) os << " " << method_name(meth) << "=" << val.str();
          return os.str();
      }()),
      query(q),
      routes(std::move(rs)) {}

namespace {

long binom2l(int a) { return static_cast<long>(a) * (a + 1) / 2; }  // C(a+1, 2)

}  // namespace

void validate_query(const DegreeQuery& q) {
    if (q.n < 2) throw std::invalid_argument("degree query requires n >= 2");
    if (q.r < 1 || q.r > q.n - 1)
        throw std::invalid_argument("degree query requires 1 <= r <= n-1");
    if (q.m < 1 || q.m > binom2l(q.n) - 1)
        throw std::invalid_argument("degree query requires 1 <= m <= C(n+1,2)-1");
}

bool pataki_check(int m, int n, int r) {
    return binom2l(n - r) <= m && binom2l(r) <= binom2l(n) - m;
}

std::pair<int, int> pataki_interval(int m, int n) {
    int lo = n, hi = 0;
    for (int r = 1; r <= n - 1; ++r)
        if (pataki_check(m, n, r)) {
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
    return {lo, hi};
}

DegreeQuery dual_query(int m, int n, int r) {
    return DegreeQuery{static_cast<int>(binom2l(n) - m), n, n - r};
}

bool in_smooth_range(int m, int n, int r) {
    return binom2l(n - r) <= m && m < binom2l(n - r + 1);
}

Int determinantal_degree(int n, int r) {
    if (r < 1 || r > n - 1) throw std::invalid_argument("determinantal_degree: 1 <= r <= n-1");
    Rat v = 1;
    for (int j = 0; j <= n - r - 1; ++j)
        v *= Rat(binomial(Int(n + j), n - r - j), binomial(Int(2 * j + 1), j));
    return to_int(v, "determinantal_degree");
}

namespace {

// The shared alternating sum of Theorem "smooth" / the intersection number:
//   sum_lambda (-1)^{|lambda|} ((lambda+rho0(k-1))) b_{lambda+rho(k)}(n) C(top, d-|lambda|)
// over partitions lambda of length k = n-r and weight <= d = m - C(n-r+1,2).
Int degree_sum(int m, int n, int r, const Int& top) {
    const int k = n - r;
    const int d = m - static_cast<int>(binom2l(k));
    const Partition stair0 = rho0(k - 1);
    const Partition stair = rho(k);
    Rat total = 0;
    for (const Partition& lam : enumerate_partitions(k, d)) {
        const int w = lam.weight();
        Int weight = bracket(lam.add(stair0));
        Rat bval = b_general(lam.add(stair)).eval(Int(n));
        Rat term = Rat(weight) * bval * Rat(binomial(top, d - w));
        if (w % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return to_int(total, "degree formula");
}

}  // namespace

Int euler_number(int m, int n, int r) {
    if (r < 1 || r > n - 1) throw std::invalid_argument("euler_number: 1 <= r <= n-1");
    if (m < binom2l(n - r)) return 0;
    return degree_sum(m, n, r, Int(m + 1));
}

namespace {

Int delta_formula(int m, int n, int r) {
    const int d = m - static_cast<int>(binom2l(n - r));
    Int v = degree_sum(m, n, r, Int(m - 1));
    return d % 2 == 0 ? v : Int(-v);
}

}  // namespace

Int delta_smooth(int m, int n, int r) {
    if (!in_smooth_range(m, n, r))
        throw std::domain_error("delta_smooth: not in smooth range");
    return delta_formula(m, n, r);
}

Int delta_conjecture(int m, int n, int r) {
    if (!pataki_check(m, n, r))
        throw std::domain_error("delta_conjecture: Pataki-infeasible query");
    return delta_formula(m, n, r);
}

Int delta_via_class(int m, int n, int r) {
    if (!in_smooth_range(m, n, r))
        throw std::domain_error("delta_via_class: not in smooth range");
    Int diff = euler_number(m, n, r) - 2 * euler_number(m - 1, n, r) + euler_number(m - 2, n, r);
    int d = m - static_cast<int>(binom2l(n - r));
    return d % 2 == 0 ? diff : Int(-diff);
}

std::optional<Int> delta_closed(int m, int n, int r) {
    if (m == binom2l(n - r))  // complementary dimension: point count
        return determinantal_degree(n, r);
    if (r == n - 1 && m <= n)
        return pow2(m - 1) * binomial(Int(n), m);
    if (r == n - 2) {
        switch (m) {
            case 3: return binomial(Int(n + 1), 3);
            case 4: return Int(6) * binomial(Int(n + 1), 4);
            case 5: return Int(27) * binomial(Int(n + 1), 5) + Int(3) * binomial(Int(n + 1), 4);
            default: break;
        }
    }
    if (r == n - 3) {
        switch (m) {
            case 6:
                return Int(2) * binomial(Int(n + 2), 6) + binomial(Int(n + 2), 5);
            case 7:
                return Int(28) * binomial(Int(n + 3), 7) - Int(12) * binomial(Int(n + 2), 6);
            case 8:
                return Int(248) * binomial(Int(n + 4), 8) - Int(320) * binomial(Int(n + 3), 7) +
                       Int(84) * binomial(Int(n + 2), 6);
            case 9:
                return Int(1794) * binomial(Int(n + 5), 9) - Int(3778) * binomial(Int(n + 4), 8) +
                       Int(2436) * binomial(Int(n + 3), 7) - Int(448) * binomial(Int(n + 2), 6);
            default: break;
        }
    }
    return std::nullopt;
}

DegreeResult delta(int m, int n, int r) {
    DegreeQuery q{m, n, r};
    validate_query(q);
    DegreeResult res;
    if (!pataki_check(m, n, r)) {
        res.value = 0;
        res.pataki_ok = false;
        res.method = Method::none;
        return res;
    }
    res.pataki_ok = true;

    std::vector<std::pair<Method, Int>> routes;
    const bool smooth_here = in_smooth_range(m, n, r);
    const DegreeQuery dq = dual_query(m, n, r);
    const bool smooth_dual = in_smooth_range(dq.m, dq.n, dq.r);

    if (smooth_here) routes.emplace_back(Method::smooth, delta_smooth(m, n, r));
    if (smooth_dual) routes.emplace_back(Method::dual_smooth, delta_smooth(dq.m, dq.n, dq.r));
    if (!smooth_here) routes.emplace_back(Method::conjecture, delta_conjecture(m, n, r));
    if (auto closed = delta_closed(m, n, r)) {
        // the complementary-dimension case is labeled as such
        Method label = (m == binom2l(n - r)) ? Method::complementary_dim : Method::closed_form;
        routes.emplace_back(label, *closed);
    }
    if (smooth_here) routes.emplace_back(Method::class_formula, delta_via_class(m, n, r));

    for (const auto& [meth, val] : routes)
        if (val != routes.front().second) throw CrossCheckError(q, routes);

    Method primary = Method::conjecture;
    if (smooth_here)
        primary = Method::smooth;
    else if (smooth_dual)
        primary = Method::dual_smooth;
    res.method = primary;
    res.conjectural = (primary == Method::conjecture);
    for (const auto& [meth, val] : routes)
        if (meth == primary) res.value = val;
    res.cross_checks = std::move(routes);
    return res;
}

DegreeTable degree_table(int n_max, int m_max) {
    DegreeTable t;
    for (int n = 2; n <= n_max; ++n) {
        int m_hi = static_cast<int>(binom2l(n)) - 1;
        if (m_max >= 0) m_hi = std::min(m_hi, m_max);
        for (int m = 1; m <= m_hi; ++m)
            for (int r = n - 1; r >= 1; --r)
                if (pataki_check(m, n, r))
                    t.rows.push_back({m, n, r, delta(m, n, r)});
        // row sums over the full feasible m range (independent of m_max so the
        // totals always match the bidegree evaluated at s = t = 1)
        for (int r = n - 1; r >= 1; --r) {
            Int sum = 0;
            bool any = false;
            for (int m = 1; m <= binom2l(n) - 1; ++m)
                if (pataki_check(m, n, r)) {
                    sum += delta(m, n, r).value;
                    any = true;
                }
            if (any) t.row_sums.push_back({n, r, sum});
        }
    }
    return t;
}

}  // namespace sdpdeg
