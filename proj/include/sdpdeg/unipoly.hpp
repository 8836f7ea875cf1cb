#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sdpdeg/numbers.hpp"

namespace sdpdeg {

/// Dense univariate polynomial with exact rational coefficients.
/// coefficient(e) is the coefficient of x^e; the variable is the matrix
/// size n throughout the degree engine. The zero polynomial has an empty
/// coefficient list; otherwise the leading coefficient is nonzero.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(Rat constant);
    explicit UniPoly(std::vector<Rat> coeffs);

    static UniPoly zero() { return UniPoly(); }
    static UniPoly one() { return UniPoly(Rat(1)); }
    /// The monomial x.
    static UniPoly x();

    bool is_zero() const { return coef_.empty(); }
    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    Rat coefficient(std::size_t e) const;
    const std::vector<Rat>& coefficients() const { return coef_; }

    Rat eval(const Int& x) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly operator-() const;
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    friend UniPoly operator*(const UniPoly& a, const Rat& s);

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coef_ == b.coef_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    std::string str(const std::string& var = "n") const;

  private:
    void trim();
    std::vector<Rat> coef_;
};

/// C(n + offset, k) as a degree-k polynomial in n:
/// prod_{i=0}^{k-1} (n + offset - i) / k!.
UniPoly poly_binomial_shifted(int offset, int k);

}  // namespace sdpdeg
