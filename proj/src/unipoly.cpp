#include "sdpdeg/unipoly.hpp"

#include <sstream>

namespace sdpdeg {

UniPoly::UniPoly(Rat constant) {
    if (constant != 0) coef_.push_back(std::move(constant));
}

UniPoly::UniPoly(std::vector<Rat> coeffs) : coef_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::x() { return UniPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

Rat UniPoly::coefficient(std::size_t e) const {
    return e < coef_.size() ? coef_[e] : Rat(0);
}

Rat UniPoly::eval(const Int& x) const {
    Rat v = 0;
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) v = v * x + *it;
    return v;
}

void UniPoly::trim() {
    while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (coef_.size() < o.coef_.size()) coef_.resize(o.coef_.size(), Rat(0));
    for (std::size_t i = 0; i < o.coef_.size(); ++i) coef_[i] += o.coef_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (coef_.size() < o.coef_.size()) coef_.resize(o.coef_.size(), Rat(0));
    for (std::size_t i = 0; i < o.coef_.size(); ++i) coef_[i] -= o.coef_[i];
    trim();
    return *this;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coef_) c = -c;
    return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rat> out(a.coef_.size() + b.coef_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coef_.size(); ++i) {
        if (a.coef_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coef_.size(); ++j)
            out[i + j] += a.coef_[i] * b.coef_[j];
    }
    return UniPoly(std::move(out));
}

UniPoly operator*(const UniPoly& a, const Rat& s) {
    if (s == 0) return UniPoly();
    UniPoly r = a;
    for (auto& c : r.coef_) c *= s;
    return r;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = degree(); e >= 0; --e) {
        const Rat& c = coef_[e];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rat a = c > 0 ? c : Rat(-c);
        if (a != 1 || e == 0) os << a.str();
        if (e > 0) {
            if (a != 1) os << "*";
            os << var;
            if (e > 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

UniPoly poly_binomial_shifted(int offset, int k) {
    if (k < 0) throw std::invalid_argument("poly_binomial_shifted: k must be nonnegative");
    UniPoly p = UniPoly::one();
    for (int i = 0; i < k; ++i)
        p *= UniPoly(std::vector<Rat>{Rat(offset - i), Rat(1)});
    Int kfact = 1;
    for (int i = 2; i <= k; ++i) kfact *= i;
    return p * Rat(Int(1), kfact);
}

}  // namespace sdpdeg
