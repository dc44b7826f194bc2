#include "viropatch/cooking.hpp"

#include <sstream>
#include <stdexcept>

#include "viropatch/coefficients.hpp"

namespace viro::cooking {

void CoeffVector::set(long i, Rational v) {
    if (sgn(v) < 0) throw std::invalid_argument("CoeffVector: negative entry");
    if (i < 0 || i > n_ - 1) {
        if (sgn(v) != 0)
            throw std::invalid_argument("CoeffVector: support outside 0..n-1");
        return;
    }
    if (sgn(v) == 0)
        x_.erase(i);
    else
        x_[i] = std::move(v);
}

Rational CoeffVector::sum() const {
    Rational s(0);
    for (const auto& [i, v] : x_) s += v;
    return s;
}

bool CoeffVector::is_symmetric() const {
    for (const auto& [i, v] : x_)
        if (at(n_ - 1 - i) != v) return false;
    return true;
}

bool CoeffVector::operator<(const CoeffVector& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    auto a = x_.begin();
    auto b = o.x_.begin();
    for (; a != x_.end() && b != o.x_.end(); ++a, ++b) {
        if (a->first != b->first) return a->first < b->first;
        if (a->second != b->second) return a->second < b->second;
    }
    return a == x_.end() && b != o.x_.end();
}

void IngredientSet::add(CoeffVector v) {
    int k = v.dim();
    per_dim[k] = std::move(v);
}

const CoeffVector& IngredientSet::at(int k) const {
    auto it = per_dim.find(k);
    if (it == per_dim.end()) {
        std::ostringstream os;
        os << "IngredientSet: missing dimension " << k;
        throw std::invalid_argument(os.str());
    }
    return it->second;
}

bool IngredientSet::all_maximal() const {
    for (const auto& [k, v] : per_dim)
        if (!v.is_maximal()) return false;
    return true;
}

bool IngredientSet::all_symmetric() const {
    for (const auto& [k, v] : per_dim)
        if (!v.is_symmetric()) return false;
    return true;
}

CoeffVector cook(const IngredientSet& ing) {
    int n = ing.n;
    if (n < 2) throw std::invalid_argument("cook: target dimension must be >= 2");
    for (int k = 1; k <= n - 1; ++k) {
        const CoeffVector& v = ing.at(k);
        if (v.dim() != k) {
            std::ostringstream os;
            os << "cook: ingredient at " << k << " has dimension " << v.dim();
            throw std::invalid_argument(os.str());
        }
    }

    CoeffVector out(n);
    const CoeffVector& top = ing.at(n - 1);
    for (long i = 0; i <= n - 1; ++i) {
        Rational acc = top.at(i) + top.at(i - 1);
        for (int k = 1; k <= n - 2; ++k) {
            const CoeffVector& a = ing.at(k);
            const CoeffVector& b = ing.at(n - 1 - k);
            for (const auto& [j, aj] : a.entries()) {
                if (j > i - 1) break;
                acc += aj * b.at(i - 1 - j);
            }
        }
        out.set(i, acc / n);
    }

    bool maximal = ing.all_maximal();
    if (maximal && out.sum() != 1)
        throw std::logic_error("cook: maximality not conserved");
    if (ing.all_symmetric() && !out.is_symmetric())
        throw std::logic_error("cook: symmetry not conserved");
    out.lower_bound_only = !maximal;
    for (int k = 1; k <= n - 1; ++k)
        out.lower_bound_only = out.lower_bound_only || ing.at(k).lower_bound_only;
    return out;
}

CoeffVector standard(int n) {
    if (n < 1) throw std::invalid_argument("standard: n must be >= 1");
    CoeffVector v(n, "standard");
    for (long p = 0; p <= n - 1; ++p) v.set(p, coeffs::hodge_coeff(n, p));
    return v;
}

CoeffVector brugalle(BrugalleSign s) {
    CoeffVector v(3, s == BrugalleSign::plus ? "brugalle+" : "brugalle-");
    if (s == BrugalleSign::plus) {
        v.set(0, make_rational(3, 8));
        v.set(1, make_rational(1, 4));
        v.set(2, make_rational(3, 8));
    } else {
        v.set(0, make_rational(1, 8));
        v.set(1, make_rational(3, 4));
        v.set(2, make_rational(1, 8));
    }
    return v;
}

CoeffVector interpolate_dim3(const Rational& a) {
    if (a < make_rational(-1, 24) || a > make_rational(5, 24))
        throw std::invalid_argument("interpolate_dim3: a outside [-1/24, 5/24]");
    CoeffVector v(3, "interp:" + rational_str(a));
    v.set(0, make_rational(1, 6) + a);
    v.set(1, make_rational(4, 6) - 2 * a);
    v.set(2, make_rational(1, 6) + a);
    return v;
}

SurplusVector surplus(const CoeffVector& v) {
    SurplusVector s;
    s.n = v.dim();
    for (long i = 0; i <= s.n - 1; ++i) {
        Rational t = v.at(i) - coeffs::hodge_coeff(s.n, i);
        if (sgn(t) != 0) s.t[i] = t;
    }
    return s;
}

static IngredientSet standard_set(int n) {
    IngredientSet ing;
    ing.n = n;
    for (int k = 1; k <= n - 1; ++k) ing.add(standard(k));
    return ing;
}

CoeffVector cook_h(int n, BrugalleSign s) {
    if (n < 8) throw std::invalid_argument("cook_h: n must be >= 8");
    IngredientSet ing = standard_set(n);
    ing.add(brugalle(s));
    CoeffVector out = cook(ing);

    Rational c = s == BrugalleSign::plus ? make_rational(5, 24) : make_rational(-1, 24);
    for (long i = 0; i <= n - 1; ++i) {
        Rational closed = coeffs::hodge_coeff(n, i) +
                          make_rational(2, n) * c * coeffs::second_diff(n - 4, i - 2);
        if (out.at(i) != closed)
            throw std::logic_error("cook_h: closed form mismatch");
    }
    out.set_name(s == BrugalleSign::plus ? "H+" : "H-");
    return out;
}

CoeffVector cook_l(int n) {
    if (n < 3) throw std::invalid_argument("cook_l: n must be >= 3");
    CoeffVector prev = brugalle(BrugalleSign::plus);
    for (int m = 4; m <= n; ++m) {
        IngredientSet ing = standard_set(m);
        ing.add(prev);
        prev = cook(ing);
    }
    Rational bound = coeffs::hodge_coeff(n, 0) +
                     make_rational(5, 24) * make_rational(factorial(3), factorial(n));
    if (prev.at(0) < bound)
        throw std::logic_error("cook_l: x_0 bound violated");
    prev.set_name("L");
    return prev;
}

}  // namespace viro::cooking
