#pragma once

#include <map>
#include <string>

#include "viropatch/coeffvector.hpp"

namespace viro::cooking {

// One coefficient vector per dimension k = 1..n-1, the input of cook().
struct IngredientSet {
    int n = 0;                         // target dimension
    std::map<int, CoeffVector> per_dim;

    void add(CoeffVector v);
    const CoeffVector& at(int k) const;
    bool all_maximal() const;
    bool all_symmetric() const;
};

// The coefficient recursion
//   x^n_i = (1/n) (x^{n-1}_i + x^{n-1}_{i-1}
//            + sum_{k=1}^{n-2} sum_{j=0}^{i-1} x^k_j x^{n-1-k}_{i-1-j}).
// Maximality and symmetry of the ingredients are preserved exactly and
// asserted on the output; non-maximal ingredients are allowed and flag
// the output lower_bound_only.
CoeffVector cook(const IngredientSet& ing);

// The vector a^n (maximal, symmetric).
CoeffVector standard(int n);

enum class BrugalleSign { plus, minus };

// Dimension-3 vectors (3/8, 1/4, 3/8) and (1/8, 3/4, 1/8).
CoeffVector brugalle(BrugalleSign s);

// Dimension-3 interpolation (1/6+a, 4/6-2a, 1/6+a) for a in [-1/24, 5/24].
CoeffVector interpolate_dim3(const Rational& a);

SurplusVector surplus(const CoeffVector& v);

// Cook with Brugalle at k=3 and standard elsewhere; the result is asserted
// exactly equal to the closed form a^n_i + (2/n) c D^2 a^{n-4}_{i-2} with
// c = 5/24 (plus) or -1/24 (minus). Requires n >= 8.
CoeffVector cook_h(int n, BrugalleSign s);

// Recursive family: base n=3 is brugalle(plus); the step cooks standard at
// k <= n-2 with the previous level at k = n-1. Asserts
// x_0 >= a^n_0 + (5/24) 3!/n! exactly. Requires n >= 3.
CoeffVector cook_l(int n);

}  // namespace viro::cooking
