#pragma once

#include <map>
#include <vector>

#include "viropatch/cooking.hpp"

namespace viro::limit {

using cooking::CoeffVector;
using cooking::IngredientSet;

// Distribution over half-integers; keys are twice the support point, so
// mass at i in (1/2)Z is stored under 2i.
struct HalfIntDistribution {
    std::map<long, Rational> mass_by_half_units;

    Rational total() const;
    Rational mean_times2() const;      // exact 2*mean
    Rational variance() const;         // exact, around the exact mean
};

// The coefficient vectors x^k for k = 1..n_target generated by the
// convolution recursion with floor x^1..x^N; exact rationals up to
// exact_horizon, double precision beyond.
struct DistributionSeries {
    int N = 0;
    int exact_horizon = 0;
    // exact[k] has size k (indices 0..k-1), present for k <= exact_horizon
    std::vector<std::vector<Rational>> exact;   // index k, [0] unused
    std::vector<std::vector<double>> approx;    // every level, index k

    const std::vector<Rational>& exact_level(int k) const;
    const std::vector<double>& level(int k) const;
    CoeffVector exact_vector(int k) const;
};

inline constexpr int kDefaultExactHorizon = 60;

// Runs x^n_i = (1/n) sum_{k=0}^{n-1} sum_j x^k_j x^{n-1-k}_{i-1-j} with the
// artificial floor x^0 = (1/2 at -1, 1/2 at 0) kept internal. Ingredients
// must be maximal and symmetric for k = 1..N.
DistributionSeries iterate_distribution(const IngredientSet& floor, int n_target,
                                        int exact_horizon = kDefaultExactHorizon);

// Recentred copy of a dimension-(k-1) vector: mass at i = x^{k-1}_{i+(k-2)/2}.
HalfIntDistribution shift_distribution(const CoeffVector& x, int k);

// sigma^2 = 2/((N+1)(N+2)) (1/4 + sum_{k<=N} sum_i x^k_i (i-(k-1)/2)^2).
Rational sigma_squared(const IngredientSet& floor);

// sqrt(n) * sup_m |x^n_m - gaussian(m; sigma^2)| in double precision, with
// gaussian(m) = exp(-((n-1)/2 - m)^2/(2 n sigma^2)) / (sigma sqrt(2 pi n)).
double gaussian_error(const IngredientSet& floor, int n,
                      int exact_horizon = kDefaultExactHorizon);

// Exact moments of the block-count alpha_i^n of the recursive splitting of
// {1..n} into blocks of size <= N (computed for i = 1; for n >= N+1 the
// mean is 2n/((N+1)N)).
struct SplitMoments {
    int N = 0;
    int n = 0;
    Rational mean;
    Rational second_moment;
    Rational variance;
};

SplitMoments split_moments(int N, int n, int i = 1);

// Monte-Carlo estimate of E[alpha_i^n] over the given number of simulated
// splitting trials; test oracle for split_moments.
double simulate_split_mean(int N, int n, int i, std::size_t trials,
                           unsigned long seed = 20260809);

}  // namespace viro::limit
