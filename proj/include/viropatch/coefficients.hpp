#pragma once

#include <map>
#include <vector>

#include "viropatch/rational.hpp"

namespace viro::coeffs {

// E(n,p): permutations of {1..n} with exactly p ascents. Closed form
//   E(n,p) = sum_{i=0}^{p} (-1)^i C(n+1,i) (p+1-i)^n,
// zero outside 0..n-1.
Integer eulerian(int n, long p);

// Full row E(n,0..n-1), memoized, computed through the recursion
// E(n,p) = (n-p) E(n-1,p-1) + (p+1) E(n-1,p).
const std::vector<Integer>& eulerian_row(int n);

// a^n_p = E(n,p)/n!, zero outside 0..n-1.
Rational hodge_coeff(int n, long p);

// Hodge number h^{p,n-1-p} of a smooth degree-d hypersurface in P^n:
//   sum_{i=0}^{n+1} (-1)^i C(n+1,i) C(d(p+1)-(d-1)i-1, n) + delta_{n-1,2p}.
Integer hodge_number(int n, int p, int d);

// Total Z2 homology of the complex hypersurface:
//   ((d-1)^{n+1} - (-1)^{n+1})/d + n + (-1)^{n+1}.
Integer complex_total_homology(int n, int d);

// Central second difference D^2 a^n_p = a^n_{p+1} - 2 a^n_p + a^n_{p-1}.
Rational second_diff(int n, long p);

enum class Sign { negative = -1, zero = 0, positive = 1 };

inline Sign sign_of(const Rational& q) {
    int s = sgn(q);
    return s > 0 ? Sign::positive : (s < 0 ? Sign::negative : Sign::zero);
}

// Sign pattern of {D^2 a^n_p} on p = -1..n together with the threshold
// index ptilde: positive on [-1, ptilde] and [n-1-ptilde, n], <= 0 at
// ptilde+1 and n-2-ptilde, strictly negative strictly in between.
struct SignProfile {
    int n = 0;
    long ptilde = 0;
    std::map<long, Sign> signs;  // p in -1..n
};

// Computes the profile from exact values and checks every condition;
// throws std::logic_error if the exact signs violate the pattern.
SignProfile sign_profile(int n);

// Gaussian approximation sqrt(6/(pi(n+1))) exp(-6 x^2) of
// a^n_{floor((n-1)/2 + x sqrt(n))}.
double polya_midpoint(int n, double x);

}  // namespace viro::coeffs
