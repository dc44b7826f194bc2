#include "viropatch/coefficients.hpp"

#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace viro::coeffs {

Integer eulerian(int n, long p) {
    if (n < 1) throw std::invalid_argument("eulerian: n must be >= 1");
    if (p < 0 || p > n - 1) return Integer(0);
    Integer sum(0);
    for (long i = 0; i <= p; ++i) {
        Integer term = binomial(n + 1, i) * ipow(Integer(p + 1 - i), n);
        if (i % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

const std::vector<Integer>& eulerian_row(int n) {
    if (n < 1) throw std::invalid_argument("eulerian_row: n must be >= 1");
    static std::mutex mu;
    static std::vector<std::vector<Integer>> rows;  // rows[k] = row for n=k+1
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(rows.size()) < n) {
        int m = static_cast<int>(rows.size()) + 1;
        std::vector<Integer> row(m);
        if (m == 1) {
            row[0] = 1;
        } else {
            const auto& prev = rows[m - 2];
            auto at = [&](long p) -> Integer {
                return (p < 0 || p >= m - 1) ? Integer(0) : prev[p];
            };
            for (long p = 0; p < m; ++p)
                row[p] = Integer(m - p) * at(p - 1) + Integer(p + 1) * at(p);
        }
        rows.push_back(std::move(row));
    }
    return rows[n - 1];
}

Rational hodge_coeff(int n, long p) {
    if (n < 1) throw std::invalid_argument("hodge_coeff: n must be >= 1");
    if (p < 0 || p > n - 1) return Rational(0);
    return make_rational(eulerian_row(n)[p], factorial(n));
}

Integer hodge_number(int n, int p, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("hodge_number: n, d >= 1");
    if (p < 0 || p > n - 1)
        throw std::invalid_argument("hodge_number: p outside 0..n-1");
    Integer sum(0);
    for (long i = 0; i <= n + 1; ++i) {
        long top = static_cast<long>(d) * (p + 1) - static_cast<long>(d - 1) * i - 1;
        Integer term = binomial(n + 1, i) * binomial(top, n);
        if (i % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    if (n - 1 == 2 * p) sum += 1;
    return sum;
}

Integer complex_total_homology(int n, int d) {
    if (n < 1 || d < 1)
        throw std::invalid_argument("complex_total_homology: n, d >= 1");
    Integer sgn = (n + 1) % 2 == 0 ? 1 : -1;  // (-1)^{n+1}
    Integer num = ipow(Integer(d - 1), n + 1) - sgn;
    // (d-1)^{n+1} == (-1)^{n+1} mod d, so the division is exact.
    return num / d + n + sgn;
}

Rational second_diff(int n, long p) {
    return hodge_coeff(n, p + 1) - 2 * hodge_coeff(n, p) + hodge_coeff(n, p - 1);
}

SignProfile sign_profile(int n) {
    if (n < 3) throw std::invalid_argument("sign_profile: n must be >= 3");
    SignProfile prof;
    prof.n = n;
    for (long p = -1; p <= n; ++p) prof.signs[p] = sign_of(second_diff(n, p));

    // ptilde = largest p with D^2 > 0 on all of [-1, p].
    long pt = -1;
    while (pt + 1 <= n && prof.signs.at(pt + 1) == Sign::positive) ++pt;
    prof.ptilde = pt;

    auto fail = [&](const std::string& what) {
        std::ostringstream os;
        os << "sign_profile(" << n << "): lemma pattern violated: " << what;
        throw std::logic_error(os.str());
    };

    long bound = (n % 2 == 1) ? (n - 1) / 2 : n / 2 - 1;
    if (pt < 0 || pt >= bound) fail("ptilde out of range");
    for (long p = -1; p <= pt; ++p)
        if (prof.signs.at(p) != Sign::positive) fail("not positive on [-1, ptilde]");
    for (long p = n - 1 - pt; p <= n; ++p)
        if (prof.signs.at(p) != Sign::positive)
            fail("not positive on [n-1-ptilde, n]");
    if (prof.signs.at(pt + 1) == Sign::positive) fail("sign at ptilde+1");
    if (prof.signs.at(n - 2 - pt) == Sign::positive) fail("sign at n-2-ptilde");
    for (long p = pt + 2; p <= n - 3 - pt; ++p)
        if (prof.signs.at(p) != Sign::negative)
            fail("not negative strictly inside");
    for (long p = -1; p <= n; ++p)
        if (prof.signs.at(p) != prof.signs.at(n - 1 - p)) fail("asymmetric");
    return prof;
}

double polya_midpoint(int n, double x) {
    if (n < 1) throw std::invalid_argument("polya_midpoint: n must be >= 1");
    return std::sqrt(6.0 / (M_PI * (n + 1))) * std::exp(-6.0 * x * x);
}

}  // namespace viro::coeffs
