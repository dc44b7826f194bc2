#include "viropatch/limit.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "viropatch/coefficients.hpp"

namespace viro::limit {

Rational HalfIntDistribution::total() const {
    Rational s(0);
    for (const auto& [h, m] : mass_by_half_units) s += m;
    return s;
}

Rational HalfIntDistribution::mean_times2() const {
    Rational s(0);
    for (const auto& [h, m] : mass_by_half_units) s += Rational(h) * m;
    return s;
}

Rational HalfIntDistribution::variance() const {
    Rational mu2 = mean_times2();  // 2*mean
    Rational s(0);
    for (const auto& [h, m] : mass_by_half_units) {
        Rational dev2 = (Rational(h) - mu2) / 2;  // i - mean
        s += dev2 * dev2 * m;
    }
    return s;
}

const std::vector<Rational>& DistributionSeries::exact_level(int k) const {
    if (k < 1 || k > exact_horizon || k >= static_cast<int>(exact.size()))
        throw std::out_of_range("exact_level: beyond exact horizon");
    return exact[k];
}

const std::vector<double>& DistributionSeries::level(int k) const {
    if (k < 1 || k >= static_cast<int>(approx.size()))
        throw std::out_of_range("level: not computed");
    return approx[k];
}

CoeffVector DistributionSeries::exact_vector(int k) const {
    const auto& row = exact_level(k);
    CoeffVector v(k);
    for (long i = 0; i < k; ++i) v.set(i, row[i]);
    return v;
}

namespace {

void check_floor(const IngredientSet& floor) {
    if (floor.n < 1) throw std::invalid_argument("floor: N >= 1 required");
    for (int k = 1; k <= floor.n; ++k) {
        const CoeffVector& v = floor.at(k);
        if (v.dim() != k) throw std::invalid_argument("floor: dimension mismatch");
        if (!v.is_maximal())
            throw std::invalid_argument("floor ingredient not maximal");
        if (!v.is_symmetric())
            throw std::invalid_argument("floor ingredient not symmetric");
    }
}

}  // namespace

DistributionSeries iterate_distribution(const IngredientSet& floor, int n_target,
                                        int exact_horizon) {
    check_floor(floor);
    int N = floor.n;
    if (n_target < N) throw std::invalid_argument("n_target below floor");

    DistributionSeries out;
    out.N = N;
    out.exact_horizon = std::min(exact_horizon, n_target);
    out.exact.resize(std::min(n_target, exact_horizon) + 1);
    out.approx.resize(n_target + 1);

    for (int k = 1; k <= N; ++k) {
        std::vector<Rational> row(k);
        for (long i = 0; i < k; ++i) row[i] = floor.at(k).at(i);
        std::vector<double> drow(k);
        for (long i = 0; i < k; ++i) drow[i] = to_double(row[i]);
        if (k <= exact_horizon) out.exact[k] = std::move(row);
        out.approx[k] = std::move(drow);
    }

    for (int n = N + 1; n <= n_target; ++n) {
        if (n <= exact_horizon) {
            const auto& top = out.exact[n - 1];
            std::vector<Rational> row(n);
            for (long i = 0; i < n; ++i) {
                Rational acc = (i < n - 1 ? top[i] : Rational(0)) +
                               (i >= 1 ? top[i - 1] : Rational(0));
                for (int k = 1; k <= n - 2; ++k) {
                    const auto& a = out.exact[k];
                    const auto& b = out.exact[n - 1 - k];
                    long jlo = std::max<long>(0, i - 1 - (n - 2 - k));
                    long jhi = std::min<long>(k - 1, i - 1);
                    for (long j = jlo; j <= jhi; ++j) acc += a[j] * b[i - 1 - j];
                }
                row[i] = acc / n;
            }
            std::vector<double> drow(n);
            for (long i = 0; i < n; ++i) drow[i] = to_double(row[i]);
            out.exact[n] = std::move(row);
            out.approx[n] = std::move(drow);
        } else {
            const auto& top = out.approx[n - 1];
            std::vector<double> row(n);
            for (long i = 0; i < n; ++i) {
                double acc = (i < n - 1 ? top[i] : 0.0) + (i >= 1 ? top[i - 1] : 0.0);
                for (int k = 1; k <= n - 2; ++k) {
                    const auto& a = out.approx[k];
                    const auto& b = out.approx[n - 1 - k];
                    long jlo = std::max<long>(0, i - 1 - (n - 2 - k));
                    long jhi = std::min<long>(k - 1, i - 1);
                    for (long j = jlo; j <= jhi; ++j) acc += a[j] * b[i - 1 - j];
                }
                row[i] = acc / n;
            }
            out.approx[n] = std::move(row);
        }
    }
    return out;
}

HalfIntDistribution shift_distribution(const CoeffVector& x, int k) {
    if (x.dim() != k - 1)
        throw std::invalid_argument("shift_distribution: x must have dimension k-1");
    HalfIntDistribution d;
    for (const auto& [j, m] : x.entries()) d.mass_by_half_units[2 * j - (k - 2)] = m;
    return d;
}

Rational sigma_squared(const IngredientSet& floor) {
    check_floor(floor);
    int N = floor.n;
    Rational inner = make_rational(1, 4);
    for (int k = 1; k <= N; ++k) {
        const CoeffVector& v = floor.at(k);
        for (const auto& [i, m] : v.entries()) {
            Rational dev = make_rational(2 * i - (k - 1), 2);  // i - (k-1)/2
            inner += m * dev * dev;
        }
    }
    return make_rational(2, static_cast<long>(N + 1) * (N + 2)) * inner;
}

double gaussian_error(const IngredientSet& floor, int n, int exact_horizon) {
    if (n < floor.n + 1)
        throw std::invalid_argument("gaussian_error: n must be >= N+1");
    DistributionSeries s = iterate_distribution(floor, n, exact_horizon);
    double sigma2 = to_double(sigma_squared(floor));
    double sigma = std::sqrt(sigma2);
    const auto& row = s.level(n);
    double sup = 0.0;
    for (long m = -2; m <= n + 1; ++m) {
        double x = (m >= 0 && m < n) ? row[m] : 0.0;
        double c = (n - 1) / 2.0 - m;
        double g = std::exp(-c * c / (2.0 * n * sigma2)) /
                   (sigma * std::sqrt(2.0 * M_PI * n));
        sup = std::max(sup, std::abs(x - g));
    }
    return std::sqrt(static_cast<double>(n)) * sup;
}

SplitMoments split_moments(int N, int n, int i) {
    if (N < 1 || n < 1 || i < 1 || i > N)
        throw std::invalid_argument("split_moments: need N >= 1, n >= 1, 1 <= i <= N");
    // mean[k] = E[alpha_i^k], m2[k] = E[(alpha_i^k)^2]
    std::vector<Rational> mean(n + 1), m2(n + 1);
    for (int k = 1; k <= std::min(N, n); ++k) {
        mean[k] = Rational(k == i ? 1 : 0);
        m2[k] = mean[k];
    }
    Rational mean_acc(0), m2_acc(0);
    std::vector<Rational> mean_prefix(n + 1);  // sum_{k<=m} mean[k]
    for (int k = 1; k <= std::min(N, n); ++k) {
        mean_acc += mean[k];
        mean_prefix[k] = mean_acc;
        m2_acc += m2[k];
    }
    for (int m = N + 1; m <= n; ++m) {
        // alpha^m = alpha~^K + alpha~^{m-K}, K uniform on {1..m-1}
        int nn = m - 1;
        mean[m] = Rational(2) * mean_prefix[nn] / nn;
        Rational cross(0);
        for (int k = 1; k <= nn; ++k) cross += mean[k] * mean[nn + 1 - k];
        m2[m] = Rational(2) * (m2_acc + cross) / nn;
        mean_prefix[m] = mean_prefix[nn] + mean[m];
        mean_acc += mean[m];
        m2_acc += m2[m];
    }
    SplitMoments out;
    out.N = N;
    out.n = n;
    out.mean = mean[n];
    out.second_moment = m2[n];
    out.variance = m2[n] - mean[n] * mean[n];
    return out;
}

namespace {

int simulate_alpha(int N, int n, int i, std::mt19937_64& rng) {
    if (n <= N) return n == i ? 1 : 0;
    std::uniform_int_distribution<int> dist(1, n - 1);
    int k = dist(rng);
    return simulate_alpha(N, k, i, rng) + simulate_alpha(N, n - k, i, rng);
}

}  // namespace

double simulate_split_mean(int N, int n, int i, std::size_t trials, unsigned long seed) {
    std::mt19937_64 rng(seed);
    double acc = 0.0;
    for (std::size_t t = 0; t < trials; ++t) acc += simulate_alpha(N, n, i, rng);
    return acc / static_cast<double>(trials);
}

}  // namespace viro::limit
