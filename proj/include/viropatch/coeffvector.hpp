#pragma once

#include <map>
#include <string>

#include "viropatch/rational.hpp"

namespace viro::cooking {

// Asymptotic Betti coefficients of a hypersurface family in ambient
// dimension n: a finitely supported map i -> x_i over Z, zero outside
// 0..n-1 and non-negative on the support.
class CoeffVector {
  public:
    CoeffVector() = default;
    explicit CoeffVector(int n, std::string name = "") : n_(n), name_(std::move(name)) {}

    int dim() const { return n_; }
    const std::string& name() const { return name_; }
    void set_name(std::string s) { name_ = std::move(s); }

    const Rational& at(long i) const {
        static const Rational zero(0);
        auto it = x_.find(i);
        return it == x_.end() ? zero : it->second;
    }

    void set(long i, Rational v);

    const std::map<long, Rational>& entries() const { return x_; }

    Rational sum() const;
    bool is_maximal() const { return sum() == 1; }
    bool is_symmetric() const;

    // Set when the vector came from cooking non-maximal ingredients: the
    // entries are then only lower bounds on the asymptotic coefficients.
    bool lower_bound_only = false;

    bool operator==(const CoeffVector& o) const { return n_ == o.n_ && x_ == o.x_; }
    bool operator<(const CoeffVector& o) const;

  private:
    int n_ = 0;
    std::map<long, Rational> x_;
    std::string name_;
};

// t_i = x_i - a^n_i; sums to zero exactly when the vector is maximal.
struct SurplusVector {
    int n = 0;
    std::map<long, Rational> t;
};

}  // namespace viro::cooking
