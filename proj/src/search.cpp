#include "viropatch/search.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "viropatch/coefficients.hpp"

namespace viro::search {

std::size_t Plan::size() const {
    std::size_t s = 1;
    for (const auto& [k, c] : children) s += c->size();
    return s;
}

std::string Plan::serialize() const {
    if (is_leaf()) {
        std::ostringstream os;
        os << leaf << "@" << n;
        return os.str();
    }
    std::ostringstream os;
    os << "cook" << n << "(";
    bool first = true;
    for (const auto& [k, c] : children) {
        if (!first) os << ",";
        first = false;
        os << k << ":" << c->serialize();
    }
    os << ")";
    return os.str();
}

PlanPtr make_leaf(const std::string& name, int n) {
    auto p = std::make_shared<Plan>();
    p->n = n;
    p->leaf = name;
    return p;
}

PlanPtr make_node(int n, std::map<int, PlanPtr> children) {
    auto p = std::make_shared<Plan>();
    p->n = n;
    p->children = std::move(children);
    return p;
}

CoeffVector resolve_leaf(const std::string& name, int n) {
    if (name == "standard") return cooking::standard(n);
    if (name == "brugalle+") {
        if (n != 3) throw std::invalid_argument("brugalle+ is dimension 3");
        return cooking::brugalle(cooking::BrugalleSign::plus);
    }
    if (name == "brugalle-") {
        if (n != 3) throw std::invalid_argument("brugalle- is dimension 3");
        return cooking::brugalle(cooking::BrugalleSign::minus);
    }
    if (name.rfind("interp:", 0) == 0) {
        if (n != 3) throw std::invalid_argument("interp is dimension 3");
        return cooking::interpolate_dim3(parse_rational(name.substr(7)));
    }
    throw std::invalid_argument("unknown registry leaf: " + name);
}

CoeffVector evaluate(const Plan& plan) {
    if (plan.is_leaf()) return resolve_leaf(plan.leaf, plan.n);
    cooking::IngredientSet ing;
    ing.n = plan.n;
    for (int k = 1; k <= plan.n - 1; ++k) {
        auto it = plan.children.find(k);
        if (it == plan.children.end()) {
            std::ostringstream os;
            os << "evaluate: plan node " << plan.n << " missing child " << k;
            throw std::invalid_argument(os.str());
        }
        CoeffVector v = evaluate(*it->second);
        if (v.dim() != k)
            throw std::invalid_argument("evaluate: child dimension mismatch");
        ing.add(std::move(v));
    }
    return cooking::cook(ing);
}

LeafRegistry LeafRegistry::standard_only(int n_max) {
    LeafRegistry r;
    for (int k = 1; k <= n_max; ++k) r.names[k] = {"standard"};
    return r;
}

LeafRegistry LeafRegistry::with_brugalle(int n_max, bool with_interp) {
    LeafRegistry r = standard_only(n_max);
    if (n_max >= 3) {
        r.names[3].push_back("brugalle+");
        r.names[3].push_back("brugalle-");
        if (with_interp) {
            r.names[3].push_back("interp:-1/24");
            r.names[3].push_back("interp:0");
            r.names[3].push_back("interp:5/24");
        }
    }
    return r;
}

namespace {

// Keeps the sorted-by-vector invariant and the minimal witness per vector.
void insert_witness(Frontier& f, Witness w) {
    auto cmp = [](const Witness& a, const Witness& b) { return a.vec < b.vec; };
    auto it = std::lower_bound(f.vectors.begin(), f.vectors.end(), w, cmp);
    if (it != f.vectors.end() && it->vec == w.vec) {
        auto better = [](const PlanPtr& a, const PlanPtr& b) {
            std::size_t sa = a->size(), sb = b->size();
            if (sa != sb) return sa < sb;
            return a->serialize() < b->serialize();
        };
        if (better(w.plan, it->plan)) it->plan = std::move(w.plan);
        return;
    }
    f.vectors.insert(it, std::move(w));
}

Frontier leaf_frontier(int k, const LeafRegistry& leaves) {
    Frontier f;
    f.dim = k;
    auto it = leaves.names.find(k);
    if (it == leaves.names.end() || it->second.empty()) {
        std::ostringstream os;
        os << "leaf registry empty at dimension " << k;
        throw std::invalid_argument(os.str());
    }
    for (const auto& name : it->second)
        insert_witness(f, Witness{resolve_leaf(name, k), make_leaf(name, k)});
    return f;
}

}  // namespace

std::map<int, Frontier> enumerate_frontier(int n_max, const LeafRegistry& leaves,
                                           const SearchLimits& limits) {
    if (n_max < 2) throw std::invalid_argument("enumerate_frontier: n_max >= 2");
    std::map<int, Frontier> out;
    for (int k = 1; k <= std::min(3, n_max); ++k) out[k] = leaf_frontier(k, leaves);
    for (int n = 4; n <= n_max; ++n) {
        Frontier f;
        f.dim = n;
        // odometer over one witness per child dimension
        std::vector<int> idx(n, 0);  // idx[k] for k = 1..n-1
        bool done = false;
        while (!done) {
            cooking::IngredientSet ing;
            ing.n = n;
            std::map<int, PlanPtr> children;
            for (int k = 1; k <= n - 1; ++k) {
                const Witness& w = out[k].vectors[idx[k]];
                ing.add(w.vec);
                children[k] = w.plan;
            }
            insert_witness(f, Witness{cooking::cook(ing), make_node(n, std::move(children))});
            if (f.vectors.size() > limits.frontier_cap) {
                std::ostringstream os;
                os << "frontier cap " << limits.frontier_cap << " exceeded at dimension " << n;
                throw std::runtime_error(os.str());
            }
            done = true;
            for (int k = n - 1; k >= 1; --k) {
                if (++idx[k] < static_cast<int>(out[k].vectors.size())) {
                    done = false;
                    break;
                }
                idx[k] = 0;
            }
        }
        out[n] = std::move(f);
    }
    return out;
}

namespace {

void all_plans(int n, const LeafRegistry& leaves, std::vector<PlanPtr>& acc);

void all_node_plans(int n, const LeafRegistry& leaves, std::vector<PlanPtr>& acc) {
    std::vector<std::vector<PlanPtr>> child_choices(n);
    for (int k = 1; k <= n - 1; ++k) all_plans(k, leaves, child_choices[k]);
    std::vector<int> idx(n, 0);
    bool done = false;
    while (!done) {
        std::map<int, PlanPtr> children;
        for (int k = 1; k <= n - 1; ++k) children[k] = child_choices[k][idx[k]];
        acc.push_back(make_node(n, std::move(children)));
        done = true;
        for (int k = n - 1; k >= 1; --k) {
            if (++idx[k] < static_cast<int>(child_choices[k].size())) {
                done = false;
                break;
            }
            idx[k] = 0;
        }
    }
}

void all_plans(int n, const LeafRegistry& leaves, std::vector<PlanPtr>& acc) {
    auto it = leaves.names.find(n);
    if (it != leaves.names.end())
        for (const auto& name : it->second) acc.push_back(make_leaf(name, n));
    if (n >= 4) all_node_plans(n, leaves, acc);
}

}  // namespace

std::map<int, Frontier> enumerate_brute_force(int n_max, const LeafRegistry& leaves) {
    std::map<int, Frontier> out;
    for (int k = 1; k <= n_max; ++k) {
        std::vector<PlanPtr> plans;
        all_plans(k, leaves, plans);
        Frontier f;
        f.dim = k;
        for (const auto& p : plans) insert_witness(f, Witness{evaluate(*p), p});
        out[k] = std::move(f);
    }
    return out;
}

std::pair<Rational, PlanPtr> best_coefficient(int n, long i, const LeafRegistry& leaves,
                                              const SearchLimits& limits) {
    if (i < 0 || i > n - 1)
        throw std::invalid_argument("best_coefficient: i outside 0..n-1");
    std::map<int, Frontier> frontiers;
    if (n <= 3) {
        frontiers[n] = leaf_frontier(n, leaves);
    } else {
        frontiers = enumerate_frontier(n, leaves, limits);
    }
    const Frontier& f = frontiers.at(n);
    const Witness* best = nullptr;
    for (const Witness& w : f.vectors) {
        if (!best || w.vec.at(i) > best->vec.at(i)) {
            best = &w;
        } else if (w.vec.at(i) == best->vec.at(i)) {
            std::size_t sb = best->plan->size(), sw = w.plan->size();
            if (sw < sb || (sw == sb && w.plan->serialize() < best->plan->serialize()))
                best = &w;
        }
    }
    return {best->vec.at(i), best->plan};
}

std::vector<std::pair<int, Rational>> midpoint_ratio_table(
    const std::vector<int>& n_list, const cooking::IngredientSet& floor) {
    int N = floor.n;
    int n_max = 0;
    for (int n : n_list) {
        if (n % 2 == 0) throw std::invalid_argument("midpoint_ratio_table: n must be odd");
        n_max = std::max(n_max, n);
    }
    // Build the family level by level, reusing previous levels as ingredients.
    std::map<int, CoeffVector> levels;
    for (int k = 1; k <= N; ++k) levels[k] = floor.at(k);
    for (int n = N + 1; n <= n_max; ++n) {
        cooking::IngredientSet ing;
        ing.n = n;
        for (int k = 1; k <= n - 1; ++k) ing.add(levels.at(k));
        levels[n] = cooking::cook(ing);
    }
    std::vector<std::pair<int, Rational>> out;
    for (int n : n_list) {
        long mid = (n - 1) / 2;
        Rational a = coeffs::hodge_coeff(n, mid);
        out.emplace_back(n, (levels.at(n).at(mid) - a) / a);
    }
    return out;
}

}  // namespace viro::search
