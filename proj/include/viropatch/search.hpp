#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "viropatch/cooking.hpp"

namespace viro::search {

using cooking::CoeffVector;

// A recursive choice of ingredient families: a registry leaf or a node
// cooking one child per dimension k = 1..n-1.
struct Plan {
    // Leaf: name non-empty ("standard", "brugalle+", "brugalle-", "interp:a"),
    // children empty. Node: name empty, one child per k = 1..n-1.
    int n = 0;
    std::string leaf;
    std::map<int, std::shared_ptr<const Plan>> children;

    bool is_leaf() const { return !leaf.empty(); }
    std::size_t size() const;          // node count
    std::string serialize() const;     // canonical text form, also the JSON-ish key
};

using PlanPtr = std::shared_ptr<const Plan>;

PlanPtr make_leaf(const std::string& name, int n);
PlanPtr make_node(int n, std::map<int, PlanPtr> children);

// Resolves a registry name at dimension n. Throws on unknown names or
// dimension mismatches (brugalle/interp are dimension 3 only).
CoeffVector resolve_leaf(const std::string& name, int n);

// Deterministic exact evaluation; node plans evaluate children and cook.
CoeffVector evaluate(const Plan& plan);

// The set of leaf families the search may use at each dimension.
struct LeafRegistry {
    // names per dimension; dimension -> list of registry names
    std::map<int, std::vector<std::string>> names;

    static LeafRegistry standard_only(int n_max);
    // standard at every k, brugalle+/- at 3; with_interp adds the default
    // rational grid a in {-1/24, 0, 5/24} at dimension 3.
    static LeafRegistry with_brugalle(int n_max, bool with_interp = false);
};

struct Witness {
    CoeffVector vec;
    PlanPtr plan;
};

// Distinct vectors of one dimension with minimal witness plans.
struct Frontier {
    int dim = 0;
    std::vector<Witness> vectors;  // sorted by vector for determinism
};

struct SearchLimits {
    std::size_t frontier_cap = 100000;  // per dimension
};

// Frontier-based dynamic programming over all recursive cooking plans:
// frontier[k] holds exactly the distinct vectors reachable at dimension k
// (for k <= 3 the leaf set itself). Throws std::runtime_error when a
// frontier would exceed the cap.
std::map<int, Frontier> enumerate_frontier(int n_max, const LeafRegistry& leaves,
                                           const SearchLimits& limits = {});

// Exhaustive oracle: enumerates every plan tree (no deduplication) and
// collects distinct vectors; exponential, for cross-checking only.
std::map<int, Frontier> enumerate_brute_force(int n_max, const LeafRegistry& leaves);

// Maximal x^n_i over the enumerated frontier with a witness plan; ties
// break toward smaller plans, then lexicographic serialization.
std::pair<Rational, PlanPtr> best_coefficient(int n, long i, const LeafRegistry& leaves,
                                              const SearchLimits& limits = {});

// Exact midpoint surplus ratios (x^n_mid - a^n_mid)/a^n_mid of the family
// built with the given floor ingredients at k <= N and its own previous
// levels above; n_list entries must be odd.
std::vector<std::pair<int, Rational>> midpoint_ratio_table(
    const std::vector<int>& n_list, const cooking::IngredientSet& floor);

}  // namespace viro::search
