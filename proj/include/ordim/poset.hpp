#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordim/errors.hpp"

namespace ordim {

using RelationMatrix = std::vector<std::uint8_t>; // n*n, row-major, rel[i*n+j] means i <= j

enum class PairClass { LE, GE, EQ, INCOMPARABLE };

namespace rel {

// In-place Warshall closure.
void transitive_closure(RelationMatrix& m, std::size_t n);

// Empty string when m is reflexive, antisymmetric and transitive; otherwise a diagnostic.
std::string partial_order_violation(const RelationMatrix& m, std::size_t n);

bool is_total(const RelationMatrix& m, std::size_t n);

// Hasse edges (i,j): i < j strictly with nothing in between.
std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const RelationMatrix& m,
                                                                      std::size_t n);

} // namespace rel

// A finite partial order over labelled elements. Immutable after construction;
// the constructor rejects any matrix violating the partial-order axioms.
class Poset {
public:
    Poset(std::vector<std::string> labels, RelationMatrix relation);

    static Poset from_cover_relations(const std::vector<std::string>& labels,
                                      const std::vector<std::pair<std::string, std::string>>& covers);
    static Poset chain(const std::vector<std::string>& labels);
    static Poset antichain(const std::vector<std::string>& labels);

    std::size_t size() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    std::size_t index_of(const std::string& label) const; // throws UnknownLabel
    bool has_label(const std::string& label) const { return index_.count(label) != 0; }

    bool leq(std::size_t i, std::size_t j) const { return rel_[i * n_ + j] != 0; }
    bool lt(std::size_t i, std::size_t j) const { return leq(i, j) && !leq(j, i); }
    bool incomparable(std::size_t i, std::size_t j) const { return !leq(i, j) && !leq(j, i); }

    const RelationMatrix& matrix() const { return rel_; }
    bool is_total() const { return rel::is_total(rel_, n_); }

    std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const {
        return rel::transitive_reduction(rel_, n_);
    }

    // Deterministic linear extension: repeatedly remove the minimal element
    // with the smallest label.
    std::vector<std::size_t> topological_order() const;

    Poset induced(const std::vector<std::string>& subset) const;

    bool operator==(const Poset& other) const {
        return labels_ == other.labels_ && rel_ == other.rel_;
    }

private:
    std::vector<std::string> labels_;
    std::size_t n_;
    RelationMatrix rel_;
    std::map<std::string, std::size_t> index_;
};

PairClass classify_pair(const Poset& p, const std::string& x, const std::string& y);

// true iff cand contains every pair of base (and is total when require_linear).
bool is_extension(const Poset& base, const Poset& cand, bool require_linear);

Poset intersect(const std::vector<Poset>& rels);

// Bijection base-label -> other-label preserving the order both ways, if one exists.
std::optional<std::vector<std::pair<std::string, std::string>>>
is_order_isomorphic(const Poset& p, const Poset& q);

enum class DenseMode { Debreu, Upper };

struct DenseSubset {
    std::vector<std::string> elements; // sorted by label
    bool exact = true;
};

// Smallest witness set for the chosen denseness predicate. Exhaustive for
// n <= exact_cap (ties broken by lexicographically least label set),
// greedy set cover above the cap.
DenseSubset minimum_dense_subset(const Poset& p, DenseMode mode, std::size_t exact_cap = 16);

// All ordered pairs (x, y) with x incomparable to y, sorted by index.
std::vector<std::pair<std::size_t, std::size_t>> critical_pairs(const Poset& p);

} // namespace ordim
