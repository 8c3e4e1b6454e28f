#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordim/poset.hpp"
#include "ordim/rational.hpp"

namespace ordim {

enum class ReprKind { None, Plain, Strict, Injective };

const char* repr_kind_name(ReprKind k);
std::optional<ReprKind> repr_kind_from_name(const std::string& name);

// Value table, one row per function, one column per element (index-aligned
// with the poset's labels). `kind` is declarative; validate_representation
// reports what actually holds.
struct MultiUtility {
    std::vector<std::vector<Rational>> rows;
    ReprKind kind = ReprKind::Plain;

    std::size_t row_count() const { return rows.size(); }
};

// Strongest kind the table satisfies, plus a human-readable counterexample
// for each kind it misses.
struct KindReport {
    ReprKind kind = ReprKind::None;
    std::string plain_failure;
    std::string strict_failure;
    std::string injective_failure;
};

KindReport validate_representation(const Poset& p, const MultiUtility& mu);

// Per-row grading against the order: Monotone (x<=y => u(x)<=u(y)),
// Strict (additionally x<y => u(x)<u(y)), Injective (additionally injective).
enum class RowKind { None, Monotone, Strict, Injective };

RowKind classify_monotone_row(const Poset& p, const std::vector<Rational>& row);

// Ordered list of up-closed subsets, stored as membership masks over the
// ground set's label order.
struct IncreasingSetFamily {
    std::vector<std::string> labels;
    std::vector<std::vector<std::uint8_t>> sets;

    static IncreasingSetFamily from_subsets(const Poset& p,
                                            const std::vector<std::vector<std::string>>& subsets);

    std::vector<std::string> set_labels(std::size_t k) const;
};

// Throws NotIncreasing naming the offending set index.
void check_increasing(const Poset& p, const IncreasingSetFamily& fam);

struct Realizer {
    std::vector<Poset> members;
};

// Throws NotRealizer unless every member is a linear extension of p and the
// members intersect to p exactly.
void check_realizer(const Poset& p, const Realizer& r);

// One preimage set per (row, distinct attained value): u_i^-1([v, inf)),
// rows in order, values ascending within a row.
IncreasingSetFamily increasing_family_from_multi_utility(const Poset& p, const MultiUtility& mu);

// u(x) = sum_n r^n * [x in sets[n]], exact rationals. Injective on the ground
// set provided the family separates every pair of distinct elements.
std::vector<Rational> injective_monotone_from_family(const IncreasingSetFamily& fam,
                                                     const Rational& r);

// One injective row per member of the derived family, the m-th row computed
// over the family with sets 1 and m swapped.
MultiUtility injective_multi_utility_from_multi_utility(const Poset& p, const MultiUtility& mu,
                                                        const Rational& r);

Realizer realizer_from_multi_utility(const Poset& p, const MultiUtility& mu);

// Row i = rank of each element inside member i.
MultiUtility realizer_to_injective_multi_utility(const Poset& p, const Realizer& r);

// Member i = total order induced by row i.
Realizer injective_multi_utility_to_realizer(const Poset& p, const MultiUtility& mu);

// v_i = u_i + eps * w with w the rank utility of a fixed linear extension of
// p; eps is shrunk below (minimal positive row gap)/n so weak inequalities of
// every u_i survive. Output has the same row count and validates strict.
MultiUtility strictify_multi_utility(const Poset& p, const MultiUtility& mu, const Rational& eps);

} // namespace ordim
