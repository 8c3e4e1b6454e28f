#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordim/poset.hpp"
#include "ordim/representation.hpp"

namespace ordim {

struct RelationSequence {
    std::vector<std::string> labels;
    std::vector<RelationMatrix> steps; // step 0 first
};

struct StepWitness {
    std::size_t index = 0;  // 1-based step number (step 0 has no witness)
    std::string witness;    // enumerated element d_n, or "{a,b,...}" for a set A_n
    std::vector<std::pair<std::string, std::string>> added_pairs;
};

struct ExtensionTrace {
    RelationSequence sequence;
    std::vector<StepWitness> witnesses;
    Poset limit;
};

struct LimitResult {
    std::optional<Poset> poset; // present iff the limit satisfies the axioms
    RelationMatrix matrix;
    std::string diagnostic;     // empty on success
};

// Pair (x,y) belongs to the limit iff it is present in every step from some
// index onward (set-theoretic liminf); for a finite stored sequence that means
// present in the final step and never dropped after its last appearance.
LimitResult limit_of_sequence(const RelationSequence& s);

// Step n: x <= y newly when x, y incomparable at step n-1, x incomparable to
// d_n in the base, and d_n <= y in the base. When target (x,y) is given the
// enumeration is re-rooted so a d with x incomparable d <= y comes first.
ExtensionTrace debreu_extension_from_dense(
    const Poset& p, std::vector<std::string> d_seq,
    const std::optional<std::pair<std::string, std::string>>& target = std::nullopt);

// Step n: x <= y newly when x, y incomparable at step n-1, x not in A_n and
// y in A_n. `simplified` drops the incomparability test (only sound for
// families derived from a single injective monotone; checked). `custom_base`
// replaces step 0 by any partial order contained in p.
ExtensionTrace debreu_extension_from_sets(const Poset& p, const IncreasingSetFamily& fam,
                                          const std::optional<Poset>& custom_base = std::nullopt,
                                          bool simplified = false);

// Step 0 orders every incomparable pair split by u; the family then finishes
// the job. The limit puts x strictly before y whenever x, y incomparable and
// u(x) < u(y).
ExtensionTrace extension_from_monotone(const Poset& p, const std::vector<Rational>& u,
                                       const IncreasingSetFamily& fam);

// First-differing-row comparison of value tuples. Requires distinct tuples.
Poset lex_extension(const Poset& p, const MultiUtility& mu);

// Total order from the block decomposition X = Y | B | A | Z with value bands
// (-1,0), (0,1), (1,2), (2,3) and rank/(count+1) offsets; extends both p and
// order_on_a.
Poset antichain_extension(const Poset& p, const std::vector<std::string>& a,
                          const Poset& order_on_a);

} // namespace ordim
