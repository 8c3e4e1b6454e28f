#pragma once

#include <optional>
#include <string>

#include "ordim/poset.hpp"
#include "ordim/representation.hpp"

namespace ordim {

enum class DimensionKind { DushnikMiller, Geometrical, Debreu };

const char* dimension_kind_name(DimensionKind k);
std::optional<DimensionKind> dimension_kind_from_name(const std::string& name);

struct DimensionCertificate {
    DimensionKind kind = DimensionKind::DushnikMiller;
    std::size_t value = 0;
    bool exact = true;          // false above the search cap
    std::size_t lower_bound = 0; // largest t refuted (+1); equals value when exact
    Realizer witness;            // linear extensions, |members| == value
    MultiUtility mu_witness;     // rank rows of the witness (the geometrical certificate)
};

// Smallest t admitting a realizer of size t, found by exhaustive critical-pair
// search for n <= exact_cap; above the cap returns a greedy upper bound with
// exact = false. The three kinds coincide on finite posets; the kind only
// selects which witness is considered primary.
DimensionCertificate dimension(const Poset& p, DimensionKind kind = DimensionKind::DushnikMiller,
                               std::size_t exact_cap = 14);

} // namespace ordim
