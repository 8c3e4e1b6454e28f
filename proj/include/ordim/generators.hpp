#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordim/poset.hpp"
#include "ordim/representation.hpp"

namespace ordim {

enum class Family {
    Figure1,
    Prop2Grid,
    Prop2Extension,
    Theorem12Grid,
    Prop14Grid,
    LexGrid,
    StandardExample,
    MajorizationGrid,
    MajorizationEmbedding,
};

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

struct FamilySpec {
    Family family = Family::Figure1;
    long k = 0;     // level count for the +/-1..+/-k grids; embedding level count
    long n = 0;     // standard_example size; majorization tuple length |Omega|
    long denom = 0; // majorization denominator
    long a = 0;     // lex grid extents
    long b = 0;
};

struct Generated {
    Poset poset;
    std::optional<MultiUtility> mu; // the family's canonical multi-utility, when it has one
};

Generated generate(const FamilySpec& spec);

struct Embedding {
    Poset sub;                                                  // induced majorization subposet
    std::vector<std::pair<std::string, std::string>> mapping;   // source label -> distribution label
    long denom = 0;
};

// 2k distributions in the 3-outcome majorization order, order-isomorphic to
// the +/-1..+/-k two-signs grid; verified before return.
Embedding embed_theorem12_in_majorization(long k);

// 2(n-1) distributions in the n-outcome majorization order, order-isomorphic
// to standard_example(n-1); the dimension lower-bound witness. 4 <= n <= 6.
Embedding embed_standard_example_in_majorization(long n);

} // namespace ordim
