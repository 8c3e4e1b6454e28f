#pragma once

#include <string>
#include <vector>

#include "ordim/extension.hpp"
#include "ordim/poset.hpp"

namespace ordim {

// Deterministic Hasse diagram: nodes sorted by label, edges = transitive
// reduction, both emitted in sorted order.
std::string dot_hasse(const Poset& p, const std::string& graph_name = "poset");

// One DOT document per step; cover edges absent from the previous step's
// reduction are drawn red.
std::vector<std::string> dot_trace_panels(const ExtensionTrace& t);

} // namespace ordim
