#include "ordim/dot.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ordim {

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

using Edge = std::pair<std::string, std::string>;

std::vector<Edge> sorted_cover_edges(const std::vector<std::string>& labels,
                                     const RelationMatrix& m) {
    std::size_t n = labels.size();
    std::vector<Edge> edges;
    for (auto [i, j] : rel::transitive_reduction(m, n)) edges.emplace_back(labels[i], labels[j]);
    std::sort(edges.begin(), edges.end());
    return edges;
}

void emit(std::ostringstream& os, const std::string& name, const std::vector<std::string>& labels,
          const std::vector<Edge>& edges, const std::set<Edge>& fresh) {
    os << "digraph " << name << " {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=circle];\n";
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& l : sorted) os << "  " << quote(l) << ";\n";
    for (const auto& e : edges) {
        os << "  " << quote(e.first) << " -> " << quote(e.second);
        if (fresh.count(e)) os << " [color=red]";
        os << ";\n";
    }
    os << "}\n";
}

} // namespace

std::string dot_hasse(const Poset& p, const std::string& graph_name) {
    std::ostringstream os;
    emit(os, graph_name, p.labels(), sorted_cover_edges(p.labels(), p.matrix()), {});
    return os.str();
}

std::vector<std::string> dot_trace_panels(const ExtensionTrace& t) {
    std::vector<std::string> out;
    const auto& labels = t.sequence.labels;
    std::vector<Edge> prev;
    for (std::size_t k = 0; k < t.sequence.steps.size(); ++k) {
        auto edges = sorted_cover_edges(labels, t.sequence.steps[k]);
        std::set<Edge> fresh;
        if (k > 0)
            for (const auto& e : edges)
                if (!std::binary_search(prev.begin(), prev.end(), e)) fresh.insert(e);
        std::ostringstream os;
        emit(os, "step" + std::to_string(k), labels, edges, fresh);
        out.push_back(os.str());
        prev = std::move(edges);
    }
    return out;
}

} // namespace ordim
