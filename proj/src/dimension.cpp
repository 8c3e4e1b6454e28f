#include "ordim/dimension.hpp"

#include <algorithm>

namespace ordim {

const char* dimension_kind_name(DimensionKind k) {
    switch (k) {
        case DimensionKind::DushnikMiller: return "dushnik_miller";
        case DimensionKind::Geometrical: return "geometrical";
        case DimensionKind::Debreu: return "debreu";
    }
    return "dushnik_miller";
}

std::optional<DimensionKind> dimension_kind_from_name(const std::string& name) {
    if (name == "dushnik_miller") return DimensionKind::DushnikMiller;
    if (name == "geometrical") return DimensionKind::Geometrical;
    if (name == "debreu") return DimensionKind::Debreu;
    return std::nullopt;
}

namespace {

// Adds (a,b) to a closed partial-order matrix and re-closes incrementally.
// Returns false (matrix trashed) if antisymmetry breaks.
bool add_pair_closed(RelationMatrix& m, std::size_t n, std::size_t a, std::size_t b) {
    if (m[b * n + a]) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (m[i * n + a])
            for (std::size_t j = 0; j < n; ++j)
                if (m[b * n + j]) {
                    if (m[j * n + i] && i != j) return false;
                    m[i * n + j] = 1;
                }
    return true;
}

struct Search {
    const Poset& p;
    std::size_t n;
    std::vector<std::pair<std::size_t, std::size_t>> pairs; // obligations: reverse (x,y) somewhere
    std::vector<RelationMatrix> colors;
    std::size_t t;

    bool dfs(std::size_t k, std::size_t used) {
        if (k == pairs.size()) return true;
        auto [x, y] = pairs[k];
        for (std::size_t c = 0; c < used; ++c)
            if (colors[c][y * n + x]) return dfs(k + 1, used);
        std::size_t limit = std::min(used + 1, t);
        for (std::size_t c = 0; c < limit; ++c) {
            RelationMatrix saved = colors[c];
            if (add_pair_closed(colors[c], n, y, x) &&
                dfs(k + 1, std::max(used, c + 1)))
                return true;
            colors[c] = std::move(saved);
        }
        return false;
    }
};

// Any linear extension of a closed matrix, min-label-first Kahn.
Poset linearize(const Poset& base, const RelationMatrix& m) {
    Poset q(base.labels(), m);
    auto order = q.topological_order();
    std::size_t n = base.size();
    RelationMatrix out(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) out[order[a] * n + order[b]] = 1;
    return Poset(base.labels(), std::move(out));
}

} // namespace

DimensionCertificate dimension(const Poset& p, DimensionKind kind, std::size_t exact_cap) {
    DimensionCertificate cert;
    cert.kind = kind;
    std::size_t n = p.size();
    auto pairs = critical_pairs(p);

    if (pairs.empty()) { // total order (or a single element)
        cert.value = 1;
        cert.exact = true;
        cert.lower_bound = 1;
        cert.witness.members.push_back(linearize(p, p.matrix()));
    } else if (n <= exact_cap) {
        for (std::size_t t = 2;; ++t) {
            Search s{p, n, pairs, std::vector<RelationMatrix>(t, p.matrix()), t};
            if (s.dfs(0, 0)) {
                cert.value = t;
                cert.exact = true;
                cert.lower_bound = t;
                for (auto& m : s.colors) cert.witness.members.push_back(linearize(p, m));
                break;
            }
        }
    } else {
        // Greedy cover: each new member reverses every still-open obligation
        // it can accommodate, in order.
        std::vector<bool> covered(pairs.size(), false);
        std::size_t open = pairs.size();
        while (open > 0) {
            RelationMatrix m = p.matrix();
            bool progress = false;
            for (std::size_t k = 0; k < pairs.size(); ++k) {
                if (covered[k]) continue;
                auto [x, y] = pairs[k];
                if (m[y * n + x]) {
                    covered[k] = true;
                    --open;
                    progress = true;
                    continue;
                }
                RelationMatrix saved = m;
                if (add_pair_closed(m, n, y, x)) {
                    covered[k] = true;
                    --open;
                    progress = true;
                } else {
                    m = std::move(saved);
                }
            }
            if (!progress) throw Error(ErrorCode::ConstructionFailed, "greedy cover stalled");
            cert.witness.members.push_back(linearize(p, m));
        }
        cert.value = cert.witness.members.size();
        cert.exact = false;
        cert.lower_bound = 2;
    }

    check_realizer(p, cert.witness);
    cert.mu_witness = realizer_to_injective_multi_utility(p, cert.witness);
    return cert;
}

} // namespace ordim
