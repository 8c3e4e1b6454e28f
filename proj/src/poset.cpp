#include "ordim/poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ordim {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DuplicateLabel: return "DuplicateLabel";
        case ErrorCode::UnknownLabel: return "UnknownLabel";
        case ErrorCode::CycleDetected: return "CycleDetected";
        case ErrorCode::GroundSetMismatch: return "GroundSetMismatch";
        case ErrorCode::EmptyList: return "EmptyList";
        case ErrorCode::EmptySequence: return "EmptySequence";
        case ErrorCode::NotUpperDense: return "NotUpperDense";
        case ErrorCode::BadFirstWitness: return "BadFirstWitness";
        case ErrorCode::NotIncreasing: return "NotIncreasing";
        case ErrorCode::InsufficientSeparation: return "InsufficientSeparation";
        case ErrorCode::IllegalSimplification: return "IllegalSimplification";
        case ErrorCode::NotMonotone: return "NotMonotone";
        case ErrorCode::NotMultiUtility: return "NotMultiUtility";
        case ErrorCode::TupleCollision: return "TupleCollision";
        case ErrorCode::NotAntichain: return "NotAntichain";
        case ErrorCode::NotTotalOnA: return "NotTotalOnA";
        case ErrorCode::DecompositionOverlap: return "DecompositionOverlap";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::BadRadix: return "BadRadix";
        case ErrorCode::NotRealizer: return "NotRealizer";
        case ErrorCode::NotInjectiveMultiUtility: return "NotInjectiveMultiUtility";
        case ErrorCode::BadParams: return "BadParams";
        case ErrorCode::ConstructionFailed: return "ConstructionFailed";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::BadInput: return "BadInput";
    }
    return "UnknownError";
}

namespace rel {

void transitive_closure(RelationMatrix& m, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (m[i * n + k])
                for (std::size_t j = 0; j < n; ++j)
                    if (m[k * n + j]) m[i * n + j] = 1;
}

std::string partial_order_violation(const RelationMatrix& m, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (!m[i * n + i]) return "not reflexive at index " + std::to_string(i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m[i * n + j] && m[j * n + i])
                return "not antisymmetric between indices " + std::to_string(i) + " and " +
                       std::to_string(j);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (m[i * n + k])
                for (std::size_t j = 0; j < n; ++j)
                    if (m[k * n + j] && !m[i * n + j])
                        return "not transitive via indices " + std::to_string(i) + "," +
                               std::to_string(k) + "," + std::to_string(j);
    return "";
}

bool is_total(const RelationMatrix& m, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!m[i * n + j] && !m[j * n + i]) return false;
    return true;
}

std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const RelationMatrix& m,
                                                                      std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !m[i * n + j] || m[j * n + i]) continue;
            bool covered = true;
            for (std::size_t k = 0; k < n && covered; ++k) {
                if (k == i || k == j) continue;
                if (m[i * n + k] && !m[k * n + i] && m[k * n + j] && !m[j * n + k]) covered = false;
            }
            if (covered) edges.emplace_back(i, j);
        }
    return edges;
}

} // namespace rel

Poset::Poset(std::vector<std::string> labels, RelationMatrix relation)
    : labels_(std::move(labels)), n_(labels_.size()), rel_(std::move(relation)) {
    if (rel_.size() != n_ * n_)
        throw Error(ErrorCode::DimensionMismatch, "relation matrix size does not match label count");
    for (std::size_t i = 0; i < n_; ++i) {
        auto [it, inserted] = index_.emplace(labels_[i], i);
        if (!inserted) throw Error(ErrorCode::DuplicateLabel, labels_[i]);
    }
    std::string bad = rel::partial_order_violation(rel_, n_);
    if (!bad.empty()) {
        // Antisymmetry failures read as cycles from the cover perspective.
        if (bad.rfind("not antisymmetric", 0) == 0) throw Error(ErrorCode::CycleDetected, bad);
        throw Error(ErrorCode::BadInput, bad);
    }
}

Poset Poset::from_cover_relations(const std::vector<std::string>& labels,
                                  const std::vector<std::pair<std::string, std::string>>& covers) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (!index.emplace(labels[i], i).second)
            throw Error(ErrorCode::DuplicateLabel, labels[i]);
    std::size_t n = labels.size();
    RelationMatrix m(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
    for (const auto& [a, b] : covers) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end()) throw Error(ErrorCode::UnknownLabel, a);
        if (ib == index.end()) throw Error(ErrorCode::UnknownLabel, b);
        m[ia->second * n + ib->second] = 1;
    }
    rel::transitive_closure(m, n);
    return Poset(labels, std::move(m)); // ctor reports CycleDetected if closure broke antisymmetry
}

Poset Poset::chain(const std::vector<std::string>& labels) {
    std::size_t n = labels.size();
    RelationMatrix m(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m[i * n + j] = 1;
    return Poset(labels, std::move(m));
}

Poset Poset::antichain(const std::vector<std::string>& labels) {
    std::size_t n = labels.size();
    RelationMatrix m(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
    return Poset(labels, std::move(m));
}

std::size_t Poset::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw Error(ErrorCode::UnknownLabel, label);
    return it->second;
}

std::vector<std::size_t> Poset::topological_order() const {
    std::vector<std::size_t> order;
    std::vector<bool> placed(n_, false);
    for (std::size_t step = 0; step < n_; ++step) {
        std::size_t best = n_;
        for (std::size_t i = 0; i < n_; ++i) {
            if (placed[i]) continue;
            bool minimal = true;
            for (std::size_t j = 0; j < n_ && minimal; ++j)
                if (!placed[j] && j != i && lt(j, i)) minimal = false;
            if (!minimal) continue;
            if (best == n_ || labels_[i] < labels_[best]) best = i;
        }
        placed[best] = true;
        order.push_back(best);
    }
    return order;
}

Poset Poset::induced(const std::vector<std::string>& subset) const {
    std::vector<std::size_t> idx;
    idx.reserve(subset.size());
    for (const auto& l : subset) idx.push_back(index_of(l));
    std::size_t m = idx.size();
    RelationMatrix sub(m * m, 0);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) sub[a * m + b] = leq(idx[a], idx[b]) ? 1 : 0;
    return Poset(subset, std::move(sub));
}

PairClass classify_pair(const Poset& p, const std::string& x, const std::string& y) {
    std::size_t i = p.index_of(x);
    std::size_t j = p.index_of(y);
    if (i == j) return PairClass::EQ;
    if (p.lt(i, j)) return PairClass::LE;
    if (p.lt(j, i)) return PairClass::GE;
    return PairClass::INCOMPARABLE;
}

bool is_extension(const Poset& base, const Poset& cand, bool require_linear) {
    if (base.labels() != cand.labels())
        throw Error(ErrorCode::GroundSetMismatch, "extension check requires identical ground sets");
    std::size_t n = base.size();
    for (std::size_t i = 0; i < n * n; ++i)
        if (base.matrix()[i] && !cand.matrix()[i]) return false;
    if (require_linear && !cand.is_total()) return false;
    return true;
}

Poset intersect(const std::vector<Poset>& rels) {
    if (rels.empty()) throw Error(ErrorCode::EmptyList, "intersect needs at least one relation");
    const auto& labels = rels.front().labels();
    std::size_t n = rels.front().size();
    RelationMatrix m(rels.front().matrix());
    for (std::size_t k = 1; k < rels.size(); ++k) {
        if (rels[k].labels() != labels)
            throw Error(ErrorCode::GroundSetMismatch, "intersect requires identical ground sets");
        for (std::size_t i = 0; i < n * n; ++i) m[i] = m[i] && rels[k].matrix()[i];
    }
    return Poset(labels, std::move(m));
}

namespace {

struct IsoSignature {
    std::size_t up, down;
    bool operator==(const IsoSignature& o) const { return up == o.up && down == o.down; }
};

bool iso_backtrack(const Poset& p, const Poset& q, const std::vector<IsoSignature>& sp,
                   const std::vector<IsoSignature>& sq, std::vector<std::size_t>& map,
                   std::vector<bool>& used, std::size_t i) {
    std::size_t n = p.size();
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
        if (used[j] || !(sp[i] == sq[j])) continue;
        bool ok = true;
        for (std::size_t k = 0; k < i && ok; ++k) {
            if (p.leq(i, k) != q.leq(j, map[k])) ok = false;
            if (ok && p.leq(k, i) != q.leq(map[k], j)) ok = false;
        }
        if (!ok) continue;
        map[i] = j;
        used[j] = true;
        if (iso_backtrack(p, q, sp, sq, map, used, i + 1)) return true;
        used[j] = false;
    }
    return false;
}

std::vector<IsoSignature> signatures(const Poset& p) {
    std::size_t n = p.size();
    std::vector<IsoSignature> s(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (p.leq(i, j)) ++s[i].up;
            if (p.leq(j, i)) ++s[i].down;
        }
    return s;
}

} // namespace

std::optional<std::vector<std::pair<std::string, std::string>>> is_order_isomorphic(const Poset& p,
                                                                                    const Poset& q) {
    if (p.size() != q.size()) return std::nullopt;
    auto sp = signatures(p);
    auto sq = signatures(q);
    {
        auto a = sp;
        auto b = sq;
        auto cmp = [](const IsoSignature& x, const IsoSignature& y) {
            return std::tie(x.up, x.down) < std::tie(y.up, y.down);
        };
        std::sort(a.begin(), a.end(), cmp);
        std::sort(b.begin(), b.end(), cmp);
        if (!std::equal(a.begin(), a.end(), b.begin(),
                        [](const IsoSignature& x, const IsoSignature& y) { return x == y; }))
            return std::nullopt;
    }
    std::vector<std::size_t> map(p.size());
    std::vector<bool> used(p.size(), false);
    if (!iso_backtrack(p, q, sp, sq, map, used, 0)) return std::nullopt;
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < p.size(); ++i) out.emplace_back(p.label(i), q.label(map[i]));
    return out;
}

namespace {

// Witness sets for one requirement pair: in Debreu mode d with x <= d <= y for
// every strict pair; in Upper mode d with x incomparable to d and d <= y for
// every incomparable ordered pair.
std::vector<std::uint32_t> requirement_masks(const Poset& p, DenseMode mode) {
    std::size_t n = p.size();
    std::vector<std::uint32_t> reqs;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (x == y) continue;
            std::uint32_t mask = 0;
            if (mode == DenseMode::Debreu) {
                if (!p.lt(x, y)) continue;
                for (std::size_t d = 0; d < n; ++d)
                    if (p.leq(x, d) && p.leq(d, y)) mask |= (1u << d);
            } else {
                if (!p.incomparable(x, y)) continue;
                for (std::size_t d = 0; d < n; ++d)
                    if (p.incomparable(x, d) && p.leq(d, y)) mask |= (1u << d);
            }
            reqs.push_back(mask);
        }
    return reqs;
}

bool covers_all(std::uint32_t subset, const std::vector<std::uint32_t>& reqs) {
    for (auto r : reqs)
        if (!(subset & r)) return false;
    return true;
}

// Enumerate size-k subsets of the label-sorted index list in lexicographic
// order and return the first cover found.
bool lex_combinations(const std::vector<std::size_t>& sorted, std::size_t k,
                      const std::vector<std::uint32_t>& reqs, std::vector<std::size_t>& pick,
                      std::uint32_t mask, std::size_t from) {
    if (pick.size() == k) return covers_all(mask, reqs);
    for (std::size_t i = from; i < sorted.size(); ++i) {
        pick.push_back(sorted[i]);
        if (lex_combinations(sorted, k, reqs, pick, mask | (1u << sorted[i]), i + 1)) return true;
        pick.pop_back();
    }
    return false;
}

} // namespace

DenseSubset minimum_dense_subset(const Poset& p, DenseMode mode, std::size_t exact_cap) {
    std::size_t n = p.size();
    auto reqs = requirement_masks(p, mode);
    DenseSubset out;
    if (reqs.empty()) return out; // vacuous condition, empty witness

    std::vector<std::size_t> sorted(n);
    std::iota(sorted.begin(), sorted.end(), 0);
    std::sort(sorted.begin(), sorted.end(),
              [&](std::size_t a, std::size_t b) { return p.label(a) < p.label(b); });

    if (n <= exact_cap && n <= 31) {
        for (std::size_t k = 1; k <= n; ++k) {
            std::vector<std::size_t> pick;
            if (lex_combinations(sorted, k, reqs, pick, 0, 0)) {
                for (auto i : pick) out.elements.push_back(p.label(i));
                std::sort(out.elements.begin(), out.elements.end());
                return out;
            }
        }
    }
    // Greedy set cover fallback (also reached when some requirement is unsatisfiable).
    out.exact = false;
    std::vector<bool> open(reqs.size(), true);
    std::uint64_t remaining = reqs.size();
    std::vector<bool> chosen(n, false);
    while (remaining > 0) {
        std::size_t best = n;
        std::size_t best_gain = 0;
        for (auto i : sorted) {
            if (chosen[i]) continue;
            std::size_t gain = 0;
            for (std::size_t r = 0; r < reqs.size(); ++r)
                if (open[r] && (reqs[r] & (1u << i))) ++gain;
            if (gain > best_gain) {
                best = i;
                best_gain = gain;
            }
        }
        if (best == n) break; // some requirement has no witness at all
        chosen[best] = true;
        out.elements.push_back(p.label(best));
        for (std::size_t r = 0; r < reqs.size(); ++r)
            if (open[r] && (reqs[r] & (1u << best))) {
                open[r] = false;
                --remaining;
            }
    }
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> critical_pairs(const Poset& p) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && p.incomparable(i, j)) out.emplace_back(i, j);
    return out;
}

} // namespace ordim
