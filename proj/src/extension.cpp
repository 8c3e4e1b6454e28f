#include "ordim/extension.hpp"

#include <algorithm>
#include <sstream>

namespace ordim {

namespace {

std::vector<std::pair<std::string, std::string>> diff_pairs(const Poset& p,
                                                            const RelationMatrix& before,
                                                            const RelationMatrix& after) {
    std::vector<std::pair<std::string, std::string>> out;
    std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (after[i * n + j] && !before[i * n + j]) out.emplace_back(p.label(i), p.label(j));
    std::sort(out.begin(), out.end());
    return out;
}

std::string set_to_string(const std::vector<std::string>& labels) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << labels[i];
    os << "}";
    return os.str();
}

// Validates the step as a partial order (the per-step lemma, enforced rather
// than assumed) and appends it to the trace.
void push_step(ExtensionTrace& t, const Poset& p, RelationMatrix step, std::size_t index,
               std::string witness) {
    Poset check(p.labels(), step); // throws if the step breaks an axiom
    StepWitness w;
    w.index = index;
    w.witness = std::move(witness);
    w.added_pairs = diff_pairs(p, t.sequence.steps.back(), step);
    t.sequence.steps.push_back(std::move(step));
    t.witnesses.push_back(std::move(w));
}

std::pair<std::size_t, std::size_t> first_incomparable(const RelationMatrix& m, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!m[i * n + j] && !m[j * n + i]) return {i, j};
    return {n, n};
}

} // namespace

LimitResult limit_of_sequence(const RelationSequence& s) {
    if (s.steps.empty()) throw Error(ErrorCode::EmptySequence, "no steps to take a limit of");
    LimitResult out;
    out.matrix = s.steps.back(); // finite sequence: eventually constant at the final step
    std::size_t n = s.labels.size();
    out.diagnostic = rel::partial_order_violation(out.matrix, n);
    if (out.diagnostic.empty()) out.poset = Poset(s.labels, out.matrix);
    return out;
}

ExtensionTrace debreu_extension_from_dense(
    const Poset& p, std::vector<std::string> d_seq,
    const std::optional<std::pair<std::string, std::string>>& target) {
    std::size_t n = p.size();
    for (const auto& d : d_seq) p.index_of(d); // UnknownLabel early

    if (target) {
        std::size_t x = p.index_of(target->first);
        std::size_t y = p.index_of(target->second);
        if (!p.incomparable(x, y))
            throw Error(ErrorCode::BadFirstWitness,
                        "target pair " + target->first + "," + target->second +
                            " is not incomparable");
        auto good = [&](const std::string& dl) {
            std::size_t d = p.index_of(dl);
            return p.incomparable(x, d) && p.leq(d, y);
        };
        auto it = std::find_if(d_seq.begin(), d_seq.end(), good);
        if (it == d_seq.end())
            throw Error(ErrorCode::BadFirstWitness,
                        "no listed element d has " + target->first + " incomparable to d and d below " +
                            target->second);
        std::rotate(d_seq.begin(), it, it + 1);
    }

    ExtensionTrace t{RelationSequence{p.labels(), {p.matrix()}}, {}, p};
    for (std::size_t step = 0; step < d_seq.size(); ++step) {
        std::size_t d = p.index_of(d_seq[step]);
        const RelationMatrix& prev = t.sequence.steps.back();
        RelationMatrix next = prev;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && !prev[i * n + j] && !prev[j * n + i] && p.incomparable(i, d) &&
                    p.leq(d, j))
                    next[i * n + j] = 1;
        push_step(t, p, std::move(next), step + 1, d_seq[step]);
    }

    auto [a, b] = first_incomparable(t.sequence.steps.back(), n);
    if (a != n)
        throw Error(ErrorCode::NotUpperDense, "pair " + p.label(a) + "," + p.label(b) +
                                                  " is never resolved by the enumeration");
    t.limit = Poset(p.labels(), t.sequence.steps.back());
    return t;
}

ExtensionTrace debreu_extension_from_sets(const Poset& p, const IncreasingSetFamily& fam,
                                          const std::optional<Poset>& custom_base,
                                          bool simplified) {
    std::size_t n = p.size();
    if (fam.labels != p.labels())
        throw Error(ErrorCode::GroundSetMismatch, "family ground set differs from the poset's");
    check_increasing(p, fam);

    if (simplified) {
        // Only sound when the family is a chain under inclusion (the shape a
        // single injective monotone produces).
        for (std::size_t a = 0; a < fam.sets.size(); ++a)
            for (std::size_t b = a + 1; b < fam.sets.size(); ++b) {
                bool a_in_b = true, b_in_a = true;
                for (std::size_t i = 0; i < n; ++i) {
                    if (fam.sets[a][i] && !fam.sets[b][i]) a_in_b = false;
                    if (fam.sets[b][i] && !fam.sets[a][i]) b_in_a = false;
                }
                if (!a_in_b && !b_in_a)
                    throw Error(ErrorCode::IllegalSimplification,
                                "sets " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                                    " are inclusion-incomparable");
            }
    }

    RelationMatrix base = p.matrix();
    if (custom_base) {
        if (custom_base->labels() != p.labels())
            throw Error(ErrorCode::GroundSetMismatch, "custom base ground set differs");
        for (std::size_t i = 0; i < n * n; ++i)
            if (custom_base->matrix()[i] && !p.matrix()[i])
                throw Error(ErrorCode::BadInput, "custom base is not contained in the poset");
        base = custom_base->matrix();
    }

    ExtensionTrace t{RelationSequence{p.labels(), {base}}, {}, p};
    for (std::size_t step = 0; step < fam.sets.size(); ++step) {
        const auto& A = fam.sets[step];
        const RelationMatrix& prev = t.sequence.steps.back();
        RelationMatrix next = prev;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || A[i] || !A[j]) continue;
                if (!simplified && (prev[i * n + j] || prev[j * n + i])) continue;
                next[i * n + j] = 1;
            }
        push_step(t, p, std::move(next), step + 1, set_to_string(fam.set_labels(step)));
    }

    auto [a, b] = first_incomparable(t.sequence.steps.back(), n);
    if (a != n)
        throw Error(ErrorCode::InsufficientSeparation,
                    "pair " + p.label(a) + "," + p.label(b) + " is never separated by the family");
    t.limit = Poset(p.labels(), t.sequence.steps.back());
    return t;
}

ExtensionTrace extension_from_monotone(const Poset& p, const std::vector<Rational>& u,
                                       const IncreasingSetFamily& fam) {
    std::size_t n = p.size();
    if (u.size() != n) throw Error(ErrorCode::DimensionMismatch, "value row length differs from n");
    if (classify_monotone_row(p, u) == RowKind::None)
        throw Error(ErrorCode::NotMonotone, "some x <= y has u(x) > u(y)");
    if (fam.labels != p.labels())
        throw Error(ErrorCode::GroundSetMismatch, "family ground set differs from the poset's");
    check_increasing(p, fam);

    ExtensionTrace t{RelationSequence{p.labels(), {p.matrix()}}, {}, p};

    // Base step: order every incomparable pair split by u.
    RelationMatrix base = p.matrix();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && p.incomparable(i, j) && u[i] < u[j]) base[i * n + j] = 1;
    push_step(t, p, std::move(base), 1, "u");

    for (std::size_t step = 0; step < fam.sets.size(); ++step) {
        const auto& A = fam.sets[step];
        const RelationMatrix& prev = t.sequence.steps.back();
        RelationMatrix next = prev;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && !prev[i * n + j] && !prev[j * n + i] && !A[i] && A[j])
                    next[i * n + j] = 1;
        push_step(t, p, std::move(next), step + 2, set_to_string(fam.set_labels(step)));
    }

    auto [a, b] = first_incomparable(t.sequence.steps.back(), n);
    if (a != n)
        throw Error(ErrorCode::InsufficientSeparation,
                    "pair " + p.label(a) + "," + p.label(b) + " is never separated");
    t.limit = Poset(p.labels(), t.sequence.steps.back());
    return t;
}

Poset lex_extension(const Poset& p, const MultiUtility& mu) {
    auto report = validate_representation(p, mu);
    if (report.kind == ReprKind::None)
        throw Error(ErrorCode::NotMultiUtility, report.plain_failure);
    std::size_t n = p.size();
    std::size_t m = mu.rows.size();
    auto lex_less = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < m; ++r) {
            if (mu.rows[r][i] < mu.rows[r][j]) return true;
            if (mu.rows[r][i] > mu.rows[r][j]) return false;
        }
        return false;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!lex_less(i, j) && !lex_less(j, i))
                throw Error(ErrorCode::TupleCollision,
                            p.label(i) + " and " + p.label(j) + " share a value tuple");
    RelationMatrix out(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] = (i == j || lex_less(i, j)) ? 1 : 0;
    return Poset(p.labels(), std::move(out));
}

Poset antichain_extension(const Poset& p, const std::vector<std::string>& a,
                          const Poset& order_on_a) {
    std::size_t n = p.size();
    std::vector<std::size_t> A;
    for (const auto& l : a) A.push_back(p.index_of(l));
    for (std::size_t s = 0; s < A.size(); ++s)
        for (std::size_t t = s + 1; t < A.size(); ++t)
            if (!p.incomparable(A[s], A[t]))
                throw Error(ErrorCode::NotAntichain, a[s] + " and " + a[t] + " are comparable");
    {
        std::vector<std::string> sa = a, sb = order_on_a.labels();
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb)
            throw Error(ErrorCode::GroundSetMismatch, "order_on_a is not over the antichain");
    }
    if (!order_on_a.is_total())
        throw Error(ErrorCode::NotTotalOnA, "the supplied order on the antichain is not total");

    enum Block { Y, B, A_, Z };
    std::vector<Block> block(n, B);
    std::vector<bool> in_a(n, false);
    for (auto i : A) in_a[i] = true;
    for (std::size_t x = 0; x < n; ++x) {
        bool below = false, above = false;
        for (auto i : A) {
            if (p.lt(x, i)) below = true;
            if (p.lt(i, x)) above = true;
        }
        if (in_a[x]) {
            if (below || above)
                throw Error(ErrorCode::DecompositionOverlap,
                            p.label(x) + " lies in the antichain and in Y or Z");
            block[x] = A_;
        } else if (below) {
            block[x] = Y;
        } else if (above) {
            block[x] = Z;
        }
    }

    // Band value = band base + (rank+1)/(count+1), ranks from a deterministic
    // linear extension of the induced block order (order_on_a for A itself).
    std::vector<Rational> u(n);
    auto assign_block = [&](Block which, int base) {
        std::vector<std::string> members;
        for (std::size_t x = 0; x < n; ++x)
            if (block[x] == which) members.push_back(p.label(x));
        if (members.empty()) return;
        std::vector<std::size_t> order;
        if (which == A_) {
            Poset sub = order_on_a; // already total
            for (auto i : sub.topological_order()) order.push_back(p.index_of(sub.label(i)));
        } else {
            Poset sub = p.induced(members);
            for (auto i : sub.topological_order()) order.push_back(p.index_of(sub.label(i)));
        }
        for (std::size_t r = 0; r < order.size(); ++r)
            u[order[r]] = Rational(base) + Rational(long(r) + 1, long(order.size()) + 1);
    };
    assign_block(Y, -1);
    assign_block(B, 0);
    assign_block(A_, 1);
    assign_block(Z, 2);

    RelationMatrix out(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] = (i == j || u[i] < u[j]) ? 1 : 0;
    return Poset(p.labels(), std::move(out));
}

} // namespace ordim
