#include "ordim/representation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ordim/extension.hpp"

namespace ordim {

const char* repr_kind_name(ReprKind k) {
    switch (k) {
        case ReprKind::None: return "none";
        case ReprKind::Plain: return "plain";
        case ReprKind::Strict: return "strict";
        case ReprKind::Injective: return "injective";
    }
    return "none";
}

std::optional<ReprKind> repr_kind_from_name(const std::string& name) {
    if (name == "none") return ReprKind::None;
    if (name == "plain") return ReprKind::Plain;
    if (name == "strict") return ReprKind::Strict;
    if (name == "injective") return ReprKind::Injective;
    return std::nullopt;
}

KindReport validate_representation(const Poset& p, const MultiUtility& mu) {
    std::size_t n = p.size();
    for (const auto& row : mu.rows)
        if (row.size() != n)
            throw Error(ErrorCode::DimensionMismatch, "row length differs from element count");
    KindReport rep;
    if (mu.rows.empty()) {
        rep.plain_failure = "empty table represents nothing";
        return rep;
    }

    for (std::size_t i = 0; i < n && rep.plain_failure.empty(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            bool all_leq = true;
            for (const auto& row : mu.rows)
                if (row[i] > row[j]) {
                    all_leq = false;
                    break;
                }
            if (p.leq(i, j) && !all_leq) {
                rep.plain_failure = p.label(i) + " <= " + p.label(j) + " but some row decreases";
                break;
            }
            if (!p.leq(i, j) && all_leq) {
                rep.plain_failure =
                    "all rows weakly increase on unrelated pair " + p.label(i) + "," + p.label(j);
                break;
            }
        }
    if (!rep.plain_failure.empty()) return rep;
    rep.kind = ReprKind::Plain;

    for (std::size_t i = 0; i < n && rep.strict_failure.empty(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && p.lt(i, j))
                for (std::size_t r = 0; r < mu.rows.size(); ++r)
                    if (mu.rows[r][i] == mu.rows[r][j]) {
                        rep.strict_failure = "row " + std::to_string(r) + " ties on strict pair " +
                                             p.label(i) + " < " + p.label(j);
                        break;
                    }
    if (!rep.strict_failure.empty()) return rep;
    rep.kind = ReprKind::Strict;

    for (std::size_t r = 0; r < mu.rows.size() && rep.injective_failure.empty(); ++r)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (mu.rows[r][i] == mu.rows[r][j]) {
                    rep.injective_failure = "row " + std::to_string(r) + " collides on " +
                                            p.label(i) + "," + p.label(j);
                    break;
                }
    if (!rep.injective_failure.empty()) return rep;
    rep.kind = ReprKind::Injective;
    return rep;
}

RowKind classify_monotone_row(const Poset& p, const std::vector<Rational>& row) {
    std::size_t n = p.size();
    if (row.size() != n)
        throw Error(ErrorCode::DimensionMismatch, "row length differs from element count");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && p.leq(i, j) && row[i] > row[j]) return RowKind::None;
    bool strict = true;
    for (std::size_t i = 0; i < n && strict; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && p.lt(i, j) && row[i] == row[j]) {
                strict = false;
                break;
            }
    if (!strict) return RowKind::Monotone;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (row[i] == row[j]) return RowKind::Strict;
    return RowKind::Injective;
}

IncreasingSetFamily IncreasingSetFamily::from_subsets(
    const Poset& p, const std::vector<std::vector<std::string>>& subsets) {
    IncreasingSetFamily fam;
    fam.labels = p.labels();
    for (const auto& s : subsets) {
        std::vector<std::uint8_t> mask(p.size(), 0);
        for (const auto& l : s) mask[p.index_of(l)] = 1;
        fam.sets.push_back(std::move(mask));
    }
    return fam;
}

std::vector<std::string> IncreasingSetFamily::set_labels(std::size_t k) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (sets[k][i]) out.push_back(labels[i]);
    std::sort(out.begin(), out.end());
    return out;
}

void check_increasing(const Poset& p, const IncreasingSetFamily& fam) {
    std::size_t n = p.size();
    for (std::size_t k = 0; k < fam.sets.size(); ++k) {
        if (fam.sets[k].size() != n)
            throw Error(ErrorCode::DimensionMismatch, "set mask length differs from n");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (fam.sets[k][i] && p.leq(i, j) && !fam.sets[k][j])
                    throw Error(ErrorCode::NotIncreasing,
                                "set " + std::to_string(k + 1) + " contains " + p.label(i) +
                                    " but not " + p.label(j) + " above it");
    }
}

void check_realizer(const Poset& p, const Realizer& r) {
    if (r.members.empty()) throw Error(ErrorCode::NotRealizer, "realizer has no members");
    for (const auto& m : r.members) {
        if (m.labels() != p.labels())
            throw Error(ErrorCode::NotRealizer, "member ground set differs from the base");
        if (!is_extension(p, m, true))
            throw Error(ErrorCode::NotRealizer, "member is not a linear extension of the base");
    }
    if (!(intersect(r.members) == p))
        throw Error(ErrorCode::NotRealizer, "members do not intersect to the base");
}

IncreasingSetFamily increasing_family_from_multi_utility(const Poset& p, const MultiUtility& mu) {
    auto rep = validate_representation(p, mu);
    if (rep.kind == ReprKind::None) throw Error(ErrorCode::NotMultiUtility, rep.plain_failure);
    std::size_t n = p.size();
    IncreasingSetFamily fam;
    fam.labels = p.labels();
    for (const auto& row : mu.rows) {
        std::set<Rational> values(row.begin(), row.end());
        for (const auto& v : values) {
            std::vector<std::uint8_t> mask(n, 0);
            for (std::size_t i = 0; i < n; ++i) mask[i] = row[i] >= v ? 1 : 0;
            fam.sets.push_back(std::move(mask));
        }
    }
    return fam;
}

std::vector<Rational> injective_monotone_from_family(const IncreasingSetFamily& fam,
                                                     const Rational& r) {
    if (!(r > 0 && r < Rational(1, 2)))
        throw Error(ErrorCode::BadRadix, "r must lie strictly inside (0, 1/2)");
    std::size_t n = fam.labels.size();
    std::vector<Rational> u(n, 0);
    Rational power = 1;
    for (const auto& mask : fam.sets) {
        for (std::size_t i = 0; i < n; ++i)
            if (mask[i]) u[i] += power;
        power *= r;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (u[i] == u[j])
                throw Error(ErrorCode::InsufficientSeparation,
                            fam.labels[i] + " and " + fam.labels[j] + " lie in exactly the same sets");
    return u;
}

MultiUtility injective_multi_utility_from_multi_utility(const Poset& p, const MultiUtility& mu,
                                                        const Rational& r) {
    IncreasingSetFamily fam = increasing_family_from_multi_utility(p, mu);
    MultiUtility out;
    out.kind = ReprKind::Injective;
    for (std::size_t m = 0; m < fam.sets.size(); ++m) {
        IncreasingSetFamily swapped = fam;
        std::swap(swapped.sets[0], swapped.sets[m]);
        out.rows.push_back(injective_monotone_from_family(swapped, r));
    }
    return out;
}

Realizer realizer_from_multi_utility(const Poset& p, const MultiUtility& mu) {
    auto rep = validate_representation(p, mu);
    if (rep.kind == ReprKind::None) throw Error(ErrorCode::NotMultiUtility, rep.plain_failure);
    IncreasingSetFamily fam = increasing_family_from_multi_utility(p, mu);
    Realizer out;
    for (const auto& row : mu.rows)
        out.members.push_back(extension_from_monotone(p, row, fam).limit);
    return out;
}

MultiUtility realizer_to_injective_multi_utility(const Poset& p, const Realizer& r) {
    check_realizer(p, r);
    MultiUtility out;
    out.kind = ReprKind::Injective;
    for (const auto& m : r.members) {
        std::vector<Rational> row(p.size());
        auto order = m.topological_order();
        for (std::size_t rank = 0; rank < order.size(); ++rank)
            row[p.index_of(m.label(order[rank]))] = Rational(long(rank));
        out.rows.push_back(std::move(row));
    }
    return out;
}

Realizer injective_multi_utility_to_realizer(const Poset& p, const MultiUtility& mu) {
    auto rep = validate_representation(p, mu);
    if (rep.kind != ReprKind::Injective)
        throw Error(ErrorCode::NotInjectiveMultiUtility,
                    rep.kind == ReprKind::None ? rep.plain_failure : rep.injective_failure);
    std::size_t n = p.size();
    Realizer out;
    for (const auto& row : mu.rows) {
        RelationMatrix m(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i * n + j] = (i == j || row[i] < row[j]) ? 1 : 0;
        out.members.emplace_back(p.labels(), std::move(m));
    }
    return out;
}

MultiUtility strictify_multi_utility(const Poset& p, const MultiUtility& mu, const Rational& eps) {
    auto rep = validate_representation(p, mu);
    if (rep.kind == ReprKind::None) throw Error(ErrorCode::NotMultiUtility, rep.plain_failure);
    if (!(eps > 0)) throw Error(ErrorCode::BadParams, "eps must be positive");
    std::size_t n = p.size();

    // Rank utility of one fixed linear extension: lex order when tuples are
    // distinct, otherwise a family-built extension.
    std::vector<Rational> w(n);
    Poset ext = [&]() {
        try {
            return lex_extension(p, mu);
        } catch (const Error&) {
            IncreasingSetFamily fam = increasing_family_from_multi_utility(p, mu);
            return debreu_extension_from_sets(p, fam).limit;
        }
    }();
    auto order = ext.topological_order();
    for (std::size_t rank = 0; rank < order.size(); ++rank)
        w[p.index_of(ext.label(order[rank]))] = Rational(long(rank));

    // Shrink eps below (smallest positive gap)/n over all rows so every
    // strict inequality of the originals survives the perturbation.
    Rational e = eps;
    for (const auto& row : mu.rows)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (row[i] < row[j]) {
                    Rational gap = (row[j] - row[i]) / Rational(long(n));
                    if (gap < e) e = gap / 2;
                }

    MultiUtility out;
    out.kind = ReprKind::Strict;
    for (const auto& row : mu.rows) {
        std::vector<Rational> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = row[i] + e * w[i];
        out.rows.push_back(std::move(v));
    }
    return out;
}

} // namespace ordim
