#include "ordim/generators.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ordim {

const char* family_name(Family f) {
    switch (f) {
        case Family::Figure1: return "figure1";
        case Family::Prop2Grid: return "prop2_grid";
        case Family::Prop2Extension: return "prop2_extension";
        case Family::Theorem12Grid: return "theorem12_grid";
        case Family::Prop14Grid: return "prop14_grid";
        case Family::LexGrid: return "lex_grid";
        case Family::StandardExample: return "standard_example";
        case Family::MajorizationGrid: return "majorization_grid";
        case Family::MajorizationEmbedding: return "majorization_embedding";
    }
    return "figure1";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (Family f : {Family::Figure1, Family::Prop2Grid, Family::Prop2Extension,
                     Family::Theorem12Grid, Family::Prop14Grid, Family::LexGrid,
                     Family::StandardExample, Family::MajorizationGrid,
                     Family::MajorizationEmbedding})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

namespace {

std::vector<std::string> signed_labels(long k) {
    std::vector<std::string> out;
    for (long i = 1; i <= k; ++i) {
        out.push_back(std::to_string(-i));
        out.push_back(std::to_string(i));
    }
    return out;
}

// Builds the relation by evaluating `leq` on every ordered pair of signed
// integers +/-1..+/-k.
Poset signed_grid(long k, const std::function<bool(long, long)>& leq) {
    auto labels = signed_labels(k);
    std::size_t n = labels.size();
    std::vector<long> val(n);
    for (std::size_t i = 0; i < n; ++i) val[i] = std::stol(labels[i]);
    RelationMatrix m(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i * n + j] = (i == j || leq(val[i], val[j])) ? 1 : 0;
    return Poset(labels, std::move(m));
}

std::string tuple_label(const std::vector<Rational>& t) {
    std::ostringstream os;
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << to_string(t[i]);
    return os.str();
}

// Majorization poset over explicit distributions: p <= q iff every prefix sum
// of p is <= the matching prefix sum of q.
Poset majorization_poset(const std::vector<std::vector<Rational>>& dists) {
    std::size_t n = dists.size();
    std::size_t len = dists.empty() ? 0 : dists.front().size();
    std::vector<std::vector<Rational>> prefix(n, std::vector<Rational>(len));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        Rational acc = 0;
        for (std::size_t m = 0; m < len; ++m) {
            acc += dists[i][m];
            prefix[i][m] = acc;
        }
        labels.push_back(tuple_label(dists[i]));
    }
    RelationMatrix rel(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            bool leq = true;
            for (std::size_t m = 0; m + 1 < len && leq; ++m)
                if (prefix[i][m] > prefix[j][m]) leq = false;
            rel[i * n + j] = (i == j || leq) ? 1 : 0;
        }
    return Poset(labels, std::move(rel));
}

Generated gen_majorization_grid(long n, long d) {
    if (n < 2 || d < 1) throw Error(ErrorCode::BadParams, "need n >= 2 and denom >= 1");
    // Non-increasing n-tuples of multiples of 1/d summing to 1, enumerated in
    // descending lexicographic order of the numerator tuples.
    std::vector<std::vector<Rational>> dists;
    std::vector<long> parts(n, 0);
    std::function<void(long, long, long)> rec = [&](long pos, long remaining, long cap) {
        if (pos == n) {
            if (remaining != 0) return;
            std::vector<Rational> t;
            for (long c : parts) t.emplace_back(c, d);
            dists.push_back(std::move(t));
            return;
        }
        for (long c = std::min(cap, remaining); c >= 0; --c) {
            if (c * (n - pos) < remaining) break; // cannot reach the target any more
            parts[pos] = c;
            rec(pos + 1, remaining - c, c);
        }
    };
    rec(0, d, d);

    Generated out{majorization_poset(dists), std::nullopt};
    MultiUtility mu;
    for (long m = 0; m + 1 < n; ++m) {
        std::vector<Rational> row;
        for (const auto& t : dists) {
            Rational acc = 0;
            for (long i = 0; i <= m; ++i) acc += t[i];
            row.push_back(acc);
        }
        mu.rows.push_back(std::move(row));
    }
    out.mu = std::move(mu);
    return out;
}

void verify_mapping(const Poset& src, const Poset& dst,
                    const std::vector<std::pair<std::string, std::string>>& mapping) {
    if (mapping.size() != src.size() || dst.size() != src.size())
        throw Error(ErrorCode::ConstructionFailed, "embedding has the wrong cardinality");
    for (const auto& [a, fa] : mapping)
        for (const auto& [b, fb] : mapping)
            if (src.leq(src.index_of(a), src.index_of(b)) !=
                dst.leq(dst.index_of(fa), dst.index_of(fb)))
                throw Error(ErrorCode::ConstructionFailed,
                            "embedding does not preserve the pair " + a + "," + b);
    if (!is_order_isomorphic(src, dst))
        throw Error(ErrorCode::ConstructionFailed, "embedding image is not order isomorphic");
}

long common_denominator(const std::vector<std::vector<Rational>>& dists) {
    BigInt l = 1;
    for (const auto& t : dists)
        for (const auto& v : t) l = boost::multiprecision::lcm(l, denominator(v));
    return l.convert_to<long>();
}

void check_distribution(const std::vector<Rational>& t) {
    Rational sum = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 0 || (i > 0 && t[i] > t[i - 1]))
            throw Error(ErrorCode::ConstructionFailed, "tuple is not non-increasing nonnegative");
        sum += t[i];
    }
    if (sum != 1) throw Error(ErrorCode::ConstructionFailed, "tuple does not sum to 1");
}

} // namespace

Generated generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Figure1: {
            Poset p = Poset::from_cover_relations(
                {"A", "B", "C", "D", "E", "F"},
                {{"A", "C"}, {"B", "C"}, {"D", "E"}, {"D", "F"}, {"A", "F"}, {"B", "E"}});
            return {std::move(p), std::nullopt};
        }
        case Family::Prop2Grid: {
            if (spec.k < 1) throw Error(ErrorCode::BadParams, "need k >= 1");
            Poset p = signed_grid(spec.k, [](long x, long y) {
                return (x > 0) == (y > 0) && std::abs(x) <= std::abs(y);
            });
            MultiUtility mu;
            std::vector<Rational> u1, u2, u3;
            for (const auto& l : p.labels()) {
                long v = std::stol(l);
                u1.emplace_back(std::abs(v));
                u2.emplace_back(v > 0 ? 1 : 0);
                u3.emplace_back(v < 0 ? 1 : 0);
            }
            mu.rows = {u1, u2, u3};
            return {std::move(p), std::move(mu)};
        }
        case Family::Prop2Extension: {
            if (spec.k < 1) throw Error(ErrorCode::BadParams, "need k >= 1");
            return {Poset::chain(signed_labels(spec.k)), std::nullopt};
        }
        case Family::Theorem12Grid: {
            if (spec.k < 1) throw Error(ErrorCode::BadParams, "need k >= 1");
            Poset p = signed_grid(spec.k, [](long x, long y) {
                auto sgn = [](long v) { return v > 0 ? 1 : -1; };
                return std::abs(x) <= std::abs(y) && sgn(x) <= sgn(y);
            });
            MultiUtility mu;
            std::vector<Rational> u1, u2;
            for (const auto& l : p.labels()) {
                long v = std::stol(l);
                u1.emplace_back(std::abs(v));
                u2.emplace_back(v > 0 ? 1 : -1);
            }
            mu.rows = {u1, u2};
            return {std::move(p), std::move(mu)};
        }
        case Family::Prop14Grid: {
            if (spec.k < 1) throw Error(ErrorCode::BadParams, "need k >= 1");
            Poset p = signed_grid(spec.k, [](long x, long y) { return x < 0 && y > 0; });
            MultiUtility mu;
            std::vector<Rational> u1, u2;
            for (const auto& l : p.labels()) {
                long v = std::stol(l);
                u1.emplace_back(v);
                u2.emplace_back(Rational(1) / v);
            }
            mu.rows = {u1, u2};
            return {std::move(p), std::move(mu)};
        }
        case Family::LexGrid: {
            if (spec.a < 1 || spec.b < 1) throw Error(ErrorCode::BadParams, "need a, b >= 1");
            std::vector<std::string> labels;
            for (long x = 1; x <= spec.a; ++x)
                for (long y = 1; y <= spec.b; ++y)
                    labels.push_back(std::to_string(x) + "," + std::to_string(y));
            return {Poset::chain(labels), std::nullopt}; // row-major enumeration is the lex order
        }
        case Family::StandardExample: {
            if (spec.n < 2) throw Error(ErrorCode::BadParams, "need n >= 2");
            std::vector<std::string> labels;
            for (long i = 1; i <= spec.n; ++i) labels.push_back("a" + std::to_string(i));
            for (long i = 1; i <= spec.n; ++i) labels.push_back("b" + std::to_string(i));
            std::vector<std::pair<std::string, std::string>> covers;
            for (long i = 1; i <= spec.n; ++i)
                for (long j = 1; j <= spec.n; ++j)
                    if (i != j)
                        covers.emplace_back("a" + std::to_string(i), "b" + std::to_string(j));
            return {Poset::from_cover_relations(labels, covers), std::nullopt};
        }
        case Family::MajorizationGrid:
            return gen_majorization_grid(spec.n, spec.denom);
        case Family::MajorizationEmbedding:
            return {embed_theorem12_in_majorization(spec.k).sub, std::nullopt};
    }
    throw Error(ErrorCode::BadParams, "unknown family");
}

Embedding embed_theorem12_in_majorization(long k) {
    if (k < 1) throw Error(ErrorCode::BadParams, "need k >= 1");
    // Two bands of 3-outcome distributions: p_x = (x, 7/8-x, 1/8) and
    // q_x = (x, 13/16-x, 3/16) with x just above 1/2. Within a band the first
    // prefix sum chains by x while the second is constant; across bands q's
    // second prefix sum 13/16 stays below p's 7/8, so q_i <= p_j iff i <= j.
    std::vector<std::vector<Rational>> dists;
    std::vector<std::pair<std::string, std::string>> mapping;
    for (long i = 1; i <= k; ++i) {
        Rational x = Rational(1, 2) + Rational(i, 16 * (k + 1));
        std::vector<Rational> q = {x, Rational(13, 16) - x, Rational(3, 16)};
        std::vector<Rational> p = {x, Rational(7, 8) - x, Rational(1, 8)};
        check_distribution(q);
        check_distribution(p);
        mapping.emplace_back(std::to_string(-i), tuple_label(q));
        mapping.emplace_back(std::to_string(i), tuple_label(p));
        dists.push_back(std::move(q));
        dists.push_back(std::move(p));
    }
    Embedding out{majorization_poset(dists), std::move(mapping), common_denominator(dists)};
    FamilySpec grid;
    grid.family = Family::Theorem12Grid;
    grid.k = k;
    verify_mapping(generate(grid).poset, out.sub, out.mapping);
    return out;
}

Embedding embed_standard_example_in_majorization(long n) {
    if (n < 4 || n > 6) throw Error(ErrorCode::BadParams, "supported range is 4 <= n <= 6");
    // Perturb the base distribution c_m = (n-m+1)/T, T = n(n+1)/2, at the
    // prefix-sum level: p_j dips prefix j by 2*eta, q_i starts 3*eta low and
    // recovers 2*eta at prefix i; the theta ramp keeps all values distinct.
    // Then q_i < p_j iff i != j while each band is an antichain.
    long T = n * (n + 1) / 2;
    Rational eta(1, 100 * T);
    Rational theta = eta / (8 * n);
    auto base_prefix = [&](long m) {
        long sum = 0;
        for (long l = 1; l <= m; ++l) sum += n - l + 1;
        return Rational(sum, T);
    };
    auto from_prefix = [&](const std::vector<Rational>& s) {
        std::vector<Rational> t;
        Rational prev = 0;
        for (const auto& v : s) {
            t.push_back(v - prev);
            prev = v;
        }
        t.push_back(1 - prev);
        check_distribution(t);
        return t;
    };

    std::vector<std::vector<Rational>> dists;
    std::vector<std::pair<std::string, std::string>> mapping;
    for (long i = 1; i <= n - 1; ++i) { // minimals q_i -> a_i
        std::vector<Rational> s;
        for (long m = 1; m <= n - 1; ++m)
            s.push_back(base_prefix(m) - 3 * eta + (m == i ? 2 * eta : Rational(0)) +
                        (n - i) * theta);
        auto t = from_prefix(s);
        mapping.emplace_back("a" + std::to_string(i), tuple_label(t));
        dists.push_back(std::move(t));
    }
    for (long j = 1; j <= n - 1; ++j) { // maximals p_j -> b_j
        std::vector<Rational> s;
        for (long m = 1; m <= n - 1; ++m)
            s.push_back(base_prefix(m) - (m == j ? 2 * eta : Rational(0)) + (n - j) * theta);
        auto t = from_prefix(s);
        mapping.emplace_back("b" + std::to_string(j), tuple_label(t));
        dists.push_back(std::move(t));
    }

    Embedding out{majorization_poset(dists), std::move(mapping), common_denominator(dists)};
    FamilySpec se;
    se.family = Family::StandardExample;
    se.n = n - 1;
    verify_mapping(generate(se).poset, out.sub, out.mapping);
    return out;
}

} // namespace ordim
