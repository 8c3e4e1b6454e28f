#include "ordim/json_io.hpp"

namespace ordim {

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("nonpositive denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: " + text);
    }
}

nlohmann::json poset_to_json(const Poset& p) {
    nlohmann::json j;
    j["labels"] = p.labels();
    auto covers = nlohmann::json::array();
    for (auto [a, b] : p.cover_pairs())
        covers.push_back(nlohmann::json::array({p.label(a), p.label(b)}));
    j["cover"] = covers;
    return j;
}

Poset poset_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("labels") || !j.contains("cover"))
        throw Error(ErrorCode::BadInput, "expected an object with \"labels\" and \"cover\"");
    std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& e : j.at("cover")) {
        if (!e.is_array() || e.size() != 2)
            throw Error(ErrorCode::BadInput, "cover entries must be two-element arrays");
        covers.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return Poset::from_cover_relations(labels, covers);
}

nlohmann::json multi_utility_to_json(const MultiUtility& mu) {
    nlohmann::json j;
    auto rows = nlohmann::json::array();
    for (const auto& row : mu.rows) {
        auto r = nlohmann::json::array();
        for (const auto& v : row)
            r.push_back(nlohmann::json::array({numerator(v).str(), denominator(v).str()}));
        rows.push_back(r);
    }
    j["rows"] = rows;
    j["kind"] = repr_kind_name(mu.kind);
    return j;
}

MultiUtility multi_utility_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rows"))
        throw Error(ErrorCode::BadInput, "expected an object with \"rows\"");
    MultiUtility mu;
    for (const auto& row : j.at("rows")) {
        std::vector<Rational> r;
        for (const auto& v : row) {
            if (!v.is_array() || v.size() != 2)
                throw Error(ErrorCode::BadInput, "values must be [num, den] string pairs");
            try {
                r.push_back(Rational(BigInt(v[0].get<std::string>()),
                                     BigInt(v[1].get<std::string>())));
            } catch (const std::exception&) {
                throw Error(ErrorCode::BadInput, "malformed rational value");
            }
        }
        mu.rows.push_back(std::move(r));
    }
    if (j.contains("kind")) {
        auto k = repr_kind_from_name(j.at("kind").get<std::string>());
        if (!k) throw Error(ErrorCode::BadInput, "unknown kind " + j.at("kind").get<std::string>());
        mu.kind = *k;
    }
    return mu;
}

nlohmann::json realizer_to_json(const Realizer& r) {
    auto j = nlohmann::json::array();
    for (const auto& m : r.members) {
        std::vector<std::string> perm;
        for (auto i : m.topological_order()) perm.push_back(m.label(i));
        j.push_back(perm);
    }
    return j;
}

Realizer realizer_from_json(const nlohmann::json& j, const std::vector<std::string>& labels) {
    if (!j.is_array()) throw Error(ErrorCode::BadInput, "expected an array of label lists");
    std::size_t n = labels.size();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[labels[i]] = i;
    Realizer out;
    for (const auto& perm : j) {
        auto order = perm.get<std::vector<std::string>>();
        if (order.size() != n)
            throw Error(ErrorCode::GroundSetMismatch, "member size differs from ground set");
        std::vector<std::size_t> rank(n, n);
        for (std::size_t pos = 0; pos < order.size(); ++pos) {
            auto it = index.find(order[pos]);
            if (it == index.end()) throw Error(ErrorCode::UnknownLabel, order[pos]);
            rank[it->second] = pos;
        }
        for (std::size_t a = 0; a < n; ++a)
            if (rank[a] == n)
                throw Error(ErrorCode::BadInput, "member omits or duplicates " + labels[a]);
        RelationMatrix m(n * n, 0);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) m[a * n + b] = rank[a] <= rank[b] ? 1 : 0;
        out.members.emplace_back(labels, std::move(m));
    }
    return out;
}

nlohmann::json trace_to_json(const ExtensionTrace& t) {
    auto j = nlohmann::json::array();
    for (const auto& w : t.witnesses) {
        nlohmann::json step;
        step["index"] = w.index;
        step["witness"] = w.witness;
        auto pairs = nlohmann::json::array();
        for (const auto& [a, b] : w.added_pairs)
            pairs.push_back(nlohmann::json::array({a, b}));
        step["added_pairs"] = pairs;
        j.push_back(step);
    }
    return j;
}

nlohmann::json certificate_to_json(const DimensionCertificate& c) {
    nlohmann::json j;
    j["kind"] = dimension_kind_name(c.kind);
    j["value"] = c.value;
    j["exact"] = c.exact;
    j["lower_bound"] = c.lower_bound;
    j["realizer"] = realizer_to_json(c.witness);
    j["multi_utility"] = multi_utility_to_json(c.mu_witness);
    return j;
}

} // namespace ordim
