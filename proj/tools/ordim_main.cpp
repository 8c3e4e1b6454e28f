#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ordim/dot.hpp"
#include "ordim/extension.hpp"
#include "ordim/generators.hpp"
#include "ordim/json_io.hpp"

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ordim::Error(ordim::ErrorCode::BadInput, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ordim::Error(ordim::ErrorCode::BadInput, std::string("invalid JSON: ") + e.what());
    }
    return j;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ordim::Error(ordim::ErrorCode::BadInput, "cannot write " + path);
    out << text;
}

void emit_result(const json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_text(out_path, text);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::size_t exact_cap(std::size_t fallback) {
    if (const char* env = std::getenv("ORDIM_EXACT_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return std::size_t(v);
    }
    return fallback;
}

void write_dot_panels(const ordim::ExtensionTrace& trace, const std::string& prefix) {
    auto panels = ordim::dot_trace_panels(trace);
    for (std::size_t k = 0; k < panels.size(); ++k)
        write_text(prefix + "_step" + std::to_string(k) + ".dot", panels[k]);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite partial orders: extensions, representations, dimension"};
    app.require_subcommand(1);

    std::string in_path, out_path, mu_path, dot_prefix;
    std::string method, dlist, sets, target, kind_name = "dushnik_miller", family;
    long row = 0, k = 0, n = 0, denom = 0, a = 0, b = 0;
    bool base_trivial = false, simplified = false;
    std::string mu_out;

    auto* check = app.add_subcommand("check", "validate a poset file");
    check->add_option("--in", in_path)->required();

    auto* hasse = app.add_subcommand("hasse", "emit a Hasse diagram as DOT");
    hasse->add_option("--in", in_path)->required();
    hasse->add_option("--out", out_path);

    auto* gen = app.add_subcommand("generate", "build a named example family");
    gen->add_option("--family", family)->required();
    gen->add_option("--k", k);
    gen->add_option("--n", n);
    gen->add_option("--denom", denom);
    gen->add_option("--a", a);
    gen->add_option("--b", b);
    gen->add_option("--out", out_path);
    gen->add_option("--mu-out", mu_out);

    auto* ext = app.add_subcommand("extend", "run a linear-extension construction");
    ext->add_option("--in", in_path)->required();
    ext->add_option("--method", method)->required()->check(CLI::IsMember({"dense", "sets", "lex", "monotone"}));
    ext->add_option("--dlist", dlist);
    ext->add_option("--sets", sets);
    ext->add_option("--target", target);
    ext->add_option("--mu", mu_path);
    ext->add_option("--row", row);
    ext->add_flag("--base-trivial", base_trivial, "start from the trivial ordering");
    ext->add_flag("--simplified", simplified, "drop the incomparability test (nested families)");
    ext->add_option("--out", out_path);
    ext->add_option("--dot", dot_prefix, "write one DOT panel per step at <prefix>_step<k>.dot");

    auto* dim = app.add_subcommand("dimension", "compute an order-dimension certificate");
    dim->add_option("--in", in_path)->required();
    dim->add_option("--kind", kind_name)->check(CLI::IsMember({"dushnik_miller", "geometrical", "debreu"}));
    dim->add_option("--out", out_path);

    auto* real = app.add_subcommand("realizer", "realizer from a multi-utility");
    real->add_option("--in", in_path)->required();
    real->add_option("--mu", mu_path)->required();
    real->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) {
            ordim::Poset p = ordim::poset_from_json(load_json(in_path));
            json j;
            j["ok"] = true;
            j["size"] = p.size();
            j["total"] = p.is_total();
            emit_result(j, out_path);
        } else if (hasse->parsed()) {
            ordim::Poset p = ordim::poset_from_json(load_json(in_path));
            std::string text = ordim::dot_hasse(p);
            if (out_path.empty())
                std::cout << text;
            else
                write_text(out_path, text);
        } else if (gen->parsed()) {
            auto fam = ordim::family_from_name(family);
            if (!fam) throw ordim::Error(ordim::ErrorCode::BadParams, "unknown family " + family);
            ordim::FamilySpec spec;
            spec.family = *fam;
            spec.k = k;
            spec.n = n;
            spec.denom = denom;
            spec.a = a;
            spec.b = b;
            ordim::Generated g = ordim::generate(spec);
            emit_result(ordim::poset_to_json(g.poset), out_path);
            if (!mu_out.empty()) {
                if (!g.mu)
                    throw ordim::Error(ordim::ErrorCode::BadParams,
                                       family + " has no canonical multi-utility");
                write_text(mu_out, ordim::multi_utility_to_json(*g.mu).dump(2) + "\n");
            }
        } else if (ext->parsed()) {
            ordim::Poset p = ordim::poset_from_json(load_json(in_path));
            if (method == "lex") {
                if (mu_path.empty())
                    throw ordim::Error(ordim::ErrorCode::BadParams, "lex needs --mu");
                auto mu = ordim::multi_utility_from_json(load_json(mu_path));
                ordim::Poset ext_order = ordim::lex_extension(p, mu);
                emit_result(ordim::poset_to_json(ext_order), out_path);
                if (!dot_prefix.empty())
                    write_text(dot_prefix + "_step0.dot", ordim::dot_hasse(ext_order));
            } else {
                ordim::ExtensionTrace trace = [&]() {
                    if (method == "dense") {
                        if (dlist.empty())
                            throw ordim::Error(ordim::ErrorCode::BadParams, "dense needs --dlist");
                        std::optional<std::pair<std::string, std::string>> tgt;
                        if (!target.empty()) {
                            auto parts = split(target, ',');
                            if (parts.size() != 2)
                                throw ordim::Error(ordim::ErrorCode::BadParams,
                                                   "--target wants x,y");
                            tgt = {parts[0], parts[1]};
                        }
                        return ordim::debreu_extension_from_dense(p, split(dlist, ','), tgt);
                    }
                    ordim::IncreasingSetFamily fam = [&]() {
                        if (!sets.empty()) {
                            std::vector<std::vector<std::string>> subsets;
                            for (const auto& s : split(sets, ';')) subsets.push_back(split(s, ','));
                            return ordim::IncreasingSetFamily::from_subsets(p, subsets);
                        }
                        if (!mu_path.empty())
                            return ordim::increasing_family_from_multi_utility(
                                p, ordim::multi_utility_from_json(load_json(mu_path)));
                        throw ordim::Error(ordim::ErrorCode::BadParams,
                                           method + " needs --sets or --mu");
                    }();
                    if (method == "sets") {
                        std::optional<ordim::Poset> base;
                        if (base_trivial)
                            base = ordim::Poset::antichain(p.labels());
                        return ordim::debreu_extension_from_sets(p, fam, base, simplified);
                    }
                    // monotone
                    if (mu_path.empty())
                        throw ordim::Error(ordim::ErrorCode::BadParams, "monotone needs --mu");
                    auto mu = ordim::multi_utility_from_json(load_json(mu_path));
                    if (row < 0 || std::size_t(row) >= mu.rows.size())
                        throw ordim::Error(ordim::ErrorCode::BadParams, "--row out of range");
                    return ordim::extension_from_monotone(p, mu.rows[std::size_t(row)], fam);
                }();
                json j;
                j["trace"] = ordim::trace_to_json(trace);
                j["limit"] = ordim::poset_to_json(trace.limit);
                emit_result(j, out_path);
                if (!dot_prefix.empty()) write_dot_panels(trace, dot_prefix);
            }
        } else if (dim->parsed()) {
            ordim::Poset p = ordim::poset_from_json(load_json(in_path));
            auto kind = ordim::dimension_kind_from_name(kind_name);
            auto cert = ordim::dimension(p, *kind, exact_cap(14));
            emit_result(ordim::certificate_to_json(cert), out_path);
        } else if (real->parsed()) {
            ordim::Poset p = ordim::poset_from_json(load_json(in_path));
            auto mu = ordim::multi_utility_from_json(load_json(mu_path));
            ordim::Realizer r = ordim::realizer_from_multi_utility(p, mu);
            emit_result(ordim::realizer_to_json(r), out_path);
        }
    } catch (const ordim::Error& e) {
        json j;
        j["error"] = ordim::error_code_name(e.code());
        j["detail"] = e.detail();
        std::cout << j.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        json j;
        j["error"] = "BadInput";
        j["detail"] = e.what();
        std::cout << j.dump(2) << "\n";
        return 1;
    }
    return 0;
}
