#ifndef STRONGPROD_REPORT_HPP
#define STRONGPROD_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "checks.hpp"
#include "domination.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "verdict.hpp"
#include "witnesses.hpp"

namespace strongprod {

using json = nlohmann::ordered_json;

template <std::size_t W>
json to_json(const bit_set<W>& s)
{
    json a = json::array();
    for (int v : s)
        a.push_back(v);
    return a;
}

inline json to_json(const edge_set& es)
{
    json a = json::array();
    for (const edge& e : es)
        a.push_back(json::array({e.u, e.v}));
    return a;
}

// Certificate kinds understood by revalidate().
namespace cert_kind {
inline constexpr const char* minimal_dominating = "minimal_dominating_sets";
inline constexpr const char* maximal_independent = "maximal_independent_sets";
inline constexpr const char* minimal_eds = "minimal_edge_dominating_sets";
inline constexpr const char* maximal_matchings = "maximal_matchings";
inline constexpr const char* clique_partition = "clique_partition";
inline constexpr const char* maximal_matching_witness = "maximal_matching_witness";
} // namespace cert_kind

// {"kind", "graph", "claim", "sets"}; claim is "two_sizes" (fails),
// "common_size" (holds) or "partial" (inconclusive).
template <class Item, std::size_t W>
json verdict_certificate(const char* kind, const basic_graph<W>& g, const property_verdict<Item>& v)
{
    json c;
    c["kind"] = kind;
    c["graph"] = to_graph6(g);
    c["claim"] = v.fails() ? "two_sizes" : v.holds() ? "common_size" : "partial";
    json sets = json::array();
    for (const Item& x : v.witnesses)
        sets.push_back(to_json(x));
    c["sets"] = sets;
    if (v.holds())
        c["size"] = v.common_size;
    return c;
}

template <std::size_t W>
json clique_partition_json(const basic_graph<W>& g, const clique_partition_certificate& c)
{
    json j;
    j["kind"] = cert_kind::clique_partition;
    j["graph"] = to_graph6(g);
    j["centers"] = c.centers;
    return j;
}

inline json witness_json(const witness_report& r)
{
    json j;
    j["construction"] = r.construction;
    json in = json::array();
    for (const graph& g : r.inputs)
        in.push_back(to_graph6(g));
    j["inputs"] = in;
    json choices = json::object();
    for (const auto& [name, vals] : r.choices)
        choices[name] = vals;
    j["choices"] = choices;
    j["product"] = to_graph6(r.host);
    j["matching"] = to_json(r.matching);
    j["uncovered"] = to_json(r.uncovered);
    if (r.residual) {
        j["residual"] = to_graph6(*r.residual);
        json eds = json::array();
        for (const edge_set& f : r.eds)
            eds.push_back(to_json(f));
        j["residual_minimal_eds"] = eds;
    }
    j["implies_not_equimatchable"] = r.implies_not_equimatchable;
    j["verified"] = r.verified;
    j["failures"] = r.failures;
    return j;
}

// Certificate for a witness matching: maximal in the product, with the
// stated uncovered set.
inline json witness_certificate(const witness_report& r)
{
    json c;
    c["kind"] = cert_kind::maximal_matching_witness;
    c["graph"] = to_graph6(r.host);
    c["sets"] = json::array({to_json(r.matching)});
    c["uncovered"] = to_json(r.uncovered);
    return c;
}

// One JSONL line. `millis` is null unless timing was requested, so that
// default output is byte-reproducible.
inline json make_record(const std::string& campaign, std::vector<std::string> g6_inputs, json verdicts,
                        json certificates, const std::string& status, std::optional<std::int64_t> millis)
{
    json r;
    r["campaign"] = campaign;
    r["g6_inputs"] = std::move(g6_inputs);
    r["verdicts"] = std::move(verdicts);
    r["certificates"] = std::move(certificates);
    r["status"] = status;
    r["millis"] = millis ? json(*millis) : json(nullptr);
    return r;
}

namespace detail {

inline std::optional<edge_set> edges_from_json(const json& a)
{
    if (!a.is_array())
        return std::nullopt;
    edge_set out;
    for (const json& e : a) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            return std::nullopt;
        out.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
}

inline std::optional<vertex_set> vertices_from_json(const json& a, int n)
{
    if (!a.is_array())
        return std::nullopt;
    vertex_set s;
    for (const json& v : a) {
        if (!v.is_number_integer() || v.get<int>() < 0 || v.get<int>() >= n)
            return std::nullopt;
        s.insert(v.get<int>());
    }
    return s;
}

} // namespace detail

// Independent re-check of an embedded certificate against the definitions.
// Returns an error message, or nullopt when the certificate is sound.
inline std::optional<std::string> revalidate(const json& c)
{
    try {
        const std::string kind = c.at("kind").get<std::string>();
        const graph g = from_graph6(c.at("graph").get<std::string>());
        if (kind == cert_kind::clique_partition) {
            if (!checks::is_clique_partition(g, c.at("centers").get<std::vector<int>>()))
                return "centres do not induce a clique partition";
            return std::nullopt;
        }
        const json& sets = c.at("sets");
        std::vector<int> sizes;
        for (const json& s : sets) {
            bool ok = false;
            if (kind == cert_kind::minimal_dominating || kind == cert_kind::maximal_independent) {
                auto vs = detail::vertices_from_json(s, g.order());
                ok = vs && (kind == cert_kind::minimal_dominating ? checks::is_minimal_dominating(g, *vs)
                                                                 : checks::is_maximal_independent(g, *vs));
                if (vs)
                    sizes.push_back(vs->size());
            } else if (kind == cert_kind::minimal_eds || kind == cert_kind::maximal_matchings
                       || kind == cert_kind::maximal_matching_witness) {
                auto es = detail::edges_from_json(s);
                if (es) {
                    *es = normalized(*es);
                    ok = kind == cert_kind::minimal_eds ? checks::is_minimal_edge_dominating(g, *es)
                                                        : checks::is_maximal_matching(g, *es);
                    sizes.push_back(static_cast<int>(es->size()));
                    if (ok && kind == cert_kind::maximal_matching_witness) {
                        auto unc = detail::vertices_from_json(c.at("uncovered"), g.order());
                        ok = unc && *unc == g.vertices() - endpoints<1>(*es);
                    }
                }
            } else {
                return "unknown certificate kind '" + kind + "'";
            }
            if (!ok)
                return kind + ": a listed set fails its definition";
        }
        if (c.contains("claim")) {
            const std::string claim = c["claim"].get<std::string>();
            if (claim == "two_sizes" && (sizes.size() != 2 || sizes[0] == sizes[1]))
                return "two_sizes claim without two different sizes";
            if (claim == "common_size" && (sizes.size() != 1 || sizes[0] != c.at("size").get<int>()))
                return "common_size claim does not match its witness";
        }
        return std::nullopt;
    } catch (const std::exception& e) {
        return std::string("malformed certificate: ") + e.what();
    }
}

// Every certificate found anywhere inside a record.
inline void collect_certificates(const json& j, std::vector<const json*>& out)
{
    if (j.is_object()) {
        if (j.contains("kind") && j.contains("graph")) {
            out.push_back(&j);
            return;
        }
        for (const auto& [k, v] : j.items())
            collect_certificates(v, out);
    } else if (j.is_array()) {
        for (const json& v : j)
            collect_certificates(v, out);
    }
}

struct campaign_report {
    std::string campaign;
    json parameters = json::object();
    std::vector<json> records;
    std::vector<std::string> violations; // failures and inconclusive instances
    json extra = json::object();          // campaign-specific summary fields
    int passed = 0;
    int failed = 0;
    int inconclusive = 0;

    void add(json record, const std::string& why = {})
    {
        const std::string status = record.at("status").get<std::string>();
        if (status == "pass") {
            ++passed;
        } else {
            std::string who;
            for (const json& g : record.at("g6_inputs"))
                who += (who.empty() ? "" : " ") + g.get<std::string>();
            violations.push_back(status + ": [" + who + "]" + (why.empty() ? "" : " " + why));
            (status == "fail" ? failed : inconclusive)++;
        }
        records.push_back(std::move(record));
    }

    void merge(campaign_report other)
    {
        for (std::size_t i = 0; i < other.records.size(); ++i)
            records.push_back(std::move(other.records[i]));
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
        passed += other.passed;
        failed += other.failed;
        inconclusive += other.inconclusive;
    }

    bool verified() const { return violations.empty(); }

    // 0 all passed, 1 violations found, 3 inconclusive results present
    int exit_code() const { return failed > 0 ? 1 : inconclusive > 0 ? 3 : 0; }

    json summary() const
    {
        json s;
        s["campaign"] = campaign;
        s["summary"] = true;
        s["parameters"] = parameters;
        s["counts"] = {{"instances", records.size()}, {"pass", passed}, {"fail", failed},
                       {"inconclusive", inconclusive}};
        for (const auto& [k, v] : extra.items())
            s[k] = v;
        s["violations"] = violations;
        return s;
    }

    std::string to_jsonl() const
    {
        std::string out;
        for (const json& r : records)
            out += r.dump() + "\n";
        out += summary().dump() + "\n";
        return out;
    }
};

} // namespace strongprod

#endif // STRONGPROD_REPORT_HPP
