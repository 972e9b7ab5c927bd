#ifndef STRONGPROD_CAMPAIGNS_HPP
#define STRONGPROD_CAMPAIGNS_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "catalog.hpp"
#include "corpus.hpp"
#include "domination.hpp"
#include "gallai_edmonds.hpp"
#include "graph6.hpp"
#include "matching.hpp"
#include "parallel.hpp"
#include "product.hpp"
#include "report.hpp"
#include "witnesses.hpp"

namespace strongprod {

struct campaign_options {
    int jobs = 1;
    std::int64_t time_budget_ms = 10000; // per instance; <= 0 means unlimited
    bool timing = false;                 // fill "millis"; off keeps output reproducible
    std::size_t projection_cap = 10000;  // minimal dominating sets projected per instance
};

// Product orders used by the side-property 2-connectivity suite.
inline constexpr int side_product_cap = 30;

namespace detail {

// Wall clock for one instance; every search inside it draws on what is left.
class instance_clock {
public:
    explicit instance_clock(std::int64_t limit_ms) : start_(std::chrono::steady_clock::now()), limit_(limit_ms) {}

    std::int64_t elapsed_ms() const
    {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }

    budget remaining() const
    {
        if (limit_ <= 0)
            return budget::unlimited();
        return budget::millis(std::max<std::int64_t>(1, limit_ - elapsed_ms()));
    }

private:
    std::chrono::steady_clock::time_point start_;
    std::int64_t limit_;
};

struct instance {
    std::vector<std::string> inputs;
    json verdicts = json::object();
    json certificates = json::object();
    std::string status = "pass";
    std::string why;

    void fail(const std::string& reason)
    {
        status = "fail";
        if (!why.empty())
            why += "; ";
        why += reason;
    }
    void inconclusive(const std::string& reason)
    {
        if (status == "pass")
            status = "inconclusive";
        if (!why.empty())
            why += "; ";
        why += reason;
    }
};

// Evaluates eval(item, clock) for every item, possibly in parallel, and
// assembles the records in item order.
template <class Item, class Eval>
void run_instances(campaign_report& rep, const std::vector<Item>& items, const campaign_options& opt, Eval&& eval)
{
    auto results = parallel_map(items.size(), opt.jobs, [&](std::size_t i) {
        instance_clock clock(opt.time_budget_ms);
        instance r = eval(items[i], clock);
        return std::make_pair(std::move(r), clock.elapsed_ms());
    });
    for (auto& [r, ms] : results)
        rep.add(make_record(rep.campaign, r.inputs, std::move(r.verdicts), std::move(r.certificates), r.status,
                            opt.timing ? std::optional<std::int64_t>(ms) : std::nullopt),
                r.why);
}

struct keyed_graph {
    graph g;
    std::string key;
};

inline std::vector<keyed_graph> keyed(const corpus& c)
{
    std::vector<keyed_graph> out;
    for (std::size_t i = 0; i < c.size(); ++i)
        out.push_back({c.graphs[i], c.keys[i]});
    return out;
}

// Unordered pairs i <= j of a list, optionally bounded by product order.
inline std::vector<std::pair<keyed_graph, keyed_graph>> unordered_pairs(const std::vector<keyed_graph>& xs,
                                                                         int max_product)
{
    std::vector<std::pair<keyed_graph, keyed_graph>> out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i; j < xs.size(); ++j)
            if (xs[i].g.order() * xs[j].g.order() <= max_product)
                out.emplace_back(xs[i], xs[j]);
    return out;
}

inline std::string pair_id(const std::string& a, const std::string& b)
{
    return a < b ? a + " " + b : b + " " + a;
}

// True if some `len` vertices induce a cycle.
template <std::size_t W>
bool has_induced_cycle(const basic_graph<W>& g, int len)
{
    const int n = g.order();
    bit_set<W> pick;
    auto rec = [&](auto&& self, int from, int left) -> bool {
        if (left == 0) {
            for (int v : pick)
                if ((g.neighbors(v) & pick).size() != 2)
                    return false;
            return component_of(g, pick.first(), pick) == pick;
        }
        for (int v = from; v <= n - left; ++v) {
            pick.insert(v);
            if (self(self, v + 1, left - 1))
                return true;
            pick.erase(v);
        }
        return false;
    };
    return len >= 3 && rec(rec, 0, len);
}

inline instance witness_instance(const witness_report& w, const std::string& kind, const std::vector<int>& params)
{
    instance r;
    for (const graph& g : w.inputs)
        r.inputs.push_back(to_graph6(g));
    r.verdicts = {{"construction", kind},
                  {"params", params},
                  {"verified", w.verified},
                  {"uncovered", w.uncovered.size()},
                  {"implies_not_equimatchable", w.implies_not_equimatchable},
                  {"report", witness_json(w)}};
    if (!w.residual) {
        r.certificates = {{"matching", witness_certificate(w)}};
    } else {
        json c;
        c["kind"] = cert_kind::minimal_eds;
        c["graph"] = to_graph6(*w.residual);
        c["claim"] = "two_sizes";
        json sets = json::array();
        for (const edge_set& f : w.eds)
            sets.push_back(to_json(f));
        c["sets"] = sets;
        r.certificates["residual_minimal_eds"] = c;
    }
    if (!w.verified) {
        std::string all;
        for (const std::string& f : w.failures)
            all += (all.empty() ? "" : "; ") + f;
        r.fail(all);
    }
    return r;
}

} // namespace detail

// For every trivially well-dominated G on <= max_g vertices (with its
// certificate) and every well-dominated H on <= max_h vertices, connected:
// G ⊠ H is well-dominated, γ(G ⊠ H) = t·γ(H), and every minimal dominating
// set (up to the projection cap) projects onto minimal dominating sets of H.
inline campaign_report verify_theorem1(int max_g, int max_h, const campaign_options& opt = {})
{
    campaign_report rep;
    rep.campaign = "theorem1";
    rep.parameters = {{"max_g", max_g}, {"max_h", max_h}, {"time_budget_ms", opt.time_budget_ms},
                      {"projection_cap", opt.projection_cap}};

    struct g_side {
        detail::keyed_graph kg;
        clique_partition_certificate cert;
    };
    std::vector<g_side> gs;
    for (const auto& kg : detail::keyed(enumerate_connected_graphs(1, max_g)))
        if (auto cert = trivially_well_dominated_certificate(kg.g))
            gs.push_back({kg, *cert});
    std::vector<detail::keyed_graph> hs;
    for (const auto& kg : detail::keyed(enumerate_connected_graphs(1, max_h)))
        if (is_well_dominated(kg.g).holds())
            hs.push_back(kg);

    std::vector<std::pair<g_side, detail::keyed_graph>> items;
    for (const g_side& g : gs)
        for (const auto& h : hs)
            items.emplace_back(g, h);

    detail::run_instances(rep, items, opt, [&](const auto& item, const detail::instance_clock& clock) {
        const auto& [gside, hk] = item;
        const clique_partition_certificate& cert = gside.cert;
        detail::instance r;
        r.inputs = {gside.kg.key, hk.key};
        const auto p = strong_product(gside.kg.g, hk.g);
        const graph& pg = p.graph();
        const int t = cert.t();
        const int gamma_h = domination_number(hk.g);
        const int gamma_p = domination_number(pg);

        property_verdict<vertex_set> wd;
        std::size_t seen = 0, projected = 0;
        std::string broken;
        const enum_status st = for_each_minimal_dominating_set(
            pg,
            [&](const vertex_set& d) {
                ++seen;
                if (wd.witnesses.empty()) {
                    wd.witnesses.push_back(d);
                } else if (d.size() != wd.witnesses.front().size()) {
                    wd.witnesses.push_back(d);
                    return false;
                }
                if (projected < opt.projection_cap) {
                    try {
                        theorem1_projection(p, d, cert);
                        ++projected;
                    } catch (const theorem_violation& e) {
                        broken = e.what();
                        return false;
                    }
                }
                return true;
            },
            clock.remaining());
        if (wd.witnesses.size() == 2)
            wd.state = verdict_state::fails;
        else if (st == enum_status::complete && broken.empty()) {
            wd.state = verdict_state::holds;
            wd.common_size = wd.witnesses.front().size();
        }

        r.verdicts = {{"t", t},
                      {"gamma_h", gamma_h},
                      {"gamma_product", gamma_p},
                      {"well_dominated", to_string(wd.state)},
                      {"minimal_dominating_sets", seen},
                      {"projections_checked", projected}};
        r.certificates = {{"clique_partition", clique_partition_json(gside.kg.g, cert)},
                          {"product_minimal_dominating_sets",
                           verdict_certificate(cert_kind::minimal_dominating, pg, wd)}};
        if (gamma_p != t * gamma_h)
            r.fail("gamma(product) != t * gamma(H)");
        if (!broken.empty())
            r.fail(broken);
        if (wd.fails())
            r.fail("product is not well-dominated");
        else if (wd.inconclusive() && broken.empty())
            r.inconclusive("time budget exhausted");
        return r;
    });
    return rep;
}

// Every unordered pair of connected graphs on 2..max vertices. K2 ⊠ K2 is
// checked in full; every other product must yield two minimal edge
// dominating sets of different sizes.
inline campaign_report verify_theorem2(int max_g, int max_h, const campaign_options& opt = {})
{
    campaign_report rep;
    rep.campaign = "theorem2";
    rep.parameters = {{"max_g", max_g}, {"max_h", max_h}, {"time_budget_ms", opt.time_budget_ms}};
    const int hi = std::max(max_g, max_h);
    std::vector<std::pair<detail::keyed_graph, detail::keyed_graph>> items;
    if (hi >= 2) {
        for (const auto& [a, b] : detail::unordered_pairs(detail::keyed(enumerate_connected_graphs(2, hi)), hi * hi))
            if (std::min(a.g.order(), b.g.order()) <= std::min(max_g, max_h))
                items.emplace_back(a, b);
    }

    detail::run_instances(rep, items, opt, [&](const auto& item, const detail::instance_clock& clock) {
        const auto& [gk, hk] = item;
        detail::instance r;
        r.inputs = {gk.key, hk.key};
        const bool expected = gk.g.order() == 2 && hk.g.order() == 2;
        const auto p = strong_product(gk.g, hk.g);
        const auto v = is_well_edge_dominated(p.graph(), expected ? wed_mode::full : wed_mode::disprove_only,
                                              clock.remaining());
        r.verdicts = {{"expected_well_edge_dominated", expected},
                      {"mode", expected ? "full" : "disprove_only"},
                      {"well_edge_dominated", to_string(v.state)},
                      {"matching_number", v.witnesses.front().size()}};
        if (v.fails())
            r.verdicts["sizes"] = {v.witnesses[0].size(), v.witnesses[1].size()};
        r.certificates = {{"product_minimal_edge_dominating_sets",
                           verdict_certificate(cert_kind::minimal_eds, p.graph(), v)}};
        if (v.inconclusive())
            r.inconclusive("no certificate within the time budget");
        else if (v.holds() != expected)
            r.fail(expected ? "K2 x K2 is not well-edge-dominated" : "product is well-edge-dominated");
        return r;
    });
    return rep;
}

// Pairs named in the equimatchability campaign regardless of the size cap.
inline std::vector<std::pair<graph, graph>> theorem3_spot_pairs()
{
    return {{named::complete(3), named::path(3)},
            {named::path(3), named::path(3)},
            {named::complete(2), named::path(3)},
            {named::complete(5), named::path(3)}};
}

// True iff the product of nontrivial connected G, H is predicted
// equimatchable from α and parity.
inline bool equimatchable_rule(int order_g, int alpha_g, int order_h, int alpha_h)
{
    const int a = alpha_g + alpha_h;
    const bool odd = order_g % 2 == 1 && order_h % 2 == 1;
    return odd ? a <= 3 : a == 2;
}

// Every unordered pair of nontrivial connected graphs with |V(G)|·|V(H)| <=
// max_product (factors capped at the generator's 7 vertices), plus `spot`.
inline campaign_report verify_theorem3(int max_product, const campaign_options& opt = {},
                                       const std::vector<std::pair<graph, graph>>& spot = theorem3_spot_pairs())
{
    campaign_report rep;
    rep.campaign = "theorem3";
    rep.parameters = {{"max_product", max_product}, {"time_budget_ms", opt.time_budget_ms}};
    std::vector<std::pair<detail::keyed_graph, detail::keyed_graph>> items;
    std::set<std::string> seen;
    const int hi = std::min(generator_max_order, max_product / 2);
    if (hi >= 2)
        for (auto& pr : detail::unordered_pairs(detail::keyed(enumerate_connected_graphs(2, hi)), max_product)) {
            seen.insert(detail::pair_id(pr.first.key, pr.second.key));
            items.push_back(std::move(pr));
        }
    json spot_ids = json::array();
    for (const auto& [g, h] : spot) {
        if (g.order() < 2 || h.order() < 2 || !is_connected(g) || !is_connected(h))
            throw domain_error("spot pairs need nontrivial connected factors");
        detail::keyed_graph a{canonicalize(g).relabeled, canonical_key(g)};
        detail::keyed_graph b{canonicalize(h).relabeled, canonical_key(h)};
        spot_ids.push_back({a.key, b.key});
        if (seen.insert(detail::pair_id(a.key, b.key)).second)
            items.emplace_back(a, b);
    }
    rep.parameters["spot_pairs"] = spot_ids;

    detail::run_instances(rep, items, opt, [&](const auto& item, const detail::instance_clock& clock) {
        const auto& [gk, hk] = item;
        detail::instance r;
        r.inputs = {gk.key, hk.key};
        const int ag = independence_number(gk.g), ah = independence_number(hk.g);
        const bool predicted = equimatchable_rule(gk.g.order(), ag, hk.g.order(), ah);
        const auto p = strong_product(gk.g, hk.g);
        const auto v = is_equimatchable(p.graph(), clock.remaining());
        r.verdicts = {{"alpha_g", ag},
                      {"alpha_h", ah},
                      {"parity", gk.g.order() % 2 == 1 && hk.g.order() % 2 == 1 ? "odd" : "even"},
                      {"predicted_equimatchable", predicted},
                      {"equimatchable", to_string(v.state)},
                      {"matching_number", v.witnesses.front().size()}};
        r.certificates = {
            {"product_maximal_matchings", verdict_certificate(cert_kind::maximal_matchings, p.graph(), v)}};
        if (v.inconclusive())
            r.inconclusive("maximal matching enumeration hit the time budget");
        else if (v.holds() != predicted)
            r.fail("verdict disagrees with the alpha/parity rule");
        return r;
    });
    return rep;
}

// All connected well-dominated graphs on lo..hi vertices, each flagged
// trivially well-dominated or not.
inline campaign_report census_well_dominated(int lo, int hi, const campaign_options& opt = {})
{
    campaign_report rep;
    rep.campaign = "census";
    rep.parameters = {{"min_order", lo}, {"max_order", hi}, {"time_budget_ms", opt.time_budget_ms}};
    const auto items = detail::keyed(enumerate_connected_graphs(lo, hi));

    auto results = parallel_map(items.size(), opt.jobs, [&](std::size_t i) {
        detail::instance_clock clock(opt.time_budget_ms);
        const graph& g = items[i].g;
        auto wd = is_well_dominated(g, clock.remaining());
        std::optional<clique_partition_certificate> cert;
        if (!wd.fails())
            cert = trivially_well_dominated_certificate(g);
        return std::make_tuple(std::move(wd), std::move(cert), clock.elapsed_ms());
    });

    json wd_keys = json::array(), trivial_keys = json::array();
    for (std::size_t i = 0; i < items.size(); ++i) {
        auto& [wd, cert, ms] = results[i];
        if (wd.fails())
            continue;
        const graph& g = items[i].g;
        detail::instance r;
        r.inputs = {items[i].key};
        r.verdicts = {{"order", g.order()},
                      {"well_dominated", to_string(wd.state)},
                      {"trivially_well_dominated", cert.has_value()}};
        if (wd.holds())
            r.verdicts["domination_number"] = wd.common_size;
        r.certificates = {{"minimal_dominating_sets", verdict_certificate(cert_kind::minimal_dominating, g, wd)}};
        if (cert)
            r.certificates["clique_partition"] = clique_partition_json(g, *cert);
        if (wd.inconclusive()) {
            r.inconclusive("time budget exhausted");
        } else {
            wd_keys.push_back(items[i].key);
            if (cert)
                trivial_keys.push_back(items[i].key);
        }
        rep.add(make_record(rep.campaign, r.inputs, std::move(r.verdicts), std::move(r.certificates), r.status,
                            opt.timing ? std::optional<std::int64_t>(ms) : std::nullopt),
                r.why);
    }
    rep.extra = {{"examined", items.size()},
                 {"well_dominated", wd_keys.size()},
                 {"trivially_well_dominated", trivial_keys.size()},
                 {"well_dominated_graphs", wd_keys},
                 {"trivially_well_dominated_graphs", trivial_keys}};
    return rep;
}

inline campaign_report census_well_dominated(int n, const campaign_options& opt = {})
{
    return census_well_dominated(n, n, opt);
}

// Connected well-dominated graphs on 2..5 vertices, the default candidate
// list for conjecture_explore.
inline corpus default_conjecture_candidates()
{
    corpus c = enumerate_connected_graphs(2, 5);
    corpus out;
    out.source = "generator:well-dominated";
    out.min_order = 2;
    out.max_order = 5;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (is_well_dominated(c.graphs[i]).holds()) {
            out.graphs.push_back(c.graphs[i]);
            out.keys.push_back(c.keys[i]);
        }
    return out;
}

struct conjecture_result {
    std::optional<graph> witness;
    campaign_report report;

    // 0 witness found, 3 candidates exhausted or inconclusive
    int exit_code() const { return witness ? 0 : 3; }
};

// First candidate H (in corpus order) with G ⊠ H not well-dominated. G must
// be well-dominated and not trivially so. Candidates that are not
// well-dominated themselves are skipped. Running out of candidates says
// nothing beyond the searched range.
inline conjecture_result conjecture_explore(const graph& g, const corpus& candidates,
                                            const campaign_options& opt = {})
{
    if (trivially_well_dominated_certificate(g))
        throw domain_error("G is trivially well-dominated; every product with it is well-dominated");
    const auto gwd = is_well_dominated(g);
    if (!gwd.holds())
        throw domain_error("G is not well-dominated");
    conjecture_result out;
    campaign_report& rep = out.report;
    rep.campaign = "conjecture";
    const std::string gkey = canonical_key(g);
    rep.parameters = {{"g", gkey}, {"candidates", candidates.source}, {"time_budget_ms", opt.time_budget_ms}};
    int skipped = 0;
    for (std::size_t i = 0; i < candidates.size() && !out.witness; ++i) {
        const graph& h = candidates.graphs[i];
        if (!is_well_dominated(h).holds()) {
            ++skipped;
            continue;
        }
        detail::instance_clock clock(opt.time_budget_ms);
        detail::instance r;
        r.inputs = {gkey, candidates.keys[i]};
        const auto p = strong_product(g, h);
        const auto v = is_well_dominated(p.graph(), clock.remaining());
        r.verdicts = {{"product_well_dominated", to_string(v.state)}};
        if (v.fails()) {
            r.verdicts["sizes"] = {v.witnesses[0].size(), v.witnesses[1].size()};
            out.witness = h;
        }
        r.certificates = {{"product_minimal_dominating_sets",
                           verdict_certificate(cert_kind::minimal_dominating, p.graph(), v)}};
        if (v.inconclusive())
            r.inconclusive("time budget exhausted");
        rep.add(make_record(rep.campaign, r.inputs, std::move(r.verdicts), std::move(r.certificates), r.status,
                            opt.timing ? std::optional<std::int64_t>(clock.elapsed_ms()) : std::nullopt),
                r.why);
    }
    rep.extra = {{"witness", out.witness ? json(canonical_key(*out.witness)) : json(nullptr)},
                 {"exhausted", !out.witness},
                 {"skipped_not_well_dominated", skipped}};
    return out;
}

// Decomposition checks on every connected graph on lo..hi vertices:
// agreement with the brute-force definition, the structure statements,
// deletion facts for D, the component count bounds, C = ∅ and A
// independent for odd equimatchable graphs, and find_independent_triple
// wherever its preconditions hold.
inline campaign_report verify_gallai_edmonds(int lo, int hi, const campaign_options& opt = {})
{
    campaign_report rep;
    rep.campaign = "gallai_edmonds";
    rep.parameters = {{"min_order", lo}, {"max_order", hi}};
    const auto items = detail::keyed(enumerate_connected_graphs(lo, hi));
    detail::run_instances(rep, items, opt, [&](const detail::keyed_graph& kg, const detail::instance_clock&) {
        const graph& g = kg.g;
        detail::instance r;
        r.inputs = {kg.key};
        const auto dec = decompose(g);
        const int nu = matching_number(g);
        const bool npm = has_near_perfect_matching(g);
        const int c = dec.component_count(), a = dec.a.size();

        vertex_set always = g.vertices();
        for_each_maximum_matching(g, [&](const edge_set& m) {
            always = always & endpoints<1>(m);
            return true;
        });
        if (dec.d != g.vertices() - always)
            r.fail("D differs from the vertices missed by some maximum matching");
        for (const std::string& v : verify_structure(g, dec).violations)
            r.fail(v);
        for (int v : dec.d) {
            const graph gv = remove_vertex(g, v);
            if (matching_number(gv) != nu)
                r.fail("deleting a D-vertex lowers the matching number");
            if (npm && !has_perfect_matching(gv))
                r.fail("G - v has no perfect matching for v in D");
        }
        if (npm && c > a + 1)
            r.fail("more than |A| + 1 components of G[D]");

        bool equi = false, lemma = false, triple = false;
        if (g.order() % 2 == 1) {
            equi = is_equimatchable(g).holds();
            if (equi) {
                lemma = true;
                for (const std::string& v : check_lemma_independent(g).violations)
                    r.fail(v);
                if (npm && dec.c.empty() && c != a + 1)
                    r.fail("c != |A| + 1 for an odd equimatchable graph");
                if (npm && independence_number(g) > 2) {
                    triple = true;
                    try {
                        r.verdicts["independent_triple"] = to_json(find_independent_triple(g));
                    } catch (const theorem_violation& e) {
                        r.fail(e.what());
                    }
                }
            }
        }
        json v = {{"a", to_json(dec.a)},
                  {"c", to_json(dec.c)},
                  {"d", to_json(dec.d)},
                  {"components", c},
                  {"matching_number", nu},
                  {"near_perfect_matching", npm},
                  {"equimatchable_odd", equi},
                  {"lemma_checked", lemma},
                  {"triple_checked", triple}};
        if (r.verdicts.contains("independent_triple"))
            v["independent_triple"] = r.verdicts["independent_triple"];
        r.verdicts = std::move(v);
        return r;
    });
    return rep;
}

// Property suites over connected graphs on 1..max_n vertices. Only graphs
// meeting a suite's premise produce a record for that suite.
inline campaign_report verify_side_properties(int max_n, const campaign_options& opt = {})
{
    campaign_report rep;
    rep.campaign = "side";
    rep.parameters = {{"max_n", max_n}, {"product_cap", side_product_cap}};
    const auto gs = detail::keyed(enumerate_connected_graphs(1, max_n));
    json per_suite = json::object();

    auto run_suite = [&](const std::string& suite, const auto& items, auto&& eval) {
        campaign_report part;
        part.campaign = rep.campaign;
        detail::run_instances(part, items, opt, [&](const auto& item, const detail::instance_clock& clock) {
            detail::instance r = eval(item, clock);
            json v = {{"suite", suite}};
            for (auto& [k, val] : r.verdicts.items())
                v[k] = val;
            r.verdicts = std::move(v);
            return r;
        });
        per_suite[suite] = {{"instances", part.records.size()}, {"violations", part.violations.size()}};
        for (std::string& s : part.violations)
            s = suite + " " + s;
        rep.merge(std::move(part));
    };

    auto having = [&](auto&& pred) {
        std::vector<detail::keyed_graph> out;
        for (const auto& kg : gs)
            if (pred(kg.g))
                out.push_back(kg);
        return out;
    };
    const auto nontrivial = having([](const graph& g) { return g.order() >= 2; });

    // If G is WED (equimatchable), so is G − V(M) for every matching M.
    run_suite("matching_removal_closure", nontrivial, [&](const detail::keyed_graph& kg, const auto& clock) {
        detail::instance r;
        r.inputs = {kg.key};
        const auto wed = is_well_edge_dominated(kg.g, wed_mode::full, clock.remaining());
        const auto eqm = is_equimatchable(kg.g, clock.remaining());
        r.verdicts = {{"well_edge_dominated", to_string(wed.state)}, {"equimatchable", to_string(eqm.state)}};
        if (wed.inconclusive() || eqm.inconclusive()) {
            r.inconclusive("time budget exhausted");
            return r;
        }
        std::map<std::string, std::pair<bool, bool>> cache;
        std::size_t matchings = 0;
        json bad = json::array();
        for_each_matching(kg.g, [&](const edge_set& m) {
            ++matchings;
            const graph rest = remove_vertices(kg.g, endpoints<1>(m));
            if (rest.order() == 0)
                return true;
            const std::string key = canonical_key(rest);
            auto it = cache.find(key);
            if (it == cache.end()) {
                const bool re = is_equimatchable(rest).holds();
                const bool rw = rest.size() == 0 || is_well_edge_dominated(rest).holds();
                it = cache.emplace(key, std::make_pair(re, rw)).first;
            }
            if ((eqm.holds() && !it->second.first) || (wed.holds() && !it->second.second)) {
                bad.push_back(to_json(m));
                return false;
            }
            return true;
        });
        r.verdicts["matchings"] = matchings;
        if (!bad.empty()) {
            r.verdicts["offending_matching"] = bad.front();
            r.fail("residual after removing a matching loses the property");
        }
        return r;
    });

    // Connected WED graphs with a perfect matching are K4 or K_{m,m}.
    const auto pm_wed = having([](const graph& g) {
        return g.order() >= 2 && has_perfect_matching(g) && is_well_edge_dominated(g).holds();
    });
    run_suite("perfect_matching_wed", pm_wed, [&](const detail::keyed_graph& kg, const auto&) {
        detail::instance r;
        r.inputs = {kg.key};
        const int m = kg.g.order() / 2;
        const bool k4 = isomorphic(kg.g, named::complete(4));
        const bool kmm = isomorphic(kg.g, named::complete_bipartite(m, m));
        r.verdicts = {{"is_k4", k4}, {"is_kmm", kmm}};
        if (!k4 && !kmm)
            r.fail("WED with a perfect matching but neither K4 nor K_{m,m}");
        return r;
    });

    // 2-connected equimatchable graphs are factor-critical, bipartite, or
    // complete of even order.
    const auto two_conn = having([](const graph& g) { return is_k_connected(g, 2) && is_equimatchable(g).holds(); });
    run_suite("two_connected_equimatchable", two_conn, [&](const detail::keyed_graph& kg, const auto&) {
        detail::instance r;
        r.inputs = {kg.key};
        const bool fc = is_factor_critical(kg.g), bip = is_bipartite(kg.g);
        const bool even_complete = is_complete(kg.g) && kg.g.order() % 2 == 0;
        r.verdicts = {{"factor_critical", fc}, {"bipartite", bip}, {"even_complete", even_complete}};
        if (!fc && !bip && !even_complete)
            r.fail("2-connected equimatchable graph of none of the three kinds");
        return r;
    });

    // Odd connected graphs with α <= 2 are equimatchable.
    const auto small_alpha = having([](const graph& g) { return g.order() % 2 == 1 && independence_number(g) <= 2; });
    run_suite("alpha_two_odd", small_alpha, [&](const detail::keyed_graph& kg, const auto& clock) {
        detail::instance r;
        r.inputs = {kg.key};
        const auto v = is_equimatchable(kg.g, clock.remaining());
        r.verdicts = {{"alpha", independence_number(kg.g)}, {"equimatchable", to_string(v.state)}};
        r.certificates = {{"maximal_matchings", verdict_certificate(cert_kind::maximal_matchings, kg.g, v)}};
        if (v.inconclusive())
            r.inconclusive("time budget exhausted");
        else if (!v.holds())
            r.fail("odd connected graph with alpha <= 2 is not equimatchable");
        return r;
    });

    // Strong products of nontrivial connected graphs are 2-connected.
    run_suite("product_two_connected", detail::unordered_pairs(nontrivial, side_product_cap),
              [&](const auto& pr, const auto&) {
                  detail::instance r;
                  r.inputs = {pr.first.key, pr.second.key};
                  const auto p = strong_product(pr.first.g, pr.second.g);
                  const bool ok = is_k_connected(p.graph(), 2);
                  r.verdicts = {{"two_connected", ok}};
                  if (!ok)
                      r.fail("product is not 2-connected");
                  return r;
              });

    // Without induced C4 or C5, well-covered and well-dominated coincide.
    const auto no_c45 = having([](const graph& g) {
        return !detail::has_induced_cycle(g, 4) && !detail::has_induced_cycle(g, 5);
    });
    run_suite("well_covered_equivalence", no_c45, [&](const detail::keyed_graph& kg, const auto& clock) {
        detail::instance r;
        r.inputs = {kg.key};
        const auto wc = is_well_covered(kg.g, clock.remaining());
        const auto wd = is_well_dominated(kg.g, clock.remaining());
        r.verdicts = {{"well_covered", to_string(wc.state)}, {"well_dominated", to_string(wd.state)}};
        r.certificates = {{"maximal_independent_sets", verdict_certificate(cert_kind::maximal_independent, kg.g, wc)},
                          {"minimal_dominating_sets", verdict_certificate(cert_kind::minimal_dominating, kg.g, wd)}};
        if (wc.inconclusive() || wd.inconclusive())
            r.inconclusive("time budget exhausted");
        else if (wc.holds() != wd.holds())
            r.fail("well-covered and well-dominated disagree");
        return r;
    });

    // WED implies equimatchable.
    run_suite("wed_implies_equimatchable", nontrivial, [&](const detail::keyed_graph& kg, const auto& clock) {
        detail::instance r;
        r.inputs = {kg.key};
        const auto wed = is_well_edge_dominated(kg.g, wed_mode::full, clock.remaining());
        const auto eqm = is_equimatchable(kg.g, clock.remaining());
        r.verdicts = {{"well_edge_dominated", to_string(wed.state)}, {"equimatchable", to_string(eqm.state)}};
        if (wed.inconclusive() || eqm.inconclusive())
            r.inconclusive("time budget exhausted");
        else if (wed.holds() && !eqm.holds())
            r.fail("well-edge-dominated but not equimatchable");
        return r;
    });

    campaign_report ge = verify_gallai_edmonds(1, max_n, opt);
    per_suite["gallai_edmonds"] = {{"instances", ge.records.size()}, {"violations", ge.violations.size()}};
    for (json& rec : ge.records) {
        rec["campaign"] = rep.campaign;
        json v = {{"suite", "gallai_edmonds"}};
        for (auto& [k, val] : rec["verdicts"].items())
            v[k] = val;
        rec["verdicts"] = std::move(v);
    }
    for (std::string& s : ge.violations)
        s = "gallai_edmonds " + s;
    rep.merge(std::move(ge));
    rep.extra = {{"suites", per_suite}};
    return rep;
}

// The explicit constructions: star products, P3 and K3 products, product
// matchings on `random_pairs` seeded pairs of connected graphs on 2..5
// vertices.
inline campaign_report verify_witnesses(int random_pairs = 20, std::uint32_t seed = 20240101,
                                        const campaign_options& opt = {})
{
    campaign_report rep;
    rep.campaign = "witnesses";
    rep.parameters = {{"random_pairs", random_pairs}, {"seed", seed}};

    struct job {
        std::string kind;
        std::vector<graph> gs;
        std::vector<int> params;
    };
    std::vector<job> jobs;
    jobs.push_back({"mup_star_star", {}, {2, 2}});
    for (int n = 2; n <= 4; ++n)
        jobs.push_back({"mup_star_triangle", {}, {n}});
    for (const auto& kg : detail::keyed(enumerate_connected_graphs(1, 5)))
        if (kg.g.order() % 2 == 1 && kg.g.order() >= 3 && !is_complete(kg.g))
            jobs.push_back({"p3_witness", {kg.g}, {}});
    jobs.push_back({"k3_witness", {named::cycle(7)}, {}});
    const auto pool = detail::keyed(enumerate_connected_graphs(2, 5));
    std::mt19937 rng(seed);
    for (int i = 0; i < random_pairs; ++i) {
        const graph& a = pool[rng() % pool.size()].g;
        const graph& b = pool[rng() % pool.size()].g;
        jobs.push_back({"product_matching", {a, b}, {}});
    }

    detail::run_instances(rep, jobs, opt, [&](const job& jb, const detail::instance_clock&) {
        witness_report w;
        if (jb.kind == "mup_star_star")
            w = mup_star_star(jb.params[0], jb.params[1]);
        else if (jb.kind == "mup_star_triangle")
            w = mup_star_triangle(jb.params[0]);
        else if (jb.kind == "p3_witness")
            w = p3_witness(jb.gs[0]);
        else if (jb.kind == "k3_witness")
            w = k3_witness(jb.gs[0], find_independent_triple(jb.gs[0]).to_vector());
        else
            w = product_matching(jb.gs[0], jb.gs[1]);
        return detail::witness_instance(w, jb.kind, jb.params);
    });
    return rep;
}

// Every predicate on one graph, with certificates. Used by the props and
// product commands.
inline campaign_report graph_properties(const graph& g, const campaign_options& opt = {},
                                        const std::string& campaign = "props",
                                        std::vector<std::string> inputs = {})
{
    campaign_report rep;
    rep.campaign = campaign;
    rep.parameters = {{"time_budget_ms", opt.time_budget_ms}};
    detail::instance_clock clock(opt.time_budget_ms);
    detail::instance r;
    r.inputs = inputs.empty() ? std::vector<std::string>{to_graph6(g)} : std::move(inputs);
    const auto wd = is_well_dominated(g, clock.remaining());
    const auto wc = is_well_covered(g, clock.remaining());
    const auto eqm = is_equimatchable(g, clock.remaining());
    const auto cert = trivially_well_dominated_certificate(g);
    r.verdicts = {{"graph6", to_graph6(g)},
                  {"canonical", canonical_key(g)},
                  {"order", g.order()},
                  {"size", g.size()},
                  {"connected", is_connected(g)},
                  {"two_connected", is_k_connected(g, 2)},
                  {"bipartite", is_bipartite(g)},
                  {"complete", is_complete(g)},
                  {"domination_number", domination_number(g)},
                  {"independence_number", independence_number(g)},
                  {"matching_number", matching_number(g)},
                  {"perfect_matching", has_perfect_matching(g)},
                  {"near_perfect_matching", has_near_perfect_matching(g)},
                  {"factor_critical", is_factor_critical(g)},
                  {"well_dominated", to_string(wd.state)},
                  {"trivially_well_dominated", cert.has_value()},
                  {"well_covered", to_string(wc.state)},
                  {"equimatchable", to_string(eqm.state)}};
    r.certificates = {{"minimal_dominating_sets", verdict_certificate(cert_kind::minimal_dominating, g, wd)},
                      {"maximal_independent_sets", verdict_certificate(cert_kind::maximal_independent, g, wc)},
                      {"maximal_matchings", verdict_certificate(cert_kind::maximal_matchings, g, eqm)}};
    bool undecided = wd.inconclusive() || wc.inconclusive() || eqm.inconclusive();
    if (g.size() > 0) {
        const auto wed = is_well_edge_dominated(g, wed_mode::full, clock.remaining());
        r.verdicts["well_edge_dominated"] = to_string(wed.state);
        r.certificates["minimal_edge_dominating_sets"] = verdict_certificate(cert_kind::minimal_eds, g, wed);
        undecided = undecided || wed.inconclusive();
    } else {
        r.verdicts["well_edge_dominated"] = nullptr;
    }
    if (cert)
        r.certificates["clique_partition"] = clique_partition_json(g, *cert);
    if (undecided)
        r.inconclusive("time budget exhausted");
    rep.add(make_record(rep.campaign, r.inputs, std::move(r.verdicts), std::move(r.certificates), r.status,
                        opt.timing ? std::optional<std::int64_t>(clock.elapsed_ms()) : std::nullopt),
            r.why);
    return rep;
}

// A(G), C(G), D(G) and the structure checks for one graph.
inline campaign_report decomposition_report(const graph& g, const campaign_options& opt = {})
{
    campaign_report rep;
    rep.campaign = "decompose";
    detail::instance_clock clock(opt.time_budget_ms);
    detail::instance r;
    r.inputs = {to_graph6(g)};
    const auto dec = decompose(g);
    json comps = json::array();
    for (const vertex_set& k : dec.d_components)
        comps.push_back(to_json(k));
    r.verdicts = {{"a", to_json(dec.a)},
                  {"c", to_json(dec.c)},
                  {"d", to_json(dec.d)},
                  {"d_components", comps},
                  {"matching_number", matching_number(g)}};
    for (const std::string& v : verify_structure(g, dec).violations)
        r.fail(v);
    if (g.order() % 2 == 1 && is_connected(g) && is_equimatchable(g).holds()) {
        const auto lemma = check_lemma_independent(g);
        r.verdicts["c_empty_a_independent"] = lemma.ok();
        for (const std::string& v : lemma.violations)
            r.fail(v);
    }
    rep.add(make_record(rep.campaign, r.inputs, std::move(r.verdicts), std::move(r.certificates), r.status,
                        opt.timing ? std::optional<std::int64_t>(clock.elapsed_ms()) : std::nullopt),
            r.why);
    return rep;
}

// One witness construction as a single-record report.
inline campaign_report witness_campaign(const witness_report& w, const std::string& kind,
                                        const std::vector<int>& params = {})
{
    campaign_report rep;
    rep.campaign = "witness";
    detail::instance r = detail::witness_instance(w, kind, params);
    rep.add(make_record(rep.campaign, r.inputs, std::move(r.verdicts), std::move(r.certificates), r.status,
                        std::nullopt),
            r.why);
    return rep;
}

} // namespace strongprod

#endif // STRONGPROD_CAMPAIGNS_HPP
