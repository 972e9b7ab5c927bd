// strongprod: command-line front end.
//
// Exit codes: 0 all checks passed, 1 violations found, 2 usage / parse /
// domain error, 3 inconclusive results present.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <strongprod/strongprod.hpp>

namespace sp = strongprod;

namespace {

constexpr int exit_usage = 2;

// "named:<id>[:params]", a file holding graph6 lines (first graph used), or
// a literal graph6 string.
sp::graph read_graph(const std::string& arg)
{
    if (arg.rfind("named:", 0) == 0)
        return sp::parse_named(arg);
    std::ifstream in(arg);
    if (in) {
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                line.pop_back();
            if (!line.empty() && line[0] != '#')
                return sp::from_graph6(line);
        }
        throw sp::parse_error(arg + ": no graph6 lines", 0);
    }
    return sp::from_graph6(arg);
}

struct output_sink {
    std::string path;

    void write(const std::string& text) const
    {
        if (path.empty() || path == "-") {
            std::cout << text << std::flush;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw sp::domain_error("cannot write " + path);
        out << text;
    }
};

int emit(const output_sink& sink, const sp::campaign_report& rep)
{
    sink.write(rep.to_jsonl());
    for (const std::string& v : rep.violations)
        std::cerr << rep.campaign << ": " << v << '\n';
    return rep.exit_code();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Strong product graphs: domination, matching and census tools"};
    app.require_subcommand(1);

    sp::campaign_options opt;
    opt.jobs = sp::default_jobs();
    std::string output;
    app.add_option("--output,-o", output, "write JSONL here instead of stdout");
    app.add_option("--time-budget-ms", opt.time_budget_ms, "per-instance time budget (<= 0: none)")
        ->capture_default_str();
    app.add_option("--jobs,-j", opt.jobs, "worker threads (default: STRONGPROD_JOBS or 1)")
        ->check(CLI::PositiveNumber);
    app.add_flag("--timing", opt.timing, "record per-instance milliseconds (output no longer reproducible)");

    std::string graph_arg, graph_arg2;

    auto* props = app.add_subcommand("props", "all predicate verdicts and certificates for one graph");
    props->add_option("graph", graph_arg, "graph6, file, or named:<id>")->required();

    auto* product = app.add_subcommand("product", "build G x H and report its predicates");
    product->add_option("G", graph_arg, "first factor")->required();
    product->add_option("H", graph_arg2, "second factor")->required();

    int census_n = 0;
    std::optional<int> census_from;
    auto* census = app.add_subcommand("census", "connected well-dominated graphs on n vertices");
    census->add_option("n", census_n, "order (1..7)")->required()->check(CLI::Range(1, sp::generator_max_order));
    census->add_option("--from", census_from, "also include orders from this one up to n")
        ->check(CLI::Range(1, sp::generator_max_order));

    std::string which;
    int max_g = 5, max_h = 5, max_product = 16, max_n = 6;
    auto* verify = app.add_subcommand("verify", "run a verification campaign");
    verify->add_option("campaign", which, "theorem1 | theorem2 | theorem3 | side | gallai-edmonds | witnesses")
        ->required()
        ->check(CLI::IsMember({"theorem1", "theorem2", "theorem3", "side", "gallai-edmonds", "witnesses"}));
    auto* max_g_opt = verify->add_option("--max-g", max_g, "largest G factor")->check(CLI::PositiveNumber);
    auto* max_h_opt = verify->add_option("--max-h", max_h, "largest H factor")->check(CLI::PositiveNumber);
    verify->add_option("--max-product", max_product, "largest product order")->check(CLI::PositiveNumber);
    verify->add_option("--max-n", max_n, "largest graph order for side / gallai-edmonds")
        ->check(CLI::Range(1, sp::generator_max_order));

    std::string candidates;
    auto* conjecture = app.add_subcommand("conjecture", "search for H with G x H not well-dominated");
    conjecture->add_option("graph", graph_arg, "a well-dominated, not trivially well-dominated graph")->required();
    conjecture->add_option("--candidates", candidates, "graph6 file of candidate H (default: generated)");

    std::string construction;
    std::vector<std::string> witness_args;
    auto* witness = app.add_subcommand("witness", "run one explicit matching construction");
    witness
        ->add_option("construction", construction,
                     "mup-star-star N T | mup-star-triangle N | p3 G | k3 G | product-matching G H | triple G")
        ->required();
    witness->add_option("args", witness_args, "construction parameters");

    auto* decompose = app.add_subcommand("decompose", "Gallai-Edmonds decomposition of one graph");
    decompose->add_option("graph", graph_arg, "graph6, file, or named:<id>")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    const output_sink sink{output};
    try {
        if (*props) {
            const sp::graph g = read_graph(graph_arg);
            return emit(sink, sp::graph_properties(g, opt));
        }
        if (*product) {
            const sp::graph g = read_graph(graph_arg), h = read_graph(graph_arg2);
            const auto p = sp::strong_product(g, h, sp::graph6_max_order);
            return emit(sink, sp::graph_properties(p.graph(), opt, "product", {sp::to_graph6(g), sp::to_graph6(h)}));
        }
        if (*census)
            return emit(sink, sp::census_well_dominated(census_from.value_or(census_n), census_n, opt));
        if (*verify) {
            if (which == "theorem1")
                return emit(sink, sp::verify_theorem1(max_g, max_h, opt));
            if (which == "theorem2")
                return emit(sink, sp::verify_theorem2(max_g_opt->count() ? max_g : 4, max_h_opt->count() ? max_h : 4,
                                                      opt));
            if (which == "theorem3")
                return emit(sink, sp::verify_theorem3(max_product, opt));
            if (which == "side")
                return emit(sink, sp::verify_side_properties(max_n, opt));
            if (which == "gallai-edmonds")
                return emit(sink, sp::verify_gallai_edmonds(1, max_n, opt));
            return emit(sink, sp::verify_witnesses(20, 20240101, opt));
        }
        if (*conjecture) {
            const sp::graph g = read_graph(graph_arg);
            sp::corpus pool;
            if (candidates.empty()) {
                pool = sp::default_conjecture_candidates();
            } else {
                std::ifstream in(candidates);
                if (!in)
                    throw sp::domain_error("cannot read " + candidates);
                pool = sp::read_graph6_corpus(in, candidates, 1, sp::graph6_max_order, false);
            }
            const auto res = sp::conjecture_explore(g, pool, opt);
            sink.write(res.report.to_jsonl());
            if (res.witness)
                std::cerr << "witness: " << sp::to_graph6(*res.witness) << '\n';
            else
                std::cerr << "no witness among " << pool.size() << " candidates\n";
            return res.exit_code();
        }
        if (*witness) {
            auto need = [&](std::size_t k) {
                if (witness_args.size() != k)
                    throw sp::domain_error(construction + " takes " + std::to_string(k) + " argument(s)");
            };
            auto number = [&](std::size_t i) { return sp::detail::parse_int(witness_args[i]); };
            if (construction == "mup-star-star") {
                need(2);
                return emit(sink, sp::witness_campaign(sp::mup_star_star(number(0), number(1)), construction,
                                                       {number(0), number(1)}));
            }
            if (construction == "mup-star-triangle") {
                need(1);
                return emit(sink,
                            sp::witness_campaign(sp::mup_star_triangle(number(0)), construction, {number(0)}));
            }
            if (construction == "p3") {
                need(1);
                return emit(sink, sp::witness_campaign(sp::p3_witness(read_graph(witness_args[0])), construction));
            }
            if (construction == "k3" || construction == "triple") {
                need(1);
                const sp::graph g = read_graph(witness_args[0]);
                const std::vector<int> s = sp::find_independent_triple(g).to_vector();
                if (construction == "triple") {
                    sp::json rec = sp::make_record("witness", {sp::to_graph6(g)},
                                                   {{"construction", construction}, {"independent_triple", s}},
                                                   sp::json::object(), "pass", std::nullopt);
                    sink.write(rec.dump() + "\n");
                    return 0;
                }
                return emit(sink, sp::witness_campaign(sp::k3_witness(g, s), construction, s));
            }
            if (construction == "product-matching") {
                need(2);
                return emit(sink, sp::witness_campaign(sp::product_matching(read_graph(witness_args[0]),
                                                                            read_graph(witness_args[1])),
                                                       construction));
            }
            throw sp::domain_error("unknown construction '" + construction + "'");
        }
        if (*decompose)
            return emit(sink, sp::decomposition_report(read_graph(graph_arg), opt));
    } catch (const sp::theorem_violation& e) {
        std::cerr << "theorem violation: " << e.what() << '\n';
        return 1;
    } catch (const sp::parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
