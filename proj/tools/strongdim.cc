/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongdim/dot.hh>
#include <strongdim/error.hh>
#include <strongdim/exact.hh>
#include <strongdim/generators.hh>
#include <strongdim/graph6.hh>
#include <strongdim/metrics.hh>
#include <strongdim/products.hh>
#include <strongdim/report.hh>
#include <strongdim/strong_dim.hh>
#include <strongdim/strong_resolving.hh>
#include <strongdim/verifier.hh>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace strongdim;

using nlohmann::json;
using std::cerr;
using std::cout;
using std::string;
using std::vector;

namespace
{
    constexpr int exit_ok = 0, exit_error = 1, exit_counterexample = 2, exit_inconclusive = 3;

    auto read_first_line(std::istream & in, const string & where) -> string
    {
        string line;
        while (std::getline(in, line)) {
            if (! line.empty() && line.back() == '\r')
                line.pop_back();
            if (! line.empty())
                return line;
        }
        throw Error(ErrorKind::parse_error, "no graph6 line in " + where);
    }

    /// A source with ':' is a generator spec, anything else graph6.
    auto load_graph(const string & source) -> Graph
    {
        if (source.find(':') != string::npos && ! source.starts_with(">>graph6<<"))
            return generate(parse_family(source));
        return from_graph6(source);
    }

    auto members_text(const VertexSet & s, const vector<string> & labels = {}) -> string
    {
        string result;
        for (auto v : s.members()) {
            if (! result.empty())
                result += ' ';
            result += labels.empty() ? std::to_string(v) : "(" + labels[v] + ")";
        }
        return result;
    }

    auto members_json(const VertexSet & s, const vector<string> & labels = {}) -> json
    {
        json result = json::array();
        for (auto v : s.members())
            if (labels.empty())
                result.push_back(v);
            else
                result.push_back(labels[v]);
        return result;
    }

    auto edges_json(const Graph & g) -> json
    {
        json result = json::array();
        for (auto & [u, v] : g.edges())
            result.push_back({ u, v });
        return result;
    }

    auto edges_text(const Graph & g) -> string
    {
        string result;
        for (auto & [u, v] : g.edges())
            result += (result.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
        return result;
    }

    auto write_output(const string & path, const string & text) -> void
    {
        std::ofstream out(path, std::ios::binary);
        if (! out)
            throw Error(ErrorKind::invalid_argument, "cannot write " + path);
        out << text;
    }

    // ---- compute -----------------------------------------------------------

    struct ComputeArgs
    {
        string what;
        string gen, g6, input;
        string format = "text";
        std::uint64_t budget = default_node_budget;
    };

    auto compute_source(const ComputeArgs & a) -> Graph
    {
        int given = ! a.gen.empty() + ! a.g6.empty() + ! a.input.empty();
        if (given > 1)
            throw Error(ErrorKind::invalid_argument, "give at most one of --gen, --g6, --input");
        if (! a.gen.empty())
            return generate(parse_family(a.gen));
        if (! a.g6.empty())
            return from_graph6(a.g6);
        if (! a.input.empty()) {
            std::ifstream in(a.input);
            if (! in)
                throw Error(ErrorKind::invalid_argument, "cannot read " + a.input);
            return from_graph6(read_first_line(in, a.input));
        }
        return from_graph6(read_first_line(std::cin, "standard input"));
    }

    /// Scalar quantity with a vertex-set witness, in any format.
    auto emit_set_quantity(const string & what, const Graph & g, int value, const VertexSet & witness,
            const string & witness_name, const string & format) -> void
    {
        if (format == "json")
            cout << json{ { "quantity", what }, { "value", value }, { witness_name, members_json(witness) } }.dump(2) << "\n";
        else if (format == "csv")
            cout << "quantity,value," << witness_name << "\n" << what << "," << value << "," << members_text(witness) << "\n";
        else if (format == "dot") {
            DotOptions options;
            options.highlight = witness.members();
            cout << to_dot(g, options);
        }
        else
            cout << value << "\n" << witness_name << ": " << members_text(witness) << "\n";
    }

    auto run_compute(const ComputeArgs & a) -> int
    {
        auto g = compute_source(a);

        if (a.what == "dim-s") {
            auto r = strong_metric_dimension(g, a.budget);
            emit_set_quantity(a.what, g, r.dim, r.basis, "basis", a.format);
        }
        else if (a.what == "alpha") {
            auto r = exact_vertex_cover(g, a.budget);
            emit_set_quantity(a.what, g, r.size, r.witness, "cover", a.format);
        }
        else if (a.what == "beta") {
            auto s = max_independent_set(g, a.budget);
            emit_set_quantity(a.what, g, s.count(), s, "independent_set", a.format);
        }
        else if (a.what == "boundary") {
            auto b = boundary(g);
            emit_set_quantity(a.what, g, b.count(), b, "boundary", a.format);
        }
        else if (a.what == "sr-graph" || a.what == "mmd-pairs") {
            auto sr = strong_resolving_graph(g).sr;
            if (a.format == "json")
                cout << json{ { "quantity", a.what }, { "order", sr.order() }, { "edges", edges_json(sr) },
                    { "graph6", to_graph6(sr) } }.dump(2) << "\n";
            else if (a.format == "csv") {
                cout << "u,v\n";
                for (auto & [u, v] : sr.edges())
                    cout << u << "," << v << "\n";
            }
            else if (a.format == "dot")
                cout << to_dot(sr, DotOptions{ "SR", {}, {}, {} });
            else
                cout << sr.size() << "\n" << "pairs: " << edges_text(sr) << "\n";
        }
        else if (a.what == "theta") {
            auto c = clique_cover_number(g);
            json parts = json::array();
            string text;
            for (auto & p : c.partition.parts) {
                parts.push_back(members_json(p));
                text += (text.empty() ? "{" : " {") + members_text(p) + "}";
            }
            if (a.format == "json")
                cout << json{ { "quantity", a.what }, { "value", c.count }, { "partition", parts } }.dump(2) << "\n";
            else if (a.format == "csv")
                cout << "quantity,value,partition\n" << a.what << "," << c.count << "," << text << "\n";
            else if (a.format == "dot") {
                DotOptions options;
                for (auto & [u, v] : g.edges())
                    for (std::size_t i = 0 ; i < c.partition.parts.size() ; ++i)
                        if (c.partition.parts[i].contains(u) && c.partition.parts[i].contains(v))
                            options.edge_labels[{ u, v }] = "clique " + std::to_string(i);
                cout << to_dot(g, options);
            }
            else
                cout << c.count << "\n" << "partition: " << text << "\n";
        }
        else
            throw Error(ErrorKind::invalid_argument, "unknown quantity '" + a.what + "'");
        return exit_ok;
    }

    // ---- product -----------------------------------------------------------

    struct ProductArgs
    {
        string kind, g, h;
        bool sr = false, dim_s = false;
        string format = "text";
        std::uint64_t budget = default_node_budget;
    };

    auto run_product(const ProductArgs & a) -> int
    {
        auto kind = parse_product_kind(a.kind);
        auto g = load_graph(a.g), h = load_graph(a.h);
        auto p = product(kind, g, h);
        ProductSpec spec{ kind, g.order(), h.order() };
        auto labels = spec.coordinate_labels();

        std::optional<Graph> sr;
        std::map<Edge, string> tags;
        if (a.sr) {
            sr = strong_resolving_graph(p).sr;
            if (kind == ProductKind::strong)
                for (auto & e : predicted_mmd_edges(g, h).edges)
                    tags[{ std::min(e.a, e.b), std::max(e.a, e.b) }] = string(mmd_condition_tag(e.condition));
        }
        std::optional<DimensionResult> dim;
        if (a.dim_s)
            dim = strong_metric_dimension(p, a.budget);

        if (a.format == "json") {
            json out{ { "kind", product_kind_name(kind) }, { "order", p.order() }, { "size", p.size() },
                { "graph6", to_graph6(p) }, { "labels", labels } };
            if (sr) {
                json edges = json::array();
                for (auto & [u, v] : sr->edges()) {
                    json e{ { "u", labels[u] }, { "v", labels[v] } };
                    if (auto t = tags.find({ u, v }) ; t != tags.end())
                        e["condition"] = t->second;
                    edges.push_back(e);
                }
                out["sr_edges"] = edges;
            }
            if (dim) {
                out["dim_s"] = dim->dim;
                out["basis"] = members_json(dim->basis, labels);
            }
            cout << out.dump(2) << "\n";
        }
        else if (a.format == "dot") {
            DotOptions options;
            options.labels = labels;
            if (dim)
                options.highlight = dim->basis.members();
            if (sr) {
                options.name = "SR";
                options.edge_labels = tags;
                cout << to_dot(*sr, options);
            }
            else
                cout << to_dot(p, options);
        }
        else if (a.format == "csv") {
            cout << "kind,order,size,graph6" << (dim ? ",dim_s" : "") << "\n"
                << product_kind_name(kind) << "," << p.order() << "," << p.size() << "," << to_graph6(p);
            if (dim)
                cout << "," << dim->dim;
            cout << "\n";
        }
        else {
            if (dim)
                cout << dim->dim << "\n" << "basis: " << members_text(dim->basis, labels) << "\n";
            cout << "order: " << p.order() << "\n" << "size: " << p.size() << "\n" << "graph6: " << to_graph6(p) << "\n";
            if (sr) {
                cout << "sr edges: " << sr->size() << "\n";
                for (auto & [u, v] : sr->edges()) {
                    cout << "  (" << labels[u] << ") - (" << labels[v] << ")";
                    if (auto t = tags.find({ u, v }) ; t != tags.end())
                        cout << " [" << t->second << "]";
                    cout << "\n";
                }
            }
        }
        return exit_ok;
    }

    // ---- verify ------------------------------------------------------------

    struct VerifyArgs
    {
        string claim;
        CorpusSpec corpus;
        std::uint64_t seed = 42;
        int r = 0, t = 0;
        bool trees = false;
        string out, csv, format = "text";
        unsigned jobs = 1;
        bool timing = false;
    };

    auto run_verify(VerifyArgs a) -> int
    {
        if (a.r > 0)
            a.corpus.r = a.r;
        if (a.t > 0)
            a.corpus.t = a.t;
        if (a.trees)
            a.corpus.filter = FactorFilter::trees;

        vector<string> only;
        if (a.claim != "all")
            only.push_back(string(find_claim(a.claim).id));

        auto reports = run_suite(a.corpus, a.seed, a.jobs, only);
        ReportOptions options{ a.timing };
        auto document = suite_to_json(reports, a.corpus, a.seed, options);

        if (! a.out.empty())
            write_output(a.out, document.dump(2) + "\n");
        if (! a.csv.empty())
            write_output(a.csv, suite_to_csv(reports, options));

        if (a.format == "json")
            cout << document.dump(2) << "\n";
        else if (a.format == "csv")
            cout << suite_to_csv(reports, options);
        else
            for (auto & r : reports) {
                cout << r.claim_id << ": " << claim_status_name(r.status) << " (" << r.passed << " passed, "
                    << r.failed << " failed, " << r.skipped << " skipped, " << r.inconclusive << " inconclusive)";
                if (a.timing)
                    cout << " " << static_cast<long>(r.elapsed_ms) << " ms";
                cout << "\n";
                for (auto & note : r.notes)
                    cout << "  " << note << "\n";
            }

        bool counterexample = false, inconclusive = false;
        for (auto & r : reports) {
            counterexample |= r.status == ClaimStatus::counterexample;
            inconclusive |= r.status == ClaimStatus::inconclusive;
        }
        return counterexample ? exit_counterexample : inconclusive ? exit_inconclusive : exit_ok;
    }

    // ---- replay ------------------------------------------------------------

    struct ReplayArgs
    {
        string report, claim;
        int index = -1;
    };

    auto run_replay(const ReplayArgs & a) -> int
    {
        std::ifstream in(a.report);
        if (! in)
            throw Error(ErrorKind::invalid_argument, "cannot read " + a.report);
        json document;
        try {
            document = json::parse(in);
        }
        catch (const json::exception & e) {
            throw Error(ErrorKind::parse_error, string("report is not JSON: ") + e.what());
        }

        for (auto & c : document.value("claims", json::array())) {
            if (c.value("claim_id", "") != a.claim)
                continue;
            auto & instances = c.at("instances");
            vector<int> targets;
            if (a.index >= 0)
                targets.push_back(a.index);
            else
                for (std::size_t i = 0 ; i < instances.size() ; ++i)
                    if (instances[i].value("verdict", "") == "failed")
                        targets.push_back(static_cast<int>(i));

            bool any_failed = false;
            for (auto i : targets) {
                if (i >= static_cast<int>(instances.size()))
                    throw Error(ErrorKind::invalid_argument, "instance index out of range");
                auto record = instance_record_from_json(instances[i]);
                auto outcome = replay(a.claim, record);
                bool same = outcome.verdict == record.outcome.verdict && outcome.expected == record.outcome.expected
                    && outcome.actual == record.outcome.actual;
                cout << "instance " << i << ": " << verdict_name(outcome.verdict)
                    << (same ? " (reproduced)" : " (differs from report)") << "\n";
                if (! outcome.note.empty())
                    cout << "  " << outcome.note << "\n";
                any_failed |= outcome.verdict == Verdict::failed;
            }
            return any_failed ? exit_counterexample : exit_ok;
        }
        throw Error(ErrorKind::unknown_claim, "claim '" + a.claim + "' not in report");
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Strong metric dimension of graph products: compute, construct, verify" };
    app.require_subcommand(1);

    ComputeArgs compute;
    auto * c = app.add_subcommand("compute", "Compute one quantity of a graph");
    c->add_option("what", compute.what, "dim-s, sr-graph, alpha, beta, boundary, mmd-pairs or theta")->required()
        ->check(CLI::IsMember({ "dim-s", "sr-graph", "alpha", "beta", "boundary", "mmd-pairs", "theta" }));
    c->add_option("--gen", compute.gen, "Generator spec, e.g. cycle:7, kpartite:2,2,3, grid:3x4");
    c->add_option("--g6", compute.g6, "Graph in graph6");
    c->add_option("--input", compute.input, "File whose first line is graph6 (default: standard input)");
    c->add_option("--format", compute.format)->check(CLI::IsMember({ "text", "json", "dot", "csv" }));
    c->add_option("--budget", compute.budget, "Branch and bound node budget");

    ProductArgs prod;
    auto * p = app.add_subcommand("product", "Build a product of two graphs");
    p->add_option("kind", prod.kind, "strong, cartesian, lexicographic or sum")->required();
    p->add_option("G", prod.g, "First factor (generator spec or graph6)")->required();
    p->add_option("H", prod.h, "Second factor (generator spec or graph6)")->required();
    p->add_flag("--sr", prod.sr, "Also build the strong resolving graph");
    p->add_flag("--dim-s", prod.dim_s, "Also compute dim_s with a basis");
    p->add_option("--format", prod.format)->check(CLI::IsMember({ "text", "json", "dot", "csv" }));
    p->add_option("--budget", prod.budget, "Branch and bound node budget");

    VerifyArgs ver;
    auto * v = app.add_subcommand("verify", "Check a claim (or all) over the instance corpus");
    v->add_option("claim", ver.claim, "Claim id or 'all'")->required();
    v->add_option("--exhaustive-n", ver.corpus.exhaustive_n, "All connected graphs up to this order")->check(CLI::Range(2, 6));
    v->add_option("--samples", ver.corpus.samples, "Seeded pairs per claim")->check(CLI::NonNegativeNumber);
    v->add_option("--max-product", ver.corpus.max_product, "Largest product order built")->check(CLI::PositiveNumber);
    v->add_option("--seed", ver.seed, "64-bit corpus seed");
    v->add_option("--t-max", ver.corpus.t_max, "Largest t for C3 x C_{2t+1}")->check(CLI::Range(1, 64));
    v->add_option("--odd-max", ver.corpus.odd_max, "Largest r, t for odd-cycle pairs")->check(CLI::Range(1, 64));
    v->add_option("--oracle-samples", ver.corpus.oracle_samples, "Seeded graphs for the brute-force comparison")
        ->check(CLI::NonNegativeNumber);
    v->add_option("--r", ver.r, "Restrict odd-cycle claims to this r")->check(CLI::PositiveNumber);
    v->add_option("--t", ver.t, "Restrict odd-cycle claims to this t")->check(CLI::PositiveNumber);
    v->add_flag("--trees", ver.trees, "Restrict factors to trees");
    v->add_option("--out", ver.out, "Write the JSON report here");
    v->add_option("--csv", ver.csv, "Write the CSV summary here");
    v->add_option("--format", ver.format, "Standard output format")->check(CLI::IsMember({ "text", "json", "csv" }));
    v->add_option("--jobs", ver.jobs, "Worker threads")->check(CLI::Range(1, 256));
    v->add_flag("--timing", ver.timing, "Include wall-clock times (output is then not reproducible)");

    ReplayArgs rep;
    auto * r = app.add_subcommand("replay", "Re-check instances stored in a JSON report");
    r->add_option("report", rep.report, "Report written by verify --out")->required();
    r->add_option("claim", rep.claim, "Claim id")->required();
    r->add_option("--index", rep.index, "Instance index (default: every failed instance)");

    auto * l = app.add_subcommand("claims", "List the registered claims");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        cerr << "error: usage: " << e.what() << "\n";
        return exit_error;
    }

    try {
        if (*c)
            return run_compute(compute);
        if (*p)
            return run_product(prod);
        if (*v)
            return run_verify(ver);
        if (*r)
            return run_replay(rep);
        if (*l) {
            for (auto & claim : claim_registry())
                cout << claim.id << "\t" << claim.statement << "\n";
            return exit_ok;
        }
    }
    catch (const Error & e) {
        cerr << "error: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
        return e.kind() == ErrorKind::budget_exhausted ? exit_inconclusive : exit_error;
    }
    catch (const std::exception & e) {
        cerr << "error: internal: " << e.what() << "\n";
        return exit_error;
    }
    return exit_error;
}
