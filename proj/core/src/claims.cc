/* vim: set sw=4 sts=4 et foldmethod=syntax : */

// The claim registry: one entry per checked statement about the strong metric
// dimension of products and related graph invariants. Each entry builds its
// instance family from a CorpusSpec and an RNG, and checks one instance at a
// time. Hypotheses are tested explicitly so an instance outside a claim's
// scope is reported as skipped.

#include <strongdim/verifier.hh>
#include <strongdim/error.hh>
#include <strongdim/exact.hh>
#include <strongdim/formulas.hh>
#include <strongdim/graph6.hh>
#include <strongdim/isomorphism.hh>
#include <strongdim/metrics.hh>
#include <strongdim/products.hh>
#include <strongdim/strong_dim.hh>
#include <strongdim/strong_resolving.hh>

#include <algorithm>
#include <map>
#include <string>

using namespace strongdim;

using nlohmann::json;
using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace
{
    auto judged(bool ok, json expected, json actual, string note = "") -> Outcome
    {
        return Outcome{ ok ? Verdict::passed : Verdict::failed, std::move(expected), std::move(actual), nullptr,
            ok ? "" : std::move(note) };
    }

    auto skip(string why) -> Outcome
    {
        return Outcome{ Verdict::skipped, nullptr, nullptr, nullptr, std::move(why) };
    }

    auto nontrivial_connected(const Graph & g) -> bool
    {
        return g.order() >= 2 && is_connected(g);
    }

    auto factor_h(const Instance & i) -> const Graph &
    {
        if (! i.h)
            throw Error(ErrorKind::invalid_argument, "instance needs a second factor");
        return *i.h;
    }

    auto dim_s(const Graph & g) -> int
    {
        return strong_metric_dimension(g).dim;
    }

    auto sr_of(const Graph & g) -> Graph
    {
        return strong_resolving_graph(g).sr;
    }

    auto beta(const Graph & g) -> int
    {
        return independence_number(g);
    }

    /// "K4∪12K1"-style summary when every component is a clique.
    auto shape_summary(const Graph & g) -> string
    {
        std::map<int, int, std::greater<>> sizes;
        bool cliques = true;
        for (auto & c : connected_components(g)) {
            ++sizes[c.count()];
            if (! is_clique(g, c))
                cliques = false;
        }
        if (! cliques)
            return "non-clique components, " + to_string(g.size()) + " edges";
        string result;
        for (auto & [size, count] : sizes) {
            if (! result.empty())
                result += "∪";
            result += (count > 1 ? to_string(count) : "") + "K" + to_string(size);
        }
        return result;
    }

    auto cliques_union(const vector<int> & sizes) -> Graph
    {
        vector<Graph> parts;
        for (auto s : sizes)
            parts.push_back(generate(family::Complete{ s }));
        return disjoint_union(parts);
    }

    auto coordinate(const ProductSpec & spec, Vertex v) -> string
    {
        auto [a, b] = spec.decode(v);
        return "(" + to_string(a) + "," + to_string(b) + ")";
    }

    /// Up to limit edges of a that are missing from b, as coordinate pairs.
    auto missing_edges(const Graph & a, const Graph & b, const ProductSpec & spec, int limit = 4) -> string
    {
        string result;
        int shown = 0;
        for (auto & [u, v] : a.edges())
            if (! b.adjacent(u, v) && shown++ < limit)
                result += (result.empty() ? "" : " ") + coordinate(spec, u) + "-" + coordinate(spec, v);
        return result;
    }

    // ---- instance families -------------------------------------------------

    auto pool_of(const CorpusSpec & spec, Rng & rng) -> vector<NamedGraph>
    {
        return factor_pool(spec, rng);
    }

    auto make_pair_instance(const NamedGraph & g, const NamedGraph & h) -> Instance
    {
        return Instance{ g.graph, h.graph, json{ { "G", g.name }, { "H", h.name } } };
    }

    /// Exhaustive pairs among the classes of order <= exhaustive_n, then
    /// `samples` seeded pairs drawn from the whole pool.
    auto factor_pairs(const CorpusSpec & spec, Rng & rng, bool ordered) -> vector<Instance>
    {
        auto pool = pool_of(spec, rng);
        vector<Instance> result;

        std::size_t exhaustive_end = 0;
        while (exhaustive_end < pool.size() && pool[exhaustive_end].name.starts_with("g6:"))
            ++exhaustive_end;

        for (std::size_t a = 0 ; a < exhaustive_end ; ++a)
            for (std::size_t b = ordered ? 0 : a ; b < exhaustive_end ; ++b)
                if (pool[a].graph.order() * pool[b].graph.order() <= spec.max_product)
                    result.push_back(make_pair_instance(pool[a], pool[b]));

        if (pool.empty())
            return result;
        int added = 0;
        for (int attempt = 0 ; added < spec.samples && attempt < spec.samples * 50 ; ++attempt) {
            auto & g = pool[uniform_below(rng, pool.size())];
            auto & h = pool[uniform_below(rng, pool.size())];
            if (g.graph.order() * h.graph.order() > spec.max_product)
                continue;
            result.push_back(make_pair_instance(g, h));
            ++added;
        }
        return result;
    }

    /// Arbitrary (possibly disconnected) small graphs for the independence laws.
    auto arbitrary_pairs(const CorpusSpec & spec, Rng & rng) -> vector<Instance>
    {
        vector<Instance> result;
        auto draw = [&] () -> Graph {
            int n = uniform_int(rng, 1, spec.beta_law_max_n);
            if (spec.filter == FactorFilter::trees)
                return random_tree(n, rng);
            return random_graph(n, 0.15 + 0.6 * unit_real(rng), rng);
        };
        for (int i = 0 ; i < spec.samples ; ++i) {
            auto g = draw(), h = draw();
            result.push_back(Instance{ g, h, json::object() });
        }
        return result;
    }

    /// Second factors for the family corollaries.
    auto companion_factors(const CorpusSpec & spec, Rng & rng) -> vector<NamedGraph>
    {
        vector<NamedGraph> result;
        vector<Family> named{ family::Path{ 2 }, family::Path{ 3 }, family::Path{ 4 }, family::Star{ 4 } };
        if (spec.filter == FactorFilter::all) {
            named.push_back(family::Complete{ 3 });
            named.push_back(family::Cycle{ 4 });
            named.push_back(family::Cycle{ 5 });
        }
        for (auto & f : named)
            result.push_back({ family_name(f), generate(f) });

        auto pool = pool_of(spec, rng);
        for (int i = 0 ; i < 2 && ! pool.empty() ; ++i)
            result.push_back(pool[pool.size() - 1 - uniform_below(rng, std::min<std::size_t>(pool.size(), 16))]);
        return result;
    }

    auto family_instances(const CorpusSpec & spec, Rng & rng, const vector<std::pair<NamedGraph, json>> & factors)
        -> vector<Instance>
    {
        auto companions = companion_factors(spec, rng);
        vector<Instance> result;
        for (auto & [g, params] : factors)
            for (auto & h : companions)
                if (g.graph.order() * h.graph.order() <= spec.max_product) {
                    auto p = params;
                    p["G"] = g.name;
                    p["H"] = h.name;
                    result.push_back(Instance{ g.graph, h.graph, p });
                }
        return result;
    }

    auto odd_pairs(const CorpusSpec & spec) -> vector<std::pair<int, int>>
    {
        vector<std::pair<int, int>> result;
        for (int r = 1 ; r <= spec.odd_max ; ++r)
            for (int t = r ; t <= spec.odd_max ; ++t) {
                if (spec.r && *spec.r != r)
                    continue;
                if (spec.t && *spec.t != t)
                    continue;
                result.emplace_back(r, t);
            }
        if (spec.r && spec.t && result.empty() && *spec.r >= 1 && *spec.r <= *spec.t)
            result.emplace_back(*spec.r, *spec.t);
        return result;
    }

    auto odd_cycle_instances(const CorpusSpec & spec) -> vector<Instance>
    {
        vector<Instance> result;
        for (auto [r, t] : odd_pairs(spec))
            result.push_back(Instance{ generate(family::Cycle{ 2 * r + 1 }), generate(family::Cycle{ 2 * t + 1 }),
                    json{ { "r", r }, { "t", t } } });
        return result;
    }

    /// Instance parameters re-derived from the graphs on replay.
    auto is_odd_cycle(const Graph & g, int r) -> bool
    {
        return r >= 1 && g == generate(family::Cycle{ 2 * r + 1 });
    }

    // ---- checks ------------------------------------------------------------

    auto check_lemma_mmd(const Instance & i) -> Outcome
    {
        auto & h = factor_h(i);
        if (! nontrivial_connected(i.g) || ! nontrivial_connected(h))
            return skip("factors must be connected and nontrivial");

        auto predicted = predicted_mmd_edges(i.g, h);
        auto predicted_graph = predicted.as_graph();
        auto actual = sr_of(product(ProductKind::strong, i.g, h));

        json tags = json::object();
        auto counts = predicted.condition_counts();
        for (int c = 0 ; c < mmd_condition_count ; ++c)
            tags[string(mmd_condition_tag(static_cast<MmdCondition>(c)))] = counts[c];

        bool same = predicted_graph == actual;
        string note;
        if (! same) {
            note = "predicted only: " + missing_edges(predicted_graph, actual, predicted.spec)
                + "; actual only: " + missing_edges(actual, predicted_graph, predicted.spec);
        }
        auto outcome = judged(same, predicted_graph.size(), actual.size(), note);
        outcome.condition_tags = tags;
        return outcome;
    }

    auto check_boundary(const Instance & i) -> Outcome
    {
        auto & h = factor_h(i);
        if (! nontrivial_connected(i.g) || ! nontrivial_connected(h))
            return skip("factors must be connected and nontrivial");

        ProductSpec spec{ ProductKind::strong, i.g.order(), h.order() };
        auto predicted = cross(spec, boundary(i.g), VertexSet::full(h.order()))
            | cross(spec, VertexSet::full(i.g.order()), boundary(h));
        auto actual = boundary(product(ProductKind::strong, i.g, h));
        return judged(predicted == actual, predicted.count(), actual.count(), "boundary sets differ");
    }

    auto check_sandwich(const Instance & i) -> Outcome
    {
        auto & h = factor_h(i);
        if (! nontrivial_connected(i.g) || ! nontrivial_connected(h))
            return skip("factors must be connected and nontrivial");

        auto gsr = sr_of(i.g), hsr = sr_of(h);
        auto lower = product(ProductKind::strong, gsr, hsr);
        auto upper = product(ProductKind::cartesian_sum, gsr, hsr);
        auto middle = sr_of(product(ProductKind::strong, i.g, h));
        bool low_ok = is_spanning_subgraph(lower, middle), high_ok = is_spanning_subgraph(middle, upper);
        ProductSpec spec{ ProductKind::strong, i.g.order(), h.order() };
        string note;
        if (! low_ok)
            note += "in G_SR⊠H_SR but not (G⊠H)_SR: " + missing_edges(lower, middle, spec) + " ";
        if (! high_ok)
            note += "in (G⊠H)_SR but not G_SR⊕H_SR: " + missing_edges(middle, upper, spec);
        return judged(low_ok && high_ok, json{ { "lower_edges", lower.size() }, { "upper_edges", upper.size() } },
                json{ { "sr_edges", middle.size() } }, note);
    }

    auto check_beta_chain(const Instance & i) -> Outcome
    {
        auto & h = factor_h(i);
        if (! nontrivial_connected(i.g) || ! nontrivial_connected(h))
            return skip("factors must be connected and nontrivial");

        auto gsr = sr_of(i.g), hsr = sr_of(h);
        int high = beta(product(ProductKind::strong, gsr, hsr));
        int middle = beta(sr_of(product(ProductKind::strong, i.g, h)));
        int low = beta(product(ProductKind::cartesian_sum, gsr, hsr));
        return judged(high >= middle && middle >= low, json{ { "upper", high }, { "lower", low } }, middle,
                "beta chain broken");
    }

    auto check_ind_sandwich(const Instance & i) -> Outcome
    {
        auto & h = factor_h(i);
        int low = beta(i.g) * beta(h);
        int middle = beta(product(ProductKind::strong, i.g, h));
        int high = beta(product(ProductKind::cartesian, i.g, h));
        return judged(low <= middle && middle <= high, json{ { "lower", low }, { "upper", high } }, middle,
                "beta(G)beta(H) <= beta(G⊠H) <= beta(G□H) fails");
    }

    auto check_vizing(const Instance & i) -> Outcome
    {
        auto & h = factor_h(i);
        int bound = std::min(beta(i.g) * h.order(), beta(h) * i.g.order());
        int actual = beta(product(ProductKind::cartesian, i.g, h));
        return judged(actual <= bound, bound, actual, "beta(G□H) exceeds the bound");
    }

    auto check_lex(const Instance & i) -> Outcome
    {
        auto & h = factor_h(i);
        int expected = beta(i.g) * beta(h);
        int actual = beta(product(ProductKind::lexicographic, i.g, h));
        return judged(actual == expected, expected, actual, "beta(G∘H) != beta(G)beta(H)");
    }

    auto check_cartesian_sum(const Instance & i) -> Outcome
    {
        auto & h = factor_h(i);
        int expected = beta(i.g) * beta(h);
        int actual = beta(product(ProductKind::cartesian_sum, i.g, h));
        return judged(actual == expected, expected, actual, "beta(G⊕H) != beta(G)beta(H)");
    }

    auto check_bounds(const Instance & i) -> Outcome
    {
        auto & h = factor_h(i);
        if (! nontrivial_connected(i.g) || ! nontrivial_connected(h))
            return skip("factors must be connected and nontrivial");

        int n1 = i.g.order(), n2 = h.order();
        int dg = dim_s(i.g), dh = dim_s(h);
        auto lower = formula::general_lower(n1, n2, dg, dh), upper = formula::general_upper(n1, n2, dg, dh);
        int actual = dim_s(product(ProductKind::strong, i.g, h));

        // upper bound must be attained when either factor's SR graph is a C-graph
        auto gsr = sr_of(i.g), hsr = sr_of(h);
        bool c_factor = (gsr.order() <= clique_cover_default_cap && is_c_graph(gsr))
            || (hsr.order() <= clique_cover_default_cap && is_c_graph(hsr));

        bool bracketed = lower <= actual && actual <= upper;
        bool attained = actual == upper;
        bool ok = bracketed && (! c_factor || attained);
        string note = ! bracketed ? "dim_s outside bounds" : "factor SR graph is a C-graph but upper bound not attained";
        return judged(ok, json{ { "lower", lower }, { "upper", upper }, { "c_graph_factor", c_factor } },
                json{ { "dim_s", actual }, { "attains_upper", attained } }, note);
    }

    auto bounds_attained(const vector<Outcome> & outcomes) -> optional<string>
    {
        for (auto & o : outcomes)
            if (o.verdict == Verdict::passed && o.actual.is_object() && o.actual.value("attains_upper", false))
                return std::nullopt;
        return "upper bound never attained on the corpus";
    }

    auto check_lemma_cgraph(const Instance & i) -> Outcome
    {
        auto & h = factor_h(i);
        if (i.g.order() > clique_cover_default_cap)
            return skip("G too large for C-graph recognition");
        if (! is_c_graph(i.g))
            return skip("G is not a C-graph");
        int expected = beta(i.g) * beta(h);
        int actual = beta(product(ProductKind::strong, i.g, h));
        return judged(actual == expected, expected, actual, "beta(G⊠H) != beta(G)beta(H)");
    }

    auto check_cgraph_exact(const Instance & i) -> Outcome
    {
        auto & h = factor_h(i);
        if (! nontrivial_connected(i.g) || ! nontrivial_connected(h))
            return skip("factors must be connected and nontrivial");
        auto gsr = sr_of(i.g);
        if (gsr.order() > clique_cover_default_cap)
            return skip("G_SR too large for C-graph recognition");
        if (! is_c_graph(gsr))
            return skip("G_SR is not a C-graph");
        auto expected = formula::cgraph_exact(i.g.order(), h.order(), dim_s(i.g), dim_s(h));
        int actual = dim_s(product(ProductKind::strong, i.g, h));
        return judged(actual == expected, expected, actual, "dim_s(G⊠H) differs from the C-graph value");
    }

    /// Shared tail of the family corollaries: SR shape and formula.
    auto family_outcome(const Instance & i, const Graph & expected_shape, const string & expected_summary,
            formula::Value expected_dim, json extra_expected = json::object()) -> Outcome
    {
        auto & h = factor_h(i);
        auto gsr = sr_of(i.g);
        bool shape_ok = graphs_isomorphic(gsr, expected_shape);
        int actual_dim = dim_s(product(ProductKind::strong, i.g, h));

        json expected = extra_expected;
        expected["sr_shape"] = expected_summary;
        expected["dim_s"] = expected_dim;
        json actual{ { "sr_shape", shape_summary(gsr) }, { "sr_shape_matches", shape_ok }, { "dim_s", actual_dim } };

        bool dims_ok = actual_dim == expected_dim;
        for (auto & [key, value] : extra_expected.items())
            if (key == "tree_dim_s" && value != actual_dim)
                dims_ok = false;

        string note;
        if (! shape_ok)
            note += "G_SR is " + shape_summary(gsr) + ", expected " + expected_summary + ". ";
        if (! dims_ok)
            note += "dim_s(G⊠H) = " + to_string(actual_dim) + ", formula gives " + to_string(expected_dim) + ".";
        return judged(shape_ok && dims_ok, expected, actual, note);
    }

    auto check_cor_complete(const Instance & i) -> Outcome
    {
        auto & h = factor_h(i);
        int n1 = i.g.order();
        if (n1 < 2 || i.g.size() != n1 * (n1 - 1) / 2)
            return skip("G is not a nontrivial complete graph");
        if (! nontrivial_connected(h))
            return skip("H must be connected and nontrivial");
        return family_outcome(i, generate(family::Complete{ n1 }), "K" + to_string(n1),
                formula::complete_factor(n1, h.order(), dim_s(h)));
    }

    auto check_cor_kpartite(const Instance & i) -> Outcome
    {
        auto & h = factor_h(i);
        if (! i.params.contains("parts"))
            return skip("instance carries no part sizes");
        auto parts = i.params["parts"].get<vector<int>>();
        if (parts.size() < 2 || i.g != generate(family::CompleteMultipartite{ parts }))
            return skip("G is not the stated complete multipartite graph");
        if (std::count(parts.begin(), parts.end(), 1) > 1)
            return skip("more than one part of size 1");
        if (! nontrivial_connected(h))
            return skip("H must be connected and nontrivial");

        string summary;
        for (auto p : parts)
            summary += (summary.empty() ? "" : "∪") + ("K" + to_string(p));
        int k = static_cast<int>(parts.size());
        return family_outcome(i, cliques_union(parts), summary,
                formula::kpartite_factor(i.g.order(), h.order(), k, dim_s(h)));
    }

    auto check_cor_generalized_tree(const Instance & i) -> Outcome
    {
        auto & h = factor_h(i);
        if (! nontrivial_connected(i.g) || ! is_generalized_tree(i.g))
            return skip("G is not a generalized tree");
        if (blocks(i.g).size() < 2)
            return skip("G has a single block");
        if (! nontrivial_connected(h))
            return skip("H must be connected and nontrivial");

        int n1 = i.g.order(), c = cut_vertices(i.g).count();
        vector<int> shape{ n1 - c };
        shape.insert(shape.end(), c, 1);
        int dh = dim_s(h);
        json extra = json{ { "cut_vertices", c } };
        if (is_tree(i.g)) {
            extra["leaves"] = leaf_count(i.g);
            extra["tree_dim_s"] = formula::tree_factor(n1, h.order(), leaf_count(i.g), dh);
        }
        return family_outcome(i, cliques_union(shape), "K" + to_string(n1 - c) + (c > 0 ? "∪" + to_string(c) + "K1" : string()),
                formula::generalized_tree_factor(n1, h.order(), c, dh), extra);
    }

    auto check_cor_antipodal(const Instance & i) -> Outcome
    {
        auto & h = factor_h(i);
        if (! nontrivial_connected(i.g) || ! is_two_antipodal(i.g))
            return skip("G is not 2-antipodal");
        if (! nontrivial_connected(h))
            return skip("H must be connected and nontrivial");
        int n1 = i.g.order();
        return family_outcome(i, cliques_union(vector<int>(n1 / 2, 2)), to_string(n1 / 2) + "K2",
                formula::antipodal_factor(n1, h.order(), dim_s(h)));
    }

    auto check_cor_grid(const Instance & i) -> Outcome
    {
        auto & h = factor_h(i);
        if (! i.params.contains("rows") || ! i.params.contains("cols"))
            return skip("instance carries no grid dimensions");
        int rows = i.params["rows"], cols = i.params["cols"];
        if (rows < 2 || cols < 2 || i.g != generate(family::Grid{ rows, cols }))
            return skip("G is not the stated grid graph");
        if (! nontrivial_connected(h))
            return skip("H must be connected and nontrivial");
        int n1 = rows * cols;
        vector<int> shape{ 4 };
        shape.insert(shape.end(), n1 - 4, 1);
        return family_outcome(i, cliques_union(shape), "K4" + (n1 > 4 ? "∪" + to_string(n1 - 4) + "K1" : string()),
                formula::grid_factor(n1, h.order(), dim_s(h)));
    }

    auto check_lemma_c1graph(const Instance & i) -> Outcome
    {
        auto & h = factor_h(i);
        if (i.g.order() > clique_cover_default_cap)
            return skip("G too large for C1-graph recognition");
        if (! is_c1_graph(i.g))
            return skip("G is not a C1-graph");
        int bound = beta(i.g) * (beta(h) + 1);
        int actual = beta(product(ProductKind::strong, i.g, h));
        return judged(actual <= bound, bound, actual, "beta(G⊠H) exceeds beta(G)(beta(H)+1)");
    }

    auto check_c1_lower(const Instance & i) -> Outcome
    {
        auto & h = factor_h(i);
        if (! nontrivial_connected(i.g) || ! nontrivial_connected(h))
            return skip("factors must be connected and nontrivial");
        auto gsr = sr_of(i.g);
        if (gsr.order() > clique_cover_default_cap)
            return skip("G_SR too large for C1-graph recognition");
        if (! is_c1_graph(gsr))
            return skip("G_SR is not a C1-graph");
        auto bound = formula::c1_lower(i.g.order(), h.order(), dim_s(i.g), dim_s(h));
        int actual = dim_s(product(ProductKind::strong, i.g, h));
        return judged(actual >= bound, bound, actual, "dim_s(G⊠H) below the C1 lower bound");
    }

    auto check_oddcycle_bounds(const Instance & i) -> Outcome
    {
        auto & h = factor_h(i);
        int r = i.params.value("r", 0);
        if (! is_odd_cycle(i.g, r))
            return skip("G is not C_{2r+1} for the stated r");
        if (! nontrivial_connected(h))
            return skip("H must be connected and nontrivial");
        int dh = dim_s(h);
        auto lower = formula::odd_cycle_lower(h.order(), r, dh), upper = formula::odd_cycle_upper(h.order(), r, dh);
        int actual = dim_s(product(ProductKind::strong, i.g, h));
        return judged(lower <= actual && actual <= upper, json{ { "lower", lower }, { "upper", upper } }, actual,
                "dim_s(C_{2r+1}⊠H) outside bounds");
    }

    auto check_odd_odd_beta(const Instance & i) -> Outcome
    {
        int r = i.params.value("r", 0), t = i.params.value("t", 0);
        if (! (r >= 1 && r <= t) || ! is_odd_cycle(i.g, r) || ! is_odd_cycle(factor_h(i), t))
            return skip("instance is not C_{2r+1}, C_{2t+1} with 1 <= r <= t");
        auto expected = formula::odd_odd_independence(r, t);
        int actual = beta(product(ProductKind::strong, i.g, factor_h(i)));
        return judged(actual == expected, expected, actual, "independence number differs from rt + floor(r/2)");
    }

    auto check_odd_odd_bounds(const Instance & i) -> Outcome
    {
        int r = i.params.value("r", 0), t = i.params.value("t", 0);
        if (! (r >= 1 && r <= t) || ! is_odd_cycle(i.g, r) || ! is_odd_cycle(factor_h(i), t))
            return skip("instance is not C_{2r+1}, C_{2t+1} with 1 <= r <= t");
        auto lower = formula::odd_odd_lower(r, t), upper = formula::odd_odd_upper(r, t);
        int actual = dim_s(product(ProductKind::strong, i.g, factor_h(i)));
        return judged(lower <= actual && actual <= upper, json{ { "lower", lower }, { "upper", upper } }, actual,
                "dim_s outside the odd-cycle bounds");
    }

    auto check_remark_c3(const Instance & i) -> Outcome
    {
        int t = i.params.value("t", 0);
        if (! (i.g == generate(family::Complete{ 3 })) || ! is_odd_cycle(factor_h(i), t))
            return skip("instance is not C3, C_{2t+1}");
        auto expected = formula::c3_exact(t);
        int actual = dim_s(product(ProductKind::strong, i.g, factor_h(i)));
        return judged(actual == expected, expected, actual, "dim_s(C3⊠C_{2t+1}) != 5t+3");
    }

    auto check_oellermann(const Instance & i) -> Outcome
    {
        if (! nontrivial_connected(i.g))
            return skip("G must be connected and nontrivial");
        if (i.g.order() > brute_force_default_cap)
            return skip("G too large for the brute-force oracle");
        auto via_cover = strong_metric_dimension(i.g);
        auto brute = brute_force_dimension(i.g);
        return judged(via_cover.dim == brute.dim, brute.dim, via_cover.dim, "alpha(G_SR) != brute-force dim_s");
    }

    auto check_gallai(const Instance & i) -> Outcome
    {
        auto cover = exact_vertex_cover(i.g);
        int direct = max_independent_set_direct(i.g).count();
        return judged(cover.size + direct == i.g.order(), i.g.order(), cover.size + direct,
                "alpha + beta != n with independently computed beta");
    }

    // ---- registry ----------------------------------------------------------

    auto build_registry() -> vector<Claim>
    {
        vector<Claim> claims;
        auto pairs_unordered = [] (const CorpusSpec & s, Rng & rng) { return factor_pairs(s, rng, false); };
        auto pairs_ordered = [] (const CorpusSpec & s, Rng & rng) { return factor_pairs(s, rng, true); };

        claims.push_back({ "thm-oellermann", "dim_s(G) = alpha(G_SR), against brute-force enumeration",
                [] (const CorpusSpec & s, Rng & rng) {
                    vector<Instance> result;
                    for (int n = 2 ; n <= s.exhaustive_n ; ++n)
                        for (auto & g : all_connected_graphs(n))
                            if (s.filter == FactorFilter::all || is_tree(g))
                                result.push_back(Instance{ g, std::nullopt, json::object() });
                    for (int k = 0 ; k < s.oracle_samples ; ++k) {
                        int n = uniform_int(rng, s.oracle_min_n, s.oracle_max_n);
                        if (s.filter == FactorFilter::trees)
                            result.push_back(Instance{ random_tree(n, rng), std::nullopt, json::object() });
                        else {
                            family::RandomConnected f{ n, 0.2 + 0.5 * unit_real(rng), rng() };
                            result.push_back(Instance{ generate(f), std::nullopt, json{ { "G", family_name(f) } } });
                        }
                    }
                    return result;
                }, check_oellermann, nullptr });

        claims.push_back({ "thm-gallai", "alpha(G) + beta(G) = n",
                [] (const CorpusSpec & s, Rng & rng) {
                    vector<Instance> result;
                    for (auto & g : pool_of(s, rng)) {
                        result.push_back(Instance{ g.graph, std::nullopt, json{ { "G", g.name } } });
                        result.push_back(Instance{ sr_of(g.graph), std::nullopt, json{ { "G", "SR of " + g.name } } });
                    }
                    for (auto & i : arbitrary_pairs(s, rng))
                        result.push_back(Instance{ i.g, std::nullopt, json::object() });
                    return result;
                }, check_gallai, nullptr });

        claims.push_back({ "lemma-mmd", "MMD pairs of G⊠H are exactly those given by conditions (i)-(v)",
                pairs_ordered, check_lemma_mmd, nullptr });
        claims.push_back({ "thm-boundary", "∂(G⊠H) = (∂(G)×V(H)) ∪ (V(G)×∂(H))",
                pairs_unordered, check_boundary, nullptr });
        claims.push_back({ "thm-sandwich", "G_SR⊠H_SR ⊑ (G⊠H)_SR ⊑ G_SR⊕H_SR",
                pairs_unordered, check_sandwich, nullptr });
        claims.push_back({ "cor-beta-chain", "β(G_SR⊠H_SR) ≥ β((G⊠H)_SR) ≥ β(G_SR⊕H_SR)",
                pairs_unordered, check_beta_chain, nullptr });
        claims.push_back({ "thm-ind-sandwich", "β(G)β(H) ≤ β(G⊠H) ≤ β(G□H)",
                arbitrary_pairs, check_ind_sandwich, nullptr });
        claims.push_back({ "thm-vizing", "β(G□H) ≤ min{β(G)|V(H)|, β(H)|V(G)|}",
                arbitrary_pairs, check_vizing, nullptr });
        claims.push_back({ "thm-lex", "β(G∘H) = β(G)β(H)",
                arbitrary_pairs, check_lex, nullptr });
        claims.push_back({ "lemma-cartesian-sum", "β(G⊕H) = β(G)β(H)",
                arbitrary_pairs, check_cartesian_sum, nullptr });
        claims.push_back({ "thm-bounds", "max{n2·dim_s(G), n1·dim_s(H)} ≤ dim_s(G⊠H) ≤ n2·dim_s(G) + n1·dim_s(H) − dim_s(G)·dim_s(H)",
                pairs_unordered, check_bounds, bounds_attained });
        claims.push_back({ "lemma-cgraph", "G a C-graph ⇒ β(G⊠H) = β(G)β(H)",
                pairs_ordered, check_lemma_cgraph, nullptr });
        claims.push_back({ "thm-cgraph-exact", "G_SR a C-graph ⇒ dim_s(G⊠H) = n2·dim_s(G) + n1·dim_s(H) − dim_s(G)·dim_s(H)",
                pairs_ordered, check_cgraph_exact, nullptr });

        claims.push_back({ "cor-cgraphs-i", "(K_n)_SR ≅ K_n and dim_s(K_n1⊠H) = n2(n1−1) + n1·dim_s(H) − (n1−1)dim_s(H)",
                [] (const CorpusSpec & s, Rng & rng) {
                    vector<std::pair<NamedGraph, json>> factors;
                    if (s.filter == FactorFilter::all)
                        for (int n = 2 ; n <= 6 ; ++n)
                            factors.push_back({ { "complete:" + to_string(n), generate(family::Complete{ n }) }, json::object() });
                    else
                        factors.push_back({ { "complete:2", generate(family::Complete{ 2 }) }, json::object() });
                    return family_instances(s, rng, factors);
                }, check_cor_complete, nullptr });

        claims.push_back({ "cor-cgraphs-ii", "(K_{p1..pk})_SR ≅ ∪K_pi and dim_s(G⊠H) = n2(n1−k) + n1·dim_s(H) − (n1−k)dim_s(H)",
                [] (const CorpusSpec & s, Rng & rng) {
                    vector<std::pair<NamedGraph, json>> factors;
                    vector<vector<int>> partitions{ { 1, 2 }, { 2, 2 }, { 1, 3 }, { 2, 3 }, { 3, 3 }, { 1, 2, 2 },
                        { 2, 2, 2 }, { 1, 2, 3 }, { 2, 2, 3 }, { 1, 4 } };
                    if (s.filter == FactorFilter::trees)
                        partitions = { { 1, 2 }, { 1, 3 }, { 1, 4 } };
                    for (auto & p : partitions) {
                        family::CompleteMultipartite f{ p };
                        factors.push_back({ { family_name(f), generate(f) }, json{ { "parts", p } } });
                    }
                    return family_instances(s, rng, factors);
                }, check_cor_kpartite, nullptr });

        claims.push_back({ "cor-cgraphs-iii", "generalized tree G with c cut vertices: G_SR ≅ K_{n−c} ∪ cK1 and dim_s(G⊠H) = n2(n1−c−1) + n1·dim_s(H) − (n1−c−1)dim_s(H); trees with l leaves: n2(l−1) + n1·dim_s(H) − (l−1)dim_s(H)",
                [] (const CorpusSpec & s, Rng & rng) {
                    vector<std::pair<NamedGraph, json>> factors;
                    for (int k = 0 ; k < 6 ; ++k) {
                        int n = uniform_int(rng, 3, 10);
                        auto t = random_tree(n, rng);
                        factors.push_back({ { "g6:" + to_graph6(t), t }, json::object() });
                    }
                    if (s.filter == FactorFilter::all)
                        for (int k = 0 ; k < 6 ; ++k) {
                            vector<int> sizes;
                            int total = uniform_int(rng, 2, 3);
                            int budget = 10;
                            sizes.push_back(total);
                            while (true) {
                                int b = uniform_int(rng, 2, 4);
                                if (total + b - 1 > budget)
                                    break;
                                sizes.push_back(b);
                                total += b - 1;
                            }
                            if (sizes.size() < 2)
                                sizes.push_back(2);
                            family::GeneralizedTree f{ sizes, rng() };
                            factors.push_back({ { family_name(f), generate(f) }, json::object() });
                        }
                    return family_instances(s, rng, factors);
                }, check_cor_generalized_tree, nullptr });

        claims.push_back({ "cor-cgraphs-iv", "G 2-antipodal: G_SR ≅ (n/2)K2 and dim_s(G⊠H) = n2·n1/2 + n1·dim_s(H) − (n1/2)dim_s(H)",
                [] (const CorpusSpec & s, Rng & rng) {
                    vector<std::pair<NamedGraph, json>> factors;
                    vector<Family> named{ family::Path{ 2 } };
                    if (s.filter == FactorFilter::all) {
                        for (int n = 4 ; n <= 12 ; n += 2)
                            named.push_back(family::Cycle{ n });
                        named.push_back(family::Hypercube{ 3 });
                        named.push_back(family::CompleteMultipartite{ { 2, 2, 2 } });
                    }
                    for (auto & f : named)
                        factors.push_back({ { family_name(f), generate(f) }, json::object() });
                    for (auto & g : pool_of(s, rng))
                        if (g.name.starts_with("random") && is_two_antipodal(g.graph))
                            factors.push_back({ g, json::object() });
                    return family_instances(s, rng, factors);
                }, check_cor_antipodal, nullptr });

        claims.push_back({ "cor-cgraphs-v", "G = P_n□P_r: G_SR ≅ K4 ∪ (nr−4)K1 and dim_s(G⊠H) = 3n2 + n1·dim_s(H) − 3dim_s(H)",
                [] (const CorpusSpec & s, Rng & rng) {
                    vector<std::pair<NamedGraph, json>> factors;
                    if (s.filter == FactorFilter::all)
                        for (auto [rows, cols] : vector<std::pair<int, int>>{ { 2, 2 }, { 2, 3 }, { 2, 4 }, { 3, 3 }, { 3, 4 }, { 4, 4 } }) {
                            family::Grid f{ rows, cols };
                            factors.push_back({ { family_name(f), generate(f) }, json{ { "rows", rows }, { "cols", cols } } });
                        }
                    return family_instances(s, rng, factors);
                }, check_cor_grid, nullptr });

        claims.push_back({ "lemma-c1graph", "G a C1-graph ⇒ β(G⊠H) ≤ β(G)(β(H)+1)",
                [] (const CorpusSpec & s, Rng & rng) {
                    auto result = factor_pairs(s, rng, true);
                    if (s.filter == FactorFilter::all)
                        for (int n : { 5, 7, 9 })
                            for (int m : { 2, 3, 4, 5 })
                                result.push_back(Instance{ generate(family::Cycle{ n }), generate(family::Path{ m }),
                                        json{ { "G", "cycle:" + to_string(n) }, { "H", "path:" + to_string(m) } } });
                    return result;
                }, check_lemma_c1graph, nullptr });

        claims.push_back({ "thm-c1-lower", "G_SR a C1-graph ⇒ dim_s(G⊠H) ≥ n1(dim_s(H)−1) + dim_s(G)(n2−dim_s(H)+1)",
                pairs_ordered, check_c1_lower, nullptr });

        claims.push_back({ "thm-oddcycle-bounds", "n(r+1) + r(dim_s(H)−1) ≤ dim_s(C_{2r+1}⊠H) ≤ n(r+1) + r·dim_s(H)",
                [] (const CorpusSpec & s, Rng & rng) {
                    vector<Instance> result;
                    auto pool = pool_of(s, rng);
                    for (int r = 1 ; r <= 3 ; ++r) {
                        if (s.r && *s.r != r)
                            continue;
                        auto g = generate(family::Cycle{ 2 * r + 1 });
                        for (auto & h : pool)
                            if (g.order() * h.graph.order() <= s.max_product
                                    && (h.graph.order() <= 4 || ! h.name.starts_with("g6:")))
                                result.push_back(Instance{ g, h.graph, json{ { "r", r }, { "H", h.name } } });
                    }
                    return result;
                }, check_oddcycle_bounds, nullptr });

        claims.push_back({ "thm-odd-odd-beta", "β(C_{2r+1}⊠C_{2t+1}) = rt + ⌊r/2⌋ for 1 ≤ r ≤ t",
                [] (const CorpusSpec & s, Rng &) { return odd_cycle_instances(s); }, check_odd_odd_beta, nullptr });

        claims.push_back({ "thm-odd-odd-bounds", "3rt + 2r + 2t + 1 − ⌊r/2⌋ ≤ dim_s(C_{2r+1}⊠C_{2t+1}) ≤ 3rt + 2r + 2t + 1",
                [] (const CorpusSpec & s, Rng &) { return odd_cycle_instances(s); }, check_odd_odd_bounds, nullptr });

        claims.push_back({ "remark-c3", "dim_s(C3⊠C_{2t+1}) = 5t + 3",
                [] (const CorpusSpec & s, Rng &) {
                    vector<Instance> result;
                    for (int t = 1 ; t <= s.t_max ; ++t)
                        if (! s.t || *s.t == t)
                            result.push_back(Instance{ generate(family::Complete{ 3 }), generate(family::Cycle{ 2 * t + 1 }),
                                    json{ { "t", t } } });
                    return result;
                }, check_remark_c3, nullptr });

        return claims;
    }
}

auto strongdim::claim_registry() -> const vector<Claim> &
{
    static const vector<Claim> registry = build_registry();
    return registry;
}
