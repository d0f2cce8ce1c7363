/**
 * Named regression cases covering the published h*-vectors, reflexivity
 * results, IDP statements, and the graph operations, grouped so they can be
 * run selectively.
 */
#pragma once

#include "lapsim/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace lapsim {

/**
 * Wedge of G and G2 (same n) at their last vertices, with a leaf on the
 * wedge point. G keeps labels 1..n-1, G2 becomes n..2n-2, the wedge point is
 * 2n-1 and the leaf 2n. For C_5 and K_5 that is C_5 on {1,2,3,4,9}, K_5 on
 * {5,...,9}, and the leaf 10.
 */
inline Graph wedge_with_leaf(const Graph& g, const Graph& g2) {
    if (g.n() != g2.n() || g.n() < 2) throw DomainError("wedge_with_leaf: graphs must share n >= 2");
    const std::size_t n = g.n();
    const Vertex w = 2 * n - 1;
    auto left = [&](Vertex v) { return v == n ? w : v; };
    auto right = [&](Vertex v) { return v == n ? w : n - 1 + v; };
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) edges.push_back(Edge::make(left(e.u), left(e.v)));
    for (const auto& e : g2.edges()) edges.push_back(Edge::make(right(e.u), right(e.v)));
    edges.push_back({w, 2 * n});
    return Graph(2 * n, std::move(edges));
}

/// The side A = V(G) plus the leaf, used to move G2 from the wedge point onto the leaf.
inline std::set<Vertex> wedge_side(std::size_t n) {
    std::set<Vertex> a;
    for (Vertex v = 1; v < n; ++v) a.insert(v);
    a.insert(2 * n - 1);
    a.insert(2 * n);
    return a;
}

struct RegressionOptions {
    std::vector<std::string> only;   ///< group names; empty runs everything
    bool disable_fast_paths = false;
    /// Added to every kappa the cases read; nonzero only for fault injection.
    long long perturb_kappa = 0;
    std::uint64_t seed = kDefaultSeed;
    EnumerationLimits limits;
    unsigned jobs = 1;
};

/// What a case body sees: computations routed through the run options.
class RegressionContext {
public:
    explicit RegressionContext(const RegressionOptions& options) : options_(options) {}

    const RegressionOptions& options() const { return options_; }

    Integer kappa(const LaplacianSimplex& s) const { return s.kappa() + options_.perturb_kappa; }
    Integer kappa(const Graph& g) const { return spanning_tree_count(g) + options_.perturb_kappa; }

    HStarVector hstar(const LaplacianSimplex& s) const {
        if (options_.disable_fast_paths) return lapsim::hstar(s, HStarStrategy::generic_snf, options_.limits);
        return lapsim::hstar(s, std::nullopt, options_.limits);
    }
    HStarVector hstar(const Graph& g) const { return hstar(LaplacianSimplex(g)); }

    PropertyReport analyze(const Graph& g) const {
        AnalysisOptions a;
        if (options_.disable_fast_paths) a.strategy = HStarStrategy::generic_snf;
        a.limits = options_.limits;
        return lapsim::analyze(g, a);
    }

private:
    RegressionOptions options_;
};

/// Collects failed expectations for one case.
class CaseLog {
public:
    void expect(bool condition, const std::string& message) {
        if (!condition) failures_.push_back(message);
    }
    void note(std::string message) { notes_.push_back(std::move(message)); }

    const std::vector<std::string>& failures() const { return failures_; }
    const std::vector<std::string>& notes() const { return notes_; }

private:
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

struct RegressionCase {
    std::string group;
    std::string name;
    std::function<void(const RegressionContext&, CaseLog&)> body;
};

struct CaseResult {
    std::string group;
    std::string name;
    bool passed = false;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
};

struct RegressionReport {
    std::vector<CaseResult> results;
    std::uint64_t seed = kDefaultSeed;

    std::size_t failures() const {
        return static_cast<std::size_t>(
            std::count_if(results.begin(), results.end(), [](const CaseResult& r) { return !r.passed; }));
    }
    bool all_passed() const { return failures() == 0; }
};

namespace detail {

inline std::string vec_str(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + ")";
}

inline std::string vec_str(const HStarVector& h) { return vec_str(h.entries); }

inline IntVector ints(std::initializer_list<long long> xs) {
    IntVector v;
    for (auto x : xs) v.emplace_back(x);
    return v;
}

inline IntVector ones(std::size_t n) { return IntVector(n, Integer(1)); }

inline bool contains_dual_vertex(const LaplacianSimplex& s, const RatVector& target) {
    for (const auto& f : facets(s))
        if (f.dual_vertex == target) return true;
    return false;
}

inline RatVector rats(std::initializer_list<std::pair<long long, long long>> xs) {
    RatVector v;
    for (auto [p, q] : xs) v.emplace_back(Integer(p), Integer(q));
    return v;
}

inline Integer power(Integer base, std::size_t e) {
    Integer r = 1;
    while (e--) r *= base;
    return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline std::vector<RegressionCase> regression_cases() {
    using detail::ints;
    using detail::vec_str;
    std::vector<RegressionCase> cases;
    auto add = [&](std::string group, std::string name, std::function<void(const RegressionContext&, CaseLog&)> f) {
        cases.push_back({std::move(group), std::move(name), std::move(f)});
    };

    // ---- basics
    add("basics", "c5-example", [](const RegressionContext& ctx, CaseLog& log) {
        LaplacianSimplex s(cycle_graph(5));
        const IntVector expected = ints({1, 1, 21, 1, 1});
        auto generic = hstar_generic(s.vertex_matrix(), ctx.options().limits);
        log.expect(generic == expected, "generic h*(C_5) = " + vec_str(generic));
        log.expect(hstar_cycle_closed_form(5) == expected, "closed-form h*(C_5) differs");
        log.expect(ctx.hstar(s) == expected, "default-route h*(C_5) differs");
    });

    add("basics", "volume-equals-n-kappa", [](const RegressionContext& ctx, CaseLog& log) {
        for (auto kind : {FamilyKind::path, FamilyKind::cycle, FamilyKind::complete, FamilyKind::star})
            for (std::size_t n = 3; n <= 7; ++n) {
                LaplacianSimplex s(family(kind, n));
                log.expect(s.normalized_volume() == ctx.kappa(s) * n,
                           std::string(to_string(kind)) + std::to_string(n) + ": volume != n * kappa");
            }
        for (std::size_t n = 3; n <= 9; ++n)
            log.expect(ctx.kappa(cycle_graph(n)) == n, "kappa(C_" + std::to_string(n) + ") != n");
        for (std::size_t n = 2; n <= 7; ++n)
            log.expect(ctx.kappa(complete_graph(n)) == detail::power(n, n - 2),
                       "kappa(K_" + std::to_string(n) + ") != n^(n-2)");
    });

    add("basics", "origin-interior", [](const RegressionContext&, CaseLog& log) {
        std::mt19937_64 rng(kDefaultSeed);
        for (int k = 0; k < 10; ++k) {
            Graph g = random_connected_graph(2 + uniform_below(rng, 6), rng);
            log.expect(contains_origin_interior(LaplacianSimplex(g)), "origin not interior for a random graph");
        }
    });

    add("basics", "dual-vertices", [](const RegressionContext&, CaseLog& log) {
        LaplacianSimplex c3(cycle_graph(3));
        std::vector<RatVector> expected = {detail::rats({{-1, 1}, {0, 1}}), detail::rats({{1, 1}, {-1, 1}}),
                                           detail::rats({{0, 1}, {1, 1}})};
        auto got = facets(c3);
        log.expect(got.size() == 3, "C_3 should have three facets");
        for (const auto& v : expected) log.expect(detail::contains_dual_vertex(c3, v), "C_3 dual vertex missing");
        log.expect(detail::contains_dual_vertex(LaplacianSimplex(cycle_graph(5)),
                                                detail::rats({{-2, 1}, {-1, 1}, {0, 1}, {1, 1}})),
                   "(-2,-1,0,1) not a dual vertex of T_{C_5}");
        log.expect(detail::contains_dual_vertex(LaplacianSimplex(cycle_graph(4)),
                                                detail::rats({{-3, 2}, {-1, 2}, {1, 2}})),
                   "(-3/2,-1/2,1/2) not a dual vertex of T_{C_4}");
    });

    add("basics", "column-deletion-certificates", [](const RegressionContext& ctx, CaseLog& log) {
        std::mt19937_64 rng(ctx.options().seed);
        for (int trial = 0; trial < 3; ++trial) {
            Graph g = random_connected_graph(5, rng);
            IntMatrix l = laplacian(g);
            for (std::size_t i = 0; i < 5; ++i)
                for (std::size_t j = 0; j < 5; ++j) {
                    IntMatrix u = column_deletion_certificate(5, i, j);
                    log.expect(is_unimodular(u), "certificate not unimodular");
                    log.expect(l.without_col(i) * u == l.without_col(j),
                               "L(" + std::to_string(i + 1) + ") U != L(" + std::to_string(j + 1) + ")");
                }
        }
    });

    add("basics", "cofactor-criterion", [](const RegressionContext&, CaseLog& log) {
        for (std::size_t n = 3; n <= 8; ++n) {
            LaplacianSimplex c(cycle_graph(n));
            log.expect(cofactor_reflexivity_test(c) == is_reflexive(c),
                       "cofactor test disagrees on C_" + std::to_string(n));
        }
    });

    // ---- trees
    add("trees", "random-trees", [](const RegressionContext& ctx, CaseLog& log) {
        std::mt19937_64 rng(ctx.options().seed);
        for (int k = 0; k < 20; ++k) {
            const std::size_t n = 2 + uniform_below(rng, 7);
            LaplacianSimplex s(random_tree(n, rng));
            auto h = ctx.hstar(s);
            const std::string tag = "tree #" + std::to_string(k) + " (n=" + std::to_string(n) + ")";
            log.expect(h == detail::ones(n), tag + ": h* = " + vec_str(h));
            log.expect(ctx.kappa(s) == 1, tag + ": kappa != 1");
            log.expect(s.normalized_volume() == n, tag + ": volume != n");
            log.expect(is_reflexive(s), tag + ": not reflexive");
            log.expect(is_unimodal(h), tag + ": not unimodal");
        }
    });

    add("trees", "trees-idp", [](const RegressionContext& ctx, CaseLog& log) {
        std::mt19937_64 rng(ctx.options().seed + 1);
        for (std::size_t n = 2; n <= 7; ++n)
            log.expect(is_idp(LaplacianSimplex(random_tree(n, rng)), 1000, ctx.options().limits),
                       "random tree on " + std::to_string(n) + " vertices not IDP");
    });

    add("trees", "canonical-simplex", [](const RegressionContext& ctx, CaseLog& log) {
        for (std::size_t d = 1; d <= 6; ++d) {
            IntMatrix sd = canonical_tree_simplex(d);
            log.expect(normalized_volume(sd) == d + 1, "vol S_" + std::to_string(d) + "(1) != d+1");
            log.expect(hstar_generic(sd, ctx.options().limits) == detail::ones(d + 1),
                       "h*(S_" + std::to_string(d) + "(1)) not all ones");
            log.expect(hstar(LaplacianSimplex(path_graph(d + 1)), std::nullopt, ctx.options().limits) ==
                           hstar_generic(sd, ctx.options().limits),
                       "T_{P_" + std::to_string(d + 1) + "} and S_" + std::to_string(d) + "(1) differ");
        }
    });

    // ---- cycles
    add("cycles", "reflexive-iff-odd", [](const RegressionContext&, CaseLog& log) {
        for (std::size_t n = 3; n <= 9; ++n) {
            LaplacianSimplex s(cycle_graph(n));
            log.expect(is_reflexive(s) == (n % 2 == 1), "reflexivity of T_{C_" + std::to_string(n) + "} wrong");
        }
    });

    add("cycles", "even-cycles-2-reflexive", [](const RegressionContext&, CaseLog& log) {
        for (std::size_t k = 2; k <= 4; ++k) {
            auto ell = ell_reflexive_index(LaplacianSimplex(cycle_graph(2 * k)));
            log.expect(ell && *ell == 2, "C_" + std::to_string(2 * k) + " is not 2-reflexive");
        }
    });

    add("cycles", "prime-cycles", [](const RegressionContext& ctx, CaseLog& log) {
        for (std::size_t n : {3, 5, 7, 11}) {
            LaplacianSimplex s(cycle_graph(n));
            log.expect(ctx.kappa(s) == n, "kappa(C_" + std::to_string(n) + ") != n");
            auto h = ctx.hstar(s);
            IntVector expected = detail::ones(n);
            expected[(n - 1) / 2] = n * n - n + 1;
            log.expect(h == expected, "h*(C_" + std::to_string(n) + ") = " + vec_str(h));
            auto check = verify_prime_cycle_formula(n, h);
            for (const auto& f : check.failures) log.expect(false, "C_" + std::to_string(n) + ": " + f);
            log.expect(hstar_generic(s.vertex_matrix(), ctx.options().limits) == hstar_cycle_closed_form(n),
                       "closed form and enumeration disagree on C_" + std::to_string(n));
        }
    });

    add("cycles", "composite-cycles", [](const RegressionContext& ctx, CaseLog& log) {
        LaplacianSimplex c9(cycle_graph(9));
        auto h9 = ctx.hstar(c9);
        log.expect(h9 == ints({1, 1, 1, 7, 61, 7, 1, 1, 1}), "h*(C_9) = " + vec_str(h9));
        log.expect(hstar_generic(c9.vertex_matrix(), ctx.options().limits) == hstar_cycle_closed_form(9),
                   "closed form and enumeration disagree on C_9");
        auto check9 = verify_prime_cycle_formula(9, h9);
        log.expect(check9.holds, "C_9 bounds fail");
        log.expect(check9.m == 3, "C_9: m = " + std::to_string(check9.m));
        log.expect(check9.middle_bound == 55, "C_9: bound = " + check9.middle_bound.str());

        LaplacianSimplex c15(cycle_graph(15));
        auto h15 = ctx.hstar(c15);
        auto check15 = verify_prime_cycle_formula(15, h15);
        log.expect(check15.holds, "C_15 bounds fail");
        log.expect(check15.m == 5, "C_15: m = " + std::to_string(check15.m));
        std::size_t first = 0;
        while (first < h15.size() && h15[first] == 1) ++first;
        log.expect(first == 5, "C_15: first entry above 1 at index " + std::to_string(first));
    });

    add("cycles", "c4-asymmetric", [](const RegressionContext& ctx, CaseLog& log) {
        LaplacianSimplex s(cycle_graph(4));
        log.expect(fpp_points(s, ctx.options().limits.fpp_cap).size() == 16, "C_4 should have 16 FPP points");
        auto h = ctx.hstar(s);
        log.expect(h.sum() == 16, "sum h*(C_4) != 16");
        log.expect(!is_symmetric(h), "h*(C_4) should not be symmetric");
    });

    add("cycles", "odd-cycles-unimodal", [](const RegressionContext& ctx, CaseLog& log) {
        for (std::size_t n = 3; n <= 11; n += 2) {
            auto h = ctx.hstar(cycle_graph(n));
            log.expect(is_unimodal(h), "h*(C_" + std::to_string(n) + ") not unimodal");
        }
    });

    add("cycles", "odd-cycles-not-idp", [](const RegressionContext& ctx, CaseLog& log) {
        for (std::size_t n : {5, 7})
            log.expect(!is_idp(LaplacianSimplex(cycle_graph(n)), 1000, ctx.options().limits),
                       "T_{C_" + std::to_string(n) + "} reported IDP");
        bool c3 = is_idp(LaplacianSimplex(cycle_graph(3)), 1000, ctx.options().limits);
        log.note(std::string("n = 3 excluded: C_3 = K_3 and the checker reports IDP = ") + (c3 ? "true" : "false"));
    });

    // ---- complete graphs
    add("complete", "small-complete", [](const RegressionContext& ctx, CaseLog& log) {
        log.expect(ctx.hstar(complete_graph(3)) == ints({1, 7, 1}), "h*(K_3) wrong");
        log.expect(ctx.hstar(complete_graph(4)) == ints({1, 31, 31, 1}), "h*(K_4) wrong");
        for (std::size_t n = 2; n <= 6; ++n) {
            LaplacianSimplex s(complete_graph(n));
            log.expect(s.normalized_volume() == ctx.kappa(s) * n, "vol T_{K_" + std::to_string(n) + "} != n kappa");
            log.expect(hstar_complete(n) == hstar_generic(s.vertex_matrix(), ctx.options().limits),
                       "compositions and enumeration disagree on K_" + std::to_string(n));
        }
    });

    add("complete", "ehrhart-binomial", [](const RegressionContext& ctx, CaseLog& log) {
        for (std::size_t n = 2; n <= 5; ++n) {
            LaplacianSimplex s(complete_graph(n));
            auto h = ctx.hstar(s);
            for (long long t = 0; t <= 4; ++t) {
                Integer expected = binomial(Integer(t) * n + n - 1, static_cast<long long>(n - 1));
                log.expect(ehrhart_eval(h, t) == expected,
                           "L_{K_" + std::to_string(n) + "}(" + std::to_string(t) + ") wrong");
                if (n <= 4 && t <= 3)
                    log.expect(count_dilate_points(s, t, ctx.options().limits) == expected,
                               "direct count of " + std::to_string(t) + "T_{K_" + std::to_string(n) + "} wrong");
            }
        }
    });

    add("complete", "complete-reflexive", [](const RegressionContext&, CaseLog& log) {
        for (std::size_t n = 2; n <= 6; ++n)
            log.expect(is_reflexive(LaplacianSimplex(complete_graph(n))), "T_{K_" + std::to_string(n) + "} not reflexive");
    });

    add("complete", "complete-idp", [](const RegressionContext& ctx, CaseLog& log) {
        for (std::size_t n = 3; n <= 5; ++n)
            log.expect(is_idp(LaplacianSimplex(complete_graph(n)), 1000, ctx.options().limits),
                       "T_{K_" + std::to_string(n) + "} not IDP");
    });

    add("complete", "complete-unimodal", [](const RegressionContext& ctx, CaseLog& log) {
        for (std::size_t n = 2; n <= 6; ++n)
            log.expect(is_unimodal(ctx.hstar(complete_graph(n))), "h*(K_" + std::to_string(n) + ") not unimodal");
    });

    add("complete", "bridge-division", [](const RegressionContext&, CaseLog& log) {
        for (std::size_t n = 2; n <= 6; ++n)
            log.expect(bridge_division_condition(complete_graph(n)), "K_" + std::to_string(n) + " fails");
        for (std::size_t n = 3; n <= 8; ++n)
            log.expect(bridge_division_condition(cycle_graph(n)), "C_" + std::to_string(n) + " fails");
        log.expect(bridge_division_condition(path_graph(3)), "P_3 fails");
    });

    // ---- operations
    add("operations", "whiskered-even-cycles", [](const RegressionContext&, CaseLog& log) {
        for (std::size_t n : {4, 6})
            log.expect(is_reflexive(LaplacianSimplex(whisker(cycle_graph(n)))),
                       "T_{W(C_" + std::to_string(n) + ")} not reflexive");
    });

    add("operations", "bridges-reflexive", [](const RegressionContext& ctx, CaseLog& log) {
        for (std::size_t n : {3, 5}) {
            Graph c = cycle_graph(n), k = complete_graph(n);
            const std::string tag = "bridge(C_" + std::to_string(n) + ",K_" + std::to_string(n) + ")";
            log.expect(is_reflexive(LaplacianSimplex(c)) && is_reflexive(LaplacianSimplex(k)),
                       tag + ": operands not reflexive");
            log.expect(bridge_division_condition(c) && bridge_division_condition(k),
                       tag + ": division hypothesis fails");
            LaplacianSimplex b(bridge(c, k, n, n));
            log.expect(is_reflexive(b), tag + " not reflexive");
            log.expect(b.normalized_volume() == ctx.kappa(c) * ctx.kappa(k) * 2 * n, tag + ": volume != 2n kappa kappa'");
        }
    });

    add("operations", "wedge-to-bridge", [](const RegressionContext& ctx, CaseLog& log) {
        for (std::size_t n : {3, 5}) {
            const std::string tag = "n=" + std::to_string(n);
            Graph wedge = wedge_with_leaf(cycle_graph(n), complete_graph(n));
            auto side = wedge_side(n);
            const Vertex x = 2 * n - 1, y = 2 * n;
            Graph moved = leaf_move(wedge, side, x, y);
            IntMatrix u = leaf_move_transform(wedge, side, x, y);
            log.expect(is_unimodular(u), tag + ": transform not unimodular");
            log.expect(u * laplacian(wedge) == laplacian(moved), tag + ": U L != L'");
            LaplacianSimplex sw(wedge), sm(moved);
            log.expect(sw.normalized_volume() == sm.normalized_volume(), tag + ": volumes differ");
            auto hw = ctx.hstar(sw), hm = ctx.hstar(sm);
            log.expect(hw == hm, tag + ": h* differs " + vec_str(hw) + " vs " + vec_str(hm));
            auto hb = ctx.hstar(bridge(cycle_graph(n), complete_graph(n), n, n));
            log.expect(hm == hb, tag + ": moved graph does not match the bridge");
            log.expect(is_reflexive(sw), tag + ": wedge not reflexive");
        }
    });

    add("operations", "tail-attachment", [](const RegressionContext& ctx, CaseLog& log) {
        std::mt19937_64 rng(ctx.options().seed);
        for (const Graph& base : {cycle_graph(4), complete_graph(4), cycle_graph(5)})
            for (std::size_t k = 1; k <= 3; ++k) {
                Graph tree = random_tree(k + 1, rng);
                LaplacianSimplex with_path(attach_path(base, 1, k)), with_tree(attach_tree(base, 1, tree));
                const std::string tag = "n=" + std::to_string(base.n()) + ", k=" + std::to_string(k);
                log.expect(with_path.normalized_volume() == with_tree.normalized_volume(), tag + ": volumes differ");
                log.expect(ctx.hstar(with_path) == ctx.hstar(with_tree), tag + ": h* differs");
            }
    });

    // ---- random sweep
    add("random", "hibi-cross-check", [](const RegressionContext& ctx, CaseLog& log) {
        std::mt19937_64 rng(ctx.options().seed);
        for (int k = 0; k < 25; ++k) {
            const std::size_t n = 2 + uniform_below(rng, 5);
            Graph g = random_connected_graph(n, rng);
            LaplacianSimplex s(g);
            const std::string tag = "graph #" + std::to_string(k) + " (n=" + std::to_string(n) + ")";
            auto generic = hstar_generic(s.vertex_matrix(), ctx.options().limits);
            auto dilate = hstar_dilate(s.vertex_matrix(), ctx.options().limits);
            log.expect(s.normalized_volume() == ctx.kappa(s) * n, tag + ": volume != n kappa");
            log.expect(generic.sum() == s.normalized_volume(), tag + ": sum h* != volume");
            log.expect(generic == dilate, tag + ": generic " + vec_str(generic) + " vs dilate " + vec_str(dilate));
            log.expect(is_reflexive(s) == cofactor_reflexivity_test(s), tag + ": reflexivity tests disagree");
            log.expect(is_symmetric(generic) == is_reflexive(s), tag + ": symmetry != reflexivity");
            auto points = lattice_points(s, ctx.options().limits);
            if (n >= 2)
                log.expect(generic[1] == Integer(points.size()) - n, tag + ": h*_1 != |P cap Z^d| - n");
        }
    });

    return cases;
}

inline std::vector<std::string> regression_groups() {
    std::vector<std::string> groups;
    for (const auto& c : regression_cases())
        if (std::find(groups.begin(), groups.end(), c.group) == groups.end()) groups.push_back(c.group);
    return groups;
}

/// Runs the selected cases; results come back in declaration order whatever `jobs` is.
inline RegressionReport run_regression(const RegressionOptions& options = {}) {
    const auto groups = regression_groups();
    for (const auto& g : options.only)
        if (std::ranges::find(groups, g) == groups.end())
            throw ParseError("unknown regression group '" + g + "'");
    std::vector<RegressionCase> selected;
    for (auto& c : regression_cases())
        if (options.only.empty() || std::ranges::find(options.only, c.group) != options.only.end())
            selected.push_back(std::move(c));

    RegressionContext ctx(options);
    RegressionReport report;
    report.seed = options.seed;
    report.results.resize(selected.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < selected.size(); i = next++) {
            const auto& c = selected[i];
            CaseLog log;
            try {
                c.body(ctx, log);
            } catch (const std::exception& e) {
                log.expect(false, std::string("exception: ") + e.what());
            }
            report.results[i] = {c.group, c.name, log.failures().empty(), log.failures(), log.notes()};
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(selected.size())));
    std::vector<std::thread> threads;
    for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
    return report;
}

inline void print_regression(std::ostream& out, const RegressionReport& report) {
    for (const auto& r : report.results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.group << '/' << r.name << '\n';
        for (const auto& f : r.failures) out << "    " << f << '\n';
        for (const auto& n : r.notes) out << "    note: " << n << '\n';
    }
    out << report.results.size() - report.failures() << '/' << report.results.size() << " cases passed (seed "
        << report.seed << ")\n";
}

}  // namespace lapsim
