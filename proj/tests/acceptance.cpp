// Acceptance runner: one line per criterion, exit status 0 iff every
// criterion not listed in --expect-fail passes and every listed one fails.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "permwqo/antichains.hpp"
#include "permwqo/brute.hpp"
#include "permwqo/decomposition.hpp"
#include "permwqo/graph.hpp"
#include "permwqo/grid.hpp"
#include "permwqo/labels.hpp"
#include "permwqo/perm_class.hpp"

using namespace permwqo;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
    std::vector<std::string> notes;  // printed indented under the criterion line
};

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<Outcome()> run;
};

Permutation P(const char* s) { return parse_permutation(s); }

std::vector<Permutation> Ps(std::initializer_list<const char*> xs) {
    std::vector<Permutation> out;
    for (auto x : xs) out.push_back(P(x));
    return out;
}

std::string yes(bool b) { return b ? "PASS" : "FAIL"; }

// 1 ------------------------------------------------------------------

Outcome containment_anchor() {
    Outcome o;
    const auto pi = P("432679185");
    const auto w = find_occurrence(P("32514"), pi);
    bool ok = w.has_value();
    std::string witness;
    if (w) {
        std::vector<int> vals;
        for (auto i : *w) vals.push_back(pi.at(i)), witness += std::to_string(pi.at(i));
        ok = brute::same_pattern(vals, P("32514"));
    }
    const bool avoid = !contains(P("54321"), pi) && !brute::contains(P("54321"), pi);
    o.passed = ok && avoid;
    o.detail = "32514 in 432679185 via entries " + (witness.empty() ? std::string("(none)") : witness) +
               "; 54321 avoided: " + (avoid ? "yes" : "no");
    return o;
}

// 2 ------------------------------------------------------------------

Outcome inflation_anchor() {
    Outcome o;
    const auto pi = inflate(P("2413"), Ps({"1", "132", "321", "12"}));
    const auto t = decompose_tree(pi);
    const std::string expected = "2413[1, +(1, -(1, 1)), -(1, 1, 1), +(1, 1)]";
    o.passed = pi == P("479832156") && t.str() == expected && t.evaluate() == pi;
    o.detail = "inflation " + pi.compact() + ", tree " + t.str();
    return o;
}

// 3 ------------------------------------------------------------------

Outcome graph_correspondences() {
    Outcome o;
    struct Row {
        const char* name;
        std::function<bool(const GraphClassification&)> graph_side;
        std::function<bool(const Permutation&)> perm_side;
        std::size_t mismatches = 0;
        std::size_t members = 0;
    };
    const auto b321 = Ps({"321"}), bforest = Ps({"321", "3412"}), blin = Ps({"321", "2341", "3412", "4123"}),
               bco = Ps({"2413", "3142"});
    std::vector<Row> rows = {
        {"bipartite <=> Av(321)", [](auto& c) { return c.is_bipartite; }, [&](auto& p) { return brute::avoids_all(p, b321); }},
        {"forest <=> Av(321, 3412)", [](auto& c) { return c.is_forest; }, [&](auto& p) { return brute::avoids_all(p, bforest); }},
        {"linear forest <=> Av(321, 2341, 3412, 4123)", [](auto& c) { return c.is_linear_forest; },
         [&](auto& p) { return brute::avoids_all(p, blin); }},
        {"cograph <=> Av(2413, 3142)", [](auto& c) { return c.is_cograph; }, [&](auto& p) { return brute::avoids_all(p, bco); }},
        {"connected <=> sum-indecomposable", [](auto& c) { return c.is_connected; },
         [](auto& p) { return !brute::sum_decomposable(p); }},
    };
    std::size_t cycles_found = 0, total = 0;
    const std::vector<Graph> long_cycles = {Graph::cycle(5), Graph::cycle(6), Graph::cycle(7)};
    for (std::size_t n = 1; n <= 7; ++n) {
        for (const auto& pi : all_permutations(n)) {
            ++total;
            const auto g = inversion_graph(pi);
            const auto c = classify(g);
            for (auto& r : rows) {
                const bool a = r.graph_side(c), b = r.perm_side(pi);
                r.members += a;
                r.mismatches += a != b;
            }
            for (const auto& cyc : long_cycles)
                if (cyc.size() <= n && induced_embeds(cyc, g)) ++cycles_found;
        }
    }
    for (const auto& r : rows) {
        o.passed = o.passed && r.mismatches == 0;
        o.notes.push_back(std::string(r.name) + ": " + std::to_string(r.members) + " graph-side members, " +
                          std::to_string(r.mismatches) + " mismatches");
    }
    o.notes.push_back("induced C5, C6, C7: " + std::to_string(cycles_found) + " found");
    o.passed = o.passed && cycles_found == 0;
    o.detail = std::to_string(total) + " permutations of length 1..7, set equality on all five correspondences";
    return o;
}

// 4 ------------------------------------------------------------------

Outcome gallai() {
    Outcome o;
    std::size_t simples = 0;
    std::map<std::size_t, std::size_t> aut_sizes;
    for (std::size_t n = 4; n <= 6; ++n) {
        for (const auto& sigma : all_permutations(n)) {
            if (!is_simple(sigma)) continue;
            ++simples;
            const auto g = inversion_graph(sigma);
            const auto rc = reverse_complement(sigma);
            const PermSet images = {sigma, inverse(sigma), rc, inverse(rc)};
            if (preimages(g, n) != images) {
                o.passed = false;
                o.notes.push_back("preimages differ for " + sigma.compact());
            }
            // Position maps induced by the symmetries that fix sigma.
            std::set<std::vector<std::size_t>> realized;
            std::vector<std::size_t> id(n), inv(n), rev(n), rcinv(n);
            for (std::size_t i = 1; i <= n; ++i) {
                id[i - 1] = i;
                inv[i - 1] = static_cast<std::size_t>(sigma.at(i));
                rev[i - 1] = n + 1 - i;
                rcinv[i - 1] = n + 1 - static_cast<std::size_t>(sigma.at(i));
            }
            realized.insert(id);
            if (inverse(sigma) == sigma) realized.insert(inv);
            if (rc == sigma) realized.insert(rev);
            if (inverse(rc) == sigma) realized.insert(rcinv);
            const auto autos = automorphisms(g);
            const std::set<std::vector<std::size_t>> got(autos.begin(), autos.end());
            ++aut_sizes[got.size()];
            const bool size_ok = got.size() == 1 || got.size() == 2 || got.size() == 4;
            if (!size_ok || got != realized) {
                o.passed = false;
                o.notes.push_back("automorphisms of G_" + sigma.compact() + " not all realized by symmetries");
            }
        }
    }
    std::string sizes;
    for (auto [k, v] : aut_sizes) sizes += (sizes.empty() ? "" : ", ") + std::to_string(v) + " with " + std::to_string(k);
    o.detail = std::to_string(simples) + " simple permutations of length 4..6; automorphism group sizes: " + sizes;
    return o;
}

// 5 ------------------------------------------------------------------

// In Av(12)^{+1} iff deleting some entry leaves a decreasing sequence.
bool brute_plus_one_av12(const Permutation& pi) {
    if (pi.empty()) return true;
    for (std::size_t skip = 0; skip < pi.size(); ++skip) {
        bool decreasing = true;
        int prev = static_cast<int>(pi.size()) + 1;
        for (std::size_t i = 0; i < pi.size() && decreasing; ++i) {
            if (i == skip) continue;
            decreasing = pi[i] < prev;
            prev = pi[i];
        }
        if (decreasing) return true;
    }
    return false;
}

Outcome atkinson_beals() {
    Outcome o;
    const auto r = plus_one_basis(PermClass(Ps({"12"})));
    const auto& basis = r.basis.basis();
    bool antichain = true;
    for (const auto& a : basis)
        for (const auto& b : basis)
            if (a != b && brute::contains(a, b)) antichain = false;
    PermSet scanned;
    for (std::size_t n = 1; n <= 7; ++n)
        for (const auto& pi : all_permutations(n)) {
            if (brute_plus_one_av12(pi)) continue;
            bool minimal = true;
            for (std::size_t i = 1; i <= n && minimal; ++i) minimal = brute_plus_one_av12(delete_entry(pi, i));
            if (minimal) scanned.insert(pi);
        }
    std::size_t len7 = 0;
    for (const auto& p : scanned) len7 += p.size() == 7;
    o.passed = r.exact && r.searched_to == 6 && r.bound == 6 && antichain && basis.count(P("123")) && len7 == 0 && scanned == basis;
    o.detail = "search to length " + std::to_string(r.searched_to) + " (bound " + std::to_string(r.bound) + "), " +
               std::to_string(basis.size()) + " basis elements, antichain: " + (antichain ? "yes" : "no") +
               ", independent scan to 7 finds " + std::to_string(scanned.size()) + " (" + std::to_string(len7) + " of length 7)";
    return o;
}

// 6 ------------------------------------------------------------------

Outcome order_reflection() {
    Outcome o;
    const auto L = FinitePoset::two_antichain();
    std::vector<Permutation> xs;
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& p : all_permutations(n)) xs.push_back(p);
    std::vector<LabeledPermutation> enc;
    for (const auto& b : xs) enc.push_back(last_entry_encoding(b));
    std::size_t related = 0, violations = 0, pairs = 0;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < xs.size(); ++j) {
            ++pairs;
            if (!labeled_contains(enc[i], enc[j], L)) continue;
            ++related;
            if (!brute::contains(xs[i], xs[j])) ++violations;
        }
    o.notes.push_back("last entry: " + std::to_string(pairs) + " pairs, " + std::to_string(related) +
                      " with related encodings, " + std::to_string(violations) + " violations");

    // Compass: half the pairs take sigma as a sub-pattern of pi through the deleted
    // entry, so the antecedent is exercised often.
    std::mt19937_64 rng(0);
    auto uni = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
    auto random_labeled = [&](std::size_t n) {
        std::vector<int> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i + 1);
        std::shuffle(v.begin(), v.end(), rng);
        LabeledPermutation p{Permutation(v), {}};
        for (std::size_t i = 0; i < n; ++i) p.labels.push_back(uni(0, 1));
        return p;
    };
    const auto CL = compass_poset(L);
    const std::size_t trials = 2000;
    std::size_t c_related = 0, c_violations = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t n = uni(2, 6);
        const auto pi = random_labeled(n);
        const std::size_t b = uni(1, n);
        LabeledPermutation sigma;
        std::size_t a = 0;
        if (t % 2 == 0) {
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < n; ++i)
                if (i + 1 == b || uni(0, 1)) idx.push_back(i);
            if (idx.size() < 2) idx = {b - 1, b == 1 ? std::size_t{1} : std::size_t{0}};
            std::sort(idx.begin(), idx.end());
            idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
            std::vector<int> vals;
            for (auto i : idx) {
                vals.push_back(pi.perm[i]);
                sigma.labels.push_back(pi.labels[i]);
                if (i + 1 == b) a = sigma.labels.size();
            }
            sigma.perm = reduce(vals);
        } else {
            sigma = random_labeled(uni(2, n));
            a = uni(1, sigma.perm.size());
        }
        if (!labeled_contains(compass_encoding(sigma, a, 2), compass_encoding(pi, b, 2), CL)) continue;
        ++c_related;
        if (!brute::labeled_contains(sigma, pi, L)) ++c_violations;
    }
    o.notes.push_back("compass: " + std::to_string(trials) + " seeded pairs, " + std::to_string(c_related) +
                      " with related encodings, " + std::to_string(c_violations) + " violations");
    o.passed = violations == 0 && c_violations == 0 && trials >= 1000;
    o.detail = "zero violations required in both encodings";
    return o;
}

// 7 ------------------------------------------------------------------

Outcome stankova() {
    Outcome o;
    const auto X = ZeroPmOneMatrix::x_matrix();
    const auto av_grid = Ps({"2143", "3412"}), av_geom = Ps({"2143", "3412", "2413", "3142"});
    std::string grid_counts, geom_counts;
    for (std::size_t n = 0; n <= 6; ++n) {
        PermSet g_expected, m_expected;
        for (const auto& pi : all_permutations(n)) {
            if (brute::avoids_all(pi, av_grid)) g_expected.insert(pi);
            if (brute::avoids_all(pi, av_geom)) m_expected.insert(pi);
        }
        const auto g = enumerate_grid(X, n, GridKind::monotone);
        const auto m = enumerate_grid(X, n, GridKind::geometric);
        o.passed = o.passed && g == g_expected && m == m_expected;
        grid_counts += (n ? "," : "") + std::to_string(g.size());
        geom_counts += (n ? "," : "") + std::to_string(m.size());
        if (n == 4) o.passed = o.passed && g.size() == 22 && m.size() == 20;
    }
    const bool g3142 = geom_member(P("3142"), X).has_value();
    o.passed = o.passed && !g3142;
    o.detail = "Grid(X) counts " + grid_counts + ", Geom(X) counts " + geom_counts + ", 3142 geometric: " + (g3142 ? "yes" : "no");
    return o;
}

// 8 ------------------------------------------------------------------

std::vector<ZeroPmOneMatrix> matrices_up_to_2x2() {
    std::vector<ZeroPmOneMatrix> out;
    for (std::size_t cols = 1; cols <= 2; ++cols)
        for (std::size_t rows = 1; rows <= 2; ++rows) {
            const std::size_t cells = cols * rows;
            std::size_t total = 1;
            for (std::size_t i = 0; i < cells; ++i) total *= 3;
            for (std::size_t code = 0; code < total; ++code) {
                ZeroPmOneMatrix m(cols, rows);
                std::size_t c = code;
                for (std::size_t k = 1; k <= cols; ++k)
                    for (std::size_t l = 1; l <= rows; ++l, c /= 3) m.set(k, l, static_cast<int>(c % 3) - 1);
                out.push_back(m);
            }
        }
    return out;
}

std::optional<Permutation> first_difference(const ZeroPmOneMatrix& m, std::size_t max_len) {
    for (std::size_t n = 0; n <= max_len; ++n) {
        std::optional<Permutation> witness;
        for_each_permutation(n, [&](const Permutation& p) {
            if (grid_member(p, m) && !geom_member(p, m)) witness = p;
            return !witness;
        });
        if (witness) return witness;
    }
    return std::nullopt;
}

Outcome forest_criterion() {
    Outcome o;
    const auto ms = matrices_up_to_2x2();
    std::size_t forests = 0, forests_equal = 0, cycles = 0, cycles_differ5 = 0, cycles_differ8 = 0;
    std::map<std::size_t, std::size_t> first_len;
    for (const auto& m : ms) {
        if (is_forest(cell_graph(m))) {
            ++forests;
            bool equal = true;
            for (std::size_t n = 0; n <= 5 && equal; ++n)
                equal = enumerate_grid(m, n, GridKind::monotone) == enumerate_grid(m, n, GridKind::geometric);
            forests_equal += equal;
            continue;
        }
        ++cycles;
        const auto w = first_difference(m, 8);
        if (w) {
            ++first_len[w->size()];
            cycles_differ8 += 1;
            cycles_differ5 += w->size() <= 5;
        }
    }
    const auto X = ZeroPmOneMatrix::x_matrix();
    const bool x_differs = grid_member(P("3142"), X) && !geom_member(P("3142"), X);
    std::string lens;
    for (auto [len, count] : first_len) lens += (lens.empty() ? "" : ", ") + std::to_string(count) + " at length " + std::to_string(len);
    o.notes.push_back("forest => Grid = Geom to n = 5: " + yes(forests_equal == forests) + " (" + std::to_string(forests_equal) +
                      "/" + std::to_string(forests) + ")");
    o.notes.push_back("non-forest => Grid != Geom by n = 5: " + yes(cycles_differ5 == cycles) + " (" +
                      std::to_string(cycles_differ5) + "/" + std::to_string(cycles) + ")");
    o.notes.push_back("X-matrix differs at 3142: " + yes(x_differs));
    o.notes.push_back("non-forest shapes differing by n = 8: " + std::to_string(cycles_differ8) + "/" + std::to_string(cycles) +
                      "; first difference " + lens);
    o.passed = forests_equal == forests && cycles_differ5 == cycles && x_differs;
    o.detail = std::to_string(ms.size()) + " matrices up to 2x2; the biconditional at n <= 5 requires every non-forest sign pattern to differ by length 5";
    return o;
}

// 9 ------------------------------------------------------------------

Outcome antichain_anchors() {
    Outcome o;
    const std::pair<AntichainFamily, const char*> anchors[] = {
        {AntichainFamily::amr_oscillation, "4 1 2 6 3 8 5 10 7 12 9 14 11 15 16 13"},
        {AntichainFamily::amr_tarjan, "2 15 4 1 6 3 8 5 10 7 12 9 14 11 16 13"},
        {AntichainFamily::widdershins, "15 1 13 2 11 4 9 6 10 8 12 7 14 5 16 3"},
    };
    auto leq = [](const Permutation& a, const Permutation& b) { return contains(a, b); };
    for (const auto& [f, text] : anchors) {
        const auto k = index_for_length(f, 16);
        const bool exact = k && antichain_member(f, *k) == P(text);
        o.passed = o.passed && exact;
        std::vector<Permutation> members;
        for (std::size_t i = 1; i <= 4; ++i) members.push_back(antichain_member(f, i));
        const auto v = antichain_violation(members, leq);
        o.passed = o.passed && !v;
        std::string verdict = v ? "FAIL (member " + std::to_string(v->first) + " <= member " + std::to_string(v->second) + ")"
                                : std::string("PASS");
        o.notes.push_back(std::string(family_name(f)) + ": length-16 instance " + yes(exact) + ", first 4 members antichain " + verdict);
    }
    const auto L = FinitePoset::two_antichain();
    std::vector<LabeledPermutation> lp;
    for (std::size_t i = 1; i <= 5; ++i) lp.push_back(labeled_antichain_member(i));
    const bool labeled_ok = verify_antichain(lp, [&](const LabeledPermutation& a, const LabeledPermutation& b) {
        return labeled_contains(a, b, L);
    });
    o.passed = o.passed && labeled_ok;
    o.notes.push_back("labeled-path: first 5 members antichain " + yes(labeled_ok));
    bool hasse = true;
    for (std::size_t n = 3; n <= 7; ++n)
        for (const auto& a : increasing_oscillations(n))
            for (const auto& b : increasing_oscillations(n + 1)) hasse = hasse && brute::contains(a, b);
    o.passed = o.passed && hasse;
    o.notes.push_back("oscillation Hasse property for 3 <= n <= 7: " + yes(hasse));
    o.detail = o.passed ? "all anchors and antichains verified" : "see the failing sub-results below";
    return o;
}

// 10 -----------------------------------------------------------------

Outcome closure_consistency() {
    Outcome o;
    const std::vector<PermClass> bases = {
        PermClass(Ps({"231"})), PermClass(Ps({"2413", "3142"})), PermClass(Ps({"321", "2341", "3412", "4123"})),
        PermClass(Ps({"2413"})), PermClass(Ps({"123", "25314"})),
    };
    std::size_t checked = 0, disagreements = 0;
    for (const auto& c : bases)
        for (const auto& pi : all_permutations(7)) {
            ++checked;
            disagreements += closure_member(pi, c, ClosureKind::substitution) != substitution_member_via_tree(pi, c);
        }
    o.passed = disagreements == 0;
    o.detail = std::to_string(checked) + " (class, permutation) pairs over S7, " + std::to_string(disagreements) + " disagreements";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Runs the acceptance criteria"};
    std::vector<int> expect_fail;
    std::vector<int> only;
    app.add_option("--expect-fail", expect_fail, "criteria known to fail")->delimiter(',');
    app.add_option("--only", only, "run only these criteria")->delimiter(',');
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria = {
        {1, "containment anchor", 1, containment_anchor},
        {2, "inflation anchor", 1, inflation_anchor},
        {3, "inversion-graph correspondences", 120, graph_correspondences},
        {4, "Gallai and automorphisms", 60, gallai},
        {5, "one-point extension basis bound", 30, atkinson_beals},
        {6, "order reflection", 120, order_reflection},
        {7, "X-class enumeration", 300, stankova},
        {8, "forest criterion", 300, forest_criterion},
        {9, "antichain anchors", 120, antichain_anchors},
        {10, "closure consistency", 120, closure_consistency},
    };
    const std::set<int> expected(expect_fail.begin(), expect_fail.end());
    const std::set<int> selected(only.begin(), only.end());

    int unexpected = 0;
    for (const auto& c : criteria) {
        if (!selected.empty() && !selected.count(c.id)) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.passed = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_seconds) {
            o.passed = false;
            o.detail += " [over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit]";
        }
        const bool xf = expected.count(c.id) > 0;
        const char* status = o.passed ? (xf ? "XPASS" : "PASS") : (xf ? "XFAIL" : "FAIL");
        if (o.passed == xf) ++unexpected;
        std::printf("criterion %d: %s (%.2f s): %s: %s\n", c.id, status, secs, c.title, o.detail.c_str());
        for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
        std::fflush(stdout);
    }
    return unexpected == 0 ? 0 : 1;
}
