#include "permwqo/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "permwqo/antichains.hpp"
#include "permwqo/brute.hpp"
#include "permwqo/decomposition.hpp"
#include "permwqo/graph.hpp"
#include "permwqo/grid.hpp"
#include "permwqo/labels.hpp"
#include "permwqo/perm_class.hpp"

namespace permwqo {

namespace {

using Rng = std::mt19937_64;

CheckOutcome pass(std::string detail) { return {true, std::move(detail)}; }
CheckOutcome fail(std::string detail) { return {false, std::move(detail)}; }

/// All permutations of length lo..hi, shortest first.
std::vector<Permutation> perms_up_to(std::size_t hi, std::size_t lo = 0) {
    std::vector<Permutation> out;
    for (std::size_t n = lo; n <= hi; ++n) {
        auto level = all_permutations(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

Permutation random_perm(Rng& rng, std::size_t n) {
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i + 1);
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation(v);
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<std::size_t> random_labels(Rng& rng, std::size_t n, std::size_t label_count) {
    std::vector<std::size_t> out(n);
    for (auto& l : out) l = uniform(rng, 0, label_count - 1);
    return out;
}

/// A random sub-pattern of p keeping `forced` (0-based) when given; the index of
/// the forced entry in the result is written to `forced_out`.
LabeledPermutation random_subpattern(Rng& rng, const LabeledPermutation& p, std::size_t keep,
                                     std::optional<std::size_t> forced = std::nullopt,
                                     std::size_t* forced_out = nullptr) {
    std::vector<std::size_t> idx(p.perm.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    if (forced) {
        auto it = std::find(idx.begin(), idx.end(), *forced);
        std::iter_swap(idx.begin(), it);
    }
    idx.resize(keep);
    std::sort(idx.begin(), idx.end());
    LabeledPermutation out{pattern_at(p.perm, idx), {}};
    for (std::size_t i = 0; i < idx.size(); ++i) {
        out.labels.push_back(p.labels[idx[i]]);
        if (forced && idx[i] == *forced && forced_out) *forced_out = i;
    }
    return out;
}

std::string perm_list(const PermSet& s) {
    std::string out;
    for (const auto& p : s) out += (out.empty() ? "" : " ") + p.compact();
    return out.empty() ? "(none)" : out;
}

std::vector<Permutation> perms(std::initializer_list<const char*> xs) {
    std::vector<Permutation> out;
    for (const char* x : xs) out.push_back(parse_permutation(x));
    return out;
}

/// Base classes shared by the class-level checks.
std::vector<PermClass> sample_classes() {
    return {
        PermClass(perms({"231"}), "Av(231)"),
        PermClass(perms({"2413", "3142"}), "separable"),
        PermClass(perms({"321", "2341", "3412", "4123"}), "O_I"),
        PermClass(perms({"12"}), "Av(12)"),
        PermClass(perms({"2413"}), "Av(2413)"),
        PermClass(perms({"123", "25314"}), "Av(123, 25314)"),
    };
}

// ---------------------------------------------------------------- perm-core

CheckOutcome core_contains_naive(const SuiteConfig& cfg) {
    Rng rng(cfg.seed);
    const auto small = perms_up_to(7);
    const auto short_patterns = perms_up_to(4);
    std::size_t checked = 0;
    for (std::size_t n = 0; n <= 8; ++n) {
        for (const auto& pi : all_permutations(n)) {
            const PermSet truth = brute::all_patterns(pi);
            auto verify = [&](const Permutation& sigma) -> bool {
                ++checked;
                const auto w = find_occurrence(sigma, pi);
                if (w.has_value() != (truth.count(sigma) > 0)) return false;
                if (w) {
                    std::vector<int> vals;
                    for (auto i : *w) vals.push_back(pi.at(i));
                    if (!brute::same_pattern(vals, sigma) || !std::is_sorted(w->begin(), w->end())) return false;
                }
                return true;
            };
            if (n <= 7) {
                for (const auto& sigma : small)
                    if (sigma.size() <= n && !verify(sigma))
                        return fail("disagreement on " + sigma.compact() + " in " + pi.compact());
            } else {
                for (const auto& sigma : short_patterns)
                    if (!verify(sigma)) return fail("disagreement on " + sigma.compact() + " in " + pi.compact());
                for (const auto& sigma : truth)
                    if (sigma.size() > 4 && !verify(sigma)) return fail("missed " + sigma.compact() + " in " + pi.compact());
                for (std::size_t k = 5; k <= 8; ++k) {
                    const auto sigma = random_perm(rng, k);
                    if (!verify(sigma)) return fail("disagreement on " + sigma.compact() + " in " + pi.compact());
                }
            }
        }
    }
    return pass(std::to_string(checked) +
                " pairs: all patterns for |pi| <= 7; for |pi| = 8 every pattern of length <= 4, every true "
                "pattern, and seeded random patterns of lengths 5..8");
}

CheckOutcome core_symmetry(const SuiteConfig&) {
    std::size_t checked = 0;
    for (const auto& pi : perms_up_to(8)) {
        ++checked;
        if (apply_symmetry(apply_symmetry(pi, Symmetry::inverse), Symmetry::inverse) != pi)
            return fail("inverse not an involution at " + pi.compact());
        if (apply_symmetry(apply_symmetry(pi, Symmetry::reverse_complement), Symmetry::reverse_complement) != pi)
            return fail("reverse-complement not an involution at " + pi.compact());
        Permutation q = pi;
        for (int i = 0; i < 4; ++i) q = apply_symmetry(q, Symmetry::rc_inverse);
        if (q != pi) return fail("rc-inverse has order not dividing 4 at " + pi.compact());
    }
    return pass(std::to_string(checked) + " permutations of length <= 8");
}

CheckOutcome core_components(const SuiteConfig&) {
    std::size_t checked = 0;
    for (const auto& pi : perms_up_to(9)) {
        for (auto kind : {SumKind::direct, SumKind::skew}) {
            const auto parts = components(pi, kind);
            if (sum_all(parts, kind) != pi) return fail("fold mismatch at " + pi.compact());
            for (const auto& c : parts)
                if (brute::sum_decomposable(c, kind == SumKind::skew))
                    return fail("decomposable component " + c.compact() + " of " + pi.compact());
            ++checked;
        }
    }
    return pass(std::to_string(checked) + " decompositions, lengths <= 9");
}

CheckOutcome core_simple(const SuiteConfig&) {
    std::size_t simples = 0;
    for (const auto& pi : perms_up_to(9, 2)) {
        const auto truth = brute::intervals(pi);
        const auto got = intervals(pi);
        if (got.size() != truth.size()) return fail("interval count mismatch at " + pi.compact());
        for (std::size_t i = 0; i < got.size(); ++i)
            if (got[i].first != truth[i].first || got[i].last != truth[i].second)
                return fail("interval mismatch at " + pi.compact());
        if (is_simple(pi) != truth.empty()) return fail("is_simple mismatch at " + pi.compact());
        simples += truth.empty();
    }
    return pass(std::to_string(simples) + " simple permutations of length 2..9");
}

CheckOutcome core_tree(const SuiteConfig&) {
    std::size_t checked = 0;
    std::function<std::string(const SubstitutionTree&)> shape_error = [&](const SubstitutionTree& t) -> std::string {
        using K = SubstitutionTree::Kind;
        if (t.kind == K::simple && (t.skeleton.size() < 4 || !is_simple(t.skeleton)))
            return "non-simple skeleton " + t.skeleton.compact();
        for (const auto& c : t.children) {
            if (t.kind == K::sum && c.kind == K::sum) return "sum node with sum child";
            if (t.kind == K::skew && c.kind == K::skew) return "skew node with skew child";
            if (auto e = shape_error(c); !e.empty()) return e;
        }
        return {};
    };
    for (const auto& pi : perms_up_to(9, 1)) {
        const auto tree = decompose_tree(pi);
        if (tree.evaluate() != pi) return fail("tree of " + pi.compact() + " evaluates to " + tree.evaluate().compact());
        if (auto e = shape_error(tree); !e.empty()) return fail(e + " in tree of " + pi.compact());
        ++checked;
    }
    return pass(std::to_string(checked) + " trees, lengths 1..9");
}

CheckOutcome core_inflate(const SuiteConfig& cfg) {
    Rng rng(cfg.seed);
    std::size_t checked = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const std::size_t k = uniform(rng, 1, 4);
        const auto sigma = random_perm(rng, k);
        std::vector<Permutation> alphas;
        std::size_t budget = 9 - k;
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t extra = uniform(rng, 0, budget);
            budget -= extra;
            alphas.push_back(random_perm(rng, 1 + extra));
        }
        const auto result = inflate(sigma, alphas);
        if (!brute::contains(sigma, result)) return fail(result.compact() + " misses its skeleton");
        for (const auto& a : alphas)
            if (!brute::contains(a, result)) return fail(result.compact() + " misses block " + a.compact());
        ++checked;
    }
    return pass(std::to_string(checked) + " seeded inflations of length <= 9");
}

// ---------------------------------------------------------------- labels

CheckOutcome labels_degenerate(const SuiteConfig&) {
    const auto one = FinitePoset::singleton();
    auto lift = [](const Permutation& p) { return LabeledPermutation{p, std::vector<std::size_t>(p.size(), 0)}; };
    const auto texts = perms_up_to(7);
    const auto patterns = perms_up_to(5);
    std::size_t checked = 0;
    for (const auto& pi : texts) {
        const auto lp = lift(pi);
        for (const auto& sigma : patterns) {
            if (sigma.size() > 4 && pi.size() > 5) continue;
            if (labeled_contains(lift(sigma), lp, one) != contains(sigma, pi))
                return fail("disagreement on " + sigma.compact() + " in " + pi.compact());
            ++checked;
        }
    }
    return pass(std::to_string(checked) + " pairs, texts of length <= 7");
}

CheckOutcome labels_subword(const SuiteConfig& cfg) {
    Rng rng(cfg.seed);
    std::size_t positives = 0;
    for (int trial = 0; trial < 20000; ++trial) {
        const std::size_t size = uniform(rng, 1, 3);
        std::vector<std::pair<std::size_t, std::size_t>> rel;
        for (std::size_t a = 0; a < size; ++a)
            for (std::size_t b = 0; b < size; ++b)
                if (a != b && uniform(rng, 0, 2) == 0) rel.emplace_back(a, b);
        std::vector<std::string> names;
        for (std::size_t a = 0; a < size; ++a) names.push_back(std::string(1, static_cast<char>('a' + a)));
        const FinitePoset poset(names, rel);
        const Word v = random_labels(rng, uniform(rng, 0, 5), size);
        const Word w = random_labels(rng, uniform(rng, 0, 8), size);
        const bool truth = brute::subword_leq(v, w, poset);
        if (subword_leq(v, w, poset) != truth) return fail("disagreement at trial " + std::to_string(trial));
        positives += truth;
    }
    return pass("20000 seeded word pairs (" + std::to_string(positives) + " related), lengths <= 8, posets of size <= 3");
}

CheckOutcome labels_last_entry(const SuiteConfig& cfg) {
    const auto poset = FinitePoset::two_antichain();
    const auto xs = perms_up_to(6, 1);
    std::vector<LabeledPermutation> enc;
    for (const auto& b : xs) enc.push_back(last_entry_encoding(b));
    std::size_t related = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (!labeled_contains(enc[i], enc[j], poset)) continue;
            ++related;
            if (!contains(xs[i], xs[j])) return fail(xs[i].compact() + " vs " + xs[j].compact());
        }
    }
    Rng rng(cfg.seed);
    for (int trial = 0; trial < 20000; ++trial) {
        const auto g = random_perm(rng, 7);
        const auto b = random_perm(rng, uniform(rng, 1, 7));
        if (labeled_contains(last_entry_encoding(b), last_entry_encoding(g), poset) && !contains(b, g))
            return fail(b.compact() + " vs " + g.compact());
    }
    return pass("all pairs of length <= 6 (" + std::to_string(related) +
                " with related encodings) plus 20000 seeded pairs against length 7");
}

CheckOutcome labels_compass(const SuiteConfig& cfg) {
    Rng rng(cfg.seed);
    const auto L = FinitePoset::two_antichain();
    const auto CL = compass_poset(L);
    const auto marked = FinitePoset::product({L, FinitePoset::two_antichain()});
    auto mark = [&](const LabeledPermutation& p, std::size_t a) {
        LabeledPermutation out{p.perm, {}};
        for (std::size_t i = 0; i < p.labels.size(); ++i) out.labels.push_back(p.labels[i] * 2 + (i + 1 == a ? 1 : 0));
        return out;
    };
    std::size_t antecedent = 0;
    const int trials = 4000;
    for (int trial = 0; trial < trials; ++trial) {
        const std::size_t n = uniform(rng, 2, 6);
        const LabeledPermutation pi{random_perm(rng, n), random_labels(rng, n, 2)};
        const std::size_t b = uniform(rng, 1, n);
        LabeledPermutation sigma;
        std::size_t a = 0;
        if (trial % 2 == 0) {
            std::size_t at = 0;
            sigma = random_subpattern(rng, pi, uniform(rng, 2, n), b - 1, &at);
            a = at + 1;
        } else {
            const std::size_t m = uniform(rng, 2, n);
            sigma = {random_perm(rng, m), random_labels(rng, m, 2)};
            a = uniform(rng, 1, m);
        }
        if (!labeled_contains(compass_encoding(sigma, a, 2), compass_encoding(pi, b, 2), CL)) continue;
        ++antecedent;
        if (!labeled_contains(mark(sigma, a), mark(pi, b), marked))
            return fail("reflection fails at trial " + std::to_string(trial));
    }
    return pass(std::to_string(trials) + " seeded pairs of length <= 6, " + std::to_string(antecedent) +
                " with related encodings, all reflected with the deleted entries matched");
}

CheckOutcome labels_strip_zero(const SuiteConfig& cfg) {
    Rng rng(cfg.seed);
    const auto L = FinitePoset::two_antichain();
    const auto L0 = L.with_minimum();
    const std::size_t zero = L0.size() - 1;
    std::size_t antecedent = 0;
    for (int trial = 0; trial < 5000; ++trial) {
        const std::size_t n = uniform(rng, 1, 7);
        const LabeledPermutation p{random_perm(rng, n), random_labels(rng, n, 3)};
        LabeledPermutation s;
        if (trial % 2 == 0) {
            s = random_subpattern(rng, p, uniform(rng, 0, n));
            for (auto& l : s.labels)
                if (uniform(rng, 0, 2) == 0) l = zero;
        } else {
            const std::size_t m = uniform(rng, 0, n);
            s = {random_perm(rng, m), random_labels(rng, m, 3)};
        }
        if (!labeled_contains(s, p, L0)) continue;
        ++antecedent;
        if (!labeled_contains(strip_zero_labels(s, zero), strip_zero_labels(p, zero), L))
            return fail("order not preserved at trial " + std::to_string(trial));
    }
    return pass("5000 seeded pairs of length <= 7, " + std::to_string(antecedent) + " related over L0");
}

CheckOutcome labels_compass_injective(const SuiteConfig&) {
    std::size_t checked = 0;
    for (std::size_t n = 2; n <= 7; ++n) {
        for (const auto& pi : all_permutations(n)) {
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                LabeledPermutation p{pi, {}};
                for (std::size_t i = 0; i < n; ++i) p.labels.push_back(mask >> i & 1u);
                for (std::size_t a = 1; a <= n; ++a) {
                    const auto [back, at] = compass_decode(compass_encoding(p, a, 2), 2);
                    if (back != p || at != a) return fail("decode mismatch at " + pi.compact());
                    ++checked;
                }
            }
        }
    }
    return pass(std::to_string(checked) + " encodings over a 2-antichain, lengths 2..7");
}

// ---------------------------------------------------------------- invgraph

CheckOutcome graph_symmetry(const SuiteConfig&) {
    std::size_t checked = 0;
    for (const auto& pi : perms_up_to(7)) {
        const auto g = inversion_graph(pi);
        for (auto s : {Symmetry::inverse, Symmetry::reverse_complement, Symmetry::rc_inverse})
            if (!is_isomorphic(g, inversion_graph(apply_symmetry(pi, s))))
                return fail("symmetry image of " + pi.compact() + " has a different graph");
        ++checked;
    }
    return pass(std::to_string(checked) + " permutations of length <= 7");
}

CheckOutcome graph_preservation(const SuiteConfig&) {
    std::size_t checked = 0;
    for (const auto& pi : perms_up_to(7)) {
        const auto g = inversion_graph(pi);
        for (std::size_t k = 1; k <= pi.size(); ++k) {
            for (const auto& sigma : patterns_of_length(pi, k)) {
                if (!induced_embeds(inversion_graph(sigma), g))
                    return fail("G_" + sigma.compact() + " not induced in G_" + pi.compact());
                ++checked;
            }
        }
    }
    return pass(std::to_string(checked) + " contained pairs, |pi| <= 7");
}

CheckOutcome graph_no_long_cycles(const SuiteConfig&) {
    std::vector<Graph> cycles;
    for (std::size_t k = 5; k <= 8; ++k) cycles.push_back(Graph::cycle(k));
    std::size_t checked = 0;
    for (const auto& pi : perms_up_to(8, 5)) {
        const auto g = inversion_graph(pi);
        for (const auto& c : cycles) {
            if (c.size() > g.size()) continue;
            if (induced_embeds(c, g)) return fail("C" + std::to_string(c.size()) + " induced in G_" + pi.compact());
            ++checked;
        }
    }
    return pass(std::to_string(checked) + " searches, |pi| <= 8, k = 5..8");
}

CheckOutcome graph_correspondences(const SuiteConfig&) {
    const auto av321 = perms({"321"});
    const auto forest = perms({"321", "3412"});
    const auto linear = perms({"321", "2341", "3412", "4123"});
    const auto cograph = perms({"2413", "3142"});
    std::size_t checked = 0;
    for (const auto& pi : perms_up_to(8)) {
        const auto c = classify(inversion_graph(pi));
        auto avoids = [&](const std::vector<Permutation>& b) {
            return std::none_of(b.begin(), b.end(), [&](const Permutation& x) { return contains(x, pi); });
        };
        if (c.is_bipartite != avoids(av321)) return fail("bipartite mismatch at " + pi.compact());
        if (c.is_forest != avoids(forest)) return fail("forest mismatch at " + pi.compact());
        if (c.is_linear_forest != avoids(linear)) return fail("linear forest mismatch at " + pi.compact());
        if (c.is_cograph != avoids(cograph)) return fail("cograph mismatch at " + pi.compact());
        if (!pi.empty() && c.is_connected != !brute::sum_decomposable(pi))
            return fail("connectivity mismatch at " + pi.compact());
        ++checked;
    }
    return pass(std::to_string(checked) + " permutations of length <= 8");
}

PermSet symmetry_images(const Permutation& s) {
    return {s, inverse(s), reverse_complement(s), inverse(reverse_complement(s))};
}

CheckOutcome graph_gallai(const SuiteConfig&) {
    std::size_t checked = 0;
    for (const auto& sigma : perms_up_to(7, 4)) {
        if (!is_simple(sigma)) continue;
        const auto g = inversion_graph(sigma);
        if (!is_prime(g)) return fail("G_" + sigma.compact() + " is not prime");
        if (preimages(g, sigma.size()) != symmetry_images(sigma))
            return fail("preimages of G_" + sigma.compact() + ": " + perm_list(preimages(g, sigma.size())));
        ++checked;
    }
    return pass(std::to_string(checked) + " simple permutations of length 4..7");
}

CheckOutcome graph_labeled_gallai(const SuiteConfig&) {
    std::size_t checked = 0;
    for (const auto& sigma : perms_up_to(6, 4)) {
        if (!is_simple(sigma)) continue;
        const std::size_t n = sigma.size();
        const auto g = inversion_graph(sigma);
        const auto autos = automorphisms(g);
        for (const auto& tau : preimages(g, n)) {
            const auto iso = isomorphism(g, inversion_graph(tau));
            if (!iso) return fail("no isomorphism to G_" + tau.compact());
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                LabeledPermutation ls{sigma, {}};
                for (std::size_t i = 0; i < n; ++i) ls.labels.push_back(mask >> i & 1u);
                std::set<LabeledPermutation> images;
                for (auto s : {Symmetry::inverse, Symmetry::reverse_complement, Symmetry::rc_inverse})
                    images.insert(apply_symmetry(ls, s));
                images.insert(apply_symmetry(apply_symmetry(ls, Symmetry::reverse_complement), Symmetry::inverse));
                images.insert(ls);
                // Every labeled isomorphism G_sigma -> G_tau is iso . alpha for an automorphism alpha.
                for (const auto& alpha : autos) {
                    LabeledPermutation lt{tau, std::vector<std::size_t>(n)};
                    for (std::size_t v = 0; v < n; ++v) lt.labels[(*iso)[alpha[v] - 1] - 1] = ls.labels[v];
                    if (!is_isomorphic(inversion_graph(sigma, ls.labels), inversion_graph(tau, lt.labels)))
                        return fail("transported labeling is not isomorphic");
                    if (!images.count(lt)) return fail("labeled preimage outside the symmetry orbit for " + sigma.compact());
                    ++checked;
                }
            }
        }
    }
    return pass(std::to_string(checked) + " labeled isomorphic pairs over simple permutations of length 4..6");
}

// ---------------------------------------------------------------- classes

CheckOutcome class_member(const SuiteConfig&) {
    std::size_t checked = 0;
    for (const auto& c : sample_classes()) {
        const std::vector<Permutation> basis(c.basis().begin(), c.basis().end());
        for (const auto& pi : perms_up_to(7)) {
            if (member(pi, c) != brute::avoids_all(pi, basis)) return fail(pi.compact() + " in " + c.str());
            ++checked;
        }
    }
    return pass(std::to_string(checked) + " membership queries, |pi| <= 7");
}

CheckOutcome class_plus_one(const SuiteConfig&) {
    std::ostringstream detail;
    for (const auto& c : {PermClass(perms({"12"})), PermClass(perms({"21"})), PermClass(perms({"1"})),
                          PermClass(perms({"132", "213"}))}) {
        const auto r = plus_one_basis(c, c.max_basis_length() > 2 ? std::optional<std::size_t>(7) : std::nullopt);
        const auto& b = r.basis.basis();
        for (const auto& x : b) {
            if (plus_one_member(x, c)) return fail(x.compact() + " is a member of " + c.str() + "+1");
            for (std::size_t i = 1; i <= x.size(); ++i)
                if (!plus_one_member(delete_entry(x, i), c))
                    return fail(x.compact() + " is not minimal for " + c.str() + "+1");
            if (r.exact && x.size() > r.bound) return fail("basis element longer than the bound");
            for (const auto& y : b)
                if (x != y && contains(x, y)) return fail("basis is not an antichain");
        }
        detail << c.str() << "+1 -> " << b.size() << " elements" << (r.exact ? " (exact); " : " (partial); ");
    }
    return pass(detail.str());
}

CheckOutcome class_substitution(const SuiteConfig&) {
    std::size_t members = 0, checked = 0;
    for (const auto& c : sample_classes()) {
        for (const auto& pi : perms_up_to(8)) {
            const bool a = closure_member(pi, c, ClosureKind::substitution);
            if (a != substitution_member_via_tree(pi, c)) return fail(pi.compact() + " in <" + c.str() + ">");
            members += a;
            ++checked;
        }
    }
    return pass(std::to_string(checked) + " queries (" + std::to_string(members) + " members), |pi| <= 8");
}

CheckOutcome class_separable(const SuiteConfig&) {
    std::size_t checked = 0;
    for (const auto& c : sample_classes()) {
        for (const auto& pi : perms_up_to(8)) {
            const bool sep = closure_member(pi, c, ClosureKind::separable);
            if (closure_member(pi, c, ClosureKind::sum) && !sep) return fail("sum closure escapes at " + pi.compact());
            if (closure_member(pi, c, ClosureKind::skew) && !sep) return fail("skew closure escapes at " + pi.compact());
            ++checked;
        }
    }
    return pass(std::to_string(checked) + " queries, |pi| <= 8");
}

CheckOutcome class_separable_bottom_up(const SuiteConfig&) {
    const PermClass sep(perms({"2413", "3142"}));
    std::vector<PermSet> built(8);
    built[1] = {Permutation{1}};
    for (std::size_t n = 2; n <= 7; ++n)
        for (std::size_t k = 1; k < n; ++k)
            for (const auto& a : built[k])
                for (const auto& b : built[n - k]) {
                    built[n].insert(sum(a, b, SumKind::direct));
                    built[n].insert(sum(a, b, SumKind::skew));
                }
    std::string counts;
    for (std::size_t n = 1; n <= 7; ++n) {
        if (enumerate(sep, n) != built[n]) return fail("mismatch at length " + std::to_string(n));
        counts += (n > 1 ? "," : "") + std::to_string(built[n].size());
    }
    return pass("counts " + counts + " for n = 1..7");
}

CheckOutcome class_union(const SuiteConfig&) {
    const std::vector<std::pair<PermClass, PermClass>> pairs = {
        {PermClass(perms({"12"})), PermClass(perms({"21"}))},
        {PermClass(perms({"321"})), PermClass(perms({"123"}))},
        {PermClass(perms({"2413", "3142"})), PermClass(perms({"12"}))},
        {PermClass(perms({"231"})), PermClass(perms({"231"}))},
    };
    std::string detail;
    for (const auto& [c, d] : pairs) {
        const auto u = union_basis(c, d);
        const std::size_t bound = c.max_basis_length() + d.max_basis_length();
        for (const auto& pi : perms_up_to(std::max<std::size_t>(bound, 6)))
            if (member(pi, u) != (member(pi, c) || member(pi, d)))
                return fail(pi.compact() + " disagrees for " + c.str() + " u " + d.str());
        detail += c.str() + " u " + d.str() + " = " + u.str() + "; ";
    }
    return pass(detail);
}

// ---------------------------------------------------------------- grids

std::vector<ZeroPmOneMatrix> small_matrices() {
    std::vector<ZeroPmOneMatrix> out;
    for (std::size_t cols = 1; cols <= 2; ++cols) {
        for (std::size_t rows = 1; rows <= 2; ++rows) {
            const std::size_t cells = cols * rows;
            std::size_t total = 1;
            for (std::size_t i = 0; i < cells; ++i) total *= 3;
            for (std::size_t code = 0; code < total; ++code) {
                ZeroPmOneMatrix m(cols, rows);
                std::size_t x = code;
                for (std::size_t c = 1; c <= cols; ++c)
                    for (std::size_t r = 1; r <= rows; ++r, x /= 3) m.set(c, r, static_cast<int>(x % 3) - 1);
                if (!m.nonzero_cells().empty()) out.push_back(m);
            }
        }
    }
    return out;
}

struct GridTable {
    std::vector<ZeroPmOneMatrix> matrices;
    // [matrix][n] -> members
    std::vector<std::vector<PermSet>> grid, geom;
};

constexpr std::size_t kTableLength = 6;

const GridTable& grid_table() {
    static std::once_flag once;
    static GridTable table;
    std::call_once(once, [] {
        table.matrices = small_matrices();
        for (const auto& m : table.matrices) {
            table.grid.emplace_back();
            table.geom.emplace_back();
            for (std::size_t n = 0; n <= kTableLength; ++n) {
                table.grid.back().push_back(enumerate_grid(m, n, GridKind::monotone));
                table.geom.back().push_back(enumerate_grid(m, n, GridKind::geometric));
            }
        }
    });
    return table;
}

CheckOutcome grid_geom_within_grid(const SuiteConfig&) {
    const auto& t = grid_table();
    for (std::size_t i = 0; i < t.matrices.size(); ++i)
        for (std::size_t n = 0; n <= kTableLength; ++n)
            for (const auto& p : t.geom[i][n])
                if (!t.grid[i][n].count(p)) return fail(p.compact() + " geometric but not monotone for " + t.matrices[i].str());
    return pass(std::to_string(t.matrices.size()) + " matrices up to 2x2, lengths <= 6");
}

/// Shortest length <= max_len at which Grid(m) and Geom(m) differ, with a witness.
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

CheckOutcome grid_forest(const SuiteConfig&) {
    const auto& t = grid_table();
    std::size_t forests = 0;
    std::map<std::size_t, std::size_t> first_len;
    for (std::size_t i = 0; i < t.matrices.size(); ++i) {
        if (is_forest(cell_graph(t.matrices[i]))) {
            for (std::size_t n = 0; n <= kTableLength; ++n)
                if (t.grid[i][n] != t.geom[i][n]) return fail(t.matrices[i].str() + ": forest but classes differ");
            ++forests;
            continue;
        }
        const auto w = first_difference(t.matrices[i], 8);
        if (!w) return fail(t.matrices[i].str() + ": cycle but classes agree to length 8");
        ++first_len[w->size()];
    }
    const auto X = ZeroPmOneMatrix::x_matrix();
    if (geom_member(Permutation{3, 1, 4, 2}, X) || !grid_member(Permutation{3, 1, 4, 2}, X))
        return fail("3142 does not separate Grid(X) from Geom(X)");
    std::string lens;
    for (auto [len, count] : first_len) lens += (lens.empty() ? "" : ", ") + std::to_string(count) + " at length " + std::to_string(len);
    return pass(std::to_string(forests) + " forest matrices agree to length 6; every non-forest matrix differs, first "
                "difference: " + lens);
}

CheckOutcome grid_stankova(const SuiteConfig&) {
    const auto X = ZeroPmOneMatrix::x_matrix();
    const PermClass av(perms({"2143", "3412"}));
    std::string counts;
    for (std::size_t n = 0; n <= 6; ++n) {
        const auto g = enumerate_grid(X, n, GridKind::monotone);
        if (g != enumerate(av, n)) return fail("mismatch at length " + std::to_string(n));
        counts += (n ? "," : "") + std::to_string(g.size());
    }
    return pass("Grid(X) = Av(2143, 3412) for n <= 6, counts " + counts);
}

std::string drawing_error(const Permutation& pi, const ZeroPmOneMatrix& m, const GeometricDrawing& d) {
    if (!is_valid_gridding(d.gridded, m)) return "invalid gridding";
    if (d.params.size() != pi.size()) return "wrong parameter count";
    for (const auto& t : d.params)
        if (t <= Rational(0) || t >= Rational(1)) return "parameter outside (0,1)";
    auto pts = drawing_points(d, m);
    std::vector<std::pair<Rational, std::size_t>> by_x;
    for (std::size_t i = 0; i < pts.size(); ++i) by_x.emplace_back(pts[i].first, i);
    std::sort(by_x.begin(), by_x.end());
    std::vector<Rational> ys;
    for (std::size_t i = 0; i < by_x.size(); ++i) {
        if (i && by_x[i].first == by_x[i - 1].first) return "two points share an x coordinate";
        if (by_x[i].second != i) return "points out of position order";
        ys.push_back(pts[by_x[i].second].second);
    }
    std::vector<Rational> sorted_ys = ys;
    std::sort(sorted_ys.begin(), sorted_ys.end());
    if (std::adjacent_find(sorted_ys.begin(), sorted_ys.end()) != sorted_ys.end()) return "two points share a y coordinate";
    if (reduce(ys) != pi) return "drawing realizes a different permutation";
    return {};
}

CheckOutcome grid_witnesses(const SuiteConfig&) {
    std::vector<ZeroPmOneMatrix> ms = {ZeroPmOneMatrix::x_matrix(),
                                       ZeroPmOneMatrix::from_rows_top_down({{-1, 0, 1}, {1, -1, -1}}),
                                       ZeroPmOneMatrix::from_rows_top_down({{1, 1}, {1, 0}})};
    std::size_t griddings_seen = 0, drawings = 0;
    for (const auto& m : ms) {
        for (const auto& pi : perms_up_to(6)) {
            for (const auto& g : griddings(pi, m)) {
                if (!is_valid_gridding(g, m)) return fail("invalid gridding of " + pi.compact());
                ++griddings_seen;
            }
            if (auto d = geom_member(pi, m)) {
                if (auto e = drawing_error(pi, m, *d); !e.empty()) return fail(e + " for " + pi.compact() + " on " + m.str());
                ++drawings;
            }
        }
    }
    return pass(std::to_string(griddings_seen) + " griddings and " + std::to_string(drawings) +
                " drawings revalidated independently");
}

CheckOutcome grid_guard_invariance(const SuiteConfig& cfg) {
    Rng rng(cfg.seed);
    const auto X = ZeroPmOneMatrix::x_matrix();
    for (int trial = 0; trial < 300; ++trial) {
        const auto pi = random_perm(rng, uniform(rng, 0, 8));
        const bool base = geom_member(pi, X, 8).has_value();
        for (std::size_t cap : {9, 10, 12})
            if (geom_member(pi, X, cap).has_value() != base) return fail("verdict changed with cap at " + pi.compact());
    }
    return pass("300 seeded permutations of length <= 8, caps 8, 9, 10, 12");
}

// ---------------------------------------------------------------- antichains

CheckOutcome anti_paths(const SuiteConfig&) {
    for (std::size_t n = 1; n <= 8; ++n) {
        PermSet filtered;
        for (const auto& pi : all_permutations(n))
            if (!brute::sum_decomposable(pi) && is_path(inversion_graph(pi))) filtered.insert(pi);
        if (filtered != increasing_oscillations(n))
            return fail("length " + std::to_string(n) + ": filter gives " + perm_list(filtered));
    }
    return pass("increasing oscillations equal the path-graph filter of S_n for n = 1..8");
}

CheckOutcome anti_hasse(const SuiteConfig&) {
    for (std::size_t n = 3; n <= 7; ++n)
        for (const auto& a : increasing_oscillations(n))
            for (const auto& b : increasing_oscillations(n + 1))
                if (!contains(a, b)) return fail(a.compact() + " not in " + b.compact());
    return pass("every oscillation of length n lies in both of length n+1, n = 3..7");
}

CheckOutcome anti_width(const SuiteConfig&) {
    std::vector<Permutation> osc;
    for (std::size_t n = 3; n <= 8; ++n)
        for (const auto& p : increasing_oscillations(n)) osc.push_back(p);
    auto related = [](const Permutation& a, const Permutation& b) { return contains(a, b) || contains(b, a); };
    for (std::size_t i = 0; i < osc.size(); ++i)
        for (std::size_t j = i + 1; j < osc.size(); ++j)
            for (std::size_t k = j + 1; k < osc.size(); ++k)
                if (!related(osc[i], osc[j]) && !related(osc[i], osc[k]) && !related(osc[j], osc[k]))
                    return fail("antichain of size 3 among oscillations");
    const auto L = FinitePoset::two_antichain();
    for (std::size_t k = 1; k <= 5; ++k) {
        std::vector<LabeledPermutation> members;
        for (std::size_t j = 1; j <= k; ++j) members.push_back(labeled_antichain_member(j));
        if (!verify_antichain(members, [&](const auto& a, const auto& b) { return labeled_contains(a, b, L); }))
            return fail("labeled oscillations 1.." + std::to_string(k) + " are not an antichain");
    }
    return pass("no 3-antichain among oscillations of length 3..8; labeled members 1..5 form an antichain");
}

CheckOutcome anti_anchors(const SuiteConfig&) {
    const PermClass oi(perms({"321", "2341", "3412", "4123"}));
    std::size_t checked = 0;
    for (auto f : {AntichainFamily::amr_oscillation, AntichainFamily::amr_tarjan}) {
        for (std::size_t k = 1; member_length(f, k) <= 18; ++k) {
            const auto pi = antichain_member(f, k);
            std::vector<std::size_t> keep;
            const auto anchors = anchor_positions(f, k);
            for (std::size_t i = 1; i <= pi.size(); ++i)
                if (std::find(anchors.begin(), anchors.end(), i) == anchors.end()) keep.push_back(i - 1);
            const auto body = pattern_at(pi, keep);
            if (!member(body, oi)) return fail(std::string(family_name(f)) + " member " + pi.compact() + " body leaves O_I");
            ++checked;
        }
    }
    return pass(std::to_string(checked) + " members of length <= 18");
}

CheckOutcome anti_figures(const SuiteConfig&) {
    const std::pair<AntichainFamily, const char*> anchors[] = {
        {AntichainFamily::amr_oscillation, "4 1 2 6 3 8 5 10 7 12 9 14 11 15 16 13"},
        {AntichainFamily::amr_tarjan, "2 15 4 1 6 3 8 5 10 7 12 9 14 11 16 13"},
        {AntichainFamily::widdershins, "15 1 13 2 11 4 9 6 10 8 12 7 14 5 16 3"},
        {AntichainFamily::labeled_path, "3 1 5 2 7 4 9 6 11 8 13 10 15 12 16 14"},
    };
    for (const auto& [f, text] : anchors) {
        const auto k = index_for_length(f, 16);
        if (!k || antichain_member(f, *k).str() != text) return fail(std::string(family_name(f)) + " length-16 member differs");
    }
    const auto lp = labeled_antichain_member(*index_for_length(AntichainFamily::labeled_path, 16));
    for (std::size_t i = 0; i < lp.labels.size(); ++i)
        if ((lp.labels[i] == kFilled) != (i + 1 == 2 || i + 1 == 15)) return fail("labeled-path endpoints differ");
    return pass("length-16 instances of all four families reproduced exactly");
}

CheckOutcome anti_families(const SuiteConfig&) {
    std::string detail;
    bool ok = true;
    auto leq = [](const Permutation& a, const Permutation& b) { return contains(a, b); };
    for (auto f : {AntichainFamily::amr_oscillation, AntichainFamily::amr_tarjan, AntichainFamily::widdershins}) {
        std::vector<Permutation> members;
        for (std::size_t k = 1; k <= 6; ++k) members.push_back(antichain_member(f, k));
        const auto v = antichain_violation(members, leq);
        detail += std::string(family_name(f)) + ": ";
        if (v) {
            ok = false;
            detail += "member " + std::to_string(v->first) + " <= member " + std::to_string(v->second) + "; ";
        } else {
            detail += "members 1..6 pairwise incomparable; ";
        }
    }
    const auto L = FinitePoset::two_antichain();
    std::vector<LabeledPermutation> lp;
    for (std::size_t k = 1; k <= 6; ++k) lp.push_back(labeled_antichain_member(k));
    if (verify_antichain(lp, [&](const auto& a, const auto& b) { return labeled_contains(a, b, L); })) {
        detail += "labeled-path: members 1..6 pairwise incomparable";
    } else {
        ok = false;
        detail += "labeled-path: comparable members";
    }
    return {ok, detail};
}

CheckOutcome anti_labeled_widdershins(const SuiteConfig&) {
    const auto L = FinitePoset::two_antichain();
    std::vector<LabeledPermutation> members;
    for (std::size_t k = 1; k <= 6; ++k) members.push_back(labeled_widdershins_member(k));
    if (auto v = antichain_violation(members, [&](const auto& a, const auto& b) { return labeled_contains(a, b, L); }))
        return fail("labeled spirals " + std::to_string(v->first) + " and " + std::to_string(v->second) + " comparable");
    for (std::size_t k = 1; k < 6; ++k)
        if (!contains(members[k - 1].perm, members[k].perm))
            return fail("unlabeled spiral " + std::to_string(k) + " not contained in spiral " + std::to_string(k + 1));
    return pass("unlabeled spirals 1..6 form a chain; with the two end points hollow they form an antichain");
}

}  // namespace

const std::vector<SuiteCheck>& suite_checks() {
    static const std::vector<SuiteCheck> checks = {
        {"core.contains-naive", "containment agrees with subset enumeration", core_contains_naive},
        {"core.symmetry-order", "inverse and rc are involutions, rc-inverse has order 4", core_symmetry},
        {"core.components-fold", "components fold back and are indecomposable", core_components},
        {"core.simple-intervals", "intervals agree with brute force; simple iff none", core_simple},
        {"core.tree-roundtrip", "decomposition trees evaluate back and are maximal", core_tree},
        {"core.inflate-contains", "inflations contain the skeleton and every block", core_inflate},
        {"labels.degenerate", "one-label containment equals plain containment", labels_degenerate},
        {"labels.subword-brute", "subword order agrees with brute force", labels_subword},
        {"labels.last-entry-reflects", "last-entry encoding reflects containment", labels_last_entry},
        {"labels.compass-reflects", "compass encoding reflects labeled containment", labels_compass},
        {"labels.strip-zero-preserves", "zero-label deletion preserves containment", labels_strip_zero},
        {"labels.compass-injective", "compass decode inverts encode", labels_compass_injective},
        {"graph.symmetry-isomorphic", "symmetric permutations have isomorphic graphs", graph_symmetry},
        {"graph.containment-preserved", "containment implies induced subgraph", graph_preservation},
        {"graph.no-long-cycles", "no inversion graph has an induced C5..C8", graph_no_long_cycles},
        {"graph.class-correspondences", "graph properties match avoidance classes", graph_correspondences},
        {"graph.gallai", "prime inversion graphs have exactly the symmetric preimages", graph_gallai},
        {"graph.labeled-gallai", "labeled preimages are symmetry images", graph_labeled_gallai},
        {"class.member-brute", "membership agrees with naive avoidance", class_member},
        {"class.plus-one-basis", "one-point extension bases are minimal antichains", class_plus_one},
        {"class.substitution-two-ways", "substitution closure via patterns equals via trees", class_substitution},
        {"class.separable-contains-sums", "separable closure contains sum and skew closures", class_separable},
        {"class.separable-bottom-up", "Av(2413, 3142) equals sums and skew sums of 1", class_separable_bottom_up},
        {"class.union-basis", "union bases describe the union", class_union},
        {"grid.geom-within-grid", "Geom(M) is contained in Grid(M)", grid_geom_within_grid},
        {"grid.forest-criterion", "Grid = Geom exactly for forest cell graphs", grid_forest},
        {"grid.stankova", "Grid(X) = Av(2143, 3412)", grid_stankova},
        {"grid.witnesses-valid", "griddings and drawings revalidate", grid_witnesses},
        {"grid.guard-invariance", "geometric verdicts do not depend on the cap", grid_guard_invariance},
        {"anti.path-characterisation", "oscillations are the path inversion graphs", anti_paths},
        {"anti.hasse", "oscillations of length n lie in those of length n+1", anti_hasse},
        {"anti.oscillation-width", "oscillations have width 2, labeled ones do not", anti_width},
        {"anti.anchor-bodies", "amr members minus anchors lie in O_I", anti_anchors},
        {"anti.figure-instances", "length-16 family instances match the figures", anti_figures},
        {"anti.families-antichain", "all four families are antichains on members 1..6", anti_families},
        {"anti.labeled-widdershins", "end-labeled widdershins spirals form an antichain", anti_labeled_widdershins},
    };
    return checks;
}

std::vector<CheckResult> run_suite(const SuiteConfig& config, const std::function<void(const CheckResult&)>& report) {
    const auto& checks = suite_checks();
    std::vector<std::size_t> selected;
    for (std::size_t i = 0; i < checks.size(); ++i)
        if (config.only.empty() || config.only.count(checks[i].name)) selected.push_back(i);

    std::vector<CheckResult> results(selected.size());
    std::vector<char> done(selected.size(), 0);
    std::mutex mu;
    std::size_t reported = 0;
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t slot; (slot = next++) < selected.size();) {
            const auto& check = checks[selected[slot]];
            CheckResult r{selected[slot] + 1, check.name, false, {}, 0};
            const auto start = std::chrono::steady_clock::now();
            try {
                auto outcome = check.run(config);
                r.passed = outcome.passed;
                r.detail = std::move(outcome.detail);
            } catch (const std::exception& e) {
                r.detail = std::string("exception: ") + e.what();
            }
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            std::lock_guard lock(mu);
            results[slot] = std::move(r);
            done[slot] = 1;
            while (reported < selected.size() && done[reported]) {
                if (report) report(results[reported]);
                ++reported;
            }
        }
    };
    const std::size_t jobs = std::max<std::size_t>(1, std::min(config.jobs, selected.size()));
    std::vector<std::thread> pool;
    for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return results;
}

}  // namespace permwqo
