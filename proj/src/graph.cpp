#include "permwqo/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "permwqo/errors.hpp"

namespace permwqo {

Graph::Graph(std::size_t n) : adj_(n, 0) {
    if (n > max_vertices) throw InvalidInput("graph: at most 64 vertices supported");
}

Graph::Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

Graph Graph::path(std::size_t n) {
    Graph g(n);
    for (std::size_t v = 2; v <= n; ++v) g.add_edge(v - 1, v);
    return g;
}

Graph Graph::cycle(std::size_t n) {
    if (n < 3) throw InvalidInput("cycle: need at least 3 vertices");
    Graph g = path(n);
    g.add_edge(n, 1);
    return g;
}

Graph Graph::complete(std::size_t n) {
    Graph g(n);
    for (std::size_t u = 1; u <= n; ++u)
        for (std::size_t v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (auto m : adj_) total += static_cast<std::size_t>(std::popcount(m));
    return total / 2;
}

std::size_t Graph::degree(std::size_t v) const { return static_cast<std::size_t>(std::popcount(adj_.at(v))); }

void Graph::add_edge(std::size_t u, std::size_t v) {
    if (u < 1 || v < 1 || u > size() || v > size()) throw InvalidInput("graph: vertex out of range");
    if (u == v) throw InvalidInput("graph: loops are not allowed");
    adj_[u - 1] |= std::uint64_t{1} << (v - 1);
    adj_[v - 1] |= std::uint64_t{1} << (u - 1);
}

bool Graph::adjacent(std::size_t u, std::size_t v) const { return (adj_.at(u - 1) >> (v - 1)) & 1U; }

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < size(); ++u)
        for (std::size_t v = u + 1; v < size(); ++v)
            if ((adj_[u] >> v) & 1U) out.emplace_back(u + 1, v + 1);
    return out;
}

void Graph::set_labels(std::vector<std::size_t> labels) {
    if (labels.size() != size()) throw InvalidInput("graph: one label per vertex required");
    labels_ = std::move(labels);
}

Graph inversion_graph(const Permutation& pi) {
    Graph g(pi.size());
    for (std::size_t i = 0; i < pi.size(); ++i)
        for (std::size_t j = i + 1; j < pi.size(); ++j)
            if (pi[i] > pi[j]) g.add_edge(i + 1, j + 1);
    return g;
}

Graph inversion_graph(const Permutation& pi, const std::vector<std::size_t>& labels) {
    Graph g = inversion_graph(pi);
    g.set_labels(labels);
    return g;
}

namespace {

/// Backtracking search for vertex maps from h into g that preserve adjacency and
/// non-adjacency. With `bijective`, sizes match and degrees must agree exactly.
/// `label_ok(hv, gv)` filters candidate pairs. `visit` returns false to stop.
template <class LabelOk, class Visit>
void search_maps(const Graph& h, const Graph& g, bool bijective, LabelOk&& label_ok, Visit&& visit) {
    const std::size_t k = h.size();
    const std::size_t n = g.size();
    if (k > n || (bijective && k != n)) return;
    if (k == 0) {
        visit(std::vector<std::size_t>{});
        return;
    }

    // Place high-degree vertices first; each later vertex is checked against all
    // earlier ones, so order only affects speed.
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return h.degree(a) > h.degree(b); });

    std::vector<std::size_t> image(k);
    std::uint64_t used = 0;
    bool stop = false;

    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (stop) return;
        if (depth == k) {
            std::vector<std::size_t> out(k);
            for (std::size_t v = 0; v < k; ++v) out[v] = image[v] + 1;
            if (!visit(out)) stop = true;
            return;
        }
        const std::size_t hv = order[depth];
        const std::size_t hdeg = h.degree(hv);
        for (std::size_t gv = 0; gv < n && !stop; ++gv) {
            if ((used >> gv) & 1U) continue;
            const std::size_t gdeg = g.degree(gv);
            if (bijective ? gdeg != hdeg : gdeg < hdeg) continue;
            if (!label_ok(hv, gv)) continue;
            bool consistent = true;
            for (std::size_t d = 0; d < depth; ++d) {
                const std::size_t hu = order[d];
                const bool he = (h.neighbours(hv) >> hu) & 1U;
                const bool ge = (g.neighbours(gv) >> image[hu]) & 1U;
                if (he != ge) {
                    consistent = false;
                    break;
                }
            }
            if (!consistent) continue;
            image[hv] = gv;
            used |= std::uint64_t{1} << gv;
            self(self, depth + 1);
            used &= ~(std::uint64_t{1} << gv);
        }
    };
    rec(rec, 0);
}

std::vector<std::size_t> sorted_degrees(const Graph& g) {
    std::vector<std::size_t> d(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

bool both_labeled(const Graph& a, const Graph& b) { return a.labeled() && b.labeled(); }

}  // namespace

std::optional<std::vector<std::size_t>> induced_embedding(const Graph& h, const Graph& g, const FinitePoset* poset) {
    const bool use_labels = both_labeled(h, g);
    if (use_labels && poset == nullptr) throw InvalidInput("induced_embeds: labeled graphs need a poset");
    std::optional<std::vector<std::size_t>> found;
    search_maps(
        h, g, false,
        [&](std::size_t hv, std::size_t gv) {
            return !use_labels || poset->leq((*h.labels())[hv], (*g.labels())[gv]);
        },
        [&](const std::vector<std::size_t>& m) {
            found = m;
            return false;
        });
    return found;
}

bool induced_embeds(const Graph& h, const Graph& g, const FinitePoset* poset) {
    return induced_embedding(h, g, poset).has_value();
}

std::optional<std::vector<std::size_t>> isomorphism(const Graph& g, const Graph& h) {
    if (g.size() != h.size() || g.edge_count() != h.edge_count()) return std::nullopt;
    if (sorted_degrees(g) != sorted_degrees(h)) return std::nullopt;
    const bool use_labels = both_labeled(g, h);
    if (use_labels) {
        auto a = *g.labels(), b = *h.labels();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }
    std::optional<std::vector<std::size_t>> found;
    search_maps(
        g, h, true,
        [&](std::size_t gv, std::size_t hv) { return !use_labels || (*g.labels())[gv] == (*h.labels())[hv]; },
        [&](const std::vector<std::size_t>& m) {
            found = m;
            return false;
        });
    return found;
}

bool is_isomorphic(const Graph& g, const Graph& h) { return isomorphism(g, h).has_value(); }

bool is_connected(const Graph& g) {
    if (g.size() == 0) return true;
    const std::uint64_t all = g.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.size()) - 1;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::size_t v = 0; v < g.size(); ++v)
            if ((frontier >> v) & 1U) next |= g.neighbours(v);
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == all;
}

namespace {

std::size_t component_count(const Graph& g) {
    std::vector<int> comp(g.size(), -1);
    std::size_t count = 0;
    for (std::size_t s = 0; s < g.size(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = static_cast<int>(count);
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (std::size_t w = 0; w < g.size(); ++w)
                if (((g.neighbours(v) >> w) & 1U) && comp[w] < 0) {
                    comp[w] = static_cast<int>(count);
                    stack.push_back(w);
                }
        }
        ++count;
    }
    return count;
}

std::size_t max_degree(const Graph& g) {
    std::size_t m = 0;
    for (std::size_t v = 0; v < g.size(); ++v) m = std::max(m, g.degree(v));
    return m;
}

}  // namespace

bool is_bipartite(const Graph& g) {
    std::vector<int> colour(g.size(), -1);
    for (std::size_t s = 0; s < g.size(); ++s) {
        if (colour[s] >= 0) continue;
        colour[s] = 0;
        std::vector<std::size_t> stack{s};
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (std::size_t w = 0; w < g.size(); ++w) {
                if (!((g.neighbours(v) >> w) & 1U)) continue;
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[v];
                    stack.push_back(w);
                } else if (colour[w] == colour[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_forest(const Graph& g) { return g.edge_count() + component_count(g) == g.size(); }

bool is_linear_forest(const Graph& g) { return is_forest(g) && max_degree(g) <= 2; }

bool is_path(const Graph& g) { return g.size() >= 1 && is_connected(g) && is_linear_forest(g); }

bool is_cycle(const Graph& g) {
    if (g.size() < 3 || !is_connected(g)) return false;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

bool is_cograph(const Graph& g) {
    Graph plain = g;
    plain.clear_labels();
    return !induced_embeds(Graph::path(4), plain);
}

std::uint64_t module_closure(const Graph& g, std::size_t u, std::size_t v) {
    std::uint64_t module = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t w = 0; w < g.size(); ++w) {
            if ((module >> w) & 1U) continue;
            const std::uint64_t seen = g.neighbours(w) & module;
            if (seen != 0 && seen != module) {
                module |= std::uint64_t{1} << w;
                grew = true;
            }
        }
    }
    return module;
}

bool is_prime(const Graph& g) {
    // Any module with at least two vertices contains the closure of each of its pairs,
    // so a proper nontrivial module exists iff some pair closure is proper.
    const std::size_t n = g.size();
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (static_cast<std::size_t>(std::popcount(module_closure(g, u, v))) < n) return false;
    return true;
}

GraphClassification classify(const Graph& g) {
    GraphClassification c;
    c.is_path = is_path(g);
    c.is_cycle = is_cycle(g);
    c.is_linear_forest = is_linear_forest(g);
    c.is_forest = is_forest(g);
    c.is_bipartite = is_bipartite(g);
    c.is_connected = is_connected(g);
    c.is_cograph = is_cograph(g);
    c.is_prime = is_prime(g);
    return c;
}

std::vector<std::vector<std::size_t>> automorphisms(const Graph& g, std::size_t max_n) {
    check_guard("automorphisms", g.size(), max_n);
    std::vector<std::vector<std::size_t>> out;
    const bool use_labels = g.labeled();
    search_maps(
        g, g, true,
        [&](std::size_t a, std::size_t b) { return !use_labels || (*g.labels())[a] == (*g.labels())[b]; },
        [&](const std::vector<std::size_t>& m) {
            out.push_back(m);
            return true;
        });
    std::sort(out.begin(), out.end());
    return out;
}

PermSet preimages(const Graph& g, std::size_t n, std::size_t max_n) {
    check_guard("preimages", n, max_n);
    PermSet out;
    if (g.size() != n) return out;
    Graph plain = g;
    plain.clear_labels();
    const std::size_t edges = plain.edge_count();
    for_each_permutation(n, [&](const Permutation& p) {
        if (inversions(p) == edges && is_isomorphic(inversion_graph(p), plain)) out.insert(p);
        return true;
    });
    return out;
}

std::string to_dot(const Graph& g, const FinitePoset* poset, const std::vector<std::string>& vertex_names) {
    std::ostringstream out;
    out << "graph G {\n";
    for (std::size_t v = 1; v <= g.size(); ++v) {
        out << "  " << v;
        std::string label = v <= vertex_names.size() ? vertex_names[v - 1] : std::to_string(v);
        if (g.labeled()) {
            const auto l = (*g.labels())[v - 1];
            label += ":" + (poset != nullptr && poset->contains_element(l) ? poset->name(l) : std::to_string(l));
        }
        out << " [label=\"" << label << "\"];\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_adjacency_json(const Graph& g) {
    nlohmann::json adjacency = nlohmann::json::array();
    for (std::size_t v = 1; v <= g.size(); ++v) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t w = 1; w <= g.size(); ++w)
            if (g.adjacent(v, w)) row.push_back(w);
        adjacency.push_back(row);
    }
    return nlohmann::json{{"n", g.size()}, {"adjacency", adjacency}}.dump();
}

}  // namespace permwqo
