#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permwqo/permutation.hpp"
#include "permwqo/poset.hpp"

namespace permwqo {

/// Simple undirected graph on vertices 1..n (n <= 64), with optional vertex
/// labels that index a FinitePoset.
class Graph {
public:
    static constexpr std::size_t max_vertices = 64;

    Graph() = default;
    explicit Graph(std::size_t n);
    Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

    static Graph path(std::size_t n);
    static Graph cycle(std::size_t n);
    static Graph complete(std::size_t n);

    std::size_t size() const noexcept { return adj_.size(); }
    std::size_t edge_count() const;
    /// Degree of 0-based vertex v.
    std::size_t degree(std::size_t v) const;

    /// 1-based vertices.
    void add_edge(std::size_t u, std::size_t v);
    bool adjacent(std::size_t u, std::size_t v) const;

    /// Neighbourhood of 0-based vertex v as a bitmask of 0-based vertices.
    std::uint64_t neighbours(std::size_t v) const { return adj_[v]; }

    /// Sorted pairs (u, v), u < v, 1-based.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    bool labeled() const noexcept { return labels_.has_value(); }
    const std::optional<std::vector<std::size_t>>& labels() const noexcept { return labels_; }
    void set_labels(std::vector<std::size_t> labels);
    void clear_labels() { labels_.reset(); }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::uint64_t> adj_;
    std::optional<std::vector<std::size_t>> labels_;
};

/// Vertices are positions 1..n; {i, j} is an edge when i < j and pi(i) > pi(j).
Graph inversion_graph(const Permutation& pi);

/// Inversion graph carrying the permutation's labels.
Graph inversion_graph(const Permutation& pi, const std::vector<std::size_t>& labels);

/// Vertex map (1-based images of h's vertices) embedding h as an induced subgraph
/// of g. When both graphs are labeled, label(h, v) <= label(g, map(v)) in `poset`
/// is required (poset must then be given).
std::optional<std::vector<std::size_t>> induced_embedding(const Graph& h, const Graph& g,
                                                          const FinitePoset* poset = nullptr);
bool induced_embeds(const Graph& h, const Graph& g, const FinitePoset* poset = nullptr);

/// Isomorphism respecting label identity when both graphs are labeled.
std::optional<std::vector<std::size_t>> isomorphism(const Graph& g, const Graph& h);
bool is_isomorphic(const Graph& g, const Graph& h);

struct GraphClassification {
    bool is_path = false;
    bool is_cycle = false;
    bool is_linear_forest = false;
    bool is_forest = false;
    bool is_bipartite = false;
    bool is_connected = false;
    bool is_cograph = false;
    bool is_prime = false;
};

GraphClassification classify(const Graph& g);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_forest(const Graph& g);
bool is_linear_forest(const Graph& g);
bool is_path(const Graph& g);
bool is_cycle(const Graph& g);
bool is_cograph(const Graph& g);
/// No module X with 1 < |X| < n.
bool is_prime(const Graph& g);

/// Smallest module containing both 0-based vertices, as a bitmask.
std::uint64_t module_closure(const Graph& g, std::size_t u, std::size_t v);

inline constexpr std::size_t kDefaultAutomorphismCap = 10;

/// Every automorphism as a 1-based image list.
std::vector<std::vector<std::size_t>> automorphisms(const Graph& g,
                                                    std::size_t max_n = kDefaultAutomorphismCap);

inline constexpr std::size_t kDefaultPreimageCap = 8;

/// All permutations of length n whose inversion graph is isomorphic to g.
PermSet preimages(const Graph& g, std::size_t n, std::size_t max_n = kDefaultPreimageCap);

/// DOT text; vertex labels are written through `poset` names when available.
std::string to_dot(const Graph& g, const FinitePoset* poset = nullptr,
                   const std::vector<std::string>& vertex_names = {});

/// {"n": n, "adjacency": [[...], ...]} with 1-based neighbour lists.
std::string to_adjacency_json(const Graph& g);

}  // namespace permwqo
