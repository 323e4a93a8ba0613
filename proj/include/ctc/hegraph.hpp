#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ctc {

enum class ElementKind { vertex, edge, half_edge };

std::string_view to_string(ElementKind kind);

struct Edge {
    std::string label;
    int u;
    int v;
};

struct HalfEdge {
    std::string label;
    int v;
};

/// Simple graph whose edges may be "half-edges" with a single end vertex.
/// Every vertex, edge and half-edge carries a label; labels are unique across
/// all three kinds. Loops and parallel edges are rejected on insertion.
class HalfEdgeGraph {
public:
    int add_vertex(std::string label);
    int add_edge(std::string label, std::string_view u, std::string_view v);
    int add_half_edge(std::string label, std::string_view v);

    const std::vector<std::string> & vertices() const { return vertices_; }
    const std::vector<Edge> & edges() const { return edges_; }
    const std::vector<HalfEdge> & half_edges() const { return half_edges_; }

    std::size_t element_count() const { return vertices_.size() + edges_.size() + half_edges_.size(); }

    std::optional<std::pair<ElementKind, int>> find(std::string_view label) const;
    std::optional<int> vertex_index(std::string_view label) const;
    bool has_edge_between(int u, int v) const;

    /// Number of edges plus half-edges at `v`.
    int degree(int v) const;
    /// Number of full edges at `v`.
    int edge_degree(int v) const;

    /// Equality up to element order: same labels, same incidences.
    friend bool operator==(const HalfEdgeGraph & a, const HalfEdgeGraph & b);

private:
    int require_vertex(std::string_view label) const;
    void claim_label(const std::string & label, ElementKind kind, int index);

    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<HalfEdge> half_edges_;
    std::map<std::string, std::pair<ElementKind, int>, std::less<>> labels_;
    std::set<std::pair<int, int>> edge_pairs_;
    std::vector<int> degree_;
    std::vector<int> edge_degree_;
};

/// Replaces the half-edges `h1` and `h2` by a single edge `new_edge_label`
/// joining their end vertices.
HalfEdgeGraph join_half_edges(const HalfEdgeGraph & g, std::string_view h1, std::string_view h2,
                              std::string new_edge_label);

/// Disjoint union; every label of `gs[i]` is prefixed with `prefixes[i]`.
HalfEdgeGraph disjoint_union(std::span<const HalfEdgeGraph> gs, std::span<const std::string> prefixes);

/// Renames elements; labels absent from `renames` keep their name.
HalfEdgeGraph relabel(const HalfEdgeGraph & g, const std::map<std::string, std::string> & renames);

/// Copy of `g` without the listed half-edges.
HalfEdgeGraph remove_half_edges(const HalfEdgeGraph & g, const std::set<std::string> & labels);

/// Copy of `g` without the listed full edges.
HalfEdgeGraph remove_edges(const HalfEdgeGraph & g, const std::set<std::string> & labels);

struct DegreeReport {
    int max_degree_with_half_edges = 0;
    int max_degree_edges_only = 0;
};

DegreeReport degree_report(const HalfEdgeGraph & g);

struct BipartiteResult {
    bool bipartite = false;
    /// Vertex labels on each side (when bipartite).
    std::vector<std::string> side_a, side_b;
    /// Closed walk v0 v1 ... v_{2m} = v0 of odd length (when not bipartite).
    std::vector<std::string> odd_cycle;
};

/// Two-colourability of the underlying simple graph; half-edges are ignored.
BipartiteResult is_bipartite(const HalfEdgeGraph & g);

struct ElementRef {
    ElementKind kind;
    std::string label;
};

/// The total graph T(G): one node per vertex, edge and half-edge of G; two
/// nodes are adjacent when the elements are adjacent or incident. Proper
/// circular colourings of this graph are exactly the circular total
/// colourings of G.
class TotalConflictGraph {
public:
    TotalConflictGraph() = default;
    /// Arbitrary conflict graph; `pairs` are undirected element index pairs.
    TotalConflictGraph(std::vector<ElementRef> elements, const std::vector<std::pair<int, int>> & pairs);

    std::size_t size() const { return elements_.size(); }
    const std::vector<ElementRef> & elements() const { return elements_; }
    const ElementRef & element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
    const std::vector<int> & neighbours(int i) const { return adjacency_[static_cast<std::size_t>(i)]; }
    bool adjacent(int a, int b) const;
    std::optional<int> index_of(std::string_view label) const;
    std::size_t edge_count() const;

private:
    std::vector<ElementRef> elements_;
    std::vector<std::vector<int>> adjacency_;
    std::map<std::string, int, std::less<>> index_;
};

/// Elements are ordered by label.
TotalConflictGraph total_conflict_graph(const HalfEdgeGraph & g);

/// "heg 1" text format.
std::string serialize(const HalfEdgeGraph & g);
HalfEdgeGraph parse_heg(std::string_view text);
HalfEdgeGraph read_heg_file(const std::string & path);
void write_heg_file(const std::string & path, const HalfEdgeGraph & g);

/// Canonical form of the underlying simple graph (half-edges counted per
/// vertex, labels discarded). Individualisation-refinement without automorphism
/// pruning, so only meant for small graphs.
std::string canonical_form(const HalfEdgeGraph & g);
bool isomorphic(const HalfEdgeGraph & a, const HalfEdgeGraph & b);

} // namespace ctc
