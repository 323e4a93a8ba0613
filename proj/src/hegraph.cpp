#include <ctc/error.hpp>
#include <ctc/hegraph.hpp>

#include <algorithm>
#include <cctype>
#include <deque>
#include <tuple>

namespace ctc {

std::string_view to_string(ElementKind kind)
{
    switch (kind) {
    case ElementKind::vertex:
        return "vertex";
    case ElementKind::edge:
        return "edge";
    case ElementKind::half_edge:
        return "half";
    }
    return "?";
}

void HalfEdgeGraph::claim_label(const std::string & label, ElementKind kind, int index)
{
    if (label.empty())
        throw Error("empty label");
    if (std::any_of(label.begin(), label.end(), [](unsigned char ch) { return std::isspace(ch); }))
        throw Error("label contains whitespace: '" + label + "'");
    if (!labels_.emplace(label, std::pair{kind, index}).second)
        throw Error("duplicate label '" + label + "'");
}

int HalfEdgeGraph::require_vertex(std::string_view label) const
{
    auto v = vertex_index(label);
    if (!v)
        throw Error("dangling endpoint: no vertex '" + std::string(label) + "'");
    return *v;
}

int HalfEdgeGraph::add_vertex(std::string label)
{
    const int index = static_cast<int>(vertices_.size());
    claim_label(label, ElementKind::vertex, index);
    vertices_.push_back(std::move(label));
    degree_.push_back(0);
    edge_degree_.push_back(0);
    return index;
}

int HalfEdgeGraph::add_edge(std::string label, std::string_view u, std::string_view v)
{
    const int a = require_vertex(u), b = require_vertex(v);
    if (a == b)
        throw Error("edge '" + label + "' would be a loop at '" + std::string(u) + "'");
    if (has_edge_between(a, b))
        throw Error("edge '" + label + "' would be parallel to an existing edge " + std::string(u) + "-" +
                    std::string(v));
    const int index = static_cast<int>(edges_.size());
    claim_label(label, ElementKind::edge, index);
    edges_.push_back({std::move(label), a, b});
    edge_pairs_.emplace(std::min(a, b), std::max(a, b));
    for (int w : {a, b}) {
        ++degree_[static_cast<std::size_t>(w)];
        ++edge_degree_[static_cast<std::size_t>(w)];
    }
    return index;
}

int HalfEdgeGraph::add_half_edge(std::string label, std::string_view v)
{
    const int a = require_vertex(v);
    const int index = static_cast<int>(half_edges_.size());
    claim_label(label, ElementKind::half_edge, index);
    half_edges_.push_back({std::move(label), a});
    ++degree_[static_cast<std::size_t>(a)];
    return index;
}

std::optional<std::pair<ElementKind, int>> HalfEdgeGraph::find(std::string_view label) const
{
    auto it = labels_.find(label);
    if (it == labels_.end())
        return std::nullopt;
    return it->second;
}

std::optional<int> HalfEdgeGraph::vertex_index(std::string_view label) const
{
    auto e = find(label);
    if (!e || e->first != ElementKind::vertex)
        return std::nullopt;
    return e->second;
}

bool HalfEdgeGraph::has_edge_between(int u, int v) const
{
    return edge_pairs_.contains({std::min(u, v), std::max(u, v)});
}

int HalfEdgeGraph::degree(int v) const { return degree_.at(static_cast<std::size_t>(v)); }
int HalfEdgeGraph::edge_degree(int v) const { return edge_degree_.at(static_cast<std::size_t>(v)); }

bool operator==(const HalfEdgeGraph & a, const HalfEdgeGraph & b)
{
    auto key = [](const HalfEdgeGraph & g) {
        std::set<std::string> vs(g.vertices_.begin(), g.vertices_.end());
        std::set<std::tuple<std::string, std::string, std::string>> es;
        for (const auto & e : g.edges_) {
            auto x = g.vertices_[static_cast<std::size_t>(e.u)], y = g.vertices_[static_cast<std::size_t>(e.v)];
            if (y < x)
                std::swap(x, y);
            es.emplace(e.label, x, y);
        }
        std::set<std::pair<std::string, std::string>> hs;
        for (const auto & h : g.half_edges_)
            hs.emplace(h.label, g.vertices_[static_cast<std::size_t>(h.v)]);
        return std::tuple{vs, es, hs};
    };
    return key(a) == key(b);
}

namespace {

    const std::string & vlabel(const HalfEdgeGraph & g, int v) { return g.vertices()[static_cast<std::size_t>(v)]; }

    // Rebuilds g, skipping the listed edges/half-edges and renaming labels.
    HalfEdgeGraph rebuild(const HalfEdgeGraph & g, const std::set<std::string> & drop_edges,
                          const std::set<std::string> & drop_half, const std::map<std::string, std::string> & renames)
    {
        auto name = [&](const std::string & l) {
            auto it = renames.find(l);
            return it == renames.end() ? l : it->second;
        };
        HalfEdgeGraph out;
        for (const auto & v : g.vertices())
            out.add_vertex(name(v));
        for (const auto & e : g.edges())
            if (!drop_edges.contains(e.label))
                out.add_edge(name(e.label), name(vlabel(g, e.u)), name(vlabel(g, e.v)));
        for (const auto & h : g.half_edges())
            if (!drop_half.contains(h.label))
                out.add_half_edge(name(h.label), name(vlabel(g, h.v)));
        return out;
    }

} // namespace

HalfEdgeGraph join_half_edges(const HalfEdgeGraph & g, std::string_view h1, std::string_view h2,
                              std::string new_edge_label)
{
    auto a = g.find(h1), b = g.find(h2);
    if (!a || a->first != ElementKind::half_edge)
        throw Error("join: no half-edge '" + std::string(h1) + "'");
    if (!b || b->first != ElementKind::half_edge)
        throw Error("join: no half-edge '" + std::string(h2) + "'");
    if (h1 == h2)
        throw Error("join: cannot join half-edge '" + std::string(h1) + "' with itself");
    const int u = g.half_edges()[static_cast<std::size_t>(a->second)].v;
    const int v = g.half_edges()[static_cast<std::size_t>(b->second)].v;
    if (u == v)
        throw Error("join: half-edges share end vertex '" + vlabel(g, u) + "' (loop)");
    if (g.has_edge_between(u, v))
        throw Error("join: '" + vlabel(g, u) + "' and '" + vlabel(g, v) + "' are already adjacent (parallel edge)");

    auto out = rebuild(g, {}, {std::string(h1), std::string(h2)}, {});
    out.add_edge(std::move(new_edge_label), vlabel(g, u), vlabel(g, v));
    return out;
}

HalfEdgeGraph disjoint_union(std::span<const HalfEdgeGraph> gs, std::span<const std::string> prefixes)
{
    if (gs.size() != prefixes.size())
        throw Error("disjoint_union: need one prefix per graph");
    if (std::set<std::string>(prefixes.begin(), prefixes.end()).size() != prefixes.size())
        throw Error("disjoint_union: prefixes must be distinct");

    HalfEdgeGraph out;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const auto & g = gs[i];
        const auto & pre = prefixes[i];
        for (const auto & v : g.vertices())
            out.add_vertex(pre + v);
        for (const auto & e : g.edges())
            out.add_edge(pre + e.label, pre + vlabel(g, e.u), pre + vlabel(g, e.v));
        for (const auto & h : g.half_edges())
            out.add_half_edge(pre + h.label, pre + vlabel(g, h.v));
    }
    return out;
}

HalfEdgeGraph relabel(const HalfEdgeGraph & g, const std::map<std::string, std::string> & renames)
{
    for (const auto & [from, to] : renames)
        if (!g.find(from))
            throw Error("relabel: unknown label '" + from + "'");
    return rebuild(g, {}, {}, renames);
}

HalfEdgeGraph remove_half_edges(const HalfEdgeGraph & g, const std::set<std::string> & labels)
{
    for (const auto & l : labels) {
        auto e = g.find(l);
        if (!e || e->first != ElementKind::half_edge)
            throw Error("no half-edge '" + l + "'");
    }
    return rebuild(g, {}, labels, {});
}

HalfEdgeGraph remove_edges(const HalfEdgeGraph & g, const std::set<std::string> & labels)
{
    for (const auto & l : labels) {
        auto e = g.find(l);
        if (!e || e->first != ElementKind::edge)
            throw Error("no edge '" + l + "'");
    }
    return rebuild(g, labels, {}, {});
}

DegreeReport degree_report(const HalfEdgeGraph & g)
{
    DegreeReport r;
    for (int v = 0; v < static_cast<int>(g.vertices().size()); ++v) {
        r.max_degree_with_half_edges = std::max(r.max_degree_with_half_edges, g.degree(v));
        r.max_degree_edges_only = std::max(r.max_degree_edges_only, g.edge_degree(v));
    }
    return r;
}

BipartiteResult is_bipartite(const HalfEdgeGraph & g)
{
    const auto n = g.vertices().size();
    std::vector<std::vector<int>> adj(n);
    for (const auto & e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }

    std::vector<int> side(n, -1), parent(n, -1);
    BipartiteResult r;
    for (std::size_t s = 0; s < n; ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::deque<int> queue{static_cast<int>(s)};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int w : adj[static_cast<std::size_t>(v)]) {
                auto & sw = side[static_cast<std::size_t>(w)];
                if (sw == -1) {
                    sw = 1 - side[static_cast<std::size_t>(v)];
                    parent[static_cast<std::size_t>(w)] = v;
                    queue.push_back(w);
                }
                else if (sw == side[static_cast<std::size_t>(v)]) {
                    // Odd cycle: tree paths from v and w up to their common ancestor, plus vw.
                    std::vector<int> pv{v}, pw{w};
                    while (parent[static_cast<std::size_t>(pv.back())] != -1)
                        pv.push_back(parent[static_cast<std::size_t>(pv.back())]);
                    while (parent[static_cast<std::size_t>(pw.back())] != -1)
                        pw.push_back(parent[static_cast<std::size_t>(pw.back())]);
                    while (pv.size() > 1 && pw.size() > 1 && pv[pv.size() - 2] == pw[pw.size() - 2]) {
                        pv.pop_back();
                        pw.pop_back();
                    }
                    for (int x : pv)
                        r.odd_cycle.push_back(vlabel(g, x));
                    for (auto it = pw.rbegin() + 1; it != pw.rend(); ++it)
                        r.odd_cycle.push_back(vlabel(g, *it));
                    r.odd_cycle.push_back(vlabel(g, v));
                    return r;
                }
            }
        }
    }
    r.bipartite = true;
    for (std::size_t v = 0; v < n; ++v)
        (side[v] == 0 ? r.side_a : r.side_b).push_back(g.vertices()[v]);
    return r;
}

TotalConflictGraph::TotalConflictGraph(std::vector<ElementRef> elements, const std::vector<std::pair<int, int>> & pairs)
    : elements_(std::move(elements)), adjacency_(elements_.size())
{
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (!index_.emplace(elements_[i].label, static_cast<int>(i)).second)
            throw Error("duplicate element label '" + elements_[i].label + "'");
    const int n = static_cast<int>(elements_.size());
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw Error("conflict pair out of range");
        if (a == b)
            throw Error("element adjacent to itself: '" + elements_[static_cast<std::size_t>(a)].label + "'");
        adjacency_[static_cast<std::size_t>(a)].push_back(b);
        adjacency_[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto & nb : adjacency_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
}

bool TotalConflictGraph::adjacent(int a, int b) const
{
    const auto & nb = neighbours(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<int> TotalConflictGraph::index_of(std::string_view label) const
{
    auto it = index_.find(label);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t TotalConflictGraph::edge_count() const
{
    std::size_t twice = 0;
    for (const auto & nb : adjacency_)
        twice += nb.size();
    return twice / 2;
}

TotalConflictGraph total_conflict_graph(const HalfEdgeGraph & g)
{
    struct Item {
        ElementRef ref;
        std::vector<int> ends; // end vertices in g
    };
    std::vector<Item> items;
    for (int v = 0; v < static_cast<int>(g.vertices().size()); ++v)
        items.push_back({{ElementKind::vertex, vlabel(g, v)}, {v}});
    for (const auto & e : g.edges())
        items.push_back({{ElementKind::edge, e.label}, {e.u, e.v}});
    for (const auto & h : g.half_edges())
        items.push_back({{ElementKind::half_edge, h.label}, {h.v}});
    std::sort(items.begin(), items.end(), [](const Item & a, const Item & b) { return a.ref.label < b.ref.label; });

    // Per vertex of g: the vertex item itself and the edge-like items at it.
    const auto nv = g.vertices().size();
    std::vector<int> vertex_item(nv, -1);
    std::vector<std::vector<int>> incident(nv);
    for (int i = 0; i < static_cast<int>(items.size()); ++i) {
        const auto & it = items[static_cast<std::size_t>(i)];
        if (it.ref.kind == ElementKind::vertex)
            vertex_item[static_cast<std::size_t>(it.ends[0])] = i;
        else
            for (int v : it.ends)
                incident[static_cast<std::size_t>(v)].push_back(i);
    }

    std::vector<std::pair<int, int>> pairs;
    for (const auto & e : g.edges())
        pairs.emplace_back(vertex_item[static_cast<std::size_t>(e.u)], vertex_item[static_cast<std::size_t>(e.v)]);
    for (std::size_t v = 0; v < nv; ++v) {
        const auto & inc = incident[v];
        for (std::size_t a = 0; a < inc.size(); ++a) {
            pairs.emplace_back(vertex_item[v], inc[a]);
            for (std::size_t b = a + 1; b < inc.size(); ++b)
                pairs.emplace_back(inc[a], inc[b]);
        }
    }

    std::vector<ElementRef> refs;
    refs.reserve(items.size());
    for (auto & it : items)
        refs.push_back(std::move(it.ref));
    return TotalConflictGraph(std::move(refs), pairs);
}

} // namespace ctc
