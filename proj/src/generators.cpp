#include <ctc/error.hpp>
#include <ctc/generators.hpp>

#include <string>
#include <vector>

namespace ctc {

namespace {
    std::string x(int i) { return "x" + std::to_string(i); }
    std::string y(int j) { return "y" + std::to_string(j); }
    std::string v(int i) { return "v" + std::to_string(i); }
} // namespace

std::string chain_out_label(int i) { return "f" + std::to_string(i); }
std::string chain_in_label(int i) { return "f'" + std::to_string(i); }

HalfEdgeGraph gen_Hk(int k)
{
    if (k < 2)
        throw Error("gen_Hk: k must be at least 2");
    HalfEdgeGraph g;
    for (int i = 1; i <= k; ++i)
        g.add_vertex(x(i));
    for (int j = 2; j <= k; ++j)
        g.add_vertex(y(j));
    for (int i = 1; i <= k; ++i)
        for (int j = 2; j <= k; ++j)
            g.add_edge(x(i) + y(j), x(i), y(j));
    for (int i = 1; i <= k; ++i)
        g.add_half_edge("e" + std::to_string(i), x(i));
    return g;
}

HalfEdgeGraph gen_Hprime(int k, std::pair<int, int> keep)
{
    if (k < 2)
        throw Error("gen_Hprime: k must be at least 2");
    auto [a, b] = keep;
    if (a == b || a < 1 || b < 1 || a > k || b > k)
        throw Error("gen_Hprime: kept half-edges must be two distinct indices in 1..k");
    std::set<std::string> drop;
    for (int i = 1; i <= k; ++i)
        if (i != a && i != b)
            drop.insert("e" + std::to_string(i));
    return remove_half_edges(gen_Hk(k), drop);
}

HalfEdgeGraph gen_Gkn(int k, int n)
{
    if (k < 2 || n < 1)
        throw Error("gen_Gkn: need k >= 2 and n >= 1");

    HalfEdgeGraph hub;
    hub.add_vertex("u");
    hub.add_half_edge(chain_out_label(0), "u");
    hub.add_half_edge(chain_in_label(n + 1), "u");

    std::vector<HalfEdgeGraph> parts{hub};
    std::vector<std::string> prefixes{""};
    const auto block = gen_Hprime(k, {1, k});
    for (int i = 1; i <= n; ++i) {
        parts.push_back(block);
        prefixes.push_back("B" + std::to_string(i) + ".");
    }
    auto g = disjoint_union(parts, prefixes);

    std::map<std::string, std::string> renames;
    for (int i = 1; i <= n; ++i) {
        const auto pre = prefixes[static_cast<std::size_t>(i)];
        renames[pre + "e1"] = chain_in_label(i);
        renames[pre + "e" + std::to_string(k)] = chain_out_label(i);
    }
    g = relabel(g, renames);

    for (int i = 0; i <= n; ++i)
        g = join_half_edges(g, chain_out_label(i), chain_in_label(i + 1), "e" + std::to_string(i));
    return g;
}

HalfEdgeGraph gen_cycle(int m)
{
    if (m < 3)
        throw Error("cycle: m must be at least 3");
    HalfEdgeGraph g;
    for (int i = 0; i < m; ++i)
        g.add_vertex(v(i));
    for (int i = 0; i < m; ++i)
        g.add_edge(v(i) + "-" + v((i + 1) % m), v(i), v((i + 1) % m));
    return g;
}

HalfEdgeGraph gen_moebius(int n)
{
    if (n < 2)
        throw Error("moebius: n must be at least 2");
    auto g = gen_cycle(2 * n);
    for (int i = 0; i < n; ++i)
        g.add_edge(v(i) + "-" + v(i + n), v(i), v(i + n));
    return g;
}

HalfEdgeGraph gen_prism(int m)
{
    if (m < 3)
        throw Error("prism: m must be at least 3");
    HalfEdgeGraph g;
    auto a = [](int i) { return "a" + std::to_string(i); };
    auto b = [](int i) { return "b" + std::to_string(i); };
    for (int i = 0; i < m; ++i) {
        g.add_vertex(a(i));
        g.add_vertex(b(i));
    }
    for (int i = 0; i < m; ++i) {
        const int next = (i + 1) % m;
        g.add_edge(a(i) + "-" + a(next), a(i), a(next));
        g.add_edge(b(i) + "-" + b(next), b(i), b(next));
        g.add_edge(a(i) + "-" + b(i), a(i), b(i));
    }
    return g;
}

HalfEdgeGraph gen_complete_bipartite(int a, int b)
{
    if (a < 1 || b < 1)
        throw Error("complete_bipartite: both sides need at least one vertex");
    HalfEdgeGraph g;
    for (int i = 1; i <= a; ++i)
        g.add_vertex("a" + std::to_string(i));
    for (int j = 1; j <= b; ++j)
        g.add_vertex("b" + std::to_string(j));
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j)
            g.add_edge("a" + std::to_string(i) + "b" + std::to_string(j), "a" + std::to_string(i),
                       "b" + std::to_string(j));
    return g;
}

} // namespace ctc
