#include <ctc/hegraph.hpp>

#include <algorithm>
#include <map>

namespace ctc {

namespace {

    using Colouring = std::vector<int>;

    struct Refiner {
        int n;
        std::vector<std::vector<int>> adj;
        std::vector<int> halves;

        // Colour refinement to the coarsest equitable partition finer than `c`.
        // New colours are ranks of (old colour, sorted neighbour colours), so the
        // result depends only on the isomorphism class of (graph, c).
        Colouring refine(Colouring c) const
        {
            int classes = count(c);
            while (true) {
                std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
                for (int v = 0; v < n; ++v) {
                    auto & s = sig[static_cast<std::size_t>(v)];
                    s.first = c[static_cast<std::size_t>(v)];
                    for (int w : adj[static_cast<std::size_t>(v)])
                        s.second.push_back(c[static_cast<std::size_t>(w)]);
                    std::sort(s.second.begin(), s.second.end());
                }
                auto sorted = sig;
                std::sort(sorted.begin(), sorted.end());
                sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
                for (int v = 0; v < n; ++v)
                    c[static_cast<std::size_t>(v)] = static_cast<int>(
                        std::lower_bound(sorted.begin(), sorted.end(), sig[static_cast<std::size_t>(v)]) -
                        sorted.begin());
                const int now = static_cast<int>(sorted.size());
                if (now == classes)
                    return c;
                classes = now;
            }
        }

        static int count(const Colouring & c)
        {
            auto s = c;
            std::sort(s.begin(), s.end());
            return static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
        }

        std::string leaf_string(const Colouring & c) const
        {
            // c is discrete: c[v] is the canonical position of v.
            std::vector<int> at(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v)
                at[static_cast<std::size_t>(c[static_cast<std::size_t>(v)])] = v;
            std::string s = std::to_string(n) + ":";
            for (int i = 0; i < n; ++i)
                s += std::to_string(halves[static_cast<std::size_t>(at[static_cast<std::size_t>(i)])]) + ",";
            s += ":";
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    const auto & nb = adj[static_cast<std::size_t>(at[static_cast<std::size_t>(i)])];
                    s += std::find(nb.begin(), nb.end(), at[static_cast<std::size_t>(j)]) != nb.end() ? '1' : '0';
                }
            return s;
        }

        void search(const Colouring & c0, std::string & best) const
        {
            const auto c = refine(c0);
            if (count(c) == n) {
                auto s = leaf_string(c);
                if (best.empty() || s < best)
                    best = std::move(s);
                return;
            }
            std::map<int, std::vector<int>> cells;
            for (int v = 0; v < n; ++v)
                cells[c[static_cast<std::size_t>(v)]].push_back(v);
            const std::vector<int> * target = nullptr;
            for (const auto & [colour, members] : cells)
                if (members.size() > 1) {
                    target = &members;
                    break;
                }
            for (int v : *target) {
                Colouring next(static_cast<std::size_t>(n));
                for (int w = 0; w < n; ++w)
                    next[static_cast<std::size_t>(w)] = 2 * c[static_cast<std::size_t>(w)] + (w == v ? 0 : 1);
                search(next, best);
            }
        }
    };

} // namespace

std::string canonical_form(const HalfEdgeGraph & g)
{
    Refiner r;
    r.n = static_cast<int>(g.vertices().size());
    r.adj.resize(static_cast<std::size_t>(r.n));
    r.halves.assign(static_cast<std::size_t>(r.n), 0);
    for (const auto & e : g.edges()) {
        r.adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        r.adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (const auto & h : g.half_edges())
        ++r.halves[static_cast<std::size_t>(h.v)];
    if (r.n == 0)
        return "0::";
    std::string best;
    r.search(r.halves, best);
    return best;
}

bool isomorphic(const HalfEdgeGraph & a, const HalfEdgeGraph & b)
{
    if (a.vertices().size() != b.vertices().size() || a.edges().size() != b.edges().size() ||
        a.half_edges().size() != b.half_edges().size())
        return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace ctc
