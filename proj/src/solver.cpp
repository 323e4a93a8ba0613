#include <ctc/error.hpp>
#include <ctc/generators.hpp>
#include <ctc/solver.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>

namespace ctc {

std::string_view to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::feasible:
        return "feasible";
    case SearchStatus::infeasible:
        return "infeasible";
    case SearchStatus::timeout:
        return "timeout";
    }
    return "?";
}

namespace {

    using Clock = std::chrono::steady_clock;
    using Word = std::uint64_t;

    struct Timeout {};

    // Backtracking over bitset domains. One instance per call; no shared state.
    class Search {
    public:
        Search(const TotalConflictGraph & t, int p, int q)
            : n_(static_cast<int>(t.size())), p_(p), q_(q), words_((p + 63) / 64), adj_(t.size())
        {
            for (int i = 0; i < n_; ++i)
                adj_[static_cast<std::size_t>(i)] = t.neighbours(i);

            // arc_[a] = colours at circular distance < q from a.
            arcs_.assign(static_cast<std::size_t>(p_ * words_), 0);
            for (int a = 0; a < p_; ++a)
                for (int d = -(q_ - 1); d <= q_ - 1; ++d) {
                    const int b = ((a + d) % p_ + p_) % p_;
                    arcs_[static_cast<std::size_t>(a * words_ + b / 64)] |= Word{1} << (b % 64);
                }

            domains_.assign(static_cast<std::size_t>(n_ * words_), 0);
            for (int v = 0; v < n_; ++v)
                for (int b = 0; b < p_; ++b)
                    dom(v)[b / 64] |= Word{1} << (b % 64);
            colour_.assign(static_cast<std::size_t>(n_), -1);
            // Every level assigns at least one element.
            saved_.resize(static_cast<std::size_t>(n_) + 1);
        }

        void set_deadline(Clock::time_point deadline) { deadline_ = deadline; }

        /// Restrict v's domain to {0..limit}; returns false if it became empty.
        bool restrict_upto(int v, int limit)
        {
            Word * d = dom(v);
            for (int b = limit + 1; b < p_; ++b)
                d[b / 64] &= ~(Word{1} << (b % 64));
            return size(v) > 0;
        }

        bool pin(int v, int colour) { return assign(v, colour); }

        /// Finds one solution; false when the space is exhausted.
        bool solve() { return dfs(nullptr); }

        /// Calls visit on every solution; visit returns false to stop.
        void enumerate(const std::function<bool(const std::vector<int> &)> & visit) { dfs(&visit); }

        const std::vector<int> & colours() const { return colour_; }
        std::uint64_t nodes() const { return nodes_; }

    private:
        Word * dom(int v) { return &domains_[static_cast<std::size_t>(v * words_)]; }
        const Word * arc(int a) const { return &arcs_[static_cast<std::size_t>(a * words_)]; }

        int size(int v)
        {
            const Word * d = dom(v);
            int s = 0;
            for (int w = 0; w < words_; ++w)
                s += std::popcount(d[w]);
            return s;
        }

        int first(int v)
        {
            const Word * d = dom(v);
            for (int w = 0; w < words_; ++w)
                if (d[w])
                    return w * 64 + std::countr_zero(d[w]);
            return -1;
        }

        // Assign and propagate to a fixpoint: neighbours lose the arc around
        // the colour, neighbours left with one colour are assigned in turn.
        bool assign(int v0, int a0)
        {
            pending_.clear();
            pending_.emplace_back(v0, a0);
            for (std::size_t head = 0; head < pending_.size(); ++head) {
                auto [v, a] = pending_[head];
                if (colour_[static_cast<std::size_t>(v)] != -1) {
                    if (colour_[static_cast<std::size_t>(v)] != a)
                        return false;
                    continue;
                }
                Word * d = dom(v);
                if (!(d[a / 64] >> (a % 64) & 1))
                    return false;
                for (int w = 0; w < words_; ++w)
                    d[w] = 0;
                d[a / 64] = Word{1} << (a % 64);
                colour_[static_cast<std::size_t>(v)] = a;
                const Word * forbidden = arc(a);
                for (int u : adj_[static_cast<std::size_t>(v)]) {
                    if (colour_[static_cast<std::size_t>(u)] != -1)
                        continue;
                    Word * du = dom(u);
                    int s = 0;
                    for (int w = 0; w < words_; ++w) {
                        du[w] &= ~forbidden[w];
                        s += std::popcount(du[w]);
                    }
                    if (s == 0)
                        return false;
                    if (s == 1)
                        pending_.emplace_back(u, first(u));
                }
            }
            return true;
        }

        int pick()
        {
            int best = -1, best_size = 0, best_degree = 0;
            for (int v = 0; v < n_; ++v) {
                if (colour_[static_cast<std::size_t>(v)] != -1)
                    continue;
                const int s = size(v);
                const int deg = static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
                if (best == -1 || s < best_size || (s == best_size && deg > best_degree)) {
                    best = v;
                    best_size = s;
                    best_degree = deg;
                }
            }
            return best;
        }

        bool dfs(const std::function<bool(const std::vector<int> &)> * visit, std::size_t depth = 0)
        {
            if ((++nodes_ & 1023) == 0 && Clock::now() > deadline_)
                throw Timeout{};
            const int v = pick();
            if (v == -1)
                return visit ? !(*visit)(colour_) : true;

            auto & frame = saved_[depth];
            frame.domains = domains_;
            frame.colours = colour_;
            frame.values.clear();
            for (int a = 0; a < p_; ++a)
                if (dom(v)[a / 64] >> (a % 64) & 1)
                    frame.values.push_back(a);
            for (int a : frame.values) {
                if (assign(v, a) && dfs(visit, depth + 1))
                    return true;
                domains_ = frame.domains;
                colour_ = frame.colours;
            }
            return false;
        }

        struct Frame {
            std::vector<Word> domains;
            std::vector<int> colours;
            std::vector<int> values;
        };

        int n_, p_, q_, words_;
        std::vector<std::vector<int>> adj_;
        std::vector<Word> arcs_;
        std::vector<Word> domains_;
        std::vector<int> colour_;
        std::vector<std::pair<int, int>> pending_;
        std::vector<Frame> saved_;
        std::uint64_t nodes_ = 0;
        Clock::time_point deadline_ = Clock::time_point::max();
    };

    CircularColouring to_colouring(const TotalConflictGraph & t, int p, int q, const std::vector<int> & colours,
                                   int factor = 1)
    {
        CircularColouring c(p, q);
        for (std::size_t i = 0; i < t.size(); ++i)
            c.set(t.elements()[i].label, static_cast<long long>(colours[i]) * factor);
        return c;
    }

    bool has_adjacency(const TotalConflictGraph & t)
    {
        for (std::size_t i = 0; i < t.size(); ++i)
            if (!t.neighbours(static_cast<int>(i)).empty())
                return true;
        return false;
    }

} // namespace

FeasibilityOutcome feasible(const TotalConflictGraph & t, int p, int q, const SearchConfig & cfg)
{
    if (p < 1 || q < 1)
        throw Error("feasible: p and q must be positive");
    if (cfg.time_budget <= 0)
        throw Error("feasible: time budget must be positive");

    const auto start = Clock::now();
    FeasibilityOutcome out;
    auto finish = [&](SearchStatus s) {
        out.status = s;
        out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        return out;
    };

    if (p < 2 * q && has_adjacency(t)) {
        out.reason = "p < 2q: no two adjacent elements can be coloured";
        return finish(SearchStatus::infeasible);
    }

    // A (p,q)-colouring exists iff a (p/d, q/d)-colouring does; colours scale by d.
    const int d = std::gcd(p, q);
    const int rp = p / d, rq = q / d;
    Search search(t, rp, rq);
    search.set_deadline(start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(cfg.time_budget)));

    bool ok = true;
    if (cfg.symmetry_breaking && t.size() > 0) {
        // Shift symmetry: some element of maximum degree may take colour 0.
        int pinned = 0;
        for (int v = 1; v < static_cast<int>(t.size()); ++v)
            if (t.neighbours(v).size() > t.neighbours(pinned).size())
                pinned = v;
        // Reflection c -> -c fixes 0, so one neighbour may stay in 0..p/2.
        if (!t.neighbours(pinned).empty())
            ok = search.restrict_upto(t.neighbours(pinned).front(), rp / 2);
        ok = ok && search.pin(pinned, 0);
    }

    try {
        if (ok && search.solve()) {
            out.nodes = search.nodes();
            out.certificate = to_colouring(t, p, q, search.colours(), d);
            if (!is_valid(t, *out.certificate))
                throw Error("feasible: internal error, certificate fails check");
            return finish(SearchStatus::feasible);
        }
    }
    catch (const Timeout &) {
        out.nodes = search.nodes();
        out.reason = "time budget exhausted";
        return finish(SearchStatus::timeout);
    }
    out.nodes = search.nodes();
    return finish(SearchStatus::infeasible);
}

std::uint64_t enumerate_all(const TotalConflictGraph & t, int p, int q, const ColouringVisitor & visit,
                            bool allow_large)
{
    if (t.size() > 20 && !allow_large)
        throw Error("enumerate_all: " + std::to_string(t.size()) + " elements exceed the guard of 20");
    if (p < 1 || q < 1)
        throw Error("enumerate_all: p and q must be positive");
    if (p < 2 * q && has_adjacency(t))
        return 0;

    Search search(t, p, q);
    std::uint64_t count = 0;
    search.enumerate([&](const std::vector<int> & colours) {
        ++count;
        return visit(to_colouring(t, p, q, colours));
    });
    return count;
}

UniformityResult half_edges_uniform(const HalfEdgeGraph & g, int p, int q, bool allow_large)
{
    const auto t = total_conflict_graph(g);
    UniformityResult r;
    r.colourings = enumerate_all(
        t, p, q,
        [&](const CircularColouring & c) {
            std::optional<int> seen;
            for (const auto & h : g.half_edges()) {
                const int colour = c.colour(h.label);
                if (seen && *seen != colour) {
                    r.holds = false;
                    r.counterexample = c;
                    return false;
                }
                seen = colour;
            }
            return true;
        },
        allow_large);
    return r;
}

UniformityResult verify_half_edge_uniform(int k, bool allow_large)
{
    if (k < 2)
        throw Error("verify_half_edge_uniform: k must be at least 2");
    if (k > 4 && !allow_large)
        throw Error("verify_half_edge_uniform: k > 4 needs allow_large");
    return half_edges_uniform(gen_Hk(k), k + 1, 1, true);
}

std::vector<Fraction> candidate_fractions(Fraction lower, Fraction upper, int qmax, std::optional<std::int64_t> pmax)
{
    if (!(lower < upper))
        throw Error("candidate_fractions: empty range (" + lower.str() + ", " + upper.str() + "]");
    if (qmax < 1)
        throw Error("candidate_fractions: qmax must be at least 1");
    std::vector<Fraction> out;
    for (std::int64_t q = 1; q <= qmax; ++q) {
        // p/q > lower  <=>  p > lower.p * q / lower.q
        const std::int64_t from = lower.p() * q / lower.q() + 1;
        const std::int64_t to = upper.p() * q / upper.q();
        for (std::int64_t p = from; p <= to; ++p) {
            if (pmax && p > *pmax)
                break;
            if (std::gcd(p, q) == 1)
                out.emplace_back(p, q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace ctc
