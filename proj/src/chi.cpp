#include <ctc/error.hpp>
#include <ctc/solver.hpp>

#include <chrono>
#include <sstream>

namespace ctc {

namespace {

    bool has_adjacency(const TotalConflictGraph & t)
    {
        for (std::size_t i = 0; i < t.size(); ++i)
            if (!t.neighbours(static_cast<int>(i)).empty())
                return true;
        return false;
    }

} // namespace

std::string ChiResult::summary() const
{
    std::string s;
    if (status == Status::exact)
        s = "exact " + upper.str();
    else
        s = "bounded " + std::string(lower_strict ? "(" : "[") + lower.str() + ", " + upper.str() + "]";
    if (!within_default_bound())
        s += " (within bound q <= " + std::to_string(qmax_used) + ")";
    return s;
}

std::string ChiResult::record() const
{
    std::ostringstream os;
    os << "status " << (status == Status::exact ? (within_default_bound() ? "exact" : "exact-within-bound") : "bounded")
       << '\n';
    if (status == Status::exact)
        os << "value " << upper.str() << '\n';
    os << "lower " << lower.str() << '\n'
       << "lower_strict " << (lower_strict ? "true" : "false") << '\n'
       << "upper " << upper.str() << '\n';
    if (infeasible_predecessor)
        os << "infeasible_predecessor " << infeasible_predecessor->str() << '\n';
    os << "qmax " << qmax_used << '\n'
       << "qmax_default " << qmax_default << '\n'
       << "pmax " << pmax << '\n'
       << "nodes " << nodes << '\n'
       << "seconds " << seconds << '\n';
    return os.str();
}

ChiResult chi_circular(const TotalConflictGraph & t, int clique_lower_bound, const SearchConfig & cfg)
{
    const auto start = std::chrono::steady_clock::now();
    const int n = static_cast<int>(t.size());
    ChiResult r;
    r.qmax_default = std::max(1, n);
    r.qmax_used = cfg.qmax.value_or(r.qmax_default);
    r.pmax = std::max(1, n);
    if (r.qmax_used < 1)
        throw Error("chi: qmax must be at least 1");

    auto done = [&]() -> ChiResult {
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return r;
    };

    if (!has_adjacency(t)) {
        r.status = ChiResult::Status::exact;
        r.lower = r.upper = Fraction(1);
        CircularColouring c(1, 1);
        for (const auto & e : t.elements())
            c.set(e.label, 0);
        r.witness = c;
        r.trace.push_back("no adjacent elements: one colour");
        return done();
    }

    // Every element its own colour: a trivially valid (n,1)-colouring.
    r.upper = Fraction(n);
    {
        CircularColouring c(n, 1);
        for (int i = 0; i < n; ++i)
            c.set(t.element(i).label, i);
        r.witness = c;
    }
    const int first = std::max(2, clique_lower_bound);
    r.lower = Fraction(first);
    r.lower_strict = false;

    auto run = [&](Fraction f) {
        auto o = feasible(t, static_cast<int>(f.p()), static_cast<int>(f.q()), cfg);
        r.nodes += o.nodes;
        r.trace.push_back(f.str() + " " + std::string(to_string(o.status)) + " (" + std::to_string(o.nodes) +
                          " nodes, " + std::to_string(o.seconds) + " s)");
        return o;
    };

    int m = first;
    for (;; ++m) {
        if (m >= n) {
            m = n;
            break;
        }
        auto o = run(Fraction(m));
        if (o.status == SearchStatus::timeout)
            return done();
        if (o.status == SearchStatus::feasible) {
            r.upper = Fraction(m);
            r.witness = *o.certificate;
            break;
        }
        r.lower = Fraction(m);
        r.lower_strict = true;
    }
    if (m == first) {
        // Feasible at the clique bound.
        r.status = ChiResult::Status::exact;
        r.lower = r.upper;
        r.lower_strict = false;
        return done();
    }

    const auto cands = candidate_fractions(Fraction(m - 1), Fraction(m), r.qmax_used, r.pmax);
    // cands.back() == m is feasible; everything <= m-1 is infeasible.
    long lo = -1, hi = static_cast<long>(cands.size()) - 1;
    while (hi - lo > 1) {
        const long mid = lo + (hi - lo) / 2;
        const auto f = cands[static_cast<std::size_t>(mid)];
        auto o = run(f);
        if (o.status == SearchStatus::timeout)
            return done();
        if (o.status == SearchStatus::feasible) {
            hi = mid;
            r.upper = f;
            r.witness = *o.certificate;
        }
        else {
            lo = mid;
            r.lower = f;
            r.lower_strict = true;
        }
    }
    r.status = ChiResult::Status::exact;
    r.infeasible_predecessor = lo >= 0 ? cands[static_cast<std::size_t>(lo)] : Fraction(m - 1);
    r.lower = r.upper;
    r.lower_strict = false;
    return done();
}

ChiResult chi_total(const HalfEdgeGraph & g, const SearchConfig & cfg)
{
    return chi_circular(total_conflict_graph(g), degree_report(g).max_degree_with_half_edges + 1, cfg);
}

std::optional<bool> is_type2(const HalfEdgeGraph & g, const SearchConfig & cfg)
{
    const int delta = degree_report(g).max_degree_with_half_edges;
    auto o = feasible(total_conflict_graph(g), delta + 1, 1, cfg);
    if (o.status == SearchStatus::timeout)
        return std::nullopt;
    return o.status == SearchStatus::infeasible;
}

} // namespace ctc
