#pragma once

#include <ctc/colouring.hpp>
#include <ctc/fraction.hpp>
#include <ctc/hegraph.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ctc {

struct SearchConfig {
    /// Wall-clock budget of a single feasibility call, in seconds.
    double time_budget = 60.0;
    /// Denominator bound for chi_total; defaults to the number of elements.
    std::optional<int> qmax;
    /// Pin one maximum-degree element to colour 0 and one of its neighbours
    /// to the lower half circle (shift and reflection symmetry).
    bool symmetry_breaking = true;
    std::uint64_t deterministic_seed = 0;
};

enum class SearchStatus { feasible, infeasible, timeout };

std::string_view to_string(SearchStatus s);

struct FeasibilityOutcome {
    SearchStatus status = SearchStatus::timeout;
    /// Present iff feasible; always passes `check`.
    std::optional<CircularColouring> certificate;
    std::uint64_t nodes = 0;
    double seconds = 0;
    std::string reason;
};

/// Complete backtracking search for a (p,q)-colouring of `t`.
///
/// Domains are bitsets over Z_p; assigning colour a removes the open arc
/// (a-q, a+q) from every neighbour, singleton domains are assigned at once
/// (forward checking to a fixpoint). Variables are picked smallest domain
/// first, ties by degree then index; values ascending. The search is
/// deterministic: equal inputs give equal outcomes and node counts.
FeasibilityOutcome feasible(const TotalConflictGraph & t, int p, int q, const SearchConfig & cfg = {});

/// Visitor returns false to stop the enumeration.
using ColouringVisitor = std::function<bool(const CircularColouring &)>;

/// Visits every valid (p,q)-colouring of `t` exactly once (no symmetry
/// breaking). Returns the number visited. Refuses instances above 20 elements
/// unless `allow_large`.
std::uint64_t enumerate_all(const TotalConflictGraph & t, int p, int q, const ColouringVisitor & visit,
                            bool allow_large = false);

struct UniformityResult {
    bool holds = true;
    std::uint64_t colourings = 0;
    std::optional<CircularColouring> counterexample;
};

/// Do all half-edges of `g` share one colour in every (p,q)-total colouring?
UniformityResult half_edges_uniform(const HalfEdgeGraph & g, int p, int q, bool allow_large = false);

/// The uniformity claim for H_k with k+1 colours. Enumerates, so k <= 4
/// unless `allow_large`.
UniformityResult verify_half_edge_uniform(int k, bool allow_large = false);

/// Reduced fractions p/q in (lower, upper] with q <= qmax (and p <= pmax if
/// given), ascending.
std::vector<Fraction> candidate_fractions(Fraction lower, Fraction upper, int qmax,
                                          std::optional<std::int64_t> pmax = std::nullopt);

struct ChiResult {
    enum class Status { exact, bounded };
    Status status = Status::bounded;
    /// exact: value == upper. bounded: chi in (lower, upper] when lower_strict,
    /// else [lower, upper].
    Fraction lower, upper;
    bool lower_strict = false;
    /// For exact results: the largest candidate below `upper` proven infeasible.
    std::optional<Fraction> infeasible_predecessor;
    int qmax_used = 0;
    int qmax_default = 0;
    int pmax = 0;
    /// Colouring at `upper`; always passes `check`.
    CircularColouring witness{1, 1};
    std::uint64_t nodes = 0;
    double seconds = 0;
    std::vector<std::string> trace;

    Fraction value() const { return upper; }
    bool within_default_bound() const { return qmax_used >= qmax_default; }
    std::string summary() const;
    /// Machine-readable "key value" lines.
    std::string record() const;
};

/// Circular total chromatic number by exact search over candidate fractions.
///
/// The lower bound is Delta+1 (a vertex with its incident elements is a
/// clique of T(G)); the upper bound is the first integer m >= Delta+1 that is
/// feasible. Candidates in (m-1, m] are p/q with q <= qmax and p <= |T(G)|
/// (the circular chromatic number of a graph on N nodes has a representation
/// with numerator at most N); feasibility is monotone in p/q, so a binary
/// search finds the least feasible candidate. A timed-out call degrades the
/// result to the bracketing interval.
ChiResult chi_total(const HalfEdgeGraph & g, const SearchConfig & cfg = {});
ChiResult chi_circular(const TotalConflictGraph & t, int clique_lower_bound, const SearchConfig & cfg = {});

/// True iff there is no (Delta+1, 1)-total colouring, Delta counting
/// half-edges. nullopt on timeout.
std::optional<bool> is_type2(const HalfEdgeGraph & g, const SearchConfig & cfg = {});

} // namespace ctc
