#pragma once

#include <ctc/hegraph.hpp>

#include <iosfwd>
#include <random>
#include <string>
#include <vector>

namespace ctc::repro {

struct CriterionResult {
    std::string id;
    std::string title;
    bool pass = false;
    double seconds = 0;
    double limit_seconds = 0;
    std::vector<std::string> details;
};

enum class Suite { fast, full };

struct Options {
    Suite suite = Suite::fast;
    /// Per feasibility call in the `full` extras.
    double full_timeout = 600;
    /// Progress lines go here when set.
    std::ostream * progress = nullptr;
};

/// Runs the acceptance criteria (and, for Suite::full, the larger paper
/// verifications) and returns one result per criterion, in order.
std::vector<CriterionResult> run(const Options & options);

/// Fixed-width summary table, one row per criterion.
std::string table(const std::vector<CriterionResult> & results);

/// Connected graphs with half-edges and at most `max_elements` vertices +
/// edges + half-edges, one per isomorphism class.
std::vector<HalfEdgeGraph> small_graphs(int max_elements);

/// Erdos-Renyi graph on `vertices` vertices plus `half_edges` half-edges at
/// random vertices.
HalfEdgeGraph random_graph(std::mt19937_64 & rng, int vertices, double edge_probability, int half_edges);

} // namespace ctc::repro
