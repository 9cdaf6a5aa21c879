#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cpmat/bipartite.hpp"
#include "cpmat/pattern_matrix.hpp"

namespace cpmat {

/// Directed edge of the graph of a p x q pattern with p <= q: vertex set
/// {0..q-1}, and (from, to) is an edge exactly when entry (to, from) is
/// nonzero -- so `to` always names one of the first p vertices.  The edge
/// inherits the entry's color.
struct DirectedEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    ColorId color;
    bool solid = false;
};

/// Colored directed graph of a wide pattern matrix.  Only the first
/// `row_count` vertices can be colored black; the rest never acquire
/// in-edges.
class ColoredDirectedGraph {
public:
    ColoredDirectedGraph(std::size_t vertex_count, std::size_t row_count)
        : row_count_(row_count), out_(vertex_count) {}

    std::size_t vertex_count() const { return out_.size(); }
    std::size_t row_count() const { return row_count_; }

    void add_edge(std::size_t from, std::size_t to, ColorId color);

    /// Out-edges of a vertex, ascending by head.
    std::span<const DirectedEdge> edges_from(std::size_t v) const { return out_[v]; }

    std::vector<DirectedEdge> all_edges() const;
    std::size_t edge_count() const;

private:
    std::size_t row_count_;
    std::vector<std::vector<DirectedEdge>> out_;  // indexed by tail vertex
};

/// Builds the directed graph of a p x q pattern; throws
/// std::invalid_argument when p > q.
ColoredDirectedGraph build_directed_graph(const ColoredPatternMatrix& m);

/// A set of vertices, sorted ascending, 0-based.
using VertexSet = std::vector<std::size_t>;

/// Black/white state of the first row_count vertices (all others are
/// permanently white).
struct ColorState {
    std::vector<bool> black;  // size row_count

    std::size_t black_count() const;
    bool all_black() const;
};

/// The white out-neighborhood of X: every white vertex that is the head of
/// an edge leaving X.
VertexSet white_out_neighbors(const ColoredDirectedGraph& g, const VertexSet& x,
                              const ColorState& state);

/// Outcome of testing whether Y is a color-perfect white neighbor of X, i.e.
///   (1) |X| = |Y|,
///   (2) Y is exactly the white out-neighborhood of X, and
///   (3) the induced pattern on rows Y and columns X passes the
///       class-nonsingularity test.
struct CpwnResult {
    bool ok = false;
    /// 0 when ok; otherwise the first failing condition (1, 2 or 3).
    int failed_condition = 0;
    /// Present whenever condition 3 was evaluated; spectra are expressed in
    /// the original matrix's colors.
    std::optional<NonsingularityCertificate> certificate;
};

CpwnResult is_color_perfect_white_neighbor(const ColoredDirectedGraph& g,
                                           const VertexSet& x, const VertexSet& y,
                                           const ColorState& state,
                                           const MatchingOptions& matching = {});

/// One derivation step: the vertices of Y turned black because Y is a
/// color-perfect white neighbor of X, as witnessed by the certificate.
struct TraceStep {
    VertexSet x;
    VertexSet y;
    NonsingularityCertificate certificate;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct DerivationTrace {
    std::vector<TraceStep> steps;

    friend bool operator==(const DerivationTrace&, const DerivationTrace&) = default;
};

struct ColorableOptions {
    /// Candidate (X, Y) examinations before the search gives up with
    /// BudgetExceeded.
    std::uint64_t work_budget = 1'000'000;
    /// Cap on |X| per step; 0 means no cap beyond the row count.
    std::size_t max_set_size = 0;
    /// Greedy mode commits to the first applicable step instead of
    /// backtracking; a negative answer is then inconclusive.
    bool greedy = false;
    MatchingOptions matching;
};

struct ColorableResult {
    bool colorable = false;
    /// Present exactly when colorable: a replayable derivation that turns
    /// every row vertex black.
    std::optional<DerivationTrace> trace;
    /// True when a negative answer is exhaustive (full backtracking ran to
    /// completion); greedy negatives are not.
    bool exhaustive = true;
    std::uint64_t work_used = 0;
};

/// Decides whether repeated color-change steps can blacken all row vertices.
/// Deterministic: candidates are explored by increasing |X|, then in
/// lexicographic order, with memoization of failed black-sets, so equal
/// inputs yield equal traces.  Throws BudgetExceeded when the work or
/// matching budget is exhausted.
ColorableResult is_colorable(const ColoredPatternMatrix& m,
                             const ColorableOptions& options = {});

/// Outcome of replaying a recorded derivation against a matrix.
struct ReplayResult {
    /// Every step passed the color-perfect-white-neighbor test in sequence.
    bool valid = false;
    /// valid and the final state has every row vertex black.
    bool complete = false;
    /// Index of the first failing step when !valid.
    std::size_t failed_step = 0;
};

/// Replays a trace from the all-white state, re-verifying each step.
ReplayResult replay_trace(const ColoredPatternMatrix& m, const DerivationTrace& trace,
                          const MatchingOptions& matching = {});

}  // namespace cpmat
