#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cpmat/color.hpp"
#include "cpmat/pattern_matrix.hpp"

namespace cpmat {

/// One edge of the colored bipartite graph of a square t x t pattern:
/// column vertex x is joined to row vertex y exactly when entry (y, x) is
/// nonzero; the edge inherits that entry's color.  Solid edges come from
/// Star classes, dashed edges from Question classes.  All indices 0-based.
struct BipartiteEdge {
    std::size_t x = 0;  // column-side vertex
    std::size_t y = 0;  // row-side vertex
    ColorId color;
    bool solid = false;
};

/// Colored bipartite graph on t column vertices and t row vertices.
class ColoredBipartiteGraph {
public:
    explicit ColoredBipartiteGraph(std::size_t size) : adj_(size) {}

    std::size_t size() const { return adj_.size(); }

    void add_edge(std::size_t x, std::size_t y, ColorId color);

    /// Edges leaving column vertex x, ascending by row vertex.
    std::span<const BipartiteEdge> edges_from(std::size_t x) const { return adj_[x]; }

    /// All edges, ascending by (x, y).
    std::vector<BipartiteEdge> all_edges() const;

    std::size_t edge_count() const;

    /// Color of the edge {x, y}, if present.
    std::optional<ColorId> edge_color(std::size_t x, std::size_t y) const;

private:
    std::vector<std::vector<BipartiteEdge>> adj_;  // indexed by x
};

/// Builds the bipartite graph of a square pattern matrix; throws
/// std::invalid_argument on non-square input.
ColoredBipartiteGraph build_bipartite(const ColoredPatternMatrix& m);

/// A perfect matching recorded as the permutation gamma with gamma[x] = the
/// row vertex matched to column vertex x, together with the permutation's
/// sign (parity of its cycle decomposition).
struct PerfectMatching {
    std::vector<std::size_t> gamma;
    int sign = 1;

    friend bool operator==(const PerfectMatching&, const PerfectMatching&) = default;
};

/// Sign of a permutation via cycle decomposition: (-1)^(t - #cycles).
int permutation_sign(std::span<const std::size_t> gamma);

struct MatchingOptions {
    /// Enumeration aborts with BudgetExceeded once more matchings than this
    /// would be produced.
    std::uint64_t max_matchings = 1'000'000;
};

/// Enumerates every perfect matching by backtracking column by column with
/// forward pruning (a column left without free candidates cuts the branch).
/// Output order is lexicographic in gamma, so it is deterministic.
std::vector<PerfectMatching> enumerate_perfect_matchings(
    const ColoredBipartiteGraph& g, const MatchingOptions& options = {});

/// The multiset of edge colors used by a matching, sorted canonically (with
/// repetitions kept).
using Spectrum = std::vector<ColorId>;

Spectrum matching_spectrum(const ColoredBipartiteGraph& g, const PerfectMatching& m);

/// Matchings grouped by equal spectrum.  The signature of a class is the sum
/// of its members' signs.
struct EquivalenceClass {
    Spectrum spectrum;
    std::vector<PerfectMatching> members;
    long long signature = 0;
};

/// Groups matchings by spectrum; classes come back sorted by spectrum.
std::vector<EquivalenceClass> group_equivalence_classes(
    const ColoredBipartiteGraph& g, const std::vector<PerfectMatching>& matchings);

/// Per-class summary embedded in certificates.
struct ClassSummary {
    Spectrum spectrum;
    long long signature = 0;
    std::size_t member_count = 0;

    friend bool operator==(const ClassSummary&, const ClassSummary&) = default;
};

/// Machine-checkable outcome of the class-nonsingularity test of a square
/// colored pattern.  The verdict is true exactly when
///   (1) at least one perfect matching exists,
///   (2) exactly one equivalence class has nonzero signature, and
///   (3) that class's spectrum contains only solid colors.
/// The verdict true/false is exact for the whole pattern class: true means
/// every admissible realization is nonsingular, false means some admissible
/// realization (possibly over the complex numbers) is singular.
struct NonsingularityCertificate {
    bool verdict = false;
    std::vector<ClassSummary> classes;       // all classes, sorted by spectrum
    /// 0 when the verdict is true; otherwise the first violated condition
    /// (1, 2 or 3 as numbered above).
    int violated_condition = 0;
    /// Verdict true, or condition 3 violated: index (into `classes`) of the
    /// unique class with nonzero signature.
    std::optional<std::size_t> witness_class;
    /// Condition 2 violated with >= 2 nonzero-signature classes: their
    /// indices (a condition-2 violation with zero such classes lists none).
    std::vector<std::size_t> exhibit_classes;
    /// Condition 3 violated: the dashed colors occurring in the witness
    /// class's spectrum.
    std::vector<ColorId> dashed_colors;

    friend bool operator==(const NonsingularityCertificate&,
                           const NonsingularityCertificate&) = default;
};

/// Runs the three-condition test on a square pattern.  Throws
/// BudgetExceeded when matching enumeration overruns its budget.
NonsingularityCertificate is_nonsingular(const ColoredPatternMatrix& m,
                                         const MatchingOptions& options = {});

}  // namespace cpmat
