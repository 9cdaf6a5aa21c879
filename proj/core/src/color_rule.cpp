#include "cpmat/color_rule.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "cpmat/errors.hpp"

namespace cpmat {

void ColoredDirectedGraph::add_edge(std::size_t from, std::size_t to, ColorId color) {
    if (from >= vertex_count() || to >= vertex_count())
        throw std::out_of_range("directed edge endpoint out of range");
    if (to >= row_count_)
        throw std::out_of_range("directed edge head must be a row vertex");
    auto& edges = out_[from];
    DirectedEdge e{from, to, color, color.solid()};
    auto pos = std::lower_bound(edges.begin(), edges.end(), to,
                                [](const DirectedEdge& a, std::size_t b) { return a.to < b; });
    if (pos != edges.end() && pos->to == to)
        throw std::invalid_argument("duplicate directed edge");
    edges.insert(pos, e);
}

std::vector<DirectedEdge> ColoredDirectedGraph::all_edges() const {
    std::vector<DirectedEdge> out;
    for (const auto& edges : out_) out.insert(out.end(), edges.begin(), edges.end());
    return out;
}

std::size_t ColoredDirectedGraph::edge_count() const {
    std::size_t total = 0;
    for (const auto& edges : out_) total += edges.size();
    return total;
}

ColoredDirectedGraph build_directed_graph(const ColoredPatternMatrix& m) {
    if (m.rows() > m.cols())
        throw std::invalid_argument("directed graph requires a wide pattern (rows <= cols)");
    ColoredDirectedGraph g(m.cols(), m.rows());
    // (from, to) is an edge exactly when entry (to, from) is nonzero.
    for (std::size_t from = 0; from < m.cols(); ++from)
        for (std::size_t to = 0; to < m.rows(); ++to)
            if (const Cell& c = m.at(to, from)) g.add_edge(from, to, *c);
    return g;
}

std::size_t ColorState::black_count() const {
    return static_cast<std::size_t>(std::count(black.begin(), black.end(), true));
}

bool ColorState::all_black() const {
    return std::find(black.begin(), black.end(), false) == black.end();
}

VertexSet white_out_neighbors(const ColoredDirectedGraph& g, const VertexSet& x,
                              const ColorState& state) {
    std::vector<bool> hit(g.row_count(), false);
    for (std::size_t v : x)
        for (const DirectedEdge& e : g.edges_from(v))
            if (!state.black[e.to]) hit[e.to] = true;
    VertexSet out;
    for (std::size_t y = 0; y < hit.size(); ++y)
        if (hit[y]) out.push_back(y);
    return out;
}

namespace {

/// The induced pattern on rows Y and columns X of the matrix behind `g`,
/// rebuilt from the edges, with colors renumbered canonically plus the map
/// back to original colors.
std::pair<ColoredPatternMatrix, std::vector<std::pair<ColorId, ColorId>>>
induced_pattern(const ColoredDirectedGraph& g, const VertexSet& x, const VertexSet& y) {
    std::map<std::size_t, std::size_t> row_of;  // vertex -> position in y
    for (std::size_t i = 0; i < y.size(); ++i) row_of.emplace(y[i], i);
    std::vector<Cell> cells(y.size() * x.size());
    for (std::size_t j = 0; j < x.size(); ++j)
        for (const DirectedEdge& e : g.edges_from(x[j]))
            if (auto it = row_of.find(e.to); it != row_of.end())
                cells[it->second * x.size() + j] = e.color;
    return ColoredPatternMatrix::from_cells_renumbered(y.size(), x.size(),
                                                       std::move(cells));
}

/// Re-expresses a certificate computed on a renumbered submatrix in the
/// original matrix's colors.
NonsingularityCertificate relabel(NonsingularityCertificate cert,
                                  const std::vector<std::pair<ColorId, ColorId>>& new_to_old) {
    std::map<ColorId, ColorId> back(new_to_old.begin(), new_to_old.end());
    auto fix = [&](std::vector<ColorId>& colors) {
        for (ColorId& c : colors) c = back.at(c);
        std::sort(colors.begin(), colors.end());
    };
    for (ClassSummary& cls : cert.classes) fix(cls.spectrum);
    fix(cert.dashed_colors);
    // Class order must stay sorted by spectrum after relabeling; the
    // witness/exhibit indices follow the permutation.
    std::vector<std::size_t> order(cert.classes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return cert.classes[a].spectrum < cert.classes[b].spectrum;
    });
    std::vector<std::size_t> position(order.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) position[order[rank]] = rank;
    std::vector<ClassSummary> sorted;
    sorted.reserve(cert.classes.size());
    for (std::size_t idx : order) sorted.push_back(std::move(cert.classes[idx]));
    cert.classes = std::move(sorted);
    if (cert.witness_class) cert.witness_class = position[*cert.witness_class];
    for (std::size_t& idx : cert.exhibit_classes) idx = position[idx];
    std::sort(cert.exhibit_classes.begin(), cert.exhibit_classes.end());
    return cert;
}

bool is_sorted_unique(const VertexSet& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] >= v[i]) return false;
    return true;
}

}  // namespace

CpwnResult is_color_perfect_white_neighbor(const ColoredDirectedGraph& g,
                                           const VertexSet& x, const VertexSet& y,
                                           const ColorState& state,
                                           const MatchingOptions& matching) {
    if (x.empty() || !is_sorted_unique(x) || !is_sorted_unique(y))
        throw std::invalid_argument("vertex sets must be nonempty, sorted and duplicate-free");
    for (std::size_t v : x)
        if (v >= g.vertex_count()) throw std::out_of_range("X vertex out of range");
    for (std::size_t v : y)
        if (v >= g.row_count()) throw std::out_of_range("Y vertex out of range");

    CpwnResult result;
    if (x.size() != y.size()) {
        result.failed_condition = 1;
        return result;
    }
    if (white_out_neighbors(g, x, state) != y) {
        result.failed_condition = 2;
        return result;
    }
    auto [sub, new_to_old] = induced_pattern(g, x, y);
    NonsingularityCertificate cert = relabel(is_nonsingular(sub, matching), new_to_old);
    result.certificate = cert;
    if (!cert.verdict) {
        result.failed_condition = 3;
        return result;
    }
    result.ok = true;
    return result;
}

namespace {

/// Advances idx (a sorted k-subset of {0..n-1}) to the next combination in
/// lexicographic order; returns false when none is left.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (idx[i] != i + n - k) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

/// Exhaustive candidate-step generator shared by the backtracking and greedy
/// searches.  Visits candidate sets X (subsets of the set W of vertices with
/// at least one white out-neighbor) by increasing size, lexicographically
/// within a size, and yields each (X, Y, certificate) whose step applies.
///
/// Completeness of restricting X to subsets of W: a candidate column outside
/// W contributes a zero column to the induced pattern, which then has no
/// perfect matching, so no applicable step is missed.
class StepSearch {
public:
    StepSearch(const ColoredDirectedGraph& g, const ColorableOptions& options)
        : g_(g), options_(options) {}

    std::uint64_t work_used() const { return work_used_; }

    /// Calls visit(x, y, certificate) for each applicable step; stops early
    /// when visit returns false.  Returns false on early stop.
    template <typename Visit>
    bool for_each_step(const ColorState& state, Visit&& visit) {
        VertexSet w;
        for (std::size_t v = 0; v < g_.vertex_count(); ++v) {
            for (const DirectedEdge& e : g_.edges_from(v)) {
                if (!state.black[e.to]) {
                    w.push_back(v);
                    break;
                }
            }
        }
        const std::size_t white_rows = g_.row_count() - state.black_count();
        std::size_t cap = std::min(w.size(), white_rows);
        if (options_.max_set_size > 0) cap = std::min(cap, options_.max_set_size);

        VertexSet x;
        for (std::size_t size = 1; size <= cap; ++size) {
            x.assign(size, 0);
            // Classic lexicographic k-combination walk over w.
            std::vector<std::size_t> idx(size);
            for (std::size_t i = 0; i < size; ++i) idx[i] = i;
            do {
                for (std::size_t i = 0; i < size; ++i) x[i] = w[idx[i]];
                if (++work_used_ > options_.work_budget)
                    throw BudgetExceeded("colorability search exceeded work budget of " +
                                         std::to_string(options_.work_budget));
                VertexSet y = white_out_neighbors(g_, x, state);
                if (y.size() == size) {
                    auto [sub, new_to_old] = induced_pattern(g_, x, y);
                    NonsingularityCertificate cert =
                        relabel(is_nonsingular(sub, options_.matching), new_to_old);
                    if (cert.verdict) {
                        if (!visit(x, y, cert)) return false;
                    }
                }
            } while (next_combination(idx, w.size()));
        }
        return true;
    }

private:
    const ColoredDirectedGraph& g_;
    const ColorableOptions& options_;
    std::uint64_t work_used_ = 0;
};

std::uint64_t black_mask(const ColorState& state) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < state.black.size(); ++i)
        if (state.black[i]) mask |= std::uint64_t{1} << i;
    return mask;
}

}  // namespace

ColorableResult is_colorable(const ColoredPatternMatrix& m, const ColorableOptions& options) {
    ColoredDirectedGraph g = build_directed_graph(m);
    const std::size_t p = g.row_count();
    if (p > 63)
        throw BudgetExceeded("colorability search supports at most 63 rows, got " +
                             std::to_string(p));

    ColorableResult result;
    ColorState state{std::vector<bool>(p, false)};
    StepSearch search(g, options);

    if (options.greedy) {
        DerivationTrace trace;
        while (!state.all_black()) {
            bool stepped = false;
            search.for_each_step(state, [&](const VertexSet& x, const VertexSet& y,
                                            const NonsingularityCertificate& cert) {
                trace.steps.push_back(TraceStep{x, y, cert});
                for (std::size_t v : y) state.black[v] = true;
                stepped = true;
                return false;  // commit to the first applicable step
            });
            if (!stepped) break;
        }
        result.colorable = state.all_black();
        result.exhaustive = result.colorable;  // a greedy dead end proves nothing
        if (result.colorable) result.trace = std::move(trace);
        result.work_used = search.work_used();
        return result;
    }

    // Depth-first backtracking over black-sets with memoized dead ends.
    std::unordered_set<std::uint64_t> dead;
    DerivationTrace trace;
    auto dfs = [&](auto&& self, ColorState& s) -> bool {
        if (s.all_black()) return true;
        const std::uint64_t key = black_mask(s);
        if (dead.count(key)) return false;
        bool found = false;
        search.for_each_step(s, [&](const VertexSet& x, const VertexSet& y,
                                    const NonsingularityCertificate& cert) {
            ColorState next = s;
            for (std::size_t v : y) next.black[v] = true;
            trace.steps.push_back(TraceStep{x, y, cert});
            if (self(self, next)) {
                found = true;
                return false;  // success: unwind, keeping the trace
            }
            trace.steps.pop_back();
            return true;  // keep searching siblings
        });
        if (!found) dead.insert(key);
        return found;
    };
    result.colorable = dfs(dfs, state);
    result.exhaustive = true;
    if (result.colorable) result.trace = std::move(trace);
    result.work_used = search.work_used();
    return result;
}

ReplayResult replay_trace(const ColoredPatternMatrix& m, const DerivationTrace& trace,
                          const MatchingOptions& matching) {
    ColoredDirectedGraph g = build_directed_graph(m);
    ColorState state{std::vector<bool>(g.row_count(), false)};
    ReplayResult result;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const TraceStep& step = trace.steps[i];
        CpwnResult check =
            is_color_perfect_white_neighbor(g, step.x, step.y, state, matching);
        if (!check.ok) {
            result.failed_step = i;
            return result;
        }
        for (std::size_t v : step.y) state.black[v] = true;
    }
    result.valid = true;
    result.complete = state.all_black();
    return result;
}

}  // namespace cpmat
