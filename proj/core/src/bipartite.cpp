#include "cpmat/bipartite.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cpmat/errors.hpp"

namespace cpmat {

void ColoredBipartiteGraph::add_edge(std::size_t x, std::size_t y, ColorId color) {
    if (x >= size() || y >= size())
        throw std::out_of_range("bipartite edge endpoint out of range");
    auto& edges = adj_[x];
    BipartiteEdge e{x, y, color, color.solid()};
    auto pos = std::lower_bound(edges.begin(), edges.end(), y,
                                [](const BipartiteEdge& a, std::size_t b) { return a.y < b; });
    if (pos != edges.end() && pos->y == y)
        throw std::invalid_argument("duplicate bipartite edge");
    edges.insert(pos, e);
}

std::vector<BipartiteEdge> ColoredBipartiteGraph::all_edges() const {
    std::vector<BipartiteEdge> out;
    for (const auto& edges : adj_) out.insert(out.end(), edges.begin(), edges.end());
    return out;
}

std::size_t ColoredBipartiteGraph::edge_count() const {
    std::size_t total = 0;
    for (const auto& edges : adj_) total += edges.size();
    return total;
}

std::optional<ColorId> ColoredBipartiteGraph::edge_color(std::size_t x, std::size_t y) const {
    for (const BipartiteEdge& e : adj_[x])
        if (e.y == y) return e.color;
    return std::nullopt;
}

ColoredBipartiteGraph build_bipartite(const ColoredPatternMatrix& m) {
    if (!m.is_square())
        throw std::invalid_argument("bipartite graph requires a square pattern");
    ColoredBipartiteGraph g(m.rows());
    // Column vertex x joins row vertex y exactly when entry (y, x) is nonzero.
    for (std::size_t x = 0; x < m.cols(); ++x)
        for (std::size_t y = 0; y < m.rows(); ++y)
            if (const Cell& c = m.at(y, x)) g.add_edge(x, y, *c);
    return g;
}

int permutation_sign(std::span<const std::size_t> gamma) {
    std::vector<bool> seen(gamma.size(), false);
    std::size_t cycles = 0;
    for (std::size_t start = 0; start < gamma.size(); ++start) {
        if (seen[start]) continue;
        ++cycles;
        std::size_t v = start;
        while (!seen[v]) {
            seen[v] = true;
            v = gamma[v];
        }
    }
    return ((gamma.size() - cycles) % 2 == 0) ? 1 : -1;
}

std::vector<PerfectMatching> enumerate_perfect_matchings(const ColoredBipartiteGraph& g,
                                                         const MatchingOptions& options) {
    const std::size_t t = g.size();
    std::vector<PerfectMatching> out;
    std::vector<std::size_t> gamma(t, 0);
    std::vector<bool> used(t, false);

    // Backtracks over columns in order; candidates per column are ascending,
    // so matchings come out in lexicographic gamma order.
    auto column_has_free_candidate = [&](std::size_t x) {
        for (const BipartiteEdge& e : g.edges_from(x))
            if (!used[e.y]) return true;
        return false;
    };

    auto recurse = [&](auto&& self, std::size_t x) -> void {
        if (x == t) {
            if (out.size() == options.max_matchings)
                throw BudgetExceeded("perfect matching enumeration exceeded budget of " +
                                     std::to_string(options.max_matchings));
            PerfectMatching m;
            m.gamma = gamma;
            m.sign = permutation_sign(m.gamma);
            out.push_back(std::move(m));
            return;
        }
        for (const BipartiteEdge& e : g.edges_from(x)) {
            if (used[e.y]) continue;
            used[e.y] = true;
            gamma[x] = e.y;
            // Forward pruning: every later column must still see a free row.
            bool viable = true;
            for (std::size_t later = x + 1; later < t && viable; ++later)
                viable = column_has_free_candidate(later);
            if (viable) self(self, x + 1);
            used[e.y] = false;
        }
    };
    if (t > 0) recurse(recurse, 0);
    return out;
}

Spectrum matching_spectrum(const ColoredBipartiteGraph& g, const PerfectMatching& m) {
    Spectrum spectrum;
    spectrum.reserve(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) {
        auto color = g.edge_color(x, m.gamma[x]);
        if (!color) throw std::invalid_argument("matching uses a non-edge");
        spectrum.push_back(*color);
    }
    std::sort(spectrum.begin(), spectrum.end());
    return spectrum;
}

std::vector<EquivalenceClass> group_equivalence_classes(
    const ColoredBipartiteGraph& g, const std::vector<PerfectMatching>& matchings) {
    std::map<Spectrum, EquivalenceClass> by_spectrum;
    for (const PerfectMatching& m : matchings) {
        Spectrum s = matching_spectrum(g, m);
        auto [it, inserted] = by_spectrum.try_emplace(s);
        if (inserted) it->second.spectrum = s;
        it->second.members.push_back(m);
        it->second.signature += m.sign;
    }
    std::vector<EquivalenceClass> out;
    out.reserve(by_spectrum.size());
    for (auto& [_, cls] : by_spectrum) out.push_back(std::move(cls));
    return out;
}

NonsingularityCertificate is_nonsingular(const ColoredPatternMatrix& m,
                                         const MatchingOptions& options) {
    ColoredBipartiteGraph g = build_bipartite(m);
    auto matchings = enumerate_perfect_matchings(g, options);
    auto classes = group_equivalence_classes(g, matchings);

    NonsingularityCertificate cert;
    cert.classes.reserve(classes.size());
    std::vector<std::size_t> nonzero;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        cert.classes.push_back(ClassSummary{classes[i].spectrum, classes[i].signature,
                                            classes[i].members.size()});
        if (classes[i].signature != 0) nonzero.push_back(i);
    }

    if (matchings.empty()) {
        cert.verdict = false;
        cert.violated_condition = 1;
        return cert;
    }
    if (nonzero.size() != 1) {
        cert.verdict = false;
        cert.violated_condition = 2;
        cert.exhibit_classes = nonzero;
        return cert;
    }
    const std::size_t w = nonzero.front();
    for (ColorId color : cert.classes[w].spectrum)
        if (!color.solid() &&
            (cert.dashed_colors.empty() || cert.dashed_colors.back() != color))
            cert.dashed_colors.push_back(color);
    if (!cert.dashed_colors.empty()) {
        cert.verdict = false;
        cert.violated_condition = 3;
        cert.witness_class = w;
        return cert;
    }
    cert.verdict = true;
    cert.witness_class = w;
    return cert;
}

}  // namespace cpmat
