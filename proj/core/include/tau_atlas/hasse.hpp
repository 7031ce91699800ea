#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tau_atlas {

// Covering-relation digraph of a finite poset.  Edges point from the larger
// element to the smaller one; `edge_labels` (when non-empty) carries the
// generator or mutation coordinate that produced each edge.
struct HassePoset {
    using Edge = std::pair<std::size_t, std::size_t>;

    std::vector<std::string> labels;
    std::vector<Edge> edges;
    std::vector<int> edge_labels;

    std::size_t vertex_count() const { return labels.size(); }
    std::size_t edge_count() const { return edges.size(); }

    std::vector<std::size_t> sources() const;
    std::vector<std::size_t> sinks() const;
    std::vector<std::size_t> undirected_degrees() const;
    std::set<Edge> edge_set() const { return {edges.begin(), edges.end()}; }

    // Edges keyed by vertex labels, e.g. for comparing posets built independently.
    std::set<std::pair<std::string, std::string>> labeled_edges() const;

    // Reversed copy.
    HassePoset opposite() const;

    // Stable ordering: vertices sorted by label, edges sorted.
    void canonicalize();

    std::string to_dot(const std::string& graph_name, const std::vector<std::string>& extra = {}) const;
};

// Hasse quiver of a finite poset given by a "less or equal" predicate on indices.
template <class Leq>
HassePoset hasse_from_order(std::vector<std::string> labels, Leq&& leq) {
    const std::size_t n = labels.size();
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && leq(a, b)) lt[a][b] = true;  // a < b
    HassePoset h;
    h.labels = std::move(labels);
    for (std::size_t big = 0; big < n; ++big)
        for (std::size_t small = 0; small < n; ++small) {
            if (!lt[small][big]) continue;
            bool cover = true;
            for (std::size_t mid = 0; mid < n && cover; ++mid)
                if (lt[small][mid] && lt[mid][big]) cover = false;
            if (cover) h.edges.emplace_back(big, small);
        }
    return h;
}

}  // namespace tau_atlas
