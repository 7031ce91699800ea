#include "tau_atlas/hasse.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tau_atlas {

std::vector<std::size_t> HassePoset::sources() const {
    std::vector<std::size_t> indeg(vertex_count(), 0), out;
    for (auto [a, b] : edges) ++indeg[b];
    for (std::size_t v = 0; v < vertex_count(); ++v)
        if (indeg[v] == 0) out.push_back(v);
    return out;
}

std::vector<std::size_t> HassePoset::sinks() const {
    std::vector<std::size_t> outdeg(vertex_count(), 0), out;
    for (auto [a, b] : edges) ++outdeg[a];
    for (std::size_t v = 0; v < vertex_count(); ++v)
        if (outdeg[v] == 0) out.push_back(v);
    return out;
}

std::vector<std::size_t> HassePoset::undirected_degrees() const {
    std::vector<std::size_t> deg(vertex_count(), 0);
    for (auto [a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    return deg;
}

std::set<std::pair<std::string, std::string>> HassePoset::labeled_edges() const {
    std::set<std::pair<std::string, std::string>> out;
    for (auto [a, b] : edges) out.emplace(labels[a], labels[b]);
    return out;
}

HassePoset HassePoset::opposite() const {
    HassePoset h = *this;
    for (auto& e : h.edges) std::swap(e.first, e.second);
    return h;
}

void HassePoset::canonicalize() {
    std::vector<std::size_t> order(vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return labels[a] < labels[b]; });
    std::vector<std::size_t> where(vertex_count());
    for (std::size_t k = 0; k < order.size(); ++k) where[order[k]] = k;
    std::vector<std::string> new_labels(vertex_count());
    for (std::size_t k = 0; k < order.size(); ++k) new_labels[k] = labels[order[k]];
    std::vector<std::pair<Edge, int>> tagged;
    for (std::size_t e = 0; e < edges.size(); ++e)
        tagged.push_back({{where[edges[e].first], where[edges[e].second]}, edge_labels.empty() ? 0 : edge_labels[e]});
    std::sort(tagged.begin(), tagged.end());
    labels = std::move(new_labels);
    edges.clear();
    std::vector<int> new_edge_labels;
    for (auto& [e, l] : tagged) {
        edges.push_back(e);
        new_edge_labels.push_back(l);
    }
    if (!edge_labels.empty()) edge_labels = std::move(new_edge_labels);
}

std::string HassePoset::to_dot(const std::string& graph_name, const std::vector<std::string>& extra) const {
    std::ostringstream os;
    os << "digraph " << graph_name << " {\n";
    os << "  rankdir=TB;\n";
    for (std::size_t v = 0; v < vertex_count(); ++v) {
        os << "  v" << v << " [label=\"" << labels[v];
        if (v < extra.size() && !extra[v].empty()) os << "\\n" << extra[v];
        os << "\"];\n";
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
        os << "  v" << edges[e].first << " -> v" << edges[e].second;
        if (!edge_labels.empty()) os << " [label=\"" << edge_labels[e] << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace tau_atlas
