#include "tau_atlas/serialize.hpp"

#include <algorithm>

#include <json.hpp>

namespace tau_atlas {

using nlohmann::json;

namespace {

json module_obj(const Module& m) {
    json factors = json::object();
    for (int v = 1; v <= m.n(); ++v)
        if (m.dim(v)) factors[std::to_string(v)] = m.dim(v);
    return {{"dim_vector", m.dims()},
            {"comp_factors", factors},
            {"radical_layers", radical_layers(m)},
            {"socle_layers", socle_layers(m)},
            {"layers", radical_layer_string(m)},
            {"provenance", m.provenance()}};
}

json ideal_obj(const TiltCatalog& cat, std::size_t k) {
    json summands = json::array(), dims = json::array();
    for (const auto& m : ideal_summands(cat.ideals[k])) {
        dims.push_back(m.dims());
        summands.push_back(module_obj(m));
    }
    return {{"word", canonical_reduced_word(cat.words[k]).letters},
            {"permutation", cat.words[k].images()},
            {"ideal_dim", cat.ideals[k].dim()},
            {"summand_dim_vectors", dims},
            {"summands", summands}};
}

std::string key_string(const SttContext& ctx, const SttPair& u) {
    std::vector<std::string> fps;
    for (const auto& m : ctx.summands(u)) fps.push_back(fingerprint(m).str());
    std::sort(fps.begin(), fps.end());
    std::string s;
    for (const auto& f : fps) s += (s.empty() ? "" : " | ") + f;
    s += (s.empty() ? "0" : "") + std::string(" ; P{");
    auto sc = ctx.support_complement(u);
    for (std::size_t k = 0; k < sc.size(); ++k) s += (k ? "," : "") + std::to_string(sc[k]);
    return s + "}";
}

json pair_obj(const SttContext& ctx, const SttPair& u) {
    json summands = json::array();
    for (auto id : u.slots) summands.push_back(id ? module_obj(ctx.summand(id)) : json(nullptr));
    json out = {{"key", key_string(ctx, u)}, {"summands", summands}, {"support_complement", ctx.support_complement(u)}};
    if (auto cls = ctx.classify(u)) {
        out["i"] = cls->first;
        out["base_word"] = ctx.tilts().words[cls->second].images();
        out["word"] = compose(coset_prefix(ctx.n(), cls->first), embed(ctx.tilts().words[cls->second], ctx.n() + 1)).images();
    }
    return out;
}

}  // namespace

std::string algebra_json(const Algebra& a) {
    json basis = json::array(), idem = json::array();
    for (const auto& b : a.basis()) basis.push_back({{"start", b.label.start}, {"downs", b.label.downs}, {"ups", b.label.ups}});
    for (int v = 1; v <= a.n(); ++v) idem.push_back(a.idempotent(v) ? json(*a.idempotent(v)) : json(nullptr));
    return json{{"n", a.n()}, {"p", a.field().p()}, {"dim", a.dim()}, {"basis", basis}, {"idempotents", idem}}.dump(2) + "\n";
}

std::string module_json(const Module& m) { return module_obj(m).dump(2) + "\n"; }

std::string tilt_catalog_json(const TiltCatalog& cat) {
    json out = json::array();
    for (std::size_t k = 0; k < cat.ideals.size(); ++k) out.push_back(ideal_obj(cat, k));
    return out.dump(2) + "\n";
}

std::string ideal_json(const TiltCatalog& cat, std::size_t k) { return ideal_obj(cat, k).dump(2) + "\n"; }

std::string stt_catalog_json(const SttContext& ctx, const SttCatalog& cat) {
    json out = json::array();
    for (const auto& u : cat.pairs) out.push_back(pair_obj(ctx, u));
    return out.dump(2) + "\n";
}

std::string pair_json(const SttContext& ctx, const SttPair& u) { return pair_obj(ctx, u).dump(2) + "\n"; }

std::string gamma_catalog_json(const GammaBridge& bridge, const SttCatalog& cat) {
    json out = json::array();
    for (std::size_t k = 0; k < cat.pairs.size(); ++k) {
        SttPair g = bridge.to_gamma(cat.pairs[k]);
        json summands = json::array();
        std::vector<int> complement;
        for (auto id : g.slots) summands.push_back(id ? module_obj(bridge.summand(id)) : json(nullptr));
        Module m = bridge.module(g);
        for (int v = 1; v <= m.n(); ++v)
            if (!m.dim(v)) complement.push_back(v);
        out.push_back({{"word", cat.words[k].images()},
                       {"source_key", key_string(bridge.context(), cat.pairs[k])},
                       {"summands", summands},
                       {"support_complement", complement}});
    }
    return out.dump(2) + "\n";
}

std::string hasse_json(const HassePoset& h) {
    json edges = json::array();
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        json edge = {{"from", h.edges[e].first}, {"to", h.edges[e].second}};
        if (!h.edge_labels.empty()) edge["label"] = h.edge_labels[e];
        edges.push_back(edge);
    }
    return json{{"vertices", h.labels}, {"edges", edges}}.dump(2) + "\n";
}

std::string report_json(const VerifyResult& res, const VerifyOptions& opts) {
    json reports = json::array();
    for (const auto& r : res.reports)
        reports.push_back({{"name", r.name}, {"checked", r.checked}, {"ok", r.ok()}, {"failures", r.failures}});
    return json{{"n", opts.n}, {"p", opts.p}, {"ok", res.ok()}, {"reports", reports}}.dump(2) + "\n";
}

std::string hasse_dot(const HassePoset& h, const std::string& name, const std::vector<std::string>& extra) {
    HassePoset labelled = h;
    for (auto& l : labelled.labels) l = "w=" + l;
    return labelled.to_dot(name, extra);
}

}  // namespace tau_atlas
