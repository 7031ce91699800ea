#include "tau_atlas/gamma.hpp"

#include <set>
#include <stdexcept>

#include "tau_atlas/homological.hpp"

namespace tau_atlas {

GammaBridge::GammaBridge(const SttContext& ctx)
    : ctx_(ctx), l_(ideal_L(ctx.algebra())), registry_(ctx.iso_options()) {
    gamma_ = quotient_algebra(ctx.algebra(), l_);
    for (const auto& x : ctx.catalog()) {
        Module g = to_gamma(x);
        g.set_provenance(x.provenance() + "/L");
        ids_.push_back(g.is_zero() ? 0 : registry_.intern(g));
    }
    catalog_ = registry_.modules();
}

Module GammaBridge::to_gamma(const Module& x) const { return act_quotient(x, l_).module.rewrap(gamma_); }

SttPair GammaBridge::to_gamma(const SttPair& u) const {
    SttPair g;
    for (auto id : u.slots) g.slots.push_back(id ? gamma_id(id) : 0);
    return g;
}

std::vector<Module> GammaBridge::summands(const SttPair& g) const {
    std::vector<Module> out;
    for (auto id : g.slots)
        if (id) out.push_back(summand(id));
    return out;
}

Module GammaBridge::module(const SttPair& g) const { return direct_sum(gamma_, summands(g)); }

CheckReport verify_gamma_bijection(const GammaBridge& bridge, const SttCatalog& cat, bool check_order) {
    CheckReport r("gamma bijection");
    std::vector<SttPair> images;
    std::set<std::vector<std::size_t>> keys;
    for (const auto& u : cat.pairs) {
        images.push_back(bridge.to_gamma(u));
        keys.insert(images.back().key());
        r.expect(images.back().summand_count() == u.summand_count(), "summand count changed");
        for (const auto& x : bridge.summands(images.back())) r.expect(certified_indecomposable(x), "image summand not indecomposable");
    }
    r.expect(keys.size() == cat.pairs.size(), "to_gamma is not injective on the catalog");
    r.expect(bridge.registry().all_certified(), "an isomorphism search over Gamma was not certified");
    if (!check_order) return r;
    auto leq = [&](std::size_t a, std::size_t b) {
        Module big = bridge.module(images[b]);
        for (const auto& x : bridge.summands(images[a]))
            if (!in_fac(x, big)) return false;
        return true;
    };
    auto h = hasse_from_order(cat.hasse.labels, leq);
    r.expect(h.edge_set() == cat.hasse.edge_set(), "Hasse arrows over Gamma differ from the image of the Lambda arrows");
    return r;
}

CheckReport gamma_tau_rigidity_check(const GammaBridge& bridge, const SttCatalog& cat) {
    CheckReport r("gamma tau-rigidity");
    for (std::size_t k = 0; k < cat.pairs.size(); ++k) {
        Module m = bridge.module(bridge.to_gamma(cat.pairs[k]));
        r.expect(is_tau_rigid(m), "image of w=" + cat.words[k].str() + " is not tau-rigid over Gamma");
    }
    return r;
}

CheckReport verify_gamma_summands(const GammaBridge& bridge) {
    CheckReport r("gamma summands");
    const SttContext& ctx = bridge.context();
    const int n = ctx.n();
    const auto& tilts = ctx.tilts();
    for (std::size_t k = 0; k < tilts.ideals.size(); ++k) {
        const std::string tag = " for I(" + tilts.words[k].str() + ")";
        r.expect(ideal_product(tilts.ideals[k], bridge.ideal_l()) == bridge.ideal_l(), "T L != L" + tag);
        for (int i = 1; i <= n; ++i) {
            Module g = bridge.summand(bridge.gamma_id(ctx.summand_id(k, i)));
            std::vector<std::size_t> s(static_cast<std::size_t>(n), 0);
            s[static_cast<std::size_t>(n - i)] = 1;
            r.expect(socle(g).dims() == s, "socle of T_" + std::to_string(i) + "/L_" + std::to_string(i) + tag);
            if (i == n) continue;
            if (auto b = ctx.bar_id(k, i)) {
                const Module& bar = ctx.summand(b);
                r.expect(bridge.to_gamma(bar).dims() == bar.dims(), "overline T_" + std::to_string(i) + " not fixed" + tag);
            }
        }
    }
    std::set<std::size_t> seen;
    std::size_t nonzero = 0;
    for (std::size_t id = 1; id <= ctx.catalog().size(); ++id)
        if (auto g = bridge.gamma_id(id)) {
            ++nonzero;
            seen.insert(g);
        }
    r.expect(seen.size() == nonzero, "X -> X/XL identifies two indecomposables");
    return r;
}

}  // namespace tau_atlas
