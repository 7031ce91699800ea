#pragma once

// Passage to the preprojective algebra Gamma = Lambda / L.

#include <cstddef>
#include <vector>

#include "tau_atlas/stt.hpp"

namespace tau_atlas {

class GammaBridge {
public:
    explicit GammaBridge(const SttContext& ctx);

    const SttContext& context() const { return ctx_; }
    const AlgebraPtr& gamma() const { return gamma_; }
    const TwoSidedIdeal& ideal_l() const { return l_; }

    // X / XL as a Gamma-module.
    Module to_gamma(const Module& x) const;
    // Coordinates hold ids of the Gamma registry (0 for zero images).
    SttPair to_gamma(const SttPair& u) const;
    std::size_t gamma_id(std::size_t lambda_id) const { return ids_.at(lambda_id - 1); }

    const IsoRegistry& registry() const { return registry_; }
    const Module& summand(std::size_t gid) const { return catalog_.at(gid - 1); }
    std::vector<Module> summands(const SttPair& g) const;
    Module module(const SttPair& g) const;

private:
    const SttContext& ctx_;
    AlgebraPtr gamma_;
    TwoSidedIdeal l_;
    IsoRegistry registry_;
    std::vector<Module> catalog_;
    std::vector<std::size_t> ids_;
};

// Injectivity on the catalog, arrows to arrows; with check_order the Gamma
// poset is recomputed from Fac inclusions over Gamma.
CheckReport verify_gamma_bijection(const GammaBridge& bridge, const SttCatalog& cat, bool check_order);
CheckReport gamma_tau_rigidity_check(const GammaBridge& bridge, const SttCatalog& cat);
// T L = L, socles of T_i / L_i, recoverability, overline summands fixed.
CheckReport verify_gamma_summands(const GammaBridge& bridge);

}  // namespace tau_atlas
