#pragma once

// JSON and DOT renderings.  All output is deterministic for fixed inputs.

#include <string>

#include "tau_atlas/verify.hpp"

namespace tau_atlas {

std::string algebra_json(const Algebra& a);
std::string module_json(const Module& m);
std::string tilt_catalog_json(const TiltCatalog& cat);
std::string ideal_json(const TiltCatalog& cat, std::size_t k);
std::string stt_catalog_json(const SttContext& ctx, const SttCatalog& cat);
std::string pair_json(const SttContext& ctx, const SttPair& u);
std::string gamma_catalog_json(const GammaBridge& bridge, const SttCatalog& cat);
std::string hasse_json(const HassePoset& h);
std::string report_json(const VerifyResult& res, const VerifyOptions& opts);

// Vertices labelled w=[...]; `extra` adds a second line per vertex.
std::string hasse_dot(const HassePoset& h, const std::string& name, const std::vector<std::string>& extra = {});

}  // namespace tau_atlas
