#pragma once

// The invariant suites, grouped the way the CLI reports them.

#include <string>
#include <vector>

#include "tau_atlas/gamma.hpp"

namespace tau_atlas {

struct VerifyOptions {
    int n = 2;
    Scalar p = 2;
    bool compare_fields = false;  // rerun over F_2 and F_3 and compare
    unsigned threads = 1;
    IsoOptions iso;
};

struct VerifyResult {
    std::vector<CheckReport> reports;
    bool ok() const;
};

// Resolutions of simples, Ext into Lambda, Ext/Tor comparisons over the
// tilting modules, the exclusive vanishing statements and the Euler form.
CheckReport verify_homological(const SttContext& ctx);

// Tilting axioms, End(T) = Lambda, the Hom(I_i, T) statements, chains along
// reduced words, regularity and P_n as a summand.  Expensive parts are
// limited to n <= 4.
CheckReport verify_tilting(const SttContext& ctx);

// Everything that should not depend on the field, in comparable form.
struct AtlasSummary {
    std::size_t tilt_count = 0;
    std::size_t stt_count = 0;
    std::set<std::pair<std::string, std::string>> tilt_edges;
    std::set<std::pair<std::string, std::string>> stt_edges;
    std::vector<std::string> fingerprints;  // per registry id
    std::vector<std::string> pair_fingerprints;  // per w in S_{n+1}, sorted summand fingerprints

    bool operator==(const AtlasSummary&) const = default;
};
AtlasSummary summarize(const SttContext& ctx, const SttCatalog& cat);

CheckReport compare_fields(int n, unsigned threads = 1);

VerifyResult run_verify(const VerifyOptions& opts);

}  // namespace tau_atlas
