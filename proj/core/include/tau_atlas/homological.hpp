#pragma once

// Minimal projective resolutions, Ext, Tor and the Auslander-Reiten translate.

#include <cstddef>
#include <vector>

#include "tau_atlas/module.hpp"

namespace tau_atlas {

// A map between free modules (+)_c P_{src[c]} -> (+)_r P_{dst[r]}.  The
// generator e_{src[c]} goes to sum_r entry[c][r], with entry[c][r] an
// element of e_{dst[r]} A e_{src[c]} (algebra coordinates).
struct FreeMap {
    std::vector<int> src;
    std::vector<int> dst;
    std::vector<std::vector<Vec>> entry;
};

Module free_module(const AlgebraPtr& a, const std::vector<int>& generators);
ModuleMap free_map_as_module_map(const AlgebraPtr& a, const FreeMap& d);

// Coordinates of x in e_i A e_v inside projective(a, i) at vertex v, and back.
Vec projective_coordinates(const Algebra& a, int i, int v, const Vec& x);
Vec projective_element(const Algebra& a, int i, int v, const Vec& coords);

struct ProjectiveResolution {
    std::vector<std::vector<int>> terms;  // generator vertices of P_0, P_1, ...
    std::vector<FreeMap> differentials;   // differentials[k]: P_{k+1} -> P_k
    bool complete = false;                // the last computed kernel was zero

    std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }
    const std::vector<int>& term(std::size_t k) const;  // empty beyond the end
};

// Minimal resolution with at most `max_terms` terms, built by lifting tops.
ProjectiveResolution resolution(const Module& m, std::size_t max_terms);
ProjectiveResolution presentation(const Module& m);  // P_1 -> P_0 -> M
std::size_t projective_dimension(const Module& m, std::size_t bound = 4);  // bound+1 if not reached

std::size_t ext_dim(const Module& m, const Module& n, int k);
// dim Tor_k(M, A/J), with P (x) A/J realized as P/PJ.
std::size_t tor_dim(const Module& m, const TwoSidedIdeal& j, int k);
std::size_t tor_dim(const Module& m, int i, int k);  // with S_i = A/I_i

// Tr M over the opposite algebra, and tau M = D Tr M.
Module transpose(const Module& m);
Module tau(const Module& m);
bool is_tau_rigid(const Module& m);

}  // namespace tau_atlas
