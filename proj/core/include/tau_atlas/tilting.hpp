#pragma once

// Tilting ideals I(w), w in S_n, and their Hasse quiver.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tau_atlas/algebra.hpp"
#include "tau_atlas/hasse.hpp"
#include "tau_atlas/module.hpp"
#include "tau_atlas/report.hpp"
#include "tau_atlas/symgroup.hpp"

namespace tau_atlas {

// Product I_{i1} ... I_{il} along an arbitrary word (Lambda for the empty word).
TwoSidedIdeal ideal_of_gen_word(const AlgebraPtr& a, const GenWord& word);
// Same, along the canonical reduced word of w; w must have degree n.
TwoSidedIdeal ideal_of_word(const AlgebraPtr& a, const Permutation& w);

// T_i = e_i T for i = 1..n.
std::vector<Module> ideal_summands(const TwoSidedIdeal& t);

struct TiltingCheck {
    bool projective_dim_ok = false;  // pd T <= 1
    bool ext_vanishes = false;       // Ext^1(T, T) = 0
    bool summands_ok = false;        // n pairwise non-isomorphic indecomposables
    std::size_t distinct_summands = 0;
    std::string failure;

    bool ok() const { return projective_dim_ok && ext_vanishes && summands_ok; }
};

// `summands` must be indecomposable (certified by simple socle or top).
TiltingCheck check_tilting(const std::vector<Module>& summands);
bool is_tilting(const TwoSidedIdeal& t);

enum class Side { Right, Left };

// Right: Hom_A(I_i, T) over right modules, realized as {x : x I_i in T}.
// Left:  Hom_{A^op}(I_i, T), realized as {x : I_i x in T}.
// Both contain T and are two-sided ideals.
TwoSidedIdeal hom_from_ideal(const AlgebraPtr& a, int i, const TwoSidedIdeal& t, Side side = Side::Right);

// T as a right module over the opposite algebra (a left A-module).
Module left_ideal_module(const TwoSidedIdeal& t);

struct TiltCatalog {
    AlgebraPtr algebra;
    std::vector<Permutation> words;     // w, in length-lex order of discovery
    std::vector<TwoSidedIdeal> ideals;  // ideals[k] = I(words[k])

    std::optional<std::size_t> find(const TwoSidedIdeal& t) const;
    std::optional<std::size_t> find(const Permutation& w) const;

    // Index of mu_i(T): I_i T when that differs from T, else the upper neighbour.
    std::size_t mutate(std::size_t k, int i) const;

    std::map<Vec, std::size_t> by_space;  // first echelon row concatenation -> index
    std::map<Permutation, std::size_t> by_word;
    std::vector<std::vector<std::size_t>> mutation;  // [k][i-1]
};

// All n! ideals; throws if two words give the same ideal or the count is off.
TiltCatalog tilt_enumerate(const AlgebraPtr& a);

// Arrows T -> I_i T (labelled i) for I_i T != T; vertex labels are one-line
// permutations.  Every upper neighbour is cross-checked through
// hom_from_ideal(..., Side::Left).
HassePoset tilt_hasse(const TiltCatalog& cat, CheckReport* report = nullptr);

CheckReport check_semigroup_relations(const AlgebraPtr& a);

}  // namespace tau_atlas
