#pragma once

// Support tau-tilting pairs over the Auslander algebra.
//
// A pair is stored by coordinates 1..n.  Coordinate k holds the registry id
// of an indecomposable summand, or 0 when that coordinate has been moved to
// the projective part.  Mutation mu_k acts on coordinate k.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tau_atlas/hasse.hpp"
#include "tau_atlas/iso.hpp"
#include "tau_atlas/report.hpp"
#include "tau_atlas/symgroup.hpp"
#include "tau_atlas/tilting.hpp"

namespace tau_atlas {

struct SttPair {
    std::vector<std::size_t> slots;

    // Sorted nonzero ids; the support complement is determined by the module.
    std::vector<std::size_t> key() const;
    std::size_t summand_count() const;
    bool operator==(const SttPair&) const = default;
};

struct Approximation {
    std::vector<std::size_t> copies;  // index into the target list, one per summand copy
    ModuleMap map;                    // X -> (+) targets[copies]
    Module target;
};

// Minimal left add(V)-approximation of X, V given by its indecomposable summands.
Approximation min_left_approx(const Module& x, const std::vector<Module>& v);

class SttContext {
public:
    explicit SttContext(AlgebraPtr a, IsoOptions opts = {});

    const AlgebraPtr& algebra() const { return alg_; }
    int n() const { return alg_->n(); }
    const TiltCatalog& tilts() const { return tilts_; }
    const IsoRegistry& registry() const { return registry_; }
    const std::vector<Module>& catalog() const { return catalog_; }  // index id - 1
    const IsoOptions& iso_options() const { return opts_; }

    // Registry ids of T_i and overline T_i for tilting ideal k (0 if zero).
    std::size_t summand_id(std::size_t k, int i) const { return t_ids_[k][static_cast<std::size_t>(i - 1)]; }
    std::size_t bar_id(std::size_t k, int i) const { return i == 0 ? 0 : bar_ids_[k][static_cast<std::size_t>(i - 1)]; }

    const Module& summand(std::size_t id) const { return catalog_.at(id - 1); }
    std::vector<Module> summands(const SttPair& u) const;
    Module module(const SttPair& u) const;
    std::vector<int> support_complement(const SttPair& u) const;

    // mu_{[i+1,n]}(T) for the k-th tilting ideal.
    SttPair mu_interval(std::size_t k, int i) const;
    SttPair tilting_pair(std::size_t k) const { return mu_interval(k, n()); }
    SttPair top_pair() const;  // Lambda

    // I(w) for w in S_{n+1} through the coset factorization.
    SttPair of_word(const Permutation& w) const;

    // (i, tilting index) with mu_interval(k, i) == u.
    std::optional<std::pair<int, std::size_t>> classify(const SttPair& u) const;

    bool left_mutable(const SttPair& u, int k) const;
    // Generic mutation by minimal left approximation; nullopt when
    // coordinate k is empty or not left mutable.
    std::optional<SttPair> left_mutation(const SttPair& u, int k) const;

    // Fac U inside Fac V.
    bool leq(const SttPair& u, const SttPair& v) const;

private:
    std::size_t identify(const Module& y) const;

    AlgebraPtr alg_;
    IsoOptions opts_;
    TiltCatalog tilts_;
    TwoSidedIdeal m_;
    IsoRegistry registry_;
    std::vector<Module> catalog_;
    std::vector<std::vector<std::size_t>> t_ids_;
    std::vector<std::vector<std::size_t>> bar_ids_;
    std::map<std::vector<std::size_t>, std::pair<int, std::size_t>> classes_;
};

struct SttCatalog {
    std::vector<SttPair> pairs;                       // discovery order
    std::map<std::vector<std::size_t>, std::size_t> index;
    std::vector<std::vector<std::size_t>> left;       // [k][j-1], npos when absent
    std::vector<std::vector<std::size_t>> right;      // inverse edges
    std::vector<Permutation> words;                   // words[k] in S_{n+1}
    HassePoset hasse;                                 // labels w=[...], edge label = mutated coordinate
    std::vector<std::string> problems;                // inconsistencies met while building

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::optional<std::size_t> find(const SttPair& u) const;
    // Total mutation: left when possible, else the unique incoming edge.
    std::size_t mutate(std::size_t k, int j) const;
};

// Breadth-first search downward from Lambda by generic left mutation.
SttCatalog enumerate_stt(const SttContext& ctx, unsigned threads = 1);

CheckReport verify_pairs(const SttContext& ctx, const SttCatalog& cat);
CheckReport verify_anti_isomorphism(const SttContext& ctx, const SttCatalog& cat);
CheckReport verify_mutation_relations(const SttContext& ctx, const SttCatalog& cat);
// Interval formula and index shifts against the generic engine.
CheckReport verify_engine_agreement(const SttContext& ctx, const SttCatalog& cat);
// Hasse quiver recomputed from Fac inclusions.
CheckReport verify_generation_order(const SttContext& ctx, const SttCatalog& cat);
// Arbitrary words up to the given length evaluate like their reductions.
CheckReport verify_words(const SttContext& ctx, const SttCatalog& cat, std::size_t max_length);

}  // namespace tau_atlas
