#pragma once

// Isomorphism testing and catalog-based splitting into indecomposables.

#include <cstddef>
#include <cstdint>
#include <map>
#include <atomic>
#include <mutex>
#include <shared_mutex>
#include <optional>
#include <vector>

#include "tau_atlas/module.hpp"

namespace tau_atlas {

struct IsoOptions {
    std::size_t exhaustive_budget = 4096;  // max p^dim Hom searched exhaustively
    std::size_t samples = 256;
    std::uint64_t seed = 1;
};

struct IsoResult {
    bool isomorphic = false;
    // False only when a negative answer came from random sampling.
    bool certified = true;
    std::optional<ModuleMap> map;
};

// A simple socle or a simple top forces End(M) to be local.
bool certified_indecomposable(const Module& m);

// With a local endomorphism ring the non-invertible maps M -> N form a proper
// subspace of Hom(M, N) whenever M and N are isomorphic, so some basis
// element is invertible; that case needs no search.
IsoResult find_isomorphism(const Module& m, const Module& n, const IsoOptions& opts = {});
bool is_isomorphic(const Module& m, const Module& n, const IsoOptions& opts = {});

struct SplitResult {
    std::vector<std::size_t> parts;  // catalog indices, one per summand copy
    ModuleMap iso;                   // (+) catalog[parts[k]] -> M

    std::map<std::size_t, std::size_t> multiplicities() const;
};

// Writes M as a sum of catalog entries; throws std::runtime_error when the
// remainder matches nothing.  The returned isomorphism is verified.
SplitResult split_indecomposables(const Module& m, const std::vector<Module>& catalog,
                                  const IsoOptions& opts = {});

// Indecomposable modules up to isomorphism, with stable integer ids
// (1, 2, ...).  Safe for concurrent use.
class IsoRegistry {
public:
    explicit IsoRegistry(IsoOptions opts = {}) : opts_(opts) {}

    // Id of the class of m, registering it if new.
    std::size_t intern(const Module& m);
    std::optional<std::size_t> find(const Module& m) const;

    Module get(std::size_t id) const;
    std::size_t size() const;
    std::vector<Module> modules() const;  // index id - 1

    // Every search so far was exhaustive or certified by a local End ring.
    bool all_certified() const;

private:
    std::optional<std::size_t> find_locked(const Module& m, const Fingerprint& fp) const;

    IsoOptions opts_;
    mutable std::shared_mutex mu_;
    std::vector<Module> modules_;
    std::map<Fingerprint, std::vector<std::size_t>> by_fp_;
    mutable std::atomic<bool> uncertified_{false};
};

}  // namespace tau_atlas
