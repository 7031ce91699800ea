#include "tau_atlas/iso.hpp"

#include <random>
#include <stdexcept>

namespace tau_atlas {

namespace {

bool dims_fit(const Module& z, const Module& r) {
    for (int v = 1; v <= z.n(); ++v)
        if (z.dim(v) > r.dim(v)) return false;
    return true;
}

// Calls visit(coeffs) for every nonzero coefficient vector of length d.
template <class Visit>
bool for_each_combination(const Field& f, std::size_t d, Visit&& visit) {
    Vec c(d, 0);
    while (true) {
        std::size_t k = 0;
        while (k < d && c[k] == f.p() - 1) c[k++] = 0;
        if (k == d) return false;
        ++c[k];
        if (visit(c)) return true;
    }
}

Vec random_vec(const Field& f, std::size_t d, std::mt19937_64& rng) {
    std::uniform_int_distribution<Scalar> pick(0, f.p() - 1);
    Vec c(d);
    for (auto& x : c) x = pick(rng);
    return c;
}

}  // namespace

bool certified_indecomposable(const Module& m) { return !m.is_zero() && (has_simple_socle(m) || has_simple_top(m)); }

IsoResult find_isomorphism(const Module& m, const Module& n, const IsoOptions& opts) {
    IsoResult out;
    if (m.algebra_ptr() != n.algebra_ptr()) throw std::invalid_argument("find_isomorphism: modules over different algebras");
    if (m.dims() != n.dims()) return out;
    if (m.is_zero()) {
        out.isomorphic = true;
        out.map = zero_map(m, n);
        return out;
    }
    if (fingerprint(m) != fingerprint(n)) return out;
    auto basis = hom_basis(m, n);
    if (basis.empty()) return out;
    for (const auto& f : basis)
        if (f.is_isomorphism()) {
            out.isomorphic = true;
            out.map = f;
            return out;
        }
    if (certified_indecomposable(m)) return out;

    const Field& fld = m.field();
    const std::size_t d = basis.size();
    double space = 1;
    for (std::size_t k = 0; k < d && space <= static_cast<double>(opts.exhaustive_budget); ++k) space *= fld.p();
    if (space <= static_cast<double>(opts.exhaustive_budget)) {
        for_each_combination(fld, d, [&](const Vec& c) {
            auto f = linear_combination(fld, basis, c);
            if (!f.is_isomorphism()) return false;
            out.isomorphic = true;
            out.map = std::move(f);
            return true;
        });
        return out;
    }
    std::mt19937_64 rng(opts.seed);
    for (std::size_t s = 0; s < opts.samples; ++s) {
        auto f = linear_combination(fld, basis, random_vec(fld, d, rng));
        if (f.is_isomorphism()) {
            out.isomorphic = true;
            out.map = std::move(f);
            return out;
        }
    }
    out.certified = false;
    return out;
}

bool is_isomorphic(const Module& m, const Module& n, const IsoOptions& opts) { return find_isomorphism(m, n, opts).isomorphic; }

std::map<std::size_t, std::size_t> SplitResult::multiplicities() const {
    std::map<std::size_t, std::size_t> out;
    for (auto k : parts) ++out[k];
    return out;
}

SplitResult split_indecomposables(const Module& m, const std::vector<Module>& catalog, const IsoOptions& opts) {
    SplitResult res;
    Module r = m;
    ModuleMap emb = identity_map(m);  // r -> m
    std::vector<ModuleMap> pieces;    // catalog[parts[k]] -> m
    std::mt19937_64 rng(opts.seed);

    while (!r.is_zero()) {
        bool found = false;
        // the usual case: what is left is a single catalog entry
        if (certified_indecomposable(r)) {
            for (std::size_t k = 0; k < catalog.size() && !found; ++k) {
                if (catalog[k].dims() != r.dims()) continue;
                auto iso = find_isomorphism(catalog[k], r, opts);
                if (!iso.isomorphic) continue;
                res.parts.push_back(k);
                pieces.push_back(compose(emb, *iso.map));
                r = zero_module(m.algebra_ptr());
                found = true;
            }
            if (found) break;
        }
        for (std::size_t k = 0; k < catalog.size() && !found; ++k) {
            const Module& z = catalog[k];
            if (z.is_zero() || !dims_fit(z, r)) continue;
            auto fs = hom_basis(z, r);
            if (fs.empty()) continue;
            auto gs = hom_basis(r, z);
            if (gs.empty()) continue;
            std::optional<std::pair<ModuleMap, ModuleMap>> split;
            for (std::size_t i = 0; i < fs.size() && !split; ++i)
                for (std::size_t j = 0; j < gs.size() && !split; ++j)
                    if (compose(gs[j], fs[i]).is_isomorphism()) split.emplace(fs[i], gs[j]);
            if (!split && !certified_indecomposable(z)) {
                const Field& fld = m.field();
                for (std::size_t s = 0; s < opts.samples && !split; ++s) {
                    auto f = linear_combination(fld, fs, random_vec(fld, fs.size(), rng));
                    auto g = linear_combination(fld, gs, random_vec(fld, gs.size(), rng));
                    if (compose(g, f).is_isomorphism()) split.emplace(std::move(f), std::move(g));
                }
            }
            if (!split) continue;
            auto& [f, g] = *split;
            ModuleMap h = compose(inverse_map(compose(g, f)), g);  // r -> z, left inverse of f
            auto ker = kernel(h, r);
            res.parts.push_back(k);
            pieces.push_back(compose(emb, f));
            emb = compose(emb, ker.inclusion);
            r = std::move(ker.module);
            found = true;
        }
        if (!found) throw std::runtime_error("split_indecomposables: remainder " + fingerprint(r).str() + " not in catalog");
    }

    std::vector<Module> parts;
    for (auto k : res.parts) parts.push_back(catalog[k]);
    res.iso = pieces.empty() ? zero_map(m, m) : map_from_sum(pieces);
    Module sum = direct_sum(m.algebra_ptr(), parts);
    if (!is_module_map(sum, m, res.iso) || !res.iso.is_isomorphism())
        throw std::logic_error("split_indecomposables: assembled map is not an isomorphism");
    return res;
}

std::optional<std::size_t> IsoRegistry::find_locked(const Module& m, const Fingerprint& fp) const {
    auto it = by_fp_.find(fp);
    if (it == by_fp_.end()) return std::nullopt;
    for (auto id : it->second) {
        auto r = find_isomorphism(modules_[id - 1], m, opts_);
        if (!r.certified) uncertified_ = true;
        if (r.isomorphic) return id;
    }
    return std::nullopt;
}

std::size_t IsoRegistry::intern(const Module& m) {
    Fingerprint fp = fingerprint(m);
    std::lock_guard lock(mu_);
    if (auto id = find_locked(m, fp)) return *id;
    modules_.push_back(m);
    by_fp_[fp].push_back(modules_.size());
    return modules_.size();
}

std::optional<std::size_t> IsoRegistry::find(const Module& m) const {
    Fingerprint fp = fingerprint(m);
    std::shared_lock lock(mu_);
    return find_locked(m, fp);
}

Module IsoRegistry::get(std::size_t id) const {
    std::shared_lock lock(mu_);
    return modules_.at(id - 1);
}

std::size_t IsoRegistry::size() const {
    std::shared_lock lock(mu_);
    return modules_.size();
}

std::vector<Module> IsoRegistry::modules() const {
    std::shared_lock lock(mu_);
    return modules_;
}

bool IsoRegistry::all_certified() const {
    std::shared_lock lock(mu_);
    return !uncertified_;
}

}  // namespace tau_atlas
