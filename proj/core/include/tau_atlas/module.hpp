#pragma once

// Finite-dimensional right modules, given vertex by vertex.
//
// A module M stores dim M e_v for every vertex and, for every arrow
// alpha: u -> v, the matrix of m |-> m * alpha from M e_u to M e_v acting on
// row vectors.  Longer paths act by the product of their arrow matrices in
// travel order, so rho(xy) = rho(x) rho(y).

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "tau_atlas/algebra.hpp"
#include "tau_atlas/matrix.hpp"

namespace tau_atlas {

// One subspace per vertex (index v-1), each inside the corresponding vertex space.
using VertexSpaces = std::vector<Echelon>;

class Module {
public:
    Module() = default;
    Module(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> arrow_actions,
           std::string provenance = {});

    const Algebra& algebra() const { return *alg_; }
    const AlgebraPtr& algebra_ptr() const { return alg_; }
    int n() const { return alg_->n(); }
    const Field& field() const { return alg_->field(); }

    std::size_t dim(int v) const { return dims_.at(static_cast<std::size_t>(v - 1)); }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t total_dim() const;
    bool is_zero() const { return total_dim() == 0; }

    const Matrix& arrow(std::size_t a) const { return arrows_.at(a); }
    const std::vector<Matrix>& arrow_actions() const { return arrows_; }

    // Action of a basis element x: u -> v, as a dim(u) x dim(v) matrix.
    Matrix act(std::size_t basis_index) const;
    // Action of the e_u x e_v component of an algebra element.
    Matrix act(const Vec& x, int u, int v) const;

    const std::string& provenance() const { return provenance_; }
    void set_provenance(std::string p) { provenance_ = std::move(p); }

    // Same vertex spaces and arrow matrices over another algebra with the
    // same arrow list (e.g. a quotient through which the action factors).
    Module rewrap(AlgebraPtr other) const;

private:
    AlgebraPtr alg_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> arrows_;
    std::string provenance_;
};

// blocks[v-1] is dim_v(source) x dim_v(target).
struct ModuleMap {
    std::vector<Matrix> blocks;

    bool is_zero() const;
    bool is_isomorphism() const;
};

ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // first f, then g
ModuleMap zero_map(const Module& m, const Module& n);
ModuleMap identity_map(const Module& m);
ModuleMap linear_combination(const Field& f, const std::vector<ModuleMap>& maps, const Vec& coeffs);
ModuleMap inverse_map(const ModuleMap& f);
bool is_module_map(const Module& m, const Module& n, const ModuleMap& f);
Vec flatten(const ModuleMap& f);

Module zero_module(const AlgebraPtr& a);
Module projective(const AlgebraPtr& a, int i);  // e_i A
Module simple(const AlgebraPtr& a, int i);
Module regular_module(const AlgebraPtr& a);
Module direct_sum(const AlgebraPtr& a, const std::vector<Module>& parts);

// Canonical maps for a direct sum of `parts`.
ModuleMap sum_injection(const std::vector<Module>& parts, std::size_t k);
ModuleMap sum_projection(const std::vector<Module>& parts, std::size_t k);
ModuleMap map_from_sum(const std::vector<ModuleMap>& maps);  // (f_1 ... f_k): (+)X_k -> N
ModuleMap map_into_sum(const std::vector<ModuleMap>& maps);  // (f_1; ...; f_k): M -> (+)Y_k

// The right module R with components R e_v, for R a subspace of A closed under
// right multiplication.  Vertex bases are the echelon rows of R e_v.
Module right_ideal_module(const AlgebraPtr& a, const Echelon& r, std::string provenance = {});
Module ideal_component(const TwoSidedIdeal& t, int i);  // e_i T
Module ideal_module(const TwoSidedIdeal& t);            // T as a right module

// Echelon bases of R e_v (in algebra coordinates); right_ideal_module uses
// them as vertex bases, so Echelon::coordinates gives module coordinates.
VertexSpaces right_ideal_bases(const Algebra& a, const Echelon& r);

VertexSpaces zero_spaces(const Module& m);
VertexSpaces full_spaces(const Module& m);
VertexSpaces sum_spaces(const VertexSpaces& a, const VertexSpaces& b);
std::vector<std::size_t> space_dims(const VertexSpaces& s);
std::size_t total_rank(const VertexSpaces& s);

VertexSpaces generate_submodule(const Module& m, const VertexSpaces& generators);

struct SubmoduleResult {
    Module module;
    ModuleMap inclusion;
};
struct QuotientResult {
    Module module;
    ModuleMap projection;
};
// `spaces` must already be closed under the action.
SubmoduleResult submodule(const Module& m, const VertexSpaces& spaces);
QuotientResult quotient(const Module& m, const VertexSpaces& spaces);

VertexSpaces image_spaces(const ModuleMap& f, const Module& target);
VertexSpaces kernel_spaces(const ModuleMap& f, const Module& source);
SubmoduleResult kernel(const ModuleMap& f, const Module& source);
SubmoduleResult image(const ModuleMap& f, const Module& target);
QuotientResult cokernel(const ModuleMap& f, const Module& target);

VertexSpaces radical_spaces(const Module& m);
VertexSpaces socle_spaces(const Module& m);
Module radical(const Module& m);
Module socle(const Module& m);
Module top(const Module& m);

// Dimension vectors of rad^k M / rad^{k+1} M and soc^{k+1} M / soc^k M.
std::vector<std::vector<std::size_t>> radical_layers(const Module& m);
std::vector<std::vector<std::size_t>> socle_layers(const Module& m);
bool has_simple_socle(const Module& m);
bool has_simple_top(const Module& m);

std::vector<ModuleMap> hom_basis(const Module& m, const Module& n);
std::size_t hom_dim(const Module& m, const Module& n);

// Sum of the images of all maps T -> X.
VertexSpaces trace(const Module& t, const Module& x);
bool in_fac(const Module& x, const Module& t);

// M / MJ.
QuotientResult act_quotient(const Module& m, const TwoSidedIdeal& j);

// Vector-space dual D M, a right module over the opposite algebra.
Module dual(const Module& m);

struct Fingerprint {
    std::vector<std::size_t> dims;
    std::vector<std::vector<std::size_t>> radical;
    std::vector<std::vector<std::size_t>> socle;

    std::string str() const;
    auto operator<=>(const Fingerprint&) const = default;
};
Fingerprint fingerprint(const Module& m);

// Layer strings such as "2/13/2/3": vertices of each radical layer, listed
// with multiplicity.
std::string radical_layer_string(const Module& m);

}  // namespace tau_atlas
