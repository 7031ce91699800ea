#pragma once

// Finite-dimensional basic algebras given by a path basis and a monomial
// multiplication table: the product of two basis elements is either zero or
// exactly one basis element.  Covers the Auslander algebra of K[x]/(x^n),
// its quotients by monomial ideals, and opposite algebras.

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tau_atlas/matrix.hpp"

namespace tau_atlas {

// Normal-form path b^s a^t from `start`: descend s steps, then ascend t.
struct Monomial {
    int start = 1;
    int downs = 0;
    int ups = 0;

    int valley() const { return start - downs; }
    int target() const { return start - downs + ups; }
    int length() const { return downs + ups; }
    std::string str() const;

    auto operator<=>(const Monomial&) const = default;
};

struct Arrow {
    int src;
    int tgt;
    std::string name;
    std::size_t element;  // basis index of the arrow
};

struct BasisElement {
    int src;
    int tgt;
    Monomial label;
    std::vector<std::size_t> word;  // arrow indices in travel order
};

class Algebra;
class TwoSidedIdeal;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra {
public:
    static constexpr std::ptrdiff_t kZero = -1;

    int n() const { return n_; }
    const Field& field() const { return field_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_opposite() const { return opposite_flag_; }
    const std::string& name() const { return name_; }

    const BasisElement& basis(std::size_t k) const { return basis_.at(k); }
    const std::vector<BasisElement>& basis() const { return basis_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    // Index of the product of two basis elements, or kZero.
    std::ptrdiff_t product(std::size_t x, std::size_t y) const { return table_[x * dim() + y]; }

    // Basis index of e_v, or nullopt if the idempotent vanishes here.
    std::optional<std::size_t> idempotent(int v) const;
    bool vertex_alive(int v) const { return idempotent(v).has_value(); }

    std::optional<std::size_t> index_of(const Monomial& m) const;
    std::size_t dim_between(int i, int j) const;  // dim e_i A e_j

    Vec unit(std::size_t k) const;
    Vec multiply(const Vec& x, const Vec& y) const;
    Vec left_idempotent(int v, const Vec& x) const;   // e_v x
    Vec right_idempotent(const Vec& x, int v) const;  // x e_v

    // The opposite algebra; same basis, reversed arrows, transposed table.
    AlgebraPtr opposite() const;

private:
    friend AlgebraPtr build_auslander(int n, Field field);
    friend AlgebraPtr quotient_algebra(const AlgebraPtr& a, const TwoSidedIdeal& j);
    friend AlgebraPtr make_opposite(const Algebra& a);
    friend AlgebraPtr finalize_algebra(std::shared_ptr<Algebra> a);

    int n_ = 0;
    Field field_{};
    std::string name_;
    bool opposite_flag_ = false;
    std::vector<BasisElement> basis_;
    std::vector<std::ptrdiff_t> table_;
    std::vector<std::ptrdiff_t> idem_;  // per vertex (0-based), kZero if dead
    std::vector<Arrow> arrows_;

    std::shared_ptr<const Algebra> op_;
    std::weak_ptr<const Algebra> op_of_;
};

// Product of two normal-form monomials in the Auslander algebra, or nullopt.
std::optional<Monomial> multiply_monomials(int n, const Monomial& x, const Monomial& y);

AlgebraPtr build_auslander(int n, Field field = Field(2));

// Verifies (xy)z = x(yz) on all basis triples.
bool is_associative(const Algebra& a);

class TwoSidedIdeal {
public:
    TwoSidedIdeal() = default;
    TwoSidedIdeal(AlgebraPtr algebra, Echelon space);

    const Algebra& algebra() const { return *alg_; }
    const AlgebraPtr& algebra_ptr() const { return alg_; }
    const Echelon& space() const { return space_; }
    std::size_t dim() const { return space_.rank(); }
    bool contains(const Vec& x) const { return space_.contains(x); }

    // True when spanned by basis monomials.
    bool is_monomial() const;

    // dim e_i J e_j, 1-based.
    std::size_t dim_between(int i, int j) const;

    bool operator==(const TwoSidedIdeal& rhs) const { return space_ == rhs.space_; }

private:
    AlgebraPtr alg_;
    Echelon space_;
};

TwoSidedIdeal two_sided_closure(const AlgebraPtr& a, const std::vector<Vec>& generators);
TwoSidedIdeal whole_algebra(const AlgebraPtr& a);
TwoSidedIdeal zero_ideal(const AlgebraPtr& a);
TwoSidedIdeal ideal_product(const TwoSidedIdeal& t, const TwoSidedIdeal& u);
bool is_two_sided(const TwoSidedIdeal& j);

// A / J.  Only monomial-spanned ideals are supported; the basis of the
// quotient is the set of monomials outside J, in the original order.
AlgebraPtr quotient_algebra(const AlgebraPtr& a, const TwoSidedIdeal& j);

// I_i = A (1 - e_i) A.
TwoSidedIdeal maximal_ideal(const AlgebraPtr& a, int i);

// The ideals used throughout: M = <e_n> and L = <loop at n>.
TwoSidedIdeal ideal_M(const AlgebraPtr& a);
TwoSidedIdeal ideal_L(const AlgebraPtr& a);

}  // namespace tau_atlas
