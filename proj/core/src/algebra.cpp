#include "tau_atlas/algebra.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace tau_atlas {

std::string Monomial::str() const {
    std::ostringstream os;
    os << '(' << start << ',' << downs << ',' << ups << ')';
    return os.str();
}

std::optional<Monomial> multiply_monomials(int n, const Monomial& x, const Monomial& y) {
    auto valid = [n](const Monomial& m) {
        return m.start >= 1 && m.start <= n && m.downs >= 0 && m.ups >= 0 && m.valley() >= 1 && m.target() <= n;
    };
    if (!valid(x) || !valid(y)) throw std::invalid_argument("multiply_monomials: not a basis monomial");
    if (x.target() != y.start) return std::nullopt;
    // b^s a^t b^s' a^t' = b^(s+s') a^(t+t'), provided the new valley stays on the quiver.
    Monomial out{x.start, x.downs + y.downs, x.ups + y.ups};
    if (out.valley() < 1) return std::nullopt;
    return out;
}

std::optional<std::size_t> Algebra::idempotent(int v) const {
    if (v < 1 || v > n_) throw std::out_of_range("vertex out of range");
    auto k = idem_[static_cast<std::size_t>(v - 1)];
    if (k == kZero) return std::nullopt;
    return static_cast<std::size_t>(k);
}

std::optional<std::size_t> Algebra::index_of(const Monomial& m) const {
    for (std::size_t k = 0; k < basis_.size(); ++k)
        if (basis_[k].label == m) return k;
    return std::nullopt;
}

std::size_t Algebra::dim_between(int i, int j) const {
    std::size_t c = 0;
    for (const auto& b : basis_)
        if (b.src == i && b.tgt == j) ++c;
    return c;
}

Vec Algebra::unit(std::size_t k) const {
    Vec v(dim(), 0);
    v.at(k) = 1;
    return v;
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
    const std::size_t d = dim();
    Vec out(d, 0);
    std::vector<std::size_t> ny;
    for (std::size_t j = 0; j < d; ++j)
        if (y[j]) ny.push_back(j);
    for (std::size_t i = 0; i < d; ++i) {
        if (!x[i]) continue;
        const std::ptrdiff_t* row = table_.data() + i * d;
        for (std::size_t j : ny) {
            auto k = row[j];
            if (k != kZero) out[static_cast<std::size_t>(k)] = field_.add(out[static_cast<std::size_t>(k)], field_.mul(x[i], y[j]));
        }
    }
    return out;
}

Vec Algebra::left_idempotent(int v, const Vec& x) const {
    Vec out(dim(), 0);
    for (std::size_t k = 0; k < dim(); ++k)
        if (basis_[k].src == v) out[k] = x[k];
    return out;
}

Vec Algebra::right_idempotent(const Vec& x, int v) const {
    Vec out(dim(), 0);
    for (std::size_t k = 0; k < dim(); ++k)
        if (basis_[k].tgt == v) out[k] = x[k];
    return out;
}

AlgebraPtr make_opposite(const Algebra& a) {
    auto op = std::make_shared<Algebra>();
    op->n_ = a.n_;
    op->field_ = a.field_;
    op->name_ = a.name_ + "^op";
    op->opposite_flag_ = !a.opposite_flag_;
    op->basis_ = a.basis_;
    for (auto& b : op->basis_) {
        std::swap(b.src, b.tgt);
        std::reverse(b.word.begin(), b.word.end());
    }
    const std::size_t d = a.dim();
    op->table_.assign(d * d, Algebra::kZero);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) op->table_[x * d + y] = a.table_[y * d + x];
    op->idem_ = a.idem_;
    op->arrows_ = a.arrows_;
    for (auto& ar : op->arrows_) std::swap(ar.src, ar.tgt);
    return op;
}

AlgebraPtr Algebra::opposite() const {
    if (op_) return op_;
    if (auto orig = op_of_.lock()) return orig;
    throw std::logic_error("opposite algebra unavailable");
}

// Attach the opposite algebra (strong forward link, weak back link).
AlgebraPtr finalize_algebra(std::shared_ptr<Algebra> a) {
    auto op = std::const_pointer_cast<Algebra>(make_opposite(*a));
    op->op_of_ = a;
    a->op_ = op;
    return a;
}

AlgebraPtr build_auslander(int n, Field field) {
    if (n < 1) throw std::invalid_argument("build_auslander: n must be positive");
    auto a = std::make_shared<Algebra>();
    a->n_ = n;
    a->field_ = field;
    a->name_ = "Lambda(" + std::to_string(n) + ")";
    for (int i = 1; i <= n; ++i)
        for (int s = 0; s < i; ++s)
            for (int t = 0; i - s + t <= n; ++t) {
                BasisElement b{i, i - s + t, Monomial{i, s, t}, {}};
                a->basis_.push_back(std::move(b));
            }
    // arrows: a_1..a_{n-1}, then b_2..b_n
    auto find = [&](const Monomial& m) -> std::size_t {
        for (std::size_t k = 0; k < a->basis_.size(); ++k)
            if (a->basis_[k].label == m) return k;
        throw std::logic_error("monomial missing from basis");
    };
    for (int i = 1; i < n; ++i) a->arrows_.push_back({i, i + 1, "a" + std::to_string(i), find({i, 0, 1})});
    for (int i = 2; i <= n; ++i) a->arrows_.push_back({i, i - 1, "b" + std::to_string(i), find({i, 1, 0})});
    auto arrow_a = [](int i) { return static_cast<std::size_t>(i - 1); };
    auto arrow_b = [n](int i) { return static_cast<std::size_t>(n - 1 + i - 2); };
    for (auto& b : a->basis_) {
        int h = b.label.start;
        for (int k = 0; k < b.label.downs; ++k, --h) b.word.push_back(arrow_b(h));
        for (int k = 0; k < b.label.ups; ++k, ++h) b.word.push_back(arrow_a(h));
    }
    const std::size_t d = a->basis_.size();
    a->table_.assign(d * d, Algebra::kZero);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            if (auto m = multiply_monomials(n, a->basis_[x].label, a->basis_[y].label))
                a->table_[x * d + y] = static_cast<std::ptrdiff_t>(find(*m));
    for (int v = 1; v <= n; ++v) a->idem_.push_back(static_cast<std::ptrdiff_t>(find({v, 0, 0})));
    return finalize_algebra(std::move(a));
}

bool is_associative(const Algebra& a) {
    const std::size_t d = a.dim();
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
            auto xy = a.product(x, y);
            for (std::size_t z = 0; z < d; ++z) {
                auto yz = a.product(y, z);
                auto left = xy == Algebra::kZero ? Algebra::kZero : a.product(static_cast<std::size_t>(xy), z);
                auto right = yz == Algebra::kZero ? Algebra::kZero : a.product(x, static_cast<std::size_t>(yz));
                if (left != right) return false;
            }
        }
    return true;
}

TwoSidedIdeal::TwoSidedIdeal(AlgebraPtr algebra, Echelon space) : alg_(std::move(algebra)), space_(std::move(space)) {
    if (space_.dim() != alg_->dim()) throw std::invalid_argument("ideal: ambient dimension mismatch");
}

bool TwoSidedIdeal::is_monomial() const {
    for (const auto& row : space_.basis())
        if (std::count_if(row.begin(), row.end(), [](Scalar x) { return x != 0; }) != 1) return false;
    return true;
}

std::size_t TwoSidedIdeal::dim_between(int i, int j) const {
    Echelon part(alg_->dim(), alg_->field());
    for (const auto& row : space_.basis()) part.insert(alg_->right_idempotent(alg_->left_idempotent(i, row), j));
    return part.rank();
}

TwoSidedIdeal two_sided_closure(const AlgebraPtr& a, const std::vector<Vec>& generators) {
    Echelon space(a->dim(), a->field());
    std::vector<Vec> multipliers;
    for (int v = 1; v <= a->n(); ++v)
        if (auto e = a->idempotent(v)) multipliers.push_back(a->unit(*e));
    for (const auto& ar : a->arrows()) multipliers.push_back(a->unit(ar.element));
    std::deque<Vec> todo;
    for (const auto& g : generators) {
        if (g.size() != a->dim()) throw std::invalid_argument("two_sided_closure: generator has wrong length");
        if (space.insert(g)) todo.push_back(g);
    }
    while (!todo.empty()) {
        Vec x = std::move(todo.front());
        todo.pop_front();
        for (const auto& m : multipliers) {
            for (Vec y : {a->multiply(m, x), a->multiply(x, m)})
                if (space.insert(y)) todo.push_back(std::move(y));
        }
    }
    return TwoSidedIdeal(a, std::move(space));
}

TwoSidedIdeal whole_algebra(const AlgebraPtr& a) {
    Echelon e(a->dim(), a->field());
    for (std::size_t k = 0; k < a->dim(); ++k) e.insert(a->unit(k));
    return TwoSidedIdeal(a, std::move(e));
}

TwoSidedIdeal zero_ideal(const AlgebraPtr& a) { return TwoSidedIdeal(a, Echelon(a->dim(), a->field())); }

TwoSidedIdeal ideal_product(const TwoSidedIdeal& t, const TwoSidedIdeal& u) {
    if (t.algebra_ptr() != u.algebra_ptr()) throw std::invalid_argument("ideal_product: algebra mismatch");
    const Algebra& a = t.algebra();
    Echelon out(a.dim(), a.field());
    if (t.is_monomial() && u.is_monomial()) {
        std::vector<std::size_t> ti, ui;
        for (const auto& row : t.space().basis())
            ti.push_back(static_cast<std::size_t>(std::find_if(row.begin(), row.end(), [](Scalar x) { return x; }) - row.begin()));
        for (const auto& row : u.space().basis())
            ui.push_back(static_cast<std::size_t>(std::find_if(row.begin(), row.end(), [](Scalar x) { return x; }) - row.begin()));
        std::vector<bool> hit(a.dim(), false);
        for (auto x : ti)
            for (auto y : ui)
                if (auto k = a.product(x, y); k != Algebra::kZero) hit[static_cast<std::size_t>(k)] = true;
        for (std::size_t k = 0; k < a.dim(); ++k)
            if (hit[k]) out.insert(a.unit(k));
    } else {
        for (const auto& x : t.space().basis())
            for (const auto& y : u.space().basis()) out.insert(a.multiply(x, y));
    }
    return TwoSidedIdeal(t.algebra_ptr(), std::move(out));
}

bool is_two_sided(const TwoSidedIdeal& j) {
    const Algebra& a = j.algebra();
    for (const auto& row : j.space().basis())
        for (std::size_t k = 0; k < a.dim(); ++k) {
            Vec e = a.unit(k);
            if (!j.contains(a.multiply(e, row)) || !j.contains(a.multiply(row, e))) return false;
        }
    return true;
}

AlgebraPtr quotient_algebra(const AlgebraPtr& a, const TwoSidedIdeal& j) {
    if (j.algebra_ptr() != a) throw std::invalid_argument("quotient_algebra: ideal of another algebra");
    if (!j.is_monomial()) throw std::invalid_argument("quotient_algebra: ideal is not spanned by monomials");
    if (!is_two_sided(j)) throw std::invalid_argument("quotient_algebra: subspace is not a two-sided ideal");
    const std::size_t d = a->dim();
    std::vector<std::ptrdiff_t> renum(d, Algebra::kZero);
    auto q = std::make_shared<Algebra>();
    q->n_ = a->n_;
    q->field_ = a->field_;
    q->name_ = a->name_ + "/J";
    q->opposite_flag_ = a->opposite_flag_;
    for (std::size_t k = 0; k < d; ++k)
        if (!j.contains(a->unit(k))) {
            renum[k] = static_cast<std::ptrdiff_t>(q->basis_.size());
            q->basis_.push_back(a->basis_[k]);
        }
    std::vector<std::ptrdiff_t> arrow_renum(a->arrows_.size(), Algebra::kZero);
    for (std::size_t k = 0; k < a->arrows_.size(); ++k) {
        auto r = renum[a->arrows_[k].element];
        if (r == Algebra::kZero) continue;
        arrow_renum[k] = static_cast<std::ptrdiff_t>(q->arrows_.size());
        Arrow ar = a->arrows_[k];
        ar.element = static_cast<std::size_t>(r);
        q->arrows_.push_back(ar);
    }
    for (auto& b : q->basis_)
        for (auto& w : b.word) w = static_cast<std::size_t>(arrow_renum[w]);
    const std::size_t qd = q->basis_.size();
    q->table_.assign(qd * qd, Algebra::kZero);
    for (std::size_t x = 0; x < d; ++x) {
        if (renum[x] == Algebra::kZero) continue;
        for (std::size_t y = 0; y < d; ++y) {
            if (renum[y] == Algebra::kZero) continue;
            auto k = a->table_[x * d + y];
            if (k == Algebra::kZero) continue;
            q->table_[static_cast<std::size_t>(renum[x]) * qd + static_cast<std::size_t>(renum[y])] = renum[static_cast<std::size_t>(k)];
        }
    }
    for (auto e : a->idem_) q->idem_.push_back(e == Algebra::kZero ? Algebra::kZero : renum[static_cast<std::size_t>(e)]);
    return finalize_algebra(std::move(q));
}

TwoSidedIdeal maximal_ideal(const AlgebraPtr& a, int i) {
    if (i < 1 || i > a->n()) throw std::out_of_range("maximal_ideal: vertex out of range");
    Vec gen(a->dim(), 0);
    for (int v = 1; v <= a->n(); ++v)
        if (v != i)
            if (auto e = a->idempotent(v)) gen[*e] = 1;
    return two_sided_closure(a, {gen});
}

TwoSidedIdeal ideal_M(const AlgebraPtr& a) {
    auto e = a->idempotent(a->n());
    if (!e) return zero_ideal(a);
    return two_sided_closure(a, {a->unit(*e)});
}

TwoSidedIdeal ideal_L(const AlgebraPtr& a) {
    const int n = a->n();
    auto loop = a->index_of(Monomial{n, 1, 1});
    if (!loop) return zero_ideal(a);
    return two_sided_closure(a, {a->unit(*loop)});
}

}  // namespace tau_atlas
