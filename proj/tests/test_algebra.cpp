#include <doctest.h>

#include <algorithm>

#include "tau_atlas/algebra.hpp"

using namespace tau_atlas;

namespace {

// Arrow word as (kind, index) pairs: kind 'a' goes up from index, 'b' goes down from index.
using Word = std::vector<std::pair<char, int>>;

Word word_of(const Monomial& m) {
    Word w;
    int h = m.start;
    for (int k = 0; k < m.downs; ++k, --h) w.push_back({'b', h});
    for (int k = 0; k < m.ups; ++k, ++h) w.push_back({'a', h});
    return w;
}

// Rewrites with a_1 b_2 -> 0 and a_i b_{i+1} -> b_i a_{i-1} until every b precedes every a.
std::optional<Word> rewrite(Word w) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            if (w[k].first == 'a' && w[k + 1].first == 'b') {
                int i = w[k].second;
                REQUIRE(w[k + 1].second == i + 1);
                if (i == 1) return std::nullopt;
                w[k] = {'b', i};
                w[k + 1] = {'a', i - 1};
                changed = true;
            }
        }
    }
    return w;
}

std::optional<Monomial> oracle_product(int n, const Monomial& x, const Monomial& y) {
    if (x.target() != y.start) return std::nullopt;
    Word w = word_of(x);
    Word wy = word_of(y);
    w.insert(w.end(), wy.begin(), wy.end());
    auto r = rewrite(w);
    if (!r) return std::nullopt;
    Monomial m{x.start, 0, 0};
    for (auto [kind, idx] : *r) (kind == 'b' ? m.downs : m.ups) += 1;
    REQUIRE(m.valley() >= 1);
    REQUIRE(m.target() <= n);
    return m;
}

Vec unit_of(const AlgebraPtr& a, Monomial m) { return a->unit(*a->index_of(m)); }

}  // namespace

TEST_CASE("dimensions of the Auslander algebra") {
    CHECK(build_auslander(1)->dim() == 1);
    CHECK(build_auslander(4)->dim() == 30);
    CHECK(build_auslander(5)->dim() == 55);
    CHECK_THROWS(build_auslander(0));
    for (int n = 1; n <= 6; ++n) {
        auto a = build_auslander(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) CHECK(a->dim_between(i, j) == static_cast<std::size_t>(std::min(i, j)));
    }
    auto a = build_auslander(4);
    std::vector<std::size_t> lengths;
    for (int i = 1; i <= 4; ++i) {
        std::size_t len = 0;
        for (int j = 1; j <= 4; ++j) len += a->dim_between(i, j);
        lengths.push_back(len);
    }
    CHECK(lengths == std::vector<std::size_t>{4, 7, 9, 10});
}

TEST_CASE("closed-form product agrees with the rewriting oracle") {
    for (int n = 1; n <= 6; ++n) {
        auto a = build_auslander(n);
        for (const auto& x : a->basis())
            for (const auto& y : a->basis()) CHECK(multiply_monomials(n, x.label, y.label) == oracle_product(n, x.label, y.label));
    }
    CHECK_THROWS(multiply_monomials(3, Monomial{1, 1, 0}, Monomial{1, 0, 0}));
}

TEST_CASE("relations and associativity") {
    for (int n = 1; n <= 5; ++n) CHECK(is_associative(*build_auslander(n)));
    auto a = build_auslander(4);
    CHECK(a->multiply(unit_of(a, {1, 0, 1}), unit_of(a, {2, 1, 0})) == Vec(a->dim(), 0));
    for (int i = 2; i <= 3; ++i) {
        auto lhs = a->multiply(unit_of(a, {i, 0, 1}), unit_of(a, {i + 1, 1, 0}));
        auto rhs = a->multiply(unit_of(a, {i, 1, 0}), unit_of(a, {i - 1, 0, 1}));
        CHECK(lhs == rhs);
        CHECK(lhs == unit_of(a, {i, 1, 1}));
    }
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            auto prod = a->multiply(unit_of(a, {i, 0, 0}), unit_of(a, {j, 0, 0}));
            CHECK(prod == (i == j ? unit_of(a, {i, 0, 0}) : Vec(a->dim(), 0)));
        }
    // every basis element is the product of its arrows
    for (std::size_t k = 0; k < a->dim(); ++k) {
        const auto& b = a->basis(k);
        if (b.word.empty()) continue;
        Vec acc = a->unit(a->arrows()[b.word[0]].element);
        for (std::size_t l = 1; l < b.word.size(); ++l) acc = a->multiply(acc, a->unit(a->arrows()[b.word[l]].element));
        CHECK(acc == a->unit(k));
    }
}

TEST_CASE("opposite algebra") {
    auto a = build_auslander(4);
    auto op = a->opposite();
    CHECK(op->opposite() == a);
    CHECK(op->is_opposite());
    for (std::size_t x = 0; x < a->dim(); ++x)
        for (std::size_t y = 0; y < a->dim(); ++y) CHECK(op->product(x, y) == a->product(y, x));
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) CHECK(op->dim_between(i, j) == static_cast<std::size_t>(std::min(i, j)));
    CHECK(is_associative(*op));
}

TEST_CASE("ideals M and L") {
    auto a = build_auslander(4);
    CHECK(two_sided_closure(a, {Vec(a->dim(), 1)}).dim() == 30);
    CHECK(whole_algebra(a).dim() == 30);
    auto m = ideal_M(a);
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) CHECK(m.dim_between(i, j) == static_cast<std::size_t>(std::max(0, i + j - 4)));
    auto a2 = build_auslander(2);
    auto l2 = ideal_L(a2);
    CHECK(l2.dim() == 1);
    CHECK(l2.dim_between(2, 2) == 1);
    for (int n = 1; n <= 4; ++n) {
        auto an = build_auslander(n);
        auto l = ideal_L(an);
        auto mm = ideal_M(an);
        CHECK(ideal_product(l, mm) == l);
        CHECK(ideal_product(mm, l) == l);
        CHECK(is_two_sided(l));
    }
}

TEST_CASE("quotients by L") {
    auto a2 = build_auslander(2);
    CHECK(quotient_algebra(a2, zero_ideal(a2))->dim() == a2->dim());
    CHECK(quotient_algebra(a2, ideal_L(a2))->dim() == 4);
    auto a4 = build_auslander(4);
    CHECK(quotient_algebra(a4, ideal_L(a4))->dim() == 20);
    for (int n = 1; n <= 6; ++n) {
        auto a = build_auslander(n);
        auto g = quotient_algebra(a, ideal_L(a));
        CHECK(is_associative(*g));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                CHECK(g->dim_between(i, j) == static_cast<std::size_t>(std::min({i, j, n + 1 - i, n + 1 - j})));
        auto loop = g->index_of(Monomial{n, 1, 1});
        CHECK_FALSE(loop.has_value());
    }
    auto a3 = build_auslander(3);
    auto lam_mod_m = quotient_algebra(a3, ideal_M(a3));
    CHECK_FALSE(lam_mod_m->vertex_alive(3));
}
