#include <doctest.h>

#include "tau_atlas/module.hpp"

using namespace tau_atlas;

using Dims = std::vector<std::size_t>;

TEST_CASE("projective modules") {
    auto a1 = build_auslander(1);
    CHECK(projective(a1, 1).total_dim() == 1);
    auto a = build_auslander(4);
    CHECK(projective(a, 2).dims() == Dims{1, 2, 2, 2});
    CHECK(projective(a, 4).dims() == Dims{1, 2, 3, 4});
    CHECK(socle(projective(a, 4)).dims() == Dims{0, 0, 0, 1});
    CHECK_THROWS(projective(a, 5));
    for (int i = 1; i <= 4; ++i) {
        Dims expected;
        for (int j = 1; j <= 4; ++j) expected.push_back(static_cast<std::size_t>(std::min(i, j)));
        CHECK(projective(a, i).dims() == expected);
    }
}

TEST_CASE("radical, socle, top") {
    auto a = build_auslander(4);
    for (int i = 1; i <= 4; ++i) {
        auto s = simple(a, i);
        CHECK(radical(s).is_zero());
        CHECK(socle(s).dims() == s.dims());
        CHECK(top(s).dims() == s.dims());
    }
    CHECK(radical(projective(a, 1)).dims() == Dims{0, 1, 1, 1});
    for (int n = 1; n <= 5; ++n) {
        auto an = build_auslander(n);
        Dims sn(static_cast<std::size_t>(n), 0);
        sn.back() = 1;
        for (int i = 1; i <= n; ++i) {
            auto p = projective(an, i);
            CHECK(socle(p).dims() == sn);
            Dims ti(static_cast<std::size_t>(n), 0);
            ti[static_cast<std::size_t>(i - 1)] = 1;
            CHECK(top(p).dims() == ti);
        }
    }
}

TEST_CASE("radical layers reproduce the displayed projectives, n = 3") {
    auto a = build_auslander(3);
    CHECK(radical_layer_string(projective(a, 1)) == "1/2/3");
    CHECK(radical_layer_string(projective(a, 2)) == "2/13/2/3");
    CHECK(radical_layer_string(projective(a, 3)) == "3/2/13/2/3");
}

TEST_CASE("Hom spaces") {
    auto a = build_auslander(4);
    for (int i = 1; i <= 4; ++i) {
        auto pi = projective(a, i);
        CHECK(hom_dim(pi, pi) >= 1);
        auto id = identity_map(pi);
        CHECK(is_module_map(pi, pi, id));
        for (int j = 1; j <= 4; ++j) CHECK(hom_dim(projective(a, i), projective(a, j)) == static_cast<std::size_t>(std::min(i, j)));
    }
    CHECK(hom_dim(simple(a, 1), projective(a, 1)) == 0);
    auto reg = regular_module(a);
    for (const auto& f : hom_basis(projective(a, 3), reg)) CHECK(is_module_map(projective(a, 3), reg, f));
    CHECK(hom_dim(reg, reg) == a->dim());
}

TEST_CASE("Fac membership") {
    auto a = build_auslander(4);
    auto p4 = projective(a, 4);
    CHECK(in_fac(p4, p4));
    CHECK(in_fac(simple(a, 4), p4));
    auto a2 = build_auslander(2);
    CHECK_FALSE(in_fac(projective(a2, 1), radical(projective(a2, 1))));
}

TEST_CASE("quotients by ideals") {
    auto a = build_auslander(4);
    auto p3 = projective(a, 3);
    CHECK(act_quotient(p3, zero_ideal(a)).module.dims() == p3.dims());
    auto bar = act_quotient(p3, ideal_M(a)).module;
    CHECK(bar.dims() == Dims{1, 1, 1, 0});
    CHECK(radical_layer_string(bar) == "3/2/1");
    auto a2 = build_auslander(2);
    CHECK(act_quotient(projective(a2, 1), ideal_L(a2)).module.dims() == Dims{1, 1});
    CHECK(act_quotient(projective(a2, 2), ideal_L(a2)).module.dims() == Dims{1, 1});
}

TEST_CASE("direct sums and canonical maps") {
    auto a = build_auslander(3);
    std::vector<Module> parts{projective(a, 1), simple(a, 2), projective(a, 3)};
    auto sum = direct_sum(a, parts);
    CHECK(sum.total_dim() == 3 + 1 + 6);
    for (std::size_t k = 0; k < parts.size(); ++k) {
        auto inj = sum_injection(parts, k);
        auto proj = sum_projection(parts, k);
        CHECK(is_module_map(parts[k], sum, inj));
        CHECK(is_module_map(sum, parts[k], proj));
        auto round = compose(proj, inj);
        for (int v = 1; v <= 3; ++v) CHECK(round.blocks[static_cast<std::size_t>(v - 1)] == Matrix::identity(parts[k].dim(v), a->field()));
    }
}

TEST_CASE("fingerprints") {
    auto a = build_auslander(3);
    auto fp = fingerprint(projective(a, 2));
    CHECK(fp.dims == Dims{1, 2, 2});
    CHECK(fp.radical.size() == 4);
    CHECK(fp.socle.size() == 4);
    CHECK(fingerprint(simple(a, 1)) != fingerprint(simple(a, 2)));
}

TEST_CASE("duality") {
    auto a = build_auslander(3);
    auto p = projective(a, 2);
    auto dp = dual(p);
    CHECK(dp.algebra_ptr() == a->opposite());
    auto ddp = dual(dp);
    CHECK(ddp.algebra_ptr() == a);
    for (std::size_t k = 0; k < a->arrows().size(); ++k) CHECK(ddp.arrow(k) == p.arrow(k));
    CHECK(socle_layers(dp).size() == radical_layers(p).size());
}
