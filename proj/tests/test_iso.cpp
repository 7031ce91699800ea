#include <doctest.h>

#include "tau_atlas/iso.hpp"

using namespace tau_atlas;

TEST_CASE("isomorphism search") {
    auto a2 = build_auslander(2);
    auto r = find_isomorphism(projective(a2, 1), radical(projective(a2, 2)));
    CHECK(r.isomorphic);
    CHECK(r.certified);
    REQUIRE(r.map);
    CHECK(is_module_map(projective(a2, 1), radical(projective(a2, 2)), *r.map));
    CHECK_FALSE(is_isomorphic(simple(a2, 1), simple(a2, 2)));
    CHECK(is_isomorphic(simple(a2, 1), simple(a2, 1)));

    auto a4 = build_auslander(4);
    CHECK(is_isomorphic(radical(projective(a4, 4)), projective(a4, 3)));
    CHECK_FALSE(is_isomorphic(radical(projective(a4, 3)), projective(a4, 2)));

    // decomposable modules go through the exhaustive search
    auto x = direct_sum(a4, {projective(a4, 1), projective(a4, 2)});
    auto y = direct_sum(a4, {projective(a4, 2), projective(a4, 1)});
    CHECK_FALSE(certified_indecomposable(x));
    auto xy = find_isomorphism(x, y);
    CHECK(xy.isomorphic);
    CHECK(xy.certified);
    auto z = direct_sum(a4, {projective(a4, 1), simple(a4, 1), radical(projective(a4, 2))});
    auto w = direct_sum(a4, {projective(a4, 2), simple(a4, 1)});
    CHECK(z.dims() != w.dims());
    CHECK_FALSE(is_isomorphic(z, w));
}

TEST_CASE("splitting into catalog entries") {
    auto a = build_auslander(3);
    std::vector<Module> catalog{projective(a, 3), projective(a, 1), projective(a, 2), simple(a, 2)};
    auto split = split_indecomposables(regular_module(a), catalog);
    CHECK(split.multiplicities() == std::map<std::size_t, std::size_t>{{0, 1}, {1, 1}, {2, 1}});

    auto twice = direct_sum(a, {projective(a, 1), projective(a, 1)});
    CHECK(split_indecomposables(twice, catalog).multiplicities() == std::map<std::size_t, std::size_t>{{1, 2}});

    auto mixed = direct_sum(a, {simple(a, 2), projective(a, 2), simple(a, 2)});
    CHECK(split_indecomposables(mixed, catalog).multiplicities() == std::map<std::size_t, std::size_t>{{2, 1}, {3, 2}});

    CHECK_THROWS_AS(split_indecomposables(simple(a, 1), catalog), std::runtime_error);
    CHECK(split_indecomposables(zero_module(a), catalog).parts.empty());
}

TEST_CASE("registry") {
    auto a = build_auslander(2);
    IsoRegistry reg;
    auto p1 = reg.intern(projective(a, 1));
    CHECK(p1 == 1);
    CHECK(reg.intern(projective(a, 2)) == 2);
    CHECK(reg.intern(radical(projective(a, 2))) == p1);
    CHECK(reg.find(simple(a, 1)) == std::nullopt);
    CHECK(reg.size() == 2);
    CHECK(reg.all_certified());
}
