#include <doctest.h>

#include "tau_atlas/homological.hpp"
#include "tau_atlas/iso.hpp"
#include "tau_atlas/tilting.hpp"

using namespace tau_atlas;

using Layers = std::vector<std::string>;

namespace {

Layers layer_strings(const TwoSidedIdeal& t) {
    Layers out;
    for (const auto& m : ideal_summands(t)) out.push_back(radical_layer_string(m));
    return out;
}

Layers at(const TiltCatalog& cat, const std::string& w) { return layer_strings(cat.ideals[*cat.find(Permutation::parse(w))]); }

}  // namespace

TEST_CASE("maximal ideals") {
    auto a2 = build_auslander(2);
    CHECK(layer_strings(maximal_ideal(a2, 1)) == Layers{"2", "2/1/2"});
    auto a3 = build_auslander(3);
    auto i2 = ideal_summands(maximal_ideal(a3, 2));
    CHECK(i2[1].dims() == std::vector<std::size_t>{1, 1, 2});
    for (int n = 1; n <= 5; ++n) {
        auto a = build_auslander(n);
        for (int i = 1; i <= n; ++i) CHECK(maximal_ideal(a, i).dim() + 1 == a->dim());
    }
}

TEST_CASE("ideal words") {
    auto a3 = build_auslander(3);
    CHECK(ideal_of_word(a3, Permutation::identity(3)) == whole_algebra(a3));
    CHECK(ideal_of_gen_word(a3, GenWord{{1, 2, 1}}) == ideal_of_gen_word(a3, GenWord{{2, 1, 2}}));
    auto i21 = ideal_summands(ideal_of_word(a3, Permutation::parse("[3,1,2]")));
    CHECK(i21[0].dims() == std::vector<std::size_t>{0, 1, 1});
    CHECK(i21[1].dims() == std::vector<std::size_t>{0, 1, 2});
    CHECK(i21[2].dims() == std::vector<std::size_t>{1, 2, 3});
    CHECK_THROWS(ideal_of_word(a3, Permutation::identity(4)));
    // every reduced word of w gives the same ideal
    auto a4 = build_auslander(4);
    for (const auto& w : all_permutations(4)) {
        auto t = ideal_of_word(a4, w);
        for (const auto& word : braid_class(canonical_reduced_word(w))) CHECK(ideal_of_gen_word(a4, word) == t);
    }
}

TEST_CASE("semigroup relations") {
    for (int n = 1; n <= 5; ++n) {
        auto r = check_semigroup_relations(build_auslander(n));
        CHECK(r.ok());
        CHECK(r.checked == static_cast<std::size_t>((n - 1) + (n - 1) * (n - 2) / 2));
    }
}

TEST_CASE("tilting checks") {
    auto a3 = build_auslander(3);
    CHECK(is_tilting(whole_algebra(a3)));
    for (const auto& w : all_permutations(3)) CHECK(is_tilting(ideal_of_word(a3, w)));
    auto c = check_tilting(ideal_summands(maximal_ideal(a3, 3)));
    CHECK_FALSE(c.ok());
    CHECK(c.distinct_summands == 2);
    // Ext^1(I_1, I_1) = 0 through the resolution
    auto i1 = ideal_module(maximal_ideal(a3, 1));
    CHECK(ext_dim(i1, i1, 1) == 0);
    // simples are not tilting
    CHECK_FALSE(check_tilting({simple(a3, 1), simple(a3, 2), simple(a3, 3)}).ok());
}

TEST_CASE("enumeration and the n=2, n=3 quivers") {
    std::size_t fact = 1;
    for (int n = 1; n <= 4; ++n) {
        fact *= static_cast<std::size_t>(n);
        CHECK(tilt_enumerate(build_auslander(n)).ideals.size() == fact);
    }
    auto c2 = tilt_enumerate(build_auslander(2));
    CHECK(at(c2, "[1,2]") == Layers{"1/2", "2/1/2"});
    CHECK(at(c2, "[2,1]") == Layers{"2", "2/1/2"});
    auto h2 = tilt_hasse(c2);
    CHECK(h2.labeled_edges() == std::set<std::pair<std::string, std::string>>{{"[1,2]", "[2,1]"}});

    auto c3 = tilt_enumerate(build_auslander(3));
    const std::string top = "3/2/13/2/3";
    CHECK(at(c3, "[1,2,3]") == Layers{"1/2/3", "2/13/2/3", top});
    CHECK(at(c3, "[2,1,3]") == Layers{"2/3", "2/13/2/3", top});
    CHECK(at(c3, "[1,3,2]") == Layers{"1/2/3", "13/2/3", top});
    CHECK(at(c3, "[3,1,2]") == Layers{"2/3", "3/2/3", top});
    CHECK(at(c3, "[2,3,1]") == Layers{"3", "13/2/3", top});
    CHECK(at(c3, "[3,2,1]") == Layers{"3", "3/2/3", top});
    CheckReport rep;
    auto h3 = tilt_hasse(c3, &rep);
    CHECK(rep.ok());
    CHECK(h3.labeled_edges() == std::set<std::pair<std::string, std::string>>{{"[1,2,3]", "[2,1,3]"},
                                                                                {"[1,2,3]", "[1,3,2]"},
                                                                                {"[2,1,3]", "[3,1,2]"},
                                                                                {"[1,3,2]", "[2,3,1]"},
                                                                                {"[3,1,2]", "[3,2,1]"},
                                                                                {"[2,3,1]", "[3,2,1]"}});
}

TEST_CASE("tilting Hasse quiver against the weak order") {
    for (int n = 1; n <= 4; ++n) {
        auto cat = tilt_enumerate(build_auslander(n));
        CheckReport rep;
        auto h = tilt_hasse(cat, &rep);
        CHECK(rep.ok());
        CHECK(h.edge_count() == cat.ideals.size() * static_cast<std::size_t>(n - 1) / 2);
        for (auto d : h.undirected_degrees()) CHECK(d == static_cast<std::size_t>(n - 1));
        CHECK(h.labeled_edges() == weak_left_hasse(n).opposite().labeled_edges());
        for (const auto& t : cat.ideals) {
            auto parts = ideal_summands(t);
            CHECK(is_isomorphic(parts.back(), projective(cat.algebra, n)));
        }
    }
}

TEST_CASE("Hom from I_i agrees with dense Hom spaces") {
    for (int n = 2; n <= 3; ++n) {
        auto a = build_auslander(n);
        auto cat = tilt_enumerate(a);
        for (int i = 1; i < n; ++i) {
            auto ii = maximal_ideal(a, i);
            auto ri = ideal_module(ii);
            auto li = left_ideal_module(ii);
            for (const auto& t : cat.ideals) {
                auto right = hom_from_ideal(a, i, t, Side::Right);
                auto left = hom_from_ideal(a, i, t, Side::Left);
                CHECK(hom_dim(ri, ideal_module(t)) == right.dim());
                CHECK(hom_dim(li, left_ideal_module(t)) == left.dim());
                CHECK(is_two_sided(right));
                CHECK(is_two_sided(left));
                for (const auto& row : t.space().basis()) {
                    CHECK(right.contains(row));
                    CHECK(left.contains(row));
                }
            }
        }
    }
}

TEST_CASE("Hom from I_i: structure") {
    auto a2 = build_auslander(2);
    auto i1 = maximal_ideal(a2, 1);
    CHECK(hom_from_ideal(a2, 1, i1) == whole_algebra(a2));
    for (int n = 2; n <= 4; ++n) {
        auto a = build_auslander(n);
        auto cat = tilt_enumerate(a);
        for (int i = 1; i < n; ++i) {
            auto ii = maximal_ideal(a, i);
            CHECK(hom_from_ideal(a, i, whole_algebra(a)) == whole_algebra(a));
            for (const auto& t : cat.ideals) {
                if (!(ideal_product(t, ii) == t)) continue;
                auto h = hom_from_ideal(a, i, t);
                CHECK(ideal_product(h, ii) == t);
                // the quotient is a sum of copies of S_i
                for (auto k : t.space().free_columns())
                    if (h.contains(a->unit(k))) CHECK(a->basis(k).tgt == i);
                CHECK(cat.find(h).has_value());
            }
        }
    }
}

TEST_CASE("endomorphism rings of tilting ideals") {
    for (int n = 2; n <= 3; ++n) {
        auto a = build_auslander(n);
        for (const auto& t : tilt_enumerate(a).ideals) {
            auto m = ideal_module(t);
            CHECK(hom_dim(m, m) == a->dim());
            for (int i = 1; i <= n; ++i) CHECK(hom_dim(ideal_module(maximal_ideal(a, i)), simple(a, i)) == 0);
        }
    }
}
