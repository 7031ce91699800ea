#include <doctest.h>

#include "tau_atlas/stt.hpp"

using namespace tau_atlas;

using Layers = std::vector<std::string>;

namespace {

Layers layers(const SttContext& ctx, const SttPair& u) {
    Layers out;
    for (auto id : u.slots) out.push_back(id ? radical_layer_string(ctx.summand(id)) : "-");
    return out;
}

std::size_t at(const SttCatalog& cat, const std::string& w) {
    auto it = std::find(cat.words.begin(), cat.words.end(), Permutation::parse(w));
    REQUIRE(it != cat.words.end());
    return static_cast<std::size_t>(it - cat.words.begin());
}

}  // namespace

TEST_CASE("minimal left approximations, n=2") {
    auto a = build_auslander(2);
    Module p1 = projective(a, 1), p2 = projective(a, 2);

    auto ap = min_left_approx(p1, {p2});
    CHECK(ap.copies.size() == 1);
    CHECK(radical_layer_string(cokernel(ap.map, ap.target).module) == "2");

    ap = min_left_approx(p2, {p1});
    CHECK(ap.copies.size() == 1);
    CHECK(radical_layer_string(cokernel(ap.map, ap.target).module) == "1");

    // redundant targets are dropped
    ap = min_left_approx(p1, {p2, p2, simple(a, 2)});
    CHECK(ap.copies.size() == 1);
    CHECK(ap.target.total_dim() == 3);

    ap = min_left_approx(simple(a, 1), {p2});
    CHECK(ap.copies.empty());
}

TEST_CASE("pairs for n=2") {
    SttContext ctx(build_auslander(2));
    SttPair top = ctx.top_pair();
    CHECK(layers(ctx, top) == Layers{"1/2", "2/1/2"});
    CHECK(ctx.of_word(Permutation::identity(3)) == top);
    CHECK(ctx.classify(top)->first == 2);

    auto m1 = ctx.left_mutation(top, 1);
    auto m2 = ctx.left_mutation(top, 2);
    REQUIRE(m1);
    REQUIRE(m2);
    CHECK(layers(ctx, *m1) == Layers{"2", "2/1/2"});
    CHECK(layers(ctx, *m2) == Layers{"1/2", "1"});
    CHECK(ctx.support_complement(*m1).empty());

    SttPair zero = ctx.of_word(Permutation::longest(3));
    CHECK(zero.summand_count() == 0);
    CHECK(ctx.support_complement(zero) == std::vector<int>{1, 2});
    CHECK(ctx.classify(zero)->first == 0);
    CHECK_FALSE(ctx.left_mutation(zero, 1));
    CHECK_FALSE(ctx.left_mutable(zero, 2));

    CHECK(ctx.leq(*m1, top));
    CHECK(ctx.leq(zero, *m2));
    CHECK_FALSE(ctx.leq(*m1, *m2));
    CHECK_FALSE(ctx.leq(*m2, *m1));
    CHECK_FALSE(ctx.leq(top, *m1));
}

TEST_CASE("catalog n=2 and n=3") {
    for (int n : {2, 3}) {
        SttContext ctx(build_auslander(n));
        SttCatalog cat = enumerate_stt(ctx);
        CHECK(cat.pairs.size() == (n == 2 ? 6u : 24u));
        CHECK(cat.hasse.edge_count() == (n == 2 ? 6u : 36u));
        CHECK(cat.problems.empty());
        for (std::size_t k = 0; k < cat.pairs.size(); ++k) {
            CHECK(ctx.of_word(cat.words[k]) == cat.pairs[k]);
            for (int j = 1; j <= n; ++j) CHECK(cat.mutate(cat.mutate(k, j), j) == k);
        }
    }
    SttContext ctx(build_auslander(2));
    SttCatalog cat = enumerate_stt(ctx);
    // s_1 s_2 s_1: bottom of the quiver, reached after three arrows
    CHECK(cat.pairs[at(cat, "[3,2,1]")].summand_count() == 0);
    CHECK(layers(ctx, cat.pairs[at(cat, "[3,1,2]")]) == Layers{"2", "-"});
    CHECK(layers(ctx, cat.pairs[at(cat, "[2,3,1]")]) == Layers{"-", "1"});
}

TEST_CASE("thread count does not change the catalog") {
    SttContext ctx(build_auslander(4));
    SttCatalog one = enumerate_stt(ctx, 1);
    SttCatalog four = enumerate_stt(ctx, 4);
    CHECK(one.pairs == four.pairs);
    CHECK(one.words == four.words);
    CHECK(one.hasse.edges == four.hasse.edges);
    CHECK(one.hasse.edge_labels == four.hasse.edge_labels);
}

TEST_CASE("support complement follows the interval index") {
    SttContext ctx(build_auslander(3));
    for (std::size_t k = 0; k < ctx.tilts().ideals.size(); ++k)
        for (int i = 0; i <= 3; ++i) {
            SttPair u = ctx.mu_interval(k, i);
            auto cls = ctx.classify(u);
            REQUIRE(cls);
            CHECK(cls->first == i);
            CHECK(cls->second == k);
        }
}
