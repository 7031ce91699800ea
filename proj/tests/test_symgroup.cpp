#include <doctest.h>

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "tau_atlas/symgroup.hpp"

using namespace tau_atlas;

namespace {

Permutation P(const std::string& s) { return Permutation::parse(s); }

// Distance from the identity in the Cayley graph; independent of inversion counting.
std::map<Permutation, int> cayley_distances(int m) {
    std::map<Permutation, int> dist;
    std::queue<Permutation> q;
    dist[Permutation::identity(m)] = 0;
    q.push(Permutation::identity(m));
    while (!q.empty()) {
        auto w = q.front();
        q.pop();
        for (int i = 1; i < m; ++i) {
            auto next = compose(w, Permutation::simple_reflection(m, i));
            if (!dist.count(next)) {
                dist[next] = dist[w] + 1;
                q.push(next);
            }
        }
    }
    return dist;
}

void all_words(int m, std::size_t len, std::vector<int>& cur, std::vector<GenWord>& out) {
    if (cur.size() == len) {
        out.push_back(GenWord{cur});
        return;
    }
    for (int i = 1; i < m; ++i) {
        cur.push_back(i);
        all_words(m, len, cur, out);
        cur.pop_back();
    }
}

}  // namespace

TEST_CASE("compose and length") {
    CHECK(compose(Permutation::identity(2), P("[2,1]")) == P("[2,1]"));
    CHECK(compose(P("[2,1,3]"), P("[1,3,2]")) == P("[2,3,1]"));
    CHECK(compose(P("[3,1,2]"), P("[3,1,2]")) == P("[2,3,1]"));
    CHECK_THROWS(compose(P("[1,2]"), P("[1,2,3]")));
    CHECK(inversion_length(Permutation::identity(4)) == 0);
    CHECK(inversion_length(P("[3,2,1]")) == 3);
    CHECK(inversion_length(P("[2,4,1,3]")) == 3);
}

TEST_CASE("parse forms") {
    CHECK(P("[321]") == P("3,2,1"));
    CHECK(P("[3, 2, 1]").str() == "[3,2,1]");
    CHECK_THROWS(P("[1,1]"));
    CHECK(GenWord::parse("").empty());
    CHECK(GenWord::parse("1,2,1").letters == std::vector<int>{1, 2, 1});
}

TEST_CASE("evaluate_word") {
    CHECK(evaluate_word(GenWord{}, 3).is_identity());
    CHECK(evaluate_word(GenWord{{1, 2, 1}}, 3) == P("[3,2,1]"));
    CHECK(evaluate_word(GenWord{{2, 1}}, 3) == P("[3,1,2]"));
    CHECK(evaluate_word(GenWord{{1, 2}}, 3) == P("[2,3,1]"));
    CHECK_THROWS(evaluate_word(GenWord{{3}}, 3));
}

TEST_CASE("reduce_word examples") {
    CHECK(reduce_word(GenWord{{1, 1}}, 2).empty());
    CHECK(reduce_word(GenWord{{1, 2, 1}}, 3).letters == std::vector<int>{1, 2, 1});
    auto r = reduce_word(GenWord{{2, 1, 1, 2, 2}}, 3);
    CHECK(r.letters == std::vector<int>{2});
}

TEST_CASE("reduce_word against BFS oracle, all words of length <= 8 in S_4") {
    auto dist = cayley_distances(4);
    for (std::size_t len = 0; len <= 8; ++len) {
        std::vector<GenWord> words;
        std::vector<int> cur;
        all_words(4, len, cur, words);
        for (const auto& w : words) {
            std::vector<WordMove> log;
            auto r = reduce_word(w, 4, &log);
            auto target = evaluate_word(w, 4);
            REQUIRE(evaluate_word(r, 4) == target);
            REQUIRE(static_cast<int>(r.size()) == dist.at(target));
            // replaying the move log on the input word must be legal and land on r
            std::vector<int> cur_word = w.letters;
            for (const auto& mv : log) {
                auto p = mv.position;
                if (mv.kind == 'a') {
                    REQUIRE(p + 1 < cur_word.size());
                    REQUIRE(cur_word[p] == cur_word[p + 1]);
                    cur_word.erase(cur_word.begin() + static_cast<std::ptrdiff_t>(p), cur_word.begin() + static_cast<std::ptrdiff_t>(p + 2));
                } else if (mv.kind == 'b') {
                    REQUIRE(std::abs(cur_word[p] - cur_word[p + 1]) >= 2);
                    std::swap(cur_word[p], cur_word[p + 1]);
                } else {
                    REQUIRE(mv.kind == 'c');
                    REQUIRE((cur_word[p] == cur_word[p + 2] && std::abs(cur_word[p] - cur_word[p + 1]) == 1));
                    int x = cur_word[p], y = cur_word[p + 1];
                    cur_word[p] = y;
                    cur_word[p + 1] = x;
                    cur_word[p + 2] = y;
                }
            }
            CHECK(cur_word == r.letters);
        }
    }
}

TEST_CASE("canonical reduced words, degree <= 6") {
    CHECK(canonical_reduced_word(Permutation::identity(3)).empty());
    CHECK(canonical_reduced_word(P("[3,2,1]")).letters == std::vector<int>{1, 2, 1});
    CHECK(canonical_reduced_word(P("[3,1,2]")).letters == std::vector<int>{2, 1});
    for (int m = 1; m <= 6; ++m)
        for (const auto& w : all_permutations(m)) {
            auto word = canonical_reduced_word(w);
            REQUIRE(static_cast<int>(word.size()) == inversion_length(w));
            REQUIRE(evaluate_word(word, m) == w);
        }
    // lexicographic minimality against all reduced words in S_4
    auto dist = cayley_distances(4);
    for (const auto& w : all_permutations(4)) {
        std::vector<GenWord> words;
        std::vector<int> cur;
        all_words(4, static_cast<std::size_t>(dist.at(w)), cur, words);
        GenWord best{};
        bool found = false;
        for (const auto& cand : words)
            if (evaluate_word(cand, 4) == w && (!found || cand.letters < best.letters)) {
                best = cand;
                found = true;
            }
        CHECK(canonical_reduced_word(w).letters == best.letters);
    }
}

TEST_CASE("braid classes are exactly the reduced words, S_4") {
    auto dist = cayley_distances(4);
    for (const auto& w : all_permutations(4)) {
        auto cls = braid_class(canonical_reduced_word(w));
        std::set<GenWord> expected;
        std::vector<GenWord> words;
        std::vector<int> cur;
        all_words(4, static_cast<std::size_t>(dist.at(w)), cur, words);
        for (const auto& cand : words)
            if (evaluate_word(cand, 4) == w) expected.insert(cand);
        CHECK(std::set<GenWord>(cls.begin(), cls.end()) == expected);
    }
}

TEST_CASE("left order") {
    for (const auto& w : all_permutations(3)) CHECK(left_leq(Permutation::identity(3), w));
    CHECK(left_leq(P("[2,1,3]"), P("[3,1,2]")));
    CHECK_FALSE(left_leq(P("[2,1,3]"), P("[1,3,2]")));
}

TEST_CASE("weak_left_hasse shape") {
    CHECK(weak_left_hasse(2).edge_count() == 1);
    CHECK(weak_left_hasse(3).edge_count() == 6);
    CHECK(weak_left_hasse(4).edge_count() == 36);
    int fact = 1;
    for (int m = 1; m <= 5; ++m) {
        fact *= m;
        auto h = weak_left_hasse(m);
        CHECK(h.vertex_count() == static_cast<std::size_t>(fact));
        CHECK(h.edge_count() == static_cast<std::size_t>(fact * (m - 1) / 2));
        REQUIRE(h.sources().size() == 1);
        REQUIRE(h.sinks().size() == 1);
        CHECK(h.labels[h.sources()[0]] == Permutation::longest(m).str());
        CHECK(h.labels[h.sinks()[0]] == Permutation::identity(m).str());
        for (auto d : h.undirected_degrees()) CHECK(d == static_cast<std::size_t>(m - 1));
        // covers of the left order, computed from the definition
        std::vector<std::string> labels;
        auto perms = all_permutations(m);
        for (auto& p : perms) labels.push_back(p.str());
        auto oracle = hasse_from_order(labels, [&](std::size_t a, std::size_t b) { return left_leq(perms[a], perms[b]); });
        CHECK(oracle.labeled_edges() == h.labeled_edges());
    }
}

TEST_CASE("coset factorization") {
    auto f = coset_factorize(Permutation::identity(4));
    CHECK(f.i == 3);
    CHECK(f.v.is_identity());
    f = coset_factorize(P("[1,2,4,3]"));
    CHECK(f.i == 2);
    CHECK(f.v.is_identity());
    f = coset_factorize(P("[3,2,1]"));
    CHECK(f.i == 0);
    CHECK(f.v == P("[2,1]"));
    for (const auto& w : all_permutations(5)) {
        auto c = coset_factorize(w);
        CHECK(compose(coset_prefix(4, c.i), embed(c.v, 5)) == w);
        CHECK(inversion_length(w) == (4 - c.i) + inversion_length(c.v));
    }
}

TEST_CASE("roots after prefixes") {
    auto r = root_after_prefix(GenWord{{1, 2}}, 1, 3);
    CHECK(r.alpha_coords() == std::vector<int>{1, 1});
    CHECK(r.is_positive());
    CHECK_THROWS(root_after_prefix(GenWord{{1}}, 1, 2));
    r = root_after_prefix(GenWord{{2, 1, 2}}, 2, 3);
    CHECK(r.alpha_coords() == std::vector<int>{1, 0});
    auto dist = cayley_distances(4);
    for (const auto& w : all_permutations(4))
        for (const auto& word : braid_class(canonical_reduced_word(w)))
            for (std::size_t k = 1; k + 1 <= word.size(); ++k) CHECK(root_after_prefix(word, k, 4).is_positive());
    CHECK(root_after_prefix(GenWord{{1, 1}}, 1, 2).is_negative());
}
