#pragma once

// Symmetric groups in one-line notation.
//
// Conventions: (u*w)(i) = u(w(i)); s_i is the transposition (i, i+1); a word
// [i1, ..., il] evaluates to s_{i1} s_{i2} ... s_{il}.  Everything is 1-based.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "tau_atlas/hasse.hpp"

namespace tau_atlas {

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int degree);
    static Permutation simple_reflection(int degree, int i);
    static Permutation longest(int degree);
    // Parses "[3,2,1]" or "3,2,1".
    static Permutation parse(const std::string& text);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;
    std::string str() const;  // "[3,2,1]"

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

struct GenWord {
    std::vector<int> letters;

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    std::string str() const;  // "1,2,1"
    static GenWord parse(const std::string& text);

    auto operator<=>(const GenWord&) const = default;
};

struct RootVector {
    std::vector<int> coords;  // in the basis e_1..e_m

    // Coordinates in the simple-root basis alpha_i = e_i - e_{i+1}.
    std::vector<int> alpha_coords() const;
    bool is_positive() const;
    bool is_negative() const;
};

Permutation compose(const Permutation& u, const Permutation& w);
int inversion_length(const Permutation& w);

bool has_left_descent(const Permutation& w, int i);   // l(s_i w) < l(w)
bool has_right_descent(const Permutation& w, int i);  // l(w s_i) < l(w)

Permutation evaluate_word(const GenWord& word, int degree);

// Braid-move rewriting.  Each move is recorded as (kind, position) where kind
// is 'a' (delete s_i s_i), 'b' (commute) or 'c' (braid).
struct WordMove {
    char kind;
    std::size_t position;
};
GenWord reduce_word(const GenWord& word, int degree, std::vector<WordMove>* log = nullptr);

GenWord canonical_reduced_word(const Permutation& w);
bool is_reduced(const GenWord& word, int degree);

// All words obtainable from `word` by commutation and braid moves.
std::vector<GenWord> braid_class(const GenWord& word);

bool left_leq(const Permutation& w, const Permutation& w2);

std::vector<Permutation> all_permutations(int degree);
HassePoset weak_left_hasse(int degree);

struct CosetFactor {
    int i;           // 0..n, equals w(n+1) - 1
    Permutation v;   // degree n
};
// w in S_{n+1} as s_{i+1} ... s_n * v with v in S_n.
CosetFactor coset_factorize(const Permutation& w);
Permutation coset_prefix(int n, int i);  // s_{i+1} ... s_n in S_{n+1}
Permutation embed(const Permutation& v, int degree);

RootVector root_after_prefix(const GenWord& word, std::size_t k, int degree);

}  // namespace tau_atlas
