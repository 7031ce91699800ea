#include "tau_atlas/tilting.hpp"

#include <algorithm>
#include <stdexcept>

#include "tau_atlas/homological.hpp"
#include "tau_atlas/iso.hpp"

namespace tau_atlas {

namespace {

Vec space_key(const TwoSidedIdeal& t) {
    Vec key;
    for (const auto& row : t.space().basis()) key.insert(key.end(), row.begin(), row.end());
    key.push_back(static_cast<Scalar>(t.dim()));
    return key;
}

std::vector<Permutation> length_lex(int n) {
    auto perms = all_permutations(n);
    std::stable_sort(perms.begin(), perms.end(), [](const Permutation& x, const Permutation& y) {
        return inversion_length(x) < inversion_length(y);
    });
    return perms;
}

}  // namespace

TwoSidedIdeal ideal_of_gen_word(const AlgebraPtr& a, const GenWord& word) {
    TwoSidedIdeal t = whole_algebra(a);
    for (int i : word.letters) {
        if (i < 1 || i >= a->n()) throw std::out_of_range("ideal_of_gen_word: letter out of range");
        t = ideal_product(t, maximal_ideal(a, i));
    }
    return t;
}

TwoSidedIdeal ideal_of_word(const AlgebraPtr& a, const Permutation& w) {
    if (w.degree() != a->n()) throw std::invalid_argument("ideal_of_word: permutation degree must equal n");
    return ideal_of_gen_word(a, canonical_reduced_word(w));
}

std::vector<Module> ideal_summands(const TwoSidedIdeal& t) {
    std::vector<Module> out;
    for (int i = 1; i <= t.algebra().n(); ++i) out.push_back(ideal_component(t, i));
    return out;
}

TiltingCheck check_tilting(const std::vector<Module>& summands) {
    TiltingCheck c;
    if (summands.empty()) {
        c.failure = "no summands";
        return c;
    }
    const int n = summands.front().n();
    c.projective_dim_ok = std::all_of(summands.begin(), summands.end(), [](const Module& m) { return projective_dimension(m, 2) <= 1; });
    c.ext_vanishes = true;
    for (const auto& x : summands)
        for (const auto& y : summands)
            if (c.ext_vanishes && ext_dim(x, y, 1) != 0) c.ext_vanishes = false;
    std::vector<const Module*> distinct;
    bool certified = true;
    for (const auto& m : summands) {
        if (m.is_zero()) continue;
        if (!certified_indecomposable(m)) certified = false;
        bool seen = std::any_of(distinct.begin(), distinct.end(), [&](const Module* d) { return is_isomorphic(*d, m); });
        if (!seen) distinct.push_back(&m);
    }
    c.distinct_summands = distinct.size();
    c.summands_ok = certified && c.distinct_summands == static_cast<std::size_t>(n);
    if (!c.projective_dim_ok)
        c.failure = "projective dimension exceeds 1";
    else if (!c.ext_vanishes)
        c.failure = "Ext^1(T,T) is nonzero";
    else if (!certified)
        c.failure = "a summand is not certified indecomposable";
    else if (!c.summands_ok)
        c.failure = std::to_string(c.distinct_summands) + " non-isomorphic summands, expected " + std::to_string(n);
    return c;
}

bool is_tilting(const TwoSidedIdeal& t) { return check_tilting(ideal_summands(t)).ok(); }

TwoSidedIdeal hom_from_ideal(const AlgebraPtr& a, int i, const TwoSidedIdeal& t, Side side) {
    if (t.algebra_ptr() != a) throw std::invalid_argument("hom_from_ideal: ideal of another algebra");
    auto ii = maximal_ideal(a, i);
    const auto& gens = ii.space().basis();
    const std::size_t d = a->dim();
    Matrix constraints(d, d * gens.size(), a->field());
    for (std::size_t k = 0; k < d; ++k) {
        Vec x = a->unit(k);
        for (std::size_t g = 0; g < gens.size(); ++g) {
            Vec prod = side == Side::Right ? a->multiply(x, gens[g]) : a->multiply(gens[g], x);
            Vec r = t.space().reduce(prod);
            std::copy(r.begin(), r.end(), constraints.row(k).begin() + static_cast<std::ptrdiff_t>(g * d));
        }
    }
    return TwoSidedIdeal(a, span_of(left_nullspace(constraints)));
}

Module left_ideal_module(const TwoSidedIdeal& t) {
    return right_ideal_module(t.algebra().opposite(), t.space(), "left(" + std::to_string(t.dim()) + ")");
}

std::optional<std::size_t> TiltCatalog::find(const TwoSidedIdeal& t) const {
    auto it = by_space.find(space_key(t));
    if (it == by_space.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> TiltCatalog::find(const Permutation& w) const {
    auto it = by_word.find(w);
    if (it == by_word.end()) return std::nullopt;
    return it->second;
}

std::size_t TiltCatalog::mutate(std::size_t k, int i) const { return mutation.at(k).at(static_cast<std::size_t>(i - 1)); }

TiltCatalog tilt_enumerate(const AlgebraPtr& a) {
    const int n = a->n();
    TiltCatalog cat;
    cat.algebra = a;
    std::vector<TwoSidedIdeal> gens;
    for (int i = 1; i < n; ++i) gens.push_back(maximal_ideal(a, i));
    for (const auto& w : length_lex(n)) {
        TwoSidedIdeal t;
        if (w.is_identity()) {
            t = whole_algebra(a);
        } else {
            int i = 1;
            while (!has_left_descent(w, i)) ++i;
            t = ideal_product(gens[static_cast<std::size_t>(i - 1)], cat.ideals[cat.by_word.at(compose(Permutation::simple_reflection(n, i), w))]);
        }
        auto key = space_key(t);
        if (cat.by_space.count(key)) throw std::logic_error("tilt_enumerate: " + w.str() + " repeats an ideal");
        cat.by_space.emplace(std::move(key), cat.ideals.size());
        cat.by_word.emplace(w, cat.ideals.size());
        cat.words.push_back(w);
        cat.ideals.push_back(std::move(t));
    }
    std::size_t fact = 1;
    for (int k = 2; k <= n; ++k) fact *= static_cast<std::size_t>(k);
    if (cat.ideals.size() != fact) throw std::logic_error("tilt_enumerate: count mismatch");
    for (std::size_t k = 0; k < cat.words.size(); ++k) {
        std::vector<std::size_t> row;
        for (int i = 1; i < n; ++i) row.push_back(cat.by_word.at(compose(Permutation::simple_reflection(n, i), cat.words[k])));
        cat.mutation.push_back(std::move(row));
    }
    return cat;
}

HassePoset tilt_hasse(const TiltCatalog& cat, CheckReport* report) {
    const AlgebraPtr& a = cat.algebra;
    const int n = a->n();
    HassePoset h;
    for (const auto& w : cat.words) h.labels.push_back(w.str());
    CheckReport local{"tilt_hasse"};
    for (std::size_t k = 0; k < cat.ideals.size(); ++k)
        for (int i = 1; i < n; ++i) {
            const auto& t = cat.ideals[k];
            auto it = ideal_product(maximal_ideal(a, i), t);
            if (!(it == t)) {
                auto j = cat.find(it);
                local.expect(j.has_value(), "I_" + std::to_string(i) + " I(" + cat.words[k].str() + ") is not in the catalog");
                if (!j) continue;
                local.expect(*j == cat.mutate(k, i), "I_" + std::to_string(i) + " I(w) != I(s_i w) for w = " + cat.words[k].str());
                h.edges.emplace_back(k, *j);
                h.edge_labels.push_back(i);
            } else {
                auto up = cat.find(hom_from_ideal(a, i, t, Side::Left));
                bool good = up && *up != k && ideal_product(maximal_ideal(a, i), cat.ideals[*up]) == t && *up == cat.mutate(k, i);
                local.expect(good, "upper neighbour of I(" + cat.words[k].str() + ") in direction " + std::to_string(i));
            }
        }
    if (report) *report = std::move(local);
    return h;
}

CheckReport check_semigroup_relations(const AlgebraPtr& a) {
    CheckReport r{"semigroup relations"};
    const int n = a->n();
    std::vector<TwoSidedIdeal> ii;
    for (int i = 1; i < n; ++i) ii.push_back(maximal_ideal(a, i));
    auto at = [&](int i) -> const TwoSidedIdeal& { return ii[static_cast<std::size_t>(i - 1)]; };
    for (int i = 1; i < n; ++i) {
        r.expect(ideal_product(at(i), at(i)) == at(i), "I_" + std::to_string(i) + "^2 != I_" + std::to_string(i));
        for (int j = i + 1; j < n; ++j) {
            auto tag = std::to_string(i) + "," + std::to_string(j);
            if (j - i >= 2)
                r.expect(ideal_product(at(i), at(j)) == ideal_product(at(j), at(i)), "commutation fails for " + tag);
            else
                r.expect(ideal_product(ideal_product(at(i), at(j)), at(i)) == ideal_product(ideal_product(at(j), at(i)), at(j)),
                         "braid relation fails for " + tag);
        }
    }
    return r;
}

}  // namespace tau_atlas
