#include "tau_atlas/stt.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "tau_atlas/homological.hpp"
#include "tau_atlas/parallel.hpp"

namespace tau_atlas {

namespace {

std::size_t factorial(int n) {
    std::size_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
    return f;
}

std::string slots_str(const SttPair& u) {
    std::string s = "(";
    for (std::size_t k = 0; k < u.slots.size(); ++k) s += (k ? "," : "") + std::to_string(u.slots[k]);
    return s + ")";
}

}  // namespace

std::vector<std::size_t> SttPair::key() const {
    std::vector<std::size_t> k;
    for (auto id : slots)
        if (id) k.push_back(id);
    std::sort(k.begin(), k.end());
    return k;
}

std::size_t SttPair::summand_count() const {
    return static_cast<std::size_t>(std::count_if(slots.begin(), slots.end(), [](std::size_t id) { return id != 0; }));
}

Approximation min_left_approx(const Module& x, const std::vector<Module>& v) {
    const AlgebraPtr& a = x.algebra_ptr();
    std::vector<std::vector<ModuleMap>> homs;
    std::vector<std::pair<std::size_t, ModuleMap>> copies;
    for (std::size_t j = 0; j < v.size(); ++j) {
        homs.push_back(hom_basis(x, v[j]));
        for (const auto& f : homs.back()) copies.emplace_back(j, f);
    }
    std::map<std::pair<std::size_t, std::size_t>, std::vector<ModuleMap>> between;
    auto maps_between = [&](std::size_t s, std::size_t t) -> const std::vector<ModuleMap>& {
        auto it = between.find({s, t});
        if (it == between.end()) it = between.emplace(std::make_pair(s, t), hom_basis(v[s], v[t])).first;
        return it->second;
    };
    std::vector<bool> active(copies.size(), true);
    auto approximates = [&] {
        for (std::size_t t = 0; t < v.size(); ++t) {
            if (homs[t].empty()) continue;
            Echelon span(flatten(homs[t].front()).size(), x.field());
            for (std::size_t c = 0; c < copies.size(); ++c) {
                if (!active[c]) continue;
                for (const auto& g : maps_between(copies[c].first, t)) span.insert(flatten(compose(g, copies[c].second)));
            }
            for (const auto& h : homs[t])
                if (!span.contains(flatten(h))) return false;
        }
        return true;
    };
    for (std::size_t c = copies.size(); c-- > 0;) {
        active[c] = false;
        if (!approximates()) active[c] = true;
    }
    Approximation out;
    std::vector<Module> parts;
    std::vector<ModuleMap> maps;
    for (std::size_t c = 0; c < copies.size(); ++c)
        if (active[c]) {
            out.copies.push_back(copies[c].first);
            parts.push_back(v[copies[c].first]);
            maps.push_back(copies[c].second);
        }
    out.target = direct_sum(a, parts);
    out.map = maps.empty() ? zero_map(x, out.target) : map_into_sum(maps);
    return out;
}

SttContext::SttContext(AlgebraPtr a, IsoOptions opts)
    : alg_(std::move(a)), opts_(opts), tilts_(tilt_enumerate(alg_)), m_(ideal_M(alg_)), registry_(opts) {
    const int nv = n();
    for (std::size_t k = 0; k < tilts_.ideals.size(); ++k) {
        const std::string w = tilts_.words[k].str();
        std::vector<std::size_t> ts, bars;
        for (int i = 1; i <= nv; ++i) {
            Module t = ideal_component(tilts_.ideals[k], i);
            t.set_provenance("e" + std::to_string(i) + "*I(w=" + w + ")");
            ts.push_back(registry_.intern(t));
            if (i == nv) continue;
            Module bar = act_quotient(t, m_).module;
            bar.set_provenance("overline(e" + std::to_string(i) + "*I(w=" + w + "))");
            bars.push_back(bar.is_zero() ? 0 : registry_.intern(bar));
        }
        t_ids_.push_back(std::move(ts));
        bar_ids_.push_back(std::move(bars));
    }
    catalog_ = registry_.modules();
    for (std::size_t k = 0; k < tilts_.ideals.size(); ++k)
        for (int i = 0; i <= nv; ++i) classes_.emplace(mu_interval(k, i).key(), std::make_pair(i, k));
}

std::vector<Module> SttContext::summands(const SttPair& u) const {
    std::vector<Module> out;
    for (auto id : u.slots)
        if (id) out.push_back(summand(id));
    return out;
}

Module SttContext::module(const SttPair& u) const { return direct_sum(alg_, summands(u)); }

std::vector<int> SttContext::support_complement(const SttPair& u) const {
    Module m = module(u);
    std::vector<int> out;
    for (int v = 1; v <= n(); ++v)
        if (m.dim(v) == 0) out.push_back(v);
    return out;
}

SttPair SttContext::mu_interval(std::size_t k, int i) const {
    if (i < 0 || i > n()) throw std::out_of_range("mu_interval: i must lie in 0..n");
    SttPair u;
    for (int j = 1; j <= n(); ++j) u.slots.push_back(j <= i ? summand_id(k, j) : bar_id(k, j - 1));
    return u;
}

SttPair SttContext::top_pair() const { return tilting_pair(*tilts_.find(Permutation::identity(n()))); }

SttPair SttContext::of_word(const Permutation& w) const {
    if (w.degree() != n() + 1) throw std::invalid_argument("of_word: permutation must lie in S_{n+1}");
    auto [i, v] = coset_factorize(w);
    return mu_interval(*tilts_.find(v), i);
}

std::optional<std::pair<int, std::size_t>> SttContext::classify(const SttPair& u) const {
    auto it = classes_.find(u.key());
    if (it == classes_.end()) return std::nullopt;
    return it->second;
}

bool SttContext::left_mutable(const SttPair& u, int k) const {
    std::size_t id = u.slots.at(static_cast<std::size_t>(k - 1));
    if (!id) return false;
    std::vector<Module> others;
    for (std::size_t j = 0; j < u.slots.size(); ++j)
        if (j != static_cast<std::size_t>(k - 1) && u.slots[j]) others.push_back(summand(u.slots[j]));
    return !in_fac(summand(id), direct_sum(alg_, others));
}

std::size_t SttContext::identify(const Module& y) const {
    if (certified_indecomposable(y))
        if (auto id = registry_.find(y)) return *id;
    auto split = split_indecomposables(y, catalog_, opts_);
    auto mult = split.multiplicities();
    if (mult.size() != 1) throw std::runtime_error("left_mutation: cokernel is not a power of one indecomposable");
    return mult.begin()->first + 1;
}

std::optional<SttPair> SttContext::left_mutation(const SttPair& u, int k) const {
    const auto slot = static_cast<std::size_t>(k - 1);
    std::size_t id = u.slots.at(slot);
    if (!id) return std::nullopt;
    std::vector<Module> others;
    for (std::size_t j = 0; j < u.slots.size(); ++j)
        if (j != slot && u.slots[j]) others.push_back(summand(u.slots[j]));
    const Module& x = summand(id);
    if (in_fac(x, direct_sum(alg_, others))) return std::nullopt;
    auto approx = min_left_approx(x, others);
    Module y = cokernel(approx.map, approx.target).module;
    SttPair out = u;
    out.slots[slot] = y.is_zero() ? 0 : identify(y);
    return out;
}

bool SttContext::leq(const SttPair& u, const SttPair& v) const {
    Module big = module(v);
    for (const auto& x : summands(u))
        if (!in_fac(x, big)) return false;
    return true;
}

std::optional<std::size_t> SttCatalog::find(const SttPair& u) const {
    auto it = index.find(u.key());
    if (it == index.end()) return std::nullopt;
    return it->second;
}

std::size_t SttCatalog::mutate(std::size_t k, int j) const {
    const auto s = static_cast<std::size_t>(j - 1);
    if (left.at(k).at(s) != npos) return left[k][s];
    if (right.at(k).at(s) != npos) return right[k][s];
    throw std::logic_error("SttCatalog::mutate: no edge at coordinate " + std::to_string(j));
}

SttCatalog enumerate_stt(const SttContext& ctx, unsigned threads) {
    const int n = ctx.n();
    const auto nn = static_cast<std::size_t>(n);
    SttCatalog cat;
    auto add = [&](const SttPair& u) {
        cat.index.emplace(u.key(), cat.pairs.size());
        cat.pairs.push_back(u);
        cat.left.emplace_back(nn, SttCatalog::npos);
        cat.right.emplace_back(nn, SttCatalog::npos);
    };
    add(ctx.top_pair());
    std::vector<std::size_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<std::optional<SttPair>> results(frontier.size() * nn);
        parallel_for(results.size(), threads, [&](std::size_t t) {
            results[t] = ctx.left_mutation(cat.pairs[frontier[t / nn]], static_cast<int>(t % nn) + 1);
        });
        std::vector<std::size_t> next;
        for (std::size_t t = 0; t < results.size(); ++t) {
            if (!results[t]) continue;
            const std::size_t from = frontier[t / nn];
            const std::size_t s = t % nn;
            const SttPair& v = *results[t];
            std::size_t to;
            if (auto hit = cat.find(v)) {
                to = *hit;
                if (!(cat.pairs[to] == v))
                    cat.problems.push_back("coordinates disagree for " + slots_str(v) + " vs " + slots_str(cat.pairs[to]));
            } else {
                to = cat.pairs.size();
                add(v);
                next.push_back(to);
            }
            if (to == from) {
                cat.problems.push_back("left mutation fixed " + slots_str(v));
                continue;
            }
            cat.left[from][s] = to;
            if (cat.right[to][s] != SttCatalog::npos) cat.problems.push_back("two arrows into " + slots_str(v) + " at one coordinate");
            cat.right[to][s] = from;
            cat.hasse.edges.emplace_back(from, to);
            cat.hasse.edge_labels.push_back(static_cast<int>(s) + 1);
        }
        frontier = std::move(next);
    }
    if (cat.pairs.size() != factorial(n + 1))
        cat.problems.push_back("found " + std::to_string(cat.pairs.size()) + " pairs, expected " + std::to_string(factorial(n + 1)));

    cat.words.assign(cat.pairs.size(), Permutation::identity(n + 1));
    std::vector<bool> hit(cat.pairs.size(), false);
    for (const auto& w : all_permutations(n + 1)) {
        auto k = cat.find(ctx.of_word(w));
        if (!k) {
            cat.problems.push_back("I(" + w.str() + ") is missing from the enumeration");
            continue;
        }
        if (hit[*k]) cat.problems.push_back("I(" + w.str() + ") repeats a pair");
        hit[*k] = true;
        cat.words[*k] = w;
    }
    for (const auto& w : cat.words) cat.hasse.labels.push_back(w.str());
    return cat;
}

CheckReport verify_pairs(const SttContext& ctx, const SttCatalog& cat) {
    CheckReport r("pairs");
    const int n = ctx.n();
    r.expect(cat.problems.empty(), cat.problems.empty() ? "" : cat.problems.front());
    r.expect(cat.pairs.size() == factorial(n + 1), "catalog size");
    r.expect(ctx.registry().all_certified(), "an isomorphism search fell outside the certified regime");
    for (std::size_t k = 0; k < cat.pairs.size(); ++k) {
        const auto& u = cat.pairs[k];
        const std::string tag = "pair w=" + cat.words[k].str();
        Module m = ctx.module(u);
        r.expect(is_tau_rigid(m), tag + " is not tau-rigid");
        r.expect(u.summand_count() + ctx.support_complement(u).size() == static_cast<std::size_t>(n), tag + " has the wrong size");
        for (auto x : ctx.summands(u)) r.expect(certified_indecomposable(x), tag + " has a summand not certified indecomposable");
        auto cls = ctx.classify(u);
        r.expect(cls.has_value(), tag + " is not of the form mu_[i+1,n](T)");
        if (!cls) continue;
        std::size_t with_top = 0;
        for (const auto& x : ctx.summands(u))
            if (x.dim(n) > 0) ++with_top;
        r.expect(with_top == static_cast<std::size_t>(cls->first), tag + ": S_n count differs from i");
        r.expect(ctx.mu_interval(cls->second, cls->first) == u, tag + ": classification round trip");
        auto [i, v] = coset_factorize(cat.words[k]);
        r.expect(i == cls->first && ctx.tilts().words[cls->second] == v, tag + ": classification disagrees with the coset factorization");
    }
    // overline T_i is zero or indecomposable with simple socle S_{n-i} and no factor S_n
    for (std::size_t k = 0; k < ctx.tilts().ideals.size(); ++k)
        for (int i = 1; i < n; ++i) {
            std::size_t id = ctx.bar_id(k, i);
            if (!id) continue;
            const Module& b = ctx.summand(id);
            auto soc = socle(b).dims();
            std::vector<std::size_t> expect(static_cast<std::size_t>(n), 0);
            expect[static_cast<std::size_t>(n - i - 1)] = 1;
            r.expect(soc == expect && b.dim(n) == 0, "overline T_" + std::to_string(i) + " of I(" + ctx.tilts().words[k].str() + ")");
        }
    return r;
}

CheckReport verify_anti_isomorphism(const SttContext& ctx, const SttCatalog& cat) {
    CheckReport r("anti-isomorphism");
    const int n = ctx.n();
    std::map<Permutation, std::size_t> where;
    for (std::size_t k = 0; k < cat.words.size(); ++k) where[cat.words[k]] = k;
    r.expect(where.size() == factorial(n + 1), "w -> I(w) is not a bijection");
    for (const auto& [w, k] : where)
        for (int j = 1; j <= n; ++j) {
            Permutation sw = compose(Permutation::simple_reflection(n + 1, j), w);
            bool longer = inversion_length(sw) > inversion_length(w);
            auto it = where.find(sw);
            if (it == where.end()) continue;
            bool below = cat.left[k][static_cast<std::size_t>(j - 1)] == it->second;
            bool above = cat.right[k][static_cast<std::size_t>(j - 1)] == it->second;
            r.expect(longer ? below : above, "l(s_j w) > l(w) does not match I(s_j w) < I(w) for w=" + w.str() + ", j=" + std::to_string(j));
        }
    auto weak = weak_left_hasse(n + 1).opposite();
    std::set<std::tuple<std::string, std::string, int>> a, b;
    for (std::size_t e = 0; e < weak.edges.size(); ++e)
        a.emplace(weak.labels[weak.edges[e].first], weak.labels[weak.edges[e].second], weak.edge_labels[e]);
    for (std::size_t e = 0; e < cat.hasse.edges.size(); ++e)
        b.emplace(cat.hasse.labels[cat.hasse.edges[e].first], cat.hasse.labels[cat.hasse.edges[e].second], cat.hasse.edge_labels[e]);
    r.expect(a == b, "Hasse quiver is not the opposite of the left order on S_{n+1}");
    return r;
}

CheckReport verify_mutation_relations(const SttContext& ctx, const SttCatalog& cat) {
    CheckReport r("mutation relations");
    const int n = ctx.n();
    for (std::size_t u = 0; u < cat.pairs.size(); ++u) {
        const std::string tag = " at w=" + cat.words[u].str();
        for (int j = 1; j <= n; ++j) {
            r.expect(cat.mutate(cat.mutate(u, j), j) == u, "mu_" + std::to_string(j) + "^2" + tag);
            for (int k = j + 1; k <= n; ++k) {
                if (k - j >= 2) {
                    r.expect(cat.mutate(cat.mutate(u, k), j) == cat.mutate(cat.mutate(u, j), k),
                             "mu_" + std::to_string(j) + " mu_" + std::to_string(k) + " commutation" + tag);
                } else {
                    auto jkj = cat.mutate(cat.mutate(cat.mutate(u, j), k), j);
                    auto kjk = cat.mutate(cat.mutate(cat.mutate(u, k), j), k);
                    r.expect(jkj == kjk, "braid relation for " + std::to_string(j) + "," + std::to_string(k) + tag);
                }
            }
        }
    }
    return r;
}

CheckReport verify_engine_agreement(const SttContext& ctx, const SttCatalog& cat) {
    CheckReport r("engine agreement");
    const int n = ctx.n();
    const auto& tilts = ctx.tilts();
    // the structural catalog {mu_[i+1,n](T)} is the enumerated one
    std::set<std::vector<std::size_t>> structural;
    for (std::size_t t = 0; t < tilts.ideals.size(); ++t)
        for (int i = 0; i <= n; ++i) structural.insert(ctx.mu_interval(t, i).key());
    std::set<std::vector<std::size_t>> generic;
    for (const auto& u : cat.pairs) generic.insert(u.key());
    r.expect(structural == generic, "structural and generic catalogs differ");
    // mu_{i+1} ... mu_n(T) step by step through the generic engine
    for (std::size_t t = 0; t < tilts.ideals.size(); ++t) {
        SttPair u = ctx.tilting_pair(t);
        for (int i = n - 1; i >= 0; --i) {
            auto next = ctx.left_mutation(u, i + 1);
            r.expect(next.has_value(), "coordinate " + std::to_string(i + 1) + " not left mutable for T=" + tilts.words[t].str());
            if (!next) break;
            r.expect(*next == ctx.mu_interval(t, i), "mu_[" + std::to_string(i + 1) + ",n] differs for T=" + tilts.words[t].str());
            u = *next;
        }
    }
    // index shifts: every (pair, coordinate) against the graph
    for (std::size_t t = 0; t < tilts.ideals.size(); ++t)
        for (int i = 0; i <= n; ++i) {
            auto u = cat.find(ctx.mu_interval(t, i));
            if (!u) continue;
            for (int k = 1; k <= n; ++k) {
                SttPair predicted;
                if (k <= i - 1)
                    predicted = ctx.mu_interval(tilts.mutate(t, k), i);
                else if (k >= i + 2)
                    predicted = ctx.mu_interval(tilts.mutate(t, k - 1), i);
                else if (k == i)
                    predicted = ctx.mu_interval(t, i - 1);
                else
                    predicted = ctx.mu_interval(t, i + 1);
                r.expect(cat.pairs[cat.mutate(*u, k)] == predicted,
                         "mu_" + std::to_string(k) + " of mu_[" + std::to_string(i + 1) + ",n](I(" + tilts.words[t].str() + "))");
            }
        }
    return r;
}

CheckReport verify_generation_order(const SttContext& ctx, const SttCatalog& cat) {
    CheckReport r("generation order");
    auto h = hasse_from_order(cat.hasse.labels, [&](std::size_t a, std::size_t b) { return ctx.leq(cat.pairs[a], cat.pairs[b]); });
    r.expect(h.edge_set() == cat.hasse.edge_set(), "Fac-inclusion Hasse quiver differs from the mutation quiver");
    auto zero = std::find_if(cat.pairs.begin(), cat.pairs.end(), [](const SttPair& u) { return u.summand_count() == 0; });
    r.expect(zero != cat.pairs.end(), "the zero pair is missing");
    for (const auto& u : cat.pairs) {
        r.expect(ctx.leq(u, cat.pairs.front()), "Lambda is not the maximum");
        if (zero != cat.pairs.end()) r.expect(ctx.leq(*zero, u), "0 is not the minimum");
    }
    return r;
}

CheckReport verify_words(const SttContext& ctx, const SttCatalog& cat, std::size_t max_length) {
    CheckReport r("arbitrary words");
    const int m = ctx.n() + 1;
    std::size_t start = *cat.find(ctx.top_pair());
    std::vector<std::vector<int>> layer{{}};
    for (std::size_t len = 1; len <= max_length && m > 1; ++len) {
        std::vector<std::vector<int>> grown;
        for (const auto& w : layer)
            for (int i = 1; i < m; ++i) {
                auto x = w;
                x.push_back(i);
                grown.push_back(std::move(x));
            }
        for (const auto& w : grown) {
            std::size_t u = start;
            for (auto it = w.rbegin(); it != w.rend(); ++it) u = cat.mutate(u, *it);
            GenWord word{w};
            r.expect(cat.pairs[u] == ctx.of_word(evaluate_word(word, m)), "word " + word.str());
        }
        layer = std::move(grown);
    }
    return r;
}

}  // namespace tau_atlas
