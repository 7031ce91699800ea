#include "tau_atlas/verify.hpp"

#include <algorithm>
#include <map>

#include "tau_atlas/homological.hpp"

namespace tau_atlas {

namespace {

std::string num(int i) { return std::to_string(i); }

// {x : x T = 0} is zero, i.e. Lambda acts faithfully on T from the left.
bool left_action_faithful(const TwoSidedIdeal& t) {
    const Algebra& a = t.algebra();
    const auto& rows = t.space().basis();
    if (rows.empty()) return a.dim() == 0;
    Matrix m(a.dim(), a.dim() * rows.size(), a.field());
    for (std::size_t k = 0; k < a.dim(); ++k)
        for (std::size_t g = 0; g < rows.size(); ++g) {
            Vec prod = a.multiply(a.unit(k), rows[g]);
            std::copy(prod.begin(), prod.end(), m.row(k).begin() + static_cast<std::ptrdiff_t>(g * a.dim()));
        }
    return left_nullspace(m).rows() == 0;
}

}  // namespace

bool VerifyResult::ok() const {
    return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.ok(); });
}

CheckReport verify_homological(const SttContext& ctx) {
    CheckReport r("homological");
    const AlgebraPtr& a = ctx.algebra();
    const int n = ctx.n();
    Module reg = regular_module(a);

    for (int i = 1; i <= n; ++i) {
        auto res = resolution(simple(a, i), 5);
        std::vector<std::vector<int>> expect;
        if (i < n) {
            std::vector<int> mid{i + 1};
            if (i > 1) mid.insert(mid.begin(), i - 1);
            expect = {{i}, mid, {i}};
        } else {
            expect = {{n}};
            if (n > 1) expect.push_back({n - 1});
        }
        for (auto& t : res.terms) std::sort(t.begin(), t.end());
        r.expect(res.complete && res.terms == expect, "resolution of S_" + num(i));
    }
    for (int i = 1; i < n; ++i)
        for (int k = 0; k <= 2; ++k)
            r.expect(ext_dim(simple(a, i), reg, k) == (k == 2 ? 1u : 0u), "Ext^" + num(k) + "(S_" + num(i) + ", Lambda)");
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            long chi = 0;
            for (int k = 0; k <= 2; ++k) chi += (k % 2 ? -1 : 1) * static_cast<long>(tor_dim(simple(a, j), i, k));
            long expect = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
            r.expect(chi == expect, "chi(S_" + num(j) + ", S_" + num(i) + ")");
        }

    for (std::size_t t = 0; t < ctx.tilts().ideals.size(); ++t) {
        const std::string tag = " for T=I(" + ctx.tilts().words[t].str() + ")";
        Module tm = ideal_module(ctx.tilts().ideals[t]);
        for (int i = 1; i <= n; ++i) {
            Module s = simple(a, i);
            bool hom0 = hom_dim(tm, s) == 0, ext0 = ext_dim(tm, s, 1) == 0;
            r.expect(hom0 != ext0, "Hom/Ext^1 dichotomy at S_" + num(i) + tag);
            std::size_t tor0 = tor_dim(tm, i, 0), tor1 = tor_dim(tm, i, 1);
            r.expect((tor0 == 0) != (tor1 == 0), "Tor_0/Tor_1 dichotomy at S_" + num(i) + tag);
            if (i == n) continue;
            std::size_t e1 = ext_dim(s, tm, 1), e2 = ext_dim(s, tm, 2);
            r.expect(e2 == tor0 && e1 == tor1, "Ext(S_i, T) vs Tor(T, S_i) at i=" + num(i) + tag);
            r.expect((e1 == 0) != (e2 == 0), "exactly one of Ext^1, Ext^2 vanishes at i=" + num(i) + tag);
        }
    }
    return r;
}

CheckReport verify_tilting(const SttContext& ctx) {
    CheckReport r("tilting");
    const AlgebraPtr& a = ctx.algebra();
    const int n = ctx.n();
    const auto& cat = ctx.tilts();
    const bool heavy = n <= 4;

    CheckReport hasse_report;
    auto h = tilt_hasse(cat, &hasse_report);
    r.absorb(hasse_report);
    for (auto d : h.undirected_degrees()) r.expect(d == static_cast<std::size_t>(n - 1), "a tilting module without n-1 mutations");
    r.expect(h.labeled_edges() == weak_left_hasse(n).opposite().labeled_edges(), "tilt Hasse quiver is not opposite to the left order");

    Module pn = projective(a, n);
    for (std::size_t t = 0; t < cat.ideals.size(); ++t) {
        const auto& ideal = cat.ideals[t];
        const std::string tag = " for T=I(" + cat.words[t].str() + ")";
        auto parts = ideal_summands(ideal);
        r.expect(std::any_of(parts.begin(), parts.end(), [&](const Module& m) { return is_isomorphic(m, pn); }), "P_n is not a summand" + tag);
        for (const auto& p : parts) {
            std::vector<std::size_t> soc(static_cast<std::size_t>(n), 0);
            soc.back() = 1;
            r.expect(socle(p).dims() == soc, "a summand without socle S_n" + tag);
        }
        // strictly decreasing chain along the canonical word
        auto word = canonical_reduced_word(cat.words[t]).letters;
        TwoSidedIdeal chain = whole_algebra(a);
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            auto next = ideal_product(maximal_ideal(a, *it), chain);
            r.expect(next.dim() < chain.dim(), "chain along a reduced word is not strictly decreasing" + tag);
            chain = next;
        }
        r.expect(chain == ideal, "chain does not end at I(w)" + tag);
        if (!heavy) continue;

        auto check = check_tilting(parts);
        r.expect(check.ok(), "not tilting (" + check.failure + ")" + tag);
        Module tm = ideal_module(ideal);
        r.expect(hom_dim(tm, tm) == a->dim() && left_action_faithful(ideal), "Lambda -> End(T) is not bijective" + tag);
        for (int i = 1; i < n; ++i) {
            auto ii = maximal_ideal(a, i);
            r.expect(hom_dim(simple(a, i), tm) == 0, "Hom(S_i, T) != 0" + tag);
            auto up = hom_from_ideal(a, i, ideal);
            std::size_t ext1 = ext_dim(simple(a, i), tm, 1);
            r.expect(up.dim() - ideal.dim() == ext1, "Hom(I_i,T)/T does not match Ext^1(S_i,T)" + tag);
            if (up.dim() > ideal.dim()) r.expect(ideal_product(up, ii) == ideal, "Hom(I_i,T) I_i != T" + tag);
            r.expect(cat.find(up).has_value(), "Hom(I_i,T) is not tilting" + tag);
            if (n <= 3) r.expect(projective_dimension(ideal_module(up), 2) <= 1, "pd Hom(I_i,T) > 1" + tag);
            auto ti = ideal_product(ideal, ii);
            if (!(ti == ideal)) {
                r.expect(cat.find(ti).has_value(), "T I_i is not in the catalog" + tag);
                Module tim = ideal_module(ti);
                r.expect(hom_dim(tim, tim) == a->dim(), "dim End(T I_i) != dim Lambda" + tag);
            }
        }
        if (!(ideal == whole_algebra(a))) {
            bool grows = false;
            for (int i = 1; i < n; ++i) grows = grows || hom_from_ideal(a, i, ideal).dim() > ideal.dim();
            r.expect(grows, "non-projective T with Hom(I_i,T) = T for all i" + tag);
        }
    }
    if (n >= 2) r.expect(!is_tilting(maximal_ideal(a, n)), "I_n passes the tilting test");
    return r;
}

AtlasSummary summarize(const SttContext& ctx, const SttCatalog& cat) {
    AtlasSummary s;
    s.tilt_count = ctx.tilts().ideals.size();
    s.stt_count = cat.pairs.size();
    s.tilt_edges = tilt_hasse(ctx.tilts()).labeled_edges();
    s.stt_edges = cat.hasse.labeled_edges();
    for (const auto& m : ctx.catalog()) s.fingerprints.push_back(fingerprint(m).str());
    std::map<Permutation, std::string> by_word;
    for (std::size_t k = 0; k < cat.pairs.size(); ++k) {
        std::vector<std::string> fps;
        for (const auto& m : ctx.summands(cat.pairs[k])) fps.push_back(fingerprint(m).str());
        std::sort(fps.begin(), fps.end());
        std::string joined;
        for (const auto& f : fps) joined += f + ";";
        by_word[cat.words[k]] = joined;
    }
    for (auto& [w, f] : by_word) s.pair_fingerprints.push_back(w.str() + ":" + f);
    return s;
}

CheckReport compare_fields(int n, unsigned threads) {
    CheckReport r("field independence");
    std::vector<AtlasSummary> sums;
    for (Scalar p : {Scalar{2}, Scalar{3}}) {
        SttContext ctx(build_auslander(n, Field(p)));
        auto cat = enumerate_stt(ctx, threads);
        sums.push_back(summarize(ctx, cat));
    }
    const auto& x = sums[0];
    const auto& y = sums[1];
    r.expect(x.tilt_count == y.tilt_count, "tilting counts differ");
    r.expect(x.stt_count == y.stt_count, "support tau-tilting counts differ");
    r.expect(x.tilt_edges == y.tilt_edges, "tilting Hasse quivers differ");
    r.expect(x.stt_edges == y.stt_edges, "support tau-tilting Hasse quivers differ");
    r.expect(x.fingerprints == y.fingerprints, "summand fingerprints differ");
    r.expect(x.pair_fingerprints == y.pair_fingerprints, "pair fingerprints differ");
    return r;
}

VerifyResult run_verify(const VerifyOptions& opts) {
    VerifyResult out;
    SttContext ctx(build_auslander(opts.n, Field(opts.p)), opts.iso);
    auto cat = enumerate_stt(ctx, opts.threads);
    out.reports.push_back(check_semigroup_relations(ctx.algebra()));
    out.reports.push_back(verify_tilting(ctx));
    out.reports.push_back(verify_homological(ctx));
    out.reports.push_back(verify_pairs(ctx, cat));
    out.reports.push_back(verify_engine_agreement(ctx, cat));
    out.reports.push_back(verify_anti_isomorphism(ctx, cat));
    out.reports.push_back(verify_mutation_relations(ctx, cat));
    if (opts.n <= 4) out.reports.push_back(verify_generation_order(ctx, cat));
    if (opts.n <= 3) out.reports.push_back(verify_words(ctx, cat, 6));
    GammaBridge bridge(ctx);
    out.reports.push_back(verify_gamma_bijection(bridge, cat, opts.n <= 4));
    out.reports.push_back(gamma_tau_rigidity_check(bridge, cat));
    out.reports.push_back(verify_gamma_summands(bridge));
    if (opts.compare_fields) out.reports.push_back(compare_fields(opts.n, opts.threads));
    return out;
}

}  // namespace tau_atlas
