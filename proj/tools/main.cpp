#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "tau_atlas/serialize.hpp"

using namespace tau_atlas;

namespace {

struct Config {
    int n = 2;
    Scalar p = 2;
    std::string format = "json";
    std::string out;
    unsigned threads = 0;
    std::uint64_t seed = 1;
    std::string word;
    std::string as = "word";
    std::string of = "stt";
    bool p2p3 = false;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

unsigned resolve_threads(unsigned flag) {
    if (flag) return flag;
    if (const char* env = std::getenv("TAU_ATLAS_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        std::cerr << "ignoring TAU_ATLAS_THREADS=" << env << "\n";
    }
    return 1;
}

void emit(const Config& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + cfg.out);
    f << text;
    if (!f) throw std::runtime_error("write failed: " + cfg.out);
}

std::size_t factorial(int m) {
    std::size_t r = 1;
    for (int k = 2; k <= m; ++k) r *= static_cast<std::size_t>(k);
    return r;
}

IsoOptions iso_options(const Config& cfg) {
    IsoOptions o;
    o.seed = cfg.seed;
    return o;
}

// Word or permutation in S_degree.
Permutation read_element(const Config& cfg, int degree) {
    if (cfg.as == "perm") {
        Permutation w = Permutation::parse(cfg.word);
        if (w.degree() != degree) throw std::invalid_argument("permutation must have degree " + std::to_string(degree));
        return w;
    }
    GenWord word = GenWord::parse(cfg.word);
    for (int l : word.letters)
        if (l < 1 || l >= degree) throw std::invalid_argument("letter " + std::to_string(l) + " out of range for S_" + std::to_string(degree));
    return evaluate_word(word, degree);
}

int cmd_tilt(const Config& cfg) {
    auto t0 = Clock::now();
    auto a = build_auslander(cfg.n, Field(cfg.p));
    TiltCatalog cat = tilt_enumerate(a);
    HassePoset h = tilt_hasse(cat);
    emit(cfg, cfg.format == "dot" ? hasse_dot(h, "tilt") : tilt_catalog_json(cat));
    std::cerr << "tilt n=" << cfg.n << " p=" << cfg.p << " count " << cat.ideals.size() << " (" << seconds_since(t0) << " s)\n";
    if (cat.ideals.size() != factorial(cfg.n)) {
        std::cerr << "expected " << factorial(cfg.n) << "\n";
        return 1;
    }
    return 0;
}

int cmd_stt(const Config& cfg) {
    auto t0 = Clock::now();
    SttContext ctx(build_auslander(cfg.n, Field(cfg.p)), iso_options(cfg));
    SttCatalog cat = enumerate_stt(ctx, resolve_threads(cfg.threads));
    emit(cfg, cfg.format == "dot" ? hasse_dot(cat.hasse, "stt") : stt_catalog_json(ctx, cat));
    std::cerr << "stt n=" << cfg.n << " p=" << cfg.p << " count " << cat.pairs.size() << " (" << seconds_since(t0) << " s)\n";
    for (const auto& msg : cat.problems) std::cerr << "problem: " << msg << "\n";
    if (cat.pairs.size() != factorial(cfg.n + 1) || !cat.problems.empty()) {
        std::cerr << "expected " << factorial(cfg.n + 1) << " pairs\n";
        return 1;
    }
    return 0;
}

int cmd_ideal(const Config& cfg) {
    auto a = build_auslander(cfg.n, Field(cfg.p));
    Permutation w = read_element(cfg, cfg.n);
    TiltCatalog cat = tilt_enumerate(a);
    auto k = cat.find(w);
    if (!k) throw std::runtime_error("no ideal for " + w.str());
    emit(cfg, ideal_json(cat, *k));
    return 0;
}

int cmd_stt_of(const Config& cfg) {
    SttContext ctx(build_auslander(cfg.n, Field(cfg.p)), iso_options(cfg));
    Permutation w = read_element(cfg, cfg.n + 1);
    emit(cfg, pair_json(ctx, ctx.of_word(w)));
    return 0;
}

int cmd_hasse(const Config& cfg) {
    HassePoset h;
    if (cfg.of == "weak") {
        h = weak_left_hasse(cfg.n);
    } else if (cfg.of == "tilt") {
        h = tilt_hasse(tilt_enumerate(build_auslander(cfg.n, Field(cfg.p))));
    } else {
        SttContext ctx(build_auslander(cfg.n, Field(cfg.p)), iso_options(cfg));
        SttCatalog cat = enumerate_stt(ctx, resolve_threads(cfg.threads));
        if (cfg.of == "gamma") {
            GammaBridge bridge(ctx);
            CheckReport r = verify_gamma_bijection(bridge, cat, false);
            if (!r.ok()) {
                for (const auto& f : r.failures) std::cerr << f << "\n";
                return 1;
            }
        }
        h = cat.hasse;
    }
    emit(cfg, cfg.format == "dot" ? hasse_dot(h, cfg.of) : hasse_json(h));
    return 0;
}

int cmd_gamma(const Config& cfg) {
    SttContext ctx(build_auslander(cfg.n, Field(cfg.p)), iso_options(cfg));
    SttCatalog cat = enumerate_stt(ctx, resolve_threads(cfg.threads));
    GammaBridge bridge(ctx);
    CheckReport r = verify_gamma_bijection(bridge, cat, false);
    emit(cfg, cfg.format == "dot" ? hasse_dot(cat.hasse, "gamma") : gamma_catalog_json(bridge, cat));
    std::cerr << "gamma n=" << cfg.n << " count " << cat.pairs.size() << "\n";
    for (const auto& f : r.failures) std::cerr << f << "\n";
    return r.ok() && cat.pairs.size() == factorial(cfg.n + 1) ? 0 : 1;
}

int cmd_verify(const Config& cfg) {
    auto t0 = Clock::now();
    VerifyOptions opts;
    opts.n = cfg.n;
    opts.p = cfg.p;
    opts.compare_fields = cfg.p2p3;
    opts.threads = resolve_threads(cfg.threads);
    opts.iso = iso_options(cfg);
    VerifyResult res = run_verify(opts);
    emit(cfg, report_json(res, opts));
    for (const auto& r : res.reports) {
        std::cerr << (r.ok() ? "ok   " : "FAIL ") << r.name << " (" << r.checked << ")\n";
        for (const auto& f : r.failures) std::cerr << "  " << f << "\n";
    }
    std::cerr << "verify n=" << cfg.n << " p=" << cfg.p << (res.ok() ? " passed" : " failed") << " in " << seconds_since(t0) << " s\n";
    return res.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tau-atlas: tilting ideals and support tau-tilting pairs over the Auslander algebra of K[x]/(x^n)"};
    app.require_subcommand(1);
    Config cfg;

    auto common = [&](CLI::App* sub, bool format) {
        sub->add_option("--n", cfg.n, "size n >= 1")->check(CLI::Range(1, 64));
        sub->add_option("--p", cfg.p, "prime field modulus")->check(CLI::Range(2, 65521));
        sub->add_option("--out", cfg.out, "write output to this file");
        sub->add_option("--threads", cfg.threads, "worker threads (default TAU_ATLAS_THREADS or 1)");
        sub->add_option("--seed", cfg.seed, "seed for sampled isomorphism search");
        if (format) sub->add_option("--format", cfg.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    };
    auto word = [&](CLI::App* sub) {
        sub->add_option("--word", cfg.word, "comma-separated letters, or [..] with --as perm")->required();
        sub->add_option("--as", cfg.as, "word or perm")->check(CLI::IsMember({"word", "perm"}));
    };

    auto* tilt = app.add_subcommand("tilt", "enumerate tilting ideals");
    common(tilt, true);
    auto* stt = app.add_subcommand("stt", "enumerate support tau-tilting pairs");
    common(stt, true);
    auto* ideal = app.add_subcommand("ideal", "describe I(w) for w in S_n");
    common(ideal, false);
    word(ideal);
    auto* stt_of = app.add_subcommand("stt-of", "describe the pair of w in S_{n+1}");
    common(stt_of, false);
    word(stt_of);
    auto* hasse = app.add_subcommand("hasse", "Hasse quiver of a poset");
    common(hasse, true);
    hasse->add_option("--of", cfg.of, "weak, tilt, stt or gamma")->check(CLI::IsMember({"weak", "tilt", "stt", "gamma"}));
    auto* gamma = app.add_subcommand("gamma", "pairs over the preprojective quotient");
    common(gamma, true);
    auto* verify = app.add_subcommand("verify", "run the invariant suites");
    common(verify, false);
    verify->add_flag("--p2p3", cfg.p2p3, "compare results over F_2 and F_3");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*tilt) return cmd_tilt(cfg);
        if (*stt) return cmd_stt(cfg);
        if (*ideal) return cmd_ideal(cfg);
        if (*stt_of) return cmd_stt_of(cfg);
        if (*hasse) return cmd_hasse(cfg);
        if (*gamma) return cmd_gamma(cfg);
        if (*verify) return cmd_verify(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
