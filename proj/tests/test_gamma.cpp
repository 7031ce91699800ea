#include <doctest.h>

#include <set>

#include "tau_atlas/gamma.hpp"

using namespace tau_atlas;

using Layers = std::vector<std::string>;

namespace {

Layers layers(const GammaBridge& b, const SttPair& g) {
    Layers out;
    for (auto id : g.slots) out.push_back(id ? radical_layer_string(b.summand(id)) : "-");
    return out;
}

}  // namespace

TEST_CASE("preprojective quotient dimensions") {
    for (int n = 1; n <= 4; ++n) {
        SttContext ctx(build_auslander(n));
        GammaBridge bridge(ctx);
        CHECK(bridge.gamma()->dim() == static_cast<std::size_t>(n * (n + 1) * (n + 2) / 6));
    }
}

TEST_CASE("projectives go to projectives") {
    SttContext c2(build_auslander(2));
    GammaBridge b2(c2);
    CHECK(layers(b2, b2.to_gamma(c2.top_pair())) == Layers{"1/2", "2/1"});

    SttContext c3(build_auslander(3));
    GammaBridge b3(c3);
    CHECK(layers(b3, b3.to_gamma(c3.top_pair())) == Layers{"1/2/3", "2/13/2", "3/2/1"});
    for (int i = 1; i <= 3; ++i) CHECK(is_isomorphic(b3.to_gamma(projective(c3.algebra(), i)), projective(b3.gamma(), i)));
}

TEST_CASE("images of the n=2 catalog") {
    SttContext ctx(build_auslander(2));
    SttCatalog cat = enumerate_stt(ctx);
    GammaBridge bridge(ctx);
    std::set<Layers> seen;
    for (const auto& u : cat.pairs) seen.insert(layers(bridge, bridge.to_gamma(u)));
    CHECK(seen.size() == 6);
    CHECK(seen.count({"2", "2/1"}));
    CHECK(seen.count({"1/2", "1"}));
    CHECK(seen.count({"-", "-"}));
    CHECK(verify_gamma_bijection(bridge, cat, true).ok());
    CHECK(gamma_tau_rigidity_check(bridge, cat).ok());
    CHECK(verify_gamma_summands(bridge).ok());
}
