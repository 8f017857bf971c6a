#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "codata/comodule.hpp"
#include "codata/gen.hpp"

using namespace codata;

namespace {

constexpr int kDepth = 8;
constexpr int kSamples = 50;

void check_all_pass(const LawReport& r) {
    for (const auto& e : r.entries) {
        INFO(e.law_id << " / " << e.instance_id << ": " << e.counterexample.dump());
        CHECK(e.status == LawStatus::Pass);
    }
}

}  // namespace

TEST_CASE("tautological comodules satisfy the comodule axioms") {
    Rng rng(kDefaultSeed);
    auto streams = stream_samples(rng, kSamples);
    auto sobs = stream_obs(rng, 8), sobs2 = stream_obs(rng, 8);
    check_all_pass(comodule_law_check(tautological(stream_comonad()), streams, sobs, sobs2, kDepth));
    auto tris = tri_samples(rng, kSamples);
    auto tobs = tri_obs(rng, 8), tobs2 = tri_obs(rng, 8);
    check_all_pass(comodule_law_check(tautological(tri_comonad_base()), tris, tobs, tobs2, kDepth));
}

TEST_CASE("on the tautological comodule, mlift coincides with lift") {
    auto T = stream_comonad();
    auto M = tautological(T);
    auto succ = [](const Value& v) { return Value(v.leaf_sum() + 1); };
    for (StreamV s : {nats(2), affine_stream(3, 1, 7)})
        CHECK(T.equal_at(10, mlift(M, succ, 0, s), lift(T, succ, 0, s)));
}

TEST_CASE("pushforward along the diagonal yields a comodule over streams") {
    Rng rng(kDefaultSeed + 1);
    auto tris = tri_samples(rng, kSamples);
    auto sobs = stream_obs(rng, 8), sobs2 = stream_obs(rng, 8);
    auto M = pushforward(diag_morphism(), tautological(tri_comonad_base()));
    CHECK(M.name == "diag_*(taut(tri))");
    check_all_pass(comodule_law_check(M, tris, sobs, sobs2, kDepth));
}

TEST_CASE("pushforward along the identity changes nothing") {
    auto T = tri_comonad_base();
    RelComonadMorphism<TriV, TriV> id_m{"id", T, T, [](const TriV& t) { return t; }};
    auto M = pushforward(id_m, tautological(T));
    Obs<TriV> f{"headsum", 0,
                [](const TriV& t) { return Value(tri_head_value(t).leaf_sum()); }};
    TriV t = hash_tri(3);
    CHECK(T.equal_at(10, M.mcobind(f, t), T.cobind(f, t)));
}

TEST_CASE("the induced morphism of the diagonal is a comodule morphism") {
    Rng rng(kDefaultSeed + 2);
    auto tris = tri_samples(rng, kSamples);
    auto sobs = stream_obs(rng, 8);
    check_all_pass(comodule_morphism_check(induced(diag_morphism()), tris, sobs, kDepth));
}

TEST_CASE("product precomposition realizes redecoration with extend") {
    auto wc = tri_comonad();
    auto M = precompose_product(wc, tautological(wc.base));
    TriV u = ttail(hash_tri(21));
    CHECK(M.index_wraps(u) == 0);
    Obs<TriV> f{"headsum", 0,
                [](const TriV& t) { return Value(tri_head_value(t).leaf_sum()); }};
    TriV r = M.mcobind(f, u);
    // head of the result pairs the newest off-diagonal entry with f of the cut
    const auto& l0 = thead(r);
    REQUIRE(l0.prefix.size() == 1);
    CHECK(l0.prefix[0] == thead(u).prefix.front());
    CHECK(l0.core == f.fn(cut(u)));
}

TEST_CASE("product precomposition satisfies the comodule axioms") {
    Rng rng(kDefaultSeed + 3);
    auto tris_w1 = tri_samples(rng, kSamples, 1);
    auto tobs = tri_obs(rng, 8), tobs2 = tri_obs(rng, 8);
    auto M = precompose_product(tri_comonad(), tautological(tri_comonad_base()));
    check_all_pass(comodule_law_check(M, tris_w1, tobs, tobs2, kDepth));
}

TEST_CASE("stream tail is a comodule endomorphism") {
    Rng rng(kDefaultSeed + 4);
    auto streams = stream_samples(rng, kSamples);
    auto sobs = stream_obs(rng, 8);
    auto taut = tautological(stream_comonad());
    ComoduleMorphism<StreamV, StreamV, StreamV> m{"stail", taut, taut,
                                                  [](const StreamV& s) { return stail(s); }};
    check_all_pass(comodule_morphism_check(m, streams, sobs, kDepth));
}

TEST_CASE("tri tail is a comodule morphism into the product precomposition") {
    Rng rng(kDefaultSeed + 5);
    auto tris = tri_samples(rng, kSamples);
    auto tobs = tri_obs(rng, 8);
    auto taut = tautological(tri_comonad_base());
    auto prod = precompose_product(tri_comonad(), taut);
    ComoduleMorphism<TriV, TriV, TriV> m{"tail", taut, prod,
                                         [](const TriV& t) { return ttail(t); }};
    check_all_pass(comodule_morphism_check(m, tris, tobs, kDepth));
}

TEST_CASE("cut is a comodule morphism back from the product precomposition") {
    Rng rng(kDefaultSeed + 6);
    auto tris_w1 = tri_samples(rng, kSamples, 1);
    auto tobs = tri_obs(rng, 8);
    auto taut = tautological(tri_comonad_base());
    auto prod = precompose_product(tri_comonad(), taut);
    ComoduleMorphism<TriV, TriV, TriV> m{"cut", prod, taut,
                                         [](const TriV& t) { return cut(t); }};
    check_all_pass(comodule_morphism_check(m, tris_w1, tobs, kDepth));
}

TEST_CASE("pushforward commutes with product in context") {
    Rng rng(kDefaultSeed + 7);
    auto tris_w1 = tri_samples(rng, kSamples, 1);
    auto tobs = tri_obs(rng, 8);
    auto sobs = stream_obs(rng, 8);
    auto wc = tri_comonad();
    auto taut = tautological(wc.base);
    RelComonadMorphism<TriV, TriV> id_m{"id", wc.base, wc.base,
                                        [](const TriV& t) { return t; }};
    check_all_pass(pushforward_product_commute_check(id_m, wc, wc, taut, tris_w1, tobs, kDepth));
    check_all_pass(pushforward_product_commute_check(
        diag_morphism(), wc, canonical_cut(stream_comonad()), taut, tris_w1, sobs, kDepth));
}

TEST_CASE("a layer-skipping tail fails the comodule-morphism square") {
    Rng rng(kDefaultSeed + 8);
    auto tris = tri_samples(rng, kSamples);
    auto tobs = tri_obs(rng, 8);
    auto taut = tautological(tri_comonad_base());
    auto prod = precompose_product(tri_comonad(), taut);
    ComoduleMorphism<TriV, TriV, TriV> bad{"tail.tail", taut, prod,
                                           [](const TriV& t) { return ttail(ttail(t)); }};
    LawReport r = comodule_morphism_check(bad, tris, tobs, kDepth);
    CHECK(r.count(LawStatus::Fail) >= 1);
}

TEST_CASE("routing extend through the wrong cut breaks the commute law") {
    Rng rng(kDefaultSeed + 9);
    auto tris_w1 = tri_samples(rng, kSamples, 1);
    auto tobs = tri_obs(rng, 8);
    auto wc = tri_comonad();
    auto taut = tautological(wc.base);
    RelComonadMorphism<TriV, TriV> id_m{"id", wc.base, wc.base,
                                        [](const TriV& t) { return t; }};
    LawReport r = pushforward_product_commute_check(id_m, canonical_cut(wc.base), wc, taut,
                                                    tris_w1, tobs, kDepth);
    CHECK(r.count(LawStatus::Fail) == 1);
}
