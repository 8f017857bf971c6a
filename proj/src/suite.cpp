#include "codata/suite.hpp"

#include <set>

#include "codata/coalgebra.hpp"
#include "codata/comodule.hpp"
#include "codata/comonad.hpp"

namespace codata {

namespace {

// Sabotaged cobind: skips one tail before redecorating, breaking the
// first comonad axiom.
RelativeComonad<StreamV> mut_cobind_skip() {
    RelativeComonad<StreamV> T = stream_comonad();
    T.name = "mut.cobind_skip";
    T.cobind = [](const Obs<StreamV>& f, const StreamV& s) {
        return sredec<Value, Value>({f.name, f.fn}, stail(s));
    };
    return T;
}

// Sabotaged tail: takes two steps instead of one, landing at the wrong
// index object; the comodule-morphism square breaks.
TriV mut_tail_skip(const TriV& t) { return ttail(ttail(t)); }

LawReport coinduction_entries(Rng& rng, const GenConfig& cfg) {
    LawReport report;
    // Shifted copies of nats built from distinct seeds are bisimilar.
    std::vector<std::pair<StreamV, StreamV>> pairs;
    for (int i = 0; i < cfg.samples; ++i) {
        std::int64_t shift = rand_int(rng, 0, 30);
        pairs.emplace_back(nats(shift), stail(nats(shift - 1)));
    }
    auto all = [](const StreamV&, const StreamV&) { return true; };
    report.merge(stream_coinduction_check<Value>(all, eq_setoid<Value>(), pairs, cfg.depth,
                                                 "nats.shifted"));
    std::vector<std::pair<TriV, TriV>> tpairs;
    for (int i = 0; i < cfg.samples; ++i) {
        std::uint64_t seed = rng();
        tpairs.emplace_back(hash_tri(seed), hash_tri(seed));
    }
    auto tall = [](const TriV&, const TriV&) { return true; };
    report.merge(tri_coinduction_check<Value, Value>(tall, eq_setoid<Value>(), eq_setoid<Value>(),
                                                     tpairs, cfg.depth, "hash_tri.same_seed"));
    return report;
}

}  // namespace

LawReport run_all_laws(const GenConfig& cfg) {
    Rng rng(cfg.seed);
    const int d = cfg.depth;
    const int k = cfg.samples;
    LawReport report;

    // Shared sample batches (drawn in a fixed order for determinism).
    auto streams = stream_samples(rng, k);
    auto pair_streams = [&] {
        std::vector<StreamV> out;
        for (int i = 0; i < k; ++i) out.push_back(random_pair_stream(rng));
        return out;
    }();
    auto tris = tri_samples(rng, k);
    auto tris_w1 = tri_samples(rng, k, 1);
    auto tris_w2 = tri_samples(rng, k, 2);
    auto values = value_samples(rng, k, false);
    auto pair_values = value_samples(rng, k, true);
    auto sobs = stream_obs(rng, 8);
    auto sobs2 = stream_obs(rng, 8);
    auto tobs = tri_obs(rng, 8);
    auto tobs2 = tri_obs(rng, 8);
    auto vobs = value_obs(rng, 8);
    auto vobs2 = value_obs(rng, 8);

    auto stream_T = stream_comonad();
    auto tri_wc = tri_comonad();
    auto tri_T = tri_wc.base;
    auto prod_T = product_comonad(tri_wc);
    auto id_T = from_ordinary_comonad(identity_ordinary_comonad());
    auto env_T = from_ordinary_comonad(env_ordinary_comonad());

    // Comonad axioms.
    report.merge(comonad_law_check(stream_T, streams, sobs, sobs2, d));
    report.merge(comonad_law_check(tri_T, tris, tobs, tobs2, d));
    report.merge(comonad_law_check(prod_T, tris_w1, tobs, tobs2, d));
    report.merge(comonad_law_check(id_T, values, vobs, vobs2, d));
    report.merge(comonad_law_check(env_T, pair_values, vobs, vobs2, d));

    // Lift functoriality.
    report.merge(lift_functoriality_check(stream_T, streams, d));
    report.merge(lift_functoriality_check(tri_T, tris, d));

    // With-cut axioms: Tri's own cut, and the canonical cut on streams of pairs.
    report.merge(cut_law_check(tri_wc, tris_w1, tobs, d));
    auto stream_ccut = canonical_cut(stream_T);
    report.merge(cut_law_check(stream_ccut, pair_streams, sobs, d));

    // Comonad morphisms: the diagonal, with and without cut compatibility.
    auto dg = diag_morphism();
    auto tris_mixed = tris;
    tris_mixed.insert(tris_mixed.end(), tris_w1.begin(), tris_w1.end());
    report.merge(morphism_law_check(dg, tris_mixed, sobs, d));
    {
        LawCheck compat("comonad_morphism.cut_compat", dg.name, d);
        for (const TriV& u : tris_w1) {
            StreamV lhs = stream_ccut.cut_op(dg.component(u));
            StreamV rhs = dg.component(tri_wc.cut_op(u));
            compat.sample(stream_T.equal_at(d, lhs, rhs),
                          [&] { return nlohmann::json{{"input", tri_describe(u)}}; });
        }
        LawReport r;
        r.add(compat.finish());
        report.merge(r);
    }
    RelComonadMorphism<StreamV, StreamV> id_stream{"id.stream", stream_T, stream_T,
                                                   [](const StreamV& s) { return s; }};
    report.merge(morphism_law_check(id_stream, streams, sobs, d));

    // Comodules.
    auto taut_stream = tautological(stream_T);
    auto taut_tri = tautological(tri_T);
    auto tri_prod_comod = precompose_product(tri_wc, taut_tri);
    auto pushed = pushforward(dg, taut_tri);
    report.merge(comodule_law_check(taut_stream, streams, sobs, sobs2, d));
    report.merge(comodule_law_check(taut_tri, tris, tobs, tobs2, d));
    report.merge(comodule_law_check(tri_prod_comod, tris_w1, tobs, tobs2, d));
    report.merge(comodule_law_check(pushed, tris, sobs, sobs2, d));

    // Comodule morphisms: the destructors, the induced morphism, and cut.
    ComoduleMorphism<StreamV, StreamV, StreamV> stail_m{
        "stail", taut_stream, taut_stream, [](const StreamV& s) { return stail(s); }};
    report.merge(comodule_morphism_check(stail_m, streams, sobs, d));
    ComoduleMorphism<TriV, TriV, TriV> tail_m{"tail", taut_tri, tri_prod_comod,
                                              [](const TriV& t) { return ttail(t); }};
    report.merge(comodule_morphism_check(tail_m, tris, tobs, d));
    report.merge(comodule_morphism_check(induced(dg), tris, sobs, d));
    ComoduleMorphism<TriV, TriV, TriV> cut_m{"cut", tri_prod_comod, taut_tri,
                                             [](const TriV& t) { return cut(t); }};
    report.merge(comodule_morphism_check(cut_m, tris_w1, tobs, d));

    // Pushforward commutes with product in context.
    RelComonadMorphism<TriV, TriV> id_tri{"id.tri", tri_T, tri_T,
                                          [](const TriV& t) { return t; }};
    report.merge(
        pushforward_product_commute_check(id_tri, tri_wc, tri_wc, taut_tri, tris_w1, tobs, d));
    report.merge(
        pushforward_product_commute_check(dg, tri_wc, stream_ccut, taut_tri, tris_w1, sobs, d));

    // Coalgebra objects.
    auto stream_coalg = stream_terminal_coalgebra();
    auto tri_coalg = tri_terminal_coalgebra();
    auto tri_stream_coalg = tri_as_stream_coalgebra();
    auto prod_coalg = tri_product_coalgebra();
    report.merge(coalg_check_stream(stream_coalg, streams, sobs, sobs2, d));
    report.merge(coalg_check_stream(tri_stream_coalg, tris, tobs, tobs2, d));
    report.merge(coalg_check_tri(tri_coalg, tris, tris_w1, tobs, tobs2, d));
    report.merge(coalg_check_tri(prod_coalg, tris_w1, tris_w2, tobs, tobs2, d));

    // Terminal morphisms and uniqueness.
    std::function<StreamV(const StreamV&)> top_stream_id = [&](const StreamV& s) {
        return terminal_to_stream(stream_coalg, s);
    };
    report.merge(coalg_morphism_check_stream(stream_coalg, stream_coalg, "top.stream.id",
                                             top_stream_id, streams, sobs, d));
    report.merge(uniqueness_check<StreamV, StreamV>(
        "top.stream.id_vs_id", top_stream_id, [](const StreamV& s) { return s; }, stream_T,
        streams, d));

    std::function<StreamV(const TriV&)> top_diag = [&](const TriV& t) {
        return terminal_to_stream(tri_stream_coalg, t);
    };
    report.merge(coalg_morphism_check_stream(tri_stream_coalg, stream_coalg, "top.tri_to_stream",
                                             top_diag, tris, sobs, d));
    report.merge(uniqueness_check<TriV, StreamV>("top.tri_to_stream_vs_diag", top_diag,
                                                 diag_component, stream_T, tris, d));

    std::function<TriV(const TriV&)> top_tri_id = [&](const TriV& t) {
        return terminal_to_tri(tri_coalg, t);
    };
    report.merge(coalg_morphism_check_tri(tri_coalg, tri_coalg, "top.tri.id", top_tri_id, tris,
                                          tris_w1, tobs, d));
    report.merge(uniqueness_check<TriV, TriV>(
        "top.tri.id_vs_id", top_tri_id, [](const TriV& t) { return t; }, tri_T, tris, d));

    std::function<TriV(const TriV&)> top_prod = [&](const TriV& t) {
        return terminal_to_tri(prod_coalg, t);
    };
    report.merge(coalg_morphism_check_tri(prod_coalg, tri_coalg, "top.tri_product", top_prod,
                                          tris_w1, tris_w2, tobs, d));
    report.merge(uniqueness_check<TriV, TriV>(
        "top.tri_product_vs_cut", top_prod, [](const TriV& t) { return cut(t); }, tri_T, tris_w1,
        d));

    // Coinduction rule instances.
    report.merge(coinduction_entries(rng, cfg));

    if (cfg.mutations) {
        // Each documented sabotage must surface as a failing entry.
        report.merge(comonad_law_check(mut_cobind_skip(), streams, sobs, sobs2, d));

        ComoduleMorphism<TriV, TriV, TriV> bad_tail{"mut.tail_skip", taut_tri, tri_prod_comod,
                                                    mut_tail_skip};
        report.merge(comodule_morphism_check(bad_tail, tris, tobs, d));

        auto ccut_coalg = tri_coalg;
        ccut_coalg.name = "mut.cut_canonical";
        ccut_coalg.comonad = canonical_cut(tri_T);
        ccut_coalg.comonad.base.name = "mut.cut_canonical";
        report.merge(coalg_check_tri(ccut_coalg, tris, tris_w1, tobs, tobs2, d));

        // Broken extend: the commute check wired through the wrong cut on
        // the source side.
        RelComonadMorphism<TriV, TriV> bad_id = id_tri;
        bad_id.name = "mut.extend_wrong_cut";
        report.merge(pushforward_product_commute_check(bad_id, canonical_cut(tri_T), tri_wc,
                                                       taut_tri, tris_w1, tobs, d));

        std::function<StreamV(const TriV&)> shifted = [](const TriV& t) {
            return stail(diag_component(t));
        };
        report.merge(coalg_morphism_check_stream(tri_stream_coalg, stream_coalg,
                                                 "mut.shifted_candidate", shifted, tris, sobs, d));
    }

    report.sort();
    return report;
}

bool report_clean(const LawReport& report) {
    std::set<std::string> mut_instances;
    std::set<std::string> mut_failed;
    for (const auto& e : report.entries) {
        bool is_mut = e.instance_id.rfind("mut.", 0) == 0;
        if (is_mut) {
            mut_instances.insert(e.instance_id);
            if (e.status == LawStatus::Fail) mut_failed.insert(e.instance_id);
        } else if (e.status == LawStatus::Fail) {
            return false;
        }
    }
    return mut_instances == mut_failed;
}

}  // namespace codata
