// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "codata/coalgebra.hpp"
#include "codata/gen.hpp"

using namespace codata;

namespace {

int failures = 0;

void report(int n, const std::string& what, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what << "\n";
    if (!ok) ++failures;
}

bool all_pass(const LawReport& r) {
    for (const auto& e : r.entries)
        if (e.status == LawStatus::Fail) {
            std::cout << "  first failure: " << e.law_id << " / " << e.instance_id << " "
                      << e.counterexample.dump() << "\n";
            return false;
        }
    return true;
}

bool any_fail(const LawReport& r) { return r.count(LawStatus::Fail) > 0; }

// 1. Corecursion computation rules, exact equality, depth 10, 100 inputs.
bool criterion1() {
    Rng rng(kDefaultSeed);
    for (int i = 0; i < 100; ++i) {
        std::int64_t a = rand_int(rng, 2, 17), b = rand_int(rng, 0, 99),
                     x0 = rand_int(rng, 0, 999);
        auto hd = [](const std::int64_t& x) { return Value(x % 1000); };
        auto tl = [a, b](const std::int64_t& x) { return (a * x + b) % 100003; };
        StreamV s = stream_corec<Value, std::int64_t>(hd, tl, x0);
        std::int64_t x = x0;
        for (int d = 0; d < 10; ++d) {
            if (shead(s) != hd(x)) return false;
            s = stail(s);
            x = tl(x);
        }
        // Tri corecursion: layer d of the unfolding equals hd(tl^d seed, d)
        std::uint64_t seed = rng();
        auto thd = [](const std::uint64_t& v, int depth) {
            std::vector<Value> prefix;
            for (int p = 1; p <= depth; ++p)
                prefix.push_back(Value(static_cast<std::int64_t>(splitmix64(v + p) % 997)));
            return Layer<Value, Value>{std::move(prefix),
                                       Value(static_cast<std::int64_t>(splitmix64(v) % 997))};
        };
        auto ttl = [](const std::uint64_t& v) { return splitmix64(v + 41); };
        TriV t = tri_corec(TriCoalgSeed<Value, Value, std::uint64_t>{seed, 0, thd, ttl});
        std::uint64_t v = seed;
        for (int d = 0; d < 10; ++d) {
            if (!(thead(t) == thd(v, d))) return false;
            t = ttail(t);
            v = ttl(v);
        }
    }
    return true;
}

// 2. Comonad axioms for every shipped instance; sabotage must fail.
bool criterion2() {
    Rng rng(kDefaultSeed + 1);
    const int d = 8, k = 50;
    auto streams = stream_samples(rng, k);
    auto tris = tri_samples(rng, k);
    auto tris_w1 = tri_samples(rng, k, 1);
    auto plain = value_samples(rng, k, false);
    auto pairs = value_samples(rng, k, true);
    auto sobs = stream_obs(rng, 8), sobs2 = stream_obs(rng, 8);
    auto tobs = tri_obs(rng, 8), tobs2 = tri_obs(rng, 8);
    auto vobs = value_obs(rng, 8), vobs2 = value_obs(rng, 8);
    bool ok = all_pass(comonad_law_check(stream_comonad(), streams, sobs, sobs2, d)) &&
              all_pass(comonad_law_check(tri_comonad_base(), tris, tobs, tobs2, d)) &&
              all_pass(comonad_law_check(product_comonad(tri_comonad()), tris_w1, tobs, tobs2,
                                         d)) &&
              all_pass(comonad_law_check(from_ordinary_comonad(identity_ordinary_comonad()),
                                         plain, vobs, vobs2, 1)) &&
              all_pass(comonad_law_check(from_ordinary_comonad(env_ordinary_comonad()), pairs,
                                         vobs, vobs2, 1));
    RelativeComonad<StreamV> bad = stream_comonad();
    bad.cobind = [](const Obs<StreamV>& f, const StreamV& s) {
        return sredec<Value, Value>({f.name, f.fn}, stail(s));
    };
    return ok && any_fail(comonad_law_check(bad, streams, sobs, sobs2, d));
}

// 3. With-cut axioms plus cut;tail = tail;cut, depth 8.
bool criterion3() {
    Rng rng(kDefaultSeed + 2);
    const int d = 8, k = 50;
    auto tris_w1 = tri_samples(rng, k, 1);
    auto tobs = tri_obs(rng, 8);
    std::vector<StreamV> pair_streams;
    for (int i = 0; i < k; ++i) pair_streams.push_back(random_pair_stream(rng));
    auto sobs = stream_obs(rng, 8);
    if (!all_pass(cut_law_check(tri_comonad(), tris_w1, tobs, d))) return false;
    if (!all_pass(cut_law_check(canonical_cut(stream_comonad()), pair_streams, sobs, d)))
        return false;
    for (const TriV& t : tris_w1)
        if (!tri_comonad_base().equal_at(d, ttail(cut(t)), cut(ttail(t)))) return false;
    return true;
}

// 4. Comodule axioms and comodule-morphism squares, depth 8, 50 samples.
bool criterion4() {
    Rng rng(kDefaultSeed + 3);
    const int d = 8, k = 50;
    auto streams = stream_samples(rng, k);
    auto tris = tri_samples(rng, k);
    auto tris_w1 = tri_samples(rng, k, 1);
    auto sobs = stream_obs(rng, 8), sobs2 = stream_obs(rng, 8);
    auto tobs = tri_obs(rng, 8), tobs2 = tri_obs(rng, 8);
    auto taut_s = tautological(stream_comonad());
    auto taut_t = tautological(tri_comonad_base());
    auto prod = precompose_product(tri_comonad(), taut_t);
    auto pushed = pushforward(diag_morphism(), taut_t);
    ComoduleMorphism<StreamV, StreamV, StreamV> stail_m{
        "stail", taut_s, taut_s, [](const StreamV& s) { return stail(s); }};
    ComoduleMorphism<TriV, TriV, TriV> tail_m{"tail", taut_t, prod,
                                              [](const TriV& t) { return ttail(t); }};
    ComoduleMorphism<TriV, TriV, TriV> cut_m{"cut", prod, taut_t,
                                             [](const TriV& t) { return cut(t); }};
    return all_pass(comodule_law_check(taut_s, streams, sobs, sobs2, d)) &&
           all_pass(comodule_law_check(taut_t, tris, tobs, tobs2, d)) &&
           all_pass(comodule_law_check(prod, tris_w1, tobs, tobs2, d)) &&
           all_pass(comodule_law_check(pushed, tris, sobs, sobs2, d)) &&
           all_pass(comodule_morphism_check(stail_m, streams, sobs, d)) &&
           all_pass(comodule_morphism_check(tail_m, tris, tobs, d)) &&
           all_pass(comodule_morphism_check(cut_m, tris_w1, tobs, d)) &&
           all_pass(comodule_morphism_check(induced(diag_morphism()), tris, sobs, d));
}

// 5. Terminal maps into streams: identity at depth 15, diagonal at depth 10.
bool criterion5() {
    Rng rng(kDefaultSeed + 4);
    const int k = 50;
    auto C = stream_terminal_coalgebra();
    for (StreamV s : stream_samples(rng, k))
        if (!C.comonad.equal_at(15, terminal_to_stream(C, s), s)) return false;
    auto D = tri_as_stream_coalgebra();
    for (TriV t : tri_samples(rng, k))
        if (!stream_comonad().equal_at(10, terminal_to_stream(D, t), diag_component(t)))
            return false;
    return true;
}

// 6. Terminal maps into Tri: identity and cut at depth 10, plus the full
//    coalgebra-morphism check for both.
bool criterion6() {
    Rng rng(kDefaultSeed + 5);
    const int k = 50;
    auto C = tri_terminal_coalgebra();
    auto P = tri_product_coalgebra();
    auto tris = tri_samples(rng, k);
    auto tris_w1 = tri_samples(rng, k, 1);
    auto tris_w2 = tri_samples(rng, k, 2);
    auto tobs = tri_obs(rng, 8);
    for (const TriV& t : tris)
        if (!C.comonad.base.equal_at(10, terminal_to_tri(C, t), t)) return false;
    for (const TriV& t : tris_w1)
        if (!tri_comonad_base().equal_at(10, terminal_to_tri(P, t), cut(t))) return false;
    std::function<TriV(const TriV&)> top_id = [&](const TriV& t) {
        return terminal_to_tri(C, t);
    };
    std::function<TriV(const TriV&)> top_prod = [&](const TriV& t) {
        return terminal_to_tri(P, t);
    };
    return all_pass(coalg_morphism_check_tri(C, C, "top.id", top_id, tris, tris_w1, tobs, 10)) &&
           all_pass(coalg_morphism_check_tri(P, C, "top.product", top_prod, tris_w1, tris_w2,
                                             tobs, 10));
}

// 7. Uniqueness: constructed vs hand-written diagonal at depth 10 over 50
//    samples, and sabotaged candidates must fail.
bool criterion7() {
    Rng rng(kDefaultSeed + 6);
    const int k = 50;
    auto tris = tri_samples(rng, k);
    auto sobs = stream_obs(rng, 8);
    auto D = tri_as_stream_coalgebra();
    std::function<StreamV(const TriV&)> top = [&](const TriV& t) {
        return terminal_to_stream(D, t);
    };
    if (!all_pass(uniqueness_check<TriV, StreamV>("diag", top, diag_component, stream_comonad(),
                                                  tris, 10)))
        return false;
    std::function<StreamV(const TriV&)> shifted = [](const TriV& t) {
        return stail(diag_component(t));
    };
    if (!any_fail(uniqueness_check<TriV, StreamV>("shifted", top, shifted, stream_comonad(),
                                                  tris, 10)))
        return false;
    LawReport r = coalg_morphism_check_stream(D, stream_terminal_coalgebra(), "shifted", shifted,
                                              tris, sobs, 8);
    return any_fail(r);
}

std::string run_capture(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    if (pclose(pipe) != 0) return {};
    return out;
}

// 8. Two identically seeded CLI law runs emit byte-identical JSON.
bool criterion8() {
    const char* cli = std::getenv("CODATA_CLI");
    if (!cli) {
        std::cout << "  CODATA_CLI not set; cannot locate the CLI binary\n";
        return false;
    }
    std::string cmd = std::string(cli) + " laws --json --mutations";
    std::string a = run_capture(cmd);
    std::string b = run_capture(cmd);
    return !a.empty() && a == b;
}

}  // namespace

int main() {
    report(1, "corecursion computation rules hold exactly to depth 10 on 100 inputs",
           criterion1());
    report(2, "comonad axioms hold for all instances and fail for the sabotage", criterion2());
    report(3, "with-cut axioms and cut/tail compatibility hold at depth 8", criterion3());
    report(4, "comodule axioms and morphism squares hold at depth 8", criterion4());
    report(5, "terminal stream maps recover identity (depth 15) and diagonal (depth 10)",
           criterion5());
    report(6, "terminal tri maps recover identity and cut, and are coalgebra morphisms",
           criterion6());
    report(7, "uniqueness holds for the diagonal and rejects shifted candidates", criterion7());
    report(8, "law suite JSON output is byte-identical across runs", criterion8());
    return failures == 0 ? 0 : 1;
}
