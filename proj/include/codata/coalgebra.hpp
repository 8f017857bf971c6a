#ifndef CODATA_COALGEBRA_HPP
#define CODATA_COALGEBRA_HPP

#include <functional>
#include <string>
#include <vector>

#include "codata/comodule.hpp"
#include "codata/comonad.hpp"

namespace codata {

/// Reports from coalgebra-level checks are plain law reports.
using CoalgMorphismReport = LawReport;

/// A coalgebra for the stream signature: a relative comonad together with
/// a step endomorphism of its tautological comodule.
template <typename SA>
struct StreamCoalgebra {
    std::string name;
    RelativeComonad<SA> comonad;
    std::function<SA(const SA&)> step;
};

/// A coalgebra for the triangular-matrix signature: a comonad with cut
/// plus a tail morphism from the tautological comodule to its product
/// precomposition, compatible with cut.
template <typename TA>
struct TriCoalgebra {
    std::string name;
    RelComonadWithCut<TA> comonad;
    std::function<TA(const TA&)> step;
};

/// The unique map into the terminal stream coalgebra, read corecursively:
/// heads via counit, tails via the coalgebra step.
template <typename SA>
StreamV terminal_to_stream(const StreamCoalgebra<SA>& C, const SA& x) {
    return stream_corec<Value, SA>(
        [T = C.comonad](const SA& s) { return counit(T, s); }, C.step, x);
}

/// The unique map into the terminal Tri coalgebra.  Layer j is the counit
/// observation of the j-th step iterate; the wrap bookkeeping of the
/// result follows the index object of the seed.
template <typename TA>
TriV terminal_to_tri(const TriCoalgebra<TA>& C, const TA& x) {
    const RelativeComonad<TA>& T = C.comonad.base;
    TriCoalgSeed<Value, Value, TA> seed{
        x, T.object_wraps(x),
        [T](const TA& s, int depth) {
            auto [prefix, core] = unnest(counit(T, s), depth);
            return Layer<Value, Value>{std::move(prefix), std::move(core)};
        },
        C.step};
    return tri_corec(std::move(seed));
}

/// Structural laws of a stream coalgebra object: the comonad laws plus the
/// comodule-morphism square for the step.
template <typename SA>
CoalgMorphismReport coalg_check_stream(const StreamCoalgebra<SA>& C,
                                       const std::vector<SA>& samples,
                                       const std::vector<Obs<SA>>& fs,
                                       const std::vector<Obs<SA>>& gs, int depth) {
    RelativeComonad<SA> T = C.comonad;
    T.name = "coalg." + C.name;
    CoalgMorphismReport report = comonad_law_check(T, samples, fs, gs, depth);
    ComoduleMorphism<SA, SA, SA> step_morphism{C.name + ".step", tautological(C.comonad),
                                               tautological(C.comonad), C.step};
    report.merge(comodule_morphism_check(step_morphism, samples, fs, depth));
    return report;
}

/// Structural laws of a Tri coalgebra object: comonad laws, with-cut laws,
/// the step's comodule-morphism square into the product precomposition,
/// and the compatibility equation cut;tail = tail;cut.
template <typename TA>
CoalgMorphismReport coalg_check_tri(const TriCoalgebra<TA>& C, const std::vector<TA>& samples,
                                    const std::vector<TA>& wrapped_samples,
                                    const std::vector<Obs<TA>>& fs,
                                    const std::vector<Obs<TA>>& gs, int depth) {
    RelComonadWithCut<TA> T = C.comonad;
    T.base.name = "coalg." + C.name;
    CoalgMorphismReport report = comonad_law_check(T.base, samples, fs, gs, depth);
    report.merge(cut_law_check(T, wrapped_samples, fs, depth));
    ComoduleMorphism<TA, TA, TA> step_morphism{
        C.name + ".tail", tautological(C.comonad.base),
        precompose_product(C.comonad, tautological(C.comonad.base)), C.step};
    report.merge(comodule_morphism_check(step_morphism, samples, fs, depth));
    LawCheck compat("coalgebra.cut_tail_commute", C.name, depth);
    for (const TA& u : wrapped_samples) {
        TA lhs = C.step(C.comonad.cut_op(u));
        TA rhs = C.comonad.cut_op(C.step(u));
        compat.sample(C.comonad.base.equal_at(depth, lhs, rhs),
                      [&] { return nlohmann::json{{"input", C.comonad.base.describe(u)}}; });
    }
    report.add(compat.finish());
    return report;
}

/// Checks a candidate morphism of stream coalgebras: underlying comonad
/// morphism laws plus the coalgebra square component;step' = step;component.
template <typename TA, typename SA>
CoalgMorphismReport coalg_morphism_check_stream(const StreamCoalgebra<TA>& C,
                                                const StreamCoalgebra<SA>& D,
                                                const std::string& name,
                                                const std::function<SA(const TA&)>& component,
                                                const std::vector<TA>& samples,
                                                const std::vector<Obs<SA>>& fs, int depth) {
    RelComonadMorphism<TA, SA> tau{name, C.comonad, D.comonad, component};
    CoalgMorphismReport report = morphism_law_check(tau, samples, fs, depth);
    LawCheck square("coalgebra_morphism.square", name, depth);
    for (const TA& x : samples) {
        SA lhs = component(C.step(x));
        SA rhs = D.step(component(x));
        square.sample(D.comonad.equal_at(depth, lhs, rhs),
                      [&] { return nlohmann::json{{"input", C.comonad.describe(x)}}; });
    }
    report.add(square.finish());
    return report;
}

/// Tri-side analogue; additionally checks cut compatibility of the
/// underlying morphism.
template <typename TA, typename SA>
CoalgMorphismReport coalg_morphism_check_tri(const TriCoalgebra<TA>& C, const TriCoalgebra<SA>& D,
                                             const std::string& name,
                                             const std::function<SA(const TA&)>& component,
                                             const std::vector<TA>& samples,
                                             const std::vector<TA>& wrapped_samples,
                                             const std::vector<Obs<SA>>& fs, int depth) {
    RelComonadMorphism<TA, SA> tau{name, C.comonad.base, D.comonad.base, component};
    std::vector<TA> all_samples = samples;
    all_samples.insert(all_samples.end(), wrapped_samples.begin(), wrapped_samples.end());
    CoalgMorphismReport report =
        morphism_law_check(tau, all_samples, fs, depth);
    LawCheck compat("comonad_morphism.cut_compat", name, depth);
    for (const TA& u : wrapped_samples) {
        SA lhs = D.comonad.cut_op(component(u));
        SA rhs = component(C.comonad.cut_op(u));
        compat.sample(D.comonad.base.equal_at(depth, lhs, rhs),
                      [&] { return nlohmann::json{{"input", C.comonad.base.describe(u)}}; });
    }
    report.add(compat.finish());
    LawCheck square("coalgebra_morphism.square", name, depth);
    for (const TA& x : samples) {
        SA lhs = component(C.step(x));
        SA rhs = D.step(component(x));
        square.sample(D.comonad.base.equal_at(depth, lhs, rhs),
                      [&] { return nlohmann::json{{"input", C.comonad.base.describe(x)}}; });
    }
    report.add(square.finish());
    return report;
}

/// Componentwise agreement of two candidate morphisms into the terminal
/// object, the observable content of the uniqueness argument.
template <typename TA, typename SA>
LawReport uniqueness_check(const std::string& name, const std::function<SA(const TA&)>& tau1,
                           const std::function<SA(const TA&)>& tau2,
                           const RelativeComonad<SA>& target, const std::vector<TA>& samples,
                           int depth) {
    LawCheck check("terminality.uniqueness", name, depth);
    for (const TA& x : samples) {
        check.sample(target.equal_at(depth, tau1(x), tau2(x)), [&] {
            return nlohmann::json{{"lhs", target.describe(tau1(x))},
                                  {"rhs", target.describe(tau2(x))}};
        });
    }
    LawReport report;
    report.add(check.finish());
    return report;
}

/// The terminal stream coalgebra object (stream, stail).
inline StreamCoalgebra<StreamV> stream_terminal_coalgebra() {
    return StreamCoalgebra<StreamV>{"stream.stail", stream_comonad(),
                                    [](const StreamV& s) { return stail(s); }};
}

/// The terminal Tri coalgebra object (Tri, tail) with the layer-dropping cut.
inline TriCoalgebra<TriV> tri_terminal_coalgebra() {
    return TriCoalgebra<TriV>{"tri.tail", tri_comonad(),
                              [](const TriV& t) { return ttail(t); }};
}

/// Tri as a stream coalgebra via tail;cut; its terminal map is the diagonal.
inline StreamCoalgebra<TriV> tri_as_stream_coalgebra() {
    return StreamCoalgebra<TriV>{"tri.tail_cut", tri_comonad_base(),
                                 [](const TriV& t) { return cut(ttail(t)); }};
}

/// The product comonad Tri(E x _) as a Tri coalgebra: tail and cut act at
/// the shifted index.
inline TriCoalgebra<TriV> tri_product_coalgebra() {
    return TriCoalgebra<TriV>{
        "tri.product",
        RelComonadWithCut<TriV>{product_comonad(tri_comonad()),
                                [](const TriV& t) { return cut(t); }},
        [](const TriV& t) { return ttail(t); }};
}

}  // namespace codata

#endif
