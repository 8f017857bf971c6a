#ifndef CODATA_COMODULE_HPP
#define CODATA_COMODULE_HPP

#include <functional>
#include <string>
#include <vector>

#include "codata/comonad.hpp"

namespace codata {

/// A comodule over a relative comonad: a carrier family MA with an
/// mcobind operation compatible with the comonad's cobind.  index_wraps
/// reports the index object a carrier value sits over.
template <typename TA, typename MA>
struct Comodule {
    std::string name;
    RelativeComonad<TA> over;
    std::function<MA(const Obs<TA>&, const MA&)> mcobind;
    std::function<int(const MA&)> index_wraps;
    std::function<bool(int, const MA&, const MA&)> equal_at;
    std::function<nlohmann::json(const MA&)> describe;
};

/// A comonad as a comodule over itself, mcobind = cobind.
template <typename TA>
Comodule<TA, TA> tautological(const RelativeComonad<TA>& T) {
    return Comodule<TA, TA>{
        "taut(" + T.name + ")", T,
        [T](const Obs<TA>& f, const TA& m) { return T.cobind(f, m); },
        T.object_wraps, T.equal_at, T.describe};
}

/// Functorial action of a comodule: mlift(f) = mcobind(counit;f).
template <typename TA, typename MA>
MA mlift(const Comodule<TA, MA>& M, const std::function<Value(const Value&)>& f,
         int result_wraps, const MA& m) {
    Obs<TA> c = M.over.counit_at(M.index_wraps(m));
    Obs<TA> obs{"counit;f", result_wraps, [c, f](const TA& u) { return f(c.fn(u)); }};
    return M.mcobind(obs, m);
}

template <typename TA, typename MA, typename NA>
struct ComoduleMorphism {
    std::string name;
    Comodule<TA, MA> source;
    Comodule<TA, NA> target;
    std::function<NA(const MA&)> component;
};

/// Transport along a comonad morphism: same carrier, mcobind precomposes
/// the observation with the morphism component.
template <typename TA, typename SA, typename MA>
Comodule<SA, MA> pushforward(const RelComonadMorphism<TA, SA>& tau, const Comodule<TA, MA>& M) {
    return Comodule<SA, MA>{
        tau.name + "_*(" + M.name + ")", tau.target,
        [tau, M](const Obs<SA>& f, const MA& m) {
            Obs<TA> pulled{tau.name + ";" + f.name, f.result_wraps,
                           [tau, f](const TA& u) { return f.fn(tau.component(u)); }};
            return M.mcobind(pulled, m);
        },
        M.index_wraps, M.equal_at, M.describe};
}

/// Pushforward on comodule morphisms reuses the components.
template <typename TA, typename SA, typename MA, typename NA>
ComoduleMorphism<SA, MA, NA> pushforward_morphism(const RelComonadMorphism<TA, SA>& tau,
                                                  const ComoduleMorphism<TA, MA, NA>& alpha) {
    return ComoduleMorphism<SA, MA, NA>{tau.name + "_*(" + alpha.name + ")",
                                        pushforward(tau, alpha.source),
                                        pushforward(tau, alpha.target), alpha.component};
}

/// The comodule morphism tau_* T -> S induced by a comonad morphism tau;
/// its components are tau's own.
template <typename TA, typename SA>
ComoduleMorphism<SA, TA, SA> induced(const RelComonadMorphism<TA, SA>& tau) {
    return ComoduleMorphism<SA, TA, SA>{"induced(" + tau.name + ")",
                                        pushforward(tau, tautological(tau.source)),
                                        tautological(tau.target), tau.component};
}

/// Precomposition with "product with E": carrier A |-> M(E x A), with
/// mcobind(f) = mcobind^M(extend f).  Needs the comonad's cut.
template <typename TA, typename MA>
Comodule<TA, MA> precompose_product(const RelComonadWithCut<TA>& T, const Comodule<TA, MA>& M) {
    return Comodule<TA, MA>{
        M.name + "(ExA)", T.base,
        [T, M](const Obs<TA>& f, const MA& m) { return M.mcobind(extend_withcut(T, f), m); },
        [M](const MA& m) { return M.index_wraps(m) - 1; }, M.equal_at, M.describe};
}

/// Morphism lifting of precomposition: alpha(E x _) keeps the components.
template <typename TA, typename MA, typename NA>
ComoduleMorphism<TA, MA, NA> precompose_product_morphism(const RelComonadWithCut<TA>& T,
                                                         const ComoduleMorphism<TA, MA, NA>& a) {
    return ComoduleMorphism<TA, MA, NA>{a.name + "(ExA)", precompose_product(T, a.source),
                                        precompose_product(T, a.target), a.component};
}

// ---------------------------------------------------------------------------
// Law checks
// ---------------------------------------------------------------------------

template <typename TA, typename MA>
LawReport comodule_law_check(const Comodule<TA, MA>& M, const std::vector<MA>& samples,
                             const std::vector<Obs<TA>>& fs, const std::vector<Obs<TA>>& gs,
                             int depth) {
    LawCheck ax1("comodule.mcobind_counit_is_id", M.name, depth);
    LawCheck ax2("comodule.mcobind_assoc", M.name, depth);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const MA& m = samples[i];
        auto describe = [&] { return nlohmann::json{{"input", M.describe(m)}}; };
        Obs<TA> c = M.over.counit_at(M.index_wraps(m));
        ax1.sample(M.equal_at(depth, M.mcobind(c, m), m), describe);
        if (!fs.empty() && !gs.empty()) {
            const Obs<TA>& f = fs[i % fs.size()];
            const Obs<TA>& g = gs[i % gs.size()];
            // mcobind(f);mcobind(g) = mcobind(cobind(f);g)
            MA lhs = M.mcobind(g, M.mcobind(f, m));
            Obs<TA> composed{"cobind(" + f.name + ");" + g.name, g.result_wraps,
                             [M, f, g](const TA& u) { return g.fn(M.over.cobind(f, u)); }};
            MA rhs = M.mcobind(composed, m);
            ax2.sample(M.equal_at(depth, lhs, rhs), [&] {
                nlohmann::json j = describe();
                j["f"] = f.name;
                j["g"] = g.name;
                return j;
            });
        }
    }
    LawReport report;
    report.add(ax1.finish());
    report.add(ax2.finish());
    return report;
}

/// The comodule-morphism square mcobind^M(f);alpha = alpha;mcobind^N(f),
/// plus naturality with respect to mlift.
template <typename TA, typename MA, typename NA>
LawReport comodule_morphism_check(const ComoduleMorphism<TA, MA, NA>& alpha,
                                  const std::vector<MA>& samples,
                                  const std::vector<Obs<TA>>& fs, int depth) {
    LawCheck square("comodule_morphism.square", alpha.name, depth);
    LawCheck natural("comodule_morphism.natural", alpha.name, depth);
    auto succ = [](const Value& v) { return Value(v.leaf_sum() + 1); };
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const MA& m = samples[i];
        auto describe = [&] { return nlohmann::json{{"input", alpha.source.describe(m)}}; };
        if (!fs.empty()) {
            const Obs<TA>& f = fs[i % fs.size()];
            NA lhs = alpha.component(alpha.source.mcobind(f, m));
            NA rhs = alpha.target.mcobind(f, alpha.component(m));
            square.sample(alpha.target.equal_at(depth, lhs, rhs), [&] {
                nlohmann::json j = describe();
                j["f"] = f.name;
                return j;
            });
        }
        NA nat_lhs = alpha.component(mlift(alpha.source, succ, 0, m));
        NA nat_rhs = mlift(alpha.target, succ, 0, alpha.component(m));
        natural.sample(alpha.target.equal_at(depth, nat_lhs, nat_rhs), describe);
    }
    LawReport report;
    report.add(square.finish());
    report.add(natural.finish());
    return report;
}

/// Pushforward commutes with product in context: the two composites give
/// pointwise equal mcobind results (the isomorphism is identity-valued).
template <typename TA, typename SA, typename MA>
LawReport pushforward_product_commute_check(const RelComonadMorphism<TA, SA>& tau,
                                            const RelComonadWithCut<TA>& source_cut,
                                            const RelComonadWithCut<SA>& target_cut,
                                            const Comodule<TA, MA>& M,
                                            const std::vector<MA>& samples,
                                            const std::vector<Obs<SA>>& fs, int depth) {
    Comodule<SA, MA> lhs = pushforward(tau, precompose_product(source_cut, M));
    Comodule<SA, MA> rhs = precompose_product(target_cut, pushforward(tau, M));
    LawCheck check("comodule.pushforward_product_commute", tau.name + "/" + M.name, depth);
    for (std::size_t i = 0; i < samples.size() && !fs.empty(); ++i) {
        const MA& m = samples[i];
        const Obs<SA>& f = fs[i % fs.size()];
        check.sample(M.equal_at(depth, lhs.mcobind(f, m), rhs.mcobind(f, m)), [&] {
            return nlohmann::json{{"input", M.describe(m)}, {"f", f.name}};
        });
    }
    LawReport report;
    report.add(check.finish());
    return report;
}

}  // namespace codata

#endif
