#ifndef CODATA_COMONAD_HPP
#define CODATA_COMONAD_HPP

#include <functional>
#include <string>
#include <vector>

#include "codata/report.hpp"
#include "codata/stream.hpp"
#include "codata/tri.hpp"
#include "codata/value.hpp"

namespace codata {

using StreamV = Stream<Value>;
using TriV = Tri<Value, Value>;

/// A setoid morphism TA -> Eq(B), tagged with the wrap arity of B so that
/// layered carriers can rebuild their structure from the flat result.
template <typename TA>
struct Obs {
    std::string name;
    int result_wraps = 0;
    std::function<Value(const TA&)> fn;
};

/// A comonad relative to the embedding of types into setoids, over a fixed
/// carrier representation TA.  Objects of the index category are tracked
/// dynamically as wrap counts; equality on each carrier setoid is the
/// depth-parametric bisimilarity.
template <typename TA>
struct RelativeComonad {
    std::string name;
    std::function<int(const TA&)> object_wraps;
    std::function<Obs<TA>(int)> counit_at;
    std::function<TA(const Obs<TA>&, const TA&)> cobind;
    std::function<bool(int, const TA&, const TA&)> equal_at;
    std::function<nlohmann::json(const TA&)> describe;
};

template <typename TA>
Value counit(const RelativeComonad<TA>& T, const TA& t) {
    return T.counit_at(T.object_wraps(t)).fn(t);
}

/// Functorial action: lift(f) = cobind(counit;f).
template <typename TA>
TA lift(const RelativeComonad<TA>& T, const std::function<Value(const Value&)>& f,
        int result_wraps, const TA& t) {
    Obs<TA> c = T.counit_at(T.object_wraps(t));
    Obs<TA> obs{"counit;" + std::to_string(result_wraps), result_wraps,
                [c, f](const TA& u) { return f(c.fn(u)); }};
    return T.cobind(obs, t);
}

template <typename TA, typename SA>
struct RelComonadMorphism {
    std::string name;
    RelativeComonad<TA> source;
    RelativeComonad<SA> target;
    std::function<SA(const TA&)> component;
};

/// Comonad packaged with a cut operation T(E x A) -> TA.
template <typename TA>
struct RelComonadWithCut {
    RelativeComonad<TA> base;
    std::function<TA(const TA&)> cut_op;
};

/// extend(f) = < T(pr1);counit , cut;f > composed with the inverse of the
/// strong-monoidal witness (which is the identity repackaging here).
template <typename TA>
Obs<TA> extend_withcut(const RelComonadWithCut<TA>& T, const Obs<TA>& f) {
    return Obs<TA>{"extend(" + f.name + ")", f.result_wraps + 1, [T, f](const TA& t) {
                       TA lifted = lift(T.base, [](const Value& v) { return v.pr1(); }, 0, t);
                       Value e = counit(T.base, lifted);
                       Value b = f.fn(T.cut_op(t));
                       return Value::pair(std::move(e), std::move(b));
                   }};
}

// ---------------------------------------------------------------------------
// Instances
// ---------------------------------------------------------------------------

inline RelativeComonad<StreamV> stream_comonad() {
    RelativeComonad<StreamV> T;
    T.name = "stream";
    T.object_wraps = [](const StreamV&) { return 0; };
    T.counit_at = [](int w) {
        return Obs<StreamV>{"shead", w, [](const StreamV& s) { return shead(s); }};
    };
    T.cobind = [](const Obs<StreamV>& f, const StreamV& s) {
        return sredec<Value, Value>({f.name, f.fn}, s);
    };
    T.equal_at = [](int d, const StreamV& s, const StreamV& t) {
        return stream_bisim_depth(d, eq_setoid<Value>(), s, t);
    };
    T.describe = [](const StreamV& s) {
        nlohmann::json j = nlohmann::json::array();
        for (const Value& v : stake(8, s)) j.push_back(v.str());
        return nlohmann::json{{"stream_take_8", j}};
    };
    return T;
}

/// The head layer of a matrix as the nested-pair value of its diagonal type.
inline Value tri_head_value(const TriV& t) {
    const Layer<Value, Value>& l = thead(t);
    return nest(l.prefix, l.core);
}

inline nlohmann::json tri_describe(const TriV& t, int depth = 4) {
    nlohmann::json layers = nlohmann::json::array();
    for (const auto& l : truncate(depth, t).layers) {
        nlohmann::json prefix = nlohmann::json::array();
        for (const Value& e : l.prefix) prefix.push_back(e.str());
        layers.push_back({{"prefix", prefix}, {"core", l.core.str()}});
    }
    return nlohmann::json{{"wrap_count", t.wrap_count()}, {"layers", layers}};
}

inline RelativeComonad<TriV> tri_comonad_base() {
    RelativeComonad<TriV> T;
    T.name = "tri";
    T.object_wraps = [](const TriV& t) { return t.wrap_count(); };
    T.counit_at = [](int w) { return Obs<TriV>{"head", w, tri_head_value}; };
    T.cobind = [](const Obs<TriV>& f, const TriV& t) {
        TriObs<Value, Value, Value> obs{f.result_wraps, [f](const TriV& u) {
                                            auto [prefix, core] = unnest(f.fn(u), f.result_wraps);
                                            return Layer<Value, Value>{std::move(prefix),
                                                                       std::move(core)};
                                        }};
        return tri_redec_obs(std::move(obs), t);
    };
    T.equal_at = [](int d, const TriV& s, const TriV& t) {
        // Different wrap counts means different setoids: never equal.
        if (s.wrap_count() != t.wrap_count()) return false;
        return tri_bisim_depth(d, eq_setoid<Value>(), eq_setoid<Value>(), s, t);
    };
    T.describe = [](const TriV& t) { return tri_describe(t); };
    return T;
}

/// Tri with the layer-dropping cut, which is not the canonical one.
inline RelComonadWithCut<TriV> tri_comonad() {
    return RelComonadWithCut<TriV>{tri_comonad_base(),
                                   [](const TriV& t) { return cut(t); }};
}

/// Any relative comonad carries a canonical cut: ccut = lift(pr2).
template <typename TA>
RelComonadWithCut<TA> canonical_cut(const RelativeComonad<TA>& T) {
    return RelComonadWithCut<TA>{T, [T](const TA& t) {
                                     int w = T.object_wraps(t);
                                     int rw = w > 0 ? w - 1 : 0;
                                     return lift(T, [](const Value& v) { return v.pr2(); }, rw, t);
                                 }};
}

/// Ordinary comonad data on plain values (Kleisli form).
struct OrdinaryComonad {
    std::string name;
    std::function<Value(const Value&)> counit;
    std::function<std::function<Value(const Value&)>(std::function<Value(const Value&)>)> cobind;
};

/// A comonad relative to a fully faithful embedding, obtained from an
/// ordinary comonad; for Eq the inverse on functions is the identity.
inline RelativeComonad<Value> from_ordinary_comonad(const OrdinaryComonad& M) {
    RelativeComonad<Value> T;
    T.name = "ordinary." + M.name;
    T.object_wraps = [](const Value&) { return 0; };
    T.counit_at = [M](int w) { return Obs<Value>{"counit", w, M.counit}; };
    T.cobind = [M](const Obs<Value>& f, const Value& m) { return M.cobind(f.fn)(m); };
    T.equal_at = [](int, const Value& a, const Value& b) { return a == b; };
    T.describe = [](const Value& v) { return nlohmann::json{{"value", v.str()}}; };
    return T;
}

inline OrdinaryComonad identity_ordinary_comonad() {
    return OrdinaryComonad{
        "identity", [](const Value& v) { return v; },
        [](std::function<Value(const Value&)> f) { return f; }};
}

/// Environment comonad MA = E0 x A.
inline OrdinaryComonad env_ordinary_comonad() {
    return OrdinaryComonad{
        "env", [](const Value& v) { return v.pr2(); },
        [](std::function<Value(const Value&)> f) {
            return [f](const Value& m) { return Value::pair(m.pr1(), f(m)); };
        }};
}

/// The comonad A |-> T(E x A) inherited from a comonad with cut:
/// counit = lift(pr2);counit and cobind(f) = cobind(extend'(f)).
template <typename TA>
RelativeComonad<TA> product_comonad(const RelComonadWithCut<TA>& T) {
    RelativeComonad<TA> P;
    P.name = T.base.name + ".product";
    P.object_wraps = [base = T.base](const TA& t) { return base.object_wraps(t) - 1; };
    P.counit_at = [base = T.base](int w) {
        return Obs<TA>{"lift(pr2);counit", w, [base, w](const TA& t) {
                           TA lifted = lift(base, [](const Value& v) { return v.pr2(); }, w, t);
                           return counit(base, lifted);
                       }};
    };
    P.cobind = [T](const Obs<TA>& f, const TA& t) {
        // extend'(f) = < T(pr1);counit , f > ; phi^-1
        Obs<TA> ext{"extend'(" + f.name + ")", f.result_wraps + 1, [T, f](const TA& u) {
                        TA lifted = lift(T.base, [](const Value& v) { return v.pr1(); }, 0, u);
                        return Value::pair(counit(T.base, lifted), f.fn(u));
                    }};
        return T.base.cobind(ext, t);
    };
    P.equal_at = T.base.equal_at;
    P.describe = T.base.describe;
    return P;
}

/// The diagonal as a morphism of relative comonads from Tri to stream.
/// Heads observe the full diagonal value; stepping goes through tail;cut.
inline StreamV diag_component(const TriV& t) {
    return stream_corec<Value, TriV>(
        tri_head_value, [](const TriV& u) { return cut(ttail(u)); }, t);
}

inline RelComonadMorphism<TriV, StreamV> diag_morphism() {
    return RelComonadMorphism<TriV, StreamV>{"diag", tri_comonad_base(), stream_comonad(),
                                             diag_component};
}

// ---------------------------------------------------------------------------
// Law checks
// ---------------------------------------------------------------------------

/// The three axioms of a relative comonad, checked on sampled carrier
/// values against cycled observation functions, up to equal_at at `depth`.
template <typename TA>
LawReport comonad_law_check(const RelativeComonad<TA>& T, const std::vector<TA>& samples,
                            const std::vector<Obs<TA>>& fs, const std::vector<Obs<TA>>& gs,
                            int depth) {
    LawCheck ax1("comonad.counit_after_cobind", T.name, depth);
    LawCheck ax2("comonad.cobind_counit_is_id", T.name, depth);
    LawCheck ax3("comonad.cobind_assoc", T.name, depth);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const TA& t = samples[i];
        auto describe = [&] { return nlohmann::json{{"input", T.describe(t)}}; };
        if (!fs.empty()) {
            const Obs<TA>& f = fs[i % fs.size()];
            // cobind(f);counit_B = f
            Value lhs = T.counit_at(f.result_wraps).fn(T.cobind(f, t));
            ax1.sample(lhs == f.fn(t), [&] {
                nlohmann::json j = describe();
                j["f"] = f.name;
                j["lhs"] = lhs.str();
                j["rhs"] = f.fn(t).str();
                return j;
            });
        }
        // cobind(counit_A) = id
        Obs<TA> c = T.counit_at(T.object_wraps(t));
        ax2.sample(T.equal_at(depth, T.cobind(c, t), t), describe);
        if (!fs.empty() && !gs.empty()) {
            const Obs<TA>& f = fs[i % fs.size()];
            const Obs<TA>& g = gs[i % gs.size()];
            // cobind(f);cobind(g) = cobind(cobind(f);g)
            TA lhs = T.cobind(g, T.cobind(f, t));
            Obs<TA> composed{"cobind(" + f.name + ");" + g.name, g.result_wraps,
                             [T, f, g](const TA& u) { return g.fn(T.cobind(f, u)); }};
            TA rhs = T.cobind(composed, t);
            ax3.sample(T.equal_at(depth, lhs, rhs), [&] {
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
    report.add(ax3.finish());
    return report;
}

/// Functor laws of the lifting: lift(id) = id and lift(f;g) = lift(f);lift(g).
template <typename TA>
LawReport lift_functoriality_check(const RelativeComonad<TA>& T, const std::vector<TA>& samples,
                                   int depth) {
    LawCheck id_law("lift.identity", T.name, depth);
    LawCheck comp_law("lift.composition", T.name, depth);
    auto succ = [](const Value& v) { return Value(v.leaf_sum() + 1); };
    auto dbl = [](const Value& v) { return Value(v.leaf_sum() * 2); };
    for (const TA& t : samples) {
        auto describe = [&] { return nlohmann::json{{"input", T.describe(t)}}; };
        int w = T.object_wraps(t);
        TA lifted_id = lift(T, [](const Value& v) { return v; }, w, t);
        id_law.sample(T.equal_at(depth, lifted_id, t), describe);
        TA lhs = lift(T, dbl, 0, lift(T, succ, 0, t));
        TA rhs = lift(T, [succ, dbl](const Value& v) { return dbl(succ(v)); }, 0, t);
        comp_law.sample(T.equal_at(depth, lhs, rhs), describe);
    }
    LawReport report;
    report.add(id_law.finish());
    report.add(comp_law.finish());
    return report;
}

/// Morphism axioms plus naturality with respect to lift.
template <typename TA, typename SA>
LawReport morphism_law_check(const RelComonadMorphism<TA, SA>& m, const std::vector<TA>& samples,
                             const std::vector<Obs<SA>>& fs, int depth) {
    LawCheck counit_law("comonad_morphism.counit", m.name, depth);
    LawCheck cobind_law("comonad_morphism.cobind", m.name, depth);
    LawCheck natural_law("comonad_morphism.natural", m.name, depth);
    auto succ = [](const Value& v) { return Value(v.leaf_sum() + 1); };
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const TA& t = samples[i];
        SA image = m.component(t);
        auto describe = [&] { return nlohmann::json{{"input", m.source.describe(t)}}; };
        counit_law.sample(counit(m.source, t) == counit(m.target, image), describe);
        if (!fs.empty()) {
            const Obs<SA>& f = fs[i % fs.size()];
            Obs<TA> pulled{m.name + ";" + f.name, f.result_wraps,
                           [m, f](const TA& u) { return f.fn(m.component(u)); }};
            SA lhs = m.component(m.source.cobind(pulled, t));
            SA rhs = m.target.cobind(f, image);
            cobind_law.sample(m.target.equal_at(depth, lhs, rhs), [&] {
                nlohmann::json j = describe();
                j["f"] = f.name;
                return j;
            });
        }
        SA nat_lhs = lift(m.target, succ, 0, image);
        SA nat_rhs = m.component(lift(m.source, succ, 0, t));
        natural_law.sample(m.target.equal_at(depth, nat_lhs, nat_rhs), describe);
    }
    LawReport report;
    report.add(counit_law.finish());
    report.add(cobind_law.finish());
    report.add(natural_law.finish());
    return report;
}

/// With-cut axioms; samples must sit at a wrapped object (object_wraps >= 1
/// as seen by the base comonad).
template <typename TA>
LawReport cut_law_check(const RelComonadWithCut<TA>& T, const std::vector<TA>& samples,
                        const std::vector<Obs<TA>>& fs, int depth) {
    LawCheck ax1("cut.counit", T.base.name, depth);
    LawCheck ax2("cut.cobind", T.base.name, depth);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const TA& t = samples[i];
        auto describe = [&] { return nlohmann::json{{"input", T.base.describe(t)}}; };
        int w = T.base.object_wraps(t);
        // cut;counit = lift(pr2);counit
        Value lhs = counit(T.base, T.cut_op(t));
        TA lifted = lift(T.base, [](const Value& v) { return v.pr2(); }, w - 1, t);
        Value rhs = counit(T.base, lifted);
        ax1.sample(lhs == rhs, [&] {
            nlohmann::json j = describe();
            j["lhs"] = lhs.str();
            j["rhs"] = rhs.str();
            return j;
        });
        if (!fs.empty()) {
            const Obs<TA>& f = fs[i % fs.size()];
            // cut;cobind(f) = cobind(extend f);cut
            TA left = T.base.cobind(f, T.cut_op(t));
            TA right = T.cut_op(T.base.cobind(extend_withcut(T, f), t));
            ax2.sample(T.base.equal_at(depth, left, right), [&] {
                nlohmann::json j = describe();
                j["f"] = f.name;
                return j;
            });
        }
    }
    LawReport report;
    report.add(ax1.finish());
    report.add(ax2.finish());
    return report;
}

/// Morphism-of-comonads-with-cut compatibility: tau;cut^S = cut^T;tau,
/// on samples at wrapped objects, in addition to the plain morphism laws.
template <typename TA, typename SA>
LawReport cut_morphism_law_check(const RelComonadMorphism<TA, SA>& m,
                                 const RelComonadWithCut<TA>& source_cut,
                                 const RelComonadWithCut<SA>& target_cut,
                                 const std::vector<TA>& wrapped_samples,
                                 const std::vector<Obs<SA>>& fs, int depth) {
    LawReport report = morphism_law_check(m, wrapped_samples, fs, depth);
    LawCheck compat("comonad_morphism.cut_compat", m.name, depth);
    for (const TA& t : wrapped_samples) {
        SA lhs = target_cut.cut_op(m.component(t));
        SA rhs = m.component(source_cut.cut_op(t));
        compat.sample(m.target.equal_at(depth, lhs, rhs),
                      [&] { return nlohmann::json{{"input", m.source.describe(t)}}; });
    }
    report.add(compat.finish());
    return report;
}

}  // namespace codata

#endif
