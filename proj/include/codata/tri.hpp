#ifndef CODATA_TRI_HPP
#define CODATA_TRI_HPP

#include <functional>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "codata/report.hpp"
#include "codata/setoid.hpp"
#include "codata/stream.hpp"
#include "codata/thunk.hpp"

namespace codata {

/// Flattened diagonal value of a triangular matrix node: a value of type
/// E^j x A stored as its j off-diagonal wraps (newest/outermost first)
/// plus the core of type A.
template <typename E, typename A>
struct Layer {
    std::vector<E> prefix;
    A core;

    bool operator==(const Layer&) const = default;
};

/// Lazy infinite triangular matrix.  The tail of a matrix over A is a
/// matrix over E x A; instead of nesting the element type statically we
/// flatten wraps into Layer prefixes and count them in wrap_count.
/// Invariant: head(tail^j(t)).prefix.size() == t.wrap_count() + j.
template <typename E, typename A>
class Tri {
public:
    Tri() = default;

    static Tri make(int wrap_count, Thunk<Layer<E, A>> head, Thunk<Tri> tail) {
        Tri t;
        t.node_ = std::make_shared<Node>(Node{std::move(head), std::move(tail), wrap_count});
        return t;
    }

    const Layer<E, A>& head() const { return node_->head.force(); }
    const Tri& tail() const { return node_->tail.force(); }
    int wrap_count() const { return node_->wrap_count; }

    bool valid() const { return node_ != nullptr; }

private:
    struct Node {
        Thunk<Layer<E, A>> head;
        Thunk<Tri> tail;
        int wrap_count;
    };
    std::shared_ptr<Node> node_;
};

template <typename E, typename A>
const Layer<E, A>& thead(const Tri<E, A>& t) {
    return t.head();
}

/// The tail lives at diagonal type E x A: one more wrap.
template <typename E, typename A>
const Tri<E, A>& ttail(const Tri<E, A>& t) {
    return t.tail();
}

/// Dynamic rendering of a polymorphic coalgebra for Tri: hd must return a
/// layer whose prefix length equals the current depth tag.
template <typename E, typename A, typename S>
struct TriCoalgSeed {
    S state;
    int depth_tag = 0;
    std::function<Layer<E, A>(const S&, int)> hd;
    std::function<S(const S&)> tl;
};

template <typename E, typename A, typename S>
Tri<E, A> tri_corec(TriCoalgSeed<E, A, S> c) {
    return Tri<E, A>::make(
        c.depth_tag,
        Thunk<Layer<E, A>>([c] { return c.hd(c.state, c.depth_tag); }),
        Thunk<Tri<E, A>>([c] {
            TriCoalgSeed<E, A, S> next{c.tl(c.state), c.depth_tag + 1, c.hd, c.tl};
            return tri_corec(std::move(next));
        }));
}

/// Discards the newest off-diagonal wrap at every layer:
/// cut;head = head;pr2 and cut;tail = tail;cut.
template <typename E, typename A>
Tri<E, A> cut(const Tri<E, A>& t) {
    if (t.wrap_count() < 1)
        throw std::invalid_argument("cut: matrix has no off-diagonal wrap to remove");
    return Tri<E, A>::make(
        t.wrap_count() - 1,
        Thunk<Layer<E, A>>([t] {
            const Layer<E, A>& l = thead(t);
            return Layer<E, A>{std::vector<E>(l.prefix.begin() + 1, l.prefix.end()), l.core};
        }),
        Thunk<Tri<E, A>>([t] { return cut(ttail(t)); }));
}

/// Adapts an observation of Tri A to one of Tri (E x A): pairs the newest
/// off-diagonal entry with the observation of the cut matrix.
template <typename E, typename A, typename B>
std::function<PairValue<E, B>(const Tri<E, A>&)> extend(std::function<B(const Tri<E, A>&)> f) {
    return [f](const Tri<E, A>& t) {
        return PairValue<E, B>{thead(t).prefix.front(), f(cut(t))};
    };
}

/// Observation with an explicit result arity: fn must return layers whose
/// prefix length is exactly `wraps`.  This is what extend produces after
/// `wraps` unfolding steps of redecoration.
template <typename E, typename A, typename B>
struct TriObs {
    int wraps = 0;
    std::function<Layer<E, B>(const Tri<E, A>&)> fn;
};

template <typename E, typename A, typename B>
TriObs<E, A, B> extend_obs(const TriObs<E, A, B>& f) {
    return TriObs<E, A, B>{f.wraps + 1, [f](const Tri<E, A>& t) {
                               Layer<E, B> inner = f.fn(cut(t));
                               std::vector<E> prefix;
                               prefix.reserve(inner.prefix.size() + 1);
                               prefix.push_back(thead(t).prefix.front());
                               prefix.insert(prefix.end(), inner.prefix.begin(),
                                             inner.prefix.end());
                               return Layer<E, B>{std::move(prefix), std::move(inner.core)};
                           }};
}

/// Redecoration engine: corecursion whose state is the current sub-matrix,
/// with the observation extended at every step.
template <typename E, typename A, typename B>
Tri<E, B> tri_redec_obs(TriObs<E, A, B> f, const Tri<E, A>& t) {
    return Tri<E, B>::make(
        f.wraps,
        Thunk<Layer<E, B>>([f, t] { return f.fn(t); }),
        Thunk<Tri<E, B>>([f, t] { return tri_redec_obs(extend_obs(f), ttail(t)); }));
}

/// Cosubstitution ("redecoration"): every diagonal core is replaced by the
/// observation of its sub-matrix; off-diagonal entries pass through.
template <typename E, typename A, typename B>
Tri<E, B> redec(std::function<B(const Tri<E, A>&)> f, const Tri<E, A>& t) {
    TriObs<E, A, B> obs{0, [f](const Tri<E, A>& u) {
                            return Layer<E, B>{{}, f(u)};
                        }};
    return tri_redec_obs(std::move(obs), t);
}

/// Finite observation window: layers 0..n-1, layer j from head(tail^j(t)).
template <typename E, typename A>
struct FiniteTriangle {
    std::vector<Layer<E, A>> layers;

    bool operator==(const FiniteTriangle&) const = default;
};

template <typename E, typename A>
FiniteTriangle<E, A> truncate(int n, Tri<E, A> t) {
    FiniteTriangle<E, A> out;
    out.layers.reserve(n);
    for (int j = 0; j < n; ++j) {
        out.layers.push_back(thead(t));
        t = ttail(t);
    }
    return out;
}

/// The stream of diagonal cores: diag;shead = head and
/// diag;stail = tail;cut;diag.
template <typename E, typename A>
Stream<A> diag(const Tri<E, A>& t) {
    return stream_corec<A, Tri<E, A>>(
        [](const Tri<E, A>& u) { return thead(u).core; },
        [](const Tri<E, A>& u) { return cut(ttail(u)); }, t);
}

/// Layer-wise depth-n bisimilarity approximation.  Matrices at different
/// wrap counts live at different diagonal types; comparing them is an error.
template <typename E, typename A>
bool tri_bisim_depth(int n, const Setoid<E>& eqE, const Setoid<A>& eqA, Tri<E, A> s,
                     Tri<E, A> t) {
    if (s.wrap_count() != t.wrap_count())
        throw std::invalid_argument("tri_bisim_depth: wrap_count mismatch");
    for (int j = 0; j < n; ++j) {
        const Layer<E, A>& ls = thead(s);
        const Layer<E, A>& lt = thead(t);
        if (ls.prefix.size() != lt.prefix.size()) return false;
        for (std::size_t i = 0; i < ls.prefix.size(); ++i)
            if (!eqE.equiv(ls.prefix[i], lt.prefix[i])) return false;
        if (!eqA.equiv(ls.core, lt.core)) return false;
        s = ttail(s);
        t = ttail(t);
    }
    return true;
}

/// Coinduction rule premises on sampled R-related pairs, with both
/// destructor observations checked along n unfoldings.
template <typename E, typename A>
LawReport tri_coinduction_check(
    const std::function<bool(const Tri<E, A>&, const Tri<E, A>&)>& R, const Setoid<E>& eqE,
    const Setoid<A>& eqA, const std::vector<std::pair<Tri<E, A>, Tri<E, A>>>& samples, int n,
    const std::string& instance_id = "tri") {
    LawCheck check("tri.coinduction", instance_id, n);
    for (const auto& [s0, t0] : samples) {
        if (!R(s0, t0)) continue;
        Tri<E, A> s = s0, t = t0;
        bool ok = true;
        int step = 0;
        for (; step < n; ++step) {
            if (!tri_bisim_depth(1, eqE, eqA, s, t)) {
                ok = false;
                break;
            }
            s = ttail(s);
            t = ttail(t);
            if (!R(s, t)) {
                ok = false;
                break;
            }
        }
        check.sample(ok, [&] {
            return nlohmann::json{{"violation_depth", step}};
        });
    }
    LawReport report;
    report.add(check.finish());
    return report;
}

}  // namespace codata

#endif
