#ifndef CODATA_STREAM_HPP
#define CODATA_STREAM_HPP

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "codata/report.hpp"
#include "codata/setoid.hpp"
#include "codata/thunk.hpp"

namespace codata {

/// Lazy infinite sequence, defined by its two destructors shead/stail.
/// Nodes are immutable; head and tail are memoized thunks shared by copies.
template <typename A>
class Stream {
public:
    Stream() = default;

    static Stream make(Thunk<A> head, Thunk<Stream> tail) {
        Stream s;
        s.node_ = std::make_shared<Node>(Node{std::move(head), std::move(tail)});
        return s;
    }

    const A& head() const { return node_->head.force(); }
    const Stream& tail() const { return node_->tail.force(); }

    bool valid() const { return node_ != nullptr; }

private:
    struct Node {
        Thunk<A> head;
        Thunk<Stream> tail;
    };
    std::shared_ptr<Node> node_;
};

template <typename A>
const A& shead(const Stream<A>& s) {
    return s.head();
}

template <typename A>
const Stream<A>& stail(const Stream<A>& s) {
    return s.tail();
}

/// Corecursion: the unique stream with shead = hd(seed) and
/// stail = corec(hd, tl, tl(seed)). Both computation rules hold by
/// construction; hd/tl run lazily, only when the cell is forced.
template <typename A, typename T>
Stream<A> stream_corec(std::function<A(const T&)> hd, std::function<T(const T&)> tl, T seed) {
    return Stream<A>::make(
        Thunk<A>([hd, seed] { return hd(seed); }),
        Thunk<Stream<A>>([hd, tl, seed] { return stream_corec<A, T>(hd, tl, tl(seed)); }));
}

/// Finite observation window: the first n heads.
template <typename A>
std::vector<A> stake(int n, Stream<A> s) {
    std::vector<A> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        out.push_back(shead(s));
        s = stail(s);
    }
    return out;
}

/// Labeled observation of a stream, the argument shape of cosubstitution.
template <typename A, typename B>
struct StreamFun {
    std::string description;
    std::function<B(const Stream<A>&)> apply;
};

/// Cosubstitution: head of the result observes the whole current suffix,
/// the tail redecorates the tail.  Realized by corecursion with the suffix
/// as state, so the result shares memoized suffixes of s.
template <typename A, typename B>
Stream<B> sredec(const StreamFun<A, B>& f, const Stream<A>& s) {
    return stream_corec<B, Stream<A>>(
        f.apply, [](const Stream<A>& t) { return stail(t); }, s);
}

/// Sound depth-n approximation of bisimilarity: the first n heads agree
/// under eqA. n = 0 is vacuously true.
template <typename A>
bool stream_bisim_depth(int n, const Setoid<A>& eqA, Stream<A> s, Stream<A> t) {
    for (int i = 0; i < n; ++i) {
        if (!eqA.equiv(shead(s), shead(t))) return false;
        s = stail(s);
        t = stail(t);
    }
    return true;
}

/// Checks the premises of the coinduction rule on sampled R-related pairs:
/// along n unfoldings, heads must agree and tails must stay R-related.
/// A pass certifies depth-n bisimilarity of every sampled pair.
template <typename A>
LawReport stream_coinduction_check(
    const std::function<bool(const Stream<A>&, const Stream<A>&)>& R, const Setoid<A>& eqA,
    const std::vector<std::pair<Stream<A>, Stream<A>>>& samples, int n,
    const std::string& instance_id = "stream") {
    LawCheck check("stream.coinduction", instance_id, n);
    for (const auto& [s0, t0] : samples) {
        if (!R(s0, t0)) continue;
        Stream<A> s = s0, t = t0;
        bool ok = true;
        int step = 0;
        for (; step < n; ++step) {
            if (!eqA.equiv(shead(s), shead(t))) {
                ok = false;
                break;
            }
            s = stail(s);
            t = stail(t);
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
