#ifndef CODATA_SETOID_HPP
#define CODATA_SETOID_HPP

#include <functional>
#include <string>
#include <utility>

namespace codata {

/// A value domain together with an executable equivalence predicate.
template <typename V>
struct Setoid {
    std::string name;
    std::function<bool(const V&, const V&)> equiv;
};

/// Setoid whose equivalence is structural equality (operator==).
template <typename V>
Setoid<V> eq_setoid(std::string name = "eq") {
    return Setoid<V>{std::move(name), [](const V& a, const V& b) { return a == b; }};
}

/// Plain pair with named projections.
template <typename X, typename Y>
struct PairValue {
    X first;
    Y second;

    const X& pr1() const { return first; }
    const Y& pr2() const { return second; }

    bool operator==(const PairValue&) const = default;
};

}  // namespace codata

#endif
