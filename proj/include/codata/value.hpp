#ifndef CODATA_VALUE_HPP
#define CODATA_VALUE_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "codata/setoid.hpp"

namespace codata {

/// Universal element for the categorical layer: an integer leaf or a pair.
/// Nested pairs encode values of product types E x (E x (... x A)).
class Value {
public:
    Value() : int_(0) {}
    Value(std::int64_t n) : int_(n) {}  // NOLINT: implicit by design of fixtures

    static Value pair(Value first, Value second) {
        Value v;
        v.pair_ = std::make_shared<std::pair<Value, Value>>(std::move(first), std::move(second));
        return v;
    }

    bool is_pair() const { return pair_ != nullptr; }

    std::int64_t as_int() const {
        if (is_pair()) throw std::invalid_argument("Value: pair is not an integer");
        return int_;
    }

    const Value& pr1() const {
        if (!is_pair()) throw std::invalid_argument("Value: pr1 on a non-pair");
        return pair_->first;
    }

    const Value& pr2() const {
        if (!is_pair()) throw std::invalid_argument("Value: pr2 on a non-pair");
        return pair_->second;
    }

    friend bool operator==(const Value& a, const Value& b) {
        if (a.is_pair() != b.is_pair()) return false;
        if (!a.is_pair()) return a.int_ == b.int_;
        return a.pr1() == b.pr1() && a.pr2() == b.pr2();
    }
    friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

    /// Sum of all integer leaves; a cheap bisimilarity-respecting observation.
    std::int64_t leaf_sum() const {
        if (!is_pair()) return int_;
        return pair_->first.leaf_sum() + pair_->second.leaf_sum();
    }

    std::string str() const {
        if (!is_pair()) return std::to_string(int_);
        return "(" + pr1().str() + "," + pr2().str() + ")";
    }

private:
    std::int64_t int_;
    std::shared_ptr<std::pair<Value, Value>> pair_;
};

/// Fold a flattened prefix/core back into nested pairs, outermost first:
/// ([e2,e1], a) -> (e2,(e1,a)).
inline Value nest(const std::vector<Value>& prefix, const Value& core) {
    Value v = core;
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) v = Value::pair(*it, v);
    return v;
}

/// Inverse of nest: peel `wraps` outer pair components into a prefix.
inline std::pair<std::vector<Value>, Value> unnest(const Value& v, int wraps) {
    std::vector<Value> prefix;
    Value rest = v;
    for (int i = 0; i < wraps; ++i) {
        prefix.push_back(rest.pr1());
        rest = rest.pr2();
    }
    return {std::move(prefix), std::move(rest)};
}

/// Strong-monoidal witness of the embedding into setoids: on pairs it is
/// componentwise identity, so the two directions just repackage.
inline PairValue<Value, Value> phi_pair(const Value& p) { return {p.pr1(), p.pr2()}; }
inline Value phi_inv(const PairValue<Value, Value>& q) { return Value::pair(q.first, q.second); }

}  // namespace codata

#endif
