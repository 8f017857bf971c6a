#ifndef CODATA_THUNK_HPP
#define CODATA_THUNK_HPP

#include <functional>
#include <memory>
#include <optional>
#include <utility>

namespace codata {

/// Memoized deferred computation. The producer runs at most once on the
/// success path; if it throws, the cache stays empty and the next force
/// retries. Copies share the cache.
template <typename V>
class Thunk {
public:
    Thunk() = default;

    explicit Thunk(std::function<V()> producer)
        : state_(std::make_shared<State>(State{std::move(producer), std::nullopt})) {}

    /// An already-evaluated thunk.
    static Thunk ready(V value) {
        Thunk t;
        t.state_ = std::make_shared<State>(State{nullptr, std::move(value)});
        return t;
    }

    const V& force() const {
        if (!state_->cache) {
            state_->cache = state_->producer();
            state_->producer = nullptr;  // release captured state
        }
        return *state_->cache;
    }

    bool evaluated() const { return state_ && state_->cache.has_value(); }

private:
    struct State {
        std::function<V()> producer;
        std::optional<V> cache;
    };
    std::shared_ptr<State> state_;
};

}  // namespace codata

#endif
