#ifndef CODATA_GEN_HPP
#define CODATA_GEN_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "codata/comonad.hpp"
#include "codata/stream.hpp"
#include "codata/tri.hpp"
#include "codata/value.hpp"

namespace codata {

constexpr std::uint64_t kDefaultSeed = 0xC0DA7A;

/// Deterministic configuration of the law harness: identical config means
/// identical report.
struct GenConfig {
    int depth = 10;
    int samples = 100;
    std::uint64_t seed = kDefaultSeed;
    bool mutations = false;
};

using Rng = std::mt19937_64;

inline std::int64_t rand_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// ---------------------------------------------------------------------------
// Stream fixtures
// ---------------------------------------------------------------------------

inline StreamV nats(std::int64_t from = 0) {
    return stream_corec<Value, std::int64_t>(
        [](const std::int64_t& n) { return Value(n); },
        [](const std::int64_t& n) { return n + 1; }, from);
}

inline StreamV const_stream(Value c) {
    return stream_corec<Value, int>([c](const int&) { return c; },
                                    [](const int& u) { return u; }, 0);
}

/// Affine integer orbit; values stay in a small range for readable reports.
inline StreamV affine_stream(std::int64_t a, std::int64_t b, std::int64_t x0) {
    return stream_corec<Value, std::int64_t>(
        [](const std::int64_t& x) { return Value(x % 1000); },
        [a, b](const std::int64_t& x) { return (a * x + b) % 100003; }, x0);
}

inline StreamV random_stream(Rng& rng) {
    return affine_stream(rand_int(rng, 2, 17), rand_int(rng, 0, 99), rand_int(rng, 0, 999));
}

/// Stream whose elements are pairs, for instances indexed at E x A.
inline StreamV pair_stream(std::int64_t e0, std::int64_t a0) {
    return stream_corec<Value, std::int64_t>(
        [e0, a0](const std::int64_t& n) { return Value::pair(Value(e0 + n), Value(a0 + 2 * n)); },
        [](const std::int64_t& n) { return n + 1; }, 0);
}

inline StreamV random_pair_stream(Rng& rng) {
    return pair_stream(rand_int(rng, 0, 500), rand_int(rng, 0, 500));
}

// ---------------------------------------------------------------------------
// Tri fixtures
// ---------------------------------------------------------------------------

inline TriV const_tri(Value a0, Value e0) {
    return tri_corec(TriCoalgSeed<Value, Value, int>{
        0, 0,
        [a0, e0](const int&, int depth) {
            return Layer<Value, Value>{std::vector<Value>(depth, e0), a0};
        },
        [](const int& s) { return s; }});
}

/// The position matrix: layer j has core j and off-diagonal entries
/// 100*j + i (i = 1..j), so every entry is distinct.
inline TriV position_tri() {
    return tri_corec(TriCoalgSeed<Value, Value, int>{
        0, 0,
        [](const int&, int depth) {
            std::vector<Value> prefix;
            prefix.reserve(depth);
            for (int i = 1; i <= depth; ++i) prefix.push_back(Value(100 * depth + i));
            return Layer<Value, Value>{std::move(prefix), Value(depth)};
        },
        [](const int& s) { return s; }});
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Pseudorandom matrix, fully determined by its seed.
inline TriV hash_tri(std::uint64_t seed) {
    return tri_corec(TriCoalgSeed<Value, Value, std::uint64_t>{
        seed, 0,
        [](const std::uint64_t& s, int depth) {
            std::vector<Value> prefix;
            prefix.reserve(depth);
            for (int i = 1; i <= depth; ++i)
                prefix.push_back(Value(static_cast<std::int64_t>(splitmix64(s + i) % 1000)));
            return Layer<Value, Value>{std::move(prefix),
                                       Value(static_cast<std::int64_t>(splitmix64(s) % 1000))};
        },
        [](const std::uint64_t& s) { return splitmix64(s ^ 0x5bf03635ULL); }});
}

inline TriV random_tri(Rng& rng) { return hash_tri(rng()); }

inline TriV wrapped(TriV t, int wraps) {
    for (int i = 0; i < wraps; ++i) t = ttail(t);
    return t;
}

// ---------------------------------------------------------------------------
// Sample batches
// ---------------------------------------------------------------------------

inline std::vector<StreamV> stream_samples(Rng& rng, int k) {
    std::vector<StreamV> out;
    out.reserve(k);
    for (int i = 0; i < k; ++i) {
        switch (i % 4) {
            case 0: out.push_back(nats(rand_int(rng, 0, 20))); break;
            case 1: out.push_back(const_stream(Value(rand_int(rng, -50, 50)))); break;
            case 2: out.push_back(random_pair_stream(rng)); break;
            default: out.push_back(random_stream(rng)); break;
        }
    }
    return out;
}

inline std::vector<TriV> tri_samples(Rng& rng, int k, int wraps = 0) {
    std::vector<TriV> out;
    out.reserve(k);
    for (int i = 0; i < k; ++i) {
        switch (i % 3) {
            case 0: out.push_back(position_tri()); break;
            case 1:
                out.push_back(const_tri(Value(rand_int(rng, -50, 50)),
                                        Value(rand_int(rng, -50, 50))));
                break;
            default: out.push_back(random_tri(rng)); break;
        }
        out.back() = wrapped(out.back(), wraps);
    }
    return out;
}

inline std::vector<Value> value_samples(Rng& rng, int k, bool pairs) {
    std::vector<Value> out;
    out.reserve(k);
    for (int i = 0; i < k; ++i) {
        Value v(rand_int(rng, -100, 100));
        out.push_back(pairs ? Value::pair(Value(rand_int(rng, -100, 100)), v) : v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Observation generators: small closed grammar of destructor compositions
// and leaf arithmetic, so every generated function respects bisimilarity.
// ---------------------------------------------------------------------------

inline std::vector<Obs<StreamV>> stream_obs(Rng& rng, int k) {
    std::vector<Obs<StreamV>> out;
    out.reserve(k);
    for (int i = 0; i < k; ++i) {
        int taps = static_cast<int>(rand_int(rng, 1, 3));
        std::int64_t c0 = rand_int(rng, -5, 5);
        std::vector<std::int64_t> coef;
        for (int j = 0; j < taps; ++j) coef.push_back(rand_int(rng, -3, 3));
        std::string name = "sobs" + std::to_string(i);
        if (i % 4 == 3) {
            // pair-valued observation (result object E x B)
            out.push_back(Obs<StreamV>{name + ".pair", 1, [c0, coef](const StreamV& s) {
                                           StreamV u = s;
                                           std::int64_t acc = c0;
                                           for (std::int64_t c : coef) {
                                               acc += c * shead(u).leaf_sum();
                                               u = stail(u);
                                           }
                                           return Value::pair(Value(acc), Value(acc - c0));
                                       }});
        } else {
            out.push_back(Obs<StreamV>{name, 0, [c0, coef](const StreamV& s) {
                                           StreamV u = s;
                                           std::int64_t acc = c0;
                                           for (std::int64_t c : coef) {
                                               acc += c * shead(u).leaf_sum();
                                               u = stail(u);
                                           }
                                           return Value(acc);
                                       }});
        }
    }
    return out;
}

inline std::vector<Obs<TriV>> tri_obs(Rng& rng, int k) {
    std::vector<Obs<TriV>> out;
    out.reserve(k);
    for (int i = 0; i < k; ++i) {
        int taps = static_cast<int>(rand_int(rng, 1, 3));
        std::int64_t c0 = rand_int(rng, -5, 5);
        std::vector<std::int64_t> coef;
        for (int j = 0; j < taps; ++j) coef.push_back(rand_int(rng, -3, 3));
        std::string name = "tobs" + std::to_string(i);
        auto acc_fn = [c0, coef](const TriV& t) {
            TriV u = t;
            std::int64_t acc = c0;
            for (std::int64_t c : coef) {
                acc += c * tri_head_value(u).leaf_sum();
                u = ttail(u);
            }
            return acc;
        };
        if (i % 4 == 3) {
            out.push_back(Obs<TriV>{name + ".pair", 1, [acc_fn](const TriV& t) {
                                        std::int64_t a = acc_fn(t);
                                        return Value::pair(Value(a), Value(a + 1));
                                    }});
        } else {
            out.push_back(Obs<TriV>{name, 0,
                                    [acc_fn](const TriV& t) { return Value(acc_fn(t)); }});
        }
    }
    return out;
}

inline std::vector<Obs<Value>> value_obs(Rng& rng, int k) {
    std::vector<Obs<Value>> out;
    out.reserve(k);
    for (int i = 0; i < k; ++i) {
        std::int64_t c0 = rand_int(rng, -5, 5);
        std::int64_t c1 = rand_int(rng, -3, 3);
        out.push_back(Obs<Value>{"vobs" + std::to_string(i), 0, [c0, c1](const Value& v) {
                                     return Value(c0 + c1 * v.leaf_sum());
                                 }});
    }
    return out;
}

}  // namespace codata

#endif
