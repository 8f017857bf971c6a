#ifndef CODATA_JSON_IO_HPP
#define CODATA_JSON_IO_HPP

#include <json.hpp>

#include "codata/tri.hpp"
#include "codata/value.hpp"

namespace codata {

/// Integer leaves serialize as numbers, pairs as two-element arrays.
inline nlohmann::json value_json(const Value& v) {
    if (!v.is_pair()) return v.as_int();
    return nlohmann::json::array({value_json(v.pr1()), value_json(v.pr2())});
}

inline nlohmann::json layer_json(const Layer<Value, Value>& l) {
    nlohmann::json prefix = nlohmann::json::array();
    for (const Value& e : l.prefix) prefix.push_back(value_json(e));
    return nlohmann::json{{"prefix", prefix}, {"core", value_json(l.core)}};
}

inline nlohmann::json finite_triangle_json(const FiniteTriangle<Value, Value>& ft) {
    nlohmann::json layers = nlohmann::json::array();
    for (const auto& l : ft.layers) layers.push_back(layer_json(l));
    return nlohmann::json{{"layers", layers}};
}

}  // namespace codata

#endif
