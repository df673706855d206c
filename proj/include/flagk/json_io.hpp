#pragma once
// JSON (de)serialization for the domain types and DOT export for graphs.

#include <string>

#include <json.hpp>

#include "flagk/poly.hpp"
#include "flagk/weyl.hpp"

namespace flagk {

struct QbgGraph;  // qbg.hpp
struct QPoly;     // qkring.hpp

nlohmann::json to_json(const Perm& w);
nlohmann::json to_json(const Weight& w);
nlohmann::json to_json(const Root& r, int sign = +1);
nlohmann::json to_json(const Coroot& xi);
nlohmann::json to_json(const GroupAlg& f);
nlohmann::json to_json(const QbgGraph& g);
nlohmann::json to_json(const QPoly& p);

Perm perm_from_json(const nlohmann::json& j);
QPoly qpoly_from_json(const nlohmann::json& j);

std::string to_dot(const QbgGraph& g);

}  // namespace flagk
