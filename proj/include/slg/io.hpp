#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "slg/clifford.hpp"
#include "slg/report.hpp"

namespace slg {

// All emitted JSON uses insertion order, so identical inputs give
// byte-identical files.
using Json = nlohmann::ordered_json;

// Cayley-table file: {"n": int, "table": [[int]], "labels": [string]?,
//                     "decoration": {"class":[int],"e":[int],"class_table":[[int]]}?}
Json table_to_json(const Groupoid& g);
Json decorated_to_json(const DecoratedGroupoid& dg);
Json decoration_to_json(const Decoration& d);

Groupoid table_from_json(const Json& j);
std::optional<Decoration> decoration_from_json(const Json& j);
DecoratedGroupoid decorated_from_json(const Json& j);  // decoration required

// Strong-semilattice file: {"semilattice": [[int]], "groups": [[[int]]],
//                           "homs": [{"from":a,"to":b,"map":[int]}]}
// Identity self-homs are implicit on write and optional on read.
Json spec_to_json(const StrongSemilatticeSpec& spec);
StrongSemilatticeSpec spec_from_json(const Json& j);

Json witness_to_json(const Witness& w);
Json report_to_json(const Report& r);

/// FNV-1a 64-bit over the canonical dump of a normalized JSON value.
std::string digest(const Json& normalized);

Json load_json_file(const std::string& path);  // throws InvalidInput
void write_json_file(const std::string& path, const Json& j);

}  // namespace slg
