#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "plie/checks.hpp"
#include "plie/embed.hpp"
#include "plie/pentad.hpp"
#include "plie/structure.hpp"

namespace plie::io {

using nlohmann::json;

/// Graded dimension table, degrees -N..N.
struct DimsTable {
  int max_degree = 0;
  std::vector<std::size_t> dims;  // index degree + max_degree

  friend bool operator==(const DimsTable&, const DimsTable&) = default;
};

json to_json(const Scalar& s);
json to_json(const Vec& v);
json to_json(const Mat& m);
json to_json(const CartanPentad& p);
json to_json(const ReductiveData& d);
json to_json(const SpanAnalysis& a);
json to_json(const StructureReport& r);
json to_json(const Report& r);
json to_json(const DimsTable& t);

Scalar scalar_from_json(const json& j);
Vec vec_from_json(const json& j);
Mat mat_from_json(const json& j);
CartanPentad pentad_from_json(const json& j);
Mat cartan_from_json(const json& j);  // matrix file {"C": [[...]]}
ReductiveData reductive_from_json(const json& j);
SpanAnalysis span_from_json(const json& j);
StructureReport structure_from_json(const json& j);
Report report_from_json(const json& j);
DimsTable dims_from_json(const json& j);

json matrix_file_json(const Mat& cartan);  // {"C": [[...]]}

/// Parses a file, wrapping parse/schema failures in std::runtime_error with
/// the path in the message.
json load_json_file(const std::string& path);

/// Deterministic rendering: sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);

}  // namespace plie::io
