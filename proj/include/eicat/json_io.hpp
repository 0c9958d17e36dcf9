#pragma once

// JSON encodings of categories, groups, cell lists, matrices and vectors.

#include "eicat/exactq.hpp"
#include "eicat/fincat.hpp"
#include "eicat/group.hpp"
#include "eicat/leinster.hpp"
#include "eicat/orbitcat.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace eicat {

using Json = nlohmann::ordered_json;

/// Thrown for documents that do not follow a schema.
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

CategoryData category_data_from_json(const Json& j);
Json category_to_json(const CategoryData& d);
Json category_to_json(const FiniteCategory& cat);

/// {"order": n, "table": [[...]], "names": [...]}.
FiniteGroup group_from_json(const Json& j);
Json group_to_json(const FiniteGroup& g);

/// {"cells": [{"dim": n, "base": object}]}.
std::vector<Cell> cells_from_json(const Json& j);

/// {"group": <spec string or group object>, "cells": [{"dim": n, "stabilizer": [elements]}]}.
GCWComplex gcw_from_json(const Json& j, std::size_t cap = kDefaultGroupCap);

/// {"rows": [...labels], "cols": [...labels], "entries": [["p/q", ...], ...]}.
Json matrix_to_json(const QMatrix& m);
/// {"labels": [...], "values": ["p/q", ...]}.
Json vector_to_json(const QVector& v);

std::string read_file(const std::string& path);
/// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& bytes);

}  // namespace eicat
