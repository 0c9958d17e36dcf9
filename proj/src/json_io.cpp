#include "eicat/json_io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace eicat {

namespace {

std::string as_name(const Json& v, const char* what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw SchemaError(std::string(what) + " must be a string or an integer");
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

CategoryData category_data_from_json(const Json& j) {
  CategoryData d;
  const Json& objects = field(j, "objects");
  if (!objects.is_array()) throw SchemaError("'objects' must be an array");
  for (const auto& o : objects) d.objects.push_back(as_name(o, "object"));
  const Json& morphisms = field(j, "morphisms");
  if (!morphisms.is_array()) throw SchemaError("'morphisms' must be an array");
  for (const auto& m : morphisms) {
    d.morphisms.push_back({as_name(field(m, "id"), "morphism id"), as_name(field(m, "dom"), "dom"),
                           as_name(field(m, "cod"), "cod")});
  }
  const Json& identities = field(j, "identities");
  if (!identities.is_object()) throw SchemaError("'identities' must be an object");
  for (const auto& [k, v] : identities.items()) d.identities.emplace_back(k, as_name(v, "identity"));
  const Json& composition = field(j, "composition");
  if (!composition.is_array()) throw SchemaError("'composition' must be an array");
  for (const auto& c : composition) {
    if (!c.is_array() || c.size() != 3) throw SchemaError("composition entries must be [g, f, gf]");
    d.composition.push_back({as_name(c[0], "g"), as_name(c[1], "f"), as_name(c[2], "gf")});
  }
  return d;
}

Json category_to_json(const CategoryData& d) {
  Json j;
  j["objects"] = d.objects;
  Json morphs = Json::array();
  for (const auto& m : d.morphisms) morphs.push_back({{"id", m.id}, {"dom", m.dom}, {"cod", m.cod}});
  j["morphisms"] = std::move(morphs);
  Json ident = Json::object();
  for (const auto& [o, f] : d.identities) ident[o] = f;
  j["identities"] = std::move(ident);
  Json comp = Json::array();
  for (const auto& c : d.composition) comp.push_back(Json::array({c.g, c.f, c.gf}));
  j["composition"] = std::move(comp);
  return j;
}

Json category_to_json(const FiniteCategory& cat) { return category_to_json(cat.to_data()); }

FiniteGroup group_from_json(const Json& j) {
  const std::size_t n = field(j, "order").get<std::size_t>();
  const Json& table = field(j, "table");
  if (!table.is_array() || table.size() != n) throw SchemaError("'table' must have 'order' rows");
  std::vector<int> flat;
  for (const auto& row : table) {
    if (!row.is_array() || row.size() != n) throw SchemaError("group table rows must have 'order' entries");
    for (const auto& v : row) flat.push_back(v.get<int>());
  }
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  return FiniteGroup(n, std::move(flat), std::move(names));
}

Json group_to_json(const FiniteGroup& g) {
  Json table = Json::array();
  for (std::size_t a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < g.order(); ++b) row.push_back(g.mul(static_cast<int>(a), static_cast<int>(b)));
    table.push_back(std::move(row));
  }
  return Json{{"order", g.order()}, {"table", std::move(table)}, {"names", g.names()}};
}

std::vector<Cell> cells_from_json(const Json& j) {
  std::vector<Cell> out;
  const Json& cells = field(j, "cells");
  if (!cells.is_array()) throw SchemaError("'cells' must be an array");
  for (const auto& c : cells) {
    const long dim = field(c, "dim").get<long>();
    if (dim < 0) throw SchemaError("cell dimension must be nonnegative");
    out.push_back({static_cast<std::size_t>(dim), as_name(field(c, "base"), "base")});
  }
  return out;
}

GCWComplex gcw_from_json(const Json& j, std::size_t cap) {
  GCWComplex x;
  const Json& g = field(j, "group");
  x.group = g.is_string() ? build_group(g.get<std::string>(), cap) : group_from_json(g);
  if (x.group.order() > cap) throw SchemaError("group order exceeds cap");
  x.classes = subgroup_classes(x.group, cap);
  const Json& cells = field(j, "cells");
  if (!cells.is_array()) throw SchemaError("'cells' must be an array");
  for (const auto& c : cells) {
    const long dim = field(c, "dim").get<long>();
    if (dim < 0) throw SchemaError("cell dimension must be nonnegative");
    const auto stab = field(c, "stabilizer").get<std::vector<int>>();
    x.cells.push_back({static_cast<std::size_t>(dim), class_index(x.group, x.classes, stab)});
  }
  return x;
}

Json matrix_to_json(const QMatrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.row_labels()}, {"cols", m.col_labels()}, {"entries", std::move(entries)}};
}

Json vector_to_json(const QVector& v) {
  Json values = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i) values.push_back(v[i].to_string());
  return Json{{"labels", v.labels()}, {"values", std::move(values)}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 computation failed");
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return out.str();
}

}  // namespace eicat
