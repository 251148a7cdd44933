#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "enritch/category.hpp"
#include "enritch/error.hpp"
#include "enritch/parmet.hpp"
#include "enritch/quantale.hpp"

namespace enritch::io {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

/// Reads and parses a JSON file. SchemaError with line and column on syntax errors.
json read_json_file(const std::filesystem::path& path);
/// Parses JSON text; `origin` names the source in error messages.
json parse_json(const std::string& text, const std::string& origin = "<input>");

/// Hex SHA-256 of the file's bytes.
std::string file_digest(const std::filesystem::path& path);

/// {"path": ..., "sha256": ...}
ordered_json input_entry(const std::filesystem::path& path);

// Field access with JSON-pointer style paths in error messages.
const json& field(const json& j, const char* key, const std::string& path);
const json& array_field(const json& j, const char* key, const std::string& path);
std::string string_value(const json& j, const std::string& path);
/// A string "p/q", "n", "inf", or a non-negative JSON integer.
ExtRat ext_rat_value(const json& j, const std::string& path);

// ---------------------------------------------------------------------------
// Quantales
// ---------------------------------------------------------------------------

/// {"elements":[...], "leq":[[bool]], "tensor":[[name]], "unit":name, "involution":[name]}
QuantaleTables quantale_from_json(const json& j);
ordered_json quantale_to_json(const QuantaleTables& t);
QuantaleTables load_quantale(const std::filesystem::path& path);

ordered_json law_report_to_json(const LawReport& report);

// ---------------------------------------------------------------------------
// Typed sets, relations, categories, functors, presheaves (generic in D)
// ---------------------------------------------------------------------------

template <Quantaloid D>
typename D::value_type value_from_json(const D& d, const json& j, const std::string& path) {
  std::string text;
  if (j.is_string()) {
    text = j.get<std::string>();
  } else if (j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0)) {
    text = std::to_string(j.get<long long>());
  } else {
    throw SchemaError(path + ": expected a value string");
  }
  try {
    return d.parse(text);
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

template <Quantaloid D>
TypedSet<typename D::value_type> typed_set_from_json(const D& d, const json& j, const std::string& path) {
  const auto& names = array_field(j, "names", path);
  const auto& types = array_field(j, "types", path);
  if (names.size() != types.size()) throw SchemaError(path + ": names and types differ in length");
  std::vector<std::string> n;
  std::vector<typename D::value_type> t;
  for (std::size_t i = 0; i < names.size(); ++i) {
    n.push_back(string_value(names[i], path + "/names/" + std::to_string(i)));
    t.push_back(value_from_json(d, types[i], path + "/types/" + std::to_string(i)));
  }
  try {
    return make_typed_set(d, std::move(n), std::move(t));
  } catch (const ShapeError& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

template <Quantaloid D>
ordered_json typed_set_to_json(const D& d, const TypedSet<typename D::value_type>& s) {
  ordered_json out;
  out["names"] = s.names;
  out["types"] = ordered_json::array();
  for (const auto& t : s.types) out["types"].push_back(d.format(t));
  return out;
}

template <Quantaloid D>
std::vector<typename D::value_type> matrix_from_json(const D& d, const json& j, std::size_t rows, std::size_t cols,
                                                     const std::string& path) {
  if (!j.is_array() || j.size() != rows) {
    throw SchemaError(path + ": expected " + std::to_string(rows) + " rows");
  }
  std::vector<typename D::value_type> out;
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string row_path = path + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].size() != cols) {
      throw SchemaError(row_path + ": expected " + std::to_string(cols) + " entries");
    }
    for (std::size_t k = 0; k < cols; ++k) out.push_back(value_from_json(d, j[i][k], row_path + "/" + std::to_string(k)));
  }
  return out;
}

template <Quantaloid D>
ordered_json matrix_to_json(const D& d, const std::vector<typename D::value_type>& entries, std::size_t cols) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; cols && i < entries.size() / cols; ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t k = 0; k < cols; ++k) row.push_back(d.format(entries[i * cols + k]));
    out.push_back(std::move(row));
  }
  return out;
}

/// {"source":TypedSet, "target":TypedSet, "entries":[[value]]}
template <Quantaloid D>
Relation<typename D::value_type> relation_from_json(const D& d, const json& j) {
  auto source = typed_set_from_json(d, field(j, "source", ""), "/source");
  auto target = typed_set_from_json(d, field(j, "target", ""), "/target");
  auto entries = matrix_from_json(d, field(j, "entries", ""), source.size(), target.size(), "/entries");
  try {
    return make_relation(d, std::move(source), std::move(target), std::move(entries));
  } catch (const ShapeError& e) {
    throw SchemaError(std::string("/entries: ") + e.what());
  }
}

template <Quantaloid D>
ordered_json relation_to_json(const D& d, const Relation<typename D::value_type>& r) {
  ordered_json out;
  out["source"] = typed_set_to_json(d, r.source());
  out["target"] = typed_set_to_json(d, r.target());
  out["entries"] = matrix_to_json(d, r.entries(), r.cols());
  return out;
}

/// {"set":TypedSet, "hom":[[value]]}. Entries must be diagonals; the category
/// axioms are left to validate_category.
template <Quantaloid D>
Category<typename D::value_type> category_from_json(const D& d, const json& j) {
  auto set = typed_set_from_json(d, field(j, "set", ""), "/set");
  auto hom = matrix_from_json(d, field(j, "hom", ""), set.size(), set.size(), "/hom");
  try {
    return make_category(d, std::move(set), std::move(hom));
  } catch (const ShapeError& e) {
    throw SchemaError(std::string("/hom: ") + e.what());
  }
}

template <Quantaloid D>
ordered_json category_to_json(const D& d, const Category<typename D::value_type>& c) {
  ordered_json out;
  out["set"] = typed_set_to_json(d, c.set());
  out["hom"] = matrix_to_json(d, c.hom.entries(), c.size());
  return out;
}

/// {"map": {name: name}}, total on the domain.
Functor functor_from_json(const json& j, const std::vector<std::string>& domain,
                          const std::vector<std::string>& codomain);
ordered_json functor_to_json(const Functor& f, const std::vector<std::string>& domain,
                             const std::vector<std::string>& codomain);

/// {"type": value, "values": {name: value}}, total on the base.
template <Quantaloid D>
Presheaf<typename D::value_type> presheaf_from_json(const D& d, const json& j,
                                                    const Category<typename D::value_type>& base) {
  Presheaf<typename D::value_type> out{value_from_json(d, field(j, "type", ""), "/type"), {}};
  const auto& values = field(j, "values", "");
  if (!values.is_object()) throw SchemaError("/values: expected an object");
  if (values.size() != base.size()) throw SchemaError("/values: expected one value per object");
  for (std::size_t x = 0; x < base.size(); ++x) {
    auto it = values.find(base.name(x));
    if (it == values.end()) throw SchemaError("/values: missing \"" + base.name(x) + "\"");
    out.values.push_back(value_from_json(d, *it, "/values/" + base.name(x)));
  }
  return out;
}

template <Quantaloid D>
ordered_json presheaf_to_json(const D& d, const Presheaf<typename D::value_type>& mu,
                              const Category<typename D::value_type>& base) {
  ordered_json out;
  out["type"] = d.format(mu.type);
  out["values"] = ordered_json::object();
  for (std::size_t x = 0; x < base.size(); ++x) out["values"][base.name(x)] = d.format(mu.values[x]);
  return out;
}

/// {"p": v, "q": v, "u": v}
template <Quantaloid D>
ordered_json diagonal_to_json(const D& d, const DiagonalHom<typename D::value_type>& h) {
  ordered_json out;
  out["p"] = d.format(h.source);
  out["q"] = d.format(h.target);
  out["u"] = d.format(h.value);
  return out;
}

template <Quantaloid D>
DiagonalHom<typename D::value_type> diagonal_from_json(const D& d, const json& j) {
  auto p = value_from_json(d, field(j, "p", ""), "/p");
  auto q = value_from_json(d, field(j, "q", ""), "/q");
  auto u = value_from_json(d, field(j, "u", ""), "/u");
  try {
    return make_hom(d, p, q, u);
  } catch (const ShapeError& e) {
    throw SchemaError(std::string("/u: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Partial metric spaces
// ---------------------------------------------------------------------------

/// {"points":[...], "alpha":[["p/q"|"inf"]]}
ParMetSpace space_from_json(const json& j);
ordered_json space_to_json(const ParMetSpace& m);

/// {"r": "p/q", "values": {name: "p/q"}}
RadiusFunction radius_from_json(const json& j, const ParMetSpace& m);
ordered_json radius_to_json(const RadiusFunction& mu, const ParMetSpace& m);

/// {"r": "p/q", "family": [{"point": name, "radius": "p/q"}]}
struct Family {
  ExtRat r;
  std::vector<FamilyMember> members;
};
Family family_from_json(const json& j, const ParMetSpace& m);

/// {"map": {name: name}} between two spaces.
std::vector<std::size_t> point_map_from_json(const json& j, const ParMetSpace& from, const ParMetSpace& to);

/// Two-space indent, trailing newline.
std::string dump(const ordered_json& j);

}  // namespace enritch::io
