#include "enritch/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <openssl/evp.h>

namespace enritch::io {

namespace {

std::string read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string line_excerpt(const std::string& text, std::size_t byte) {
  std::size_t line = 1, start = 0;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      start = i + 1;
    }
  }
  std::size_t end = text.find('\n', start);
  std::string content = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
  std::ostringstream out;
  out << "line " << line << ", column " << (byte >= start ? byte - start + 1 : 1) << ": " << content;
  return out.str();
}

std::size_t element_index(const std::vector<std::string>& elements, const json& j, const std::string& path) {
  const std::string name = string_value(j, path);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == name) return i;
  }
  throw SchemaError(path + ": unknown element \"" + name + "\"");
}

}  // namespace

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(origin + ": invalid JSON at " + line_excerpt(text, e.byte > 0 ? e.byte - 1 : 0));
  }
}

json read_json_file(const std::filesystem::path& path) { return parse_json(read_bytes(path), path.string()); }

std::string file_digest(const std::filesystem::path& path) {
  const std::string bytes = read_bytes(path);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 failed for " + path.string());
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < length; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

ordered_json input_entry(const std::filesystem::path& path) {
  ordered_json out;
  out["path"] = path.string();
  out["sha256"] = file_digest(path);
  return out;
}

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw SchemaError((path.empty() ? "/" : path) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError((path.empty() ? "/" : path) + ": missing field \"" + key + "\"");
  return *it;
}

const json& array_field(const json& j, const char* key, const std::string& path) {
  const json& out = field(j, key, path);
  if (!out.is_array()) throw SchemaError(path + "/" + key + ": expected an array");
  return out;
}

std::string string_value(const json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path + ": expected a string");
  return j.get<std::string>();
}

ExtRat ext_rat_value(const json& j, const std::string& path) {
  if (j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0)) {
    return ExtRat(static_cast<long>(j.get<long long>()));
  }
  if (!j.is_string()) throw SchemaError(path + ": expected a rational string");
  try {
    return ExtRat::parse(j.get<std::string>());
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------

QuantaleTables quantale_from_json(const json& j) {
  QuantaleTables t;
  const auto& elements = array_field(j, "elements", "");
  for (std::size_t i = 0; i < elements.size(); ++i) {
    t.elements.push_back(string_value(elements[i], "/elements/" + std::to_string(i)));
  }
  const std::size_t n = t.elements.size();
  {
    std::set<std::string> seen;
    for (const auto& e : t.elements) {
      if (!seen.insert(e).second) throw SchemaError("/elements: duplicate element \"" + e + "\"");
    }
  }
  auto square = [&](const char* key) -> const json& {
    const json& m = array_field(j, key, "");
    if (m.size() != n) throw SchemaError(std::string("/") + key + ": expected " + std::to_string(n) + " rows");
    for (std::size_t i = 0; i < n; ++i) {
      if (!m[i].is_array() || m[i].size() != n) {
        throw SchemaError(std::string("/") + key + "/" + std::to_string(i) + ": expected " + std::to_string(n) +
                          " entries");
      }
    }
    return m;
  };
  const json& leq = square("leq");
  const json& tensor = square("tensor");
  t.leq.assign(n, std::vector<bool>(n));
  t.tensor.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::string cell = "/" + std::to_string(a) + "/" + std::to_string(b);
      if (!leq[a][b].is_boolean()) throw SchemaError("/leq" + cell + ": expected a boolean");
      t.leq[a][b] = leq[a][b].get<bool>();
      t.tensor[a][b] = element_index(t.elements, tensor[a][b], "/tensor" + cell);
    }
  }
  t.unit = element_index(t.elements, field(j, "unit", ""), "/unit");
  const json& inv = array_field(j, "involution", "");
  if (inv.size() != n) throw SchemaError("/involution: expected " + std::to_string(n) + " entries");
  for (std::size_t a = 0; a < n; ++a) {
    t.involution.push_back(element_index(t.elements, inv[a], "/involution/" + std::to_string(a)));
  }
  check_table_shapes(t);
  return t;
}

ordered_json quantale_to_json(const QuantaleTables& t) {
  ordered_json out;
  out["elements"] = t.elements;
  out["leq"] = ordered_json::array();
  out["tensor"] = ordered_json::array();
  for (std::size_t a = 0; a < t.elements.size(); ++a) {
    ordered_json leq_row = ordered_json::array(), tensor_row = ordered_json::array();
    for (std::size_t b = 0; b < t.elements.size(); ++b) {
      leq_row.push_back(static_cast<bool>(t.leq[a][b]));
      tensor_row.push_back(t.elements[t.tensor[a][b]]);
    }
    out["leq"].push_back(std::move(leq_row));
    out["tensor"].push_back(std::move(tensor_row));
  }
  out["unit"] = t.elements[t.unit];
  out["involution"] = ordered_json::array();
  for (auto i : t.involution) out["involution"].push_back(t.elements[i]);
  return out;
}

QuantaleTables load_quantale(const std::filesystem::path& path) {
  try {
    return quantale_from_json(read_json_file(path));
  } catch (const SchemaError& e) {
    const std::string what = e.what();
    if (what.rfind(path.string(), 0) == 0) throw;
    throw SchemaError(path.string() + ": " + what);
  }
}

ordered_json law_report_to_json(const LawReport& report) {
  ordered_json out = ordered_json::array();
  for (const auto& r : report.results) {
    ordered_json entry;
    entry["law"] = r.law;
    entry["passed"] = r.passed;
    if (!r.witness.empty()) entry["witness"] = r.witness;
    if (!r.note.empty()) entry["note"] = r.note;
    out.push_back(std::move(entry));
  }
  return out;
}

// ---------------------------------------------------------------------------

Functor functor_from_json(const json& j, const std::vector<std::string>& domain,
                          const std::vector<std::string>& codomain) {
  const json& map = field(j, "map", "");
  if (!map.is_object()) throw SchemaError("/map: expected an object");
  Functor f;
  for (const auto& name : domain) {
    auto it = map.find(name);
    if (it == map.end()) throw SchemaError("/map: missing \"" + name + "\"");
    const std::string target = string_value(*it, "/map/" + name);
    auto pos = std::find(codomain.begin(), codomain.end(), target);
    if (pos == codomain.end()) throw SchemaError("/map/" + name + ": unknown object \"" + target + "\"");
    f.map.push_back(static_cast<std::size_t>(pos - codomain.begin()));
  }
  if (map.size() != domain.size()) throw SchemaError("/map: entries outside the domain");
  return f;
}

ordered_json functor_to_json(const Functor& f, const std::vector<std::string>& domain,
                             const std::vector<std::string>& codomain) {
  ordered_json out;
  out["map"] = ordered_json::object();
  for (std::size_t x = 0; x < domain.size(); ++x) out["map"][domain[x]] = codomain[f(x)];
  return out;
}

ParMetSpace space_from_json(const json& j) {
  const json& points = array_field(j, "points", "");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < points.size(); ++i) names.push_back(string_value(points[i], "/points/" + std::to_string(i)));
  const json& alpha = array_field(j, "alpha", "");
  const std::size_t n = names.size();
  if (alpha.size() != n) throw SchemaError("/alpha: expected " + std::to_string(n) + " rows");
  std::vector<ExtRat> values;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row = "/alpha/" + std::to_string(i);
    if (!alpha[i].is_array() || alpha[i].size() != n) {
      throw SchemaError(row + ": expected " + std::to_string(n) + " entries");
    }
    for (std::size_t k = 0; k < n; ++k) values.push_back(ext_rat_value(alpha[i][k], row + "/" + std::to_string(k)));
  }
  return make_space(std::move(names), std::move(values));
}

ordered_json space_to_json(const ParMetSpace& m) {
  ordered_json out;
  out["points"] = m.points;
  out["alpha"] = ordered_json::array();
  for (std::size_t x = 0; x < m.size(); ++x) {
    ordered_json row = ordered_json::array();
    for (std::size_t y = 0; y < m.size(); ++y) row.push_back(m(x, y).str());
    out["alpha"].push_back(std::move(row));
  }
  return out;
}

RadiusFunction radius_from_json(const json& j, const ParMetSpace& m) {
  RadiusFunction out{ext_rat_value(field(j, "r", ""), "/r"), {}};
  const json& values = field(j, "values", "");
  if (!values.is_object()) throw SchemaError("/values: expected an object");
  for (const auto& p : m.points) {
    auto it = values.find(p);
    if (it == values.end()) throw SchemaError("/values: missing \"" + p + "\"");
    out.values.push_back(ext_rat_value(*it, "/values/" + p));
  }
  if (values.size() != m.size()) throw SchemaError("/values: entries for unknown points");
  return out;
}

ordered_json radius_to_json(const RadiusFunction& mu, const ParMetSpace& m) {
  ordered_json out;
  out["r"] = mu.r.str();
  out["values"] = ordered_json::object();
  for (std::size_t x = 0; x < m.size(); ++x) out["values"][m.points[x]] = mu.values[x].str();
  return out;
}

Family family_from_json(const json& j, const ParMetSpace& m) {
  Family out{ext_rat_value(field(j, "r", ""), "/r"), {}};
  const json& members = array_field(j, "family", "");
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::string path = "/family/" + std::to_string(i);
    const std::string point = string_value(field(members[i], "point", path), path + "/point");
    auto pos = std::find(m.points.begin(), m.points.end(), point);
    if (pos == m.points.end()) throw SchemaError(path + "/point: unknown point \"" + point + "\"");
    out.members.push_back({static_cast<std::size_t>(pos - m.points.begin()),
                           ext_rat_value(field(members[i], "radius", path), path + "/radius")});
  }
  return out;
}

std::vector<std::size_t> point_map_from_json(const json& j, const ParMetSpace& from, const ParMetSpace& to) {
  return functor_from_json(j, from.points, to.points).map;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace enritch::io
