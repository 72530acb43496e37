#include "mvlaw/json_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mvlaw/error.hpp"

namespace mvlaw {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw input_error(std::string("malformed JSON: ") + e.what());
  }
}

Operation op_from_json(const json& j, int carrier_size, const std::string& name) {
  Operation op;
  if (!j.is_array()) throw input_error("operation " + name + " must be an array");
  if (!j.empty() && j[0].is_array()) {
    op.arity = 2;
    for (const auto& row : j) {
      if (!row.is_array() || static_cast<int>(row.size()) != carrier_size)
        throw input_error("operation " + name + " has a malformed row");
      for (const auto& cell : row) op.table.push_back(cell.get<Elem>());
    }
    if (static_cast<int>(j.size()) != carrier_size)
      throw input_error("operation " + name + " has the wrong number of rows");
  } else {
    op.arity = 1;
    for (const auto& cell : j) op.table.push_back(cell.get<Elem>());
    if (static_cast<int>(j.size()) != carrier_size)
      throw input_error("operation " + name + " has the wrong length");
  }
  return op;
}

bool looks_builtin(const std::string& s) {
  if (s == "B2") return true;
  if (s.size() >= 2 && (s[0] == 'L' || s[0] == 'G')) {
    for (std::size_t i = 1; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  }
  return s.rfind("prod(", 0) == 0;
}

}  // namespace

AlgebraPtr algebra_from_json_text(const std::string& text) {
  json j = parse_json(text);
  AlgebraSpec spec;
  if (!j.contains("carrier") || !j["carrier"].is_array())
    throw input_error("algebra file needs a carrier array");
  for (const auto& l : j["carrier"]) spec.carrier.push_back(l.get<std::string>());
  if (!j.contains("ops") || !j["ops"].is_object())
    throw input_error("algebra file needs an ops object");
  for (const auto& [name, table] : j["ops"].items())
    spec.ops[name] = op_from_json(table, static_cast<int>(spec.carrier.size()), name);
  if (j.contains("bottom")) spec.bottom = j["bottom"].get<std::string>();
  if (j.contains("top")) spec.top = j["top"].get<std::string>();
  if (j.contains("values"))
    for (const auto& [label, v] : j["values"].items())
      spec.values[label] = Rational::parse(v.get<std::string>());
  return validate_algebra(spec);
}

std::string algebra_to_json_text(const LatticeAlgebra& a) {
  json j;
  j["carrier"] = a.carrier();
  for (const auto& [name, op] : a.ops()) {
    if (op.arity == 1) {
      j["ops"][name] = op.table;
    } else {
      json rows = json::array();
      for (int r = 0; r < a.size(); ++r) {
        json row = json::array();
        for (int c = 0; c < a.size(); ++c) row.push_back(op.table[r * a.size() + c]);
        rows.push_back(row);
      }
      j["ops"][name] = rows;
    }
  }
  if (a.bottom()) j["bottom"] = a.label(*a.bottom());
  if (a.top()) j["top"] = a.label(*a.top());
  json values = json::object();
  for (Elem e = 0; e < a.size(); ++e)
    if (auto v = a.value(e)) values[a.label(e)] = v->str();
  if (!values.empty()) j["values"] = values;
  return j.dump(2);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AlgebraPtr load_algebra(const std::string& name_or_path) {
  if (looks_builtin(name_or_path)) return algebra_by_name(name_or_path);
  return algebra_from_json_text(read_file(name_or_path));
}

WeightedStructure structure_from_json_text(const std::string& text,
                                           const ConstraintProfile& profile) {
  json j = parse_json(text);
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw input_error("structure file needs an integer n");
  int n = j["n"].get<int>();
  if (!j.contains("algebra")) throw input_error("structure file needs an algebra");
  AlgebraPtr a = load_algebra(j["algebra"].get<std::string>());
  if (!j.contains("relations") || !j["relations"].is_object())
    throw input_error("structure file needs a relations object");

  Vocabulary vocab;
  std::map<std::string, std::vector<Elem>> tables;
  for (const auto& [rel, cells] : j["relations"].items()) {
    if (!cells.is_object() || cells.empty())
      throw input_error("relation " + rel + " needs a nonempty cell map");
    int arity = -1;
    std::map<std::size_t, Elem> entries;
    for (const auto& [key, value] : cells.items()) {
      // keys look like "(1,2)" with 1-based indices; "(1)" or "1" for unary
      std::vector<int> tuple;
      std::string body = key;
      if (!body.empty() && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
      std::stringstream ss(body);
      std::string part;
      while (std::getline(ss, part, ',')) {
        try {
          tuple.push_back(std::stoi(part));
        } catch (const std::exception&) {
          throw input_error("bad cell key " + key + " for relation " + rel);
        }
      }
      if (tuple.empty()) throw input_error("bad cell key " + key + " for relation " + rel);
      if (arity < 0) arity = static_cast<int>(tuple.size());
      if (arity != static_cast<int>(tuple.size()))
        throw input_error("inconsistent arity in cells of relation " + rel);
      std::size_t idx = 0;
      for (int i : tuple) {
        if (i < 1 || i > n)
          throw input_error("cell key " + key + " is outside the domain 1.." + std::to_string(n));
        idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(i - 1);
      }
      entries[idx] = a->elem(value.get<std::string>());
    }
    std::size_t want = table_size(n, arity);
    if (entries.size() != want)
      throw input_error("relation " + rel + " has " + std::to_string(entries.size()) +
                        " cells, expected " + std::to_string(want) + " (totality required)");
    std::vector<Elem> t(want);
    for (const auto& [idx, v] : entries) t[idx] = v;
    vocab.relations.push_back({rel, arity});
    tables[rel] = std::move(t);
  }
  if (profile.kind == ProfileKind::CrispIdentity) vocab.has_crisp_identity = true;
  return make_structure(n, std::move(a), std::move(vocab), std::move(tables), profile);
}

std::string structure_to_json_text(const WeightedStructure& m, const std::string& algebra_name) {
  json j;
  j["n"] = m.n;
  j["algebra"] = algebra_name;
  json rels = json::object();
  for (const auto& rel : m.vocab.relations) {
    const auto& table = m.tables.at(rel.name);
    json cells = json::object();
    std::vector<int> tuple(rel.arity, 0);
    for (std::size_t c = 0; c < table.size(); ++c) {
      std::size_t rest = c;
      for (int i = rel.arity - 1; i >= 0; --i) {
        tuple[i] = static_cast<int>(rest % m.n) + 1;
        rest /= m.n;
      }
      std::string key = "(";
      for (int i = 0; i < rel.arity; ++i) key += (i ? "," : "") + std::to_string(tuple[i]);
      key += ")";
      cells[key] = m.algebra->label(table[c]);
    }
    rels[rel.name] = cells;
  }
  j["relations"] = rels;
  return j.dump(2);
}

}  // namespace mvlaw
