#include "mvlaw/structure.hpp"

#include "mvlaw/error.hpp"

namespace mvlaw {

ConstraintProfile profile_by_name(const std::string& name) {
  if (name == "none") return ConstraintProfile::none();
  if (name == "crisp-id") return ConstraintProfile::crisp_identity();
  if (name == "graph") return ConstraintProfile::graph();
  throw input_error("unknown profile: " + name + " (expected none, crisp-id, or graph)");
}

std::size_t table_size(int n, int arity) {
  std::size_t s = 1;
  for (int i = 0; i < arity; ++i) s *= static_cast<std::size_t>(n);
  return s;
}

std::size_t WeightedStructure::cell_index(std::span<const int> tuple) const {
  std::size_t idx = 0;
  for (int i : tuple) {
    if (i < 0 || i >= n) throw input_error("domain index out of range");
    idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(i);
  }
  return idx;
}

Elem WeightedStructure::get(const std::string& rel, std::span<const int> tuple) const {
  auto it = tables.find(rel);
  if (it == tables.end()) throw input_error("structure has no relation " + rel);
  if (static_cast<int>(tuple.size()) != vocab.at(rel).arity)
    throw input_error("tuple arity mismatch for relation " + rel);
  return it->second[cell_index(tuple)];
}

std::vector<std::string> check_constraints(const WeightedStructure& m,
                                           const ConstraintProfile& profile) {
  std::vector<std::string> out;
  const LatticeAlgebra& a = *m.algebra;
  for (const auto& rel : m.vocab.relations) {
    const auto& table = m.tables.at(rel.name);
    // support restriction
    for (std::size_t c = 0; c < table.size(); ++c) {
      if (!profile.allows(rel.name, table[c]))
        out.push_back(rel.name + ": value " + a.label(table[c]) + " at cell " +
                      std::to_string(c) + " is outside the allowed support");
    }
    if (profile.constrains_as_graph(rel.arity)) {
      Elem bot = a.require_bottom();
      for (int i = 0; i < m.n; ++i) {
        if (table[static_cast<std::size_t>(i) * m.n + i] != bot)
          out.push_back(rel.name + ": diagonal cell (" + std::to_string(i + 1) + "," +
                        std::to_string(i + 1) + ") is not bottom");
        for (int j = i + 1; j < m.n; ++j)
          if (table[static_cast<std::size_t>(i) * m.n + j] !=
              table[static_cast<std::size_t>(j) * m.n + i])
            out.push_back(rel.name + ": asymmetric at cell (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ")");
      }
    }
  }
  return out;
}

WeightedStructure make_structure(int n, AlgebraPtr algebra, Vocabulary vocab,
                                 std::map<std::string, std::vector<Elem>> tables,
                                 ConstraintProfile profile) {
  if (n < 1) throw input_error("domain must be nonempty");
  if (!algebra) throw internal_error("make_structure: null algebra");
  vocab.validate();
  if (profile.kind == ProfileKind::CrispIdentity) vocab.has_crisp_identity = true;
  WeightedStructure m;
  m.n = n;
  m.algebra = std::move(algebra);
  m.vocab = std::move(vocab);
  m.profile = profile;
  for (const auto& rel : m.vocab.relations) {
    auto it = tables.find(rel.name);
    if (it == tables.end()) throw input_error("missing table for relation " + rel.name);
    std::size_t want = table_size(n, rel.arity);
    if (it->second.size() != want)
      throw input_error("table for " + rel.name + " has " + std::to_string(it->second.size()) +
                        " cells, expected " + std::to_string(want));
    for (Elem v : it->second)
      if (v < 0 || v >= m.algebra->size())
        throw input_error("table for " + rel.name + " contains an out-of-carrier value");
    m.tables[rel.name] = std::move(it->second);
  }
  for (const auto& [name, _] : tables)
    if (!m.vocab.find(name)) throw input_error("table for unknown relation " + name);
  if (auto bad = check_constraints(m, profile); !bad.empty())
    throw input_error("profile violation: " + bad.front());
  return m;
}

}  // namespace mvlaw
