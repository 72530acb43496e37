#pragma once

#include <string>
#include <vector>

#include "mvlaw/error.hpp"

namespace mvlaw {

struct RelationSymbol {
  std::string name;
  int arity = 1;
};

/// Finite relational vocabulary, optionally with a crisp identity symbol `~`.
struct Vocabulary {
  std::vector<RelationSymbol> relations;
  bool has_crisp_identity = false;

  const RelationSymbol* find(const std::string& name) const {
    for (const auto& r : relations)
      if (r.name == name) return &r;
    return nullptr;
  }
  const RelationSymbol& at(const std::string& name) const {
    if (const auto* r = find(name)) return *r;
    throw input_error("unknown relation symbol: " + name);
  }
  int max_arity() const {
    int m = 0;
    for (const auto& r : relations) m = std::max(m, r.arity);
    return m;
  }
  void validate() const {
    for (std::size_t i = 0; i < relations.size(); ++i) {
      if (relations[i].arity < 1)
        throw input_error("relation " + relations[i].name + " has non-positive arity");
      for (std::size_t j = i + 1; j < relations.size(); ++j)
        if (relations[i].name == relations[j].name)
          throw input_error("duplicate relation name: " + relations[i].name);
    }
  }
};

}  // namespace mvlaw
