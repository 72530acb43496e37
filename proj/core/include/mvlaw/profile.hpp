#pragma once

#include <map>
#include <string>
#include <vector>

#include "mvlaw/algebra.hpp"
#include "mvlaw/formula.hpp"

namespace mvlaw {

/// Restrictions on the class of structures under study. The two named
/// profiles come with dedicated handling throughout (sampling, expansion
/// enumeration, partition axioms); custom parametric sentence lists are
/// carried along but only semi-supported (the deciders refuse them).
enum class ProfileKind { None, CrispIdentity, Graph, Custom };

struct ConstraintProfile {
  ProfileKind kind = ProfileKind::None;

  /// Per-relation allowed carrier elements (support restriction). A missing
  /// entry means the full carrier is allowed.
  std::map<std::string, std::vector<Elem>> support;

  /// Kind::Custom only: parametric sentences defining the class.
  std::vector<FormulaPtr> custom_sentences;

  static ConstraintProfile none() { return {}; }
  static ConstraintProfile crisp_identity() {
    ConstraintProfile p;
    p.kind = ProfileKind::CrispIdentity;
    return p;
  }
  static ConstraintProfile graph() {
    ConstraintProfile p;
    p.kind = ProfileKind::Graph;
    return p;
  }

  bool allows(const std::string& rel, Elem a) const {
    auto it = support.find(rel);
    if (it == support.end()) return true;
    for (Elem b : it->second)
      if (b == a) return true;
    return false;
  }

  /// The graph profile constrains every binary relation: symmetric tables
  /// with the diagonal pinned to bottom.
  bool constrains_as_graph(int arity) const { return kind == ProfileKind::Graph && arity == 2; }
};

/// Parses "none", "crisp-id", "graph"; throws input_error otherwise.
ConstraintProfile profile_by_name(const std::string& name);

}  // namespace mvlaw
