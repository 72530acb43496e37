#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mvlaw/limits.hpp"
#include "mvlaw/rational.hpp"

namespace mvlaw {

/// Index of an element in an algebra's carrier.
using Elem = int;

/// A total operation on the carrier, stored as a dense row-major table of
/// size |A|^arity.
struct Operation {
  int arity = 0;
  std::vector<Elem> table;
};

/// Raw, unvalidated description of a lattice algebra. Fill one of these
/// (or load it from JSON) and pass it to validate_algebra().
struct AlgebraSpec {
  std::vector<std::string> carrier;
  std::map<std::string, Operation> ops;  // must contain "and" and "or"
  std::optional<std::string> bottom, top;
  std::map<std::string, Rational> values;  // optional per-label annotation
};

/// A finite algebra with a lattice reduct. Immutable once built; all member
/// functions are const and safe for unrestricted concurrent use.
///
/// Conventional operation names: "and" (meet), "or" (join), "not", "imp",
/// "oplus", "odot". Only "and"/"or" are required.
class LatticeAlgebra {
 public:
  int size() const { return static_cast<int>(carrier_.size()); }
  const std::vector<std::string>& carrier() const { return carrier_; }
  const std::string& label(Elem a) const { return carrier_.at(a); }
  Elem elem(const std::string& label) const;            // throws input_error
  std::optional<Elem> find_elem(const std::string& label) const;

  Elem meet(Elem a, Elem b) const { return ops_.at("and").table[a * size() + b]; }
  Elem join(Elem a, Elem b) const { return ops_.at("or").table[a * size() + b]; }
  bool leq(Elem a, Elem b) const { return meet(a, b) == a; }

  bool has_op(const std::string& name) const { return ops_.count(name) != 0; }
  const Operation& op(const std::string& name) const;   // throws input_error
  Elem apply(const std::string& name, std::span<const Elem> args) const;
  Elem apply1(const std::string& name, Elem a) const;
  Elem apply2(const std::string& name, Elem a, Elem b) const;
  const std::map<std::string, Operation>& ops() const { return ops_; }

  std::optional<Elem> bottom() const { return bottom_; }
  std::optional<Elem> top() const { return top_; }
  Elem require_bottom() const;
  Elem require_top() const;

  std::optional<Rational> value(Elem a) const { return values_.at(a); }
  /// Label of a, rendered as an exact rational when annotated.
  std::string display(Elem a) const;

  friend class AlgebraBuilder;

 private:
  LatticeAlgebra() = default;
  std::vector<std::string> carrier_;
  std::map<std::string, Operation> ops_;
  std::optional<Elem> bottom_, top_;
  std::vector<std::optional<Rational>> values_;
};

using AlgebraPtr = std::shared_ptr<const LatticeAlgebra>;

/// Checks every lattice axiom by exhaustive loops and returns one message per
/// violation, each with a witnessing pair or triple. Empty result means valid.
std::vector<std::string> algebra_diagnostics(const AlgebraSpec& spec);

/// Builds a validated algebra or throws input_error listing every violation.
AlgebraPtr validate_algebra(const AlgebraSpec& spec);

/// The two-element Boolean algebra B_2.
AlgebraPtr make_boolean();

/// The MV-chain of N+1 elements {0, 1/N, ..., 1} with min/max lattice,
/// a->b = min(1, 1-a+b), !a = 1-a, and the derived oplus/odot. N >= 1.
AlgebraPtr make_mv_chain(int n);

/// Chain with Goedel implication (a->b = 1 if a<=b else b) and negation
/// (!a = a->0) over the given ascending labels (at least 2).
AlgebraPtr make_godel_chain(const std::vector<std::string>& labels);

/// Goedel chain of n+1 elements labelled 0 < g1 < ... < g{n-1} < 1.
AlgebraPtr make_godel_chain(int n);

/// Componentwise product; requires identical signatures.
AlgebraPtr product(const LatticeAlgebra& a, const LatticeAlgebra& b);

/// Same carrier, signature restricted to `keep` (the lattice reduct "and"/"or"
/// is always retained). Unknown names throw.
AlgebraPtr reduct(const LatticeAlgebra& a, const std::vector<std::string>& keep);

/// Resolves built-in algebra names: "B2", "L3", "L4", ..., "G3", ...,
/// "prod(G3,L4)" (nestable).
AlgebraPtr algebra_by_name(const std::string& name);

}  // namespace mvlaw
