#pragma once

#include <string>
#include <vector>

#include "mvlaw/algebra.hpp"
#include "mvlaw/profile.hpp"
#include "mvlaw/vocabulary.hpp"

namespace mvlaw {

/// An atomic formula over abstract variables 0..k-1 (identity atoms are
/// excluded throughout: distinct description variables denote distinct
/// elements, and crisp identity is resolved syntactically).
struct AtomRef {
  std::string rel;
  std::vector<int> tuple;
};

/// All atoms over k variables in canonical order: relations in vocabulary
/// order, tuples lexicographic.
std::vector<AtomRef> atoms_over(const Vocabulary& vocab, int k);

/// Number of atoms over k variables.
std::size_t atom_count(const Vocabulary& vocab, int k);

/// Canonical index of rel(tuple) within atoms_over(vocab, k).
std::size_t atom_index(const Vocabulary& vocab, int k, const std::string& rel,
                       std::span<const int> tuple);

/// The frontier F_{k+1}: atoms over k+1 variables that truly contain the new
/// variable k, in canonical order.
std::vector<AtomRef> frontier_atoms(const Vocabulary& vocab, int k);

/// A complete description: one carrier value per atom over k distinct
/// variables, in canonical order.
struct CompleteDescription {
  int k = 0;
  std::vector<Elem> values;

  Elem value_of(const Vocabulary& vocab, const std::string& rel,
                std::span<const int> tuple) const {
    return values[atom_index(vocab, k, rel, tuple)];
  }
};

/// Streams every expansion of `base` by one variable that is consistent with
/// the profile (graph symmetry ties paired cells and pins the new diagonal
/// cell to bottom; support restrictions filter values). Lexicographic order,
/// constant memory per item.
class ExpansionEnumerator {
 public:
  ExpansionEnumerator(const CompleteDescription& base, const Vocabulary& vocab,
                      const LatticeAlgebra& algebra, const ConstraintProfile& profile);

  /// False when the profile admits no expansion at all (contradictory
  /// profile) or the stream is exhausted.
  bool next(CompleteDescription& out);

  /// Total number of expansions the stream will produce.
  std::uint64_t count() const;

 private:
  const CompleteDescription& base_;
  const Vocabulary& vocab_;
  std::vector<std::size_t> fixed_from_;     // new index -> old atom index (or npos)
  std::vector<int> slot_of_;                // new index -> free slot (or -1)
  std::vector<std::vector<Elem>> allowed_;  // per free slot
  std::vector<std::size_t> counter_;        // mixed-radix state
  bool exhausted_ = false;
  bool first_ = true;
};

}  // namespace mvlaw
