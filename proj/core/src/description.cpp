#include "mvlaw/description.hpp"

#include <limits>

#include "mvlaw/error.hpp"

namespace mvlaw {
namespace {

constexpr std::size_t kNoFixed = std::numeric_limits<std::size_t>::max();

std::size_t pow_sz(int base, int exp) {
  std::size_t s = 1;
  for (int i = 0; i < exp; ++i) s *= static_cast<std::size_t>(base);
  return s;
}

bool uses_var(const std::vector<int>& tuple, int v) {
  for (int i : tuple)
    if (i == v) return true;
  return false;
}

}  // namespace

std::size_t atom_count(const Vocabulary& vocab, int k) {
  std::size_t s = 0;
  for (const auto& rel : vocab.relations) s += pow_sz(k, rel.arity);
  return s;
}

std::vector<AtomRef> atoms_over(const Vocabulary& vocab, int k) {
  std::vector<AtomRef> out;
  out.reserve(atom_count(vocab, k));
  for (const auto& rel : vocab.relations) {
    if (k == 0) continue;
    std::vector<int> tuple(rel.arity, 0);
    for (;;) {
      out.push_back({rel.name, tuple});
      int i = rel.arity - 1;
      while (i >= 0 && ++tuple[i] == k) tuple[i--] = 0;
      if (i < 0) break;
    }
  }
  return out;
}

std::size_t atom_index(const Vocabulary& vocab, int k, const std::string& rel,
                       std::span<const int> tuple) {
  std::size_t offset = 0;
  for (const auto& r : vocab.relations) {
    if (r.name == rel) {
      if (static_cast<int>(tuple.size()) != r.arity)
        throw internal_error("atom_index: arity mismatch for " + rel);
      std::size_t idx = 0;
      for (int v : tuple) {
        if (v < 0 || v >= k) throw internal_error("atom_index: variable out of range");
        idx = idx * static_cast<std::size_t>(k) + static_cast<std::size_t>(v);
      }
      return offset + idx;
    }
    offset += pow_sz(k, r.arity);
  }
  throw internal_error("atom_index: unknown relation " + rel);
}

std::vector<AtomRef> frontier_atoms(const Vocabulary& vocab, int k) {
  std::vector<AtomRef> out;
  for (const auto& atom : atoms_over(vocab, k + 1))
    if (uses_var(atom.tuple, k)) out.push_back(atom);
  return out;
}

ExpansionEnumerator::ExpansionEnumerator(const CompleteDescription& base,
                                         const Vocabulary& vocab, const LatticeAlgebra& algebra,
                                         const ConstraintProfile& profile)
    : base_(base), vocab_(vocab) {
  const int k = base.k;
  auto atoms = atoms_over(vocab, k + 1);
  fixed_from_.assign(atoms.size(), kNoFixed);
  slot_of_.assign(atoms.size(), -1);

  auto support_of = [&](const std::string& rel) {
    std::vector<Elem> s;
    for (Elem e = 0; e < algebra.size(); ++e)
      if (profile.allows(rel, e)) s.push_back(e);
    return s;
  };

  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const AtomRef& atom = atoms[i];
    if (!uses_var(atom.tuple, k)) {
      fixed_from_[i] = atom_index(vocab, k, atom.rel, atom.tuple);
      continue;
    }
    int arity = static_cast<int>(atom.tuple.size());
    if (profile.constrains_as_graph(arity)) {
      if (atom.tuple[0] == k && atom.tuple[1] == k) {
        // new diagonal cell, pinned to bottom
        std::vector<Elem> allowed;
        Elem bot = algebra.require_bottom();
        if (profile.allows(atom.rel, bot)) allowed.push_back(bot);
        slot_of_[i] = static_cast<int>(allowed_.size());
        allowed_.push_back(std::move(allowed));
        continue;
      }
      if (atom.tuple[0] == k && atom.tuple[1] < k) {
        // mirror of the earlier (j, k) cell
        std::size_t mirror =
            atom_index(vocab, k + 1, atom.rel, std::vector<int>{atom.tuple[1], k});
        slot_of_[i] = slot_of_[mirror];
        continue;
      }
    }
    slot_of_[i] = static_cast<int>(allowed_.size());
    allowed_.push_back(support_of(atom.rel));
  }
  counter_.assign(allowed_.size(), 0);
  for (const auto& a : allowed_)
    if (a.empty()) exhausted_ = true;
}

std::uint64_t ExpansionEnumerator::count() const {
  std::uint64_t c = 1;
  for (const auto& a : allowed_) c *= static_cast<std::uint64_t>(a.size());
  return c;
}

bool ExpansionEnumerator::next(CompleteDescription& out) {
  if (exhausted_) return false;
  if (!first_) {
    // mixed-radix increment, most significant slot first for lexicographic order
    int i = static_cast<int>(counter_.size()) - 1;
    while (i >= 0 && ++counter_[i] == allowed_[i].size()) counter_[i--] = 0;
    if (i < 0) {
      exhausted_ = true;
      return false;
    }
  }
  first_ = false;
  out.k = base_.k + 1;
  out.values.resize(fixed_from_.size());
  for (std::size_t i = 0; i < fixed_from_.size(); ++i)
    out.values[i] = fixed_from_[i] != kNoFixed ? base_.values[fixed_from_[i]]
                                               : allowed_[slot_of_[i]][counter_[slot_of_[i]]];
  return true;
}

}  // namespace mvlaw
