#ifndef EQLOG_EXPRESSIVENESS_HPP
#define EQLOG_EXPRESSIVENESS_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "eqlog/denotation.hpp"
#include "eqlog/formula.hpp"
#include "eqlog/intset.hpp"

namespace eqlog {

/// A subset of the connectives {_|_, &, |, ->}. Atoms are always available.
struct Fragment {
  bool has_bot = false;
  bool has_and = false;
  bool has_or = false;
  bool has_implies = false;

  /// Parses a comma-separated list of "bot", "and", "or", "imp".
  static Fragment from_csv(std::string_view csv);
  std::string str() const;
};

struct ClosureEntry {
  InterpSet set;       // total-closed
  FormulaPtr witness;  // fragment formula with denote(witness) == set
};

struct ClosureFamily {
  std::vector<ClosureEntry> entries;
  const ClosureEntry* find(const InterpSet& s) const;
};

/// The least family containing the atom denotations (and ∅ when bot is in
/// the fragment), closed under the semantic images of the fragment's
/// connectives. Witnesses are assigned deterministically in BFS discovery
/// order. Signatures are capped at 3 atoms.
ClosureFamily fragment_closure(const Signature& sig, const Fragment& frag);

struct Definability {
  bool definable = false;
  FormulaPtr witness;  // set iff definable
};

/// Decides whether some fragment formula has the same denotation as f,
/// by closure search (stopping as soon as the target set is discovered).
/// A returned witness is re-verified against denote(f).
Definability is_definable(const FormulaPtr& f, const Fragment& frag, const Signature& sig);

}  // namespace eqlog

#endif
