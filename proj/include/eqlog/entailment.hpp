#ifndef EQLOG_ENTAILMENT_HPP
#define EQLOG_ENTAILMENT_HPP

#include <optional>

#include "eqlog/denotation.hpp"
#include "eqlog/formula.hpp"

namespace eqlog {

enum class Entailment {
  G3,          // ⟦a⟧ ⊆ ⟦b⟧
  Classical,   // ⟦a⟧_c ⊆ ⟦b⟧_c
  Skeptical,   // ⟦a⟧_e ⊆ ⟦b⟧_c
  Credulous,   // ⟦a⟧_e ∩ ⟦b⟧_c ≠ ∅
  Weak,        // ⟦a⟧_e ⊆ ⟦b⟧_e
  Strong,      // weak entailment under every conjunctive context
  Equilibrium  // Pearce's |~: skeptical when a is non-trivial, else classical
};

enum class Equivalence { G3, Classical, Weak, Strong };

/// A refutation of a strong entailment a |=s b: a context formula and a
/// classical model that is an equilibrium model of a & context but not of
/// b & context. Verified on construction.
struct Witness {
  enum class Cause {
    ClassicalGap,  // a classical model of a is no classical model of b
    ContextGap     // some u below ⟦a⟧_c models b but not a
  };
  FormulaPtr context;
  Interpretation model;
  Cause cause;
};

bool entails(const FormulaPtr& a, const FormulaPtr& b, Entailment kind, const Signature& sig);

/// Decides strong entailment via the two-condition characterisation:
/// (i) classical entailment and (ii) ⟦a⟧_c↓ ∩ ⟦b⟧ ⊆ ⟦a⟧.
bool entails_strong(const FormulaPtr& a, const FormulaPtr& b, const Signature& sig);

/// The conjunction of the atoms true in classical v, in signature order;
/// T when none are.
FormulaPtr gamma_of(const Interpretation& v, const Signature& sig);

/// nullopt iff the strong entailment holds; otherwise a verified Witness
/// built from the least-index counterexample interpretation.
std::optional<Witness> strong_entailment_witness(const FormulaPtr& a, const FormulaPtr& b,
                                                 const Signature& sig);

bool equivalent(const FormulaPtr& a, const FormulaPtr& b, Equivalence kind, const Signature& sig);

/// Sufficient condition for strong entailment: a classically entails b and
/// b entails a in G3.
bool check_sufficient_condition(const FormulaPtr& a, const FormulaPtr& b, const Signature& sig);

}  // namespace eqlog

#endif
