#include "eqlog/entailment.hpp"

#include <stdexcept>

namespace eqlog {

bool entails(const FormulaPtr& a, const FormulaPtr& b, Entailment kind, const Signature& sig) {
  switch (kind) {
    case Entailment::G3:
      return denote(*a, sig).is_subset_of(denote(*b, sig));
    case Entailment::Classical:
      return denote(*a, sig).classical().is_subset_of(denote(*b, sig).classical());
    case Entailment::Skeptical:
      return equilibrium_models(*a, sig).is_subset_of(denote(*b, sig).classical());
    case Entailment::Credulous:
      return !(equilibrium_models(*a, sig) & denote(*b, sig).classical()).is_empty();
    case Entailment::Weak:
      return equilibrium_models(*a, sig).is_subset_of(equilibrium_models(*b, sig));
    case Entailment::Strong:
      return entails_strong(a, b, sig);
    case Entailment::Equilibrium: {
      InterpSet da = denote(*a, sig);
      bool nontrivial = da != InterpSet::full(sig) && !equilibrium_of(da).is_empty();
      return entails(a, b, nontrivial ? Entailment::Skeptical : Entailment::Classical, sig);
    }
  }
  throw std::logic_error("unreachable");
}

bool entails_strong(const FormulaPtr& a, const FormulaPtr& b, const Signature& sig) {
  InterpSet da = denote(*a, sig);
  InterpSet db = denote(*b, sig);
  if (!da.classical().is_subset_of(db.classical())) return false;
  return (da.classical().down() & db).is_subset_of(da);
}

FormulaPtr gamma_of(const Interpretation& v, const Signature& sig) {
  if (!is_classical(v)) throw std::invalid_argument("gamma_of requires a classical interpretation");
  if (v.size() != sig.size()) throw std::invalid_argument("signature mismatch");
  FormulaPtr result;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (v.value(i) != 2) continue;
    FormulaPtr atom = Formula::atom(sig.atom(i));
    result = result ? Formula::conj(std::move(result), std::move(atom)) : std::move(atom);
  }
  return result ? result : Formula::top();
}

namespace {

// Context from the refuting u of condition (ii): the atoms true in u,
// plus p -> q for every ordered pair of distinct atoms undefined in u.
FormulaPtr context_for(const Interpretation& u, const Signature& sig) {
  FormulaPtr result;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (u.value(i) != 2) continue;
    FormulaPtr atom = Formula::atom(sig.atom(i));
    result = result ? Formula::conj(std::move(result), std::move(atom)) : std::move(atom);
  }
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (u.value(i) != 1) continue;
    for (std::size_t j = 0; j < sig.size(); ++j) {
      if (j == i || u.value(j) != 1) continue;
      FormulaPtr imp = Formula::implies(Formula::atom(sig.atom(i)), Formula::atom(sig.atom(j)));
      result = result ? Formula::conj(std::move(result), std::move(imp)) : std::move(imp);
    }
  }
  return result ? result : Formula::top();
}

std::size_t least_index(const InterpSet& s) {
  for (std::size_t i = 0; i < s.space_size(); ++i)
    if (s.contains_index(i)) return i;
  throw std::logic_error("least_index of empty set");
}

Witness verified(FormulaPtr context, Interpretation model, Witness::Cause cause,
                 const FormulaPtr& a, const FormulaPtr& b, const Signature& sig) {
  FormulaPtr ag = Formula::conj(a, context);
  FormulaPtr bg = Formula::conj(b, context);
  if (!equilibrium_models(*ag, sig).contains(model) || equilibrium_models(*bg, sig).contains(model))
    throw std::logic_error("strong entailment witness failed verification");
  return Witness{std::move(context), std::move(model), cause};
}

}  // namespace

std::optional<Witness> strong_entailment_witness(const FormulaPtr& a, const FormulaPtr& b,
                                                 const Signature& sig) {
  InterpSet da = denote(*a, sig);
  InterpSet db = denote(*b, sig);
  InterpSet classical_gap = da.classical() - db.classical();
  if (!classical_gap.is_empty()) {
    Interpretation v = Interpretation::from_index(least_index(classical_gap), sig);
    FormulaPtr context = gamma_of(v, sig);
    return verified(std::move(context), std::move(v), Witness::Cause::ClassicalGap, a, b, sig);
  }
  InterpSet context_gap = (da.classical().down() & db) - da;
  if (!context_gap.is_empty()) {
    Interpretation u = Interpretation::from_index(least_index(context_gap), sig);
    FormulaPtr context = context_for(u, sig);
    return verified(std::move(context), total_of(u), Witness::Cause::ContextGap, a, b, sig);
  }
  return std::nullopt;
}

bool equivalent(const FormulaPtr& a, const FormulaPtr& b, Equivalence kind, const Signature& sig) {
  switch (kind) {
    case Equivalence::G3:
      return denote(*a, sig) == denote(*b, sig);
    case Equivalence::Classical:
      return denote(*a, sig).classical() == denote(*b, sig).classical();
    case Equivalence::Weak:
      return equilibrium_models(*a, sig) == equilibrium_models(*b, sig);
    case Equivalence::Strong:
      return entails_strong(a, b, sig) && entails_strong(b, a, sig);
  }
  throw std::logic_error("unreachable");
}

bool check_sufficient_condition(const FormulaPtr& a, const FormulaPtr& b, const Signature& sig) {
  return entails(a, b, Entailment::Classical, sig) && entails(b, a, Entailment::G3, sig);
}

}  // namespace eqlog
