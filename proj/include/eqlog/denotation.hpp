#ifndef EQLOG_DENOTATION_HPP
#define EQLOG_DENOTATION_HPP

#include "eqlog/core.hpp"
#include "eqlog/formula.hpp"
#include "eqlog/intset.hpp"

namespace eqlog {

enum class TruthValue : Trit { False = 0, Undefined = 1, True = 2 };

/// Three-valued valuation of f under v, by the truth tables:
/// min for conjunction, max for disjunction, and a -> b true when
/// v(a) <= v(b), otherwise v(b).
TruthValue valuate(const Interpretation& v, const Formula& f, const Signature& sig);

/// The set of G3 models of f over sig, computed by structural induction
/// on the formula (no valuation involved). Always total-closed.
InterpSet denote(const Formula& f, const Signature& sig);

/// Implication denotation in union form; agrees with denote's
/// intersection form whenever a and b are total-closed.
InterpSet implication_union(const InterpSet& a, const InterpSet& b);

/// Negation shortcut: models of ~f are the interpretations whose
/// totalisation is a classical countermodel of f.
InterpSet negation(const InterpSet& a);

/// Fixpoint test: denote(f) ∩ {v}↓ = {v}. Rejects non-classical v.
bool is_equilibrium(const Interpretation& v, const Formula& f, const Signature& sig);

/// Equilibrium part of a denotation: D_c \ (D \ I_c)↑.
InterpSet equilibrium_of(const InterpSet& denotation);

/// Equilibrium (stable) models of f over sig.
InterpSet equilibrium_models(const Formula& f, const Signature& sig);

}  // namespace eqlog

#endif
