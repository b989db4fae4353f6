#include "eqlog/denotation.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace eqlog {

TruthValue valuate(const Interpretation& v, const Formula& f, const Signature& sig) {
  if (v.size() != sig.size()) throw std::invalid_argument("signature mismatch");
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Bot:
      return TruthValue::False;
    case K::Atom: {
      auto idx = sig.index_of(f.name());
      if (!idx) throw std::invalid_argument("unknown atom: '" + f.name() + "'");
      return static_cast<TruthValue>(v.value(*idx));
    }
    case K::And:
      return std::min(valuate(v, *f.lhs(), sig), valuate(v, *f.rhs(), sig));
    case K::Or:
      return std::max(valuate(v, *f.lhs(), sig), valuate(v, *f.rhs(), sig));
    case K::Implies: {
      TruthValue a = valuate(v, *f.lhs(), sig);
      TruthValue b = valuate(v, *f.rhs(), sig);
      return a <= b ? TruthValue::True : b;
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

struct PtrHash {
  std::size_t operator()(const FormulaPtr& f) const { return f->hash(); }
};
struct PtrEq {
  bool operator()(const FormulaPtr& a, const FormulaPtr& b) const {
    return struct_equal(*a, *b);
  }
};

// Memoises sub-denotations per top-level call, keyed by structural equality.
class Denoter {
 public:
  explicit Denoter(const Signature& sig) : sig_(sig) {}

  InterpSet run(const FormulaPtr& f) {
    auto it = memo_.find(f);
    if (it != memo_.end()) return it->second;
    InterpSet result = compute(f);
    memo_.emplace(f, result);
    return result;
  }

 private:
  InterpSet compute(const FormulaPtr& f) {
    using K = Formula::Kind;
    switch (f->kind()) {
      case K::Bot:
        return InterpSet::empty(sig_);
      case K::Atom: {
        auto idx = sig_.index_of(f->name());
        if (!idx) throw std::invalid_argument("unknown atom: '" + f->name() + "'");
        InterpSet s(sig_);
        for (std::size_t i = 0; i < sig_.space_size(); ++i)
          if (Interpretation::from_index(i, sig_).value(*idx) == 2) s.insert_index(i);
        return s;
      }
      case K::And:
        return run(f->lhs()) & run(f->rhs());
      case K::Or:
        return run(f->lhs()) | run(f->rhs());
      case K::Implies: {
        InterpSet weak = run(f->lhs()).complement() | run(f->rhs());
        return weak & weak.classical().down();
      }
    }
    throw std::logic_error("unreachable");
  }

  const Signature& sig_;
  std::unordered_map<FormulaPtr, InterpSet, PtrHash, PtrEq> memo_;
};

}  // namespace

InterpSet denote(const Formula& f, const Signature& sig) {
  // The memo keys are shared_ptrs; wrap the root without taking ownership.
  FormulaPtr root(FormulaPtr{}, &f);
  return Denoter(sig).run(root);
}

InterpSet implication_union(const InterpSet& a, const InterpSet& b) {
  if (a.sig() != b.sig()) throw std::invalid_argument("signature mismatch between sets");
  InterpSet not_a = a.complement();
  return not_a.classical().down() | (not_a & b.classical().down()) | b;
}

InterpSet negation(const InterpSet& a) { return a.complement().classical().down(); }

bool is_equilibrium(const Interpretation& v, const Formula& f, const Signature& sig) {
  if (!is_classical(v)) throw std::invalid_argument("equilibrium test requires a classical interpretation");
  InterpSet point = InterpSet::singleton(sig, v);
  return (denote(f, sig) & point.down()) == point;
}

InterpSet equilibrium_of(const InterpSet& denotation) {
  InterpSet classical_universe = InterpSet::full(denotation.sig()).classical();
  return denotation.classical() - (denotation - classical_universe).up();
}

InterpSet equilibrium_models(const Formula& f, const Signature& sig) {
  return equilibrium_of(denote(f, sig));
}

}  // namespace eqlog
