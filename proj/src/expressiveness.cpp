#include "eqlog/expressiveness.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace eqlog {

Fragment Fragment::from_csv(std::string_view csv) {
  Fragment frag;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    if (comma == std::string_view::npos) comma = csv.size();
    std::string_view tok = csv.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok == "bot")
      frag.has_bot = true;
    else if (tok == "and")
      frag.has_and = true;
    else if (tok == "or")
      frag.has_or = true;
    else if (tok == "imp")
      frag.has_implies = true;
    else if (!tok.empty())
      throw std::invalid_argument("unknown fragment connective: '" + std::string(tok) + "'");
    pos = comma + 1;
  }
  return frag;
}

std::string Fragment::str() const {
  std::string s;
  auto add = [&](const char* name) {
    if (!s.empty()) s += ",";
    s += name;
  };
  if (has_bot) add("bot");
  if (has_and) add("and");
  if (has_or) add("or");
  if (has_implies) add("imp");
  return s;
}

const ClosureEntry* ClosureFamily::find(const InterpSet& s) const {
  for (const auto& e : entries)
    if (e.set == s) return &e;
  return nullptr;
}

namespace {

// The closure runs over raw masks: with at most 3 atoms the whole space has
// at most 27 interpretations, so a set is one 32-bit word.
struct SmallSpace {
  std::size_t n = 0;
  std::size_t space = 1;
  std::uint32_t full = 1;
  std::uint32_t classical = 1;
  std::uint32_t atom_true[3] = {0, 0, 0};
  std::uint32_t has_two[3] = {0, 0, 0};
  unsigned stride[3] = {0, 0, 0};

  explicit SmallSpace(const Signature& sig) : n(sig.size()) {
    if (n > 3) throw std::invalid_argument("signature too large for closure (max 3 atoms)");
    space = sig.space_size();
    full = static_cast<std::uint32_t>((1ull << space) - 1);
    classical = 0;
    for (std::size_t k = 0; k < n; ++k) {
      unsigned s = 1;
      for (std::size_t j = 0; j < n - 1 - k; ++j) s *= 3;
      stride[k] = s;
    }
    for (std::size_t i = 0; i < space; ++i) {
      bool cls = true;
      for (std::size_t k = 0; k < n; ++k) {
        Trit d = static_cast<Trit>((i / stride[k]) % 3);
        if (d == 1) cls = false;
        if (d == 2) {
          atom_true[k] |= 1u << i;
          has_two[k] |= 1u << i;
        }
      }
      if (cls) classical |= 1u << i;
    }
  }

  std::uint32_t down(std::uint32_t s) const {
    for (std::size_t k = 0; k < n; ++k) s |= (s & has_two[k]) >> stride[k];
    return s;
  }

  std::uint32_t imp(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t weak = (full & ~a) | b;
    return weak & down(weak & classical);
  }
};

std::uint32_t to_mask(const InterpSet& s) {
  std::uint32_t m = 0;
  for (std::size_t i : s.indices()) m |= 1u << i;
  return m;
}

InterpSet to_set(std::uint32_t mask, const Signature& sig) {
  InterpSet s(sig);
  for (std::size_t i = 0; i < sig.space_size(); ++i)
    if ((mask >> i) & 1) s.insert_index(i);
  return s;
}

// How a family member was first derived; indices refer to the family order.
struct Derivation {
  enum class Op { Atom, Bot, And, Or, Implies };
  Op op;
  std::size_t lhs = 0, rhs = 0;  // atom index for Op::Atom
};

class ClosureSearch {
 public:
  ClosureSearch(const Signature& sig, const Fragment& frag)
      : sig_(sig), frag_(frag), space_(sig) {}

  // Runs BFS rounds until fixpoint, or until the target mask (if any) is
  // discovered. Returns the family index of the target, if found.
  std::optional<std::size_t> run(std::optional<std::uint32_t> target) {
    for (std::size_t k = 0; k < sig_.size(); ++k)
      add(space_.atom_true[k], {Derivation::Op::Atom, k, 0});
    if (frag_.has_bot) add(0, {Derivation::Op::Bot, 0, 0});
    if (target) {
      if (auto hit = lookup(*target)) return hit;
    }
    std::size_t round_start = 0;
    while (round_start < family_.size()) {
      std::size_t round_end = family_.size();
      if (frag_.has_and)
        if (auto hit = combine(round_start, round_end, target, Derivation::Op::And)) return hit;
      if (frag_.has_or)
        if (auto hit = combine(round_start, round_end, target, Derivation::Op::Or)) return hit;
      if (frag_.has_implies)
        if (auto hit = combine(round_start, round_end, target, Derivation::Op::Implies)) return hit;
      round_start = round_end;
    }
    return std::nullopt;
  }

  std::size_t size() const { return family_.size(); }
  std::uint32_t mask_at(std::size_t i) const { return family_[i]; }

  FormulaPtr witness(std::size_t i) {
    if (witness_cache_.size() < family_.size()) witness_cache_.resize(family_.size());
    if (witness_cache_[i]) return witness_cache_[i];
    const Derivation& d = derivations_[i];
    FormulaPtr f;
    switch (d.op) {
      case Derivation::Op::Atom:
        f = Formula::atom(sig_.atom(d.lhs));
        break;
      case Derivation::Op::Bot:
        f = Formula::bot();
        break;
      case Derivation::Op::And:
        f = Formula::conj(witness(d.lhs), witness(d.rhs));
        break;
      case Derivation::Op::Or:
        f = Formula::disj(witness(d.lhs), witness(d.rhs));
        break;
      case Derivation::Op::Implies:
        f = Formula::implies(witness(d.lhs), witness(d.rhs));
        break;
    }
    witness_cache_[i] = f;
    return f;
  }

 private:
  std::optional<std::size_t> lookup(std::uint32_t mask) const {
    auto it = index_.find(mask);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool add(std::uint32_t mask, Derivation d) {
    auto [it, inserted] = index_.emplace(mask, family_.size());
    if (!inserted) return false;
    family_.push_back(mask);
    derivations_.push_back(d);
    return true;
  }

  // Ordered pairs with at least one operand from the newest round,
  // in lexicographic (i, j) order; first derivation of a set wins.
  std::optional<std::size_t> combine(std::size_t new_begin, std::size_t new_end,
                                     std::optional<std::uint32_t> target, Derivation::Op op) {
    for (std::size_t i = 0; i < new_end; ++i) {
      std::size_t j_begin = i >= new_begin ? 0 : new_begin;
      for (std::size_t j = j_begin; j < new_end; ++j) {
        std::uint32_t a = family_[i], b = family_[j], c;
        switch (op) {
          case Derivation::Op::And:
            c = a & b;
            break;
          case Derivation::Op::Or:
            c = a | b;
            break;
          default:
            c = space_.imp(a, b);
        }
        if (add(c, {op, i, j}) && target && c == *target) return family_.size() - 1;
      }
    }
    return std::nullopt;
  }

  const Signature& sig_;
  Fragment frag_;
  SmallSpace space_;
  std::vector<std::uint32_t> family_;
  std::vector<Derivation> derivations_;
  std::vector<FormulaPtr> witness_cache_;
  std::unordered_map<std::uint32_t, std::size_t> index_;
};

}  // namespace

ClosureFamily fragment_closure(const Signature& sig, const Fragment& frag) {
  ClosureSearch search(sig, frag);
  search.run(std::nullopt);
  ClosureFamily family;
  family.entries.reserve(search.size());
  for (std::size_t i = 0; i < search.size(); ++i)
    family.entries.push_back({to_set(search.mask_at(i), sig), search.witness(i)});
  return family;
}

Definability is_definable(const FormulaPtr& f, const Fragment& frag, const Signature& sig) {
  InterpSet target = denote(*f, sig);
  ClosureSearch search(sig, frag);
  auto hit = search.run(to_mask(target));
  if (!hit) return {};
  FormulaPtr witness = search.witness(*hit);
  if (denote(*witness, sig) != target)
    throw std::logic_error("definability witness failed verification");
  return {true, std::move(witness)};
}

}  // namespace eqlog
