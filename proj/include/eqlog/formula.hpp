#ifndef EQLOG_FORMULA_HPP
#define EQLOG_FORMULA_HPP

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eqlog/core.hpp"

namespace eqlog {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable AST with exactly five node kinds. Negation and verum are
/// syntactic sugar: ~a is stored as a -> _|_ and T as _|_ -> _|_.
class Formula {
 public:
  enum class Kind { Bot, Atom, And, Or, Implies };

  static FormulaPtr bot();
  static FormulaPtr atom(std::string name);
  static FormulaPtr conj(FormulaPtr l, FormulaPtr r);
  static FormulaPtr disj(FormulaPtr l, FormulaPtr r);
  static FormulaPtr implies(FormulaPtr l, FormulaPtr r);
  static FormulaPtr neg(FormulaPtr a) { return implies(std::move(a), bot()); }
  static FormulaPtr top() { return implies(bot(), bot()); }

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const FormulaPtr& lhs() const { return lhs_; }
  const FormulaPtr& rhs() const { return rhs_; }
  std::size_t hash() const { return hash_; }
  std::size_t node_count() const { return nodes_; }

 private:
  Formula(Kind kind, std::string name, FormulaPtr lhs, FormulaPtr rhs);

  Kind kind_;
  std::string name_;
  FormulaPtr lhs_, rhs_;
  std::size_t hash_;
  std::size_t nodes_;
};

bool struct_equal(const Formula& a, const Formula& b);
inline bool struct_equal(const FormulaPtr& a, const FormulaPtr& b) {
  return struct_equal(*a, *b);
}

/// Distinct atom names of f, sorted alphabetically.
Signature atoms_of(const Formula& f);

/// Every node of the tree, parents after children, f itself last.
std::vector<FormulaPtr> subformulas(const FormulaPtr& f);

/// Text form with ~/T re-sugared and minimal parentheses;
/// parse(render(f)) is structurally equal to f.
std::string render(const Formula& f);
inline std::string render(const FormulaPtr& f) { return render(*f); }

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Grammar: atoms, `_|_`/`bot`, `T`/`top`, `~`/`not`, `&`, `|`, `->`,
/// parentheses. Precedence ~ > & > | > ->; & and | left-associative,
/// -> right-associative.
FormulaPtr parse(std::string_view text);

}  // namespace eqlog

#endif
