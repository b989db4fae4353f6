#include "eqlog/formula.hpp"

#include <algorithm>
#include <cctype>

namespace eqlog {

namespace {
std::size_t mix(std::size_t h, std::size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}
}  // namespace

Formula::Formula(Kind kind, std::string name, FormulaPtr lhs, FormulaPtr rhs)
    : kind_(kind), name_(std::move(name)), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
  std::size_t h = static_cast<std::size_t>(kind_) + 1;
  h = mix(h, std::hash<std::string>{}(name_));
  nodes_ = 1;
  if (lhs_) {
    h = mix(h, lhs_->hash_);
    nodes_ += lhs_->nodes_;
  }
  if (rhs_) {
    h = mix(h, rhs_->hash_);
    nodes_ += rhs_->nodes_;
  }
  hash_ = h;
}

FormulaPtr Formula::bot() {
  static const FormulaPtr instance(new Formula(Kind::Bot, {}, nullptr, nullptr));
  return instance;
}

FormulaPtr Formula::atom(std::string name) {
  if (!valid_atom_name(name))
    throw std::invalid_argument("invalid atom name: '" + name + "'");
  return FormulaPtr(new Formula(Kind::Atom, std::move(name), nullptr, nullptr));
}

FormulaPtr Formula::conj(FormulaPtr l, FormulaPtr r) {
  return FormulaPtr(new Formula(Kind::And, {}, std::move(l), std::move(r)));
}

FormulaPtr Formula::disj(FormulaPtr l, FormulaPtr r) {
  return FormulaPtr(new Formula(Kind::Or, {}, std::move(l), std::move(r)));
}

FormulaPtr Formula::implies(FormulaPtr l, FormulaPtr r) {
  return FormulaPtr(new Formula(Kind::Implies, {}, std::move(l), std::move(r)));
}

bool struct_equal(const Formula& a, const Formula& b) {
  if (&a == &b) return true;
  if (a.kind() != b.kind() || a.hash() != b.hash()) return false;
  switch (a.kind()) {
    case Formula::Kind::Bot:
      return true;
    case Formula::Kind::Atom:
      return a.name() == b.name();
    default:
      return struct_equal(*a.lhs(), *b.lhs()) && struct_equal(*a.rhs(), *b.rhs());
  }
}

namespace {
void collect_atoms(const Formula& f, std::vector<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Bot:
      break;
    case Formula::Kind::Atom:
      out.push_back(f.name());
      break;
    default:
      collect_atoms(*f.lhs(), out);
      collect_atoms(*f.rhs(), out);
  }
}
}  // namespace

Signature atoms_of(const Formula& f) {
  std::vector<std::string> names;
  collect_atoms(f, names);
  return Signature::collated(std::move(names));
}

namespace {
void collect_subformulas(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
  if (f->lhs()) collect_subformulas(f->lhs(), out);
  if (f->rhs()) collect_subformulas(f->rhs(), out);
  out.push_back(f);
}
}  // namespace

std::vector<FormulaPtr> subformulas(const FormulaPtr& f) {
  std::vector<FormulaPtr> out;
  collect_subformulas(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

bool is_top(const Formula& f) {
  return f.kind() == Formula::Kind::Implies && f.lhs()->kind() == Formula::Kind::Bot &&
         f.rhs()->kind() == Formula::Kind::Bot;
}

bool is_neg(const Formula& f) {
  return f.kind() == Formula::Kind::Implies && f.rhs()->kind() == Formula::Kind::Bot &&
         !is_top(f);
}

// Precedence as rendered: -> 1, | 2, & 3, ~ 4, primary 5.
int render_prec(const Formula& f) {
  if (is_top(f) || is_neg(f)) return is_top(f) ? 5 : 4;
  switch (f.kind()) {
    case Formula::Kind::Implies:
      return 1;
    case Formula::Kind::Or:
      return 2;
    case Formula::Kind::And:
      return 3;
    default:
      return 5;
  }
}

void render_node(const Formula& f, int min_prec, std::string& out) {
  int prec = render_prec(f);
  bool parens = prec < min_prec;
  if (parens) out.push_back('(');
  if (is_top(f)) {
    out += "T";
  } else if (is_neg(f)) {
    out.push_back('~');
    render_node(*f.lhs(), 4, out);
  } else {
    switch (f.kind()) {
      case Formula::Kind::Bot:
        out += "_|_";
        break;
      case Formula::Kind::Atom:
        out += f.name();
        break;
      case Formula::Kind::And:
        render_node(*f.lhs(), 3, out);
        out += " & ";
        render_node(*f.rhs(), 4, out);
        break;
      case Formula::Kind::Or:
        render_node(*f.lhs(), 2, out);
        out += " | ";
        render_node(*f.rhs(), 3, out);
        break;
      case Formula::Kind::Implies:
        render_node(*f.lhs(), 2, out);
        out += " -> ";
        render_node(*f.rhs(), 1, out);
        break;
    }
  }
  if (parens) out.push_back(')');
}

}  // namespace

std::string render(const Formula& f) {
  std::string out;
  render_node(f, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  enum class Type { End, LParen, RParen, Amp, Pipe, Arrow, Tilde, Bot, Top, Ident };
  Type type;
  std::size_t offset;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::size_t at = pos_;
      if (pos_ >= text_.size()) {
        tokens.push_back({Token::Type::End, at, {}});
        return tokens;
      }
      char c = text_[pos_];
      if (c == '(') {
        tokens.push_back({Token::Type::LParen, at, "("});
        ++pos_;
      } else if (c == ')') {
        tokens.push_back({Token::Type::RParen, at, ")"});
        ++pos_;
      } else if (c == '&') {
        tokens.push_back({Token::Type::Amp, at, "&"});
        ++pos_;
      } else if (c == '|') {
        ++pos_;
        tokens.push_back({Token::Type::Pipe, at, "|"});
      } else if (c == '~') {
        tokens.push_back({Token::Type::Tilde, at, "~"});
        ++pos_;
      } else if (c == '-') {
        if (pos_ + 1 >= text_.size() || text_[pos_ + 1] != '>')
          throw ParseError("expected '->'", at);
        tokens.push_back({Token::Type::Arrow, at, "->"});
        pos_ += 2;
      } else if (c == '_') {
        if (text_.substr(pos_, 3) != "_|_") throw ParseError("unexpected character '_'", at);
        tokens.push_back({Token::Type::Bot, at, "_|_"});
        pos_ += 3;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t end = pos_ + 1;
        while (end < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
          ++end;
        std::string word(text_.substr(pos_, end - pos_));
        pos_ = end;
        if (word == "bot")
          tokens.push_back({Token::Type::Bot, at, word});
        else if (word == "top" || word == "T")
          tokens.push_back({Token::Type::Top, at, word});
        else if (word == "not")
          tokens.push_back({Token::Type::Tilde, at, word});
        else
          tokens.push_back({Token::Type::Ident, at, word});
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", at);
      }
    }
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  FormulaPtr run() {
    FormulaPtr f = implication();
    if (peek().type != Token::Type::End)
      throw ParseError("unexpected trailing input", peek().offset);
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }

  FormulaPtr implication() {
    FormulaPtr l = disjunction();
    if (peek().type == Token::Type::Arrow) {
      take();
      return Formula::implies(std::move(l), implication());
    }
    return l;
  }

  FormulaPtr disjunction() {
    FormulaPtr l = conjunction();
    while (peek().type == Token::Type::Pipe) {
      take();
      l = Formula::disj(std::move(l), conjunction());
    }
    return l;
  }

  FormulaPtr conjunction() {
    FormulaPtr l = unary();
    while (peek().type == Token::Type::Amp) {
      take();
      l = Formula::conj(std::move(l), unary());
    }
    return l;
  }

  FormulaPtr unary() {
    if (peek().type == Token::Type::Tilde) {
      take();
      return Formula::neg(unary());
    }
    return primary();
  }

  FormulaPtr primary() {
    Token t = take();
    switch (t.type) {
      case Token::Type::Bot:
        return Formula::bot();
      case Token::Type::Top:
        return Formula::top();
      case Token::Type::Ident:
        return Formula::atom(std::move(t.text));
      case Token::Type::LParen: {
        FormulaPtr f = implication();
        if (peek().type != Token::Type::RParen)
          throw ParseError("expected ')'", peek().offset);
        take();
        return f;
      }
      case Token::Type::End:
        throw ParseError("unexpected end of input", t.offset);
      default:
        throw ParseError("expected formula, found '" + t.text + "'", t.offset);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

FormulaPtr parse(std::string_view text) { return Parser(Lexer(text).run()).run(); }

}  // namespace eqlog
