#include "eqlog/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace eqlog {

bool valid_atom_name(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  };
  auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9') || c == '_'; };
  if (!alpha(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(), alnum);
}

Signature::Signature(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.size() > kMaxAtoms)
    throw std::invalid_argument("signature exceeds " + std::to_string(kMaxAtoms) + " atoms");
  std::unordered_set<std::string_view> seen;
  for (const auto& a : atoms_) {
    if (!valid_atom_name(a)) throw std::invalid_argument("invalid atom name: '" + a + "'");
    if (!seen.insert(a).second) throw std::invalid_argument("duplicate atom: '" + a + "'");
  }
}

Signature Signature::collated(std::vector<std::string> atoms) {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return Signature(std::move(atoms));
}

std::optional<std::size_t> Signature::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (atoms_[i] == name) return i;
  return std::nullopt;
}

std::size_t Signature::space_size() const {
  std::size_t s = 1;
  for (std::size_t i = 0; i < atoms_.size(); ++i) s *= 3;
  return s;
}

Interpretation::Interpretation(std::vector<Trit> values) : values_(std::move(values)) {
  if (values_.size() > Signature::kMaxAtoms)
    throw std::invalid_argument("interpretation too wide");
  for (Trit t : values_)
    if (t > 2) throw std::invalid_argument("trit outside {0,1,2}");
}

Interpretation Interpretation::from_index(std::size_t index, const Signature& sig) {
  if (index >= sig.space_size()) throw std::invalid_argument("interpretation index out of range");
  std::vector<Trit> values(sig.size());
  for (std::size_t i = sig.size(); i-- > 0;) {
    values[i] = static_cast<Trit>(index % 3);
    index /= 3;
  }
  return Interpretation(std::move(values));
}

Interpretation Interpretation::from_string(std::string_view digits) {
  std::vector<Trit> values;
  values.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '2') throw std::invalid_argument("digit string must use only 0, 1, 2");
    values.push_back(static_cast<Trit>(c - '0'));
  }
  return Interpretation(std::move(values));
}

std::size_t Interpretation::index() const {
  std::size_t idx = 0;
  for (Trit t : values_) idx = idx * 3 + t;
  return idx;
}

std::string Interpretation::str() const {
  std::string s;
  s.reserve(values_.size());
  for (Trit t : values_) s.push_back(static_cast<char>('0' + t));
  return s;
}

bool is_classical(const Interpretation& v) {
  for (Trit t : v.values())
    if (t == 1) return false;
  return true;
}

Interpretation total_of(const Interpretation& v) {
  std::vector<Trit> values = v.values();
  for (Trit& t : values)
    if (t == 1) t = 2;
  return Interpretation(std::move(values));
}

bool leq(const Interpretation& u, const Interpretation& v) {
  if (u.size() != v.size()) throw std::invalid_argument("signature mismatch in leq");
  for (std::size_t i = 0; i < u.size(); ++i) {
    Trit a = u.value(i), b = v.value(i);
    if (a == b) continue;
    if (!(a == 1 && b == 2)) return false;
  }
  return true;
}

bool lt(const Interpretation& u, const Interpretation& v) { return leq(u, v) && !(u == v); }

}  // namespace eqlog
