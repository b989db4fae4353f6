#include "eqlog/intset.hpp"

#include <bit>
#include <stdexcept>

namespace eqlog {

namespace {
std::size_t pow3(std::size_t k) {
  std::size_t s = 1;
  while (k--) s *= 3;
  return s;
}
}  // namespace

InterpSet::InterpSet(Signature sig)
    : sig_(std::move(sig)), space_(sig_.space_size()), bits_((space_ + 63) / 64, 0) {}

InterpSet InterpSet::full(const Signature& sig) {
  InterpSet s(sig);
  for (auto& w : s.bits_) w = ~std::uint64_t{0};
  // clear padding past 3^n
  std::size_t tail = s.space_ % 64;
  if (tail != 0) s.bits_.back() &= (std::uint64_t{1} << tail) - 1;
  return s;
}

InterpSet InterpSet::singleton(const Signature& sig, const Interpretation& v) {
  InterpSet s(sig);
  s.insert(v);
  return s;
}

InterpSet InterpSet::from_strings(const Signature& sig, const std::vector<std::string>& digits) {
  InterpSet s(sig);
  for (const auto& d : digits) s.insert(Interpretation::from_string(d));
  return s;
}

bool InterpSet::contains_index(std::size_t index) const {
  if (index >= space_) throw std::invalid_argument("interpretation index out of range");
  return (bits_[index / 64] >> (index % 64)) & 1;
}

bool InterpSet::contains(const Interpretation& v) const {
  if (v.size() != sig_.size()) throw std::invalid_argument("signature mismatch");
  return contains_index(v.index());
}

void InterpSet::insert_index(std::size_t index) {
  if (index >= space_) throw std::invalid_argument("interpretation index out of range");
  bits_[index / 64] |= std::uint64_t{1} << (index % 64);
}

void InterpSet::insert(const Interpretation& v) {
  if (v.size() != sig_.size()) throw std::invalid_argument("signature mismatch");
  insert_index(v.index());
}

std::size_t InterpSet::count() const {
  std::size_t c = 0;
  for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool InterpSet::is_empty() const {
  for (auto w : bits_)
    if (w != 0) return false;
  return true;
}

Trit InterpSet::digit(std::size_t index, std::size_t atom) const {
  return static_cast<Trit>((index / pow3(sig_.size() - 1 - atom)) % 3);
}

InterpSet InterpSet::complement() const {
  InterpSet r = full(sig_);
  for (std::size_t w = 0; w < bits_.size(); ++w) r.bits_[w] &= ~bits_[w];
  return r;
}

InterpSet InterpSet::classical() const {
  InterpSet r(sig_);
  for (std::size_t i = 0; i < space_; ++i) {
    if (!contains_index(i)) continue;
    bool cls = true;
    for (std::size_t k = 0; k < sig_.size() && cls; ++k)
      if (digit(i, k) == 1) cls = false;
    if (cls) r.insert_index(i);
  }
  return r;
}

// Per-atom expansion: a member's 2 at one atom may also be 1 below it. One
// pass over the atoms closes the set, since lowering different atoms
// commutes and lowering the same atom twice is impossible.
InterpSet InterpSet::down() const {
  InterpSet r = *this;
  for (std::size_t k = 0; k < sig_.size(); ++k) {
    std::size_t stride = pow3(sig_.size() - 1 - k);
    for (std::size_t i = 0; i < space_; ++i)
      if (r.contains_index(i) && r.digit(i, k) == 2) r.insert_index(i - stride);
  }
  return r;
}

InterpSet InterpSet::up() const {
  InterpSet r = *this;
  for (std::size_t k = 0; k < sig_.size(); ++k) {
    std::size_t stride = pow3(sig_.size() - 1 - k);
    for (std::size_t i = 0; i < space_; ++i)
      if (r.contains_index(i) && r.digit(i, k) == 1) r.insert_index(i + stride);
  }
  return r;
}

bool InterpSet::is_total_closed() const {
  for (std::size_t i = 0; i < space_; ++i) {
    if (!contains_index(i)) continue;
    std::size_t total = i;
    for (std::size_t k = 0; k < sig_.size(); ++k)
      if (digit(i, k) == 1) total += pow3(sig_.size() - 1 - k);
    if (!contains_index(total)) return false;
  }
  return true;
}

void InterpSet::check_same_sig(const InterpSet& other) const {
  if (sig_ != other.sig_) throw std::invalid_argument("signature mismatch between sets");
}

bool InterpSet::is_subset_of(const InterpSet& other) const {
  check_same_sig(other);
  for (std::size_t w = 0; w < bits_.size(); ++w)
    if (bits_[w] & ~other.bits_[w]) return false;
  return true;
}

bool InterpSet::operator==(const InterpSet& other) const {
  check_same_sig(other);
  return bits_ == other.bits_;
}

InterpSet operator&(const InterpSet& a, const InterpSet& b) {
  a.check_same_sig(b);
  InterpSet r = a;
  for (std::size_t w = 0; w < r.bits_.size(); ++w) r.bits_[w] &= b.bits_[w];
  return r;
}

InterpSet operator|(const InterpSet& a, const InterpSet& b) {
  a.check_same_sig(b);
  InterpSet r = a;
  for (std::size_t w = 0; w < r.bits_.size(); ++w) r.bits_[w] |= b.bits_[w];
  return r;
}

InterpSet operator-(const InterpSet& a, const InterpSet& b) {
  a.check_same_sig(b);
  InterpSet r = a;
  for (std::size_t w = 0; w < r.bits_.size(); ++w) r.bits_[w] &= ~b.bits_[w];
  return r;
}

std::vector<std::string> InterpSet::to_strings() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < space_; ++i)
    if (contains_index(i)) out.push_back(Interpretation::from_index(i, sig_).str());
  return out;
}

std::vector<std::size_t> InterpSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < space_; ++i)
    if (contains_index(i)) out.push_back(i);
  return out;
}

}  // namespace eqlog
