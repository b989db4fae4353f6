#ifndef EQLOG_CORE_HPP
#define EQLOG_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eqlog {

using Trit = std::uint8_t;  // 0 false, 1 undefined, 2 true

bool valid_atom_name(std::string_view name);

/// Ordered list of distinct atom names. The order fixes the digit-string
/// rendering of interpretations and the big-endian ternary index encoding.
/// Default construction helpers sort alphabetically; an explicit order given
/// to the constructor is kept as-is.
class Signature {
 public:
  static constexpr std::size_t kMaxAtoms = 16;

  Signature() = default;
  explicit Signature(std::vector<std::string> atoms);

  /// Builds a signature from possibly unsorted, possibly duplicated names.
  static Signature collated(std::vector<std::string> atoms);

  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::string& atom(std::size_t i) const { return atoms_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t space_size() const;  // 3^n

  bool operator==(const Signature&) const = default;

 private:
  std::vector<std::string> atoms_;
};

/// A three-valued interpretation: one trit per atom, positionally aligned
/// with a signature of the same arity.
class Interpretation {
 public:
  explicit Interpretation(std::vector<Trit> values);

  /// decode: big-endian ternary index -> interpretation over sig.
  static Interpretation from_index(std::size_t index, const Signature& sig);
  /// Parses a digit string like "102".
  static Interpretation from_string(std::string_view digits);

  std::size_t size() const { return values_.size(); }
  Trit value(std::size_t i) const { return values_[i]; }
  const std::vector<Trit>& values() const { return values_; }

  /// encode: Σ_i values[i]·3^(n−1−i).
  std::size_t index() const;
  std::string str() const;

  bool operator==(const Interpretation&) const = default;

 private:
  std::vector<Trit> values_;
};

/// True iff no atom is mapped to 1.
bool is_classical(const Interpretation& v);

/// v_t: every 1 raised to 2. Always classical, and leq(v, total_of(v)).
Interpretation total_of(const Interpretation& v);

/// u <= v iff v is obtained from u by switching some 1's into 2's.
bool leq(const Interpretation& u, const Interpretation& v);
bool lt(const Interpretation& u, const Interpretation& v);

}  // namespace eqlog

#endif
