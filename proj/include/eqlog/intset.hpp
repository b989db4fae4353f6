#ifndef EQLOG_INTSET_HPP
#define EQLOG_INTSET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "eqlog/core.hpp"

namespace eqlog {

/// A subset of the 3^n interpretations over a fixed signature, stored as a
/// bit vector indexed by the ternary encoding. Sets over different
/// signatures never interoperate.
class InterpSet {
 public:
  explicit InterpSet(Signature sig);

  static InterpSet empty(const Signature& sig) { return InterpSet(sig); }
  static InterpSet full(const Signature& sig);
  static InterpSet singleton(const Signature& sig, const Interpretation& v);
  static InterpSet from_strings(const Signature& sig, const std::vector<std::string>& digits);

  const Signature& sig() const { return sig_; }
  std::size_t space_size() const { return space_; }

  bool contains_index(std::size_t index) const;
  bool contains(const Interpretation& v) const;
  void insert_index(std::size_t index);
  void insert(const Interpretation& v);

  std::size_t count() const;
  bool is_empty() const;

  InterpSet complement() const;          // I \ S
  InterpSet classical() const;           // I_c ∩ S
  InterpSet down() const;                // {u : ∃v∈S, u ≤ v}
  InterpSet up() const;                  // {u : ∃v∈S, v ≤ u}
  bool is_total_closed() const;          // v∈S ⇒ v_t∈S

  bool is_subset_of(const InterpSet& other) const;
  bool operator==(const InterpSet& other) const;
  bool operator!=(const InterpSet& other) const { return !(*this == other); }

  friend InterpSet operator&(const InterpSet& a, const InterpSet& b);
  friend InterpSet operator|(const InterpSet& a, const InterpSet& b);
  friend InterpSet operator-(const InterpSet& a, const InterpSet& b);

  /// Members as digit strings, ascending by ternary index (which coincides
  /// with lexicographic order of the fixed-width strings).
  std::vector<std::string> to_strings() const;
  std::vector<std::size_t> indices() const;

 private:
  void check_same_sig(const InterpSet& other) const;
  Trit digit(std::size_t index, std::size_t atom) const;

  Signature sig_;
  std::size_t space_ = 1;
  std::vector<std::uint64_t> bits_;
};

}  // namespace eqlog

#endif
