#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace syz {

/// Largest exponent accepted anywhere; parse and construction both check it.
inline constexpr std::int64_t kMaxExponent = 1'000'000;

/// A monomial in variables x0..xn, stored as its exponent vector.
/// Immutable after construction; exponents are validated non-negative
/// and <= kMaxExponent.
class Monomial {
public:
  explicit Monomial(std::vector<std::int64_t> exponents);

  const std::vector<std::int64_t>& exponents() const { return exps_; }
  std::int64_t exponent(std::size_t i) const { return exps_.at(i); }
  /// Number of variables (n + 1 for P^n).
  std::size_t num_vars() const { return exps_.size(); }
  std::int64_t degree() const { return degree_; }

  /// Bitmask of variables with positive exponent (num_vars() <= 64 only).
  std::uint64_t support_mask() const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  /// Lexicographic order on exponent vectors.
  std::strong_ordering operator<=>(const Monomial& o) const;

  /// "x0^20*x1^2" with zero-exponent factors omitted, "^1" omitted,
  /// "1" for the constant monomial.
  std::string to_text() const;

  /// Inverse of to_text (also accepts explicit "^1"). num_vars fixes the
  /// exponent vector length; variables beyond it are rejected.
  static Monomial parse(const std::string& text, std::size_t num_vars);

private:
  std::vector<std::int64_t> exps_;
  std::int64_t degree_;
};

/// Componentwise minimum (the gcd monomial). Sizes must agree.
Monomial gcd(const Monomial& a, const Monomial& b);

/// True iff a divides b, i.e. a.exp[i] <= b.exp[i] for all i.
bool divides(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

/// A finite list of monomials in a fixed variable set x0..xn,
/// in a caller-chosen (and preserved) order. Duplicates are rejected.
class MonomialSet {
public:
  MonomialSet(std::size_t n, std::vector<Monomial> monomials);

  std::size_t n() const { return n_; }
  std::size_t num_vars() const { return n_ + 1; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }

  /// Common degree if all members share one, nullopt otherwise.
  std::optional<std::int64_t> uniform_degree() const;

  /// Copy with members in descending lexicographic order (normal form).
  MonomialSet sorted_lex() const;

  bool operator==(const MonomialSet& o) const = default;

  /// One monomial per line.
  std::string to_text() const;
  static MonomialSet parse_text(const std::string& text, std::size_t n);

private:
  std::size_t n_;
  std::vector<Monomial> monomials_;
};

/// True iff the members have no common zero on P^n: every nonempty
/// coordinate support admits a member supported inside it. Exhaustive over
/// 2^(n+1)-1 supports; requires n <= 16 (throws std::invalid_argument).
bool is_basepoint_free(const MonomialSet& s);

} // namespace syz
