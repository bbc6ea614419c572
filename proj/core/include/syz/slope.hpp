#pragma once

#include "syz/monomial.hpp"
#include "syz/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace syz {

inline constexpr std::size_t kBruteForceCap = 24;
inline constexpr std::size_t kDefaultClosureCap = 2'000'000;

/// Best slope datum for one subset size r: the subset J, |J| = r, maximizing
/// (deg gcd(J) - sum of degrees)/(r - 1).
struct RankEntry {
  std::int64_t best_dJ; ///< degree of witness_gcd
  Rational value;
  Monomial witness_gcd;
};

/// Per-size maximal-slope profile of a monomial kernel bundle.
/// per_size is keyed by subset size r (2 <= r <= set size); the subsheaf rank
/// in tables is r' = r - 1.
struct SlopeProfile {
  std::size_t n = 0;
  std::optional<std::int64_t> d; ///< uniform degree, if the set has one
  std::map<std::size_t, RankEntry> per_size;
  Rational mu_max;
  std::size_t mu_max_r = 0; ///< smallest size attaining mu_max

  const Monomial& mu_max_witness_gcd() const { return per_size.at(mu_max_r).witness_gcd; }

  /// Maximum over proper subsheaves only (2 <= r <= size - 1);
  /// nullopt when the set has just 2 members.
  std::optional<std::size_t> mu_max_proper_r;
  std::optional<Rational> mu_max_proper() const {
    if (!mu_max_proper_r) return std::nullopt;
    return per_size.at(*mu_max_proper_r).value;
  }
};

/// Exhaustive maximum over all subsets J, |J| >= 2, of
/// (deg gcd(J) - sum_{i in J} deg)/(|J| - 1). Ground-truth oracle.
/// pre: 2 <= |s| <= kBruteForceCap. Ties within a size resolve to the
/// lexicographically largest witness gcd; mu_max ties across sizes resolve
/// to the smallest size.
SlopeProfile mu_max_bruteforce(const MonomialSet& s);

/// Same output contract as mu_max_bruteforce, computed via the divisor
/// closure: close the set under pairwise componentwise min, refine each
/// closure element g to gcd of the inputs it divides, then read off
/// per-size maxima from (degree, multiplicity) of the refined elements.
/// Throws ResourceLimitError if the closure exceeds closure_cap elements.
SlopeProfile mu_max_closure(const MonomialSet& s, std::size_t closure_cap = kDefaultClosureCap);

/// Rows (r' = r - 1, value) of the per-size profile, ascending in r'.
std::vector<std::pair<std::size_t, Rational>> per_rank_table(
    const MonomialSet& s, std::size_t closure_cap = kDefaultClosureCap);

struct SemistableVerdict {
  Rational mu;     ///< -a*d/(a-1) for a uniform degree-d set of size a
  Rational mu_max;
  bool semistable;      ///< mu_max == mu
  bool stable_strictly; ///< every proper-subset value < mu
};

/// Semistability of the kernel bundle of a basepoint-free uniform-degree set.
/// Throws HypothesisError when the set has basepoints or mixed degrees.
SemistableVerdict semistable_verdict(const MonomialSet& s,
                                     std::size_t closure_cap = kDefaultClosureCap);

/// An achieving subset for size r: the r smallest-degree members of s
/// divisible by per_size[r].witness_gcd (input order on degree ties).
/// Throws std::invalid_argument when r is not a profile key.
std::vector<Monomial> witness_subset(const SlopeProfile& profile, const MonomialSet& s,
                                     std::size_t r);

} // namespace syz
