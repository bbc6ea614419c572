#pragma once

#include "syz/monomial.hpp"
#include "syz/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace syz {

/// k(n) = (n+1)^2 - sum_{i=2}^{n+1} ((n+1) mod i): the largest multiplier m
/// for which the coverage decomposition applies. pre: n >= 1.
std::int64_t k_of(std::int64_t n);

/// Coefficients of the uniform slope bound B(n,d) = B_coef(n)*d + B_const(n):
/// B_coef = -(n^2+5n+4)/(n^2+5n+2), B_const = 4(n+1)/(n^2+5n+2).
Rational bound_B_coef(std::int64_t n);
Rational bound_B_const(std::int64_t n);

/// B(n,d) = (d(-n-1)(n+4) - 4(-n-1))/(n^2+5n+2), evaluated exactly.
/// Also verified against the equivalent A_low*d form. pre: n >= 2, d >= 1.
Rational bound_B(std::int64_t n, std::int64_t d);

/// Admissible interval [A_low, A_high] for the construction parameter A;
/// nullopt when empty (happens exactly for d < n^3 + 4n^2 - n).
/// A_low = 4(n+1)/((n^2+5n+2)d) - (n^2+5n+4)/(n^2+5n+2), A_high = (-d-2n+2)/d.
std::optional<std::pair<Rational, Rational>> a_interval(std::int64_t n, std::int64_t d);

/// Smallest degree with a nonempty A-interval.
inline std::int64_t min_degree_for_interval(std::int64_t n) {
  return n * n * n + 4 * n * n - n;
}

struct ConstructionParams {
  std::int64_t n; ///< >= 2
  std::int64_t d; ///< >= 1
  Rational A;     ///< must lie in a_interval(n, d)
};

/// Params with the default A = A_low(n,d); throws std::invalid_argument when
/// the interval is empty.
ConstructionParams default_params(std::int64_t n, std::int64_t d);

/// Row bookkeeping for one row i >= 2 of the k(n)-monomial construction:
/// d - floor(d_i) = p*(i-1) + q with 0 <= q < i-1, where d_i = (i + A(i-1))d.
struct RowData {
  std::int64_t i;         ///< row index, 2..n+1
  std::int64_t d_i_floor; ///< floor(d_i)
  std::int64_t p;
  std::int64_t q;
  std::int64_t blocks;    ///< floor((n+1)/i) variable blocks of size i
};

struct Construction1Result {
  MonomialSet set;
  std::vector<RowData> rows;
};

/// The k(n)-monomial degree-d family: row 1 is the pure powers x_0^d..x_n^d;
/// row i (2..n+1) covers floor((n+1)/i) consecutive variable blocks of size
/// i, one monomial per block position j carrying exponent floor(d_i) at j,
/// and p or p+1 on the other block positions. The q "large" exponents p+1 go
/// to the HIGHEST-index remaining positions: placing them at the lowest
/// indices can push a pair gcd above the certified bound B(n,d) (first
/// failing case n=2, d=23), while the highest-index rule keeps
/// mu_max <= B(n,d) across the verified range. Both rules agree whenever
/// q = 0, which includes every d = n^3+4n^2-n boundary case.
MonomialSet construction1(const ConstructionParams& params);
Construction1Result construction1_detailed(const ConstructionParams& params);

/// First m monomials of construction1 in emission order (row 1 always
/// included since m >= n+1). pre: n+1 <= m <= k_of(n).
MonomialSet construction1_dropped(const ConstructionParams& params, std::int64_t m);

/// The verbatim 7-monomial degree-d family with balanced e_0 >= e_1 >= e_2,
/// e_0 = ceil(d/3), e_0 - e_2 <= 1. pre: d >= 3.
MonomialSet e81_generators(std::int64_t d);

/// The verbatim 9-monomial degree-d family with cut points
/// i_l = l*m + min(l,t) for d = 3m + t. pre: d >= 3.
MonomialSet e91_generators(std::int64_t d);

/// {x_0^d, ..., x_n^d}. pre: n >= 1, d >= 1.
MonomialSet pure_powers(std::int64_t n, std::int64_t d);

/// binomial(n+d, n): the number of degree-d monomials in n+1 variables.
Integer p_n_of_d(std::int64_t n, std::int64_t d);

} // namespace syz
