#include "syz/constructions.hpp"

#include <stdexcept>
#include <string>

namespace syz {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

void check_nd(std::int64_t n, std::int64_t d, std::int64_t n_min) {
  if (n < n_min) bad("n must be >= " + std::to_string(n_min));
  if (d < 1) bad("d must be positive");
}

} // namespace

std::int64_t k_of(std::int64_t n) {
  if (n < 1) bad("k_of: n must be >= 1");
  std::int64_t k = (n + 1) * (n + 1);
  for (std::int64_t i = 2; i <= n + 1; ++i) k -= (n + 1) % i;
  return k;
}

Rational bound_B_coef(std::int64_t n) {
  return make_rational(-(n * n + 5 * n + 4), n * n + 5 * n + 2);
}

Rational bound_B_const(std::int64_t n) {
  return make_rational(4 * (n + 1), n * n + 5 * n + 2);
}

Rational bound_B(std::int64_t n, std::int64_t d) {
  check_nd(n, d, 2);
  Rational direct =
      make_rational(d * (-n - 1) * (n + 4) - 4 * (-n - 1), n * n + 5 * n + 2);
  Rational split = bound_B_coef(n) * d + bound_B_const(n);
  if (direct != split) throw std::logic_error("bound_B: closed forms disagree");
  return direct;
}

std::optional<std::pair<Rational, Rational>> a_interval(std::int64_t n, std::int64_t d) {
  check_nd(n, d, 2);
  Rational a_low = make_rational(4 * (n + 1), (n * n + 5 * n + 2) * d) -
                   make_rational(n * n + 5 * n + 4, n * n + 5 * n + 2);
  Rational a_high = make_rational(-d - 2 * n + 2, d);
  if (a_low * d != bound_B(n, d)) throw std::logic_error("a_interval: A_low*d != B");
  if (a_low > a_high) return std::nullopt;
  return std::make_pair(a_low, a_high);
}

ConstructionParams default_params(std::int64_t n, std::int64_t d) {
  auto interval = a_interval(n, d);
  if (!interval)
    bad("empty A-interval: construction needs d >= " +
        std::to_string(min_degree_for_interval(n)) + ", got d = " + std::to_string(d));
  return {n, d, interval->first};
}

Construction1Result construction1_detailed(const ConstructionParams& params) {
  const auto n = params.n;
  const auto d = params.d;
  auto interval = a_interval(n, d);
  if (!interval)
    bad("empty A-interval: construction needs d >= " +
        std::to_string(min_degree_for_interval(n)) + ", got d = " + std::to_string(d));
  if (params.A < interval->first || params.A > interval->second)
    bad("A = " + to_pq_string(params.A) + " outside the admissible interval [" +
        to_pq_string(interval->first) + ", " + to_pq_string(interval->second) + "]");

  const std::size_t nv = static_cast<std::size_t>(n) + 1;
  std::vector<Monomial> out;
  for (std::size_t j = 0; j < nv; ++j) {
    std::vector<std::int64_t> e(nv, 0);
    e[j] = d;
    out.emplace_back(std::move(e));
  }

  std::vector<RowData> rows;
  for (std::int64_t i = 2; i <= n + 1; ++i) {
    Rational d_i = (Rational(i) + params.A * (i - 1)) * d;
    if (d_i <= 0) bad("row " + std::to_string(i) + ": d_i <= 0");
    std::int64_t fl = static_cast<std::int64_t>(floor_rational(d_i));
    std::int64_t rem = d - fl;
    if (rem < 0) bad("row " + std::to_string(i) + ": d - floor(d_i) < 0");
    std::int64_t p = rem / (i - 1);
    std::int64_t q = rem % (i - 1);
    std::int64_t blocks = (n + 1) / i;
    rows.push_back({i, fl, p, q, blocks});

    for (std::int64_t g = 0; g < blocks; ++g) {
      const std::int64_t base = g * i;
      for (std::int64_t j = 0; j < i; ++j) {
        std::vector<std::int64_t> e(nv, 0);
        e[static_cast<std::size_t>(base + j)] = fl;
        // The i-1 remaining block positions, in increasing index order, get
        // p each, with the last q of them bumped to p+1.
        std::int64_t pos_rank = 0;
        for (std::int64_t j2 = 0; j2 < i; ++j2) {
          if (j2 == j) continue;
          e[static_cast<std::size_t>(base + j2)] = (pos_rank >= i - 1 - q) ? p + 1 : p;
          ++pos_rank;
        }
        out.emplace_back(std::move(e));
      }
    }
  }

  MonomialSet set(static_cast<std::size_t>(n), std::move(out));
  if (set.size() != static_cast<std::size_t>(k_of(n)))
    throw std::logic_error("construction1: size != k(n)");
  for (const auto& m : set.monomials())
    if (m.degree() != d) throw std::logic_error("construction1: non-uniform degree");
  return {std::move(set), std::move(rows)};
}

MonomialSet construction1(const ConstructionParams& params) {
  return construction1_detailed(params).set;
}

MonomialSet construction1_dropped(const ConstructionParams& params, std::int64_t m) {
  if (m < params.n + 1 || m > k_of(params.n))
    bad("dropped count m must satisfy n+1 <= m <= k(n), got m = " + std::to_string(m));
  auto full = construction1(params);
  std::vector<Monomial> kept(full.monomials().begin(),
                             full.monomials().begin() + static_cast<std::ptrdiff_t>(m));
  return MonomialSet(full.n(), std::move(kept));
}

MonomialSet e81_generators(std::int64_t d) {
  if (d < 3) bad("e81_generators: d must be >= 3");
  const std::int64_t m = d / 3, t = d % 3;
  const std::int64_t e0 = (d + 2) / 3;
  const std::int64_t e1 = (t == 2) ? m + 1 : m;
  const std::int64_t e2 = m;
  std::vector<Monomial> gens;
  gens.emplace_back(std::vector<std::int64_t>{d, 0, 0});
  gens.emplace_back(std::vector<std::int64_t>{0, d, 0});
  gens.emplace_back(std::vector<std::int64_t>{0, 0, d});
  gens.emplace_back(std::vector<std::int64_t>{e0, e1, e2});
  gens.emplace_back(std::vector<std::int64_t>{e2, 0, e0 + e1});
  gens.emplace_back(std::vector<std::int64_t>{0, e0 + e1, e2});
  gens.emplace_back(std::vector<std::int64_t>{0, e0, e1 + e2});
  MonomialSet s(2, std::move(gens));
  if (s.uniform_degree() != d) throw std::logic_error("e81_generators: degree mismatch");
  return s;
}

MonomialSet e91_generators(std::int64_t d) {
  if (d < 3) bad("e91_generators: d must be >= 3");
  const std::int64_t m = d / 3, t = d % 3;
  const std::int64_t i1 = m + std::min<std::int64_t>(1, t);
  const std::int64_t i2 = 2 * m + std::min<std::int64_t>(2, t);
  std::vector<Monomial> gens;
  gens.emplace_back(std::vector<std::int64_t>{d, 0, 0});
  gens.emplace_back(std::vector<std::int64_t>{0, d, 0});
  gens.emplace_back(std::vector<std::int64_t>{0, 0, d});
  gens.emplace_back(std::vector<std::int64_t>{i1, d - i1, 0});
  gens.emplace_back(std::vector<std::int64_t>{i2, d - i2, 0});
  gens.emplace_back(std::vector<std::int64_t>{d - i1, 0, i1});
  gens.emplace_back(std::vector<std::int64_t>{d - i2, 0, i2});
  gens.emplace_back(std::vector<std::int64_t>{0, i1, d - i1});
  gens.emplace_back(std::vector<std::int64_t>{0, i2, d - i2});
  MonomialSet s(2, std::move(gens));
  if (s.uniform_degree() != d) throw std::logic_error("e91_generators: degree mismatch");
  return s;
}

MonomialSet pure_powers(std::int64_t n, std::int64_t d) {
  check_nd(n, d, 1);
  std::vector<Monomial> gens;
  const std::size_t nv = static_cast<std::size_t>(n) + 1;
  for (std::size_t j = 0; j < nv; ++j) {
    std::vector<std::int64_t> e(nv, 0);
    e[j] = d;
    gens.emplace_back(std::move(e));
  }
  return MonomialSet(static_cast<std::size_t>(n), std::move(gens));
}

Integer p_n_of_d(std::int64_t n, std::int64_t d) {
  if (n < 1 || d < 0) bad("p_n_of_d: need n >= 1, d >= 0");
  Integer num = 1;
  for (std::int64_t i = 1; i <= n; ++i) num *= d + i;
  Integer den = 1;
  for (std::int64_t i = 1; i <= n; ++i) den *= i;
  return num / den;
}

} // namespace syz
