#include "syz/bundle.hpp"

#include "syz/constructions.hpp"

#include <stdexcept>

namespace syz {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

void check_class(const KernelBundleClass& e) {
  if (e.n < 1) bad("bundle class: n must be >= 1");
  if (e.b < 1 || e.a <= e.b) bad("bundle class: need a > b >= 1");
  if (e.d < 1) bad("bundle class: d must be positive");
}

void check_entries(const MonomialMatrix& m, std::int64_t n) {
  if (m.entries.size() != static_cast<std::size_t>(m.rows * m.cols))
    bad("matrix entry count mismatch");
  for (const auto& e : m.entries) {
    if (e.kind == MatrixEntry::Kind::Mono) {
      if (!e.monomial) bad("monomial entry without a monomial");
      if (e.monomial->degree() != m.d) bad("matrix entry of wrong degree");
      if (e.monomial->num_vars() != static_cast<std::size_t>(n) + 1)
        bad("matrix entry in wrong variable count");
    }
  }
}

void check_matrix(const MonomialMatrix& m, const KernelBundleClass& cls) {
  if (m.rows != cls.b || m.cols != cls.a) bad("matrix shape does not match the class");
  if (m.d != cls.d) bad("matrix degree does not match the class");
  check_entries(m, cls.n);
}

// Margin lower bound mu(E_{a,b}) - mu(W) as a linear form in d, shared by the
// displayed and derived variants; `displayed_sign` flips the quotient term.
LinearForm thm5_margin_impl(std::int64_t n, std::int64_t m, std::int64_t j, std::int64_t s,
                            std::int64_t l, bool displayed) {
  if (n < 2) bad("thm5 margin: n must be >= 2");
  if (m < 2) bad("thm5 margin: m must be >= 2");
  if (j < 1) bad("thm5 margin: j must be >= 1 (j = 0 is the direct-sum case)");
  if (s < 1 || l < 0 || l >= j) bad("thm5 margin: need s >= 1 and 0 <= l <= j-1");

  const std::int64_t b = s * j + l;
  const std::int64_t a = m * b - j;
  const std::int64_t a2 = m * ((j - 1) * s + l) - (j - 1);
  const std::int64_t b2 = (j - 1) * s + l;
  const std::int64_t r2p = j * ((m - 1) * s - 1) + l * (m - 1) - m * s + s + 2;
  if (r2p != a2 - b2 + 1)
    throw std::logic_error("thm5 margin: printed denominator != rank(E_{a2,b2}) + 1");
  if (r2p == 0) bad("thm5 margin: zero denominator");

  const Rational mu_e = slope_coefficient(a, b);
  const Rational quot = displayed ? Rational(-a2) : Rational(a2);
  LinearForm f;
  f.alpha = (quot - bound_B_coef(n)) / r2p + mu_e;
  f.beta = -bound_B_const(n) / r2p;
  return f;
}

} // namespace

Rational slope(const KernelBundleClass& e) {
  check_class(e);
  return make_rational(-e.a * e.d, e.a - e.b);
}

Rational slope_coefficient(std::int64_t a, std::int64_t b) {
  if (b < 1 || a <= b) bad("slope coefficient: need a > b >= 1");
  return make_rational(-a, a - b);
}

MonomialMatrix generic_matrix(std::int64_t b, std::int64_t a, std::int64_t d) {
  if (a < 1 || b < 1 || d < 1) bad("generic matrix: need positive a, b, d");
  MonomialMatrix m{b, a, d, {}};
  m.entries.assign(static_cast<std::size_t>(a * b), MatrixEntry::generic());
  return m;
}

PresentedBundle syzygy_presentation(const MonomialSet& s) {
  auto d = s.uniform_degree();
  if (!d) bad("syzygy presentation needs a uniform-degree set");
  KernelBundleClass cls{static_cast<std::int64_t>(s.n()),
                        static_cast<std::int64_t>(s.size()), 1, *d};
  check_class(cls);
  MonomialMatrix m{1, cls.a, *d, {}};
  for (const auto& g : s.monomials()) m.entries.push_back(MatrixEntry::mono(g));
  return {cls, std::move(m)};
}

PresentedBundle extend(const PresentedBundle& e1, const PresentedBundle& e2,
                       const std::optional<MonomialMatrix>& N) {
  check_class(e1.cls);
  check_class(e2.cls);
  check_matrix(e1.matrix, e1.cls);
  check_matrix(e2.matrix, e2.cls);
  if (e1.cls.n != e2.cls.n) bad("extend: mixed ambient dimensions");
  if (e1.cls.d != e2.cls.d) bad("extend: mixed degrees");

  const auto a1 = e1.cls.a, b1 = e1.cls.b, a2 = e2.cls.a, b2 = e2.cls.b;
  MonomialMatrix n_block = N ? *N : generic_matrix(b1, a2, e1.cls.d);
  if (n_block.rows != b1 || n_block.cols != a2)
    bad("extend: N must be b1 x a2 to fit the block layout");
  if (n_block.d != e1.cls.d) bad("extend: N degree mismatch");

  check_entries(n_block, e1.cls.n);

  KernelBundleClass cls{e1.cls.n, a1 + a2, b1 + b2, e1.cls.d};
  MonomialMatrix m{cls.b, cls.a, cls.d, {}};
  m.entries.assign(static_cast<std::size_t>(cls.a * cls.b), MatrixEntry::zero());
  for (std::int64_t r = 0; r < b1; ++r) {
    for (std::int64_t c = 0; c < a1; ++c) m.at(r, c) = e1.matrix.at(r, c);
    for (std::int64_t c = 0; c < a2; ++c) m.at(r, a1 + c) = n_block.at(r, c);
  }
  for (std::int64_t r = 0; r < b2; ++r)
    for (std::int64_t c = 0; c < a2; ++c) m.at(b1 + r, a1 + c) = e2.matrix.at(r, c);

  // Degree and rank additivity of the extension.
  if (-cls.a * cls.d != -a1 * e1.cls.d + -a2 * e2.cls.d)
    throw std::logic_error("extend: degree additivity failed");
  if ((cls.a - cls.b) != (a1 - b1) + (a2 - b2))
    throw std::logic_error("extend: rank additivity failed");
  return {cls, std::move(m)};
}

Decomposition decompose(std::int64_t a, std::int64_t b, std::int64_t n) {
  if (b < 1 || a <= b) bad("decompose: need a > b >= 1");
  if (n < 2) bad("decompose: n must be >= 2");
  Decomposition dec;
  dec.m = (a + b - 1) / b;
  dec.j = dec.m * b - a;
  dec.covered = dec.m >= 2 && dec.m <= k_of(n);
  if (dec.j >= 1) {
    dec.s = b / dec.j;
    dec.l = b % dec.j;
  }
  return dec;
}

Rational slope_ledger(const Rational& mu2, std::int64_t r2, const Rational& mu1,
                      std::int64_t r1) {
  if (r1 < 0 || r2 < 0) bad("slope ledger: negative rank");
  if (r1 + r2 == 0) bad("slope ledger: both ranks zero");
  return (mu2 * r2 + mu1 * r1) / (r1 + r2);
}

DThreshold min_d_linear(const Rational& alpha, const Rational& beta) {
  if (alpha > 0) {
    Integer d0 = floor_rational(-beta / alpha) + 1;
    if (d0 <= 1) return {DThreshold::Kind::AllD, 1};
    return {DThreshold::Kind::Threshold, static_cast<std::int64_t>(d0)};
  }
  if (alpha == 0 && beta > 0) return {DThreshold::Kind::AllD, 1};
  return {DThreshold::Kind::NoD, 0};
}

LinearForm thm5_margin_displayed(std::int64_t n, std::int64_t m, std::int64_t j, std::int64_t s,
                                 std::int64_t l) {
  return thm5_margin_impl(n, m, j, s, l, true);
}

LinearForm thm5_margin_derived(std::int64_t n, std::int64_t m, std::int64_t j, std::int64_t s,
                               std::int64_t l) {
  return thm5_margin_impl(n, m, j, s, l, false);
}

Thm4Threshold thm4_threshold_printed(std::int64_t n, std::int64_t b) {
  const std::int64_t num = 6 * b * n * n * n + 10 * b * n * n + 10 * b * n + 6 * b - 8 * n - 8;
  const std::int64_t den = b * n * n - 8 * b * n - b - 4;
  Thm4Threshold t;
  t.denominator_sign = den > 0 ? 1 : (den < 0 ? -1 : 0);
  if (den != 0) t.printed = make_rational(num, den);
  return t;
}

StabilityCertificate certify(std::int64_t a, std::int64_t b, std::int64_t n,
                             std::optional<std::int64_t> d) {
  if (b < 1 || a <= b) bad("certify: need a > b >= 1");
  if (n < 2) bad("certify: n must be >= 2");
  if (d && *d < 1) bad("certify: d must be positive");

  StabilityCertificate cert;
  cert.n = n;
  cert.a = a;
  cert.b = b;
  cert.d = d;
  cert.dec = decompose(a, b, n);
  cert.covered = cert.dec.covered;
  cert.mu_coef = slope_coefficient(a, b);
  cert.B_coef = bound_B_coef(n);
  cert.B_const = bound_B_const(n);

  if (!cert.covered) {
    cert.verdict = CertVerdict::NotCovered;
    cert.warnings.push_back("not covered: m = " + std::to_string(cert.dec.m) +
                            " exceeds k(" + std::to_string(n) + ") = " +
                            std::to_string(k_of(n)));
    if (a == 17 && b == 2 && n == 2)
      cert.warnings.push_back(
          "E_{17,2} on P^2 is handled by the explicit two-family extension pipeline "
          "(CLI: verify prop6)");
    if (d) cert.certified_at_d = false;
    return cert;
  }

  cert.thm4 = thm4_threshold_printed(n, b);
  if (cert.thm4.denominator_sign <= 0)
    cert.warnings.push_back(
        "headline threshold fraction has denominator sign " +
        std::to_string(cert.thm4.denominator_sign) +
        "; it is reported verbatim and is not the operative bound");

  const std::int64_t j = cert.dec.j;
  if (j == 0) {
    cert.verdict = CertVerdict::CoveredDirectSum;
    cert.warnings.push_back("a = m*b: direct sum of " + std::to_string(b) +
                            " copies of the syzygy class (" + std::to_string(cert.dec.m) +
                            ", 1); no degree threshold is derived for this reduction");
  } else {
    const std::int64_t s = *cert.dec.s;
    const std::int64_t l = *cert.dec.l;
    if (j >= 2 && l == 0) {
      // Direct sum of j copies of E_{ms-1, s}; the threshold is the summand's.
      cert.margin = thm5_margin_derived(n, cert.dec.m, 1, s, 0);
      cert.margin_displayed = thm5_margin_displayed(n, cert.dec.m, 1, s, 0);
      cert.verdict = CertVerdict::CoveredDirectSum;
      cert.warnings.push_back("b = s*j: direct sum of " + std::to_string(j) +
                              " copies of E_{" + std::to_string(cert.dec.m * s - 1) + "," +
                              std::to_string(s) + "}; margin and threshold are the summand's");
    } else {
      cert.margin = thm5_margin_derived(n, cert.dec.m, j, s, l);
      cert.margin_displayed = thm5_margin_displayed(n, cert.dec.m, j, s, l);
      cert.verdict = CertVerdict::SemistableForDGeq;
    }
    if (cert.margin_displayed->alpha != cert.margin->alpha && j >= 2)
      cert.warnings.push_back(
          "displayed margin expression differs from the derived one (sign of the "
          "quotient-class term); thresholds use the derived form");

    auto th = min_d_linear(cert.margin->alpha, cert.margin->beta);
    switch (th.kind) {
      case DThreshold::Kind::Threshold:
        cert.d0 = th.d0;
        break;
      case DThreshold::Kind::AllD:
        cert.d0 = 1;
        cert.warnings.push_back("margin positive for every d >= 1");
        break;
      case DThreshold::Kind::NoD:
        if (cert.verdict == CertVerdict::SemistableForDGeq)
          cert.verdict = CertVerdict::CoveredNoThreshold;
        cert.warnings.push_back(
            "margin is not eventually positive; the slope bound yields no threshold "
            "for this cell");
        break;
    }
  }
  if (d) cert.certified_at_d = cert.d0 && *d >= *cert.d0;
  return cert;
}

} // namespace syz
