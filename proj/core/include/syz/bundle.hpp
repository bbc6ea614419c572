#pragma once

#include "syz/monomial.hpp"
#include "syz/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace syz {

/// Numerical class of a kernel bundle: ker(O(-d)^a -> O^b) on P^n.
/// rank = a - b, degree = -a*d, slope = -a*d/(a-b).
struct KernelBundleClass {
  std::int64_t n;
  std::int64_t a;
  std::int64_t b;
  std::int64_t d;
};

/// -a*d/(a-b). Throws std::invalid_argument unless a > b >= 1, d >= 1.
Rational slope(const KernelBundleClass& e);

/// The d-coefficient -a/(a-b) of the slope.
Rational slope_coefficient(std::int64_t a, std::int64_t b);

/// Entry of a presentation matrix: zero, a generic degree-d form
/// placeholder, or a concrete monomial of degree d.
struct MatrixEntry {
  enum class Kind { Zero, GenericDegreeD, Mono } kind = Kind::GenericDegreeD;
  std::optional<Monomial> monomial; ///< set iff kind == Mono

  static MatrixEntry zero() { return {Kind::Zero, std::nullopt}; }
  static MatrixEntry generic() { return {Kind::GenericDegreeD, std::nullopt}; }
  static MatrixEntry mono(Monomial m) { return {Kind::Mono, std::move(m)}; }
};

/// b x a presentation matrix of degree-d forms (row-major).
struct MonomialMatrix {
  std::int64_t rows = 0; ///< b
  std::int64_t cols = 0; ///< a
  std::int64_t d = 0;
  std::vector<MatrixEntry> entries;

  MatrixEntry& at(std::int64_t r, std::int64_t c) {
    return entries[static_cast<std::size_t>(r * cols + c)];
  }
  const MatrixEntry& at(std::int64_t r, std::int64_t c) const {
    return entries[static_cast<std::size_t>(r * cols + c)];
  }
};

/// All-generic b x a matrix.
MonomialMatrix generic_matrix(std::int64_t b, std::int64_t a, std::int64_t d);

struct PresentedBundle {
  KernelBundleClass cls;
  MonomialMatrix matrix;
};

/// Syzygy-bundle presentation (b = 1) of a uniform-degree monomial set.
PresentedBundle syzygy_presentation(const MonomialSet& s);

/// Extension composition: stacks presentations into the block matrix
/// [[M1, N], [0, M2]] of shape (b1+b2) x (a1+a2), giving the class
/// (a1+a2, b1+b2). The off-diagonal block N couples the second summand's
/// columns to the first summand's rows, so it is b1 x a2 (the source's
/// a1 x b2 does not fit the displayed block layout). When absent, N is
/// filled with generic degree-d placeholders. Degree and rank additivity
/// are checked. Throws std::invalid_argument on shape or degree mismatch.
PresentedBundle extend(const PresentedBundle& e1, const PresentedBundle& e2,
                       const std::optional<MonomialMatrix>& N = std::nullopt);

/// Coverage decomposition a = m*b - j with m = ceil(a/b), 0 <= j <= b-1,
/// plus b = s*j + l (0 <= l <= j-1) when j >= 1.
struct Decomposition {
  std::int64_t m = 0;
  std::int64_t j = 0;
  std::optional<std::int64_t> s; ///< set iff j >= 1
  std::optional<std::int64_t> l; ///< set iff j >= 1
  bool covered = false;          ///< 2 <= m <= k_of(n)
};

/// pre: a > b >= 1, n >= 2. Total: NotCovered is the covered=false value.
Decomposition decompose(std::int64_t a, std::int64_t b, std::int64_t n);

/// Slope of an extension from the slopes and ranks of its pieces:
/// (mu2*r2 + mu1*r1)/(r1 + r2). Throws std::invalid_argument when both
/// ranks are zero or either is negative.
Rational slope_ledger(const Rational& mu2, std::int64_t r2, const Rational& mu1,
                      std::int64_t r1);

/// A linear-in-d quantity alpha*d + beta.
struct LinearForm {
  Rational alpha;
  Rational beta;

  Rational at(std::int64_t d) const { return alpha * d + beta; }
};

struct DThreshold {
  enum class Kind { AllD, NoD, Threshold } kind;
  std::int64_t d0 = 0; ///< meaningful for Threshold; AllD reports d0 = 1
};

/// Smallest positive integer d with alpha*d + beta > 0 for ALL larger d:
/// AllD when already positive at d = 1 and alpha >= 0; Threshold when
/// alpha > 0; NoD when alpha < 0 (eventually negative) or never positive.
DThreshold min_d_linear(const Rational& alpha, const Rational& beta);

/// The margin mu(E_{a,b}) - mu(W) lower bound of the induction step, as a
/// linear form in d, for the decomposition (m, j, s, l) on P^n with j >= 1.
/// `displayed` evaluates the source expression verbatim; its first-term
/// numerator carries -a2 where the derivation of the same page yields +a2
/// (a2 = m((j-1)s+l) - (j-1) is the quotient bundle's a; the two coincide
/// exactly when j = 1, where a2 = 0 and the margin reduces to mu(E) - B).
/// The derived form is the operative one.
LinearForm thm5_margin_displayed(std::int64_t n, std::int64_t m, std::int64_t j,
                                 std::int64_t s, std::int64_t l);
LinearForm thm5_margin_derived(std::int64_t n, std::int64_t m, std::int64_t j, std::int64_t s,
                               std::int64_t l);

/// The headline threshold fraction (6bn^3+10bn^2+10bn+6b-8n-8)/(bn^2-8bn-b-4)
/// with its denominator sign: negative for every n <= 8, so it cannot be the
/// operative bound; reported as a diagnostic only.
struct Thm4Threshold {
  std::optional<Rational> printed; ///< nullopt if the denominator vanishes
  int denominator_sign = 0;
};
Thm4Threshold thm4_threshold_printed(std::int64_t n, std::int64_t b);

enum class CertVerdict {
  NotCovered,
  SemistableForDGeq,   ///< margin eventually positive; d0 is the threshold
  CoveredDirectSum,    ///< reduces to a direct sum of equal-slope summands
  CoveredNoThreshold,  ///< covered, but the bound machinery yields no d0
};

struct StabilityCertificate {
  std::int64_t n, a, b;
  std::optional<std::int64_t> d; ///< echo of the query degree, if given
  bool covered = false;
  Decomposition dec;
  Rational mu_coef;              ///< -a/(a-b)
  Rational B_coef, B_const;      ///< B(n,d) = B_coef*d + B_const
  std::optional<LinearForm> margin;           ///< derived (operative)
  std::optional<LinearForm> margin_displayed; ///< source expression verbatim
  std::optional<std::int64_t> d0;             ///< semistable for all d >= d0
  CertVerdict verdict = CertVerdict::NotCovered;
  std::optional<bool> certified_at_d;         ///< d >= d0, when d was given
  Thm4Threshold thm4;                         ///< diagnostic, covered cells
  std::vector<std::string> warnings;
};

/// Coverage + exact threshold certificate for E_{a,b} on P^n.
/// pre: a > b >= 1, n >= 2.
StabilityCertificate certify(std::int64_t a, std::int64_t b, std::int64_t n,
                             std::optional<std::int64_t> d = std::nullopt);

} // namespace syz
