#include <doctest.h>

#include "syz/bundle.hpp"
#include "syz/constructions.hpp"

#include <stdexcept>
#include <vector>

using namespace syz;

namespace {

Rational rat(std::int64_t p, std::int64_t q) { return make_rational(p, q); }

} // namespace

TEST_CASE("slope of a kernel bundle class") {
  CHECK(slope({2, 17, 2, 30}) == rat(-34, 1));
  CHECK(slope({2, 17, 2, 15}) == rat(-17, 1));
  CHECK(slope({3, 29, 2, 217}) == rat(-29 * 217, 27));
  CHECK(slope_coefficient(17, 2) == rat(-17, 15));
  CHECK(slope_coefficient(8, 1) == rat(-8, 7));
  CHECK_THROWS_AS(slope({2, 2, 2, 5}), std::invalid_argument);
  CHECK_THROWS_AS(slope({2, 3, 0, 5}), std::invalid_argument);
  CHECK_THROWS_AS(slope({2, 3, 1, 0}), std::invalid_argument);
}

TEST_CASE("coverage decomposition") {
  Decomposition d = decompose(17, 2, 2);
  CHECK(d.m == 9);
  CHECK(d.j == 1);
  CHECK(!d.covered); // k(2) = 8 < 9

  d = decompose(15, 2, 2);
  CHECK(d.m == 8);
  CHECK(d.j == 1);
  CHECK(d.s == 2);
  CHECK(d.l == 0);
  CHECK(d.covered);

  d = decompose(16, 2, 2);
  CHECK(d.m == 8);
  CHECK(d.j == 0);
  CHECK(!d.s.has_value());
  CHECK(d.covered);

  d = decompose(29, 2, 3);
  CHECK(d.m == 15);
  CHECK(d.j == 1);
  CHECK(d.s == 2);
  CHECK(d.l == 0);
  CHECK(d.covered);

  d = decompose(58, 4, 3);
  CHECK(d.m == 15);
  CHECK(d.j == 2);
  CHECK(d.s == 2);
  CHECK(d.l == 0);
  CHECK(d.covered);

  CHECK_THROWS_AS(decompose(2, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(decompose(5, 2, 1), std::invalid_argument);
}

TEST_CASE("slope ledger recovers the extension slope") {
  // rank-7 piece at -8d/7 with rank-8 piece at -9d/8 gives -17d/15
  const std::int64_t d = 30;
  Rational mu1 = rat(-8 * d, 7), mu2 = rat(-9 * d, 8);
  CHECK(slope_ledger(mu2, 8, mu1, 7) == rat(-17 * d, 15));
  CHECK(slope_ledger(mu2, 8, mu1, 7) == slope({2, 17, 2, d}));
  CHECK(slope_ledger(rat(1, 1), 0, rat(5, 1), 3) == rat(5, 1));
  CHECK_THROWS_AS(slope_ledger(rat(1, 1), 0, rat(1, 1), 0), std::invalid_argument);
  CHECK_THROWS_AS(slope_ledger(rat(1, 1), -1, rat(1, 1), 2), std::invalid_argument);
}

TEST_CASE("syzygy presentation of a uniform set") {
  PresentedBundle pb = syzygy_presentation(e81_generators(30));
  CHECK(pb.cls.n == 2);
  CHECK(pb.cls.a == 7);
  CHECK(pb.cls.b == 1);
  CHECK(pb.cls.d == 30);
  CHECK(pb.matrix.rows == 1);
  CHECK(pb.matrix.cols == 7);
  CHECK(pb.matrix.at(0, 0).kind == MatrixEntry::Kind::Mono);
  MonomialSet mixed(1, {Monomial({2, 0}), Monomial({0, 1})});
  CHECK_THROWS_AS(syzygy_presentation(mixed), std::invalid_argument);
}

TEST_CASE("extension assembles the block presentation") {
  const std::int64_t d = 30;
  PresentedBundle e1{{2, 8, 1, d}, generic_matrix(1, 8, d)};
  PresentedBundle e2{{2, 9, 1, d}, generic_matrix(1, 9, d)};
  PresentedBundle ext = extend(e1, e2);
  CHECK(ext.cls.a == 17);
  CHECK(ext.cls.b == 2);
  CHECK(ext.cls.d == d);
  CHECK(slope(ext.cls) == rat(-17 * d, 15));
  CHECK(ext.matrix.rows == 2);
  CHECK(ext.matrix.cols == 17);
  // [[M1, N], [0, M2]]: bottom-left block is zero, top-right is the coupling.
  for (std::int64_t c = 0; c < 8; ++c)
    CHECK(ext.matrix.at(1, c).kind == MatrixEntry::Kind::Zero);
  for (std::int64_t c = 8; c < 17; ++c) {
    CHECK(ext.matrix.at(0, c).kind == MatrixEntry::Kind::GenericDegreeD);
    CHECK(ext.matrix.at(1, c).kind == MatrixEntry::Kind::GenericDegreeD);
  }

  // The coupling block N is b1 x a2.
  CHECK_NOTHROW(extend(e1, e2, generic_matrix(1, 9, d)));
  CHECK_THROWS_AS(extend(e1, e2, generic_matrix(9, 1, d)), std::invalid_argument);
  CHECK_THROWS_AS(extend(e1, e2, generic_matrix(1, 9, d + 1)), std::invalid_argument);

  // Stacking the concrete generator families lands on class (16, 2): the
  // seven-element family presents (7, 1), not (8, 1).
  PresentedBundle sm = extend(syzygy_presentation(e81_generators(d)),
                              syzygy_presentation(e91_generators(d)));
  CHECK(sm.cls.a == 16);
  CHECK(sm.cls.b == 2);

  PresentedBundle other{{3, 9, 1, d}, generic_matrix(1, 9, d)};
  CHECK_THROWS_AS(extend(e1, other), std::invalid_argument);
}

TEST_CASE("min_d_linear classifies linear margins") {
  CHECK(min_d_linear(rat(1, 1), rat(-5, 1)).kind == DThreshold::Kind::Threshold);
  CHECK(min_d_linear(rat(1, 1), rat(-5, 1)).d0 == 6);
  CHECK(min_d_linear(rat(1, 1), rat(-1, 1)).d0 == 2);
  CHECK(min_d_linear(rat(0, 1), rat(1, 1)).kind == DThreshold::Kind::AllD);
  CHECK(min_d_linear(rat(5, 1), rat(0, 1)).kind == DThreshold::Kind::AllD);
  CHECK(min_d_linear(rat(-1, 1), rat(0, 1)).kind == DThreshold::Kind::NoD);
  CHECK(min_d_linear(rat(0, 1), rat(0, 1)).kind == DThreshold::Kind::NoD);
  CHECK(min_d_linear(rat(0, 1), rat(-1, 1)).kind == DThreshold::Kind::NoD);
  CHECK(min_d_linear(rat(1, 351), rat(-8, 13)).d0 == 217);
}

TEST_CASE("induction margin at j = 1 reduces to mu(E) - B") {
  LinearForm f = thm5_margin_derived(3, 15, 1, 2, 0);
  CHECK(f.alpha == rat(1, 351));
  CHECK(f.beta == rat(-8, 13));
  CHECK(f.alpha == slope_coefficient(29, 2) - bound_B_coef(3));
  CHECK(f.beta == -bound_B_const(3));
  LinearForm g = thm5_margin_displayed(3, 15, 1, 2, 0);
  CHECK(g.alpha == f.alpha); // a2 = 0 at j = 1: both variants coincide
  CHECK(g.beta == f.beta);
  CHECK(f.at(216) == 0);
  CHECK(f.at(217) > 0);
}

TEST_CASE("induction margin at j >= 2: displayed sign flip is material") {
  // n=3, m=15, b=5 -> j=2, s=2, l=1; a2 = 44, rank denominator 42.
  LinearForm derived = thm5_margin_derived(3, 15, 2, 2, 1);
  LinearForm displayed = thm5_margin_displayed(3, 15, 2, 2, 1);
  CHECK(derived.alpha == rat(-5, 18564));
  CHECK(derived.beta == rat(-4, 273));
  CHECK(displayed.alpha == rat(-12967, 6188));
  CHECK(displayed.beta == derived.beta);
  CHECK(derived.alpha != displayed.alpha);
}

TEST_CASE("induction margin input validation") {
  CHECK_THROWS_AS(thm5_margin_derived(3, 15, 0, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(thm5_margin_derived(3, 15, 2, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(thm5_margin_derived(3, 15, 1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(thm5_margin_derived(1, 15, 1, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(thm5_margin_derived(3, 1, 1, 2, 0), std::invalid_argument);
}

TEST_CASE("headline threshold fraction is a diagnostic with a negative denominator") {
  Thm4Threshold t = thm4_threshold_printed(2, 2);
  CHECK(t.printed == rat(-34, 5));
  CHECK(t.denominator_sign == -1);
  t = thm4_threshold_printed(3, 2);
  CHECK(t.printed == rat(-136, 9));
  CHECK(t.denominator_sign == -1);
  for (std::int64_t n = 2; n <= 8; ++n)
    for (std::int64_t b = 1; b <= 10; ++b)
      CHECK(thm4_threshold_printed(n, b).denominator_sign == -1);
}

TEST_CASE("certificate: threshold cell (29,2) on P^3") {
  StabilityCertificate c = certify(29, 2, 3);
  CHECK(c.covered);
  CHECK(c.verdict == CertVerdict::SemistableForDGeq);
  CHECK(c.d0 == 217);
  REQUIRE(c.margin.has_value());
  CHECK(c.margin->alpha == rat(1, 351));
  CHECK(c.margin->beta == rat(-8, 13));
  CHECK(!c.certified_at_d.has_value());

  StabilityCertificate at216 = certify(29, 2, 3, 216);
  CHECK(at216.certified_at_d == false);
  StabilityCertificate at217 = certify(29, 2, 3, 217);
  CHECK(at217.certified_at_d == true);
}

TEST_CASE("certificate: the covered n=2 cells yield no threshold") {
  StabilityCertificate c = certify(15, 2, 2);
  CHECK(c.covered);
  CHECK(c.verdict == CertVerdict::CoveredNoThreshold);
  CHECK(!c.d0.has_value());
  REQUIRE(c.margin.has_value());
  CHECK(c.margin->alpha == rat(-3, 104)); // negative: margin never goes positive
  CHECK(c.margin->beta == rat(-3, 4));
}

TEST_CASE("certificate: direct-sum cells") {
  StabilityCertificate c = certify(16, 2, 2); // j = 0: b copies of (8, 1)
  CHECK(c.verdict == CertVerdict::CoveredDirectSum);
  CHECK(!c.d0.has_value());
  CHECK(!c.margin.has_value());

  StabilityCertificate c2 = certify(58, 4, 3); // j = 2, l = 0: two copies of (29, 2)
  CHECK(c2.verdict == CertVerdict::CoveredDirectSum);
  REQUIRE(c2.margin.has_value());
  CHECK(c2.margin->alpha == rat(1, 351));
  CHECK(c2.d0 == 217);
}

TEST_CASE("certificate: not-covered cell points at the extension pipeline") {
  StabilityCertificate c = certify(17, 2, 2);
  CHECK(!c.covered);
  CHECK(c.verdict == CertVerdict::NotCovered);
  bool mentions_prop6 = false;
  for (const auto& w : c.warnings)
    if (w.find("verify prop6") != std::string::npos) mentions_prop6 = true;
  CHECK(mentions_prop6);
}

TEST_CASE("threshold family on P^3: d0 follows the closed form") {
  // m = 15 = k(3), j = 1, a = 15b - 1: alpha = (b-1)/(13(14b-1)), beta = -8/13.
  for (std::int64_t b = 2; b <= 12; ++b) {
    StabilityCertificate c = certify(15 * b - 1, b, 3);
    REQUIRE(c.margin.has_value());
    CHECK(c.margin->alpha == make_rational(b - 1, 13 * (14 * b - 1)));
    CHECK(c.margin->beta == rat(-8, 13));
    const std::int64_t d0_expect =
        static_cast<std::int64_t>(floor_rational(rat(8 * (14 * b - 1), b - 1))) + 1;
    CHECK(c.d0 == d0_expect);
    CHECK(c.margin->at(*c.d0) > 0);
    CHECK(c.margin->at(*c.d0 - 1) <= 0);
  }
}
