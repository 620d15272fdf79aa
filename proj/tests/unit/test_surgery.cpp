#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "ksl/surgery.hpp"
#include "ksl/torus_knot.hpp"

using namespace ksl;

TEST_CASE("slope normalization", "[surgery]") {
  Slope r(Int(-4), Int(-6));
  CHECK(r.p() == 2);
  CHECK(r.q() == 3);
  CHECK(Slope(Int(21)).is_integral());
  CHECK(Slope(7, 2).to_string() == "7/2");
  CHECK(Slope(Int(21)).to_string() == "21");
  CHECK_THROWS(Slope(Int(1), Int(0)));
}

TEST_CASE("lens space normalization", "[surgery]") {
  LensSpace l(Int(21), Int(25));
  CHECK(l.order() == 21);
  CHECK(l.param() == 4);
  CHECK(LensSpace(Int(1), Int(0)).is_sphere());
  CHECK(LensSpace(Int(5), Int(-1)).param() == 4);
  CHECK(l.to_string() == "L(21,4)");
  CHECK_THROWS(LensSpace(Int(6), Int(2)));
}

TEST_CASE("lens homeomorphism criterion", "[surgery]") {
  CHECK(lens_homeo_oriented(LensSpace(Int(21), Int(4)), LensSpace(Int(21), Int(16))));
  CHECK(lens_homeo_oriented(LensSpace(Int(7), Int(2)), LensSpace(Int(7), Int(2))));
  CHECK_FALSE(lens_homeo_oriented(LensSpace(Int(5), Int(1)), LensSpace(Int(5), Int(2))));
  CHECK_FALSE(lens_homeo_oriented(LensSpace(Int(5), Int(2)), LensSpace(Int(7), Int(2))));
}

TEST_CASE("lens homeomorphism is an equivalence on a generated corpus", "[surgery]") {
  std::vector<LensSpace> corpus;
  for (long p = 1; p <= 12; ++p)
    for (long q = 0; q < p; ++q) {
      if (p > 1 && gcd(Int(q), Int(p)) != 1) continue;
      corpus.emplace_back(Int(p), Int(q));
    }
  for (const auto& x : corpus) CHECK(lens_homeo_oriented(x, x));
  for (const auto& x : corpus)
    for (const auto& y : corpus) CHECK(lens_homeo_oriented(x, y) == lens_homeo_oriented(y, x));
  for (const auto& x : corpus)
    for (const auto& y : corpus)
      for (const auto& z : corpus)
        if (lens_homeo_oriented(x, y) && lens_homeo_oriented(y, z))
          CHECK(lens_homeo_oriented(x, z));
}

TEST_CASE("moser classification", "[surgery]") {
  const auto l45 = classify_torus_surgery(TorusKnot(4, 5), Slope(Int(21)));
  REQUIRE(l45.kind == SurgeryKind::Lens);
  REQUIRE(l45.lens.has_value());
  CHECK(*l45.lens == LensSpace(Int(21), Int(4)));

  const auto sum = classify_torus_surgery(TorusKnot(2, 3), Slope(Int(6)));
  REQUIRE(sum.kind == SurgeryKind::ConnectedSumOfLens);
  CHECK(sum.sum_order_a == 2);
  CHECK(sum.sum_order_b == 3);
  CHECK(sum.to_string() == "L(2,·)#L(3,·)");

  const auto l7 = classify_torus_surgery(TorusKnot(2, 3), Slope(Int(7)));
  REQUIRE(l7.kind == SurgeryKind::Lens);
  REQUIRE(l7.lens.has_value());
  CHECK(*l7.lens == LensSpace(Int(7), Int(2)));

  CHECK(classify_torus_surgery(TorusKnot(3, 4), Slope(Int(5))).kind ==
        SurgeryKind::SmallSeifert);
  CHECK(classify_torus_surgery(TorusKnot(2, 3), Slope(Int(0), Int(1))).kind ==
        SurgeryKind::ZeroFilling);

  // fractional lens slope: order known, parameters not asserted
  const auto frac = classify_torus_surgery(TorusKnot(2, 3), Slope(Int(13), Int(2)));
  REQUIRE(frac.kind == SurgeryKind::Lens);
  CHECK_FALSE(frac.lens.has_value());
  CHECK(frac.lens_order == 13);
  CHECK(frac.to_string() == "L(13,·)");

  CHECK_THROWS_AS(classify_torus_surgery(TorusKnot(1, 5), Slope(Int(3))),
                  std::invalid_argument);
}

TEST_CASE("negative torus knots classify through the signed product", "[surgery]") {
  // For T(-2,3) the reducible slope is -6 and -7 gives a lens space.
  CHECK(classify_torus_surgery(TorusKnot(-2, 3), Slope(Int(-6))).kind ==
        SurgeryKind::ConnectedSumOfLens);
  const auto l = classify_torus_surgery(TorusKnot(-2, 3), Slope(Int(-7)));
  REQUIRE(l.kind == SurgeryKind::Lens);
  CHECK(l.lens_order == 7);
  CHECK(classify_torus_surgery(TorusKnot(-2, 3), Slope(Int(7))).kind ==
        SurgeryKind::SmallSeifert);
}

TEST_CASE("casson correction", "[surgery]") {
  CHECK(casson_correction(Int(1), Slope(Int(6))) == make_rat(Int(1), Int(6)));
  CHECK(casson_correction(Int(0), Slope(Int(5), Int(2))) == 0);
  CHECK(casson_correction(Int(15), Slope(Int(21))) == make_rat(Int(5), Int(7)));
  CHECK(casson_correction(TorusKnot(4, 5).delta_dd_half(), Slope(Int(21))) ==
        casson_correction(TorusKnot(2, 11).delta_dd_half(), Slope(Int(21))));
  CHECK_THROWS_AS(casson_correction(Int(3), Slope(Int(0), Int(1))), DivisionByZeroSlope);
}

TEST_CASE("zero surgery comparison", "[surgery]") {
  CHECK(zero_surgery_torus_compare(TorusKnot(2, 3), TorusKnot(2, 3)) ==
        ZeroSurgeryVerdict::Same);
  CHECK(zero_surgery_torus_compare(TorusKnot(2, 3), TorusKnot(-2, 3)) ==
        ZeroSurgeryVerdict::SignatureDistinct);
  CHECK(zero_surgery_torus_compare(TorusKnot(4, 5), TorusKnot(2, 11)) ==
        ZeroSurgeryVerdict::AlexanderDistinct);
  CHECK_THROWS(zero_surgery_torus_compare(TorusKnot(1, 5), TorusKnot(2, 3)));
}

TEST_CASE("satellite delta dd", "[surgery]") {
  CHECK(satellite_delta_dd(Int(7), Int(9), Int(0)) == 7);
  CHECK(satellite_delta_dd(Int(0), Int(1), Int(2)) == 4);
  CHECK(satellite_delta_dd(Int(2), Int(1), Int(3)) == 11);
  CHECK_THROWS(satellite_delta_dd(Int(1), Int(1), Int(-1)));
}

TEST_CASE("pattern zero surgery homology", "[surgery]") {
  const auto w1 = pattern_zero_surgery_homology(Int(1));
  CHECK(w1.free_rank == 1);
  CHECK(w1.torsion_order == 1);
  CHECK(w1.embeddable);

  const auto w3 = pattern_zero_surgery_homology(Int(3));
  CHECK(w3.free_rank == 1);
  CHECK(w3.torsion_order == 3);
  CHECK_FALSE(w3.embeddable);

  const auto w0 = pattern_zero_surgery_homology(Int(0));
  CHECK(w0.free_rank == 2);
  CHECK(w0.torsion_order == 0);
  CHECK_FALSE(w0.embeddable);
}

TEST_CASE("cable signature", "[surgery]") {
  CHECK(cable_signature(Int(-2), Int(-2), Int(2)) == -2);
  CHECK(cable_signature(Int(-2), Int(-2), Int(3)) == -4);
  CHECK(cable_signature(Int(0), Int(-6), Int(2)) == 0);
  CHECK_THROWS(cable_signature(Int(-2), Int(0), Int(1)));
}

TEST_CASE("satellite exclusion", "[surgery]") {
  CHECK(satellite_lspace_exclusion(1).empty());
  CHECK(satellite_lspace_exclusion(5).empty());
  CHECK(satellite_lspace_exclusion(100).empty());
  CHECK_THROWS(satellite_lspace_exclusion(0));
}
