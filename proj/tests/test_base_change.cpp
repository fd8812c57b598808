#include "doctest.h"
#include "ellq/base_change.hpp"
#include "ellq/surface.hpp"

using namespace ellq;

namespace {

WeierstrassModel r_model() {
  MultiPoly t = MultiPoly::variable("t", {"t"});
  return WeierstrassModel::simplified("t", 1 - 2 * t, t * t, MultiPoly());
}

WeierstrassModel z_model(int n) {
  MultiPoly t = MultiPoly::variable("t", {"t"});
  return WeierstrassModel::simplified("t", 1 - 2 * t.pow(n), t.pow(2 * n),
                                      MultiPoly());
}

}  // namespace

TEST_CASE("ramified transformation table") {
  CHECK(transform_ramified(FiberType::I(3), 4) == FiberType::I(12));
  CHECK(transform_ramified(FiberType::Istar(1), 3) == FiberType::Istar(3));
  CHECK(transform_ramified(FiberType::Istar(1), 2) == FiberType::I(2));
  CHECK(transform_ramified(FiberType::Istar(0), 2) == FiberType::I(0));
  CHECK(transform_ramified(FiberType::Istar(0), 5) == FiberType::Istar(0));

  FiberType II{FiberClass::II, 0};
  CHECK(transform_ramified(II, 2) == FiberType{FiberClass::IV, 0});
  CHECK(transform_ramified(II, 3) == FiberType::Istar(0));
  CHECK(transform_ramified(II, 5) == FiberType{FiberClass::IIstar, 0});
  CHECK(transform_ramified(II, 6) == FiberType::I(0));

  FiberType III{FiberClass::III, 0};
  CHECK(transform_ramified(III, 3) == FiberType{FiberClass::IIIstar, 0});
  CHECK(transform_ramified(III, 4) == FiberType::I(0));

  CHECK(transform_ramified(FiberType{FiberClass::IVstar, 0}, 2) ==
        FiberType{FiberClass::IV, 0});
  CHECK(transform_ramified(FiberType{FiberClass::IIstar, 0}, 4) ==
        FiberType{FiberClass::IV, 0});
  CHECK(transform_ramified(FiberType{FiberClass::IIIstar, 0}, 2) ==
        FiberType::Istar(0));
}

TEST_CASE("pullback of the base model is the degree-n family member") {
  WeierstrassModel pb = pullback_model(r_model(), 3);
  WeierstrassModel z3 = z_model(3);
  CHECK(pb.a2 == z3.a2);
  CHECK(pb.a4 == z3.a4);
  CHECK(pb.a6 == z3.a6);
}

TEST_CASE("degree-1 base change is the identity") {
  BaseChangeReport rep = verify_base_change(r_model(), 1);
  CHECK(rep.verdict);
  CHECK(rep.pullback.summary() == rep.original.summary());
}

TEST_CASE("quadratic base change of the extremal rational surface") {
  BaseChangeReport rep = verify_base_change(r_model(), 2);
  REQUIRE(rep.verdict);
  CHECK(rep.pullback.summary() == "I_8 + I_2 + 2 I_1");
  CHECK(rep.pullback.euler_sum() == 12);

  for (const BaseChangeRow& row : rep.rows) {
    if (!row.original_place.is_finite()) {
      // I*_1 over infinity collapses to I_2 under an even-degree cover.
      CHECK(row.ramified);
      CHECK(row.predicted_type == FiberType::I(2));
    } else if (row.original_type == FiberType::I(4)) {
      CHECK(row.ramified);
      CHECK(row.predicted_type == FiberType::I(8));
    } else {
      CHECK_FALSE(row.ramified);
      CHECK(row.predicted_place == "t^2 - 1/4");
      CHECK(row.predicted_points == 2);
    }
  }
}

TEST_CASE("cubic base change gives a K3 surface") {
  BaseChangeReport rep = verify_base_change(r_model(), 3);
  REQUIRE(rep.verdict);
  CHECK(rep.pullback.euler_sum() == 24);
  CHECK(surface_invariants(rep.pullback).cls == SurfaceClass::K3);
  CHECK(rep.pullback.summary() == "I_12 + I*_3 + 3 I_1");
}

TEST_CASE("prediction matches reclassification through degree 8") {
  for (int n = 1; n <= 8; ++n) {
    BaseChangeReport rep = verify_base_change(r_model(), n);
    CHECK_MESSAGE(rep.verdict, "degree ", n);
    CHECK(rep.pullback.euler_sum() % 12 == 0);
  }
}

TEST_CASE("composite pullback agrees with the family member") {
  FiberConfiguration via_pullback =
      classify_all(pullback_model(z_model(3), 2));
  FiberConfiguration direct = classify_all(z_model(6));
  REQUIRE(via_pullback.entries.size() == direct.entries.size());
  for (size_t i = 0; i < direct.entries.size(); ++i) {
    CHECK(via_pullback.entries[i].place == direct.entries[i].place);
    CHECK(via_pullback.entries[i].type == direct.entries[i].type);
    CHECK(via_pullback.entries[i].point_count ==
          direct.entries[i].point_count);
  }
}

TEST_CASE("additive fibers rotate through their family") {
  // y^2 = x^3 + t has II at t = 0 and II* at infinity.
  MultiPoly t = MultiPoly::variable("t", {"t"});
  WeierstrassModel m =
      WeierstrassModel::simplified("t", MultiPoly(), MultiPoly(), t);
  FiberConfiguration cfg = classify_all(m);
  REQUIRE(cfg.summary() == "II* + II");

  BaseChangeReport rep2 = verify_base_change(m, 2);
  CHECK(rep2.verdict);
  CHECK(rep2.pullback.summary() == "IV* + IV");

  BaseChangeReport rep3 = verify_base_change(m, 3);
  CHECK(rep3.verdict);
  CHECK(rep3.pullback.summary() == "2 I*_0");

  // Degree 6 trivializes both fibers: y^2 = x^3 + t^6 is smooth
  // everywhere after rescaling.
  BaseChangeReport rep6 = verify_base_change(m, 6);
  CHECK(rep6.verdict);
  CHECK(rep6.pullback.entries.empty());
}

TEST_CASE("rejects nonsense degrees") {
  CHECK_THROWS_AS(pullback_model(r_model(), 0), input_error);
  CHECK_THROWS_AS(transform_ramified(FiberType::I(1), -2), input_error);
}
