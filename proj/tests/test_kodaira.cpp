#include "doctest.h"
#include "ellq/kodaira.hpp"

using namespace ellq;

namespace {

MultiPoly T() { return MultiPoly::variable("t", {"t"}); }

WeierstrassModel r_model() {
  MultiPoly t = T();
  return WeierstrassModel::simplified("t", 1 - 2 * t, t * t, MultiPoly());
}

// y^2 = x*(x^2 + (1-2t^n)*x + t^(2n)).
WeierstrassModel zn_model(int n) {
  MultiPoly t = T();
  return WeierstrassModel::simplified("t", 1 - 2 * t.pow(n), t.pow(2 * n),
                                      MultiPoly());
}

const LocalFiberData* find_entry(const FiberConfiguration& cfg,
                                 const std::string& place_str) {
  for (const auto& e : cfg.entries)
    if (e.place.str() == place_str) return &e;
  return nullptr;
}

}  // namespace

TEST_CASE("fiber type bookkeeping") {
  CHECK(FiberType::I(7).euler_number() == 7);
  CHECK(FiberType::I(7).component_count() == 7);
  CHECK(FiberType::I(7).component_group_order() == 7);
  CHECK(FiberType::Istar(3).euler_number() == 9);
  CHECK(FiberType::Istar(3).component_count() == 8);
  CHECK(FiberType::Istar(3).component_group_order() == 4);
  CHECK(FiberType::from_symbol("II*").euler_number() == 10);
  CHECK(FiberType::from_symbol("II*").component_count() == 9);
  CHECK(FiberType::from_symbol("IV*").component_group_order() == 3);
  for (const char* s : {"I_0", "I_13", "I*_0", "I*_8", "II", "III", "IV",
                        "IV*", "III*", "II*"})
    CHECK(FiberType::from_symbol(s).symbol() == s);
  CHECK_THROWS_AS(FiberType::from_symbol("V"), input_error);
  CHECK_THROWS_AS(FiberType::from_symbol("I_x"), input_error);
}

TEST_CASE("classification of the reference rational surface") {
  FiberConfiguration cfg = classify_all(r_model());
  REQUIRE(cfg.entries.size() == 3);

  const LocalFiberData* at0 = find_entry(cfg, "t");
  REQUIRE(at0 != nullptr);
  CHECK(at0->type == FiberType::I(4));
  CHECK(at0->v_c4 == 0);
  CHECK(at0->v_delta == 4);

  const LocalFiberData* quarter = find_entry(cfg, "t - 1/4");
  REQUIRE(quarter != nullptr);
  CHECK(quarter->type == FiberType::I(1));

  const LocalFiberData* inf = find_entry(cfg, "infinity");
  REQUIRE(inf != nullptr);
  CHECK(inf->type == FiberType::Istar(1));
  CHECK(inf->infinity_weight == 1);
  CHECK(inf->v_c4 == 2);
  CHECK(inf->v_c6 == 3);
  CHECK(inf->v_delta == 7);

  CHECK(cfg.euler_sum() == 12);
  CHECK(cfg.summary() == "I*_1 + I_4 + I_1");
}

TEST_CASE("even-order quotients keep multiplicative infinity") {
  FiberConfiguration cfg = classify_all(zn_model(2));
  CHECK(cfg.euler_sum() == 12);
  const LocalFiberData* at0 = find_entry(cfg, "t");
  REQUIRE(at0 != nullptr);
  CHECK(at0->type == FiberType::I(8));
  const LocalFiberData* inf = find_entry(cfg, "infinity");
  REQUIRE(inf != nullptr);
  CHECK(inf->type == FiberType::I(2));
  // 1 - 4t^2 is squarefree of degree 2: one place, two geometric points.
  const LocalFiberData* branch = find_entry(cfg, "t^2 - 1/4");
  REQUIRE(branch != nullptr);
  CHECK(branch->type == FiberType::I(1));
  CHECK(branch->point_count == 2);
  CHECK(cfg.type_multiset() ==
        std::vector<std::pair<std::string, int>>{{"I_1", 2}, {"I_2", 1},
                                                 {"I_8", 1}});
}

TEST_CASE("additive pairs IV and IV*") {
  MultiPoly t = T();
  WeierstrassModel m =
      WeierstrassModel::simplified("t", MultiPoly(), MultiPoly(), t * t);
  FiberConfiguration cfg = classify_all(m);
  REQUIRE(cfg.entries.size() == 2);
  CHECK(cfg.entries[0].type == FiberType{FiberClass::IV, 0});
  CHECK(cfg.entries[1].place.str() == "infinity");
  CHECK(cfg.entries[1].type == FiberType{FiberClass::IVstar, 0});
  CHECK(cfg.summary() == "IV* + IV");
}

TEST_CASE("non-minimal input is minimalized before classification") {
  MultiPoly t = T();
  // Rescaling the reference surface by t^2 inflates every fiber; the
  // classification must undo it.
  WeierstrassModel m = r_model();
  m.a2 = m.a2 * t.pow(2);
  m.a4 = m.a4 * t.pow(4);
  m.a6 = MultiPoly();
  FiberConfiguration cfg = classify_all(m);
  const LocalFiberData* at0 = find_entry(cfg, "t");
  REQUIRE(at0 != nullptr);
  CHECK(at0->type == FiberType::I(4));
  CHECK(at0->minimal_rescales == 1);
}

TEST_CASE("smooth surfaces have empty configurations") {
  MultiPoly t = T();
  // y^2 = x^3 + x + 1 is a constant smooth curve; no singular fibers, but
  // classify_all still works and reports e == 0.
  WeierstrassModel m = WeierstrassModel::simplified(
      "t", MultiPoly(), MultiPoly::constant(1, {"t"}),
      MultiPoly::constant(1, {"t"}));
  FiberConfiguration cfg = classify_all(m);
  CHECK(cfg.entries.empty());
  CHECK(cfg.euler_sum() == 0);
  (void)t;
}
