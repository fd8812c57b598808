#include "doctest.h"
#include "ellq/surface.hpp"

using namespace ellq;

namespace {

WeierstrassModel r_model() {
  MultiPoly t = MultiPoly::variable("t", {"t"});
  return WeierstrassModel::simplified("t", 1 - 2 * t, t * t, MultiPoly());
}

}  // namespace

TEST_CASE("surface invariants from the Euler number") {
  FiberConfiguration cfg = classify_all(r_model());
  SurfaceInvariants inv = surface_invariants(cfg);
  CHECK(inv.euler == 12);
  CHECK(inv.chi == 1);
  CHECK(inv.p_g == 0);
  CHECK(inv.h11 == 10);
  CHECK(inv.rho_max == 10);
  CHECK(inv.cls == SurfaceClass::Rational);
  CHECK(surface_class_name(inv.cls) == "rational");
}

TEST_CASE("Shioda-Tate rank") {
  FiberConfiguration cfg = classify_all(r_model());
  // I_4 has 3 non-identity components, I*_1 has 5, I_1 has none; with
  // rho = 10 the sections contribute rank 10 - 2 - 8 = 0.
  CHECK(shioda_tate_rank(cfg, 10) == 0);
  CHECK_THROWS_AS(shioda_tate_rank(cfg, 9), math_error);
}

TEST_CASE("component group arithmetic") {
  FiberType i5 = FiberType::I(5);
  CHECK(group_order(i5) == 5);
  CHECK(elem_add(i5, 3, 4) == 2);
  CHECK(elem_order(i5, 2) == 5);
  CHECK(elem_contribution(i5, 1) == make_rat(4, 5));
  CHECK(elem_contribution(i5, 2) == make_rat(6, 5));
  CHECK(elem_label(i5, 2) == "Theta_2");

  FiberType istar1 = FiberType::Istar(1);  // odd: cyclic of order 4
  CHECK(group_order(istar1) == 4);
  CHECK(elem_add(istar1, 1, 1) == 2);
  CHECK(elem_order(istar1, 1) == 4);
  CHECK(elem_label(istar1, 2) == "near");
  CHECK(elem_label(istar1, 1) == "far_1");
  CHECK(elem_contribution(istar1, 2) == 1);
  CHECK(elem_contribution(istar1, 1) == make_rat(5, 4));

  FiberType istar2 = FiberType::Istar(2);  // even: Klein four group
  CHECK(elem_add(istar2, 1, 2) == 3);
  CHECK(elem_add(istar2, 3, 3) == 0);
  CHECK(elem_order(istar2, 3) == 2);
  CHECK(elem_label(istar2, 1) == "near");
  CHECK(elem_contribution(istar2, 1) == 1);
  CHECK(elem_contribution(istar2, 2) == make_rat(3, 2));

  CHECK(elem_contribution(FiberType{FiberClass::IIIstar, 0}, 1) ==
        make_rat(3, 2));
  CHECK(elem_contribution(FiberType{FiberClass::IVstar, 0}, 2) ==
        make_rat(4, 3));
  CHECK(group_order(FiberType{FiberClass::IIstar, 0}) == 1);
}

TEST_CASE("torsion feasibility on the extremal rational surface") {
  FiberConfiguration cfg = classify_all(r_model());
  TorsionReport report = torsion_feasibility(cfg, 1);
  CHECK(report.target == 2);
  CHECK(report.feasible_cyclic_orders == std::vector<int>{2, 4});
  CHECK(report.verdict == std::vector<int>{4});
  CHECK(report.two_torsion_count == 1);
  CHECK(report.unique_two_torsion);

  // The order-4 witness passes through a far component of I*_1 and a
  // near-end component of I_4.
  const TorsionWitness& w = report.witnesses.at(4);
  CHECK(w.order == 4);
  REQUIRE(w.elems.size() == cfg.entries.size());
  for (size_t i = 0; i < cfg.entries.size(); ++i) {
    if (cfg.entries[i].type == FiberType::I(4))
      CHECK((w.elems[i] == 1 || w.elems[i] == 3));
    if (cfg.entries[i].type == FiberType::Istar(1))
      CHECK((w.labels[i] == "far_1" || w.labels[i] == "far_2"));
  }

  // No group beyond Z/4: in particular no Z/2 x Z/2.
  for (const auto& g : report.feasible_groups) CHECK(g.size() == 1);
}

TEST_CASE("modularity criteria") {
  FiberConfiguration cfg = classify_all(r_model());
  ModularityCriteria crit = modularity_criteria(cfg, 0, false);
  CHECK(crit.extremal);
  CHECK(crit.no_star_obstruction);
  CHECK(crit.j_nonconstant);
  CHECK(crit.verdict);

  CHECK_FALSE(modularity_criteria(cfg, 1, false).verdict);
  CHECK_FALSE(modularity_criteria(cfg, 0, true).verdict);

  // II* blocks modularity regardless of rank.
  MultiPoly t = MultiPoly::variable("t", {"t"});
  WeierstrassModel m =
      WeierstrassModel::simplified("t", MultiPoly(), MultiPoly(), t.pow(5));
  FiberConfiguration cfg2 = classify_all(m);
  bool has_star = false;
  for (const auto& e : cfg2.entries)
    has_star |= e.type.cls == FiberClass::IIstar ||
                e.type.cls == FiberClass::IIIstar;
  CHECK(has_star);
  CHECK_FALSE(modularity_criteria(cfg2, 0, false).no_star_obstruction);
}
