#include "doctest.h"
#include "ellq/poly.hpp"
#include "property_checks.hpp"

using namespace ellq;

TEST_CASE("rational helpers") {
  CHECK(rat_str(make_rat(4, -6)) == "-2/3");
  CHECK(parse_rat("-8/12") == make_rat(-2, 3));
  CHECK(rat_is_integer(make_rat(6, 3)));
  CHECK(*rat_sqrt(make_rat(9, 4)) == make_rat(3, 2));
  CHECK(!rat_sqrt(make_rat(2, 1)).has_value());
  CHECK(!rat_sqrt(make_rat(-4, 1)).has_value());
  CHECK(rat_pow(make_rat(2, 3), 3) == make_rat(8, 27));
  CHECK(rat_mod(make_rat(7, 2), 2) == make_rat(3, 2));
  CHECK(rat_mod(make_rat(-1, 2), 1) == make_rat(1, 2));
  CHECK_THROWS_AS(make_rat(1, 0), math_error);
  CHECK_THROWS_AS(parse_rat("1/0"), input_error);
}

TEST_CASE("polynomial arithmetic") {
  VarList xy = {"x", "y"};
  MultiPoly x = MultiPoly::variable("x", xy);
  MultiPoly y = MultiPoly::variable("y", xy);
  MultiPoly p = (x + y).pow(2);
  CHECK(p == x * x + 2 * x * y + y * y);
  CHECK(p.total_degree() == 2);
  CHECK(p.degree_in("x") == 2);
  CHECK((p - p).is_zero());
  CHECK(p.exact_div(x + y) == x + y);
  CHECK(!p.try_exact_div(x + 1).has_value());
  CHECK_THROWS_AS(p.exact_div(MultiPoly()), math_error);
  CHECK(p.derivative("x") == 2 * (x + y));
  CHECK((x * y - y).specialize({{"y", Rat(3)}}) == 3 * x - 3);
  CHECK((x * x + y).eval({{"x", Rat(2)}, {"y", make_rat(1, 2)}}) ==
        make_rat(9, 2));
}

TEST_CASE("context merging") {
  MultiPoly x1 = MultiPoly::variable("x", {"x", "t"});
  MultiPoly t2 = MultiPoly::variable("t", {"t"});
  MultiPoly sum = x1 + t2;  // shared name 't' in compatible order
  CHECK(sum.vars() == VarList{"x", "t"});
  MultiPoly bad = MultiPoly::variable("t", {"t", "x"});
  CHECK_THROWS_AS(x1 + bad, math_error);
}

TEST_CASE("parser and printer") {
  VarList vars = {"x", "y", "t"};
  MultiPoly p = parse_poly("(x + 1/2)^2 - y*t^3", vars);
  MultiPoly x = MultiPoly::variable("x", vars);
  MultiPoly y = MultiPoly::variable("y", vars);
  MultiPoly t = MultiPoly::variable("t", vars);
  CHECK(p == x * x + x + MultiPoly::constant(make_rat(1, 4), vars) -
                 y * t.pow(3));
  CHECK(parse_poly("-t^2 + 3", vars).to_string() == "-t^2 + 3");
  CHECK(parse_poly("0", vars).to_string() == "0");
  CHECK(MultiPoly::constant(make_rat(-3, 4), vars).to_string() == "-3/4");
  CHECK((x * y * y - 3 * t).to_string() == "x*y^2 - 3*t");

  CHECK_THROWS_AS(parse_poly("x + w", vars), input_error);
  CHECK_THROWS_AS(parse_poly("x^-2", vars), input_error);
  CHECK_THROWS_AS(parse_poly("x +", vars), input_error);
  CHECK_THROWS_AS(parse_poly("(x", vars), input_error);
  CHECK_THROWS_AS(parse_poly("x/2", vars), input_error);

  CHECK(scan_identifiers("w1^2 - w2*w1 + 3*u") ==
        std::vector<std::string>{"w1", "w2", "u"});
}

TEST_CASE("power substitutions") {
  VarList vt = {"t"};
  MultiPoly t = MultiPoly::variable("t", vt);
  MultiPoly p = t * t + 2 * t + 1;
  CHECK(p.substitute_power("t", 3) == t.pow(6) + 2 * t.pow(3) + 1);

  VarList vu = {"t", "u"};
  MultiPoly u = MultiPoly::variable("u", vu);
  MultiPoly q = parse_poly("t^5 + t^2", vu);
  CHECK(q.reduce_power_relation("t", 2, u) ==
        parse_poly("u^2*t + u", vu));

  // p(1/s) cleared: t -> 1/s multiplies by s^deg.
  VarList vs = {"s"};
  MultiPoly s = MultiPoly::variable("s", vs);
  MultiPoly cleared = p.substitute_rational(
      {{"t", {MultiPoly::constant(1, vs), s}}});
  CHECK(cleared == s * s + 2 * s + 1);
}

TEST_CASE("round-trip property (randomized)") {
  CHECK(testutil::check_roundtrip_property(20260814u, 1000) == "");
}
