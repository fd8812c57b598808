// Base change along tau -> tau^n.
//
// The substitution is ramified exactly over tau = 0 (index n, one
// preimage) and tau = infinity (likewise); every other place g(tau) of
// degree d is unramified with preimage place g(tau^n) of degree d*n.
//
// Over an unramified place the minimal Weierstrass data pulls back
// verbatim, so the fiber type is unchanged.  Over a ramification point
// the valuations of (c4, c6, Delta) scale by n and the model is then
// re-minimalized; working out the resulting Tate symbol for each type
// gives the classical transformation table implemented below.  For I*_m
// the computation v(Delta) = n(m+6) - 12*floor(n/2) already shows the
// parity split: odd n keeps the star, even n lands on I_{nm}.
#include "ellq/base_change.hpp"

#include <algorithm>
#include <cassert>

#include "ellq/univariate.hpp"

namespace ellq {

WeierstrassModel pullback_model(const WeierstrassModel& m, int n) {
  if (n < 1) throw input_error("base change degree must be positive");
  WeierstrassModel out = m;
  const std::string& v = m.base_var;
  out.a1 = m.a1.substitute_power(v, n);
  out.a2 = m.a2.substitute_power(v, n);
  out.a3 = m.a3.substitute_power(v, n);
  out.a4 = m.a4.substitute_power(v, n);
  out.a6 = m.a6.substitute_power(v, n);
  return out;
}

FiberType transform_ramified(const FiberType& f, int n) {
  if (n < 1) throw input_error("base change degree must be positive");
  switch (f.cls) {
    case FiberClass::I:
      return FiberType::I(n * f.m);
    case FiberClass::Istar:
      if (n % 2 == 1) return FiberType::Istar(n * f.m);
      return FiberType::I(n * f.m);
    case FiberClass::II:
      switch (n % 6) {
        case 1: return {FiberClass::II, 0};
        case 2: return {FiberClass::IV, 0};
        case 3: return FiberType::Istar(0);
        case 4: return {FiberClass::IVstar, 0};
        case 5: return {FiberClass::IIstar, 0};
        default: return FiberType::I(0);
      }
    case FiberClass::III:
      switch (n % 4) {
        case 1: return {FiberClass::III, 0};
        case 2: return FiberType::Istar(0);
        case 3: return {FiberClass::IIIstar, 0};
        default: return FiberType::I(0);
      }
    case FiberClass::IV:
      switch (n % 3) {
        case 1: return {FiberClass::IV, 0};
        case 2: return {FiberClass::IVstar, 0};
        default: return FiberType::I(0);
      }
    case FiberClass::IVstar:
      switch (n % 3) {
        case 1: return {FiberClass::IVstar, 0};
        case 2: return {FiberClass::IV, 0};
        default: return FiberType::I(0);
      }
    case FiberClass::IIIstar:
      switch (n % 4) {
        case 1: return {FiberClass::IIIstar, 0};
        case 2: return FiberType::Istar(0);
        case 3: return {FiberClass::III, 0};
        default: return FiberType::I(0);
      }
    case FiberClass::IIstar:
      switch (n % 6) {
        case 1: return {FiberClass::IIstar, 0};
        case 2: return {FiberClass::IVstar, 0};
        case 3: return FiberType::Istar(0);
        case 4: return {FiberClass::IV, 0};
        case 5: return {FiberClass::II, 0};
        default: return FiberType::I(0);
      }
  }
  throw math_error("unhandled fiber class in base change");
}

BaseChangeReport verify_base_change(const WeierstrassModel& m, int n) {
  BaseChangeReport report;
  report.n = n;
  report.original = classify_all(m);
  report.pullback = classify_all(pullback_model(m, n));

  const std::string& v = m.base_var;
  MultiPoly tau = MultiPoly::variable(v, {v});

  std::vector<bool> claimed(report.pullback.entries.size(), false);
  for (const LocalFiberData& entry : report.original.entries) {
    BaseChangeRow row;
    row.original_place = entry.place;
    row.original_type = entry.type;
    if (!entry.place.is_finite()) {
      row.ramified = true;
      row.predicted_place = Place::infinity(v).str();
      row.predicted_type = transform_ramified(entry.type, n);
      row.predicted_points = 1;
    } else if (entry.place.poly == tau) {
      row.ramified = true;
      row.predicted_place = entry.place.str();
      row.predicted_type = transform_ramified(entry.type, n);
      row.predicted_points = 1;
    } else {
      row.ramified = false;
      MultiPoly lifted = entry.place.poly.substitute_power(v, n);
      row.predicted_place = Place::finite(lifted, v).str();
      row.predicted_type = entry.type;
      row.predicted_points = n * entry.point_count;
    }

    bool expect_absent = row.predicted_type.is_smooth();
    row.observed = false;
    for (size_t i = 0; i < report.pullback.entries.size(); ++i) {
      const LocalFiberData& pe = report.pullback.entries[i];
      if (pe.place.str() != row.predicted_place) continue;
      row.observed = true;
      row.observed_type = pe.type;
      row.observed_points = pe.point_count;
      claimed[i] = true;
      break;
    }
    if (expect_absent) {
      row.match = !row.observed;
    } else {
      row.match = row.observed && row.observed_type == row.predicted_type &&
                  row.observed_points == row.predicted_points;
    }
    report.rows.push_back(row);
  }

  for (size_t i = 0; i < report.pullback.entries.size(); ++i)
    if (!claimed[i])
      report.unmatched.push_back(report.pullback.entries[i].place.str());

  report.verdict = report.unmatched.empty() &&
                   std::all_of(report.rows.begin(), report.rows.end(),
                               [](const BaseChangeRow& r) { return r.match; });
  return report;
}

}  // namespace ellq
