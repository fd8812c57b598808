#include "ellq/kodaira.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace ellq {

int FiberType::euler_number() const {
  switch (cls) {
    case FiberClass::I: return m;
    case FiberClass::Istar: return m + 6;
    case FiberClass::II: return 2;
    case FiberClass::III: return 3;
    case FiberClass::IV: return 4;
    case FiberClass::IVstar: return 8;
    case FiberClass::IIIstar: return 9;
    case FiberClass::IIstar: return 10;
  }
  throw math_error("unreachable fiber class");
}

int FiberType::component_count() const {
  switch (cls) {
    case FiberClass::I: return std::max(m, 1);
    case FiberClass::Istar: return m + 5;
    case FiberClass::II: return 1;
    case FiberClass::III: return 2;
    case FiberClass::IV: return 3;
    case FiberClass::IVstar: return 7;
    case FiberClass::IIIstar: return 8;
    case FiberClass::IIstar: return 9;
  }
  throw math_error("unreachable fiber class");
}

int FiberType::component_group_order() const {
  switch (cls) {
    case FiberClass::I: return std::max(m, 1);
    case FiberClass::Istar: return 4;
    case FiberClass::II: return 1;
    case FiberClass::III: return 2;
    case FiberClass::IV: return 3;
    case FiberClass::IVstar: return 3;
    case FiberClass::IIIstar: return 2;
    case FiberClass::IIstar: return 1;
  }
  throw math_error("unreachable fiber class");
}

std::string FiberType::symbol() const {
  switch (cls) {
    case FiberClass::I: return "I_" + std::to_string(m);
    case FiberClass::Istar: return "I*_" + std::to_string(m);
    case FiberClass::II: return "II";
    case FiberClass::III: return "III";
    case FiberClass::IV: return "IV";
    case FiberClass::IVstar: return "IV*";
    case FiberClass::IIIstar: return "III*";
    case FiberClass::IIstar: return "II*";
  }
  throw math_error("unreachable fiber class");
}

FiberType FiberType::from_symbol(const std::string& text) {
  auto number = [&](size_t off) {
    if (off >= text.size()) throw input_error("bad fiber symbol '" + text + "'");
    for (size_t i = off; i < text.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw input_error("bad fiber symbol '" + text + "'");
    return std::stoi(text.substr(off));
  };
  if (text == "II") return {FiberClass::II, 0};
  if (text == "III") return {FiberClass::III, 0};
  if (text == "IV") return {FiberClass::IV, 0};
  if (text == "II*") return {FiberClass::IIstar, 0};
  if (text == "III*") return {FiberClass::IIIstar, 0};
  if (text == "IV*") return {FiberClass::IVstar, 0};
  if (text.rfind("I*_", 0) == 0) return FiberType::Istar(number(3));
  if (text.rfind("I_", 0) == 0) return FiberType::I(number(2));
  throw input_error("bad fiber symbol '" + text + "'");
}

namespace {

FiberType classify_from_valuations(int vc4, int vc6, int vd) {
  // -1 encodes +infinity (zero polynomial).
  auto at_least = [](int v, int bound) { return v == -1 || v >= bound; };
  if (vd == 0) return FiberType::I(0);
  if (vc4 == 0) return FiberType::I(vd);
  // Additive reduction from here on.
  switch (vd) {
    case 2: return {FiberClass::II, 0};
    case 3: return {FiberClass::III, 0};
    case 4: return {FiberClass::IV, 0};
    case 6: return FiberType::Istar(0);
    default: break;
  }
  if (vd >= 7 && vc4 == 2 && vc6 == 3) return FiberType::Istar(vd - 6);
  if (vd == 8 && at_least(vc4, 3)) return {FiberClass::IVstar, 0};
  if (vd == 9 && at_least(vc4, 3)) return {FiberClass::IIIstar, 0};
  if (vd == 10 && at_least(vc4, 4)) return {FiberClass::IIstar, 0};
  throw math_error("valuations (v(c4),v(c6),v(Delta)) = (" +
                   std::to_string(vc4) + "," + std::to_string(vc6) + "," +
                   std::to_string(vd) +
                   ") do not match any minimal Kodaira type");
}

}  // namespace

LocalFiberData classify_at(const WeierstrassModel& m, const Place& place) {
  MinimalizeResult min = minimalize_at(m, place);
  StandardInvariants inv = standard_invariants(min.model);
  LocalFiberData out;
  out.place = place;
  out.v_c4 = inv.c4.is_zero() ? -1 : valuation(inv.c4, place);
  out.v_c6 = inv.c6.is_zero() ? -1 : valuation(inv.c6, place);
  out.v_delta = valuation(inv.delta, place);
  out.type = classify_from_valuations(out.v_c4, out.v_c6, out.v_delta);
  out.point_count = place.degree();
  out.minimal_rescales = min.rescales;
  return out;
}

LocalFiberData classify_at_infinity(const WeierstrassModel& m) {
  FlipResult flip = flip_model(m);
  MultiPoly s = MultiPoly::variable(m.base_var, {m.base_var});
  LocalFiberData inner = classify_at(flip.model, Place::finite(s, m.base_var));
  inner.place = Place::infinity(m.base_var);
  inner.point_count = 1;
  inner.infinity_weight = flip.weight;
  return inner;
}

int FiberConfiguration::euler_sum() const {
  int total = 0;
  for (const auto& e : entries) total += e.type.euler_number() * e.point_count;
  return total;
}

std::vector<std::pair<std::string, int>> FiberConfiguration::type_multiset()
    const {
  std::map<std::string, int> grouped;
  for (const auto& e : entries) grouped[e.type.symbol()] += e.point_count;
  return {grouped.begin(), grouped.end()};
}

std::string FiberConfiguration::summary() const {
  if (entries.empty()) return "(no singular fibers)";
  std::map<std::string, std::pair<int, int>> grouped;  // symbol -> (euler, count)
  for (const auto& e : entries) {
    auto& slot = grouped[e.type.symbol()];
    slot.first = e.type.euler_number();
    slot.second += e.point_count;
  }
  std::vector<std::pair<std::string, std::pair<int, int>>> rows(grouped.begin(),
                                                                grouped.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.second.first != b.second.first) return a.second.first > b.second.first;
    return a.first < b.first;
  });
  std::string out;
  for (const auto& [sym, info] : rows) {
    if (!out.empty()) out += " + ";
    if (info.second > 1) out += std::to_string(info.second) + " ";
    out += sym;
  }
  return out;
}

FiberConfiguration classify_all(const WeierstrassModel& m) {
  StandardInvariants inv = standard_invariants(m);
  const std::string& t = m.base_var;
  std::vector<MultiPoly> inputs = {inv.delta};
  if (!inv.c4.is_zero()) inputs.push_back(inv.c4);
  if (!inv.c6.is_zero()) inputs.push_back(inv.c6);
  GcdFreeBasis basis = gcd_free_basis(inputs, t);

  FiberConfiguration cfg;
  cfg.base_var = t;
  for (const auto& b : basis.basis) {
    Place place = Place::finite(b, t);
    if (valuation(inv.delta, place) == 0) continue;
    LocalFiberData data = classify_at(m, place);
    if (!data.type.is_smooth()) cfg.entries.push_back(std::move(data));
  }
  std::sort(cfg.entries.begin(), cfg.entries.end(),
            [&](const LocalFiberData& a, const LocalFiberData& b) {
              if (a.place.degree() != b.place.degree())
                return a.place.degree() < b.place.degree();
              return a.place.str() < b.place.str();
            });
  LocalFiberData inf = classify_at_infinity(m);
  if (!inf.type.is_smooth()) cfg.entries.push_back(std::move(inf));

  if (cfg.euler_sum() % 12 != 0)
    throw math_error("fiber Euler numbers sum to " +
                     std::to_string(cfg.euler_sum()) +
                     ", which is not a multiple of 12");
  return cfg;
}

}  // namespace ellq
