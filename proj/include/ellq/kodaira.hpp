#pragma once
// Kodaira classification of singular fibers of an elliptic surface over a
// function field of characteristic zero, read off a minimal model through
// the valuations of c4, c6 and Delta:
//
//   v(Delta) = 0                     -> I_0 (smooth)
//   v(c4) = 0, v(Delta) = m > 0      -> I_m
//   additive, v(Delta) = 2           -> II
//   additive, v(Delta) = 3           -> III
//   additive, v(Delta) = 4           -> IV
//   additive, v(Delta) = 6           -> I*_0
//   v(c4) = 2, v(c6) = 3, v(D) = m+6 -> I*_m (m >= 1)
//   additive, v(Delta) = 8           -> IV*
//   additive, v(Delta) = 9           -> III*
//   additive, v(Delta) = 10          -> II*
//
// Each fiber carries its Euler number, component count, and the component
// group of its Neron model, used later for torsion and lattice work.

#include <string>
#include <vector>

#include "ellq/weierstrass.hpp"

namespace ellq {

enum class FiberClass { I, Istar, II, III, IV, IVstar, IIIstar, IIstar };

struct FiberType {
  FiberClass cls = FiberClass::I;
  int m = 0;  // subscript for I_m and I*_m

  static FiberType I(int m) { return {FiberClass::I, m}; }
  static FiberType Istar(int m) { return {FiberClass::Istar, m}; }

  bool is_smooth() const { return cls == FiberClass::I && m == 0; }
  bool is_additive() const { return !(cls == FiberClass::I); }
  int euler_number() const;
  // Number of irreducible components of the fiber.
  int component_count() const;
  // Order of the component group of the Neron model.
  int component_group_order() const;
  // "I_4", "I*_1", "IV*", "II", ...
  std::string symbol() const;
  static FiberType from_symbol(const std::string& text);

  bool operator==(const FiberType& rhs) const = default;
};

// Fiber at one place, together with the valuations that produced it.  At a
// place of residue degree k > 1 the same local type occurs at each of the k
// geometric points; point_count records k.
struct LocalFiberData {
  Place place;
  FiberType type;
  int v_c4 = -1;  // -1 encodes v = +infinity (the polynomial is zero)
  int v_c6 = -1;
  int v_delta = 0;
  int point_count = 1;
  int minimal_rescales = 0;  // rescale steps used to reach the minimal model
  int infinity_weight = -1;  // coordinate weight d of the s = 1/t model
};

struct FiberConfiguration {
  std::string base_var;
  std::vector<LocalFiberData> entries;  // finite places first, infinity last

  // Sum of Euler numbers over geometric points; equals e of the surface.
  int euler_sum() const;
  // Display form like "I_20 + I*_5 + 5 I_1" (grouped, Euler-descending).
  std::string summary() const;
  // Multiset of (symbol, geometric multiplicity), canonically sorted; two
  // configurations agree as fiber collections iff these are equal.
  std::vector<std::pair<std::string, int>> type_multiset() const;
};

// Classification at one finite place (the model is minimalized first).
LocalFiberData classify_at(const WeierstrassModel& m, const Place& place);

// Classification at infinity via the coordinate flip t -> 1/s.
LocalFiberData classify_at_infinity(const WeierstrassModel& m);

// All singular fibers of the associated elliptic surface.  Finite places are
// generated from a gcd-free basis of the squarefree factors of Delta, c4 and
// c6, which makes every valuation well defined.  Smooth places are omitted.
// Verifies sum(e) == 0 mod 12.
FiberConfiguration classify_all(const WeierstrassModel& m);

}  // namespace ellq
