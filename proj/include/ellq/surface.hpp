#pragma once
// Global invariants of the elliptic surface attached to a fiber
// configuration over P^1, and the arithmetic of fiber component groups:
//
//   e   = sum of local Euler numbers        chi  = e / 12
//   p_g = chi - 1                           h^11 = 10 * chi
//   rank MW = rho - 2 - sum_v (m_v - 1)     (Shioda-Tate)
//
// Torsion sections meet one component of each fiber, and a section of a
// relatively minimal elliptic surface with section satisfies the height
// relation  sum_v contr_v(P) = 2 * chi  when P is torsion.  The feasibility
// search below enumerates all component choices exactly and reports which
// torsion groups survive the relation.

#include <map>
#include <string>
#include <vector>

#include "ellq/kodaira.hpp"

namespace ellq {

enum class SurfaceClass { Rational, K3, ProperlyElliptic };
std::string surface_class_name(SurfaceClass cls);

struct SurfaceInvariants {
  int euler = 0;
  int chi = 0;
  int p_g = 0;
  int h11 = 0;
  int rho_max = 0;  // upper bound h^{1,1} for the Picard number
  SurfaceClass cls = SurfaceClass::Rational;
};

// Requires e > 0 and 12 | e (guaranteed by classify_all).
SurfaceInvariants surface_invariants(const FiberConfiguration& cfg);

// Mordell-Weil rank from a known Picard number; throws when the fiber
// contribution already exceeds rho - 2.
int shioda_tate_rank(const FiberConfiguration& cfg, int rho);

// --- component group arithmetic -------------------------------------------
// Elements are encoded as integers 0 .. order-1 per fiber type:
//   I_m        : Z/m, element j is the component Theta_j
//   I*_m odd   : Z/4 with 2 = near component, 1 and 3 = far components
//   I*_m even  : Z/2 x Z/2 (xor) with 1 = near, 2 and 3 = far
//   III, III*  : Z/2; IV, IV* : Z/3; II, II*, I_0, I_1 : trivial
int group_order(const FiberType& t);
int elem_add(const FiberType& t, int a, int b);
int elem_order(const FiberType& t, int a);
std::string elem_label(const FiberType& t, int a);
// Local height contribution of a section through the component:
//   I_m: j*(m-j)/m;  I*_m: 1 (near), 1 + m/4 (far);  III: 1/2; III*: 3/2;
//   IV: 2/3; IV*: 4/3; trivial component: 0.
Rat elem_contribution(const FiberType& t, int a);

// One component choice per configuration entry (at a place of residue
// degree k the same choice is made at all k geometric points).
struct TorsionWitness {
  std::vector<int> elems;  // aligned with cfg.entries
  std::vector<std::string> labels;
  int order = 1;
};

struct TorsionReport {
  Rat target;                              // 2 * chi
  std::vector<int> feasible_cyclic_orders;  // orders > 1 passing the relation
  std::map<int, TorsionWitness> witnesses;  // first witness per cyclic order
  std::vector<std::vector<int>> feasible_groups;  // invariant factor lists
  std::vector<int> verdict;                 // largest feasible group
  int two_torsion_count = 0;  // order-2 solutions of the height relation
  bool unique_two_torsion = false;
};

// Exhaustive search over all component choices.  A cyclic order d is
// feasible when some choice g of order d satisfies the relation along with
// every nonzero multiple of g; two-generator subgroups are tested the same
// way.  The verdict is the feasible group of maximal order.
TorsionReport torsion_feasibility(const FiberConfiguration& cfg, int chi);

struct ModularityCriteria {
  bool extremal = false;           // Mordell-Weil rank 0
  bool no_star_obstruction = false;  // no II* and no III* fiber
  bool j_nonconstant = false;
  bool verdict = false;
};

ModularityCriteria modularity_criteria(const FiberConfiguration& cfg,
                                       int mw_rank, bool j_constant);

}  // namespace ellq
