#pragma once
// The family of quotient varieties attached to the cyclic covers
//
//   C_n :  u^n = (v - w)(v + w) w^(n-2),      alpha : u -> zeta_n * u,
//
// and the diagonal-type quotients of their l-fold products by the group
// generated by alpha x alpha^(n-1) x id x ... and its shifts.  This header
// collects everything computable about that family with exact arithmetic:
//
//   - genus and fixed-point data of C_n (Riemann-Hurwitz on the degree-n
//     quotient map; local rotation weights at the points with nontrivial
//     stabilizer);
//   - the cyclic quotient singularities of the surface quotient, their
//     1/k (1, q) normal forms and Hirzebruch-Jung resolution strings;
//   - the two reducible fibers of the induced elliptic fibration as
//     intersection graphs of (-2)-curves, with a recognizer that matches
//     them against extended Dynkin cycles and D-type diagrams;
//   - invariant holomorphic p-forms of the l-fold quotient (the h^{p,0});
//   - Weierstrass models of the associated surface / threefold / l-fold
//     fibrations together with the degree-one member they are pulled back
//     from, and the defining cover equations;
//   - exact verification of the birational substitutions connecting these
//     models (a substitution either transforms one equation into a multiple
//     of the other, a multiple up to sign, or fails);
//   - the K3 fibers of the threefold fibration: fiber configuration,
//     Neron-Severi overlattice, and transcendental lattice identification;
//   - a consistency check of a reference table of elliptic fibrations on
//     those K3 fibers (Shioda-Tate rank and Euler numbers recomputed);
//   - canonical-bundle triviality tests of Weierstrass hypersurfaces over
//     products of P^1, feeding Kodaira dimension bounds for the family.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellq/kodaira.hpp"
#include "ellq/lattice.hpp"
#include "ellq/poly.hpp"
#include "ellq/surface.hpp"
#include "ellq/weierstrass.hpp"

namespace ellq {

// --- the curves C_n ---------------------------------------------------------

// A point of C_n with nontrivial behaviour under alpha: the stabilizer is
// the subgroup of order stabilizer_order, and its canonical generator acts
// on a local coordinate by zeta_s^weight (s = stabilizer_order).
struct CurveSpecialPoint {
  std::string label;         // "P_1", "P_-1", "P_inf", "P_inf^1", "P_inf^2"
  int stabilizer_order = 1;
  int weight = 0;
};

struct CurveData {
  int n = 0;
  int genus = 0;            // from Riemann-Hurwitz over C_n / <alpha> = P^1
  int reference_genus = 0;  // commonly tabulated value; differs for even n
  int branch_point_count = 0;  // points with stabilizer_order > 1
  std::vector<CurveSpecialPoint> special_points;
  // alpha^*(omega_i) = zeta_n^i * omega_i on a basis of holomorphic 1-forms;
  // the list is the exponents i = 1..genus.
  std::vector<int> form_weights;
};

// Requires n >= 2.
CurveData curve_data(int n);

// --- quotient singularities of (C_n x C_n) / (alpha x alpha^(n-1)) ----------

// An orbit of singular points.  Each point is a cyclic quotient singularity
// C^2 / (1/order)(weight_first, weight_second); q is the normalized second
// weight after scaling the first to 1 (the larger of q0 and q0^(-1) mod
// order, which picks a canonical representative of the coordinate swap).
struct QuotientSingularity {
  std::string label;  // representative fixed point pair, e.g. "(P_1, P_inf)"
  int orbit_size = 1;
  int order = 1;
  int weight_first = 0;
  int weight_second = 0;
  int q = 0;
  std::vector<int> resolution;  // Hirzebruch-Jung string of order/q
};

// All singular points of the surface quotient, one record per orbit, for
// n >= 2.  Points whose stabilizer is trivial are smooth and omitted.
std::vector<QuotientSingularity> singular_points_Y2(int n);

// Hirzebruch-Jung continued fraction of k/q:
//   k/q = b_1 - 1/(b_2 - 1/(... - 1/b_r)),  all b_i >= 2.
// Requires k >= 2, 1 <= q < k, gcd(k, q) = 1.
std::vector<int> hirzebruch_jung(int k, int q);

// --- resolved fibers of the induced elliptic fibration ----------------------

struct GraphNode {
  std::string name;
  int self_intersection = -2;
};

// Intersection multigraph of a curve configuration: parallel edges are
// repeated pairs (a two-component fiber meeting twice is a double edge).
struct ResolutionGraph {
  std::string name;
  std::vector<GraphNode> nodes;
  std::vector<std::pair<int, int>> edges;
};

struct FiberGraphs {
  int n = 0;
  ResolutionGraph f1;  // images of the four +-1 curves and their chains
  ResolutionGraph f2;  // images of the infinity curves and their chains
  FiberType f1_recognized;
  FiberType f2_recognized;
  int section_count = 4;
  int section_self_intersection = 0;  // equals -chi of the surface
};

// Assembles both reducible fibers from the singularity resolutions and runs
// the recognizer on them.  Requires n >= 2.
FiberGraphs resolution_fiber_graphs(int n);

// Matches a configuration of (-2)-curves against the fiber shapes occurring
// here: a cycle of m curves is I_m (m >= 2 using a double edge for m = 2),
// a D-type diagram with m+5 nodes is I*_m, a central curve with four leaves
// is I*_0.  Throws math_error when the graph fits none of these.
FiberType recognize_fiber_graph(const ResolutionGraph& g);

// --- invariant holomorphic forms on the l-fold quotient ---------------------

// h[p] = dimension of the invariant (p,0)-forms on C_n^l under the quotient
// group, for p = 0..l, computed by enumerating the monomial basis
// omega_{i_1} x ... and checking each character condition exactly.
// Requires n >= 2, l >= 1; throws input_error when the basis size
// (genus+1)^l exceeds 10^7.
std::vector<long> hodge_numbers_h_p0(int n, int l);

// --- defining equations ------------------------------------------------------

struct NamedEquation {
  std::string name;
  MultiPoly lhs, rhs;
};

// U^n = prod_{i=1..l} (v_i - w_i)(v_i + w_i) w_i^(n-2); variables are
// (v, w) when l = 1 and (v1, w1, ..., vl, wl) otherwise.  Requires n >= 2.
NamedEquation cover_equation(int n, int l);

// The elliptic fibration attached to the l-fold quotient, in affine form
//   y^2 = x (x^2 + B(B - 2 t^n) x + t^(2n) B^2),   B = prod (v_i^2 - 1),
// with l-2 extra variables v1..v_{l-2} (none when l = 2).  The base member
// replaces t^n by t; the family is its degree-n base change.
struct FamilyWeierstrass {
  int n = 0;
  int l = 2;
  WeierstrassModel model;
  WeierstrassModel base_member;
  MultiPoly b_product;  // B
};

// Requires n >= 1 and l >= 2.
FamilyWeierstrass family_weierstrass(int n, int l);

// Homogeneous surface coefficients (a, b) of y^2 = x(x^2 + a x + b) in
// (tau, sigma):  a = sigma^eps (sigma^n - 2 tau^n),  b = tau^(2n) sigma^(2eps)
// with eps = n mod 2, the exponent making the equation weighted-homogeneous.
std::pair<MultiPoly, MultiPoly> homogeneous_surface_coefficients(int n);

// --- exact verification of birational substitutions -------------------------

enum class SubstitutionVerdict { Exact, UpToSign, Fail };
std::string substitution_verdict_name(SubstitutionVerdict v);

// Rewriting rule var^exponent -> replacement (replacement must not involve
// var); applied as a power reduction until no exponent >= `exponent` is left.
struct PowerRelation {
  std::string var;
  int exponent = 1;
  MultiPoly replacement;
};

struct SubstitutionResult {
  SubstitutionVerdict verdict = SubstitutionVerdict::Fail;
  MultiPoly reduced;   // source difference after substitution and reduction
  MultiPoly cofactor;  // quotient against the target difference, when divisible
};

// Substitutes var_map (rational images, denominators cleared) into
// source.lhs - source.rhs, reduces modulo the power relations, and tests the
// result: zero or a multiple of target.lhs - target.rhs gives Exact, a
// multiple of target.lhs + target.rhs gives UpToSign, anything else Fail.
// Throws input_error on a zero denominator in var_map.
SubstitutionResult substitution_check(
    const NamedEquation& source, const NamedEquation& target,
    const std::map<std::string, std::pair<MultiPoly, MultiPoly>>& var_map,
    const std::vector<PowerRelation>& relations);

struct IdentityCheck {
  std::string name;
  std::string description;
  SubstitutionResult result;
};

// The three substitutions tying the models together, verified for the given
// n >= 2:
//   pencil-parameter    the double-cover pencil relation turns into the
//                       l = 2 cover equation under tau -> U / (w1 w2)
//                       (exact up to an overall sign);
//   threefold-invariants the invariant functions X = x u^(2n), Y = y u^(3n),
//                       t = tau u carry the threefold equation to the
//                       surface equation modulo u^n = v^2 - 1;
//   cover-product       U = u1 u2 satisfies the l = 2 cover equation modulo
//                       the two curve equations.
std::vector<IdentityCheck> birational_identity_checks(int n);

// --- K3 fibers of the threefold fibration -----------------------------------

struct K3FiberReport {
  Rat t0;
  WeierstrassModel model;  // y^2 = x(x^2 + (v^2-1)(v^2-1-2 t0) x + t0^2 (v^2-1)^2)
  FiberConfiguration config;
  SurfaceInvariants surface;
  TorsionReport torsion;
  FibrationLattice ns;
  Int ns_det = 0;
  int picard = 0;  // rank of the Neron-Severi lattice built here
  bool degenerate = false;  // the two I_1 merged into an I_2
  IntegralLattice transcendental_candidate;
  TranscendentalCheck match;
};

// Classifies the fiber of the threefold over t = t0 != 0 as an elliptic K3
// surface: fiber configuration over P^1_v, torsion feasibility, the glued
// Neron-Severi lattice, and the transcendental lattice candidate (U + <8>
// generically, <2> + <8> on the degenerate fibers).  The Mordell-Weil rank
// is taken to be 0, as certified by the torsion search plus the rank count.
// Throws input_error when t0 = 0 (the fiber there is not a K3 surface).
K3FiberReport k3_fiber_report(const Rat& t0);

struct ThreefoldDiscriminant {
  MultiPoly delta;      // discriminant of the bivariate model, vars (t, v)
  MultiPoly reference;  // t^(4n) (v^2-1)^7 (v^2 - 1 - 4 t^n)
  bool matches = false;  // delta == 16 * reference (16 = model normalization)
};

// Discriminant of the threefold member y^2 = x(x^2 + a x + b) with
// a = (v^2-1)(v^2-1-2t^n), b = t^(2n)(v^2-1)^2, compared against the
// factored reference form.  Requires n >= 1.
ThreefoldDiscriminant threefold_discriminant(int n = 1);

// --- reference table of K3 fibrations ----------------------------------------

struct FibrationTableRow {
  std::string fibers;  // "IV* + I*_3"
  std::vector<FiberType> types;
  int claimed_mw_rank = 0;
  int computed_mw_rank = 0;  // 17 - sum over fibers of (components - 1)
  int euler_residual = 0;    // 24 - sum of listed Euler numbers (the I_1 count)
  bool consistent = false;
};

struct FibrationTableReport {
  std::vector<FibrationTableRow> rows;
  int consistent_count = 0;
  std::vector<std::string> flagged;  // fiber strings of inconsistent rows
};

// Recomputes the Mordell-Weil rank of each fibration in the reference table
// from its reducible fibers (the K3 fiber has Picard number 19) and flags
// every row whose listed rank disagrees or whose Euler numbers exceed 24.
FibrationTableReport fibration_table_check();

// --- canonical triviality and Kodaira dimension bounds ----------------------

struct CanonicalCheck {
  std::vector<std::vector<int>> degrees;  // multidegrees of (a4, a8, a12)
  std::vector<std::vector<int>> bounds;   // (4,..), (8,..), (12,..)
  bool trivial = false;
};

// A Weierstrass hypersurface y^2 = x^3 + a4 x^2 + a8 x + a12 over (P^1)^k
// has trivial canonical bundle for generic coefficients exactly when the
// multidegree of each a_j stays within (j, ..., j); degrees[i][j] is the
// degree of the i-th coefficient in the j-th base variable.
CanonicalCheck canonical_triviality_check(
    const std::vector<std::vector<int>>& degrees);

// The same test applied to the generic t-fiber of the l-fold family, an
// (l-1)-fold over (P^1)^(l-2).  Requires n >= 1, l >= 3.
CanonicalCheck canonical_triviality_check(int n, int l);

enum class BoundProvenance { Computed, Chain, Cited };
std::string bound_provenance_name(BoundProvenance p);

struct BoundLine {
  std::string label;     // quantity being bounded, e.g. "k(Y^(3))"
  std::string relation;  // "=" or "<="
  std::string value;     // "-infinity", "0", "1"
  BoundProvenance provenance = BoundProvenance::Computed;
  std::string reason;
};

struct KodairaBounds {
  int n = 0;
  int l = 1;
  std::vector<BoundLine> lines;
  std::string final_relation;  // bound for the l-fold itself
  std::string final_value;
};

// Kodaira dimension bounds for the n-family l-fold: the curve and surface
// values are computed (genus, surface class), each further level uses the
// fibration over P^1 whose fibers pass the canonical triviality test plus
// the subadditivity inequality, and the sharp statements for n <= 4 are
// cited.  Requires n >= 2, l >= 1.
KodairaBounds kodaira_bound_chain(int n, int l);

}  // namespace ellq
