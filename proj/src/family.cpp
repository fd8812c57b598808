// Exact geometry of the cyclic-cover family: curve invariants via
// Riemann-Hurwitz, quotient singularities via stabilizer weights, their
// Hirzebruch-Jung resolutions assembled into the two reducible fibers,
// invariant-form counts by character enumeration, the Weierstrass models of
// the induced fibrations, and the substitution / lattice / Kodaira checks
// built on top of them.
//
// Conventions used throughout:
//   - the stabilizer of a special point P is the subgroup of order s(P) in
//     Z/n, so alpha^m fixes P exactly when (n/s(P)) | m;
//   - a pair (P, Q) is stabilized by alpha^m x alpha^((n-1)m) exactly when
//     both factors fix their point; since n-1 = -1 mod n this is the same
//     divisibility condition on m for both slots;
//   - if the generator of the pair stabilizer has local weights (w1, w2),
//     the singularity is C^2 / (1/k)(w1, w2) = (1/k)(1, w2 * w1^(-1)).

#include "ellq/family.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <sstream>

#include "ellq/univariate.hpp"

namespace ellq {
namespace {

int mod_inverse(int a, int m) {
  int t = 0, nt = 1, r = m, nr = ((a % m) + m) % m;
  while (nr != 0) {
    int q = r / nr;
    int t2 = t - q * nt;
    t = nt;
    nt = t2;
    int r2 = r - q * nr;
    r = nr;
    nr = r2;
  }
  if (r != 1) throw math_error("mod_inverse: arguments are not coprime");
  return ((t % m) + m) % m;
}

}  // namespace

// --- curves -----------------------------------------------------------------

CurveData curve_data(int n) {
  if (n < 2) throw input_error("curve_data: n must be >= 2");
  CurveData d;
  d.n = n;
  if (n % 2 == 1) {
    d.special_points = {{"P_1", n, 1}, {"P_-1", n, 1}, {"P_inf", n, (n - 1) / 2}};
  } else if (n == 2) {
    // The two points at infinity are exchanged freely by alpha.
    d.special_points = {{"P_1", 2, 1}, {"P_-1", 2, 1}, {"P_inf^1", 1, 0}, {"P_inf^2", 1, 0}};
  } else {
    // alpha swaps the two infinity points; alpha^2 fixes each and rotates a
    // local coordinate by zeta_n^(-2) = zeta_(n/2)^(-1).
    d.special_points = {{"P_1", n, 1},
                        {"P_-1", n, 1},
                        {"P_inf^1", n / 2, n / 2 - 1},
                        {"P_inf^2", n / 2, n / 2 - 1}};
  }
  // Riemann-Hurwitz for the degree-n map C_n -> C_n/<alpha> = P^1:
  //   2g - 2 = n * (-2) + sum_P (e_P - 1),  e_P = stabilizer order.
  int ram = 0;
  for (const auto& p : d.special_points) {
    if (p.stabilizer_order > 1) {
      ram += p.stabilizer_order - 1;
      ++d.branch_point_count;
    }
  }
  int two_g = -2 * n + ram + 2;
  if (two_g < 0 || two_g % 2 != 0)
    throw math_error("curve_data: inconsistent ramification data");
  d.genus = two_g / 2;
  d.reference_genus = (n % 2 == 1) ? (n - 1) / 2 : n / 2;
  for (int i = 1; i <= d.genus; ++i) d.form_weights.push_back(i);
  return d;
}

// --- quotient singularities --------------------------------------------------

std::vector<int> hirzebruch_jung(int k, int q) {
  if (k < 2 || q < 1 || q >= k || std::gcd(k, q) != 1)
    throw input_error("hirzebruch_jung: need k >= 2, 1 <= q < k, gcd(k, q) = 1");
  std::vector<int> out;
  while (q > 0) {
    int b = (k + q - 1) / q;  // ceil(k/q)
    out.push_back(b);
    int k2 = q;
    q = b * q - k;
    k = k2;
  }
  return out;
}

std::vector<QuotientSingularity> singular_points_Y2(int n) {
  const CurveData cd = curve_data(n);
  const auto& pts = cd.special_points;
  const int np = static_cast<int>(pts.size());

  // alpha permutes the special points: full-stabilizer points are fixed, the
  // two points in a common orbit of size two are swapped.
  std::vector<int> perm(np);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> movable;
  for (int i = 0; i < np; ++i)
    if (pts[i].stabilizer_order < n) movable.push_back(i);
  if (movable.size() == 2) {
    perm[movable[0]] = movable[1];
    perm[movable[1]] = movable[0];
  }
  // alpha^(n-1) is an odd power of alpha exactly when n is even, which is
  // also the only case where the permutation is nontrivial.
  const auto& perm2 = perm;

  std::vector<QuotientSingularity> out;
  std::vector<std::vector<bool>> seen(np, std::vector<bool>(np, false));
  for (int i = 0; i < np; ++i) {
    for (int j = 0; j < np; ++j) {
      if (seen[i][j]) continue;
      seen[i][j] = true;
      // Stabilizer of (P_i, P_j) inside Z/n: multiples of both n/s(P_i) and
      // n/s(P_j), hence of their lcm.
      int di = n / pts[i].stabilizer_order;
      int dj = n / pts[j].stabilizer_order;
      int step = std::lcm(di, dj);
      int k = n / step;
      int oi = perm[i], oj = perm2[j];
      int orbit_size = 1;
      if (oi != i || oj != j) {
        seen[oi][oj] = true;
        orbit_size = 2;
      }
      if (k < 2) continue;  // trivial stabilizer: smooth point of the quotient
      // The stabilizer generator alpha^step x alpha^(-step) rotates the local
      // coordinates by zeta_k^(w_i) and zeta_k^(-w_j).
      QuotientSingularity s;
      s.label = "(" + pts[i].label + ", " + pts[j].label + ")";
      s.orbit_size = orbit_size;
      s.order = k;
      s.weight_first = ((pts[i].weight % k) + k) % k;
      s.weight_second = ((-pts[j].weight % k) + k) % k;
      int q0 = static_cast<int>(
          (static_cast<long>(s.weight_second) * mod_inverse(s.weight_first, k)) % k);
      int q1 = mod_inverse(q0, k);
      s.q = std::max(q0, q1);
      s.resolution = hirzebruch_jung(k, s.q);
      out.push_back(std::move(s));
    }
  }
  return out;
}

// --- resolved fibers ----------------------------------------------------------

namespace {

int add_node(ResolutionGraph& g, const std::string& name, int self) {
  g.nodes.push_back({name, self});
  return static_cast<int>(g.nodes.size()) - 1;
}

// Chain of `count` (-2)-curves joining two existing nodes; count = 0 joins
// them directly (repeated calls create parallel edges).
void add_chain(ResolutionGraph& g, int from, int to, int count,
               const std::string& stem) {
  int prev = from;
  for (int i = 1; i <= count; ++i) {
    int id = add_node(g, stem + "_" + std::to_string(i), -2);
    g.edges.push_back({prev, id});
    prev = id;
  }
  g.edges.push_back({prev, to});
}

}  // namespace

FiberType recognize_fiber_graph(const ResolutionGraph& g) {
  const int m = static_cast<int>(g.nodes.size());
  if (m == 0) throw math_error("recognize_fiber_graph: empty graph");
  for (const auto& nd : g.nodes)
    if (nd.self_intersection != -2)
      throw math_error("recognize_fiber_graph: component with self-intersection != -2");
  std::vector<int> deg(m, 0);
  std::vector<std::vector<int>> adj(m);
  for (const auto& [a, b] : g.edges) {
    if (a < 0 || a >= m || b < 0 || b >= m || a == b)
      throw math_error("recognize_fiber_graph: bad edge");
    ++deg[a];
    ++deg[b];
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> vis(m, false);
  std::queue<int> bfs;
  bfs.push(0);
  vis[0] = true;
  int reached = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int w : adj[v]) {
      if (!vis[w]) {
        vis[w] = true;
        ++reached;
        bfs.push(w);
      }
    }
  }
  if (reached != m) throw math_error("recognize_fiber_graph: graph is disconnected");
  int ones = 0, twos = 0, threes = 0, fours = 0, other = 0;
  for (int d : deg) {
    if (d == 1) ++ones;
    else if (d == 2) ++twos;
    else if (d == 3) ++threes;
    else if (d == 4) ++fours;
    else ++other;
  }
  if (other == 0 && ones == 0 && threes == 0 && fours == 0 && m >= 2)
    return FiberType::I(m);  // a single cycle of m curves
  if (other == 0 && fours == 0 && ones == 4 && threes == 2 && m >= 6)
    return FiberType::Istar(m - 5);  // D-type: spine with two forked ends
  if (other == 0 && m == 5 && fours == 1 && ones == 4)
    return FiberType::Istar(0);
  throw math_error("recognize_fiber_graph: graph matches no known fiber shape");
}

FiberGraphs resolution_fiber_graphs(int n) {
  if (n < 2) throw input_error("resolution_fiber_graphs: n must be >= 2");
  FiberGraphs fg;
  fg.n = n;

  // Fiber F1: the images of the four curves through the +-1 points, joined
  // cyclically by the resolution chains of the four (1/n)(1, n-1) points.
  ResolutionGraph& f1 = fg.f1;
  f1.name = "F1";
  int c1 = add_node(f1, "[P_1 x C]", -2);
  int c2 = add_node(f1, "[C x P_1]", -2);
  int c3 = add_node(f1, "[P_-1 x C]", -2);
  int c4 = add_node(f1, "[C x P_-1]", -2);
  add_chain(f1, c1, c2, n - 1, "E(P_1, P_1)");
  add_chain(f1, c2, c3, n - 1, "E(P_-1, P_1)");
  add_chain(f1, c3, c4, n - 1, "E(P_-1, P_-1)");
  add_chain(f1, c4, c1, n - 1, "E(P_1, P_-1)");

  // Fiber F2: the images of the infinity curves with their chains.
  ResolutionGraph& f2 = fg.f2;
  f2.name = "F2";
  if (n % 2 == 1) {
    // Spine from the (1/n)(1, n-1) point over (P_inf, P_inf); the mixed
    // (1/n)(1, (n+1)/2) points resolve into [2, (n+1)/2]: the (-2) curve is
    // a leaf of the fiber, the -(n+1)/2 curve is a torsion section.
    int s1 = add_node(f2, "[P_inf x C]", -2);
    int s2 = add_node(f2, "[C x P_inf]", -2);
    add_chain(f2, s1, s2, n - 1, "E(P_inf, P_inf)");
    int l1 = add_node(f2, "E(P_inf, P_1)_1", -2);
    int l2 = add_node(f2, "E(P_inf, P_-1)_1", -2);
    int l3 = add_node(f2, "E(P_1, P_inf)_1", -2);
    int l4 = add_node(f2, "E(P_-1, P_inf)_1", -2);
    f2.edges.push_back({s1, l1});
    f2.edges.push_back({s1, l2});
    f2.edges.push_back({s2, l3});
    f2.edges.push_back({s2, l4});
    fg.section_self_intersection = -(n + 1) / 2;
  } else {
    // Each infinity curve is a single orbit image; the two orbits of
    // infinity point pairs contribute one chain of n/2 - 1 curves each,
    // closing a cycle of n components.  The mixed orbits resolve into a
    // single -(n/2) curve, which is a torsion section, not a fiber
    // component (for n = 2 those points are already smooth).
    int s1 = add_node(f2, "[P_inf x C]", -2);
    int s2 = add_node(f2, "[C x P_inf]", -2);
    add_chain(f2, s1, s2, n / 2 - 1, "E(P_inf^1, P_inf^1)");
    add_chain(f2, s2, s1, n / 2 - 1, "E(P_inf^1, P_inf^2)");
    fg.section_self_intersection = -n / 2;
  }
  fg.section_count = 4;
  fg.f1_recognized = recognize_fiber_graph(f1);
  fg.f2_recognized = recognize_fiber_graph(f2);
  return fg;
}

// --- invariant forms -----------------------------------------------------------

std::vector<long> hodge_numbers_h_p0(int n, int l) {
  if (n < 2 || l < 1) throw input_error("hodge_numbers_h_p0: need n >= 2, l >= 1");
  const int g = curve_data(n).genus;
  long long work = 1;
  for (int i = 0; i < l; ++i) {
    work *= 2LL * (g + 1);
    if (work > 20'000'000LL)
      throw input_error("hodge_numbers_h_p0: basis too large to enumerate");
  }
  std::vector<long> h(l + 1, 0);
  for (unsigned mask = 0; mask < (1u << l); ++mask) {
    const int p = std::popcount(mask);
    std::vector<int> slots;  // 1-based slot numbers carrying a form
    for (int s = 1; s <= l; ++s)
      if (mask & (1u << (s - 1))) slots.push_back(s);
    if (!slots.empty() && g == 0) continue;
    std::vector<int> val(slots.size(), 1);  // each i_j runs over 1..g
    // Iterate all assignments; for the empty subset count exactly once.
    while (true) {
      std::vector<int> w(l + 1, 0);  // weight of the form in each slot, 0 if none
      for (size_t a = 0; a < slots.size(); ++a) w[slots[a]] = val[a];
      bool invariant = true;
      // Generator a_k acts by zeta_n^(w_1 - w_k) on this basis form.
      for (int k = 2; k <= l && invariant; ++k)
        if (((w[1] - w[k]) % n + n) % n != 0) invariant = false;
      if (invariant) ++h[p];
      if (slots.empty()) break;
      size_t pos = 0;
      while (pos < val.size() && val[pos] == g) {
        val[pos] = 1;
        ++pos;
      }
      if (pos == val.size()) break;
      ++val[pos];
    }
  }
  return h;
}

// --- defining equations ----------------------------------------------------------

NamedEquation cover_equation(int n, int l) {
  if (n < 2 || l < 1) throw input_error("cover_equation: need n >= 2, l >= 1");
  VarList vars{"U"};
  std::vector<std::string> vs, ws;
  for (int i = 1; i <= l; ++i) {
    std::string suffix = (l == 1) ? "" : std::to_string(i);
    vs.push_back("v" + suffix);
    ws.push_back("w" + suffix);
    vars.push_back(vs.back());
    vars.push_back(ws.back());
  }
  MultiPoly rhs = MultiPoly::constant(1, vars);
  for (int i = 0; i < l; ++i) {
    MultiPoly v = MultiPoly::variable(vs[i], vars);
    MultiPoly w = MultiPoly::variable(ws[i], vars);
    rhs = rhs * (v - w) * (v + w) * w.pow(n - 2);
  }
  MultiPoly lhs = MultiPoly::variable("U", vars).pow(n);
  return {"cover", lhs, rhs};
}

FamilyWeierstrass family_weierstrass(int n, int l) {
  if (n < 1 || l < 2) throw input_error("family_weierstrass: need n >= 1, l >= 2");
  VarList vars{"t"};
  for (int i = 1; i <= l - 2; ++i) vars.push_back("v" + std::to_string(i));
  MultiPoly b_product = MultiPoly::constant(1, vars);
  for (int i = 1; i <= l - 2; ++i) {
    MultiPoly v = MultiPoly::variable("v" + std::to_string(i), vars);
    b_product = b_product * (v * v - Rat(1));
  }
  MultiPoly t = MultiPoly::variable("t", vars);
  auto member = [&](int e) {
    MultiPoly te = t.pow(e);
    MultiPoly a2 = b_product * (b_product - Rat(2) * te);
    MultiPoly a4 = te * te * b_product * b_product;
    return WeierstrassModel::simplified("t", a2, a4, MultiPoly(vars));
  };
  FamilyWeierstrass f;
  f.n = n;
  f.l = l;
  f.model = member(n);
  f.base_member = member(1);
  f.b_product = b_product;
  return f;
}

std::pair<MultiPoly, MultiPoly> homogeneous_surface_coefficients(int n) {
  if (n < 1) throw input_error("homogeneous_surface_coefficients: n must be >= 1");
  const int eps = n % 2;
  VarList vars{"tau", "sigma"};
  MultiPoly tau = MultiPoly::variable("tau", vars);
  MultiPoly sigma = MultiPoly::variable("sigma", vars);
  MultiPoly a = sigma.pow(eps) * (sigma.pow(n) - Rat(2) * tau.pow(n));
  MultiPoly b = tau.pow(2 * n) * sigma.pow(2 * eps);
  return {a, b};
}

// --- substitutions ----------------------------------------------------------------

std::string substitution_verdict_name(SubstitutionVerdict v) {
  switch (v) {
    case SubstitutionVerdict::Exact: return "exact";
    case SubstitutionVerdict::UpToSign: return "up-to-sign";
    case SubstitutionVerdict::Fail: return "fail";
  }
  return "fail";
}

SubstitutionResult substitution_check(
    const NamedEquation& source, const NamedEquation& target,
    const std::map<std::string, std::pair<MultiPoly, MultiPoly>>& var_map,
    const std::vector<PowerRelation>& relations) {
  for (const auto& [var, image] : var_map)
    if (image.second.is_zero())
      throw input_error("substitution_check: zero denominator for " + var);
  MultiPoly d = (source.lhs - source.rhs).substitute_rational(var_map);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : relations) {
      MultiPoly next = d.reduce_power_relation(r.var, r.exponent, r.replacement);
      if (next != d) {
        d = std::move(next);
        changed = true;
      }
    }
  }
  SubstitutionResult res;
  res.reduced = d;
  if (d.is_zero()) {
    res.verdict = SubstitutionVerdict::Exact;
    return res;
  }
  MultiPoly t_minus = target.lhs - target.rhs;
  MultiPoly t_plus = target.lhs + target.rhs;
  if (!t_minus.is_zero()) {
    if (auto q = d.try_exact_div(t_minus)) {
      res.verdict = SubstitutionVerdict::Exact;
      res.cofactor = std::move(*q);
      return res;
    }
  }
  if (!t_plus.is_zero()) {
    if (auto q = d.try_exact_div(t_plus)) {
      res.verdict = SubstitutionVerdict::UpToSign;
      res.cofactor = std::move(*q);
      return res;
    }
  }
  res.verdict = SubstitutionVerdict::Fail;
  return res;
}

std::vector<IdentityCheck> birational_identity_checks(int n) {
  if (n < 2) throw input_error("birational_identity_checks: n must be >= 2");
  std::vector<IdentityCheck> out;

  {
    // The pencil parameter t = -(v1^2 - w1^2)(v2^2 - w2^2) / (w1 w2)^2 with
    // t = tau^n, after tau -> U / (w1 w2), lands on the l = 2 cover equation
    // up to an overall sign.
    VarList vars{"U", "tau", "v1", "w1", "v2", "w2"};
    MultiPoly tau = MultiPoly::variable("tau", vars);
    MultiPoly v1 = MultiPoly::variable("v1", vars);
    MultiPoly w1 = MultiPoly::variable("w1", vars);
    MultiPoly v2 = MultiPoly::variable("v2", vars);
    MultiPoly w2 = MultiPoly::variable("w2", vars);
    MultiPoly u = MultiPoly::variable("U", vars);
    NamedEquation source{"pencil", tau.pow(n) * (w1 * w2).pow(2),
                         -((v1 * v1 - w1 * w1) * (v2 * v2 - w2 * w2))};
    NamedEquation target = cover_equation(n, 2);
    std::map<std::string, std::pair<MultiPoly, MultiPoly>> vm;
    vm["tau"] = {u, w1 * w2};
    out.push_back({"pencil-parameter",
                   "tau -> U / (w1 w2) carries the double-cover pencil "
                   "relation to the rank-2 cover equation up to sign",
                   substitution_check(source, target, vm, {})});
  }

  {
    // The invariant functions X = x u^(2n), Y = y u^(3n), t = tau u carry
    // the threefold equation back to the surface equation modulo the curve
    // relation u^n = v^2 - 1.
    VarList vars{"X", "Y", "t", "v", "x", "y", "tau", "u"};
    MultiPoly X = MultiPoly::variable("X", vars);
    MultiPoly Y = MultiPoly::variable("Y", vars);
    MultiPoly t = MultiPoly::variable("t", vars);
    MultiPoly v = MultiPoly::variable("v", vars);
    MultiPoly x = MultiPoly::variable("x", vars);
    MultiPoly y = MultiPoly::variable("y", vars);
    MultiPoly tau = MultiPoly::variable("tau", vars);
    MultiPoly u = MultiPoly::variable("u", vars);
    MultiPoly B = v * v - Rat(1);
    NamedEquation source{
        "threefold", Y * Y,
        X.pow(3) + B * (B - Rat(2) * t.pow(n)) * X.pow(2) + t.pow(2 * n) * B.pow(2) * X};
    NamedEquation target{
        "surface", y * y,
        x.pow(3) + (Rat(1) - Rat(2) * tau.pow(n)) * x.pow(2) + tau.pow(2 * n) * x};
    std::map<std::string, std::pair<MultiPoly, MultiPoly>> vm;
    MultiPoly one = MultiPoly::constant(1, vars);
    vm["X"] = {x * u.pow(2 * n), one};
    vm["Y"] = {y * u.pow(3 * n), one};
    vm["t"] = {tau * u, one};
    std::vector<PowerRelation> rel{{"u", n, B}};
    out.push_back({"threefold-invariants",
                   "X = x u^(2n), Y = y u^(3n), t = tau u turn the threefold "
                   "equation into the surface equation modulo u^n = v^2 - 1",
                   substitution_check(source, target, vm, rel)});
  }

  {
    // U = u1 u2 satisfies the l = 2 cover equation modulo the two curve
    // equations u_i^n = (v_i^2 - w_i^2) w_i^(n-2).
    NamedEquation source = cover_equation(n, 2);
    VarList vars{"U", "v1", "w1", "v2", "w2", "u1", "u2"};
    MultiPoly u1 = MultiPoly::variable("u1", vars);
    MultiPoly u2 = MultiPoly::variable("u2", vars);
    MultiPoly v1 = MultiPoly::variable("v1", vars);
    MultiPoly w1 = MultiPoly::variable("w1", vars);
    MultiPoly v2 = MultiPoly::variable("v2", vars);
    MultiPoly w2 = MultiPoly::variable("w2", vars);
    MultiPoly one = MultiPoly::constant(1, vars);
    std::map<std::string, std::pair<MultiPoly, MultiPoly>> vm;
    vm["U"] = {u1 * u2, one};
    std::vector<PowerRelation> rel{
        {"u1", n, (v1 * v1 - w1 * w1) * w1.pow(n - 2)},
        {"u2", n, (v2 * v2 - w2 * w2) * w2.pow(n - 2)}};
    out.push_back({"cover-product",
                   "U = u1 u2 satisfies the rank-2 cover equation modulo the "
                   "two curve equations",
                   substitution_check(source, source, vm, rel)});
  }

  return out;
}

// --- K3 fibers of the threefold ----------------------------------------------------

K3FiberReport k3_fiber_report(const Rat& t0) {
  if (t0 == 0)
    throw input_error("k3_fiber_report: the fiber over t = 0 is not a K3 surface");
  K3FiberReport r;
  r.t0 = t0;
  VarList vars{"v"};
  MultiPoly v = MultiPoly::variable("v", vars);
  MultiPoly B = v * v - Rat(1);
  MultiPoly a2 = B * (B - Rat(2) * t0);
  MultiPoly a4 = MultiPoly::constant(Rat(t0 * t0), vars) * B * B;
  r.model = WeierstrassModel::simplified("v", a2, a4, MultiPoly(vars));
  r.config = classify_all(r.model);
  r.surface = surface_invariants(r.config);
  r.torsion = torsion_feasibility(r.config, r.surface.chi);
  auto witness = r.torsion.witnesses.find(4);
  if (witness == r.torsion.witnesses.end())
    throw math_error("k3_fiber_report: no order-4 torsion witness found");
  r.ns = ns_from_fibration(r.config, {witness->second});
  r.ns_det = lattice_det(r.ns.neron_severi);
  r.picard = r.ns.neron_severi.rank();
  for (const auto& entry : r.config.entries)
    if (entry.type == FiberType::I(2)) r.degenerate = true;
  r.transcendental_candidate =
      r.degenerate ? direct_sum({lattice_scalar(2), lattice_scalar(8)})
                   : direct_sum({lattice_U(), lattice_scalar(8)});
  r.match = transcendental_match(r.ns.neron_severi, r.transcendental_candidate);
  return r;
}

ThreefoldDiscriminant threefold_discriminant(int n) {
  if (n < 1) throw input_error("threefold_discriminant: n must be >= 1");
  VarList vars{"t", "v"};
  MultiPoly t = MultiPoly::variable("t", vars);
  MultiPoly v = MultiPoly::variable("v", vars);
  MultiPoly B = v * v - Rat(1);
  MultiPoly a2 = B * (B - Rat(2) * t.pow(n));
  MultiPoly a4 = t.pow(2 * n) * B * B;
  ThreefoldDiscriminant d;
  d.delta = Rat(16) * a4 * a4 * (a2 * a2 - Rat(4) * a4);
  d.reference = t.pow(4 * n) * B.pow(7) * (B - Rat(4) * t.pow(n));
  // The factor 16 is the discriminant normalization of the model
  // y^2 = x (x^2 + a x + b):  Delta = 16 b^2 (a^2 - 4 b).
  d.matches = (d.delta == Rat(16) * d.reference);
  return d;
}

// --- reference fibration table -------------------------------------------------------

namespace {

std::vector<FiberType> parse_fiber_list(const std::string& text) {
  std::vector<FiberType> types;
  std::stringstream ss(text);
  std::string token;
  std::vector<std::string> parts;
  while (std::getline(ss, token, '+')) parts.push_back(token);
  for (auto& part : parts) {
    // trim
    size_t a = part.find_first_not_of(' ');
    size_t b = part.find_last_not_of(' ');
    part = part.substr(a, b - a + 1);
    int count = 1;
    size_t space = part.find(' ');
    if (space != std::string::npos) {
      count = std::stoi(part.substr(0, space));
      part = part.substr(space + 1);
    }
    FiberType t = FiberType::from_symbol(part);
    for (int i = 0; i < count; ++i) types.push_back(t);
  }
  return types;
}

}  // namespace

FibrationTableReport fibration_table_check() {
  // Reference table of elliptic fibrations on the generic K3 fiber (reducible
  // fibers and the listed Mordell-Weil rank).
  static const struct {
    const char* fibers;
    int mw;
  } kRows[] = {
      {"2 II*", 1},
      {"I*_12", 1},
      {"II* + I*_4", 1},
      {"2 III* + 2 I_2", 1},
      {"III* + I_10", 1},
      {"I*_8 + I*_0", 1},
      {"2 I*_4", 1},
      {"I_16", 2},
      {"I*_5 + I_8", 1},
      {"IV* + I*_3", 1},
      {"I*_2 + I_10 + I_2", 1},
      {"2 I*_1 + I_8", 0},
      {"2 I_9", 1},
      {"I_17", 1},
      {"I_13 + I_5", 1},
  };
  FibrationTableReport report;
  for (const auto& raw : kRows) {
    FibrationTableRow row;
    row.fibers = raw.fibers;
    row.types = parse_fiber_list(raw.fibers);
    row.claimed_mw_rank = raw.mw;
    int comp = 0, euler = 0;
    for (const auto& t : row.types) {
      comp += t.component_count() - 1;
      euler += t.euler_number();
    }
    // The K3 fiber has Picard number 19, so by Shioda-Tate the Mordell-Weil
    // rank of any of its elliptic fibrations is 19 - 2 - sum (components - 1).
    row.computed_mw_rank = 17 - comp;
    row.euler_residual = 24 - euler;
    row.consistent =
        (row.computed_mw_rank == row.claimed_mw_rank) && row.euler_residual >= 0;
    if (row.consistent)
      ++report.consistent_count;
    else
      report.flagged.push_back(row.fibers);
    report.rows.push_back(std::move(row));
  }
  return report;
}

// --- canonical triviality and Kodaira bounds ----------------------------------------

CanonicalCheck canonical_triviality_check(
    const std::vector<std::vector<int>>& degrees) {
  if (degrees.size() != 3)
    throw input_error(
        "canonical_triviality_check: expected multidegrees for (a4, a8, a12)");
  const size_t k = degrees[0].size();
  if (degrees[1].size() != k || degrees[2].size() != k)
    throw input_error("canonical_triviality_check: ragged multidegree lists");
  CanonicalCheck c;
  c.degrees = degrees;
  c.bounds = {std::vector<int>(k, 4), std::vector<int>(k, 8),
              std::vector<int>(k, 12)};
  c.trivial = true;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < k; ++j)
      if (degrees[i][j] > c.bounds[i][j]) c.trivial = false;
  return c;
}

CanonicalCheck canonical_triviality_check(int n, int l) {
  if (n < 1 || l < 3)
    throw input_error("canonical_triviality_check: need n >= 1, l >= 3");
  FamilyWeierstrass fam = family_weierstrass(n, l);
  // Generic t-fiber: an (l-1)-fold elliptic over (P^1)^(l-2) with
  // y^2 = x^3 + a4 x^2 + a8 x + a12 given by (a2, a4, a6) of the model.
  std::vector<MultiPoly> coeffs{fam.model.a2, fam.model.a4, fam.model.a6};
  std::vector<std::vector<int>> degrees(3, std::vector<int>(l - 2, 0));
  for (int i = 0; i < 3; ++i)
    for (int j = 1; j <= l - 2; ++j) {
      int d = coeffs[i].degree_in("v" + std::to_string(j));
      degrees[i][j - 1] = std::max(d, 0);
    }
  return canonical_triviality_check(degrees);
}

std::string bound_provenance_name(BoundProvenance p) {
  switch (p) {
    case BoundProvenance::Computed: return "computed";
    case BoundProvenance::Chain: return "chain";
    case BoundProvenance::Cited: return "cited";
  }
  return "computed";
}

KodairaBounds kodaira_bound_chain(int n, int l) {
  if (n < 2 || l < 1) throw input_error("kodaira_bound_chain: need n >= 2, l >= 1");
  KodairaBounds kb;
  kb.n = n;
  kb.l = l;

  const CurveData cd = curve_data(n);
  std::string v1 = cd.genus == 0 ? "-infinity" : (cd.genus == 1 ? "0" : "1");
  kb.lines.push_back({"k(Y^(1))", "=", v1, BoundProvenance::Computed,
                      "curve of genus " + std::to_string(cd.genus)});
  kb.final_relation = "=";
  kb.final_value = v1;
  if (l == 1) return kb;

  FiberConfiguration cfg = classify_all(family_weierstrass(n, 2).model);
  SurfaceInvariants inv = surface_invariants(cfg);
  std::string v2 = inv.cls == SurfaceClass::Rational
                       ? "-infinity"
                       : (inv.cls == SurfaceClass::K3 ? "0" : "1");
  kb.lines.push_back({"k(Y^(2))", "=", v2, BoundProvenance::Computed,
                      "minimal elliptic surface of class " +
                          surface_class_name(inv.cls) + " (chi = " +
                          std::to_string(inv.chi) + ")"});
  kb.final_relation = "=";
  kb.final_value = v2;
  if (l == 2) return kb;

  for (int j = 3; j <= l; ++j) {
    CanonicalCheck cc = canonical_triviality_check(n, j);
    if (!cc.trivial)
      throw math_error("kodaira_bound_chain: fiber failed the canonical degree test");
    kb.lines.push_back(
        {"k(fiber of Y^(" + std::to_string(j) + ") -> P^1)", "<=", "0",
         BoundProvenance::Computed,
         "Weierstrass multidegrees within the canonical-triviality bounds"});
    kb.lines.push_back({"k(Y^(" + std::to_string(j) + "))", "<=", "1",
                        BoundProvenance::Chain,
                        "fibration over P^1 with fibers of Kodaira dimension "
                        "<= 0, plus subadditivity of the Kodaira dimension"});
  }
  kb.final_relation = "<=";
  kb.final_value = "1";

  if (n == 2) {
    kb.lines.push_back({"k(Y^(" + std::to_string(l) + "))", "=", "-infinity",
                        BoundProvenance::Cited,
                        "isotrivial fibration with rational fibers"});
    kb.final_relation = "=";
    kb.final_value = "-infinity";
  } else if (n == 3 || n == 4) {
    kb.lines.push_back({"k(Y^(" + std::to_string(l) + "))", "=", "0",
                        BoundProvenance::Cited,
                        "admits a crepant resolution with trivial canonical "
                        "bundle"});
    kb.final_relation = "=";
    kb.final_value = "0";
  }
  return kb;
}

}  // namespace ellq
