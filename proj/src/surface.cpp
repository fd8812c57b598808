#include "ellq/surface.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ellq {

std::string surface_class_name(SurfaceClass cls) {
  switch (cls) {
    case SurfaceClass::Rational: return "rational";
    case SurfaceClass::K3: return "K3";
    case SurfaceClass::ProperlyElliptic: return "properly elliptic";
  }
  throw math_error("unreachable surface class");
}

SurfaceInvariants surface_invariants(const FiberConfiguration& cfg) {
  SurfaceInvariants out;
  out.euler = cfg.euler_sum();
  if (out.euler <= 0 || out.euler % 12 != 0)
    throw math_error("Euler number " + std::to_string(out.euler) +
                     " is not a positive multiple of 12");
  out.chi = out.euler / 12;
  out.p_g = out.chi - 1;
  out.h11 = 10 * out.chi;
  out.rho_max = out.h11;
  out.cls = out.chi == 1   ? SurfaceClass::Rational
            : out.chi == 2 ? SurfaceClass::K3
                           : SurfaceClass::ProperlyElliptic;
  return out;
}

int shioda_tate_rank(const FiberConfiguration& cfg, int rho) {
  int fibers = 0;
  for (const auto& e : cfg.entries)
    fibers += (e.type.component_count() - 1) * e.point_count;
  int rank = rho - 2 - fibers;
  if (rank < 0)
    throw math_error("fiber components exceed the Picard number: rho = " +
                     std::to_string(rho) + ", components account for " +
                     std::to_string(fibers + 2));
  return rank;
}

int group_order(const FiberType& t) { return t.component_group_order(); }

int elem_add(const FiberType& t, int a, int b) {
  int n = group_order(t);
  if (a < 0 || a >= n || b < 0 || b >= n)
    throw math_error("component group element out of range");
  switch (t.cls) {
    case FiberClass::I: return (a + b) % n;
    case FiberClass::Istar: return t.m % 2 == 1 ? (a + b) % 4 : (a ^ b);
    case FiberClass::III:
    case FiberClass::IIIstar: return (a + b) % 2;
    case FiberClass::IV:
    case FiberClass::IVstar: return (a + b) % 3;
    case FiberClass::II:
    case FiberClass::IIstar: return 0;
  }
  throw math_error("unreachable fiber class");
}

int elem_order(const FiberType& t, int a) {
  int k = 1, acc = a;
  while (acc != 0) {
    acc = elem_add(t, acc, a);
    ++k;
  }
  return k;
}

std::string elem_label(const FiberType& t, int a) {
  if (a == 0) return "0";
  if (t.cls == FiberClass::Istar) {
    bool near = t.m % 2 == 1 ? a == 2 : a == 1;
    if (near) return "near";
    int which = t.m % 2 == 1 ? (a == 1 ? 1 : 2) : a - 1;
    return "far_" + std::to_string(which);
  }
  return "Theta_" + std::to_string(a);
}

Rat elem_contribution(const FiberType& t, int a) {
  if (a == 0) return 0;
  switch (t.cls) {
    case FiberClass::I: return make_rat(a * (t.m - a), t.m);
    case FiberClass::Istar: {
      bool near = t.m % 2 == 1 ? a == 2 : a == 1;
      return near ? Rat(1) : Rat(1) + make_rat(t.m, 4);
    }
    case FiberClass::III: return make_rat(1, 2);
    case FiberClass::IIIstar: return make_rat(3, 2);
    case FiberClass::IV: return make_rat(2, 3);
    case FiberClass::IVstar: return make_rat(4, 3);
    case FiberClass::II:
    case FiberClass::IIstar: return 0;
  }
  throw math_error("unreachable fiber class");
}

namespace {

using Tuple = std::vector<int>;

struct Enumeration {
  std::vector<const LocalFiberData*> active;  // entries with nontrivial group
  std::vector<int> sizes;

  Tuple zero() const { return Tuple(active.size(), 0); }
  Tuple add(const Tuple& a, const Tuple& b) const {
    Tuple out(a.size());
    for (size_t i = 0; i < a.size(); ++i)
      out[i] = elem_add(active[i]->type, a[i], b[i]);
    return out;
  }
  int order(const Tuple& a) const {
    int ord = 1;
    for (size_t i = 0; i < a.size(); ++i)
      ord = std::lcm(ord, elem_order(active[i]->type, a[i]));
    return ord;
  }
  Rat contribution(const Tuple& a) const {
    Rat sum = 0;
    for (size_t i = 0; i < a.size(); ++i)
      sum += Rat(active[i]->point_count) *
             elem_contribution(active[i]->type, a[i]);
    return sum;
  }
  bool is_zero(const Tuple& a) const {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
  }
};

}  // namespace

TorsionReport torsion_feasibility(const FiberConfiguration& cfg, int chi) {
  TorsionReport report;
  report.target = Rat(2 * chi);

  Enumeration en;
  long total = 1;
  for (const auto& e : cfg.entries) {
    if (group_order(e.type) == 1) continue;
    en.active.push_back(&e);
    en.sizes.push_back(group_order(e.type));
    total *= en.sizes.back();
    if (total > 1000000)
      throw math_error("component group search space is too large");
  }

  // All component choices meeting the height relation.
  std::set<Tuple> solutions;
  Tuple cur = en.zero();
  for (long step = 0; step < total; ++step) {
    if (!en.is_zero(cur) && en.contribution(cur) == report.target)
      solutions.insert(cur);
    for (size_t i = 0; i < cur.size(); ++i) {  // mixed-radix increment
      if (++cur[i] < en.sizes[i]) break;
      cur[i] = 0;
    }
  }

  for (const auto& g : solutions)
    if (en.order(g) == 2) ++report.two_torsion_count;
  report.unique_two_torsion = report.two_torsion_count == 1;

  auto in_solutions = [&](const Tuple& g) {
    return solutions.find(g) != solutions.end();
  };

  // Cyclic subgroups: every nonzero multiple must satisfy the relation.
  std::set<int> cyclic_orders;
  for (const auto& g : solutions) {
    int d = en.order(g);
    bool ok = true;
    Tuple acc = g;
    for (int k = 2; k < d && ok; ++k) {
      acc = en.add(acc, g);
      ok = in_solutions(acc);
    }
    if (!ok) continue;
    if (cyclic_orders.insert(d).second) {
      TorsionWitness w;
      w.order = d;
      size_t idx = 0;
      for (const auto& e : cfg.entries) {
        bool active = group_order(e.type) > 1;
        int elem = 0;
        if (active) elem = g[idx++];
        w.elems.push_back(elem);
        w.labels.push_back(elem_label(e.type, elem));
      }
      report.witnesses.emplace(d, std::move(w));
    }
  }
  report.feasible_cyclic_orders.assign(cyclic_orders.begin(),
                                       cyclic_orders.end());

  std::set<std::vector<int>> groups;
  for (int d : cyclic_orders) groups.insert({d});

  // Two-generator subgroups assembled from pairs of solutions.
  std::vector<Tuple> sol_list(solutions.begin(), solutions.end());
  for (size_t i = 0; i < sol_list.size(); ++i) {
    for (size_t j = i + 1; j < sol_list.size(); ++j) {
      std::set<Tuple> span;
      const Tuple &g = sol_list[i], &h = sol_list[j];
      int dg = en.order(g), dh = en.order(h);
      Tuple ag = en.zero();
      bool ok = true;
      for (int a = 0; a < dg && ok; ++a) {
        Tuple el = ag;
        for (int b = 0; b < dh && ok; ++b) {
          span.insert(el);
          if (!en.is_zero(el)) ok = in_solutions(el);
          el = en.add(el, h);
        }
        ag = en.add(ag, g);
      }
      if (!ok) continue;
      long order = static_cast<long>(span.size());
      int exponent = 1;
      for (const auto& el : span) exponent = std::lcm(exponent, en.order(el));
      if (order == exponent) continue;  // cyclic, already counted
      long d1 = order / exponent;
      groups.insert({static_cast<int>(d1), exponent});
    }
  }
  report.feasible_groups.assign(groups.begin(), groups.end());

  long best = 1;
  std::vector<int> verdict;
  for (const auto& g : report.feasible_groups) {
    long order = 1;
    for (int d : g) order *= d;
    if (order > best ||
        (order == best && std::lexicographical_compare(
                              verdict.begin(), verdict.end(), g.begin(),
                              g.end()))) {
      best = order;
      verdict = g;
    }
  }
  report.verdict = verdict;
  return report;
}

ModularityCriteria modularity_criteria(const FiberConfiguration& cfg,
                                       int mw_rank, bool j_constant) {
  ModularityCriteria out;
  out.extremal = mw_rank == 0;
  out.no_star_obstruction = true;
  for (const auto& e : cfg.entries)
    if (e.type.cls == FiberClass::IIstar || e.type.cls == FiberClass::IIIstar)
      out.no_star_obstruction = false;
  out.j_nonconstant = !j_constant;
  out.verdict = out.extremal && out.no_star_obstruction && out.j_nonconstant;
  return out;
}

}  // namespace ellq
