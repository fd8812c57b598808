#include "ellq/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace ellq {

namespace {

IntMat zero_mat(int n) {
  return IntMat(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n), 0));
}

// Negative definite simply-laced root lattice from an adjacency list.
IntegralLattice from_graph(const std::string& name, int n,
                           const std::vector<std::pair<int, int>>& edges) {
  IntegralLattice L;
  L.name = name;
  L.gram = zero_mat(n);
  for (int i = 0; i < n; ++i) L.gram[i][i] = -2;
  for (auto [a, b] : edges) {
    L.gram[a][b] = 1;
    L.gram[b][a] = 1;
  }
  return L;
}

std::vector<std::pair<int, int>> chain_edges(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return edges;
}

}  // namespace

IntegralLattice lattice_A(int k) {
  if (k < 1) throw math_error("A_k requires k >= 1");
  return from_graph("A" + std::to_string(k), k, chain_edges(k));
}

IntegralLattice lattice_D(int k) {
  if (k < 4) throw math_error("D_k requires k >= 4");
  // Node 0 and nodes k-2, k-1 are the three leaves hanging off the spine
  // 1 .. k-3; for k == 4 the spine is the single central node 1.
  std::vector<std::pair<int, int>> edges;
  edges.emplace_back(0, 1);
  for (int i = 1; i + 1 <= k - 3; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(k - 3, k - 2);
  edges.emplace_back(k - 3, k - 1);
  return from_graph("D" + std::to_string(k), k, edges);
}

IntegralLattice lattice_E(int k) {
  if (k < 6 || k > 8) throw math_error("E_k requires k in {6,7,8}");
  // Chain 0 .. k-2 with node k-1 attached to node 2: arm lengths
  // (2, k-4, 1) around the branch node, i.e. E6, E7, E8.
  auto edges = chain_edges(k - 1);
  edges.emplace_back(2, k - 1);
  return from_graph("E" + std::to_string(k), k, edges);
}

IntegralLattice lattice_U() {
  IntegralLattice L;
  L.name = "U";
  L.gram = {{0, 1}, {1, 0}};
  return L;
}

IntegralLattice lattice_scalar(const Int& m) {
  IntegralLattice L;
  L.name = "<" + m.get_str() + ">";
  L.gram = {{m}};
  return L;
}

IntegralLattice direct_sum(const std::vector<IntegralLattice>& parts) {
  IntegralLattice L;
  int n = 0;
  for (const auto& p : parts) n += p.rank();
  L.gram = zero_mat(n);
  int off = 0;
  for (const auto& p : parts) {
    for (int i = 0; i < p.rank(); ++i)
      for (int j = 0; j < p.rank(); ++j) L.gram[off + i][off + j] = p.gram[i][j];
    off += p.rank();
    if (!L.name.empty()) L.name += " + ";
    L.name += p.name;
  }
  return L;
}

Int lattice_det(const IntegralLattice& L) {
  // Bareiss fraction-free elimination.
  int n = L.rank();
  if (n == 0) return 1;
  IntMat a = L.gram;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::pair<int, int> lattice_signature(const IntegralLattice& L) {
  int n = L.rank();
  RatMat a(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rat(L.gram[i][j]);
  auto swap_rc = [&](int i, int j) {
    std::swap(a[i], a[j]);
    for (int r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
  };
  auto add_rc = [&](int i, int j, const Rat& f) {  // row/col i += f * row/col j
    for (int c = 0; c < n; ++c) a[i][c] += f * a[j][c];
    for (int r = 0; r < n; ++r) a[r][i] += f * a[r][j];
  };
  int pos = 0, neg = 0;
  for (int i = 0; i < n; ++i) {
    if (a[i][i] == 0) {
      int with_diag = -1, with_off = -1;
      for (int j = i + 1; j < n; ++j) {
        if (a[j][j] != 0 && with_diag < 0) with_diag = j;
        if (a[i][j] != 0 && with_off < 0) with_off = j;
      }
      if (with_diag >= 0) {
        swap_rc(i, with_diag);
      } else if (with_off >= 0) {
        add_rc(i, with_off, 1);  // a[i][i] becomes 2*a[i][with_off] != 0
      } else {
        throw math_error("degenerate Gram matrix has no signature");
      }
    }
    Rat pivot = a[i][i];
    for (int j = i + 1; j < n; ++j) {
      if (a[j][i] == 0) continue;
      add_rc(j, i, -a[j][i] / pivot);
    }
    if (pivot > 0)
      ++pos;
    else
      ++neg;
  }
  return {pos, neg};
}

bool lattice_is_even(const IntegralLattice& L) {
  for (int i = 0; i < L.rank(); ++i)
    if (L.gram[i][i] % 2 != 0) return false;
  return true;
}

namespace {

// Smith normal form D = S * A * T; tracks P = S^{-1} so that the i-th
// column of P maps to the i-th standard generator of coker(A).
struct SnfResult {
  IntMat d;
  IntMat s_inv;
};

SnfResult smith_normal_form(const IntMat& input) {
  int n = static_cast<int>(input.size());
  SnfResult r;
  r.d = input;
  r.s_inv = zero_mat(n);
  for (int i = 0; i < n; ++i) r.s_inv[i][i] = 1;
  IntMat& d = r.d;
  IntMat& p = r.s_inv;

  // Row ops on D mirror as inverse column ops on P.
  auto row_swap = [&](int i, int j) {
    std::swap(d[i], d[j]);
    for (int k = 0; k < n; ++k) std::swap(p[k][i], p[k][j]);
  };
  auto row_add = [&](int i, int j, const Int& c) {  // row_i += c * row_j
    for (int k = 0; k < n; ++k) d[i][k] += c * d[j][k];
    for (int k = 0; k < n; ++k) p[k][j] -= c * p[k][i];
  };
  auto row_neg = [&](int i) {
    for (int k = 0; k < n; ++k) d[i][k] = -d[i][k];
    for (int k = 0; k < n; ++k) p[k][i] = -p[k][i];
  };
  auto col_swap = [&](int i, int j) {
    for (int k = 0; k < n; ++k) std::swap(d[k][i], d[k][j]);
  };
  auto col_add = [&](int i, int j, const Int& c) {  // col_i += c * col_j
    for (int k = 0; k < n; ++k) d[k][i] += c * d[k][j];
  };

  // Quotient that leaves a centered remainder in (-b/2, b/2]; requires b > 0.
  auto nearest_quotient = [](const Int& a, const Int& b) {
    Int q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * rem > b) ++q;
    return q;
  };

  for (int t = 0; t < n; ++t) {
    // Pivot on the nonzero entry of least magnitude.  A first-nonzero pivot
    // lets the worked entries grow out of control on larger matrices; the
    // minimal pivot plus centered remainders keeps them small.
    int pi = -1, pj = -1;
    auto select_pivot = [&]() {
      pi = -1;
      pj = -1;
      for (int i = t; i < n; ++i)
        for (int j = t; j < n; ++j) {
          if (d[i][j] == 0) continue;
          if (pi < 0 ||
              mpz_cmpabs(d[i][j].get_mpz_t(), d[pi][pj].get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      return pi >= 0;
    };
    if (!select_pivot()) break;  // all zero from here on
    while (true) {
      row_swap(t, pi);
      col_swap(t, pj);
      if (d[t][t] < 0) row_neg(t);
      bool clean = true;
      for (int i = t + 1; i < n; ++i) {
        if (d[i][t] == 0) continue;
        row_add(i, t, -nearest_quotient(d[i][t], d[t][t]));
        if (d[i][t] != 0) clean = false;  // remainder: smaller pivot next
      }
      for (int j = t + 1; j < n; ++j) {
        if (d[t][j] == 0) continue;
        col_add(j, t, -nearest_quotient(d[t][j], d[t][t]));
        if (d[t][j] != 0) clean = false;
      }
      if (clean) {
        // Enforce divisibility of the remaining block by the pivot.
        bool divides = true;
        for (int i = t + 1; i < n && divides; ++i)
          for (int j = t + 1; j < n && divides; ++j)
            if (d[i][j] % d[t][t] != 0) {
              row_add(t, i, 1);
              divides = false;
            }
        if (divides) break;
      }
      select_pivot();  // nonzero entries remain, so this always succeeds
    }
  }
  return r;
}

RatMat rat_inverse(const IntMat& a) {
  int n = static_cast<int>(a.size());
  RatMat m(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(2 * n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rat(a[i][j]);
    m[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw math_error("Gram matrix is singular");
    std::swap(m[c], m[pivot]);
    Rat pv = m[c][c];
    for (int j = 0; j < 2 * n; ++j) m[c][j] /= pv;
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rat f = m[r][c];
      for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  RatMat inv(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

std::vector<Rat> mat_vec(const RatMat& m, const std::vector<Rat>& v) {
  std::vector<Rat> out(m.size(), Rat(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}


// w^T G v for rational vectors in lattice coordinates.
Rat gram_pair(const IntMat& gram, const std::vector<Rat>& w,
              const std::vector<Rat>& v) {
  Rat s = 0;
  for (size_t i = 0; i < gram.size(); ++i) {
    if (w[i] == 0) continue;
    Rat row = 0;
    for (size_t j = 0; j < gram.size(); ++j) row += Rat(gram[i][j]) * v[j];
    s += w[i] * row;
  }
  return s;
}

}  // namespace

Int DiscriminantForm::order() const {
  Int o = 1;
  for (const auto& d : orders) o *= d;
  return o;
}

DiscriminantForm discriminant_form(const IntegralLattice& L) {
  DiscriminantForm out;
  int n = L.rank();
  if (n == 0) return out;
  SnfResult snf = smith_normal_form(L.gram);
  RatMat ginv = rat_inverse(L.gram);
  std::vector<std::vector<Rat>> gens;
  for (int i = 0; i < n; ++i) {
    const Int& di = snf.d[i][i];
    if (di == 0) throw math_error("degenerate lattice has no discriminant form");
    if (di == 1) continue;
    out.orders.push_back(di);
    std::vector<Rat> m(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) m[static_cast<size_t>(r)] = Rat(snf.s_inv[r][i]);
    gens.push_back(mat_vec(ginv, m));  // dual vector of the generator
  }
  size_t r = gens.size();
  out.generators = gens;
  out.q = RatMat(r, std::vector<Rat>(r));
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = i; j < r; ++j) {
      Rat v = gram_pair(L.gram, gens[i], gens[j]);
      if (i == j) {
        out.q[i][i] = rat_mod(v, 2);
      } else {
        out.q[i][j] = out.q[j][i] = rat_mod(v, 1);
      }
    }
  }
  return out;
}

DiscriminantForm negate_form(const DiscriminantForm& f) {
  DiscriminantForm out = f;
  size_t r = f.orders.size();
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j)
      out.q[i][j] = rat_mod(-f.q[i][j], i == j ? 2 : 1);
  return out;
}

namespace {

std::vector<Rat> frac_part(const std::vector<Rat>& v) {
  std::vector<Rat> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = rat_mod(v[i], 1);
  return out;
}

// Hermite-style integral row basis of the row space of an integer matrix of
// full column rank n; returns n rows in echelon form.
IntMat row_basis(IntMat rows, int n) {
  int m = static_cast<int>(rows.size());
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    while (true) {
      int best = -1;
      for (int i = r; i < m; ++i)
        if (rows[i][c] != 0 &&
            (best < 0 || abs(rows[i][c]) < abs(rows[best][c])))
          best = i;
      if (best < 0) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (int i = r + 1; i < m; ++i) {
        if (rows[i][c] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(),
                   rows[r][c].get_mpz_t());
        for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][c] != 0) {
      if (rows[r][c] < 0)
        for (int j = 0; j < n; ++j) rows[r][j] = -rows[r][j];
      ++r;
    }
  }
  if (r != n) throw math_error("glued lattice lost rank");
  rows.resize(static_cast<size_t>(n));
  return rows;
}

}  // namespace

Overlattice overlattice(const IntegralLattice& L, const RatMat& glue_vectors) {
  int n = L.rank();
  if (!lattice_is_even(L))
    throw math_error("overlattice construction expects an even lattice");
  for (const auto& w : glue_vectors) {
    if (static_cast<int>(w.size()) != n)
      throw math_error("glue vector has wrong length");
    // Membership in the dual: G*w integral.
    for (int i = 0; i < n; ++i) {
      Rat row = 0;
      for (int j = 0; j < n; ++j) row += Rat(L.gram[i][j]) * w[j];
      if (!rat_is_integer(row))
        throw math_error("glue vector is not in the dual lattice");
    }
  }
  // Isotropy of the generated subgroup: q vanishes on the generators and the
  // pairings are integral, which extends to the whole subgroup bilinearly.
  for (size_t i = 0; i < glue_vectors.size(); ++i) {
    Rat qi = gram_pair(L.gram, glue_vectors[i], glue_vectors[i]);
    if (rat_mod(qi, 2) != 0)
      throw math_error("glue class is not isotropic: q = " + rat_str(qi));
    for (size_t j = i + 1; j < glue_vectors.size(); ++j) {
      Rat bij = gram_pair(L.gram, glue_vectors[i], glue_vectors[j]);
      if (!rat_is_integer(bij))
        throw math_error("glue classes do not pair integrally");
    }
  }
  // Order of the glue subgroup of L*/L by closure of fractional classes.
  std::set<std::vector<Rat>> subgroup;
  subgroup.insert(std::vector<Rat>(static_cast<size_t>(n), Rat(0)));
  std::vector<std::vector<Rat>> frontier = {
      std::vector<Rat>(static_cast<size_t>(n), Rat(0))};
  while (!frontier.empty()) {
    std::vector<std::vector<Rat>> next;
    for (const auto& el : frontier) {
      for (const auto& w : glue_vectors) {
        std::vector<Rat> sum(el);
        for (int i = 0; i < n; ++i) sum[static_cast<size_t>(i)] += w[static_cast<size_t>(i)];
        sum = frac_part(sum);
        if (subgroup.insert(sum).second) next.push_back(sum);
      }
    }
    frontier = std::move(next);
  }
  Int index(static_cast<unsigned long>(subgroup.size()));

  // Integral basis of L + Z*glue via a common denominator.
  Int denom = 1;
  for (const auto& w : glue_vectors)
    for (const auto& x : w)
      mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), x.get_den_mpz_t());
  IntMat rows;
  for (const auto& w : glue_vectors) {
    std::vector<Int> row(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      Rat scaled = w[static_cast<size_t>(i)] * Rat(denom);
      row[static_cast<size_t>(i)] = scaled.get_num();
    }
    rows.push_back(std::move(row));
  }
  for (int i = 0; i < n; ++i) {
    std::vector<Int> row(static_cast<size_t>(n), 0);
    row[static_cast<size_t>(i)] = denom;
    rows.push_back(std::move(row));
  }
  IntMat basis = row_basis(std::move(rows), n);

  // New Gram matrix: B G B^T with B = basis / denom.
  Overlattice out;
  out.index = index;
  out.lattice.name = L.name + (glue_vectors.empty() ? "" : " glued");
  out.lattice.gram = zero_mat(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> bi(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k)
      bi[static_cast<size_t>(k)] = make_rat(basis[i][k], denom);
    for (int j = i; j < n; ++j) {
      std::vector<Rat> bj(static_cast<size_t>(n));
      for (int k = 0; k < n; ++k)
        bj[static_cast<size_t>(k)] = make_rat(basis[j][k], denom);
      Rat v = gram_pair(L.gram, bi, bj);
      if (!rat_is_integer(v))
        throw math_error("glued lattice is not integral");
      out.lattice.gram[i][j] = out.lattice.gram[j][i] = v.get_num();
    }
  }
  if (!lattice_is_even(out.lattice))
    throw math_error("glued lattice is not even");
  if (lattice_det(out.lattice) * index * index != lattice_det(L))
    throw math_error("glued lattice determinant check failed");
  return out;
}

namespace {

// Root piece of a fiber type, if any, with the node index carrying each
// nonzero component group element.
struct RootPiece {
  IntegralLattice lattice;
  std::map<int, int> node_of_elem;
};

std::optional<RootPiece> root_piece(const FiberType& t) {
  RootPiece piece;
  switch (t.cls) {
    case FiberClass::I:
      if (t.m < 2) return std::nullopt;
      piece.lattice = lattice_A(t.m - 1);
      for (int j = 1; j < t.m; ++j) piece.node_of_elem[j] = j - 1;
      return piece;
    case FiberClass::III:
      piece.lattice = lattice_A(1);
      piece.node_of_elem[1] = 0;
      return piece;
    case FiberClass::IV:
      piece.lattice = lattice_A(2);
      piece.node_of_elem[1] = 0;
      piece.node_of_elem[2] = 1;
      return piece;
    case FiberClass::Istar: {
      int k = t.m + 4;
      piece.lattice = lattice_D(k);
      // Leaves: node 0 (near the zero component) and nodes k-2, k-1 (far).
      if (t.m % 2 == 1) {
        piece.node_of_elem[1] = k - 2;
        piece.node_of_elem[2] = 0;
        piece.node_of_elem[3] = k - 1;
      } else {
        piece.node_of_elem[1] = 0;
        piece.node_of_elem[2] = k - 2;
        piece.node_of_elem[3] = k - 1;
      }
      return piece;
    }
    case FiberClass::IVstar: {
      piece.lattice = lattice_E(6);
      // The two ends of the long chain carry the nontrivial classes.
      piece.node_of_elem[1] = 0;
      piece.node_of_elem[2] = 4;
      return piece;
    }
    case FiberClass::IIIstar: {
      piece.lattice = lattice_E(7);
      // The unique node whose dual diagonal is -3/2 (found below).
      piece.node_of_elem[1] = -1;
      return piece;
    }
    case FiberClass::IIstar:
      piece.lattice = lattice_E(8);
      return piece;
    case FiberClass::II:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

FibrationLattice ns_from_fibration(const FiberConfiguration& cfg,
                                   const std::vector<TorsionWitness>& sections) {
  FibrationLattice out;
  std::vector<IntegralLattice> parts = {lattice_U()};
  // Offsets of each (entry, geometric copy) piece in the direct sum.
  std::vector<std::vector<int>> offsets(cfg.entries.size());
  std::vector<std::optional<RootPiece>> pieces;
  int off = 2;
  for (size_t v = 0; v < cfg.entries.size(); ++v) {
    const auto& e = cfg.entries[v];
    auto piece = root_piece(e.type);
    pieces.push_back(piece);
    if (!piece) continue;
    // Locate dual-diagonal target nodes where the layout left a placeholder.
    RatMat ginv = rat_inverse(piece->lattice.gram);
    for (auto& [elem, node] : piece->node_of_elem) {
      if (node >= 0) continue;
      Rat target = -elem_contribution(e.type, elem);
      for (int i = 0; i < piece->lattice.rank(); ++i)
        if (ginv[static_cast<size_t>(i)][static_cast<size_t>(i)] == target) {
          node = i;
          break;
        }
      if (node < 0) throw math_error("no node matches the component class");
    }
    pieces.back() = piece;
    for (int c = 0; c < e.point_count; ++c) {
      offsets[v].push_back(off);
      off += piece->lattice.rank();
      parts.push_back(piece->lattice);
      parts.back().name += " (" + e.place.str() + ")";
      out.piece_names.push_back(parts.back().name);
    }
  }
  out.trivial = direct_sum(parts);
  out.trivial.name = "U + fibers";
  int n = out.trivial.rank();

  RatMat glue;
  for (const auto& w : sections) {
    if (w.elems.size() != cfg.entries.size())
      throw math_error("torsion witness does not match the configuration");
    std::vector<Rat> vec(static_cast<size_t>(n), Rat(0));
    bool nonzero = false;
    for (size_t v = 0; v < cfg.entries.size(); ++v) {
      int elem = w.elems[v];
      if (elem == 0) continue;
      if (!pieces[v])
        throw math_error("witness selects a component of an irreducible fiber");
      auto it = pieces[v]->node_of_elem.find(elem);
      if (it == pieces[v]->node_of_elem.end())
        throw math_error("witness component has no lattice node");
      // Dual vector of the node within the piece, repeated at every copy.
      RatMat ginv = rat_inverse(pieces[v]->lattice.gram);
      for (int copy : offsets[v]) {
        for (int r = 0; r < pieces[v]->lattice.rank(); ++r) {
          vec[static_cast<size_t>(copy + r)] =
              ginv[static_cast<size_t>(r)][static_cast<size_t>(it->second)];
          if (vec[static_cast<size_t>(copy + r)] != 0) nonzero = true;
        }
      }
    }
    if (nonzero) glue.push_back(std::move(vec));
  }
  Overlattice glued = overlattice(out.trivial, glue);
  out.neron_severi = glued.lattice;
  out.neron_severi.name = "NS";
  out.glue_index = glued.index;
  return out;
}

namespace {

struct FormGroup {
  std::vector<long> orders;
  RatMat q;

  long size() const {
    long s = 1;
    for (long d : orders) s *= d;
    return s;
  }
  long elem_order(const std::vector<long>& x) const {
    long o = 1;
    for (size_t i = 0; i < orders.size(); ++i)
      o = std::lcm(o, orders[i] / std::gcd(orders[i], x[i]));
    return o;
  }
  Rat q_of(const std::vector<long>& x) const {
    Rat s = 0;
    for (size_t i = 0; i < orders.size(); ++i) {
      if (x[i] == 0) continue;
      s += Rat(x[i]) * Rat(x[i]) * q[i][i];
      for (size_t j = i + 1; j < orders.size(); ++j)
        s += 2 * Rat(x[i]) * Rat(x[j]) * q[i][j];
    }
    return rat_mod(s, 2);
  }
  Rat b_of(const std::vector<long>& x, const std::vector<long>& y) const {
    Rat s = 0;
    for (size_t i = 0; i < orders.size(); ++i)
      for (size_t j = 0; j < orders.size(); ++j) {
        if (x[i] == 0 || y[j] == 0) continue;
        Rat bij = i == j ? q[i][i] / 2 : q[i][j];
        s += Rat(x[i]) * Rat(y[j]) * bij;
      }
    return rat_mod(s, 1);
  }
  std::vector<std::vector<long>> all_elements() const {
    std::vector<std::vector<long>> out;
    std::vector<long> cur(orders.size(), 0);
    long total = size();
    for (long step = 0; step < total; ++step) {
      out.push_back(cur);
      for (size_t i = 0; i < cur.size(); ++i) {
        if (++cur[i] < orders[i]) break;
        cur[i] = 0;
      }
    }
    return out;
  }
};

FormGroup to_group(const DiscriminantForm& f) {
  FormGroup g;
  for (const auto& d : f.orders) g.orders.push_back(to_long(d));
  g.q = f.q;
  return g;
}

}  // namespace

bool qforms_isomorphic(const DiscriminantForm& a, const DiscriminantForm& b) {
  if (a.orders.size() != b.orders.size()) return false;
  for (size_t i = 0; i < a.orders.size(); ++i)
    if (a.orders[i] != b.orders[i]) return false;
  if (a.trivial()) return true;
  FormGroup ga = to_group(a), gb = to_group(b);
  if (ga.size() > 10000)
    throw math_error("discriminant group too large for exhaustive isomorphism");

  std::vector<std::vector<long>> elements = gb.all_elements();
  // Invariant prefilter: multiset of (element order, q value).
  {
    std::multiset<std::pair<long, std::string>> ma, mb;
    for (const auto& x : ga.all_elements())
      ma.emplace(ga.elem_order(x), rat_str(ga.q_of(x)));
    for (const auto& x : elements) mb.emplace(gb.elem_order(x), rat_str(gb.q_of(x)));
    if (ma != mb) return false;
  }

  size_t r = ga.orders.size();
  std::vector<std::vector<long>> gens_a(r);
  for (size_t i = 0; i < r; ++i) {
    gens_a[i] = std::vector<long>(r, 0);
    gens_a[i][i] = 1;
  }
  std::vector<std::vector<long>> images(r);

  // Depth-first search for generator images preserving order, q and b.
  auto span_is_everything = [&]() {
    std::set<std::vector<long>> span;
    std::vector<long> cur(r, 0);
    long total = 1;
    for (size_t i = 0; i < r; ++i) total *= ga.orders[i];
    for (long step = 0; step < total; ++step) {
      std::vector<long> el(r, 0);
      for (size_t i = 0; i < r; ++i) {
        if (cur[i] == 0) continue;
        for (size_t k = 0; k < r; ++k)
          el[k] = (el[k] + cur[i] * images[i][k]) % gb.orders[k];
      }
      span.insert(el);
      for (size_t i = 0; i < r; ++i) {
        if (++cur[i] < ga.orders[i]) break;
        cur[i] = 0;
      }
    }
    return static_cast<long>(span.size()) == gb.size();
  };

  std::function<bool(size_t)> dfs = [&](size_t k) -> bool {
    if (k == r) return span_is_everything();
    for (const auto& y : elements) {
      if (gb.elem_order(y) != ga.elem_order(gens_a[k])) continue;
      if (gb.q_of(y) != ga.q_of(gens_a[k])) continue;
      bool ok = true;
      for (size_t j = 0; j < k && ok; ++j)
        ok = gb.b_of(images[j], y) == ga.b_of(gens_a[j], gens_a[k]);
      if (!ok) continue;
      images[k] = y;
      if (dfs(k + 1)) return true;
    }
    return false;
  };
  return dfs(0);
}

TranscendentalCheck transcendental_match(const IntegralLattice& ns,
                                         const IntegralLattice& candidate) {
  TranscendentalCheck out;
  out.rank_expected = 22 - ns.rank();
  auto sig_ns = lattice_signature(ns);
  out.sig_expected = {3 - sig_ns.first, 19 - sig_ns.second};
  out.rank_ok = candidate.rank() == out.rank_expected;
  out.sig_ok = out.rank_ok && lattice_signature(candidate) == out.sig_expected;
  out.form_ok =
      qforms_isomorphic(discriminant_form(candidate),
                        negate_form(discriminant_form(ns)));
  out.verdict = out.rank_ok && out.sig_ok && out.form_ok;
  return out;
}

}  // namespace ellq
