#pragma once
// Even integral lattices and their discriminant forms.
//
// A lattice is stored as an integer Gram matrix.  Supported operations:
//   - builders for the negative definite root lattices A_k, D_k, E_6/7/8,
//     the hyperbolic plane U and rank-one lattices <m>;
//   - exact determinant (fraction-free elimination) and signature (rational
//     symmetric congruence diagonalization);
//   - discriminant group and quadratic form via Smith normal form, with
//     generators expressed as rational vectors in the lattice basis;
//   - finite-index overlattices generated by rational glue vectors, with
//     isotropy verification and a Hermite-style integral basis;
//   - the Neron-Severi lattice of an elliptic fibration: U plus one root
//     piece per geometric fiber component, glued by torsion sections;
//   - brute-force isomorphism of finite quadratic forms, and the test that a
//     candidate transcendental lattice complements a K3 Neron-Severi
//     lattice (rank, signature and opposite discriminant form).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellq/kodaira.hpp"
#include "ellq/surface.hpp"

namespace ellq {

using IntMat = std::vector<std::vector<Int>>;
using RatMat = std::vector<std::vector<Rat>>;

struct IntegralLattice {
  std::string name;
  IntMat gram;  // symmetric
  int rank() const { return static_cast<int>(gram.size()); }
};

IntegralLattice lattice_A(int k);             // k >= 1
IntegralLattice lattice_D(int k);             // k >= 4
IntegralLattice lattice_E(int k);             // k in {6, 7, 8}
IntegralLattice lattice_U();
IntegralLattice lattice_scalar(const Int& m);  // <m>
IntegralLattice direct_sum(const std::vector<IntegralLattice>& parts);

Int lattice_det(const IntegralLattice& L);
// (n_plus, n_minus); throws on a degenerate form.
std::pair<int, int> lattice_signature(const IntegralLattice& L);
bool lattice_is_even(const IntegralLattice& L);

// The finite group L*/L written as (Z/d_1) x ... x (Z/d_r) with d_i | d_{i+1}
// and d_i > 1, carrying the induced quadratic form q with values in Q/2Z on
// the diagonal and the bilinear form values in Q/Z off the diagonal.
struct DiscriminantForm {
  std::vector<Int> orders;
  RatMat generators;  // generators[i] = coordinates of g_i in the basis of L
  RatMat q;           // q[i][i] in [0,2), q[i][j] = b(g_i,g_j) in [0,1)
  Int order() const;
  bool trivial() const { return orders.empty(); }
};

DiscriminantForm discriminant_form(const IntegralLattice& L);
// The form with all values negated (discriminant form of L(-1)).
DiscriminantForm negate_form(const DiscriminantForm& f);

struct Overlattice {
  IntegralLattice lattice;
  Int index;  // index of L in the overlattice
};

// Overlattice generated by L and the given rational vectors (coordinates in
// the basis of L).  Each vector must lie in L*, the generated subgroup of
// L*/L must be isotropic for q, and the result is verified to be an even
// integral lattice with det = det(L) / index^2.
Overlattice overlattice(const IntegralLattice& L, const RatMat& glue_vectors);

struct FibrationLattice {
  IntegralLattice trivial;       // U + root pieces of all fibers
  IntegralLattice neron_severi;  // glued by the torsion sections
  Int glue_index;
  std::vector<std::string> piece_names;
};

// Builds U + (root piece per geometric fiber component) and glues in one
// vector per torsion witness, the witness component choice repeated at each
// of the point_count geometric points of an entry.
FibrationLattice ns_from_fibration(const FiberConfiguration& cfg,
                                   const std::vector<TorsionWitness>& sections);

// Group isomorphism preserving q (checked exhaustively; group order is
// capped at 10^4).
bool qforms_isomorphic(const DiscriminantForm& a, const DiscriminantForm& b);

struct TranscendentalCheck {
  int rank_expected = 0;
  std::pair<int, int> sig_expected = {0, 0};
  bool rank_ok = false;
  bool sig_ok = false;
  bool form_ok = false;
  bool verdict = false;
};

// Tests whether candidate could be the transcendental lattice of a K3
// surface with the given Neron-Severi lattice: rank 22 - rho, signature
// (3,19) - sig(NS), discriminant form opposite to that of NS.
TranscendentalCheck transcendental_match(const IntegralLattice& ns,
                                         const IntegralLattice& candidate);

}  // namespace ellq
