#pragma once
// Report layer and command-line driver.
//
// Every result type of the library serializes to a JSON record with a
// stable, key-sorted schema, and to a markdown rendering whose tables follow
// the usual layouts for fiber configurations, singularity lists and lattice
// data.  Identical invocations produce byte-identical output.
//
// JSON conventions:
//   - every document carries a "schema_version" field;
//   - exact numbers backed by GMP (Int, Rat) are emitted as decimal strings
//     "a" or "a/b", never as floating point; machine integers that count or
//     index things (ranks, degrees, multiplicities) are JSON numbers;
//   - polynomials, equations and places use the canonical text form of the
//     algebra kernel, so parse(print(p)) == p;
//   - object keys are emitted in sorted order.

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

#include "ellq/base_change.hpp"
#include "ellq/family.hpp"
#include "ellq/isogeny.hpp"
#include "ellq/kodaira.hpp"
#include "ellq/lattice.hpp"
#include "ellq/surface.hpp"
#include "ellq/weierstrass.hpp"

namespace ellq {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// --- JSON serialization hooks (found by nlohmann via ADL) --------------------

void to_json(Json& j, const Place& p);
void to_json(Json& j, const FiberType& t);
void to_json(Json& j, const LocalFiberData& d);
void to_json(Json& j, const FiberConfiguration& cfg);
void to_json(Json& j, const SurfaceInvariants& s);
void to_json(Json& j, const TorsionWitness& w);
void to_json(Json& j, const TorsionReport& r);
void to_json(Json& j, const ModularityCriteria& m);
void to_json(Json& j, const WeierstrassModel& m);
void to_json(Json& j, const BaseChangeRow& r);
void to_json(Json& j, const BaseChangeReport& r);
void to_json(Json& j, const CurveSpecialPoint& p);
void to_json(Json& j, const CurveData& c);
void to_json(Json& j, const QuotientSingularity& s);
void to_json(Json& j, const GraphNode& node);
void to_json(Json& j, const ResolutionGraph& g);
void to_json(Json& j, const FiberGraphs& g);
void to_json(Json& j, const NamedEquation& e);
void to_json(Json& j, const FamilyWeierstrass& f);
void to_json(Json& j, const SubstitutionResult& r);
void to_json(Json& j, const IdentityCheck& c);
void to_json(Json& j, const IntegralLattice& L);
void to_json(Json& j, const DiscriminantForm& f);
void to_json(Json& j, const FibrationLattice& L);
void to_json(Json& j, const TranscendentalCheck& c);
void to_json(Json& j, const K3FiberReport& r);
void to_json(Json& j, const ThreefoldDiscriminant& d);
void to_json(Json& j, const FibrationTableRow& r);
void to_json(Json& j, const FibrationTableReport& r);
void to_json(Json& j, const CanonicalCheck& c);
void to_json(Json& j, const BoundLine& line);
void to_json(Json& j, const KodairaBounds& b);

// "Z/4Z", "Z/2Z x Z/4Z", ... from an invariant factor list; "0" when empty.
std::string abelian_group_name(const std::vector<int>& invariant_factors);

// Markdown table; cells are used verbatim.
std::string md_table(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows);

// --- command-line driver ------------------------------------------------------
//
// Commands:
//   curve N                       genus, special points, local weights of C_n
//   surface N                     the elliptic surface of level N (N = 1 is
//                                 the rational member): fibers and invariants
//   singularities N               quotient singularities and resolutions
//   fibers --builtin z5 | r       fiber classification of a named model
//   fibers --file PATH            ... or of equations from a file, one per
//                                 line as "name: polynomial = polynomial"
//   base-change N K               pullback of surface N along t -> t^K,
//                                 predicted vs reclassified at every place
//   isogeny two N | isogeny four N   torsion-translation quotients
//   threefold [--t0 A/B]          symbolic discriminant of the threefold, or
//                                 the K3 fiber report over t = t0
//   lfold N L                     cover equation, Weierstrass family, Hodge
//                                 vector and model identities of the l-fold
//   table-check                   consistency audit of the reference table
//                                 of K3 fibrations (exit 3 when a row fails)
//   hodge N L                     invariant (p,0)-form dimensions
//   bounds N L                    Kodaira dimension bound chain
//
// Global flags: --format {json|markdown}, --seed INT (echoed into the
// report), --out PATH (write the report to a file instead of stdout).
//
// Exit codes: 0 success; 2 malformed input (bad flag, bad range, unparsable
// equation file); 3 a consistency check flagged a genuine discrepancy.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace ellq
