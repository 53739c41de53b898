#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "partlab/bijections.hpp"
#include "partlab/partitions.hpp"
#include "partlab/series.hpp"

namespace partlab {

struct Discrepancy {
    std::string instance; // parameter point, e.g. "k=3" or "n=17 i=2 j=0"
    std::string monomial; // graded-lex least differing monomial (or count key)
    Int lhs;
    Int rhs;
};

struct VerificationReport {
    std::string id;
    int order = 0;
    bool match = false;
    int instancesChecked = 0;
    std::optional<Discrepancy> firstDiscrepancy;
    double timeMs = 0.0;
};

using ParamFilter = std::map<std::string, int>;

/* One registered identity: an enumerative side and a closed-form side
 * compared term by term over a parameter sweep, or a pair of literal counts
 * compared over a range. */
struct CatalogCase {
    std::string id;
    std::string summary;
    int defaultOrder = 12;
    bool series = true; // false for pure counting comparisons
    std::function<TruncatedSeries(int order)> representativeRhs; // null when !series
    std::function<VerificationReport(int order, const ParamFilter&)> run;
};

const std::vector<CatalogCase>& catalog(); // sorted by id
const CatalogCase* findCase(const std::string& id);
std::vector<std::string> catalogIds();

VerificationReport verifyCase(const std::string& id, int order = -1,
                              const ParamFilter& filter = {});

// ---------------------------------------------------------------------------
// Counting operations (both sides enumerated from their literal conditions)

// Gap-and-residue count of Rogers-Ramanujan type (m in {1,2}).
long long countAm(int n, int m);
// Distinct parts avoiding +-m mod 6.
long long countCm(int n, int m);
std::vector<Partition> membersAm(int n, int m);
std::vector<Partition> membersCm(int n, int m);

// k-strict analogues (k >= 3): distinct k-strict with per-parity residues /
// distinct parts in four residue classes mod 2k.
long long countAkm(int n, int k, int m);
long long countCkm(int n, int k, int m);
std::vector<Partition> membersAkm(int n, int k, int m);
std::vector<Partition> membersCkm(int n, int k, int m);

enum class RefinedFamily {
    AkM,        // exactly i parts = 3-m, j parts = m (mod k)
    CkM,        // exactly i parts = 3-m, j parts = k+m (mod 2k)
    DI,         // distinct, no part = -m (mod 3); i odd-indexed, j even-indexed = m (mod 3)
    DII,        // distinct, no part = -m (mod 3); i parts = m, j parts = m+3 (mod 6)
    DIBounded,  // DI with parts <= 3N
    DIIBounded, // DII with the staged bounds
    AmRefined,  // countAm members with i parts = 2, j parts = 1 (mod 3)
    CmRefined,  // countCm members with i parts = 3m-1, j parts = 3m+1 (mod 6)
};

struct RefinedParams {
    int m = 1;
    int k = 3;
    int N = -1; // bound parameter for the *Bounded families
};
long long countRefined(RefinedFamily family, int n, int i, int j, const RefinedParams& p);
std::vector<Partition> membersRefined(RefinedFamily family, int n, int i, int j,
                                      const RefinedParams& p);

// ---------------------------------------------------------------------------
// Series-level operations shared by the catalog and the CLI

// Marker polynomial over the distinct 3-strict class with largest part
// <= 3N+mu; variables (q, s, t, u, v).
TruncatedSeries pPolynomial(int N, int mu, int order);

enum class BoundedWhich { Phi, Psi, S2 };
enum class BoundedMethod { Enumerate, Iz, Bu, Thm45, Thm46 };

/* Bounded four-parameter generating functions by several routes; maxLen = -1
 * means unbounded length (required for the Iz and Bu expansions). All
 * methods agree with enumeration. */
TruncatedSeries phiPsiBounded(int maxPart, int maxLen, BoundedWhich which,
                              BoundedMethod method, int order);

// Distinct parts <= bound with i odd-indexed odd parts, j even-indexed odd
// parts and exactly m even parts.
TruncatedSeries tildePEnum(int bound, int i, int j, int m, int order);
// Ordinary partitions with largest part exactly `largest`, i odd-indexed and
// j even-indexed odd parts and at most m even parts.
TruncatedSeries plainPEnum(int largest, int i, int j, int m, int order);

// ---------------------------------------------------------------------------
// Bijection test harness (CLI `bijection-test`)

struct BijectionFailure {
    std::string input;
    std::string expected;
    std::string got;
};
struct BijectionReport {
    std::string map;
    int k = 0;
    std::string range;
    long long casesChecked = 0;
    std::vector<BijectionFailure> failures;
};
// map: psi_k | conjugate | blocks | strip_jump
BijectionReport runBijectionTest(const std::string& map, int k, int maxSize);

} // namespace partlab
