#pragma once

#include <sstream>

#include "partlab/catalog.hpp"

namespace partlab {
namespace detail {

// Shared context builders -----------------------------------------------------

ContextPtr ctxQ();
ContextPtr ctxQMarkers(const std::vector<std::string>& markers, int cap);
ContextPtr ctxABCD();
ContextPtr ctxABCDEF();
ContextPtr ctxXYMarkers(const std::vector<std::string>& markers, int cap);
ContextPtr ctxABCDZ(int zCap);

// Series helpers --------------------------------------------------------------

// (base; q)_n with a +/- sign on the base, i.e. prod (1 -/+ base q^i).
TruncatedSeries poch(const Monomial& base, int sign, const Monomial& q, int n, int order);
TruncatedSeries pochS(const TruncatedSeries& base, int sign, const Monomial& q, int n,
                      int order);
TruncatedSeries seriesPow(const TruncatedSeries& s, int e);

// Weight maps -----------------------------------------------------------------

std::function<Monomial(const Partition&)> omegaWeightFn(int k, ContextPtr ctx);
// q^{|pi|} t^{odd(pi_o)} z^{odd(pi_e)} style weights are built inline.

// Bounded four-parameter sums (closed forms) ---------------------------------

// Quadruple block sum for the doubly bounded 2-strict family
// (largest part <= 2N+nu, length <= 2Mk+mu).
TruncatedSeries s2BlockSum(int N, int nu, int mu, int Mk, const ContextPtr& ctx, int order);
// Block expansion of the 3-strict family with largest part <= 3N+mu, over
// the six-letter alphabet.
TruncatedSeries s3BoundedRhs(int N, int mu, int order);
// The row-removal expansion of the doubly bounded unrestricted sum
// (largest part <= 2N+nu, length <= 2M+mu); requires N+nu >= 1.
TruncatedSeries phiFormula(int N, int nu, int M, int mu, int order);
// Doubly bounded expansion for the distinct-part sum via the alternating
// convolution against phiFormula; plain bounds (maxPart, maxLen).
TruncatedSeries psiFormula(int maxPart, int maxLen, int order);
// Enumerated doubly bounded sums (memoized).
TruncatedSeries phiEnumerated(int maxPart, int maxLen, int order);
TruncatedSeries psiEnumerated(int maxPart, int maxLen, int order);

// Case assembly ---------------------------------------------------------------

struct SeriesInstance {
    std::string label;
    ParamFilter params;
    int minOrder = 0;   // effective order is max(requested, minOrder)
    int fixedOrder = -1; // >= 0: always compare at this order (finite polynomials)
    std::function<TruncatedSeries(int)> lhs;
    std::function<TruncatedSeries(int)> rhs;
};

CatalogCase makeSeriesCase(std::string id, std::string summary, int defaultOrder,
                           std::vector<SeriesInstance> instances,
                           size_t representative = 0);

// Counting-table comparison: produces one case comparing lhs/rhs counts over
// a keyed sweep; the key doubles as the discrepancy label.
struct CountPoint {
    std::string label;
    long long lhs;
    long long rhs;
};
CatalogCase makeCountingCase(std::string id, std::string summary, int defaultN,
                             std::function<std::vector<CountPoint>(int nMax)> table);

void registerSeriesCases(std::vector<CatalogCase>& out);     // weights and mod-3 family
void registerMod2SeriesCases(std::vector<CatalogCase>& out); // width-2 and doubly bounded
void registerCountingCases(std::vector<CatalogCase>& out);

template <typename... Args> std::string label(Args&&... args)
{
    std::ostringstream out;
    ((out << args), ...);
    return out.str();
}

} // namespace detail
} // namespace partlab
