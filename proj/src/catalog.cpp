#include "partlab/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <tuple>
#include <stdexcept>

#include "catalog_impl.hpp"

namespace partlab {
namespace detail {

// ---------------------------------------------------------------------------
// Contexts

ContextPtr ctxQ()
{
    return VariableContext::make({{"q", 1, -1}});
}

ContextPtr ctxQMarkers(const std::vector<std::string>& markers, int cap)
{
    std::vector<VariableContext::Variable> vars{{"q", 1, -1}};
    for (const auto& m : markers) vars.push_back({m, 0, cap});
    return VariableContext::make(std::move(vars));
}

ContextPtr ctxABCD()
{
    return VariableContext::make({{"a", 1, -1}, {"b", 1, -1}, {"c", 1, -1}, {"d", 1, -1}});
}

ContextPtr ctxABCDEF()
{
    return VariableContext::make({{"a", 1, -1}, {"b", 1, -1}, {"c", 1, -1},
                                  {"d", 1, -1}, {"e", 1, -1}, {"f", 1, -1}});
}

ContextPtr ctxXYMarkers(const std::vector<std::string>& markers, int cap)
{
    std::vector<VariableContext::Variable> vars{{"x", 1, -1}, {"y", 1, -1}};
    for (const auto& m : markers) vars.push_back({m, 0, cap});
    return VariableContext::make(std::move(vars));
}

ContextPtr ctxABCDZ(int zCap)
{
    return VariableContext::make({{"a", 1, -1}, {"b", 1, -1}, {"c", 1, -1},
                                  {"d", 1, -1}, {"z", 0, zCap}});
}

// ---------------------------------------------------------------------------
// Series helpers

TruncatedSeries poch(const Monomial& base, int sign, const Monomial& q, int n, int order)
{
    return pochhammerSeries(TruncatedSeries::fromMonomial(base, order, sign), q, n, order);
}

TruncatedSeries pochS(const TruncatedSeries& base, int sign, const Monomial& q, int n,
                      int order)
{
    TruncatedSeries b = base;
    if (sign < 0) b = -b;
    return pochhammerSeries(b, q, n, order);
}

TruncatedSeries seriesPow(const TruncatedSeries& s, int e)
{
    TruncatedSeries acc = TruncatedSeries::one(s.context(), s.order());
    for (int i = 0; i < e; ++i) acc = acc * s;
    return acc;
}

std::function<Monomial(const Partition&)> omegaWeightFn(int k, ContextPtr ctx)
{
    return [k, ctx](const Partition& pi) { return omegaWeight(pi, k, ctx); };
}

// ---------------------------------------------------------------------------
// Doubly bounded four-parameter sums

// Quadruple sum over the four width-2 block families under a common length
// budget; also the inner sum of the row-removal expansion.
TruncatedSeries s2BlockSum(int N, int nu, int mu, int Mk, const ContextPtr& ctx, int order)
{
    const Monomial a = Monomial::of(ctx, {{"a", 1}});
    const Monomial ab = Monomial::of(ctx, {{"a", 1}, {"b", 1}});
    const Monomial abc = Monomial::of(ctx, {{"a", 1}, {"b", 1}, {"c", 1}});
    const Monomial Q = Monomial::of(ctx, {{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}});
    TruncatedSeries sum = TruncatedSeries::zero(ctx, order);
    TruncatedSeries onePlusA = TruncatedSeries::one(ctx, order);
    if (nu == 1) onePlusA.addTerm(a, 1);

    for (int m1 = 0; m1 <= N; ++m1) {
        int w1 = m1 + 4 * ((m1 + nu) * (m1 + nu - 1) / 2);
        if (w1 > order) break;
        TruncatedSeries f1 = qBinomial(Mk + mu - nu, m1, Q, order)
                                 .shifted(a.pow(m1) * Q.pow((m1 + nu) * (m1 + nu - 1) / 2));
        if (nu == 1) f1 = f1 * onePlusA;
        if (f1.isZero()) continue;
        for (int m2 = 0; m1 + m2 <= N; ++m2) {
            if (w1 + 2 * m2 > order) break;
            TruncatedSeries f2 =
                qBinomial(Mk + mu - 1 + m2, m2, Q, order).shifted(ab.pow(m2));
            if (f2.isZero()) continue;
            TruncatedSeries f12 = f1 * f2;
            for (int m3 = 0; m1 + m2 + m3 <= N; ++m3) {
                int w3 = 3 * m3 + 4 * (m3 * (m3 - 1) / 2);
                if (w1 + 2 * m2 + w3 > order) break;
                int m4 = N - m1 - m2 - m3;
                TruncatedSeries f3 = qBinomial(Mk, m3, Q, order)
                                         .shifted(abc.pow(m3) * Q.pow(m3 * (m3 - 1) / 2));
                if (f3.isZero()) continue;
                TruncatedSeries f4 = qBinomial(Mk + m4, m4, Q, order);
                sum += f12 * f3 * f4;
            }
        }
    }
    return sum;
}

TruncatedSeries phiFormula(int N, int nu, int M, int mu, int order)
{
    if (N + nu < 1) throw std::invalid_argument("phiFormula: requires N + nu >= 1");
    ContextPtr ctx = ctxABCD();
    const Monomial ac = Monomial::of(ctx, {{"a", 1}, {"c", 1}});
    const Monomial Q = Monomial::of(ctx, {{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}});

    TruncatedSeries total = TruncatedSeries::zero(ctx, order);
    if (mu == 0 && 2 * M <= order)
        total += qBinomial(N + M + nu - 1, M, Q, order).shifted(ac.pow(M));
    for (int kk = 0; kk <= M + mu - 1; ++kk) {
        if (2 * kk > order) break;
        TruncatedSeries outer =
            qBinomial(N + kk + nu - 1, kk, Q, order).shifted(ac.pow(kk));
        if (outer.isZero()) continue;
        total += outer * s2BlockSum(N, nu, mu, M - kk, ctx, order);
    }
    return total;
}

TruncatedSeries psiFormula(int maxPart, int maxLen, int order)
{
    if (maxPart < 0 || maxLen < 0)
        throw std::invalid_argument("psiFormula: bounds must be finite");
    ContextPtr ctx = ctxABCD();
    const Monomial ac = Monomial::of(ctx, {{"a", 1}, {"c", 1}});
    const Monomial Q = Monomial::of(ctx, {{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}});
    const int N = maxPart, M = maxLen;

    TruncatedSeries total = TruncatedSeries::zero(ctx, order);
    for (int m = 0; m <= M / 2; ++m) {
        // Phi at length budget M - 2m, by parity split
        int rest = M - 2 * m;
        TruncatedSeries phi = TruncatedSeries::one(ctx, order);
        if (N >= 1) phi = phiFormula(N / 2, N % 2, rest / 2, rest % 2, order);
        for (int k = 0; k <= m; ++k) {
            int qexp = k * (k + 1 - m) + m * (m - 1) / 2;
            int wd = 2 * (m - k) + 4 * qexp;
            if (wd > order) continue;
            TruncatedSeries coeff =
                (qBinomial(N / 2, k, Q, order) * qBinomial((N + 1) / 2, m - k, Q, order))
                    .shifted(ac.pow(m - k) * Q.pow(qexp), (m % 2 == 0) ? 1 : -1);
            total += coeff * phi;
        }
    }
    return total;
}

TruncatedSeries phiEnumerated(int maxPart, int maxLen, int order)
{
    static std::map<std::tuple<int, int, int>, TruncatedSeries> cache;
    static std::mutex mtx;
    std::tuple<int, int, int> key{maxPart, maxLen, order};
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    ContextPtr ctx = ctxABCD();
    PartitionClass cls = PartitionClass::all();
    cls.maxPart = maxPart;
    cls.maxLength = maxLen;
    TruncatedSeries s = weightedSum(cls, omegaWeightFn(2, ctx), ctx, order);
    return cache.emplace(key, std::move(s)).first->second;
}

TruncatedSeries psiEnumerated(int maxPart, int maxLen, int order)
{
    ContextPtr ctx = ctxABCD();
    PartitionClass cls = PartitionClass::distinct();
    cls.maxPart = maxPart;
    cls.maxLength = maxLen;
    return weightedSum(cls, omegaWeightFn(2, ctx), ctx, order);
}

// ---------------------------------------------------------------------------
// Case assembly

namespace {

bool instanceMatches(const ParamFilter& filter, const ParamFilter& params)
{
    for (const auto& [k, v] : filter) {
        auto it = params.find(k);
        if (it == params.end() || it->second != v) return false;
    }
    return true;
}

} // namespace

CatalogCase makeSeriesCase(std::string id, std::string summary, int defaultOrder,
                           std::vector<SeriesInstance> instances, size_t representative)
{
    CatalogCase c;
    c.id = std::move(id);
    c.summary = std::move(summary);
    c.defaultOrder = defaultOrder;
    c.series = true;
    auto shared = std::make_shared<std::vector<SeriesInstance>>(std::move(instances));
    const auto& rep = (*shared)[representative];
    c.representativeRhs = [rhs = rep.rhs, minOrder = rep.minOrder,
                           fixedOrder = rep.fixedOrder](int order) {
        return rhs(fixedOrder >= 0 ? fixedOrder : std::max(order, minOrder));
    };
    std::string cid = c.id;
    c.run = [shared, cid](int order, const ParamFilter& filter) {
        auto t0 = std::chrono::steady_clock::now();
        VerificationReport rep;
        rep.id = cid;
        rep.match = true;
        rep.order = 0;
        for (const auto& inst : *shared) {
            if (!instanceMatches(filter, inst.params)) continue;
            int ord = inst.fixedOrder >= 0 ? inst.fixedOrder : std::max(order, inst.minOrder);
            rep.order = std::max(rep.order, inst.fixedOrder >= 0 ? order : ord);
            TruncatedSeries lhs = inst.lhs(ord);
            TruncatedSeries rhs = inst.rhs(ord);
            ++rep.instancesChecked;
            if (auto diff = firstDifference(lhs, rhs)) {
                rep.match = false;
                rep.firstDiscrepancy =
                    Discrepancy{inst.label, diff->monomial, diff->lhs, diff->rhs};
                break;
            }
        }
        if (rep.instancesChecked == 0)
            throw std::invalid_argument("no instance of '" + cid + "' matches the filter");
        auto t1 = std::chrono::steady_clock::now();
        rep.timeMs = std::chrono::duration<double, std::milli>(t1 - t0).count();
        return rep;
    };
    return c;
}

CatalogCase makeCountingCase(std::string id, std::string summary, int defaultN,
                             std::function<std::vector<CountPoint>(int nMax)> table)
{
    CatalogCase c;
    c.id = std::move(id);
    c.summary = std::move(summary);
    c.defaultOrder = defaultN;
    c.series = false;
    std::string cid = c.id;
    c.run = [table = std::move(table), cid](int order, const ParamFilter& filter) {
        if (!filter.empty())
            throw std::invalid_argument("counting case '" + cid + "' takes no parameter filter");
        auto t0 = std::chrono::steady_clock::now();
        VerificationReport rep;
        rep.id = cid;
        rep.order = order;
        rep.match = true;
        for (const auto& pt : table(order)) {
            ++rep.instancesChecked;
            if (pt.lhs != pt.rhs) {
                rep.match = false;
                rep.firstDiscrepancy = Discrepancy{pt.label, pt.label, pt.lhs, pt.rhs};
                break;
            }
        }
        auto t1 = std::chrono::steady_clock::now();
        rep.timeMs = std::chrono::duration<double, std::milli>(t1 - t0).count();
        return rep;
    };
    return c;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Registry

const std::vector<CatalogCase>& catalog()
{
    static const std::vector<CatalogCase> cases = [] {
        std::vector<CatalogCase> out;
        detail::registerSeriesCases(out);
        detail::registerMod2SeriesCases(out);
        detail::registerCountingCases(out);
        std::sort(out.begin(), out.end(),
                  [](const CatalogCase& a, const CatalogCase& b) { return a.id < b.id; });
        return out;
    }();
    return cases;
}

const CatalogCase* findCase(const std::string& id)
{
    for (const auto& c : catalog())
        if (c.id == id) return &c;
    return nullptr;
}

std::vector<std::string> catalogIds()
{
    std::vector<std::string> ids;
    for (const auto& c : catalog()) ids.push_back(c.id);
    return ids;
}

VerificationReport verifyCase(const std::string& id, int order, const ParamFilter& filter)
{
    const CatalogCase* c = findCase(id);
    if (!c) throw std::invalid_argument("unknown identity id: " + id);
    return c->run(order < 0 ? c->defaultOrder : order, filter);
}

} // namespace partlab
