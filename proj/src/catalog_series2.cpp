#include <mutex>
#include <tuple>

#include "catalog_impl.hpp"

namespace partlab {
namespace detail {

namespace {

constexpr int kBigCap = 1 << 19;
constexpr int kPlainPOrder = 160; // above the degree reach of the exact-largest masters
constexpr int kKeyFormulaOrder = 64;
constexpr int kMaxMasterLength = 12; // length budget of the exact-largest masters

int floorDiv2(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }
int ceilDiv2(int x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

struct QMono {
    ContextPtr ctx;
    Monomial Q, a, c, ab, ac, abc;
    explicit QMono(ContextPtr cx)
        : ctx(std::move(cx)),
          Q(Monomial::of(ctx, {{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}})),
          a(Monomial::of(ctx, {{"a", 1}})), c(Monomial::of(ctx, {{"c", 1}})),
          ab(Monomial::of(ctx, {{"a", 1}, {"b", 1}})),
          ac(Monomial::of(ctx, {{"a", 1}, {"c", 1}})),
          abc(Monomial::of(ctx, {{"a", 1}, {"b", 1}, {"c", 1}}))
    {
    }
};

// q^{|pi|} s^{odd(pi_o)} t^{odd(pi_e)} master over a bounded box (memoized).
TruncatedSeries statMaster(int maxPart, int maxLen, int order)
{
    static std::map<std::tuple<int, int, int>, TruncatedSeries> cache;
    static std::mutex mtx;
    std::tuple<int, int, int> key{maxPart, maxLen, order};
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    ContextPtr ctx = ctxQMarkers({"s", "t"}, kBigCap);
    TruncatedSeries acc(ctx, order);
    if (maxPart >= 0) {
        PartitionClass cls = PartitionClass::all();
        cls.maxPart = maxPart;
        cls.maxLength = maxLen;
        forEachUpTo(cls, order, [&](const Partition& pi) {
            StatisticVector st = statistics(pi, 2);
            acc.addTerm(Monomial::of(ctx, {{"q", static_cast<int>(st.size)},
                                           {"s", st.oddOddIndexed},
                                           {"t", st.oddEvenIndexed}}),
                        1);
        });
    }
    return cache.emplace(key, std::move(acc)).first->second;
}

// Full marker polynomial over distinct partitions with parts <= bound:
// q^{|pi|} s^{odd(pi_o)} t^{odd(pi_e)} u^{#even parts}.
TruncatedSeries tildeMaster(int bound)
{
    static std::map<int, TruncatedSeries> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(bound);
    if (it != cache.end()) return it->second;

    ContextPtr ctx = ctxQMarkers({"s", "t", "u"}, kBigCap);
    int order = bound * (bound + 1) / 2; // the class is finite
    TruncatedSeries acc(ctx, order);
    PartitionClass cls = PartitionClass::distinct();
    cls.maxPart = bound;
    forEachInFiniteClass(cls, [&](const Partition& pi) {
        StatisticVector st = statistics(pi, 2);
        int evens = 0;
        for (int p : pi.parts())
            if (p % 2 == 0) ++evens;
        acc.addTerm(Monomial::of(ctx, {{"q", static_cast<int>(st.size)},
                                       {"s", st.oddOddIndexed},
                                       {"t", st.oddEvenIndexed},
                                       {"u", evens}}),
                    1);
    });
    return cache.emplace(bound, std::move(acc)).first->second;
}

// Same markers over partitions with largest part exactly `largest` and at
// most kMaxMasterLength parts.
TruncatedSeries exactLargestMaster(int largest)
{
    static std::map<int, TruncatedSeries> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(largest);
    if (it != cache.end()) return it->second;

    ContextPtr ctx = ctxQMarkers({"s", "t", "u"}, kBigCap);
    int order = largest * kMaxMasterLength;
    TruncatedSeries acc(ctx, std::max(order, 1));
    auto visit = [&](const Partition& pi) {
        StatisticVector st = statistics(pi, 2);
        int evens = 0;
        for (int p : pi.parts())
            if (p % 2 == 0) ++evens;
        acc.addTerm(Monomial::of(ctx, {{"q", static_cast<int>(st.size)},
                                       {"s", st.oddOddIndexed},
                                       {"t", st.oddEvenIndexed},
                                       {"u", evens}}),
                    1);
    };
    if (largest == 0) {
        visit(Partition{});
    } else {
        forEachInBox(largest, kMaxMasterLength - 1, [&](const Partition& rest) {
            std::vector<int> parts{largest};
            parts.insert(parts.end(), rest.parts().begin(), rest.parts().end());
            visit(Partition(std::move(parts)));
        });
    }
    return cache.emplace(largest, std::move(acc)).first->second;
}

} // namespace

} // namespace detail

// ---------------------------------------------------------------------------
// Public series-level operations

TruncatedSeries pPolynomial(int N, int mu, int order)
{
    using namespace detail;
    ContextPtr ctx = ctxQMarkers({"s", "t", "u", "v"}, kBigCap);
    PartitionClass cls = PartitionClass::distinctKStrict(3);
    cls.maxPart = 3 * N + mu;
    TruncatedSeries acc(ctx, order);
    forEachInFiniteClass(cls, [&](const Partition& pi) {
        StatisticVector st = statistics(pi, 3);
        acc.addTerm(Monomial::of(ctx, {{"q", static_cast<int>(st.size)},
                                       {"s", st.residueCountsOdd[0]},
                                       {"t", st.residueCountsOdd[1]},
                                       {"u", st.residueCountsEven[0]},
                                       {"v", st.residueCountsEven[1]}}),
                    1);
    });
    return acc;
}

TruncatedSeries tildePEnum(int bound, int i, int j, int m, int order)
{
    using namespace detail;
    if (bound < 0 || i < 0 || j < 0 || m < 0)
        throw std::invalid_argument("tildePEnum: negative argument");
    TruncatedSeries full =
        extractCoefficient(tildeMaster(bound), {{"s", i}, {"t", j}, {"u", m}});
    return full.truncated(order); // the master is a complete polynomial
}

TruncatedSeries plainPEnum(int largest, int i, int j, int m, int order)
{
    using namespace detail;
    if (largest < 0 || i < 0 || j < 0 || m < 0)
        throw std::invalid_argument("plainPEnum: negative argument");
    if (i + j + m > kMaxMasterLength)
        throw std::invalid_argument("plainPEnum: length budget exceeds the master table");
    ContextPtr ctxq = ctxQ();
    TruncatedSeries total(ctxq, order);
    TruncatedSeries master = exactLargestMaster(largest);
    for (int e = 0; e <= m; ++e)
        total += extractCoefficient(master, {{"s", i}, {"t", j}, {"u", e}}).truncated(order);
    return total;
}

TruncatedSeries phiPsiBounded(int maxPart, int maxLen, BoundedWhich which,
                              BoundedMethod method, int order)
{
    using namespace detail;
    const bool singleBounded = (maxLen < 0);
    switch (method) {
    case BoundedMethod::Enumerate: {
        PartitionClass cls;
        switch (which) {
        case BoundedWhich::Phi: cls = PartitionClass::all(); break;
        case BoundedWhich::Psi: cls = PartitionClass::distinct(); break;
        case BoundedWhich::S2: cls = PartitionClass::kStrict(2); break;
        }
        cls.maxPart = maxPart;
        cls.maxLength = maxLen;
        ContextPtr ctx = ctxABCD();
        return weightedSum(cls, omegaWeightFn(2, ctx), ctx, order);
    }
    case BoundedMethod::Iz:
    case BoundedMethod::Bu: {
        if (!singleBounded || which == BoundedWhich::S2)
            throw std::invalid_argument("phiPsiBounded: method needs a single bound");
        ContextPtr ctx = ctxABCD();
        QMono v(ctx);
        int N = maxPart / 2, nu = maxPart % 2;
        TruncatedSeries total = TruncatedSeries::zero(ctx, order);
        for (int i = 0; i <= N; ++i) {
            TruncatedSeries term = TruncatedSeries::one(ctx, order);
            if (method == BoundedMethod::Iz) {
                term = poch(v.a, -1, v.Q, N - i + nu, order) *
                       poch(v.c, -1, v.Q, i, order);
                term = term.shifted(v.ab.pow(i));
                if (which == BoundedWhich::Psi)
                    term = term * qBinomial(N, i, v.Q, order);
                else
                    term = term * inversePochhammer(v.Q, v.Q, N - i, order) *
                           inversePochhammer(v.Q, v.Q, i, order);
            } else {
                term = poch(v.a, -1, v.Q, i + nu, order) * poch(v.abc, -1, v.Q, i, order);
                term = term.shifted(v.ab.pow(N - i));
                if (which == BoundedWhich::Psi)
                    term = term * qBinomial(N, i, v.Q, order) *
                           poch(v.ac * v.Q.pow(i + nu), 1, v.Q, N - i, order);
                else
                    term = term * inversePochhammer(v.Q, v.Q, i, order) *
                           inversePochhammer(v.ac, v.Q, i + nu, order) *
                           inversePochhammer(v.Q, v.Q, N - i, order);
            }
            total += term;
        }
        if (method == BoundedMethod::Iz && which == BoundedWhich::Phi)
            total = total * inversePochhammer(v.ac, v.Q, N + nu, order);
        return total;
    }
    case BoundedMethod::Thm45: {
        if (which != BoundedWhich::S2 || maxLen < 0)
            throw std::invalid_argument(
                "phiPsiBounded: the block-sum expansion applies to the doubly bounded "
                "2-strict family");
        ContextPtr ctx = ctxABCD();
        return s2BlockSum(maxPart / 2, maxPart % 2, maxLen % 2, maxLen / 2, ctx, order);
    }
    case BoundedMethod::Thm46: {
        if (maxLen < 0)
            throw std::invalid_argument("phiPsiBounded: method needs both bounds");
        if (which == BoundedWhich::Phi) {
            if (maxPart == 0) return TruncatedSeries::one(ctxABCD(), order);
            return phiFormula(maxPart / 2, maxPart % 2, maxLen / 2, maxLen % 2, order);
        }
        if (which == BoundedWhich::Psi) return psiFormula(maxPart, maxLen, order);
        throw std::invalid_argument("phiPsiBounded: inapplicable method for this family");
    }
    }
    throw std::invalid_argument("phiPsiBounded: unknown method");
}

namespace detail {
namespace {

// ---------------------------------------------------------------------------
// Width-2 entries

void registerMod2BasicCases(std::vector<CatalogCase>& out)
{
    out.push_back(makeSeriesCase(
        "gfE2", "even-multiplicity even partitions", 14,
        {{"", {}, 0, -1,
          [](int order) {
              ContextPtr ctx = ctxABCD();
              return weightedSum(PartitionClass::evenRepeatMultiples(2),
                                 omegaWeightFn(2, ctx), ctx, order);
          },
          [](int order) {
              ContextPtr ctx = ctxABCD();
              QMono v(ctx);
              return inversePochhammer(v.Q, v.Q, kInfinity, order);
          }}}));

    out.push_back(makeSeriesCase(
        "gf2id", "2-strict partitions, four-parameter weight", 14,
        {{"", {}, 0, -1,
          [](int order) {
              ContextPtr ctx = ctxABCD();
              return weightedSum(PartitionClass::kStrict(2), omegaWeightFn(2, ctx), ctx,
                                 order);
          },
          [](int order) {
              ContextPtr ctx = ctxABCD();
              QMono v(ctx);
              return poch(v.a, -1, v.Q, kInfinity, order) *
                     poch(v.abc, -1, v.Q, kInfinity, order) *
                     inversePochhammer(v.ab, v.Q, kInfinity, order) *
                     inversePochhammer(v.Q, v.Q, kInfinity, order);
          }}}));

    std::vector<SeriesInstance> e2b;
    for (int N = 0; N <= 8; ++N)
        e2b.push_back({label("N=", N), {{"N", N}}, 0, -1,
                       [N](int order) {
                           ContextPtr ctx = ctxABCD();
                           PartitionClass cls = PartitionClass::evenRepeatMultiples(2);
                           cls.maxPart = N;
                           return weightedSum(cls, omegaWeightFn(2, ctx), ctx, order);
                       },
                       [N](int order) {
                           ContextPtr ctx = ctxABCD();
                           QMono v(ctx);
                           return inversePochhammer(v.Q, v.Q, N / 2, order);
                       }});
    out.push_back(makeSeriesCase("gfE2b", "bounded even-multiplicity even partitions", 16,
                                 std::move(e2b), 2));

    std::vector<SeriesInstance> s2b;
    for (int N = 0; N <= 6; ++N)
        for (int nu = 0; nu <= 1; ++nu)
            s2b.push_back(
                {label("N=", N, " nu=", nu), {{"N", N}, {"nu", nu}}, 0, -1,
                 [N, nu](int order) {
                     ContextPtr ctx = ctxABCD();
                     PartitionClass cls = PartitionClass::kStrict(2);
                     cls.maxPart = 2 * N + nu;
                     return weightedSum(cls, omegaWeightFn(2, ctx), ctx, order);
                 },
                 [N, nu](int order) {
                     ContextPtr ctx = ctxABCD();
                     QMono v(ctx);
                     TruncatedSeries total = TruncatedSeries::zero(ctx, order);
                     for (int i = 0; i <= N; ++i) {
                         TruncatedSeries term = poch(v.a, -1, v.Q, N - i + nu, order) *
                                                poch(v.c, -1, v.Q, i, order) *
                                                inversePochhammer(v.Q, v.Q, N - i, order) *
                                                inversePochhammer(v.Q, v.Q, i, order);
                         total += term.shifted(v.ab.pow(i));
                     }
                     return total;
                 }});
    out.push_back(makeSeriesCase("gfS2bid", "2-strict partitions with bounded largest part",
                                 13, std::move(s2b), 3));

    // single-bounded expansions against enumeration
    struct Exp {
        const char* id;
        BoundedWhich which;
        BoundedMethod method;
        const char* summary;
    };
    const Exp exps[4] = {
        {"iz1", BoundedWhich::Psi, BoundedMethod::Iz,
         "bounded distinct-part sum, binomial expansion"},
        {"iz2", BoundedWhich::Phi, BoundedMethod::Iz,
         "bounded unrestricted sum, binomial expansion"},
        {"bu1", BoundedWhich::Psi, BoundedMethod::Bu,
         "bounded distinct-part sum, telescoped expansion"},
        {"bu2", BoundedWhich::Phi, BoundedMethod::Bu,
         "bounded unrestricted sum, telescoped expansion"},
    };
    for (const auto& e : exps) {
        std::vector<SeriesInstance> inst;
        for (int N = 0; N <= 5; ++N)
            for (int nu = 0; nu <= 1; ++nu)
                inst.push_back(
                    {label("N=", N, " nu=", nu), {{"N", N}, {"nu", nu}}, 0, -1,
                     [e, N, nu](int order) {
                         return phiPsiBounded(2 * N + nu, -1, e.which,
                                              BoundedMethod::Enumerate, order);
                     },
                     [e, N, nu](int order) {
                         return phiPsiBounded(2 * N + nu, -1, e.which, e.method, order);
                     }});
        out.push_back(makeSeriesCase(e.id, e.summary, 13, std::move(inst), 5));
    }

    // conjugation symmetry of the doubly bounded unrestricted sum
    std::vector<SeriesInstance> conj;
    for (int N = 0; N <= 6; ++N)
        for (int M = 0; M <= 6; ++M)
            conj.push_back({label("N=", N, " M=", M), {{"N", N}, {"M", M}}, 0, -1,
                            [N, M](int order) { return phiEnumerated(N, M, order); },
                            [N, M](int order) {
                                ContextPtr ctx = ctxABCD();
                                return substitute(
                                    phiEnumerated(M, N, order),
                                    {{"a", Monomial::of(ctx, {{"a", 1}})},
                                     {"b", Monomial::of(ctx, {{"c", 1}})},
                                     {"c", Monomial::of(ctx, {{"b", 1}})},
                                     {"d", Monomial::of(ctx, {{"d", 1}})}},
                                    ctx);
                            }});
    out.push_back(makeSeriesCase(
        "conju", "transpose symmetry with the middle parameters exchanged", 13,
        std::move(conj), 10));
}

void registerDoublyBoundedCases(std::vector<CatalogCase>& out)
{
    struct S2Spec {
        const char* id;
        int pn, pm;
        int minM;
    };
    const S2Spec specs[4] = {
        {"gfS2n0m1", 0, 1, 0},
        {"gfS2n1m1", 1, 1, 0},
        {"gfS2n0m0", 0, 0, 1},
        {"gfS2n1m0", 1, 0, 1},
    };
    for (const auto& sp : specs) {
        std::vector<SeriesInstance> inst;
        for (int N = 0; N <= 6; ++N)
            for (int M = sp.minM; M <= 6; ++M)
                inst.push_back(
                    {label("N=", N, " M=", M), {{"N", N}, {"M", M}}, 0, -1,
                     [sp, N, M](int order) {
                         return phiPsiBounded(2 * N + sp.pn, 2 * M + sp.pm,
                                              BoundedWhich::S2, BoundedMethod::Enumerate,
                                              order);
                     },
                     [sp, N, M](int order) {
                         return phiPsiBounded(2 * N + sp.pn, 2 * M + sp.pm,
                                              BoundedWhich::S2, BoundedMethod::Thm45,
                                              order);
                     }});
        out.push_back(makeSeriesCase(
            sp.id, "doubly bounded 2-strict partitions, block-sum expansion", 12,
            std::move(inst), 8));
    }

    std::vector<SeriesInstance> phinmInst;
    for (int N = 0; N <= 6; ++N)
        for (int M = 0; M <= 6; ++M)
            for (int nu = 0; nu <= 1; ++nu)
                for (int mu = 0; mu <= 1; ++mu) {
                    if (N + nu < 1) continue;
                    phinmInst.push_back(
                        {label("N=", N, " M=", M, " nu=", nu, " mu=", mu),
                         {{"N", N}, {"M", M}, {"nu", nu}, {"mu", mu}},
                         0, -1,
                         [N, M, nu, mu](int order) {
                             return phiEnumerated(2 * N + nu, 2 * M + mu, order);
                         },
                         [N, M, nu, mu](int order) {
                             return phiFormula(N, nu, M, mu, order);
                         }});
                }
    out.push_back(makeSeriesCase(
        "phinm", "doubly bounded unrestricted sum via row removal", 12,
        std::move(phinmInst), 20));

    std::vector<SeriesInstance> psinmInst;
    for (int N = 0; N <= 6; ++N)
        for (int M = 0; M <= 6; ++M)
            psinmInst.push_back({label("N=", N, " M=", M), {{"N", N}, {"M", M}}, 0, -1,
                                 [N, M](int order) { return psiEnumerated(N, M, order); },
                                 [N, M](int order) { return psiFormula(N, M, order); }});
    out.push_back(makeSeriesCase(
        "psinm", "doubly bounded distinct-part sum via alternating convolution", 12,
        std::move(psinmInst), 20));

    // length generating function relation between the two families
    std::vector<SeriesInstance> phipsiInst;
    constexpr int kZMax = 8;
    for (int N = 0; N <= 6; ++N)
        phipsiInst.push_back(
            {label("N=", N), {{"N", N}}, 0, -1,
             [N](int order) {
                 ContextPtr ctx = ctxABCDZ(kZMax);
                 Monomial z = Monomial::of(ctx, {{"z", 1}});
                 Monomial Q = Monomial::of(ctx, {{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}});
                 Monomial ac = Monomial::of(ctx, {{"a", 1}, {"c", 1}});
                 auto inject = [&](const TruncatedSeries& s) {
                     return substitute(s,
                                       {{"a", Monomial::of(ctx, {{"a", 1}})},
                                        {"b", Monomial::of(ctx, {{"b", 1}})},
                                        {"c", Monomial::of(ctx, {{"c", 1}})},
                                        {"d", Monomial::of(ctx, {{"d", 1}})}},
                                       ctx);
                 };
                 TruncatedSeries sum(ctx, order);
                 for (int M = 0; M <= kZMax; ++M)
                     sum += inject(phiEnumerated(N, M, order)).shifted(z.pow(M));
                 return sum * pochhammer(z.pow(2) * Q, Q, N / 2, order) *
                        pochhammer(z.pow(2) * ac, Q, (N + 1) / 2, order);
             },
             [N](int order) {
                 ContextPtr ctx = ctxABCDZ(kZMax);
                 Monomial z = Monomial::of(ctx, {{"z", 1}});
                 auto inject = [&](const TruncatedSeries& s) {
                     return substitute(s,
                                       {{"a", Monomial::of(ctx, {{"a", 1}})},
                                        {"b", Monomial::of(ctx, {{"b", 1}})},
                                        {"c", Monomial::of(ctx, {{"c", 1}})},
                                        {"d", Monomial::of(ctx, {{"d", 1}})}},
                                       ctx);
                 };
                 TruncatedSeries sum(ctx, order);
                 for (int M = 0; M <= kZMax; ++M)
                     sum += inject(psiEnumerated(N, M, order)).shifted(z.pow(M));
                 return sum;
             }});
    out.push_back(makeSeriesCase(
        "phipsi", "length-marked relation between the bounded sums", 12,
        std::move(phipsiInst), 4));
}

// ---------------------------------------------------------------------------
// Marker-coefficient entries for the doubly bounded family

void registerLemCases(std::vector<CatalogCase>& out)
{
    std::vector<SeriesInstance> lem1, lem2;
    const int kLemOrder = 16;
    for (int N = 0; N <= 3; ++N)
        for (int M = 0; M <= 3; ++M)
            for (int nu = 0; nu <= 1; ++nu)
                for (int mu = 0; mu <= 1; ++mu) {
                    for (int j = 0; j <= N + 1; ++j)
                        lem1.push_back(
                            {label("N=", N, " M=", M, " nu=", nu, " mu=", mu, " j=", j),
                             {{"N", N}, {"M", M}, {"nu", nu}, {"mu", mu}, {"j", j}},
                             kLemOrder, -1,
                             [N, M, nu, mu, j](int order) {
                                 return extractCoefficient(
                                     statMaster(2 * N + nu, 2 * M + mu, order),
                                     {{"s", 0}, {"t", j}});
                             },
                             [N, M, nu, mu, j](int order) {
                                 ContextPtr ctx = ctxQ();
                                 Monomial q = Monomial::of(ctx, {{"q", 1}});
                                 TruncatedSeries r =
                                     qBinomial(M, j, q.pow(4), order) *
                                     qBinomial(2 * M + N + mu - j, N - j, q.pow(2), order);
                                 return r.shifted(q.pow(j * (2 * j + 1)));
                             }});
                    // the first-marker form relies on [n, k] vanishing for
                    // n < 0, which conflicts with the empty-product value of
                    // [n, 0] used everywhere else; skip the degenerate corner
                    if (M + mu - nu < 0) continue;
                    for (int i = 0; i <= N + 1; ++i)
                        lem2.push_back(
                            {label("N=", N, " M=", M, " nu=", nu, " mu=", mu, " i=", i),
                             {{"N", N}, {"M", M}, {"nu", nu}, {"mu", mu}, {"i", i}},
                             kLemOrder, -1,
                             [N, M, nu, mu, i](int order) {
                                 return extractCoefficient(
                                     statMaster(2 * N + nu, 2 * M + mu, order),
                                     {{"s", i}, {"t", 0}});
                             },
                             [N, M, nu, mu, i](int order) {
                                 ContextPtr ctx = ctxQ();
                                 Monomial q = Monomial::of(ctx, {{"q", 1}});
                                 TruncatedSeries r =
                                     (qBinomial(M + mu - nu, i, q.pow(4), order) *
                                      qBinomial(2 * M + mu + N - i, N - i, q.pow(2), order))
                                         .shifted(q.pow(i + 2 * (i + nu) * (i + nu - 1)));
                                 if (nu == 1)
                                     r += (qBinomial(M + mu - nu, i - 1, q.pow(4), order) *
                                           qBinomial(2 * M + mu + N - i + 1, N - i + 1,
                                                     q.pow(2), order))
                                              .shifted(q.pow(i + 2 * (i + nu - 1) *
                                                                     (i + nu - 2)));
                                 return r;
                             }});
                }
    out.push_back(makeSeriesCase(
        "lem1", "second-marker coefficient of the doubly bounded sum", kLemOrder,
        std::move(lem1), 8));
    out.push_back(makeSeriesCase(
        "lem2", "first-marker coefficient of the doubly bounded sum", kLemOrder,
        std::move(lem2), 8));
}

void registerExactLargestCases(std::vector<CatalogCase>& out)
{
    // difference identity for the exact-largest-part polynomial
    std::vector<SeriesInstance> keyInst;
    for (int N = 0; N <= 5; ++N)
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; j <= 3; ++j)
                for (int m = 0; m <= 3; ++m)
                    keyInst.push_back(
                        {label("N=", N, " i=", i, " j=", j, " m=", m),
                         {{"N", N}, {"i", i}, {"j", j}, {"m", m}},
                         0, kKeyFormulaOrder,
                         [N, i, j, m](int order) { return plainPEnum(N, i, j, m, order); },
                         [N, i, j, m](int order) {
                             int L = m + i + j;
                             TruncatedSeries diff = statMaster(N, L, order);
                             diff -= statMaster(N - 1, L, order);
                             return extractCoefficient(diff, {{"s", i}, {"t", j}});
                         }});
    out.push_back(makeSeriesCase(
        "key-formula", "exact-largest polynomial as a bounded-sum difference", 12,
        std::move(keyInst), 213));

    // closed forms for the exact-largest polynomial on the marker axes
    std::vector<SeriesInstance> plainInst;
    for (int N = 1; N <= 5; ++N)
        for (int j = 0; j <= 4; ++j)
            for (int m = 0; m <= 4; ++m)
                plainInst.push_back(
                    {label("even f1 N=", N, " j=", j, " m=", m),
                     {{"N", N}, {"j", j}, {"m", m}, {"f", 1}},
                     0, kPlainPOrder,
                     [N, j, m](int order) { return plainPEnum(2 * N, 0, j, m, order); },
                     [N, j, m](int order) {
                         ContextPtr ctx = ctxQ();
                         Monomial q = Monomial::of(ctx, {{"q", 1}});
                         return (qBinomial(floorDiv2(m + j), j, q.pow(4), order) *
                                 qBinomial(m + N - 1, N - j, q.pow(2), order))
                             .shifted(q.pow(2 * N + j * (2 * j - 1)));
                     }});
    for (int N = 1; N <= 5; ++N)
        for (int i = 0; i <= 4; ++i)
            for (int m = 0; m <= 4; ++m)
                plainInst.push_back(
                    {label("even f2 N=", N, " i=", i, " m=", m),
                     {{"N", N}, {"i", i}, {"m", m}, {"f", 2}},
                     0, kPlainPOrder,
                     [N, i, m](int order) { return plainPEnum(2 * N, i, 0, m, order); },
                     [N, i, m](int order) {
                         ContextPtr ctx = ctxQ();
                         Monomial q = Monomial::of(ctx, {{"q", 1}});
                         return (qBinomial(ceilDiv2(m + i) - 1, i, q.pow(4), order) *
                                 qBinomial(m + N - 1, N - i, q.pow(2), order))
                             .shifted(q.pow(2 * N + i * (2 * i + 1)));
                     }});
    for (int N = 0; N <= 5; ++N)
        for (int i = 1; i <= 4; ++i)
            for (int m = 0; m <= 4; ++m)
                plainInst.push_back(
                    {label("odd f3 N=", N, " i=", i, " m=", m),
                     {{"N", N}, {"i", i}, {"m", m}, {"f", 3}},
                     0, kPlainPOrder,
                     [N, i, m](int order) { return plainPEnum(2 * N + 1, i, 0, m, order); },
                     [N, i, m](int order) {
                         ContextPtr ctx = ctxQ();
                         Monomial q = Monomial::of(ctx, {{"q", 1}});
                         return (qBinomial(ceilDiv2(m + i) - 1, i - 1, q.pow(4), order) *
                                 qBinomial(m + N, N - i + 1, q.pow(2), order))
                             .shifted(q.pow(2 * N + i * (2 * i - 3) + 2));
                     }});
    out.push_back(makeSeriesCase(
        "plainP", "exact-largest polynomial, marker-axis closed forms", 12,
        std::move(plainInst), 57));

    // the distinct analogue with exactly m even parts
    std::vector<SeriesInstance> tildeInst;
    for (int N = 0; N <= 5; ++N)
        for (int nu = 0; nu <= 1; ++nu)
            for (int j = 0; j <= 4; ++j)
                for (int m = 0; m <= 4; ++m)
                    tildeInst.push_back(
                        {label("f1 N=", N, " nu=", nu, " j=", j, " m=", m),
                         {{"N", N}, {"nu", nu}, {"j", j}, {"m", m}, {"f", 1}},
                         0, kPlainPOrder,
                         [N, nu, j, m](int order) {
                             return tildePEnum(2 * N + nu, 0, j, m, order);
                         },
                         [N, j, m](int order) {
                             ContextPtr ctx = ctxQ();
                             Monomial q = Monomial::of(ctx, {{"q", 1}});
                             int sgn = ((m + j) % 2 == 0) ? 1 : -1;
                             int e = j * (j + 1) + m * (m + 1) - j * sgn;
                             return (qBinomial(floorDiv2(m + j), j, q.pow(4), order) *
                                     qBinomial(N + j, j + m, q.pow(2), order))
                                 .shifted(q.pow(e));
                         }});
    for (int N = 0; N <= 5; ++N)
        for (int i = 0; i <= 4; ++i)
            for (int m = 0; m <= 4; ++m)
                tildeInst.push_back(
                    {label("f2 N=", N, " i=", i, " m=", m),
                     {{"N", N}, {"i", i}, {"m", m}, {"f", 2}},
                     0, kPlainPOrder,
                     [N, i, m](int order) {
                         return tildePEnum(2 * N + 1, i, 0, m, order);
                     },
                     [N, i, m](int order) {
                         ContextPtr ctx = ctxQ();
                         Monomial q = Monomial::of(ctx, {{"q", 1}});
                         int sgn = ((m + i) % 2 == 0) ? 1 : -1;
                         int e = i * (i + 1) + m * (m + 1) + i * sgn;
                         return (qBinomial(ceilDiv2(m + i), i, q.pow(4), order) *
                                 qBinomial(N + i, i + m, q.pow(2), order))
                             .shifted(q.pow(e));
                     }});
    for (int N = 1; N <= 5; ++N)
        for (int i = 0; i <= 4; ++i)
            for (int m = 0; m <= 4; ++m)
                tildeInst.push_back(
                    {label("f3 N=", N, " i=", i, " m=", m),
                     {{"N", N}, {"i", i}, {"m", m}, {"f", 3}},
                     0, kPlainPOrder,
                     [N, i, m](int order) { return tildePEnum(2 * N, i, 0, m, order); },
                     [N, i, m](int order) {
                         ContextPtr ctx = ctxQ();
                         Monomial q = Monomial::of(ctx, {{"q", 1}});
                         int sgn = ((m + i) % 2 == 0) ? 1 : -1;
                         int e1 = i * (i + 1) + m * (m + 1) + i * sgn;
                         int e2 = i * (i + 1) + m * (m - 1) + i * sgn + 2 * N;
                         TruncatedSeries r =
                             (qBinomial(ceilDiv2(m + i), i, q.pow(4), order) *
                              qBinomial(N + i - 1, i + m, q.pow(2), order))
                                 .shifted(q.pow(e1));
                         r += (qBinomial(floorDiv2(m + i - 1), i, q.pow(4), order) *
                               qBinomial(N + i - 1, i + m - 1, q.pow(2), order))
                                  .shifted(q.pow(e2));
                         return r;
                     }});
    out.push_back(makeSeriesCase(
        "tildeP", "bounded distinct polynomial with exact even-part count", 12,
        std::move(tildeInst), 12));
}

} // namespace

void registerMod2SeriesCases(std::vector<CatalogCase>& out)
{
    registerMod2BasicCases(out);
    registerDoublyBoundedCases(out);
    registerLemCases(out);
    registerExactLargestCases(out);
}

} // namespace detail
} // namespace partlab
