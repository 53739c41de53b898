#include <mutex>
#include <tuple>

#include "catalog_impl.hpp"

namespace partlab {
namespace detail {

namespace {

constexpr int kBigCap = 1 << 19; // markers are bounded by the partition length

// ---------------------------------------------------------------------------
// Shared weights

Monomial statWeightQTZ(const ContextPtr& ctx, const Partition& pi)
{
    StatisticVector st = statistics(pi, 2);
    return Monomial::of(ctx, {{"q", static_cast<int>(st.size)},
                              {"t", st.oddOddIndexed},
                              {"z", st.oddEvenIndexed}});
}

// x^{|pi_o|} y^{|pi_e|} s^{o_1} t^{o_2} u^{e_1} v^{e_2} with respect to mod 3
Monomial statWeightXYSTUV(const ContextPtr& ctx, const Partition& pi)
{
    StatisticVector st = statistics(pi, 3);
    return Monomial::of(ctx, {{"x", static_cast<int>(st.oddIndexedSum)},
                              {"y", static_cast<int>(st.evenIndexedSum)},
                              {"s", st.residueCountsOdd[0]},
                              {"t", st.residueCountsOdd[1]},
                              {"u", st.residueCountsEven[0]},
                              {"v", st.residueCountsEven[1]}});
}

// The mod-3 residue pair selected by each marker pattern of the bounded
// polynomial: pattern 0 tracks (o_2, e_1), 1 -> (o_1, e_2), 2 -> (o_1, e_1),
// 3 -> (o_2, e_2); the complementary statistics are forced to zero.
struct MarkerPattern {
    const char* m1;
    const char* m2;
    int oddAllowedExtra;  // residue (besides 0) allowed for odd-indexed parts
    int evenAllowedExtra; // residue (besides 0) allowed for even-indexed parts
    bool m1TracksOdd2;    // m1 counts o_2 instead of o_1
    bool m2TracksEven2;   // m2 counts e_2 instead of e_1
};

const MarkerPattern kPatterns[4] = {
    {"t", "u", 2, 1, true, false},
    {"s", "v", 1, 2, false, true},
    {"s", "u", 1, 1, false, false},
    {"t", "v", 2, 2, true, true},
};

PartitionClass ds3Restricted(const MarkerPattern& pat, int maxPart)
{
    PartitionClass cls = PartitionClass::distinctKStrict(3);
    cls.maxPart = maxPart;
    cls.residues.push_back({ResidueRule::OddIndexed, 3, {0, pat.oddAllowedExtra}});
    cls.residues.push_back({ResidueRule::EvenIndexed, 3, {0, pat.evenAllowedExtra}});
    return cls;
}

Monomial patternWeight(const ContextPtr& ctx, const MarkerPattern& pat, const Partition& pi)
{
    StatisticVector st = statistics(pi, 3);
    int e1 = pat.m1TracksOdd2 ? st.residueCountsOdd[1] : st.residueCountsOdd[0];
    int e2 = pat.m2TracksEven2 ? st.residueCountsEven[1] : st.residueCountsEven[0];
    return Monomial::of(ctx, {{"q", static_cast<int>(st.size)}, {pat.m1, e1}, {pat.m2, e2}});
}

// ---------------------------------------------------------------------------
// Boulet-type entries (weights over all / distinct partitions)

void registerBouletCases(std::vector<CatalogCase>& out)
{
    // sum over all partitions of the four-parameter cell weight
    out.push_back(makeSeriesCase(
        "boulet-phi", "four-parameter weight over all partitions", 14,
        {{"", {}, 0, -1,
          [](int order) {
              ContextPtr ctx = ctxABCD();
              return weightedSum(PartitionClass::all(), omegaWeightFn(2, ctx), ctx, order);
          },
          [](int order) {
              ContextPtr ctx = ctxABCD();
              Monomial a = Monomial::of(ctx, {{"a", 1}});
              Monomial ab = Monomial::of(ctx, {{"a", 1}, {"b", 1}});
              Monomial ac = Monomial::of(ctx, {{"a", 1}, {"c", 1}});
              Monomial abc = Monomial::of(ctx, {{"a", 1}, {"b", 1}, {"c", 1}});
              Monomial Q = Monomial::of(ctx, {{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}});
              return poch(a, -1, Q, kInfinity, order) * poch(abc, -1, Q, kInfinity, order) *
                     inversePochhammer(Q, Q, kInfinity, order) *
                     inversePochhammer(ab, Q, kInfinity, order) *
                     inversePochhammer(ac, Q, kInfinity, order);
          }}}));

    out.push_back(makeSeriesCase(
        "boulet-psi", "four-parameter weight over distinct partitions", 14,
        {{"", {}, 0, -1,
          [](int order) {
              ContextPtr ctx = ctxABCD();
              return weightedSum(PartitionClass::distinct(), omegaWeightFn(2, ctx), ctx,
                                 order);
          },
          [](int order) {
              ContextPtr ctx = ctxABCD();
              Monomial a = Monomial::of(ctx, {{"a", 1}});
              Monomial ab = Monomial::of(ctx, {{"a", 1}, {"b", 1}});
              Monomial abc = Monomial::of(ctx, {{"a", 1}, {"b", 1}, {"c", 1}});
              Monomial Q = Monomial::of(ctx, {{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}});
              return poch(a, -1, Q, kInfinity, order) * poch(abc, -1, Q, kInfinity, order) *
                     inversePochhammer(ab, Q, kInfinity, order);
          }}}));

    // distinct partitions by (|pi_o|, |pi_e|) with markers on the odd parts
    out.push_back(makeSeriesCase(
        "ss-bu-strict", "odd-part markers over distinct partitions, two size grades", 14,
        {{"", {}, 0, -1,
          [](int order) {
              ContextPtr ctx = ctxXYMarkers({"t", "z"}, kBigCap);
              auto wt = [ctx](const Partition& pi) {
                  StatisticVector st = statistics(pi, 2);
                  return Monomial::of(ctx, {{"x", static_cast<int>(st.oddIndexedSum)},
                                            {"y", static_cast<int>(st.evenIndexedSum)},
                                            {"t", st.oddOddIndexed},
                                            {"z", st.oddEvenIndexed}});
              };
              return weightedSum(PartitionClass::distinct(), wt, ctx, order);
          },
          [](int order) {
              ContextPtr ctx = ctxXYMarkers({"t", "z"}, kBigCap);
              Monomial xt = Monomial::of(ctx, {{"x", 1}, {"t", 1}});
              Monomial x2yz = Monomial::of(ctx, {{"x", 2}, {"y", 1}, {"z", 1}});
              Monomial x2 = Monomial::of(ctx, {{"x", 2}});
              Monomial mod = Monomial::of(ctx, {{"x", 2}, {"y", 2}});
              return poch(xt, -1, mod, kInfinity, order) *
                     poch(x2yz, -1, mod, kInfinity, order) *
                     inversePochhammer(x2, mod, kInfinity, order);
          }}}));

    out.push_back(makeSeriesCase(
        "bu-mod4", "distinct partitions by size with odd-part markers, mod-4 products", 16,
        {{"", {}, 0, -1,
          [](int order) {
              ContextPtr ctx = ctxQMarkers({"t", "z"}, kBigCap);
              auto wt = [ctx](const Partition& pi) { return statWeightQTZ(ctx, pi); };
              return weightedSum(PartitionClass::distinct(), wt, ctx, order);
          },
          [](int order) {
              ContextPtr ctx = ctxQMarkers({"t", "z"}, kBigCap);
              Monomial q = Monomial::of(ctx, {{"q", 1}});
              Monomial q4 = q.pow(4);
              return poch(Monomial::of(ctx, {{"q", 1}, {"t", 1}}), -1, q4, kInfinity, order) *
                     poch(Monomial::of(ctx, {{"q", 3}, {"z", 1}}), -1, q4, kInfinity, order) *
                     poch(q.pow(2), -1, q4, kInfinity, order) *
                     poch(q4, -1, q4, kInfinity, order);
          }}}));
}

// ---------------------------------------------------------------------------
// The k-strict family

TruncatedSeries prefixSum(const ContextPtr& ctx, int firstVar, int count, int order)
{
    // a_1 + a_1 a_2 + ... + a_1...a_count starting at variable index firstVar
    TruncatedSeries s = TruncatedSeries::zero(ctx, order);
    std::vector<int> exps(static_cast<size_t>(ctx->size()), 0);
    for (int l = 1; l <= count; ++l) {
        exps[static_cast<size_t>(firstVar + l - 1)] = 1;
        s.addTerm(Monomial(ctx, exps), 1);
    }
    return s;
}

Monomial rangeProduct(const ContextPtr& ctx, int firstVar, int count)
{
    std::vector<int> exps(static_cast<size_t>(ctx->size()), 0);
    for (int l = 0; l < count; ++l) exps[static_cast<size_t>(firstVar + l)] = 1;
    return Monomial(ctx, exps);
}

void registerKStrictCases(std::vector<CatalogCase>& out)
{
    std::vector<SeriesInstance> eInst, sInst, dsInst, evaInst;
    for (int k = 1; k <= 4; ++k) {
        int minOrder = 2 * k * k;
        eInst.push_back(
            {label("k=", k), {{"k", k}}, minOrder, -1,
             [k](int order) {
                 ContextPtr ctx = omegaContext(k);
                 return weightedSum(PartitionClass::evenRepeatMultiples(k),
                                    omegaWeightFn(k, ctx), ctx, order);
             },
             [k](int order) {
                 ContextPtr ctx = omegaContext(k);
                 Monomial w = rangeProduct(ctx, 0, 2 * k);
                 return inversePochhammer(w, w, kInfinity, order);
             }});
        sInst.push_back(
            {label("k=", k), {{"k", k}}, minOrder, -1,
             [k](int order) {
                 ContextPtr ctx = omegaContext(k);
                 return weightedSum(PartitionClass::kStrict(k), omegaWeightFn(k, ctx), ctx,
                                    order);
             },
             [k](int order) {
                 ContextPtr ctx = omegaContext(k);
                 Monomial w = rangeProduct(ctx, 0, 2 * k);
                 Monomial z = rangeProduct(ctx, 0, k);
                 TruncatedSeries xk = prefixSum(ctx, 0, k - 1, order);
                 TruncatedSeries yk =
                     prefixSum(ctx, k, k - 1, order).shifted(z);
                 return pochS(xk, -1, w, kInfinity, order) *
                        pochS(yk, -1, w, kInfinity, order) *
                        inversePochhammer(z, w, kInfinity, order) *
                        inversePochhammer(w, w, kInfinity, order);
             }});
        dsInst.push_back(
            {label("k=", k), {{"k", k}}, minOrder, -1,
             [k](int order) {
                 ContextPtr ctx = omegaContext(k);
                 return weightedSum(PartitionClass::distinctKStrict(k),
                                    omegaWeightFn(k, ctx), ctx, order);
             },
             [k](int order) {
                 ContextPtr ctx = omegaContext(k);
                 Monomial w = rangeProduct(ctx, 0, 2 * k);
                 Monomial z = rangeProduct(ctx, 0, k);
                 TruncatedSeries xk = prefixSum(ctx, 0, k - 1, order);
                 TruncatedSeries yk = prefixSum(ctx, k, k - 1, order).shifted(z);
                 return pochS(xk, -1, w, kInfinity, order) *
                        pochS(yk, -1, w, kInfinity, order) *
                        inversePochhammer(z, w, kInfinity, order);
             }});
        evaInst.push_back(
            {label("k=", k), {{"k", k}}, minOrder, -1,
             [k](int order) {
                 std::vector<VariableContext::Variable> vars{{"x", 1, -1}, {"y", 1, -1}};
                 for (int l = 1; l < k; ++l) vars.push_back({"u" + std::to_string(l), 0, kBigCap});
                 for (int l = 1; l < k; ++l) vars.push_back({"v" + std::to_string(l), 0, kBigCap});
                 ContextPtr ctx = VariableContext::make(vars);
                 auto wt = [ctx, k](const Partition& pi) {
                     StatisticVector st = statistics(pi, k);
                     std::vector<int> exps(static_cast<size_t>(ctx->size()), 0);
                     exps[0] = static_cast<int>(st.oddIndexedSum);
                     exps[1] = static_cast<int>(st.evenIndexedSum);
                     for (int l = 1; l < k; ++l) {
                         exps[static_cast<size_t>(1 + l)] = st.residueCountsOdd[static_cast<size_t>(l - 1)];
                         exps[static_cast<size_t>(k + l)] = st.residueCountsEven[static_cast<size_t>(l - 1)];
                     }
                     return Monomial(ctx, exps);
                 };
                 return weightedSum(PartitionClass::distinctKStrict(k), wt, ctx, order);
             },
             [k](int order) {
                 std::vector<VariableContext::Variable> vars{{"x", 1, -1}, {"y", 1, -1}};
                 for (int l = 1; l < k; ++l) vars.push_back({"u" + std::to_string(l), 0, kBigCap});
                 for (int l = 1; l < k; ++l) vars.push_back({"v" + std::to_string(l), 0, kBigCap});
                 ContextPtr ctx = VariableContext::make(vars);
                 Monomial x = Monomial::of(ctx, {{"x", 1}});
                 Monomial y = Monomial::of(ctx, {{"y", 1}});
                 Monomial mod = Monomial::of(ctx, {{"x", k}, {"y", k}});
                 TruncatedSeries A = TruncatedSeries::zero(ctx, order);
                 TruncatedSeries B = TruncatedSeries::zero(ctx, order);
                 for (int l = 1; l < k; ++l) {
                     A.addTerm(Monomial::of(ctx, {{("u" + std::to_string(l)).c_str(), 1}}) *
                                   x.pow(l),
                               1);
                     B.addTerm(Monomial::of(ctx, {{("v" + std::to_string(l)).c_str(), 1}}) *
                                   x.pow(k) * y.pow(l),
                               1);
                 }
                 return pochS(A, -1, mod, kInfinity, order) *
                        pochS(B, -1, mod, kInfinity, order) *
                        inversePochhammer(x.pow(k), mod, kInfinity, order);
             }});
    }
    out.push_back(makeSeriesCase("gfEk", "even-multiplicity k-multiple partitions", 12,
                                 std::move(eInst), 1));
    out.push_back(
        makeSeriesCase("gfSk", "k-strict partitions, 2k-parameter weight", 12, std::move(sInst), 1));
    out.push_back(makeSeriesCase("gfDSk", "distinct k-strict partitions", 12,
                                 std::move(dsInst), 1));
    out.push_back(makeSeriesCase("gfDSkeva",
                                 "distinct k-strict partitions by residue markers", 12,
                                 std::move(evaInst), 1));
}

// ---------------------------------------------------------------------------
// Mod-3 infinite case

void registerMod3InfiniteCases(std::vector<CatalogCase>& out)
{
    auto mod3Rhs = [](int order, bool includeEuler) {
        ContextPtr ctx = ctxABCDEF();
        Monomial R = rangeProduct(ctx, 0, 6);
        Monomial abc = rangeProduct(ctx, 0, 3);
        TruncatedSeries x3 = prefixSum(ctx, 0, 2, order); // a + ab
        TruncatedSeries y3 = prefixSum(ctx, 3, 2, order).shifted(abc); // abcd + abcde
        TruncatedSeries r = pochS(x3, -1, R, kInfinity, order) *
                            pochS(y3, -1, R, kInfinity, order) *
                            inversePochhammer(abc, R, kInfinity, order);
        if (includeEuler) r = r * inversePochhammer(R, R, kInfinity, order);
        return r;
    };

    out.push_back(makeSeriesCase(
        "gfE3", "even-multiplicity multiples of 3", 18,
        {{"", {}, 0, -1,
          [](int order) {
              ContextPtr ctx = ctxABCDEF();
              return weightedSum(PartitionClass::evenRepeatMultiples(3),
                                 omegaWeightFn(3, ctx), ctx, order);
          },
          [](int order) {
              ContextPtr ctx = ctxABCDEF();
              Monomial R = rangeProduct(ctx, 0, 6);
              return inversePochhammer(R, R, kInfinity, order);
          }}}));

    out.push_back(makeSeriesCase(
        "gf3id", "3-strict partitions, six-parameter weight", 15,
        {{"", {}, 0, -1,
          [](int order) {
              ContextPtr ctx = ctxABCDEF();
              return weightedSum(PartitionClass::kStrict(3), omegaWeightFn(3, ctx), ctx,
                                 order);
          },
          [mod3Rhs](int order) { return mod3Rhs(order, true); }}}));

    out.push_back(makeSeriesCase(
        "gfBid", "distinct 3-strict partitions, six-parameter weight", 15,
        {{"", {}, 0, -1,
          [](int order) {
              ContextPtr ctx = ctxABCDEF();
              return weightedSum(PartitionClass::distinctKStrict(3), omegaWeightFn(3, ctx),
                                 ctx, order);
          },
          [mod3Rhs](int order) { return mod3Rhs(order, false); }}}));

    out.push_back(makeSeriesCase(
        "gfBevaid", "distinct 3-strict partitions by residue markers", 15,
        {{"", {}, 0, -1,
          [](int order) {
              ContextPtr ctx = ctxXYMarkers({"s", "t", "u", "v"}, kBigCap);
              auto wt = [ctx](const Partition& pi) { return statWeightXYSTUV(ctx, pi); };
              return weightedSum(PartitionClass::distinctKStrict(3), wt, ctx, order);
          },
          [](int order) {
              ContextPtr ctx = ctxXYMarkers({"s", "t", "u", "v"}, kBigCap);
              Monomial x = Monomial::of(ctx, {{"x", 1}});
              Monomial mod = Monomial::of(ctx, {{"x", 3}, {"y", 3}});
              TruncatedSeries A(ctx, order);
              A.addTerm(Monomial::of(ctx, {{"s", 1}, {"x", 1}}), 1);
              A.addTerm(Monomial::of(ctx, {{"t", 1}, {"x", 2}}), 1);
              TruncatedSeries B(ctx, order);
              B.addTerm(Monomial::of(ctx, {{"u", 1}, {"x", 3}, {"y", 1}}), 1);
              B.addTerm(Monomial::of(ctx, {{"v", 1}, {"x", 3}, {"y", 2}}), 1);
              return pochS(A, -1, mod, kInfinity, order) *
                     pochS(B, -1, mod, kInfinity, order) *
                     inversePochhammer(x.pow(3), mod, kInfinity, order);
          }}}));

    // the four marker specializations at x = y = q
    struct MarkerSpec {
        const char* id;
        int pattern;
        int e1;  // exponent of q with the first marker
        int e2;  // exponent with the second marker
    };
    const MarkerSpec specs[4] = {
        {"sv-zero", 0, 2, 4}, // surviving markers t, u
        {"tu-zero", 1, 1, 5}, // surviving markers s, v
        {"tv-zero", 2, 1, 4}, // surviving markers s, u
        {"su-zero", 3, 2, 5}, // surviving markers t, v
    };
    for (const auto& sp : specs) {
        const MarkerPattern& pat = kPatterns[sp.pattern];
        out.push_back(makeSeriesCase(
            sp.id, "distinct 3-strict partitions with one residue pair erased", 18,
            {{"", {}, 0, -1,
              [pat](int order) {
                  ContextPtr ctx = ctxQMarkers({pat.m1, pat.m2}, kBigCap);
                  PartitionClass cls = ds3Restricted(pat, -1);
                  auto wt = [ctx, pat](const Partition& pi) {
                      return patternWeight(ctx, pat, pi);
                  };
                  return weightedSum(cls, wt, ctx, order);
              },
              [pat, sp](int order) {
                  ContextPtr ctx = ctxQMarkers({pat.m1, pat.m2}, kBigCap);
                  Monomial q = Monomial::of(ctx, {{"q", 1}});
                  Monomial q6 = q.pow(6);
                  return poch(Monomial::of(ctx, {{pat.m1, 1}}) * q.pow(sp.e1), -1, q6,
                              kInfinity, order) *
                         poch(q.pow(3), -1, q6, kInfinity, order) *
                         poch(Monomial::of(ctx, {{pat.m2, 1}}) * q.pow(sp.e2), -1, q6,
                              kInfinity, order) *
                         poch(q6, -1, q6, kInfinity, order);
              }}}));
    }
}

// ---------------------------------------------------------------------------
// Mod-3 bounded case

} // namespace

static TruncatedSeries s3BoundedFormula(int N, int shift, const ContextPtr& ctx, int order)
{
    // sum over quadruples t1+t2+t3+t4 = N of the four block families, with
    // the staircase exponent on the type-I family shifted for bound 3N+2
    Monomial R = rangeProduct(ctx, 0, 6);
    Monomial abc = rangeProduct(ctx, 0, 3);
    TruncatedSeries x3 = prefixSum(ctx, 0, 2, order);
    TruncatedSeries y3 = prefixSum(ctx, 3, 2, order).shifted(abc);
    TruncatedSeries total = TruncatedSeries::zero(ctx, order);
    for (int t1 = 0; t1 <= N; ++t1) {
        int c1 = (t1 + shift) * (t1 + shift - 1) / 2;
        if (t1 + 6 * c1 > order) break;
        TruncatedSeries f1 = seriesPow(x3, t1).shifted(R.pow(c1)) *
                             inversePochhammer(R, R, t1, order);
        if (f1.isZero()) continue;
        for (int t2 = 0; t1 + t2 <= N; ++t2) {
            int c2 = t2 * (t2 - 1) / 2;
            if (4 * t2 + 6 * c2 > order) break;
            TruncatedSeries f2 = seriesPow(y3, t2).shifted(R.pow(c2)) *
                                 inversePochhammer(R, R, t2, order);
            TruncatedSeries f12 = f1 * f2;
            if (f12.isZero()) continue;
            for (int t3 = 0; t1 + t2 + t3 <= N; ++t3) {
                if (3 * t3 > order) break;
                int t4 = N - t1 - t2 - t3;
                TruncatedSeries f3 =
                    inversePochhammer(R, R, t3, order).shifted(abc.pow(t3));
                total += f12 * f3 * inversePochhammer(R, R, t4, order);
            }
        }
    }
    return total;
}

TruncatedSeries s3BoundedRhs(int N, int mu, int order)
{
    ContextPtr ctx = ctxABCDEF();
    Monomial a = Monomial::of(ctx, {{"a", 1}});
    Monomial abc = rangeProduct(ctx, 0, 3);
    if (mu == 0) return s3BoundedFormula(N, 0, ctx, order);
    if (mu == 1) {
        TruncatedSeries s0 = s3BoundedFormula(N, 0, ctx, order);
        TruncatedSeries swapped = substitute(
            s0,
            {{"a", Monomial::of(ctx, {{"d", 1}})}, {"b", Monomial::of(ctx, {{"e", 1}})},
             {"c", Monomial::of(ctx, {{"f", 1}})}, {"d", Monomial::of(ctx, {{"a", 1}})},
             {"e", Monomial::of(ctx, {{"b", 1}})}, {"f", Monomial::of(ctx, {{"c", 1}})}},
            ctx);
        return s0 + swapped.shifted(a * abc.pow(N));
    }
    TruncatedSeries pref = TruncatedSeries::one(ctx, order);
    pref.addTerm(a, 1);
    pref.addTerm(Monomial::of(ctx, {{"a", 1}, {"b", 1}}), 1);
    return pref * s3BoundedFormula(N, 1, ctx, order);
}

namespace {

void registerMod3BoundedCases(std::vector<CatalogCase>& out)
{
    std::vector<SeriesInstance> e3b;
    for (int N = 0; N <= 8; ++N) {
        e3b.push_back({label("N=", N), {{"N", N}}, 0, -1,
                       [N](int order) {
                           ContextPtr ctx = ctxABCDEF();
                           PartitionClass cls = PartitionClass::evenRepeatMultiples(3);
                           cls.maxPart = N;
                           return weightedSum(cls, omegaWeightFn(3, ctx), ctx, order);
                       },
                       [N](int order) {
                           ContextPtr ctx = ctxABCDEF();
                           Monomial R = rangeProduct(ctx, 0, 6);
                           return inversePochhammer(R, R, N / 3, order);
                       }});
    }
    out.push_back(makeSeriesCase("gfE3b", "bounded even-multiplicity multiples of 3", 18,
                                 std::move(e3b), 3));

    std::vector<SeriesInstance> s3b;
    for (int N = 0; N <= 4; ++N) {
        for (int mu = 0; mu <= 2; ++mu) {
            int bound = 3 * N + mu;
            s3b.push_back({label("S N=", N, " mu=", mu), {{"N", N}, {"mu", mu}, {"ds", 0}}, 0, -1,
                           [bound](int order) {
                               ContextPtr ctx = ctxABCDEF();
                               PartitionClass cls = PartitionClass::kStrict(3);
                               cls.maxPart = bound;
                               return weightedSum(cls, omegaWeightFn(3, ctx), ctx, order);
                           },
                           [N, mu](int order) { return s3BoundedRhs(N, mu, order); }});
            s3b.push_back(
                {label("DS N=", N, " mu=", mu), {{"N", N}, {"mu", mu}, {"ds", 1}}, 0, -1,
                 [bound](int order) {
                     ContextPtr ctx = ctxABCDEF();
                     PartitionClass cls = PartitionClass::distinctKStrict(3);
                     cls.maxPart = bound;
                     return weightedSum(cls, omegaWeightFn(3, ctx), ctx, order);
                 },
                 [N, mu](int order) {
                     ContextPtr ctx = ctxABCDEF();
                     Monomial R = rangeProduct(ctx, 0, 6);
                     return pochhammer(R, R, N, order) * s3BoundedRhs(N, mu, order);
                 }});
        }
    }
    out.push_back(makeSeriesCase(
        "s3-bounded", "3-strict partitions with bounded largest part, block expansion", 15,
        std::move(s3b), 2));
}

// ---------------------------------------------------------------------------
// Bounded marker polynomials and their coefficient formulas

constexpr int kFullPolyOrder = 240; // above every degree the bounded classes reach

TruncatedSeries smuFormula(int N, int mu, const ContextPtr& ctx, int order)
{
    Monomial x = Monomial::of(ctx, {{"x", 1}});
    Monomial mod = Monomial::of(ctx, {{"x", 3}, {"y", 3}});
    if (mu == 1) {
        TruncatedSeries s0 = smuFormula(N, 0, ctx, order);
        TruncatedSeries swapped = substitute(
            s0,
            {{"x", Monomial::of(ctx, {{"y", 1}})}, {"y", Monomial::of(ctx, {{"x", 1}})},
             {"s", Monomial::of(ctx, {{"u", 1}})}, {"t", Monomial::of(ctx, {{"v", 1}})},
             {"u", Monomial::of(ctx, {{"s", 1}})}, {"v", Monomial::of(ctx, {{"t", 1}})}},
            ctx);
        return s0 + swapped.shifted(Monomial::of(ctx, {{"s", 1}, {"x", 3 * N + 1}}));
    }
    int half = mu / 2;
    TruncatedSeries A(ctx, order); // s x + t x^2
    A.addTerm(Monomial::of(ctx, {{"s", 1}, {"x", 1}}), 1);
    A.addTerm(Monomial::of(ctx, {{"t", 1}, {"x", 2}}), 1);
    TruncatedSeries B(ctx, order); // u x^3 y + v x^3 y^2
    B.addTerm(Monomial::of(ctx, {{"u", 1}, {"x", 3}, {"y", 1}}), 1);
    B.addTerm(Monomial::of(ctx, {{"v", 1}, {"x", 3}, {"y", 2}}), 1);

    TruncatedSeries total = TruncatedSeries::zero(ctx, order);
    for (int i = 0; i <= N; ++i)
        for (int j = 0; i + j <= N; ++j)
            for (int k = 0; i + j + k <= N; ++k) {
                int l = N - i - j - k;
                int stair = (i + half) * (i + half - 1) / 2 + j * (j - 1) / 2;
                TruncatedSeries term = qMultinomial(N, {i, j, k, l}, mod, order) *
                                       seriesPow(A, i) * seriesPow(B, j);
                total += term.shifted(x.pow(3 * k) * mod.pow(stair));
            }
    if (half == 1) {
        TruncatedSeries pref = TruncatedSeries::one(ctx, order);
        pref.addTerm(Monomial::of(ctx, {{"s", 1}, {"x", 1}}), 1);
        pref.addTerm(Monomial::of(ctx, {{"t", 1}, {"x", 2}}), 1);
        total = pref * total;
    }
    return total;
}

void registerSmuBoundedCase(std::vector<CatalogCase>& out)
{
    std::vector<SeriesInstance> inst;
    for (int N = 0; N <= 4; ++N)
        for (int mu = 0; mu <= 2; ++mu) {
            int bound = 3 * N + mu;
            inst.push_back(
                {label("N=", N, " mu=", mu), {{"N", N}, {"mu", mu}}, 0, kFullPolyOrder,
                 [bound](int order) {
                     ContextPtr ctx = ctxXYMarkers({"s", "t", "u", "v"}, kBigCap);
                     PartitionClass cls = PartitionClass::distinctKStrict(3);
                     cls.maxPart = bound;
                     TruncatedSeries acc(ctx, order);
                     forEachInFiniteClass(cls, [&](const Partition& pi) {
                         acc.addTerm(statWeightXYSTUV(ctx, pi), 1);
                     });
                     return acc;
                 },
                 [N, mu](int order) {
                     ContextPtr ctx = ctxXYMarkers({"s", "t", "u", "v"}, kBigCap);
                     return smuFormula(N, mu, ctx, order);
                 }});
        }
    out.push_back(makeSeriesCase(
        "smu-bounded", "bounded distinct 3-strict sums with residue markers", 12,
        std::move(inst), 4));
}

// Bounded marker polynomial over one marker pattern (memoized).
TruncatedSeries p3LhsPoly(int bound, int pattern)
{
    static std::map<std::pair<int, int>, TruncatedSeries> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find({bound, pattern});
    if (it != cache.end()) return it->second;

    const MarkerPattern& pat = kPatterns[pattern];
    ContextPtr ctx = ctxQMarkers({pat.m1, pat.m2}, kBigCap);
    PartitionClass cls = ds3Restricted(pat, bound);
    TruncatedSeries acc(ctx, kFullPolyOrder);
    forEachInFiniteClass(cls, [&](const Partition& pi) {
        acc.addTerm(patternWeight(ctx, pat, pi), 1);
    });
    return cache.emplace(std::make_pair(bound, pattern), std::move(acc)).first->second;
}

// Marker exponents of the bounded polynomial identities: q-power attached to
// markers m1^i m2^j for each pattern, with mu in {0,2} vs mu = 1.
int p3Exponent(int pattern, int mu, int i, int j, int k)
{
    switch (pattern) {
    case 0: return 3 * i * i + (3 * mu - 1) * i + 3 * j * j + j + 3 * k;
    case 1: return 3 * i * i + (3 * mu - 2) * i + 3 * j * j + 2 * j + 3 * k;
    case 2: return 3 * i * i + (3 * mu - 2) * i + 3 * j * j + j + 3 * k;
    default: return 3 * i * i + (3 * mu - 1) * i + 3 * j * j + 2 * j + 3 * k;
    }
}

TruncatedSeries p3Rhs(int N, int mu, int pattern, const ContextPtr& ctx, int order)
{
    const MarkerPattern& pat = kPatterns[pattern];
    Monomial q = Monomial::of(ctx, {{"q", 1}});
    Monomial q6 = q.pow(6);
    Monomial m1 = Monomial::of(ctx, {{pat.m1, 1}});
    Monomial m2 = Monomial::of(ctx, {{pat.m2, 1}});
    const int prefExp = (pattern == 0 || pattern == 3) ? 2 : 1; // q-power on the prefactor

    TruncatedSeries total = TruncatedSeries::zero(ctx, order);
    for (int i = 0; i <= N; ++i)
        for (int j = 0; i + j <= N; ++j)
            for (int k = 0; i + j + k <= N; ++k) {
                int l = N - i - j - k;
                TruncatedSeries base = qMultinomial(N, {i, j, k, l}, q6, order);
                if (mu == 1) {
                    // mu = 1 reuses the mu = 0 exponents, with a reflected
                    // second term on the patterns that track o_1
                    int e = p3Exponent(pattern, 0, i, j, k);
                    switch (pattern) {
                    case 0:
                    case 3:
                        total += base.shifted(m1.pow(i) * m2.pow(j) * q.pow(e));
                        break;
                    case 1:
                        total += base.shifted(m1.pow(i) * m2.pow(j) * q.pow(e));
                        total += base.shifted(m1.pow(j + 1) * m2.pow(i) *
                                              q.pow(e + i - j + 3 * N + 1));
                        break;
                    case 2:
                        total += base.shifted(m1.pow(i) * m2.pow(j) * q.pow(e));
                        total +=
                            base.shifted(m1.pow(j + 1) * m2.pow(i) * q.pow(e + 3 * N + 1));
                        break;
                    }
                } else {
                    int e = p3Exponent(pattern, mu, i, j, k);
                    total += base.shifted(m1.pow(i) * m2.pow(j) * q.pow(e));
                }
            }
    if (mu == 2) {
        TruncatedSeries pref = TruncatedSeries::one(ctx, order);
        pref.addTerm(m1 * q.pow(prefExp), 1);
        total = pref * total;
    }
    return total;
}

void registerP3BoundedCase(std::vector<CatalogCase>& out)
{
    std::vector<SeriesInstance> inst;
    for (int N = 0; N <= 4; ++N)
        for (int mu = 0; mu <= 2; ++mu)
            for (int pattern = 0; pattern < 4; ++pattern) {
                int bound = 3 * N + mu;
                inst.push_back({label("N=", N, " mu=", mu, " pattern=", pattern),
                                {{"N", N}, {"mu", mu}, {"pattern", pattern}},
                                0, kFullPolyOrder,
                                [bound, pattern](int) { return p3LhsPoly(bound, pattern); },
                                [N, mu, pattern](int order) {
                                    const MarkerPattern& pat = kPatterns[pattern];
                                    ContextPtr ctx =
                                        ctxQMarkers({pat.m1, pat.m2}, kBigCap);
                                    return p3Rhs(N, mu, pattern, ctx, order);
                                }});
            }
    out.push_back(makeSeriesCase(
        "p3-bounded", "bounded marker polynomials, eight specializations", 12,
        std::move(inst), 16));
}

// F/G building blocks of the coefficient formulas, as polynomials in X = q^3.
UPoly coeffF(int N, int i, int j)
{
    if (i < 0 || j < 0 || i + j > N) return UPoly::zero();
    return inflatePoly(qMultinomialPoly(N, {i, j, N - i - j}), 2) *
           negPochhammerPoly(N - i - j);
}

UPoly coeffG(int N, int i, int j)
{
    UPoly f = coeffF(N + 1, i, j);
    if (f.isZero()) return f;
    UPoly num = (UPoly::one() - UPoly::term(1, N + 1 + i - j)) * f;
    return num.exactDivide(UPoly::one() - UPoly::term(1, 2 * (N + 1)));
}

void registerCoeffCases(std::vector<CatalogCase>& out)
{
    // pattern, marker-exponent prefix, and F/G split per formula
    struct CoeffSpec {
        const char* id;
        int pattern;
        int m; // parameter of the exponent functions
        bool pi; // use the shifted exponent
        bool gOnAtMu1; // G enters already at mu = 1
    };
    const CoeffSpec specs[4] = {
        {"coeff1", 0, 1, false, false},
        {"coeff2", 1, 2, false, true},
        {"coeff3", 2, 1, true, true},
        {"coeff4", 3, 2, true, false},
    };
    for (const auto& sp : specs) {
        std::vector<SeriesInstance> inst;
        for (int N = 0; N <= 4; ++N)
            for (int mu = 0; mu <= 2; ++mu)
                for (int i = 0; i <= N; ++i)
                    for (int j = 0; j <= N; ++j) {
                        if (i + j > N + (mu == 2 ? 1 : 0)) continue;
                        int bound = 3 * N + mu;
                        const MarkerPattern& pat = kPatterns[sp.pattern];
                        inst.push_back(
                            {label("N=", N, " mu=", mu, " i=", i, " j=", j),
                             {{"N", N}, {"mu", mu}, {"i", i}, {"j", j}},
                             0, kFullPolyOrder,
                             [bound, pat, sp, i, j](int) {
                                 return extractCoefficient(
                                     p3LhsPoly(bound, sp.pattern),
                                     {{pat.m1, i}, {pat.m2, j}});
                             },
                             [sp, N, mu, i, j](int order) {
                                 int omega = (3 * i - sp.m) * i + (3 * j + sp.m) * j;
                                 if (sp.pi) omega += (sp.m % 2 == 1) ? -i : i;
                                 bool useG = (mu == 2) || (mu == 1 && sp.gOnAtMu1);
                                 UPoly fg = useG ? coeffG(N, i, j) : coeffF(N, i, j);
                                 ContextPtr ctx = ctxQ();
                                 Monomial q = Monomial::of(ctx, {{"q", 1}});
                                 return liftPoly(fg, q.pow(3), order)
                                     .shifted(q.pow(omega));
                             }});
                    }
        out.push_back(makeSeriesCase(sp.id, "bounded marker coefficient in closed form", 12,
                                     std::move(inst), 17));
    }
}

} // namespace

void registerSeriesCases(std::vector<CatalogCase>& out)
{
    registerBouletCases(out);
    registerKStrictCases(out);
    registerMod3InfiniteCases(out);
    registerMod3BoundedCases(out);
    registerSmuBoundedCase(out);
    registerP3BoundedCase(out);
    registerCoeffCases(out);
}

} // namespace detail
} // namespace partlab
