// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Budgets are wall-clock seconds.
#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "partlab/catalog.hpp"

using namespace partlab;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what, double seconds,
            double budget, const std::string& detail = "")
{
    bool inBudget = budget <= 0 || seconds <= budget;
    bool pass = ok && inBudget;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what
              << " [" << seconds << "s";
    if (budget > 0) std::cout << " / budget " << budget << "s";
    std::cout << "]";
    if (!ok && !detail.empty()) std::cout << " -- " << detail;
    if (ok && !inBudget) std::cout << " -- over time budget";
    std::cout << std::endl;
    if (!pass) ++failures;
}

template <typename F> double timed(F&& f)
{
    auto t0 = Clock::now();
    f();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. the nine 3-strict partitions of 10, in order
void criterion1()
{
    bool ok = false;
    double s = timed([&] {
        std::vector<Partition> got = enumerateClass(PartitionClass::kStrict(3), 10);
        std::vector<Partition> expected = {
            Partition({10}),      Partition({9, 1}),    Partition({8, 2}),
            Partition({7, 3}),    Partition({6, 4}),    Partition({6, 3, 1}),
            Partition({5, 3, 2}), Partition({4, 3, 3}), Partition({3, 3, 3, 1})};
        ok = (got == expected);
    });
    report(1, ok, "the nine 3-strict partitions of 10", s, 1.0);
}

// 2. the two labelled diagram weights
void criterion2()
{
    bool ok = false;
    double s = timed([&] {
        ContextPtr c2 = omegaContext(2), c3 = omegaContext(3);
        Partition pi({10, 10, 7, 5, 2});
        ok = omegaWeight(pi, 2, c2) ==
                 Monomial::of(c2, {{"a", 10}, {"b", 9}, {"c", 8}, {"d", 7}}) &&
             omegaWeight(pi, 3, c3) == Monomial::of(c3, {{"a", 8}, {"b", 6}, {"c", 5},
                                                         {"d", 6}, {"e", 5}, {"f", 4}});
    });
    report(2, ok, "cell-label weights of (10,10,7,5,2)", s, 0);
}

// 3. worked decomposition + exhaustive roundtrip and weight preservation
void criterion3()
{
    bool ok = true;
    std::string detail;
    double s = timed([&] {
        Partition pi({8, 6, 6, 5, 3, 3, 3, 1});
        auto [p1, p2] = psiK(pi, 3);
        if (!(p1 == Partition({8, 5, 3, 1}) && p2 == Partition({6, 6, 3, 3})))
            ok = false, detail = "worked example decomposition";
        if (psiKInverse(p1, p2, 3) == pi) {
            // weight product and length additivity
            ContextPtr ctx = omegaContext(3);
            if (!(omegaWeight(p1, 3, ctx) * omegaWeight(p2, 3, ctx) ==
                  omegaWeight(pi, 3, ctx)) ||
                p1.length() + p2.length() != pi.length())
                ok = false, detail = "weight or length bookkeeping";
        } else {
            ok = false;
            detail = "roundtrip of the worked example";
        }
        for (int k = 2; k <= 4 && ok; ++k) {
            BijectionReport rep = runBijectionTest("psi_k", k, 16);
            if (!rep.failures.empty()) {
                ok = false;
                detail = "k=" + std::to_string(k) + ": " + rep.failures.front().input;
            }
        }
    });
    report(3, ok, "row-removal bijection, exhaustive to size 16 for k in {2,3,4}", s, 60.0,
           detail);
}

// 4. gap-condition counts equal residue-class counts up to 40
void criterion4()
{
    bool ok = true;
    std::string detail;
    double s = timed([&] {
        for (int m = 1; m <= 2 && ok; ++m)
            for (int n = 0; n <= 40 && ok; ++n)
                if (countAm(n, m) != countCm(n, m)) {
                    ok = false;
                    detail = "m=" + std::to_string(m) + " n=" + std::to_string(n);
                }
    });
    report(4, ok, "gap-condition vs mod-6 counts to n = 40", s, 60.0, detail);
}

// 5. mod-5 witness sets and the refined k-strict tables
void criterion5()
{
    bool ok = true;
    std::string detail;
    auto texts = [](const std::vector<Partition>& v) {
        std::set<std::string> out;
        for (const auto& p : v) out.insert(p.text());
        return out;
    };
    double s = timed([&] {
        ok = texts(membersAkm(12, 5, 1)) == std::set<std::string>{"12", "7,5"} &&
             texts(membersCkm(12, 5, 1)) == std::set<std::string>{"12", "10,2"} &&
             texts(membersAkm(12, 5, 2)) == std::set<std::string>{"10,2", "6,5,1"} &&
             texts(membersCkm(12, 5, 2)) == std::set<std::string>{"11,1", "7,5"} &&
             countAkm(12, 5, 1) == 2 && countCkm(12, 5, 2) == 2;
        if (!ok) {
            detail = "witness sets at n = 12, k = 5";
            return;
        }
        VerificationReport rep = verifyCase("kstrict-AC", 30);
        if (!rep.match) {
            ok = false;
            detail = rep.firstDiscrepancy ? rep.firstDiscrepancy->instance : "refined table";
        }
    });
    report(5, ok, "mod-5 witnesses and refined tables for k <= 6, n <= 30", s, 0, detail);
}

// 6. refined counts and exact partition lists at n = 17
void criterion6()
{
    bool ok = true;
    std::string detail;
    auto texts = [](const std::vector<Partition>& v) {
        std::set<std::string> out;
        for (const auto& p : v) out.insert(p.text());
        return out;
    };
    double s = timed([&] {
        RefinedParams p{1, 3, -1};
        struct Row {
            int i, j;
            long long count;
            std::set<std::string> typeI, typeII;
        };
        std::vector<Row> rows = {
            {2, 0, 3, {"13,3,1", "10,6,1", "7,6,4"}, {"13,3,1", "9,7,1", "7,6,3,1"}},
            {1, 1, 7,
             {"16,1", "13,4", "12,4,1", "10,7", "10,4,3", "9,7,1", "7,6,3,1"},
             {"16,1", "13,4", "12,4,1", "10,7", "10,6,1", "9,4,3,1", "7,6,4"}},
            {0, 2, 1, {"9,4,3,1"}, {"10,4,3"}},
        };
        for (const auto& row : rows) {
            auto mi = membersRefined(RefinedFamily::DI, 17, row.i, row.j, p);
            auto mii = membersRefined(RefinedFamily::DII, 17, row.i, row.j, p);
            if (static_cast<long long>(mi.size()) != row.count ||
                static_cast<long long>(mii.size()) != row.count ||
                texts(mi) != row.typeI || texts(mii) != row.typeII) {
                ok = false;
                detail = "(i,j)=(" + std::to_string(row.i) + "," + std::to_string(row.j) + ")";
                return;
            }
        }
    });
    report(6, ok, "refined lists at n = 17 match with counts 3, 7, 1", s, 0, detail);
}

// 7. every catalog entry verifies
void criterion7()
{
    bool ok = true;
    std::string detail;
    double s = timed([&] {
        for (const auto& c : catalog()) {
            VerificationReport rep = c.run(c.defaultOrder, {});
            if (!rep.match) {
                ok = false;
                detail = c.id +
                         (rep.firstDiscrepancy ? " at " + rep.firstDiscrepancy->instance +
                                                     " " + rep.firstDiscrepancy->monomial
                                               : "");
                return;
            }
        }
    });
    std::ostringstream what;
    what << "all " << catalog().size() << " catalog entries match";
    report(7, ok, what.str(), s, 300.0, detail);
}

// 8. the two bounded expansions agree with each other, and the length-marked
// relation holds
void criterion8()
{
    bool ok = true;
    std::string detail;
    double s = timed([&] {
        for (int N = 0; N <= 5 && ok; ++N)
            for (int nu = 0; nu <= 1 && ok; ++nu) {
                int bound = 2 * N + nu;
                if (!(phiPsiBounded(bound, -1, BoundedWhich::Psi, BoundedMethod::Iz, 13) ==
                      phiPsiBounded(bound, -1, BoundedWhich::Psi, BoundedMethod::Bu, 13))) {
                    ok = false;
                    detail = "distinct-part expansions at bound " + std::to_string(bound);
                }
                if (!(phiPsiBounded(bound, -1, BoundedWhich::Phi, BoundedMethod::Iz, 13) ==
                      phiPsiBounded(bound, -1, BoundedWhich::Phi, BoundedMethod::Bu, 13))) {
                    ok = false;
                    detail = "unrestricted expansions at bound " + std::to_string(bound);
                }
            }
        if (ok) {
            VerificationReport rep = verifyCase("phipsi", 12);
            if (!rep.match) {
                ok = false;
                detail = "length-marked relation";
            }
        }
    });
    report(8, ok, "cross-expansion equality and the length-marked relation", s, 0, detail);
}

// 9. strip/jump worked examples, exhaustive pipeline, and the closed-form
// recount of the distinct bounded polynomial
void criterion9()
{
    bool ok = true;
    std::string detail;
    double s = timed([&] {
        Partition pi({20, 17, 16, 11, 10, 9, 6, 5, 4, 2});
        auto [reduced, stripped] = columnStrip(pi);
        if (!(reduced == Partition({12, 11, 10, 9, 8, 7, 6, 5, 4, 2}) &&
              stripped == Partition({8, 6, 6, 2, 2, 2}))) {
            ok = false;
            detail = "column strip worked example";
            return;
        }
        auto [base, tilde] = jumpDecompose(reduced, 6, 4);
        if (!(base == Partition({12, 10, 8, 7, 6, 5, 4, 3, 2, 1}) &&
              tilde == Partition({4, 4, 4, 4}))) {
            ok = false;
            detail = "jump worked example";
            return;
        }
        BijectionReport rep = runBijectionTest("strip_jump", 2, 18);
        if (!rep.failures.empty()) {
            ok = false;
            detail = "pipeline failure at " + rep.failures.front().input;
            return;
        }
        // recount: pipeline totals per (j, m) must equal the closed form
        ContextPtr ctxq = VariableContext::make({{"q", 1, -1}});
        Monomial q = Monomial::of(ctxq, {{"q", 1}});
        for (int N = 0; N <= 5 && ok; ++N)
            for (int nu = 0; nu <= 1 && ok; ++nu) {
                int bound = 2 * N + nu;
                std::map<std::pair<int, int>, TruncatedSeries> recount;
                PartitionClass d = PartitionClass::distinct();
                d.maxPart = bound;
                forEachInFiniteClass(d, [&](const Partition& part) {
                    int odds = 0, evens = 0;
                    bool oddsEvenIndexed = true;
                    for (int idx = 0; idx < part.length(); ++idx) {
                        if (part.part(idx) % 2 == 1) {
                            ++odds;
                            if (idx % 2 == 0) oddsEvenIndexed = false;
                        } else {
                            ++evens;
                        }
                    }
                    if (!oddsEvenIndexed) return;
                    auto [rd, st] = columnStrip(part);
                    auto [bs, tl] = jumpDecompose(rd, evens, odds);
                    long long total = bs.size() + tl.size() + st.size();
                    auto [it, inserted] = recount.try_emplace(
                        std::make_pair(odds, evens), TruncatedSeries::zero(ctxq, 160));
                    it->second.addTerm(q.pow(static_cast<int>(total)), 1);
                });
                for (int j = 0; j <= 4 && ok; ++j)
                    for (int m = 0; m <= 4 && ok; ++m) {
                        TruncatedSeries closed = tildePEnum(bound, 0, j, m, 160);
                        auto it = recount.find({j, m});
                        TruncatedSeries got = it == recount.end()
                                                  ? TruncatedSeries::zero(ctxq, 160)
                                                  : it->second;
                        if (!(closed == got)) {
                            ok = false;
                            detail = "recount at bound " + std::to_string(bound) + " (j,m)=(" +
                                     std::to_string(j) + "," + std::to_string(m) + ")";
                        }
                    }
            }
    });
    report(9, ok, "strip/jump pipeline and bounded distinct recount", s, 0, detail);
}

// 10. the classical series identities and the ring axioms
void criterion10()
{
    bool ok = true;
    std::string detail;
    double s = timed([&] {
        ContextPtr ctxq = VariableContext::make({{"q", 1, -1}});
        Monomial q = Monomial::of(ctxq, {{"q", 1}});

        // alternating binomial expansion of the finite product
        ContextPtr zq = VariableContext::make({{"q", 1, -1}, {"z", 0, 20}});
        Monomial qz = Monomial::of(zq, {{"q", 1}});
        Monomial z = Monomial::of(zq, {{"z", 1}});
        for (int N = 0; N <= 8 && ok; ++N) {
            TruncatedSeries lhs = pochhammer(z, qz, N, 14);
            TruncatedSeries rhs = TruncatedSeries::zero(zq, 14);
            for (int j = 0; j <= N; ++j)
                rhs += qBinomial(N, j, qz, 14).shifted(z.pow(j) * qz.pow(j * (j - 1) / 2),
                                                       (j % 2 == 0) ? 1 : -1);
            if (!(lhs == rhs)) ok = false, detail = "alternating expansion N=" + std::to_string(N);
        }

        // nonnegative expansion of the reciprocal, graded z
        ContextPtr zg = VariableContext::make({{"z", 1, -1}, {"q", 1, -1}});
        Monomial zh = Monomial::of(zg, {{"z", 1}});
        Monomial qh = Monomial::of(zg, {{"q", 1}});
        for (int N = 0; N <= 6 && ok; ++N) {
            TruncatedSeries lhs = inversePochhammer(zh, qh, N, 12);
            TruncatedSeries rhs = TruncatedSeries::zero(zg, 12);
            for (int j = 0; j <= 12; ++j)
                rhs += qBinomial(N - 1 + j, j, qh, 12).shifted(zh.pow(j));
            if (!(lhs == rhs)) ok = false, detail = "reciprocal expansion N=" + std::to_string(N);
        }

        // binomial sum to negative product
        for (int n = 0; n <= 10 && ok; ++n) {
            TruncatedSeries lhs = TruncatedSeries::zero(ctxq, 40);
            for (int j = 0; j <= n; ++j)
                lhs += qBinomial(n, j, q.pow(2), 40).shifted(q.pow(j));
            TruncatedSeries rhs =
                pochhammerSeries(TruncatedSeries::fromMonomial(q, 40, -1), q, n, 40);
            if (!(lhs == rhs)) ok = false, detail = "binomial-to-product n=" + std::to_string(n);
        }

        // convolution of two reciprocals
        for (int N = 0; N <= 6 && ok; ++N)
            for (int L = 0; L <= 6 && ok; ++L)
                for (int mu = 0; mu <= 1 && ok; ++mu) {
                    TruncatedSeries lhs = TruncatedSeries::zero(ctxq, 60);
                    for (int i = 0; i <= L; ++i) {
                        int j = L - i;
                        lhs += (qBinomial(N + i, i, q.pow(2), 60) *
                                qBinomial(N + mu - 1 + j, j, q.pow(2), 60))
                                   .shifted(q.pow(j));
                    }
                    if (!(lhs == qBinomial(2 * N + mu + L, L, q, 60)))
                        ok = false, detail = "convolution N=" + std::to_string(N);
                }

        // finite-sum to product over the six-letter alphabet
        if (ok) {
            ContextPtr cx = VariableContext::make({{"a", 1, -1}, {"b", 1, -1}, {"c", 1, -1},
                                                   {"d", 1, -1}, {"e", 1, -1}, {"f", 1, -1}});
            const int order = 20;
            Monomial R = Monomial::of(
                cx, {{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}, {"e", 1}, {"f", 1}});
            TruncatedSeries base(cx, order);
            base.addTerm(Monomial::of(cx, {{"a", 1}}), 1);
            base.addTerm(Monomial::of(cx, {{"a", 1}, {"b", 1}}), 1);
            TruncatedSeries sum = TruncatedSeries::zero(cx, order);
            for (int t = 0; t + 6 * (t * (t - 1) / 2) <= order; ++t) {
                TruncatedSeries pw = TruncatedSeries::one(cx, order);
                for (int r = 0; r < t; ++r) pw = pw * base;
                sum += pw.shifted(R.pow(t * (t - 1) / 2)) *
                       inversePochhammer(R, R, t, order);
            }
            if (!(sum == pochhammerSeries(-base, R, kInfinity, order)))
                ok = false, detail = "finite-sum to product";
        }

        // ring axioms on 1000 random triples
        if (ok) {
            ContextPtr rx =
                VariableContext::make({{"q", 1, -1}, {"x", 1, -1}, {"t", 0, 16}});
            std::mt19937 rng(176521);
            std::uniform_int_distribution<int> coeff(-9, 9);
            std::uniform_int_distribution<int> eq(0, 8), ex(0, 4), et(0, 3), nterms(1, 8);
            auto randomSeries = [&] {
                TruncatedSeries out(rx, 16);
                int n = nterms(rng);
                for (int i = 0; i < n; ++i)
                    out.addTerm(Monomial(rx, {eq(rng), ex(rng), et(rng)}), coeff(rng));
                return out;
            };
            for (int iter = 0; iter < 1000 && ok; ++iter) {
                TruncatedSeries A = randomSeries(), B = randomSeries(), C = randomSeries();
                if (!(A + B == B + A) || !(A * B == B * A) || !((A * B) * C == A * (B * C)) ||
                    !(A * (B + C) == A * B + A * C)) {
                    ok = false;
                    detail = "ring axioms, iteration " + std::to_string(iter);
                }
            }
        }
    });
    report(10, ok, "series-engine identities and 1000 ring-axiom triples", s, 0, detail);
}

} // namespace

int main()
{
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (failures == 0)
        std::cout << "acceptance: all criteria passed" << std::endl;
    else
        std::cout << "acceptance: " << failures << " criterion(s) FAILED" << std::endl;
    return failures == 0 ? 0 : 1;
}
