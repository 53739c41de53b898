#include <doctest.h>

#include <set>

#include "partlab/catalog.hpp"

using namespace partlab;

namespace {

std::set<std::string> texts(const std::vector<Partition>& v)
{
    std::set<std::string> out;
    for (const auto& p : v) out.insert(p.text());
    return out;
}

} // namespace

TEST_CASE("catalog registry")
{
    CHECK(catalog().size() > 40);
    CHECK(findCase("gf3id") != nullptr);
    CHECK(findCase("no-such-id") == nullptr);
    CHECK_THROWS_AS(verifyCase("no-such-id"), std::invalid_argument);
    // ids are unique and sorted
    auto ids = catalogIds();
    for (size_t i = 1; i < ids.size(); ++i) CHECK(ids[i - 1] < ids[i]);
}

TEST_CASE("spot verification")
{
    VerificationReport rep = verifyCase("gf3id", 12);
    CHECK(rep.match);
    CHECK(rep.instancesChecked == 1);

    rep = verifyCase("gfDSkeva", 12, {{"k", 3}});
    CHECK(rep.match);
    CHECK(rep.instancesChecked == 1);

    rep = verifyCase("phinm", 14, {{"N", 3}, {"M", 2}, {"nu", 1}, {"mu", 0}});
    CHECK(rep.match);
}

TEST_CASE("an injected fault is reported at its monomial")
{
    ContextPtr ctx = VariableContext::make({{"q", 1, -1}});
    Monomial q = Monomial::of(ctx, {{"q", 1}});
    TruncatedSeries lhs = inversePochhammer(q, q, kInfinity, 8);
    TruncatedSeries rhs = lhs;
    rhs.addTerm(q.pow(8), 1);
    auto diff = firstDifference(lhs, rhs);
    REQUIRE(diff.has_value());
    CHECK(diff->monomial == "q^8");
    CHECK(diff->lhs - diff->rhs == -1);
}

TEST_CASE("witness sets for the mod-5 example")
{
    CHECK(texts(membersAkm(12, 5, 1)) == std::set<std::string>{"12", "7,5"});
    CHECK(texts(membersCkm(12, 5, 1)) == std::set<std::string>{"12", "10,2"});
    CHECK(texts(membersAkm(12, 5, 2)) == std::set<std::string>{"10,2", "6,5,1"});
    CHECK(texts(membersCkm(12, 5, 2)) == std::set<std::string>{"11,1", "7,5"});
}

TEST_CASE("refined tables at n = 17")
{
    RefinedParams p{1, 3, -1};
    CHECK(texts(membersRefined(RefinedFamily::DI, 17, 2, 0, p)) ==
          std::set<std::string>{"13,3,1", "10,6,1", "7,6,4"});
    CHECK(texts(membersRefined(RefinedFamily::DII, 17, 2, 0, p)) ==
          std::set<std::string>{"13,3,1", "9,7,1", "7,6,3,1"});
    CHECK(texts(membersRefined(RefinedFamily::DI, 17, 1, 1, p)) ==
          std::set<std::string>{"16,1", "13,4", "12,4,1", "10,7", "10,4,3", "9,7,1",
                                "7,6,3,1"});
    CHECK(texts(membersRefined(RefinedFamily::DII, 17, 1, 1, p)) ==
          std::set<std::string>{"16,1", "13,4", "12,4,1", "10,7", "10,6,1", "9,4,3,1",
                                "7,6,4"});
    CHECK(texts(membersRefined(RefinedFamily::DI, 17, 0, 2, p)) ==
          std::set<std::string>{"9,4,3,1"});
    CHECK(texts(membersRefined(RefinedFamily::DII, 17, 0, 2, p)) ==
          std::set<std::string>{"10,4,3"});
}

TEST_CASE("plain gap counts")
{
    CHECK(countAm(0, 1) == 1);
    CHECK(countAm(0, 2) == 1);
    CHECK(countCm(0, 1) == 1);
    for (int m = 1; m <= 2; ++m)
        for (int n = 0; n <= 30; ++n) CHECK(countAm(n, m) == countCm(n, m));
    // the gap conditions carve out the same sets as the k = 3 residue classes
    for (int m = 1; m <= 2; ++m)
        for (int n = 0; n <= 30; ++n) CHECK(countAm(n, m) == countAkm(n, 3, m));
}

TEST_CASE("bounded marker polynomial")
{
    CHECK(pPolynomial(0, 0, 12).text() == "1");
    TruncatedSeries p1 = pPolynomial(0, 1, 12);
    // largest part <= 1: empty partition and the single cell, marked s
    CHECK(p1.termCount() == 2);
    CHECK(p1.coefficient(Monomial::of(p1.context(), {{"q", 1}, {"s", 1}})) == 1);
}

TEST_CASE("bounded expansion routes agree")
{
    for (int bound = 0; bound <= 9; ++bound) {
        TruncatedSeries en =
            phiPsiBounded(bound, -1, BoundedWhich::Psi, BoundedMethod::Enumerate, 12);
        CHECK(en == phiPsiBounded(bound, -1, BoundedWhich::Psi, BoundedMethod::Iz, 12));
        CHECK(en == phiPsiBounded(bound, -1, BoundedWhich::Psi, BoundedMethod::Bu, 12));
    }
    CHECK_THROWS_AS(phiPsiBounded(4, 3, BoundedWhich::Psi, BoundedMethod::Iz, 10),
                    std::invalid_argument);
    CHECK_THROWS_AS(phiPsiBounded(4, -1, BoundedWhich::S2, BoundedMethod::Bu, 10),
                    std::invalid_argument);
    CHECK_THROWS_AS(phiPsiBounded(4, -1, BoundedWhich::S2, BoundedMethod::Thm45, 10),
                    std::invalid_argument);
}

TEST_CASE("length-marker generating function identities")
{
    // sum_M Phi_{N,M} z^M equals the length-marked sum divided by 1 - z
    ContextPtr ctx = VariableContext::make(
        {{"a", 1, -1}, {"b", 1, -1}, {"c", 1, -1}, {"d", 1, -1}, {"z", 0, 6}});
    ContextPtr abcd = VariableContext::make(
        {{"a", 1, -1}, {"b", 1, -1}, {"c", 1, -1}, {"d", 1, -1}});
    Monomial z = Monomial::of(ctx, {{"z", 1}});
    const int order = 10;
    auto inject = [&](const TruncatedSeries& s) {
        return substitute(s,
                          {{"a", Monomial::of(ctx, {{"a", 1}})},
                           {"b", Monomial::of(ctx, {{"b", 1}})},
                           {"c", Monomial::of(ctx, {{"c", 1}})},
                           {"d", Monomial::of(ctx, {{"d", 1}})}},
                          ctx);
    };
    for (int N = 0; N <= 4; ++N) {
        for (bool strict : {false, true}) {
            PartitionClass byLen = strict ? PartitionClass::distinct() : PartitionClass::all();
            byLen.maxPart = N;
            TruncatedSeries marked(ctx, order);
            forEachUpTo(byLen, order, [&](const Partition& pi) {
                ContextPtr oc = omegaContext(2);
                Monomial w = omegaWeight(pi, 2, oc);
                marked.addTerm(Monomial(ctx, {w.exponents()[0], w.exponents()[1],
                                              w.exponents()[2], w.exponents()[3],
                                              pi.length()}),
                               1);
            });
            TruncatedSeries geom = TruncatedSeries::one(ctx, order);
            for (int j = 1; j <= 6; ++j) geom.addTerm(z.pow(j), 1);
            TruncatedSeries viaLength = marked * geom;

            TruncatedSeries bySum(ctx, order);
            for (int M = 0; M <= 6; ++M) {
                PartitionClass cls = strict ? PartitionClass::distinct() : PartitionClass::all();
                cls.maxPart = N;
                cls.maxLength = M;
                ContextPtr oc = omegaContext(2);
                bySum += inject(weightedSum(
                              cls, [&](const Partition& pi) { return omegaWeight(pi, 2, oc); },
                              oc, order))
                             .shifted(z.pow(M));
            }
            CHECK(viaLength == bySum);
        }
    }
}

TEST_CASE("product and quotient closed forms agree")
{
    // (-t q^2, -u q^4; q^6) / (q^3; q^6) == (-t q^2, -q^3, -u q^4, -q^6; q^6)
    ContextPtr ctx = VariableContext::make({{"q", 1, -1}, {"t", 0, 64}, {"u", 0, 64}});
    Monomial q = Monomial::of(ctx, {{"q", 1}});
    Monomial q6 = q.pow(6);
    const int order = 20;
    auto negPoch = [&](Monomial base) {
        return pochhammerSeries(TruncatedSeries::fromMonomial(base, order, -1), q6,
                                kInfinity, order);
    };
    TruncatedSeries quotient = negPoch(Monomial::of(ctx, {{"t", 1}, {"q", 2}})) *
                               negPoch(Monomial::of(ctx, {{"u", 1}, {"q", 4}})) *
                               inversePochhammer(q.pow(3), q6, kInfinity, order);
    TruncatedSeries product = negPoch(Monomial::of(ctx, {{"t", 1}, {"q", 2}})) *
                              negPoch(q.pow(3)) *
                              negPoch(Monomial::of(ctx, {{"u", 1}, {"q", 4}})) *
                              negPoch(q6);
    CHECK(quotient == product);
}

TEST_CASE("counting cases run clean on a short range")
{
    for (const char* id : {"capparelli-AC", "savage-sills", "bu-refined", "d-refine"}) {
        VerificationReport rep = verifyCase(id, 18);
        CHECK(rep.match);
        CHECK(rep.instancesChecked > 0);
    }
}

TEST_CASE("distinct even-part witnesses pin the mod-4 product expansion")
{
    // coefficient of q^4 with no marked odd parts: only the single partition (4)
    VerificationReport rep = verifyCase("bu-mod4", 12);
    CHECK(rep.match);
    const CatalogCase* c = findCase("bu-mod4");
    TruncatedSeries rhs = c->representativeRhs(12);
    long long direct = 0;
    forEachInClass(PartitionClass::distinct(), 4, [&](const Partition& pi) {
        for (int p : pi.parts())
            if (p % 2 == 1) return;
        ++direct;
    });
    CHECK(direct == 1);
    CHECK(rhs.coefficient(Monomial::of(rhs.context(), {{"q", 4}})) == direct);
}

#include "../src/catalog_impl.hpp"

TEST_CASE("bounded expansions stabilize to the infinite products")
{
    const int order = 12;
    // the distinct-part binomial expansion at a bound beyond the order
    ContextPtr abcd = VariableContext::make(
        {{"a", 1, -1}, {"b", 1, -1}, {"c", 1, -1}, {"d", 1, -1}});
    Monomial a = Monomial::of(abcd, {{"a", 1}});
    Monomial ab = Monomial::of(abcd, {{"a", 1}, {"b", 1}});
    Monomial abc = Monomial::of(abcd, {{"a", 1}, {"b", 1}, {"c", 1}});
    Monomial Q = Monomial::of(abcd, {{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}});
    TruncatedSeries inf = detail::poch(a, -1, Q, kInfinity, order) *
                          detail::poch(abc, -1, Q, kInfinity, order) *
                          inversePochhammer(ab, Q, kInfinity, order);
    CHECK(phiPsiBounded(2 * order, -1, BoundedWhich::Psi, BoundedMethod::Iz, order) == inf);

    // the 3-strict block expansion at bound 3N >= order
    ContextPtr six = detail::ctxABCDEF();
    Monomial R = Monomial::of(six, {{"a", 1}, {"b", 1}, {"c", 1},
                                    {"d", 1}, {"e", 1}, {"f", 1}});
    Monomial abc6 = Monomial::of(six, {{"a", 1}, {"b", 1}, {"c", 1}});
    TruncatedSeries x3(six, order), y3(six, order);
    x3.addTerm(Monomial::of(six, {{"a", 1}}), 1);
    x3.addTerm(Monomial::of(six, {{"a", 1}, {"b", 1}}), 1);
    y3.addTerm(Monomial::of(six, {{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}}), 1);
    y3.addTerm(Monomial::of(six, {{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}, {"e", 1}}), 1);
    TruncatedSeries infS3 = detail::pochS(x3, -1, R, kInfinity, order) *
                            detail::pochS(y3, -1, R, kInfinity, order) *
                            inversePochhammer(abc6, R, kInfinity, order) *
                            inversePochhammer(R, R, kInfinity, order);
    CHECK(detail::s3BoundedRhs(order, 0, order) == infS3);
}

TEST_CASE("refined counts sum to the plain counts")
{
    for (int k = 3; k <= 5; ++k)
        for (int m = 1; m <= 2; ++m)
            for (int n = 0; n <= 20; n += 4) {
                RefinedParams p{m, k, -1};
                long long sum = 0;
                for (int i = 0; i <= n; ++i)
                    for (int j = 0; j <= n; ++j) {
                        long long c = countRefined(RefinedFamily::AkM, n, i, j, p);
                        sum += c;
                        if (i > 6 && j > 6 && c == 0) break;
                    }
                CHECK(sum == countAkm(n, k, m));
            }
}

TEST_CASE("marker erasure splices the weighted families")
{
    // erasing the residue markers of the six-variable sum leaves the
    // two-grade sum obtained by collapsing the cell labels
    const int order = 12;
    ContextPtr xy = VariableContext::make({{"x", 1, -1}, {"y", 1, -1}});
    Monomial x = Monomial::of(xy, {{"x", 1}});
    Monomial y = Monomial::of(xy, {{"y", 1}});

    ContextPtr six = detail::ctxABCDEF();
    TruncatedSeries viaLabels = weightedSum(
        PartitionClass::distinctKStrict(3),
        [&](const Partition& pi) { return omegaWeight(pi, 3, six); }, six, order);
    TruncatedSeries collapsed = substitute(viaLabels,
                                           {{"a", x}, {"b", x}, {"c", x},
                                            {"d", y}, {"e", y}, {"f", y}},
                                           xy);

    TruncatedSeries viaStats = weightedSum(
        PartitionClass::distinctKStrict(3),
        [&](const Partition& pi) {
            StatisticVector st = statistics(pi, 3);
            return Monomial(xy, {static_cast<int>(st.oddIndexedSum),
                                 static_cast<int>(st.evenIndexedSum)});
        },
        xy, order);
    CHECK(collapsed == viaStats);

    // with t erased and x = y = q, the odd-part marked sum counts the
    // distinct partitions whose odd-indexed parts are even
    ContextPtr ctxq = VariableContext::make({{"q", 1, -1}});
    Monomial q = Monomial::of(ctxq, {{"q", 1}});
    PartitionClass oddIdxEven = PartitionClass::distinct();
    oddIdxEven.residues.push_back({ResidueRule::OddIndexed, 2, {0}});
    for (int n = 0; n <= 16; ++n) {
        long long viaClass = 0;
        forEachInClass(oddIdxEven, n, [&](const Partition&) { ++viaClass; });
        long long viaMarker = 0;
        forEachInClass(PartitionClass::distinct(), n, [&](const Partition& pi) {
            if (statistics(pi, 2).oddOddIndexed == 0) ++viaMarker;
        });
        CHECK(viaClass == viaMarker);
        long long viaResidues = 0;
        forEachInClass(PartitionClass::all(), n, [&](const Partition& pi) {
            for (int part : pi.parts()) {
                int r = part % 8;
                if (r != 2 && r != 3 && r != 7) return;
            }
            ++viaResidues;
        });
        CHECK(viaClass == viaResidues);
    }
}
