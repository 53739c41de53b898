#include <doctest.h>

#include <set>

#include "partlab/partitions.hpp"

using namespace partlab;

namespace {

std::vector<long long> partitionCountOracle(int ord)
{
    std::vector<long long> p(static_cast<size_t>(ord) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= ord; ++part)
        for (int d = part; d <= ord; ++d) p[static_cast<size_t>(d)] += p[static_cast<size_t>(d - part)];
    return p;
}

} // namespace

TEST_CASE("k-strict predicate")
{
    CHECK(isKStrict(Partition({3, 3, 3, 1}), 3));
    CHECK_FALSE(isKStrict(Partition({5, 4, 1}), 3));
    CHECK(isKStrict(Partition({9, 9, 2, 1, 1}), 1)); // every partition is 1-strict
    CHECK(isKStrict(Partition({6, 6, 3, 3}), 3));
    CHECK_FALSE(isKStrict(Partition({4, 4}), 3));
    CHECK(isKStrict(Partition({4, 2}), 3));
    CHECK_FALSE(isKStrict(Partition({5, 4}), 3));
}

TEST_CASE("class membership")
{
    PartitionClass e3 = PartitionClass::evenRepeatMultiples(3);
    CHECK(e3.contains(Partition({6, 6, 3, 3})));
    CHECK_FALSE(e3.contains(Partition({6, 3, 3})));
    CHECK(e3.contains(Partition{}));

    PartitionClass ds3 = PartitionClass::distinctKStrict(3);
    CHECK(ds3.contains(Partition({8, 5, 3, 1})));
    CHECK_FALSE(ds3.contains(Partition({8, 5, 4, 1})));

    // membership factors through the two constituent classes
    PartitionClass d = PartitionClass::distinct();
    PartitionClass s3 = PartitionClass::kStrict(3);
    forEachUpTo(PartitionClass::all(), 16, [&](const Partition& pi) {
        CHECK(ds3.contains(pi) == (d.contains(pi) && s3.contains(pi)));
    });
}

TEST_CASE("distinct vs k-strict intersections")
{
    // for k in {1,2} the distinct partitions are already k-strict
    for (int k = 1; k <= 2; ++k)
        forEachUpTo(PartitionClass::distinct(), 18, [&](const Partition& pi) {
            CHECK(isKStrict(pi, k));
        });
    // a distinct witness that is not 3-strict
    CHECK(hasDistinctParts(Partition({2, 1})));
    CHECK_FALSE(isKStrict(Partition({2, 1}), 3));
}

TEST_CASE("enumeration")
{
    std::vector<Partition> nine = enumerateClass(PartitionClass::kStrict(3), 10);
    std::vector<Partition> expected = {
        Partition({10}),      Partition({9, 1}),    Partition({8, 2}),
        Partition({7, 3}),    Partition({6, 4}),    Partition({6, 3, 1}),
        Partition({5, 3, 2}), Partition({4, 3, 3}), Partition({3, 3, 3, 1})};
    CHECK(nine == expected); // the list and its descending-lex order

    CHECK(enumerateClass(PartitionClass::all(), 0) == std::vector<Partition>{Partition{}});
    std::vector<Partition> d6 = enumerateClass(PartitionClass::distinct(), 6);
    CHECK(d6 == std::vector<Partition>{Partition({6}), Partition({5, 1}), Partition({4, 2}),
                                       Partition({3, 2, 1})});

    auto p = partitionCountOracle(30);
    for (int n = 0; n <= 30; ++n) {
        long long c = 0;
        forEachInClass(PartitionClass::all(), n, [&](const Partition&) { ++c; });
        CHECK(c == p[static_cast<size_t>(n)]);
    }
}

TEST_CASE("statistics")
{
    StatisticVector st = statistics(Partition({7, 6, 4}), 3);
    CHECK(st.residueCountsOdd[0] == 2);  // 7 and 4, odd-indexed, both = 1 mod 3
    CHECK(st.residueCountsEven[0] == 0);
    CHECK(st.residueCountsEven[2 - 1] == 0);

    StatisticVector empty = statistics(Partition{}, 3);
    CHECK(empty.size == 0);
    CHECK(empty.length == 0);
    CHECK(empty.oddIndexedSum == 0);
    CHECK(empty.oddOddIndexed == 0);

    StatisticVector big = statistics(Partition({10, 10, 7, 5, 2}), 2);
    CHECK(big.oddIndexedSum == 19);
    CHECK(big.evenIndexedSum == 15);
    CHECK(big.oddOddIndexed == 1);  // only 7 among (10, 7, 2)
    CHECK(big.oddEvenIndexed == 1); // only 5 among (10, 5)
    CHECK(big.size == big.oddIndexedSum + big.evenIndexedSum);
}

TEST_CASE("cell-label weights")
{
    ContextPtr c2 = omegaContext(2);
    Monomial w2 = omegaWeight(Partition({10, 10, 7, 5, 2}), 2, c2);
    CHECK(w2 == Monomial::of(c2, {{"a", 10}, {"b", 9}, {"c", 8}, {"d", 7}}));

    ContextPtr c3 = omegaContext(3);
    Monomial w3 = omegaWeight(Partition({10, 10, 7, 5, 2}), 3, c3);
    CHECK(w3 ==
          Monomial::of(c3, {{"a", 8}, {"b", 6}, {"c", 5}, {"d", 6}, {"e", 5}, {"f", 4}}));

    CHECK(omegaWeight(Partition{}, 2, c2) == Monomial::unit(c2));

    // every cell contributes one grade-1 letter
    for (int k = 1; k <= 4; ++k) {
        ContextPtr ctx = omegaContext(k);
        forEachUpTo(PartitionClass::all(), 20, [&](const Partition& pi) {
            CHECK(omegaWeight(pi, k, ctx).weightedDegree() == pi.size());
        });
    }
}

TEST_CASE("ferrers rendering")
{
    CHECK(renderFerrers(Partition({2, 1}), 2) == "a b\nc\n");
    CHECK(renderFerrers(Partition{}, 3).empty());
    CHECK(renderFerrers(Partition({10, 10, 7, 5, 2}), 3) ==
          "a b c a b c a b c a\n"
          "d e f d e f d e f d\n"
          "a b c a b c a\n"
          "d e f d e\n"
          "a b\n");
}

TEST_CASE("weighted sums")
{
    ContextPtr ctx = omegaContext(2);
    PartitionClass none = PartitionClass::all();
    none.maxPart = 0;
    CHECK(weightedSum(none, [&](const Partition& pi) { return omegaWeight(pi, 2, ctx); },
                      ctx, 8) == TruncatedSeries::one(ctx, 8));

    // weights must carry the size as the degree
    CHECK_THROWS_AS(weightedSum(PartitionClass::all(),
                                [&](const Partition&) { return Monomial::unit(ctx); }, ctx,
                                4),
                    std::domain_error);
}

TEST_CASE("gap conditions match the consecutive-pair reading")
{
    // Within the residue-constrained families, the literal gap inequality
    // agrees with "distinct and no {3l+1, 3l+2} as consecutive parts".
    for (int m = 1; m <= 2; ++m) {
        auto residueOk = [m](const Partition& pi) {
            for (int t = 1; t <= pi.length(); ++t) {
                int r = t % 2;
                int banned = ((3 - m + ((m % 2 == 0) ? r : -r)) % 3 + 3) % 3;
                if (pi.part(t - 1) % 3 == banned) return false;
            }
            return true;
        };
        auto gapOk = [m](const Partition& pi) {
            for (int t = 1; t < pi.length(); ++t) {
                int r = t % 2;
                int thr = m / 2 + ((m % 2 == 1) ? r : -r);
                if (pi.part(t - 1) - pi.part(t) <= thr) return false;
            }
            return true;
        };
        auto consecutiveOk = [](const Partition& pi) {
            if (!hasDistinctParts(pi)) return false;
            for (int t = 1; t < pi.length(); ++t) {
                int a = pi.part(t - 1), b = pi.part(t);
                if (a == b + 1 && b % 3 == 1) return false; // {3l+1, 3l+2} adjacent
            }
            return true;
        };
        forEachUpTo(PartitionClass::all(), 30, [&](const Partition& pi) {
            if (!residueOk(pi)) return;
            CHECK(gapOk(pi) == consecutiveOk(pi));
        });
    }
}

TEST_CASE("class serialization")
{
    PartitionClass ds3 = PartitionClass::distinctKStrict(3);
    ds3.maxPart = 14;
    ds3.residues.push_back({ResidueRule::OddIndexed, 3, {0, 2}});
    CHECK(ds3.describe() ==
          "{\"kind\":\"DS3\",\"k\":3,\"maxPart\":14,\"maxLength\":null,"
          "\"residues\":[{\"parity\":\"odd\",\"mod\":3,\"allowed\":[0,2]}]}");
    CHECK(PartitionClass::all().describe() ==
          "{\"kind\":\"P\",\"k\":1,\"maxPart\":null,\"maxLength\":null,\"residues\":[]}");
}

TEST_CASE("label collapse onto coarser gradings")
{
    // a,b -> x and c,d -> y turns the cell weight into the index-parity sums
    ContextPtr oc = omegaContext(2);
    ContextPtr xy = VariableContext::make({{"x", 1, -1}, {"y", 1, -1}});
    Monomial x = Monomial::of(xy, {{"x", 1}});
    Monomial y = Monomial::of(xy, {{"y", 1}});
    const int order = 12;
    TruncatedSeries viaLabels =
        substitute(weightedSum(PartitionClass::all(),
                               [&](const Partition& pi) { return omegaWeight(pi, 2, oc); },
                               oc, order),
                   {{"a", x}, {"b", x}, {"c", y}, {"d", y}}, xy);
    TruncatedSeries viaStats = weightedSum(
        PartitionClass::all(),
        [&](const Partition& pi) {
            StatisticVector st = statistics(pi, 2);
            return Monomial(xy, {static_cast<int>(st.oddIndexedSum),
                                 static_cast<int>(st.evenIndexedSum)});
        },
        xy, order);
    CHECK(viaLabels == viaStats);

    // the all-q collapse of the distinct-part sum counts distinct partitions
    ContextPtr ctxq = VariableContext::make({{"q", 1, -1}});
    Monomial q = Monomial::of(ctxq, {{"q", 1}});
    TruncatedSeries collapsed =
        substitute(weightedSum(PartitionClass::distinct(),
                               [&](const Partition& pi) { return omegaWeight(pi, 2, oc); },
                               oc, 20),
                   {{"a", q}, {"b", q}, {"c", q}, {"d", q}}, ctxq);
    // dense oracle for prod (1 + q^i)
    std::vector<long long> dist(21, 0);
    dist[0] = 1;
    for (int i = 1; i <= 20; ++i)
        for (int d = 20; d >= i; --d) dist[static_cast<size_t>(d)] += dist[static_cast<size_t>(d - i)];
    for (int d = 0; d <= 20; ++d)
        CHECK(collapsed.coefficient(Monomial::of(ctxq, {{"q", d}})) ==
              dist[static_cast<size_t>(d)]);
}
