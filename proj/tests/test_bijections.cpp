#include <doctest.h>

#include "partlab/bijections.hpp"
#include "partlab/catalog.hpp"

using namespace partlab;

TEST_CASE("row-removal decomposition on the worked example")
{
    Partition pi({8, 6, 6, 5, 3, 3, 3, 1});
    auto [p1, p2] = psiK(pi, 3);
    CHECK(p1 == Partition({8, 5, 3, 1}));
    CHECK(p2 == Partition({6, 6, 3, 3}));
    CHECK(p1.length() + p2.length() == pi.length());

    ContextPtr ctx = omegaContext(3);
    CHECK(omegaWeight(p1, 3, ctx) * omegaWeight(p2, 3, ctx) == omegaWeight(pi, 3, ctx));
    CHECK(psiKInverse(p1, p2, 3) == pi);

    auto [b1, b2] = psiKBounded(pi, 3, 8);
    CHECK(b1.largest() <= 8);
    CHECK(b2.largest() <= 8);
    CHECK_THROWS_AS(psiKBounded(pi, 3, 7), std::invalid_argument);
}

TEST_CASE("row-removal trivial cases")
{
    Partition d({9, 6, 2});
    auto [p1, p2] = psiK(d, 3);
    CHECK(p1 == d);
    CHECK(p2.empty());
    CHECK(psiKInverse(d, Partition{}, 3) == d);

    auto [e1, e2] = psiK(Partition{}, 4);
    CHECK(e1.empty());
    CHECK(e2.empty());

    CHECK_THROWS_AS(psiK(Partition({5, 4}), 3), std::invalid_argument);
    CHECK_THROWS_AS(psiKInverse(Partition({3, 3}), Partition{}, 3), std::invalid_argument);
    CHECK_THROWS_AS(psiKInverse(Partition({4}), Partition({3, 3, 3}), 3),
                    std::invalid_argument);
}

TEST_CASE("row-removal exhaustive roundtrip")
{
    // k = 1 degenerates to removing even batches of every repeated part
    for (int k = 1; k <= 3; ++k) {
        BijectionReport rep = runBijectionTest("psi_k", k, 12);
        CHECK(rep.failures.empty());
        CHECK(rep.casesChecked > 0);
    }
    BijectionReport rep1 = runBijectionTest("blocks", 1, 12);
    CHECK(rep1.failures.empty());
}

TEST_CASE("vertical blocks")
{
    auto b1 = verticalBlocks(Partition({3, 3}), 3);
    REQUIRE(b1.size() == 1);
    CHECK(b1[0].type == Block::IV);
    CHECK(b1[0].height == 2);

    auto b2 = verticalBlocks(Partition({2}), 3);
    REQUIRE(b2.size() == 1);
    CHECK(b2[0].type == Block::I);
    CHECK(b2[0].residueColumn == 2);

    BijectionReport rep = runBijectionTest("blocks", 3, 15);
    CHECK(rep.failures.empty());
}

TEST_CASE("conjugation")
{
    CHECK(conjugate(Partition({10, 10, 7, 5, 2})) ==
          Partition({5, 5, 4, 4, 4, 3, 3, 2, 2, 2}));
    CHECK(conjugate(Partition{}).empty());
    BijectionReport rep = runBijectionTest("conjugate", 2, 14);
    CHECK(rep.failures.empty());
}

TEST_CASE("column strip on the worked example")
{
    Partition pi({20, 17, 16, 11, 10, 9, 6, 5, 4, 2});
    auto [reduced, stripped] = columnStrip(pi);
    CHECK(reduced == Partition({12, 11, 10, 9, 8, 7, 6, 5, 4, 2}));
    CHECK(stripped == Partition({8, 6, 6, 2, 2, 2}));

    Partition stair({5, 4, 3, 2, 1});
    auto [r2, s2] = columnStrip(stair);
    CHECK(r2 == stair);
    CHECK(s2.empty());

    CHECK_THROWS_AS(columnStrip(Partition({4, 4})), std::invalid_argument);
}

TEST_CASE("jump decomposition on the worked example")
{
    Partition p1({12, 11, 10, 9, 8, 7, 6, 5, 4, 2});
    auto [base, tilde] = jumpDecompose(p1, 6, 4);
    CHECK(base == Partition({12, 10, 8, 7, 6, 5, 4, 3, 2, 1}));
    CHECK(tilde == Partition({4, 4, 4, 4}));
    CHECK(jumpCompose(base, tilde, 6, 4) == p1);

    // a base shape decomposes into itself with no jumps
    auto [b0, t0] = jumpDecompose(Partition({6, 5, 4, 3, 2}), 3, 2);
    CHECK(b0 == Partition({6, 5, 4, 3, 2}));
    CHECK(t0.empty());
}

TEST_CASE("base shapes")
{
    CHECK(basePartition(6, 4, BaseParity::Even) ==
          Partition({12, 10, 8, 7, 6, 5, 4, 3, 2, 1}));
    CHECK(basePartition(0, 0, BaseParity::Even).empty());
    CHECK(basePartition(3, 2, BaseParity::Odd) == Partition({6, 5, 4, 3, 2}));
    CHECK_THROWS_AS(basePartition(2, 3, BaseParity::Even), std::invalid_argument);
    for (int m = 0; m <= 8; ++m)
        for (int j = 0; j <= m; ++j) {
            CHECK(basePartition(m, j, BaseParity::Even).size() == j * j + m * (m + 1));
            CHECK(basePartition(m, j, BaseParity::Odd).size() ==
                  j * j + 2 * j + m * (m + 1));
        }
}

TEST_CASE("strip-jump pipeline")
{
    BijectionReport rep = runBijectionTest("strip_jump", 2, 16);
    CHECK(rep.failures.empty());
    CHECK(rep.casesChecked > 100);
}

TEST_CASE("invalid inputs are rejected")
{
    CHECK_THROWS_AS(verticalBlocks(Partition({5, 4}), 3), std::invalid_argument);
    CHECK_THROWS_AS(jumpDecompose(Partition({9, 8, 7}), 2, 1), std::invalid_argument);
    // wrong (m, j) split for a valid shape
    CHECK_THROWS_AS(jumpDecompose(Partition({4, 3, 2, 1}), 3, 1), std::invalid_argument);
    // a gap larger than two is not reduced
    CHECK_THROWS_AS(jumpDecompose(Partition({8, 3, 2, 1}), 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(jumpCompose(basePartition(3, 1, BaseParity::Even), Partition({3}), 3, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(runBijectionTest("no-such-map", 2, 8), std::invalid_argument);
    CHECK_THROWS_AS(
        countRefined(RefinedFamily::DIBounded, 10, 0, 0, RefinedParams{1, 3, -1}),
        std::invalid_argument);
}
