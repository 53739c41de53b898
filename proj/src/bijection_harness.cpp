#include <algorithm>
#include <sstream>

#include "catalog_impl.hpp"

namespace partlab {

namespace {

std::string pairText(const Partition& a, const Partition& b)
{
    return "(" + a.text() + ")|(" + b.text() + ")";
}

void checkPsiK(BijectionReport& rep, int k, int maxSize)
{
    ContextPtr ctx = omegaContext(k);
    PartitionClass sk = PartitionClass::kStrict(k);
    forEachUpTo(sk, maxSize, [&](const Partition& pi) {
        ++rep.casesChecked;
        auto [p1, p2] = psiK(pi, k);
        if (!PartitionClass::distinctKStrict(k).contains(p1) ||
            !PartitionClass::evenRepeatMultiples(k).contains(p2)) {
            rep.failures.push_back({pi.text(), "outputs in their classes", pairText(p1, p2)});
            return;
        }
        if (p1.length() + p2.length() != pi.length()) {
            rep.failures.push_back({pi.text(), "length additivity", pairText(p1, p2)});
            return;
        }
        if (!(omegaWeight(p1, k, ctx) * omegaWeight(p2, k, ctx) ==
              omegaWeight(pi, k, ctx))) {
            rep.failures.push_back({pi.text(), "weight product", pairText(p1, p2)});
            return;
        }
        if (std::max(p1.largest(), p2.largest()) > pi.largest()) {
            rep.failures.push_back({pi.text(), "bound preservation", pairText(p1, p2)});
            return;
        }
        Partition back = psiKInverse(p1, p2, k);
        if (!(back == pi))
            rep.failures.push_back({pi.text(), pi.text(), back.text()});
    });
    // reverse direction over all pairs
    PartitionClass ds = PartitionClass::distinctKStrict(k);
    PartitionClass ek = PartitionClass::evenRepeatMultiples(k);
    for (int n1 = 0; n1 <= maxSize; ++n1)
        forEachInClass(ds, n1, [&](const Partition& p1) {
            for (int n2 = 0; n1 + n2 <= maxSize; ++n2)
                forEachInClass(ek, n2, [&](const Partition& p2) {
                    ++rep.casesChecked;
                    auto [q1, q2] = psiK(psiKInverse(p1, p2, k), k);
                    if (!(q1 == p1 && q2 == p2))
                        rep.failures.push_back(
                            {pairText(p1, p2), pairText(p1, p2), pairText(q1, q2)});
                });
        });
}

void checkConjugate(BijectionReport& rep, int maxSize)
{
    ContextPtr ctx = omegaContext(2);
    forEachUpTo(PartitionClass::all(), maxSize, [&](const Partition& pi) {
        ++rep.casesChecked;
        Partition tau = conjugate(pi);
        if (!(conjugate(tau) == pi)) {
            rep.failures.push_back({pi.text(), pi.text(), conjugate(tau).text()});
            return;
        }
        auto w1 = omegaWeight(pi, 2, ctx).exponents();
        auto w2 = omegaWeight(tau, 2, ctx).exponents();
        // transposing exchanges the roles of the second and third labels
        if (!(w1[0] == w2[0] && w1[1] == w2[2] && w1[2] == w2[1] && w1[3] == w2[3]))
            rep.failures.push_back({pi.text(), "weight exchange law", tau.text()});
    });
}

void checkBlocks(BijectionReport& rep, int k, int maxSize)
{
    ContextPtr ctx = omegaContext(k);
    forEachUpTo(PartitionClass::kStrict(k), maxSize, [&](const Partition& pi) {
        ++rep.casesChecked;
        auto blocks = verticalBlocks(pi, k);
        Monomial prod = Monomial::unit(ctx);
        std::vector<int> h1, h2;
        for (const auto& b : blocks) {
            prod = prod * blockWeight(b, k, ctx);
            if (b.type == Block::I) h1.push_back(b.height);
            if (b.type == Block::II) h2.push_back(b.height);
        }
        if (!(prod == omegaWeight(pi, k, ctx))) {
            rep.failures.push_back({pi.text(), "block weight product", prod.text()});
            return;
        }
        auto distinctHeights = [](std::vector<int> v) {
            std::sort(v.begin(), v.end());
            return std::adjacent_find(v.begin(), v.end()) == v.end();
        };
        if (!distinctHeights(h1) || !distinctHeights(h2))
            rep.failures.push_back({pi.text(), "distinct partial-block heights", "repeat"});
    });
}

void checkStripJump(BijectionReport& rep, int maxSize)
{
    forEachUpTo(PartitionClass::distinct(), maxSize, [&](const Partition& pi) {
        ++rep.casesChecked;
        auto [reduced, stripped] = columnStrip(pi);
        for (int i = 0; i < pi.length(); ++i) {
            int s = i < stripped.length() ? stripped.part(i) : 0;
            int r = i < reduced.length() ? reduced.part(i) : 0;
            if (r + s != pi.part(i)) {
                rep.failures.push_back({pi.text(), "column additivity",
                                        pairText(reduced, stripped)});
                return;
            }
            if (s % 2 != 0 || (r % 2) != (pi.part(i) % 2)) {
                rep.failures.push_back({pi.text(), "parity preservation",
                                        pairText(reduced, stripped)});
                return;
            }
        }
        // the jump split applies when every odd part is even-indexed
        bool oddsEvenIndexed = true;
        int evens = 0, odds = 0;
        for (int i = 0; i < pi.length(); ++i) {
            if (pi.part(i) % 2 == 1) {
                ++odds;
                if (i % 2 == 0) oddsEvenIndexed = false;
            } else {
                ++evens;
            }
        }
        if (!oddsEvenIndexed) return;
        auto [base, tilde] = jumpDecompose(reduced, evens, odds);
        if (base.size() + tilde.size() != reduced.size()) {
            rep.failures.push_back({pi.text(), "jump size split", pairText(base, tilde)});
            return;
        }
        Partition re = jumpCompose(base, tilde, evens, odds);
        if (!(re == reduced))
            rep.failures.push_back({reduced.text(), reduced.text(), re.text()});
    });
}

} // namespace

BijectionReport runBijectionTest(const std::string& map, int k, int maxSize)
{
    BijectionReport rep;
    rep.map = map;
    rep.k = k;
    rep.range = "all partitions with size <= " + std::to_string(maxSize);
    if (map == "psi_k")
        checkPsiK(rep, k, maxSize);
    else if (map == "conjugate")
        checkConjugate(rep, maxSize);
    else if (map == "blocks")
        checkBlocks(rep, k, maxSize);
    else if (map == "strip_jump")
        checkStripJump(rep, maxSize);
    else
        throw std::invalid_argument(
            "unknown map (use psi_k, conjugate, blocks or strip_jump)");
    return rep;
}

} // namespace partlab
