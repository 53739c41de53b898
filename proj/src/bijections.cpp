#include "partlab/bijections.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace partlab {

std::pair<Partition, Partition> psiK(const Partition& pi, int k)
{
    if (!isKStrict(pi, k)) throw std::invalid_argument("psiK: input is not k-strict");
    std::vector<int> kept, removed;
    const auto& p = pi.parts();
    for (size_t i = 0; i < p.size();) {
        size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        size_t mult = j - i;
        size_t drop = mult - mult % 2; // the topmost copies leave
        for (size_t r = 0; r < drop; ++r) removed.push_back(p[i]);
        if (mult % 2 == 1) kept.push_back(p[i]);
        i = j;
    }
    return {Partition(std::move(kept)), Partition(std::move(removed))};
}

Partition psiKInverse(const Partition& pi1, const Partition& pi2, int k)
{
    if (!hasDistinctParts(pi1) || !isKStrict(pi1, k))
        throw std::invalid_argument("psiKInverse: first input must be distinct and k-strict");
    PartitionClass ek = PartitionClass::evenRepeatMultiples(k);
    if (!ek.contains(pi2))
        throw std::invalid_argument(
            "psiKInverse: second input must have k-multiple parts with even multiplicities");
    std::vector<int> merged;
    merged.reserve(pi1.parts().size() + pi2.parts().size());
    size_t i = 0, j = 0;
    const auto& a = pi1.parts();
    const auto& b = pi2.parts();
    while (i < a.size() || j < b.size()) {
        // inserted copies go above equal parts already present
        if (j < b.size() && (i == a.size() || b[j] >= a[i]))
            merged.push_back(b[j++]);
        else
            merged.push_back(a[i++]);
    }
    return Partition(std::move(merged));
}

std::pair<Partition, Partition> psiKBounded(const Partition& pi, int k, int maxPart)
{
    if (pi.largest() > maxPart)
        throw std::invalid_argument("psiKBounded: largest part exceeds the bound");
    return psiK(pi, k);
}

std::vector<Block> verticalBlocks(const Partition& pi, int k)
{
    if (k < 1) throw std::invalid_argument("verticalBlocks: k must be >= 1");
    if (!isKStrict(pi, k)) throw std::invalid_argument("verticalBlocks: input is not k-strict");
    std::vector<Block> blocks;
    const auto& p = pi.parts();
    int groups = (pi.largest() + k - 1) / k;
    for (int g = 0; g < groups; ++g) {
        int lo = g * k; // columns lo+1 .. lo+k
        int rowsTouching = 0, partial = 0;
        for (int part : p) {
            if (part >= lo + 1) ++rowsTouching;
            int within = part - lo;
            if (within >= 1 && within <= k - 1) {
                if (partial != 0)
                    throw std::invalid_argument("verticalBlocks: not a k-strict diagram");
                partial = within;
            }
        }
        Block b;
        b.height = rowsTouching;
        b.residueColumn = partial;
        if (partial != 0)
            b.type = (rowsTouching % 2 == 1) ? Block::I : Block::II;
        else
            b.type = (rowsTouching % 2 == 1) ? Block::III : Block::IV;
        blocks.push_back(b);
    }
    return blocks;
}

Monomial blockWeight(const Block& b, int k, const ContextPtr& ctx)
{
    std::vector<int> exps(static_cast<size_t>(2 * k), 0);
    auto addRow = [&](int rowIndex1, int width) {
        int base = (rowIndex1 % 2 == 1) ? 0 : k;
        for (int c = 0; c < width; ++c) ++exps[static_cast<size_t>(base + c % k)];
    };
    int fullRows = (b.residueColumn != 0) ? b.height - 1 : b.height;
    for (int r = 1; r <= fullRows; ++r) addRow(r, k);
    if (b.residueColumn != 0) addRow(b.height, b.residueColumn);
    return Monomial(ctx, std::move(exps));
}

Partition conjugate(const Partition& pi)
{
    std::vector<int> cols;
    cols.reserve(static_cast<size_t>(pi.largest()));
    for (int c = 1; c <= pi.largest(); ++c) {
        int h = 0;
        for (int part : pi.parts())
            if (part >= c) ++h;
        cols.push_back(h);
    }
    return Partition(std::move(cols));
}

std::pair<Partition, Partition> columnStrip(const Partition& pi)
{
    if (!hasDistinctParts(pi)) throw std::invalid_argument("columnStrip: parts must be distinct");
    const auto& p = pi.parts();
    const int len = pi.length();
    // columns removed above row i (draining each oversized gap independently)
    std::vector<int> removedAt(static_cast<size_t>(len) + 1, 0);
    for (int i = 0; i < len; ++i) {
        int gap = (i + 1 < len) ? p[static_cast<size_t>(i)] - p[static_cast<size_t>(i + 1)]
                                : p[static_cast<size_t>(i)];
        if (gap > 2) removedAt[static_cast<size_t>(i)] = 2 * ((gap - 1) / 2);
    }
    std::vector<int> reduced(p.begin(), p.end());
    std::vector<int> stripped(static_cast<size_t>(len), 0);
    int pending = 0;
    for (int i = len - 1; i >= 0; --i) {
        pending += removedAt[static_cast<size_t>(i)];
        stripped[static_cast<size_t>(i)] = pending;
        reduced[static_cast<size_t>(i)] -= pending;
    }
    while (!stripped.empty() && stripped.back() == 0) stripped.pop_back();
    while (!reduced.empty() && reduced.back() == 0) reduced.pop_back();
    return {Partition(std::move(reduced)), Partition(std::move(stripped))};
}

Partition basePartition(int m, int j, BaseParity parity)
{
    if (m < j || j < 0) throw std::invalid_argument("basePartition: need m >= j >= 0");
    std::vector<int> parts;
    if (parity == BaseParity::Even) {
        for (int v = 2 * m; v >= std::max(2 * j, 2); v -= 2) parts.push_back(v);
        for (int v = 2 * j - 1; v >= 1; --v) parts.push_back(v);
    } else {
        for (int v = 2 * m; v >= 2 * j + 2; v -= 2) parts.push_back(v);
        for (int v = 2 * j + 1; v >= 2; --v) parts.push_back(v);
    }
    return Partition(std::move(parts));
}

namespace {

void splitByParity(const Partition& pi, std::vector<int>& odds, std::vector<int>& evens)
{
    for (int part : pi.parts())
        (part % 2 == 1 ? odds : evens).push_back(part);
}

void checkGapReduced(const Partition& pi, int m, int j)
{
    const auto& p = pi.parts();
    if (static_cast<int>(p.size()) != m + j)
        throw std::invalid_argument("jumpDecompose: length must be m + j");
    for (size_t i = 0; i < p.size(); ++i) {
        int gap = (i + 1 < p.size()) ? p[i] - p[i + 1] : p[i];
        if (gap < 1 || gap > 2)
            throw std::invalid_argument("jumpDecompose: input is not gap-reduced");
    }
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] % 2 == 1 && i % 2 == 0)
            throw std::invalid_argument("jumpDecompose: odd parts must be even-indexed");
}

} // namespace

std::pair<Partition, Partition> jumpDecompose(const Partition& pi1, int m, int j)
{
    checkGapReduced(pi1, m, j);
    BaseParity parity = ((m + j) % 2 == 0) ? BaseParity::Even : BaseParity::Odd;
    Partition base = basePartition(m, j, parity);

    std::vector<int> odds, evens, baseOdds, baseEvens;
    splitByParity(pi1, odds, evens);
    splitByParity(base, baseOdds, baseEvens);
    if (static_cast<int>(odds.size()) != j || static_cast<int>(evens.size()) != m)
        throw std::invalid_argument("jumpDecompose: odd/even part counts differ from (j, m)");
    if (evens != baseEvens)
        throw std::invalid_argument("jumpDecompose: even parts do not match the base shape");

    std::vector<int> jumps;
    for (size_t r = 0; r < odds.size(); ++r) {
        int d = odds[r] - baseOdds[r];
        if (d < 0 || d % 4 != 0)
            throw std::invalid_argument("jumpDecompose: odd parts are not jump-reachable");
        if (d > 0) jumps.push_back(d);
    }
    for (size_t r = 1; r < jumps.size(); ++r)
        if (jumps[r - 1] < jumps[r])
            throw std::invalid_argument("jumpDecompose: jump record is not a partition");
    return {base, Partition(std::move(jumps))};
}

Partition jumpCompose(const Partition& base, const Partition& tilde, int m, int j)
{
    std::vector<int> odds, evens;
    splitByParity(base, odds, evens);
    if (static_cast<int>(odds.size()) != j || static_cast<int>(evens.size()) != m)
        throw std::invalid_argument("jumpCompose: base does not match (m, j)");
    if (tilde.length() > j)
        throw std::invalid_argument("jumpCompose: too many jump parts");
    for (int t : tilde.parts())
        if (t % 4 != 0) throw std::invalid_argument("jumpCompose: jumps must be multiples of 4");
    for (int r = 0; r < tilde.length(); ++r) odds[static_cast<size_t>(r)] += tilde.part(r);

    std::vector<int> merged;
    merged.reserve(odds.size() + evens.size());
    std::merge(evens.begin(), evens.end(), odds.begin(), odds.end(),
               std::back_inserter(merged), std::greater<int>());
    Partition out(std::move(merged));
    checkGapReduced(out, m, j);
    return out;
}

} // namespace partlab
