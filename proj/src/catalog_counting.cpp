#include <map>

#include "catalog_impl.hpp"

namespace partlab {

namespace {

// Gap-and-residue conditions, checked literally on consecutive parts
// (1-based index t has r = t mod 2).
bool amConditions(const Partition& pi, int m)
{
    const auto& p = pi.parts();
    const int n = pi.length();
    for (int t = 1; t <= n; ++t) {
        int r = t % 2;
        int banned = ((3 - m + ((m % 2 == 0) ? r : -r)) % 3 + 3) % 3;
        if (p[static_cast<size_t>(t - 1)] % 3 == banned) return false;
    }
    for (int t = 1; t < n; ++t) {
        int r = t % 2;
        int thr = m / 2 + ((m % 2 == 1) ? r : -r);
        if (p[static_cast<size_t>(t - 1)] - p[static_cast<size_t>(t)] <= thr) return false;
    }
    return true;
}

PartitionClass amClass(int m)
{
    PartitionClass cls = PartitionClass::distinct(); // the gap condition forces distinctness
    cls.predicate = [m](const Partition& pi) { return amConditions(pi, m); };
    return cls;
}

PartitionClass cmClass(int m)
{
    PartitionClass cls = PartitionClass::distinct();
    cls.predicate = [m](const Partition& pi) {
        for (int p : pi.parts()) {
            int r = p % 6;
            if (r == m || r == 6 - m) return false;
        }
        return true;
    };
    return cls;
}

PartitionClass akmClass(int k, int m)
{
    if (k < 3) throw std::invalid_argument("akmClass: k must be >= 3");
    PartitionClass cls = PartitionClass::distinctKStrict(k);
    cls.residues.push_back({ResidueRule::OddIndexed, k, {0, (3 - m) % k}});
    cls.residues.push_back({ResidueRule::EvenIndexed, k, {0, m % k}});
    return cls;
}

PartitionClass ckmClass(int k, int m)
{
    if (k < 3) throw std::invalid_argument("ckmClass: k must be >= 3");
    PartitionClass cls = PartitionClass::distinct();
    std::vector<int> allowed{(3 - m) % (2 * k), k, (k + m) % (2 * k), 0};
    cls.residues.push_back({ResidueRule::OddIndexed, 2 * k, allowed});
    cls.residues.push_back({ResidueRule::EvenIndexed, 2 * k, allowed});
    return cls;
}

PartitionClass dFamilyClass(int m, int maxPart)
{
    PartitionClass cls = PartitionClass::distinct();
    int banned = ((3 - m) % 3 + 3) % 3; // residue -m mod 3
    std::vector<int> allowed;
    for (int r = 0; r < 3; ++r)
        if (r != banned) allowed.push_back(r);
    cls.residues.push_back({ResidueRule::OddIndexed, 3, allowed});
    cls.residues.push_back({ResidueRule::EvenIndexed, 3, allowed});
    cls.maxPart = maxPart;
    return cls;
}

int countResidue(const Partition& pi, int mod, int r)
{
    int c = 0;
    for (int p : pi.parts())
        if (p % mod == r) ++c;
    return c;
}

int countResidueIndexed(const Partition& pi, int mod, int r, bool oddIndexed)
{
    int c = 0;
    for (int idx = 0; idx < pi.length(); ++idx)
        if ((idx % 2 == 0) == oddIndexed && pi.part(idx) % mod == r) ++c;
    return c;
}

bool dIIBoundedAccepts(const Partition& pi, int m, int N, int i, int j)
{
    if (countResidue(pi, 6, m % 6) != i) return false;
    if (countResidue(pi, 6, (m + 3) % 6) != j) return false;
    for (int p : pi.parts()) {
        int r6 = p % 6;
        if (r6 == m % 6 && p > 6 * N + m - 6) return false;
        if (r6 == (m + 3) % 6 && p > 6 * (N - i) + m - 3) return false;
        if (p % 3 == 0 && p > 3 * (N - i - j)) return false;
    }
    return true;
}

std::function<bool(const Partition&)> refinedFilter(RefinedFamily family, int i, int j,
                                                    const RefinedParams& p)
{
    switch (family) {
    case RefinedFamily::AkM:
        return [=](const Partition& pi) {
            return countResidue(pi, p.k, (3 - p.m) % p.k) == i &&
                   countResidue(pi, p.k, p.m % p.k) == j;
        };
    case RefinedFamily::CkM:
        return [=](const Partition& pi) {
            return countResidue(pi, 2 * p.k, (3 - p.m) % (2 * p.k)) == i &&
                   countResidue(pi, 2 * p.k, (p.k + p.m) % (2 * p.k)) == j;
        };
    case RefinedFamily::DI:
    case RefinedFamily::DIBounded:
        return [=](const Partition& pi) {
            return countResidueIndexed(pi, 3, p.m % 3, true) == i &&
                   countResidueIndexed(pi, 3, p.m % 3, false) == j;
        };
    case RefinedFamily::DII:
        return [=](const Partition& pi) {
            return countResidue(pi, 6, p.m % 6) == i &&
                   countResidue(pi, 6, (p.m + 3) % 6) == j;
        };
    case RefinedFamily::DIIBounded:
        return [=](const Partition& pi) { return dIIBoundedAccepts(pi, p.m, p.N, i, j); };
    case RefinedFamily::AmRefined:
        return [=](const Partition& pi) {
            return countResidue(pi, 3, 2) == i && countResidue(pi, 3, 1) == j;
        };
    case RefinedFamily::CmRefined:
        return [=](const Partition& pi) {
            return countResidue(pi, 6, (3 * p.m - 1) % 6) == i &&
                   countResidue(pi, 6, (3 * p.m + 1) % 6) == j;
        };
    }
    throw std::invalid_argument("refinedFilter: unknown family");
}

PartitionClass refinedBase(RefinedFamily family, const RefinedParams& p)
{
    if (p.m != 1 && p.m != 2) throw std::invalid_argument("refinedBase: m must be 1 or 2");
    if ((family == RefinedFamily::DIBounded || family == RefinedFamily::DIIBounded) &&
        p.N < 0)
        throw std::invalid_argument("refinedBase: bounded family needs N >= 0");
    switch (family) {
    case RefinedFamily::AkM: return akmClass(p.k, p.m);
    case RefinedFamily::CkM: return ckmClass(p.k, p.m);
    case RefinedFamily::DI: return dFamilyClass(p.m, -1);
    case RefinedFamily::DII: return dFamilyClass(p.m, -1);
    case RefinedFamily::DIBounded: return dFamilyClass(p.m, 3 * p.N);
    case RefinedFamily::DIIBounded: return dFamilyClass(p.m, -1);
    case RefinedFamily::AmRefined: return amClass(p.m);
    case RefinedFamily::CmRefined: return cmClass(p.m);
    }
    throw std::invalid_argument("refinedBase: unknown family");
}

} // namespace

long long countAm(int n, int m) { return static_cast<long long>(membersAm(n, m).size()); }
long long countCm(int n, int m) { return static_cast<long long>(membersCm(n, m).size()); }

std::vector<Partition> membersAm(int n, int m) { return enumerateClass(amClass(m), n); }
std::vector<Partition> membersCm(int n, int m) { return enumerateClass(cmClass(m), n); }

long long countAkm(int n, int k, int m)
{
    return static_cast<long long>(membersAkm(n, k, m).size());
}
long long countCkm(int n, int k, int m)
{
    return static_cast<long long>(membersCkm(n, k, m).size());
}
std::vector<Partition> membersAkm(int n, int k, int m)
{
    return enumerateClass(akmClass(k, m), n);
}
std::vector<Partition> membersCkm(int n, int k, int m)
{
    return enumerateClass(ckmClass(k, m), n);
}

std::vector<Partition> membersRefined(RefinedFamily family, int n, int i, int j,
                                      const RefinedParams& p)
{
    auto filter = refinedFilter(family, i, j, p);
    std::vector<Partition> out;
    forEachInClass(refinedBase(family, p), n, [&](const Partition& pi) {
        if (filter(pi)) out.push_back(pi);
    });
    return out;
}

long long countRefined(RefinedFamily family, int n, int i, int j, const RefinedParams& p)
{
    auto filter = refinedFilter(family, i, j, p);
    long long c = 0;
    forEachInClass(refinedBase(family, p), n, [&](const Partition& pi) {
        if (filter(pi)) ++c;
    });
    return c;
}

namespace detail {
namespace {

using Bucket = std::map<std::pair<int, int>, long long>;

void comparePairTables(std::vector<CountPoint>& pts, const std::string& prefix,
                       const Bucket& lhs, const Bucket& rhs)
{
    Bucket keys = lhs;
    for (const auto& [k, v] : rhs) keys.try_emplace(k, 0);
    for (const auto& [k, unused] : keys) {
        auto lv = lhs.find(k), rv = rhs.find(k);
        pts.push_back({label(prefix, " i=", k.first, " j=", k.second),
                       lv == lhs.end() ? 0 : lv->second, rv == rhs.end() ? 0 : rv->second});
    }
}

void registerCapparelliCounts(std::vector<CatalogCase>& out)
{
    out.push_back(makeCountingCase(
        "capparelli-AC", "gap-condition counts equal the mod-6 residue counts", 40,
        [](int nMax) {
            std::vector<CountPoint> pts;
            for (int m = 1; m <= 2; ++m)
                for (int n = 0; n <= nMax; ++n)
                    pts.push_back({label("m=", m, " n=", n), countAm(n, m), countCm(n, m)});
            return pts;
        }));

    out.push_back(makeCountingCase(
        "kstrict-AC", "k-strict gap counts equal the mod-2k residue counts, refined", 30,
        [](int nMax) {
            std::vector<CountPoint> pts;
            for (int k = 3; k <= 6; ++k)
                for (int m = 1; m <= 2; ++m) {
                    for (int n = 0; n <= nMax; ++n) {
                        Bucket lhs, rhs;
                        long long lTot = 0, rTot = 0;
                        forEachInClass(akmClass(k, m), n, [&](const Partition& pi) {
                            ++lhs[{countResidue(pi, k, (3 - m) % k),
                                   countResidue(pi, k, m % k)}];
                            ++lTot;
                        });
                        forEachInClass(ckmClass(k, m), n, [&](const Partition& pi) {
                            ++rhs[{countResidue(pi, 2 * k, (3 - m) % (2 * k)),
                                   countResidue(pi, 2 * k, (k + m) % (2 * k))}];
                            ++rTot;
                        });
                        pts.push_back({label("k=", k, " m=", m, " n=", n, " total"), lTot, rTot});
                        comparePairTables(pts, label("k=", k, " m=", m, " n=", n), lhs, rhs);
                    }
                }
            return pts;
        }));

    out.push_back(makeCountingCase(
        "am-refined", "refined gap-condition counts split by the two residue classes", 30,
        [](int nMax) {
            std::vector<CountPoint> pts;
            for (int m = 1; m <= 2; ++m)
                for (int n = 0; n <= nMax; ++n) {
                    Bucket lhs, rhs;
                    forEachInClass(amClass(m), n, [&](const Partition& pi) {
                        ++lhs[{countResidue(pi, 3, 2), countResidue(pi, 3, 1)}];
                    });
                    forEachInClass(cmClass(m), n, [&](const Partition& pi) {
                        ++rhs[{countResidue(pi, 6, (3 * m - 1) % 6),
                               countResidue(pi, 6, (3 * m + 1) % 6)}];
                    });
                    comparePairTables(pts, label("m=", m, " n=", n), lhs, rhs);
                }
            return pts;
        }));
}

void registerLittleGollnitzCounts(std::vector<CatalogCase>& out)
{
    out.push_back(makeCountingCase(
        "savage-sills", "parity-indexed distinct partitions vs mod-8 residue classes", 40,
        [](int nMax) {
            std::vector<CountPoint> pts;
            PartitionClass evenIdxEven = PartitionClass::distinct();
            evenIdxEven.residues.push_back({ResidueRule::EvenIndexed, 2, {0}});
            PartitionClass oddIdxEven = PartitionClass::distinct();
            oddIdxEven.residues.push_back({ResidueRule::OddIndexed, 2, {0}});
            auto residueClass = [](std::vector<int> allowed) {
                PartitionClass cls = PartitionClass::all();
                cls.predicate = [allowed](const Partition& pi) {
                    for (int p : pi.parts()) {
                        bool ok = false;
                        for (int a : allowed)
                            if (p % 8 == a) ok = true;
                        if (!ok) return false;
                    }
                    return true;
                };
                return cls;
            };
            PartitionClass mod156 = residueClass({1, 5, 6});
            PartitionClass mod237 = residueClass({2, 3, 7});
            for (int n = 0; n <= nMax; ++n) {
                long long a = 0, b = 0, c = 0, d = 0;
                forEachInClass(evenIdxEven, n, [&](const Partition&) { ++a; });
                forEachInClass(mod156, n, [&](const Partition&) { ++b; });
                forEachInClass(oddIdxEven, n, [&](const Partition&) { ++c; });
                forEachInClass(mod237, n, [&](const Partition&) { ++d; });
                pts.push_back({label("n=", n, " even-indexed-even"), a, b});
                pts.push_back({label("n=", n, " odd-indexed-even"), c, d});
            }
            return pts;
        }));

    out.push_back(makeCountingCase(
        "bu-refined", "odd parts by index parity vs residues mod 4 over distinct partitions",
        30, [](int nMax) {
            std::vector<CountPoint> pts;
            for (int n = 0; n <= nMax; ++n) {
                Bucket lhs, rhs;
                forEachInClass(PartitionClass::distinct(), n, [&](const Partition& pi) {
                    StatisticVector st = statistics(pi, 2);
                    ++lhs[{st.oddOddIndexed, st.oddEvenIndexed}];
                    ++rhs[{countResidue(pi, 4, 1), countResidue(pi, 4, 3)}];
                });
                comparePairTables(pts, label("n=", n), lhs, rhs);
            }
            return pts;
        }));
}

void registerDRefineCounts(std::vector<CatalogCase>& out)
{
    out.push_back(makeCountingCase(
        "d-refine", "index-parity residue refinement vs mod-6 residue refinement", 30,
        [](int nMax) {
            std::vector<CountPoint> pts;
            for (int m = 1; m <= 2; ++m)
                for (int n = 0; n <= nMax; ++n) {
                    Bucket lhs, rhs;
                    forEachInClass(dFamilyClass(m, -1), n, [&](const Partition& pi) {
                        ++lhs[{countResidueIndexed(pi, 3, m % 3, true),
                               countResidueIndexed(pi, 3, m % 3, false)}];
                        ++rhs[{countResidue(pi, 6, m % 6), countResidue(pi, 6, (m + 3) % 6)}];
                    });
                    comparePairTables(pts, label("m=", m, " n=", n), lhs, rhs);
                }
            return pts;
        }));

    out.push_back(makeCountingCase(
        "d-refine-bounded", "bounded refinement with staged residue-class bounds", 30,
        [](int nMax) {
            std::vector<CountPoint> pts;
            for (int N = 0; N <= 4; ++N)
                for (int m = 1; m <= 2; ++m)
                    for (int n = 0; n <= nMax; ++n) {
                        Bucket lhs, rhs;
                        forEachInClass(dFamilyClass(m, 3 * N), n, [&](const Partition& pi) {
                            ++lhs[{countResidueIndexed(pi, 3, m % 3, true),
                                   countResidueIndexed(pi, 3, m % 3, false)}];
                        });
                        forEachInClass(dFamilyClass(m, -1), n, [&](const Partition& pi) {
                            int i = countResidue(pi, 6, m % 6);
                            int j = countResidue(pi, 6, (m + 3) % 6);
                            if (dIIBoundedAccepts(pi, m, N, i, j)) ++rhs[{i, j}];
                        });
                        comparePairTables(pts, label("N=", N, " m=", m, " n=", n), lhs, rhs);
                    }
            return pts;
        }));
}

} // namespace

void registerCountingCases(std::vector<CatalogCase>& out)
{
    registerCapparelliCounts(out);
    registerLittleGollnitzCounts(out);
    registerDRefineCounts(out);
}

} // namespace detail
} // namespace partlab
