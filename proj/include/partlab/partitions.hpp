#pragma once

#include <functional>
#include <string>
#include <vector>

#include "partlab/series.hpp"

namespace partlab {

/* A partition: weakly decreasing positive parts. The empty partition is
 * allowed everywhere. */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; } // 0-based
    long long size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string text() const;                      // "8,6,6,5,3,3,3,1"; "" for empty
    static Partition parse(const std::string& s);  // inverse of text()

private:
    std::vector<int> parts_;
};

// True iff no two parts (with multiplicity) lie in one block {mk+1..mk+k-1}.
bool isKStrict(const Partition& pi, int k);
bool hasDistinctParts(const Partition& pi);

enum class ClassKind { All, Distinct, KStrict, DistinctKStrict, EvenRepeatMultiples, Custom };

struct ResidueRule {
    enum Parity { OddIndexed, EvenIndexed };
    Parity parity;
    int modulus;
    std::vector<int> allowed; // residues in 0..modulus-1
};

/* A predicate bundle selecting a partition class: one of the named kinds,
 * part/length bounds, per-index-parity residue constraints, and an optional
 * extra predicate. */
struct PartitionClass {
    ClassKind kind = ClassKind::All;
    int k = 1;          // modulus for KStrict / DistinctKStrict / EvenRepeatMultiples
    int maxPart = -1;   // -1: unbounded
    int maxLength = -1; // -1: unbounded
    std::vector<ResidueRule> residues;
    std::function<bool(const Partition&)> predicate; // extra filter, any kind

    bool contains(const Partition& pi) const;
    std::string describe() const; // small JSON object

    static PartitionClass all() { return {}; }
    static PartitionClass distinct() { return ofKind(ClassKind::Distinct, 1); }
    static PartitionClass kStrict(int k) { return ofKind(ClassKind::KStrict, k); }
    static PartitionClass distinctKStrict(int k)
    {
        return ofKind(ClassKind::DistinctKStrict, k);
    }
    static PartitionClass evenRepeatMultiples(int k)
    {
        return ofKind(ClassKind::EvenRepeatMultiples, k);
    }
    static PartitionClass ofKind(ClassKind kind, int k)
    {
        PartitionClass c;
        c.kind = kind;
        c.k = k;
        return c;
    }
};

struct StatisticVector {
    long long size = 0;
    int length = 0;
    long long oddIndexedSum = 0;        // |pi_o|
    long long evenIndexedSum = 0;       // |pi_e|
    int oddOddIndexed = 0;              // odd values among odd-indexed parts
    int oddEvenIndexed = 0;             // odd values among even-indexed parts
    std::vector<int> residueCountsOdd;  // o_l for l = 1..k-1
    std::vector<int> residueCountsEven; // e_l for l = 1..k-1
};

// All statistics of pi with respect to the modulus k (1-based part indices;
// the first part is odd-indexed).
StatisticVector statistics(const Partition& pi, int k);

// Context holding the 2k row-label variables for the cyclic cell weight;
// named a,b,c,d (k=2) and a..f (k=3), a1..ak,b1..bk otherwise.
ContextPtr omegaContext(int k);
// Cell-label weight: odd-indexed rows are filled cyclically with the first k
// variables, even-indexed rows with the last k.
Monomial omegaWeight(const Partition& pi, int k, const ContextPtr& ctx);

// Labelled Ferrers diagram, one row of space-separated labels per part.
std::string renderFerrers(const Partition& pi, int k);

// All partitions of n in the class, descending lexicographic.
std::vector<Partition> enumerateClass(const PartitionClass& c, int n);
// Visitor form (descending lexicographic order as well).
void forEachInClass(const PartitionClass& c, int n,
                    const std::function<void(const Partition&)>& fn);
// Every partition of every n <= maxSize in the class.
void forEachUpTo(const PartitionClass& c, int maxSize,
                 const std::function<void(const Partition&)>& fn);
// Every partition with parts <= maxPart and at most maxLen parts.
void forEachInBox(int maxPart, int maxLen,
                  const std::function<void(const Partition&)>& fn);
// Every partition in a finite class (requires maxPart >= 0 and either a
// distinct kind or maxLength >= 0).
void forEachInFiniteClass(const PartitionClass& c,
                          const std::function<void(const Partition&)>& fn);

// Sum of weight(pi) over the class members with |pi| <= order. The weight of
// pi must have weighted degree |pi|.
TruncatedSeries weightedSum(const PartitionClass& c,
                            const std::function<Monomial(const Partition&)>& weight,
                            const ContextPtr& ctx, int order);

} // namespace partlab
