#pragma once

#include <utility>
#include <vector>

#include "partlab/partitions.hpp"

namespace partlab {

/* The row-removal decomposition of a k-strict partition: repeated parts
 * (necessarily multiples of k) are removed in even batches, largest value
 * first, always the topmost copies. The leftover is distinct and k-strict;
 * the removed rows form a partition whose parts are multiples of k with even
 * multiplicities. Weight bookkeeping (the label swap on evenly-indexed
 * batches) keeps both outputs validly labelled, which the exhaustive tests
 * check through the product law for omegaWeight. */
std::pair<Partition, Partition> psiK(const Partition& pi, int k);

// Inverse merge: parts of pi2 are inserted into pi1 keeping weak decrease,
// with inserted copies placed above existing equal parts.
Partition psiKInverse(const Partition& pi1, const Partition& pi2, int k);

// psiK restricted to partitions with largest part <= maxPart; both outputs
// satisfy the same bound.
std::pair<Partition, Partition> psiKBounded(const Partition& pi, int k, int maxPart);

/* A width-k slice of a labelled Ferrers diagram. Heights are odd for types
 * I/III and even for types II/IV; types I/II end in a partial row of width
 * residueColumn (1..k-1). */
struct Block {
    enum Type { I, II, III, IV };
    Type type;
    int height;
    int residueColumn; // 0 for full types III/IV
};

// Left-to-right width-k column groups of a k-strict partition's diagram.
std::vector<Block> verticalBlocks(const Partition& pi, int k);

// Weight of one block in the omega alphabet.
Monomial blockWeight(const Block& b, int k, const ContextPtr& ctx);

// Transpose of the Ferrers diagram.
Partition conjugate(const Partition& pi);

/* Gap reduction for distinct-part partitions: every gap between consecutive
 * parts (and the smallest part's gap against zero) larger than two is
 * lowered into {1,2} by removing an even number of columns above it. Returns
 * (reduced, removed) with pi = reduced + removed part-wise; removed has even
 * parts only and preserves every part parity of pi. */
std::pair<Partition, Partition> columnStrip(const Partition& pi);

// Staircase-like base shapes: parity even gives
// (2m, 2m-2, ..., 2j, 2j-1, ..., 2, 1), parity odd gives
// (2m, 2m-2, ..., 2j+2, 2j+1, 2j, ..., 3, 2).
enum class BaseParity { Even, Odd };
Partition basePartition(int m, int j, BaseParity parity);

/* Splits a gap-reduced partition (j odd parts, all even-indexed, m even
 * parts) into the base shape of matching parity plus the multiples-of-four
 * jump record. */
std::pair<Partition, Partition> jumpDecompose(const Partition& pi1, int m, int j);

// Rebuilds the gap-reduced partition from the base shape and a jump record.
Partition jumpCompose(const Partition& base, const Partition& tilde, int m, int j);

} // namespace partlab
