#include "partlab/partitions.hpp"

#include <sstream>
#include <stdexcept>

namespace partlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

long long Partition::size() const
{
    long long s = 0;
    for (int p : parts_) s += p;
    return s;
}

std::string Partition::text() const
{
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition Partition::parse(const std::string& s)
{
    std::vector<int> parts;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        parts.push_back(std::stoi(tok));
    }
    return Partition(std::move(parts));
}

bool isKStrict(const Partition& pi, int k)
{
    if (k < 1) throw std::invalid_argument("isKStrict: k must be >= 1");
    if (k == 1) return true;
    // Parts are sorted, so any two parts sharing a block include a
    // consecutive such pair.
    const auto& p = pi.parts();
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        int a = p[i], b = p[i + 1];
        if (a % k == 0 && a != b) continue;
        if (a == b) {
            if (a % k != 0) return false;
            continue;
        }
        if ((a - 1) / k == (b - 1) / k && b % k != 0) return false;
    }
    return true;
}

bool hasDistinctParts(const Partition& pi)
{
    const auto& p = pi.parts();
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] == p[i + 1]) return false;
    return true;
}

static bool residuesAllow(const ResidueRule& r, int index1, int part)
{
    bool oddIdx = (index1 % 2 == 1);
    if ((r.parity == ResidueRule::OddIndexed) != oddIdx) return true;
    int res = part % r.modulus;
    for (int a : r.allowed)
        if (res == a) return true;
    return false;
}

bool PartitionClass::contains(const Partition& pi) const
{
    if (maxPart >= 0 && pi.largest() > maxPart) return false;
    if (maxLength >= 0 && pi.length() > maxLength) return false;
    switch (kind) {
    case ClassKind::All:
        break;
    case ClassKind::Distinct:
        if (!hasDistinctParts(pi)) return false;
        break;
    case ClassKind::KStrict:
        if (!isKStrict(pi, k)) return false;
        break;
    case ClassKind::DistinctKStrict:
        if (!hasDistinctParts(pi) || !isKStrict(pi, k)) return false;
        break;
    case ClassKind::EvenRepeatMultiples: {
        const auto& p = pi.parts();
        for (size_t i = 0; i < p.size();) {
            if (p[i] % k != 0) return false;
            size_t j = i;
            while (j < p.size() && p[j] == p[i]) ++j;
            if ((j - i) % 2 != 0) return false;
            i = j;
        }
        break;
    }
    case ClassKind::Custom:
        break;
    }
    for (const auto& r : residues)
        for (int i = 0; i < pi.length(); ++i)
            if (!residuesAllow(r, i + 1, pi.part(i))) return false;
    if (predicate && !predicate(pi)) return false;
    return true;
}

std::string PartitionClass::describe() const
{
    std::string kindName;
    switch (kind) {
    case ClassKind::All: kindName = "P"; break;
    case ClassKind::Distinct: kindName = "D"; break;
    case ClassKind::KStrict: kindName = "S" + std::to_string(k); break;
    case ClassKind::DistinctKStrict: kindName = "DS" + std::to_string(k); break;
    case ClassKind::EvenRepeatMultiples: kindName = "E" + std::to_string(k); break;
    case ClassKind::Custom: kindName = "custom"; break;
    }
    std::ostringstream out;
    out << "{\"kind\":\"" << kindName << "\",\"k\":" << k << ",\"maxPart\":";
    if (maxPart >= 0) out << maxPart; else out << "null";
    out << ",\"maxLength\":";
    if (maxLength >= 0) out << maxLength; else out << "null";
    out << ",\"residues\":[";
    for (size_t r = 0; r < residues.size(); ++r) {
        if (r) out << ",";
        out << "{\"parity\":\""
            << (residues[r].parity == ResidueRule::OddIndexed ? "odd" : "even")
            << "\",\"mod\":" << residues[r].modulus << ",\"allowed\":[";
        for (size_t i = 0; i < residues[r].allowed.size(); ++i) {
            if (i) out << ",";
            out << residues[r].allowed[i];
        }
        out << "]}";
    }
    out << "]}";
    return out.str();
}

StatisticVector statistics(const Partition& pi, int k)
{
    if (k < 1) throw std::invalid_argument("statistics: k must be >= 1");
    StatisticVector v;
    v.size = pi.size();
    v.length = pi.length();
    v.residueCountsOdd.assign(static_cast<size_t>(k > 0 ? k - 1 : 0), 0);
    v.residueCountsEven.assign(static_cast<size_t>(k > 0 ? k - 1 : 0), 0);
    for (int i = 0; i < pi.length(); ++i) {
        int part = pi.part(i);
        bool oddIdx = (i % 2 == 0); // 1-based index i+1
        if (oddIdx) {
            v.oddIndexedSum += part;
            if (part % 2 == 1) ++v.oddOddIndexed;
        } else {
            v.evenIndexedSum += part;
            if (part % 2 == 1) ++v.oddEvenIndexed;
        }
        int res = part % k;
        if (res >= 1) {
            if (oddIdx)
                ++v.residueCountsOdd[static_cast<size_t>(res - 1)];
            else
                ++v.residueCountsEven[static_cast<size_t>(res - 1)];
        }
    }
    return v;
}

ContextPtr omegaContext(int k)
{
    if (k < 1 || k > 4) throw std::invalid_argument("omegaContext: k must be in 1..4");
    std::vector<VariableContext::Variable> vars;
    if (k <= 3) {
        static const char* letters = "abcdef";
        for (int i = 0; i < 2 * k; ++i) vars.push_back({std::string(1, letters[i]), 1, -1});
    } else {
        for (int i = 1; i <= k; ++i) vars.push_back({"a" + std::to_string(i), 1, -1});
        for (int i = 1; i <= k; ++i) vars.push_back({"b" + std::to_string(i), 1, -1});
    }
    return VariableContext::make(std::move(vars));
}

Monomial omegaWeight(const Partition& pi, int k, const ContextPtr& ctx)
{
    if (ctx->size() != 2 * k) throw std::invalid_argument("omegaWeight: context size mismatch");
    std::vector<int> exps(static_cast<size_t>(2 * k), 0);
    for (int i = 0; i < pi.length(); ++i) {
        int len = pi.part(i);
        int base = (i % 2 == 0) ? 0 : k; // odd-indexed rows use the first k letters
        // a row of length m takes the first m letters of the cyclic word
        for (int r = 0; r < k; ++r) {
            int count = (len - r + k - 1) / k; // cells with column index = r mod k
            if (len <= r) count = 0;
            exps[static_cast<size_t>(base + r)] += count;
        }
    }
    return Monomial(ctx, std::move(exps));
}

std::string renderFerrers(const Partition& pi, int k)
{
    ContextPtr ctx = omegaContext(k);
    std::string out;
    for (int i = 0; i < pi.length(); ++i) {
        int base = (i % 2 == 0) ? 0 : k;
        for (int c = 0; c < pi.part(i); ++c) {
            if (c) out += ' ';
            out += ctx->name(base + c % k);
        }
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

struct EnumState {
    const PartitionClass* cls;
    const std::function<void(const Partition&)>* fn;
    std::vector<int> prefix;
};

// Checks whether appending `next` to the prefix can still satisfy the class
// (monotone constraints only; the full predicate runs on completion).
bool prefixAllows(const PartitionClass& c, const std::vector<int>& prefix, int next)
{
    if (c.maxLength >= 0 && static_cast<int>(prefix.size()) >= c.maxLength) return false;
    int prev = prefix.empty() ? -1 : prefix.back();
    switch (c.kind) {
    case ClassKind::Distinct:
        if (prev >= 0 && next >= prev) return false;
        break;
    case ClassKind::DistinctKStrict:
        if (prev >= 0 && next >= prev) return false;
        [[fallthrough]];
    case ClassKind::KStrict:
        if (prev >= 0) {
            if (next == prev && next % c.k != 0) return false;
            if (next != prev && (prev - 1) / c.k == (next - 1) / c.k && prev % c.k != 0 &&
                next % c.k != 0)
                return false;
        }
        break;
    case ClassKind::EvenRepeatMultiples:
        if (next % c.k != 0) return false;
        break;
    default:
        break;
    }
    for (const auto& r : c.residues)
        if (!residuesAllow(r, static_cast<int>(prefix.size()) + 1, next)) return false;
    return true;
}

void enumRec(EnumState& st, int remaining, int bound)
{
    if (remaining == 0) {
        Partition pi(st.prefix);
        if (st.cls->contains(pi)) (*st.fn)(pi);
        return;
    }
    for (int v = std::min(bound, remaining); v >= 1; --v) {
        if (!prefixAllows(*st.cls, st.prefix, v)) continue;
        st.prefix.push_back(v);
        enumRec(st, remaining - v, v);
        st.prefix.pop_back();
    }
}

} // namespace

void forEachInClass(const PartitionClass& c, int n,
                    const std::function<void(const Partition&)>& fn)
{
    if (n < 0) throw std::invalid_argument("forEachInClass: negative n");
    EnumState st{&c, &fn, {}};
    int bound = (c.maxPart >= 0) ? std::min(c.maxPart, n) : n;
    if (n == 0) {
        Partition empty;
        if (c.contains(empty)) fn(empty);
        return;
    }
    enumRec(st, n, bound);
}

std::vector<Partition> enumerateClass(const PartitionClass& c, int n)
{
    std::vector<Partition> out;
    forEachInClass(c, n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

void forEachUpTo(const PartitionClass& c, int maxSize,
                 const std::function<void(const Partition&)>& fn)
{
    for (int n = 0; n <= maxSize; ++n) forEachInClass(c, n, fn);
}

void forEachInBox(int maxPart, int maxLen,
                  const std::function<void(const Partition&)>& fn)
{
    std::vector<int> prefix;
    std::function<void(int)> rec = [&](int bound) {
        fn(Partition(prefix));
        if (static_cast<int>(prefix.size()) >= maxLen) return;
        for (int v = bound; v >= 1; --v) {
            prefix.push_back(v);
            rec(v);
            prefix.pop_back();
        }
    };
    if (maxPart < 0 || maxLen < 0)
        throw std::invalid_argument("forEachInBox: bounds must be finite");
    rec(maxPart);
}

void forEachInFiniteClass(const PartitionClass& c,
                          const std::function<void(const Partition&)>& fn)
{
    if (c.maxPart < 0)
        throw std::invalid_argument("forEachInFiniteClass: maxPart must be finite");
    bool distinctKind =
        c.kind == ClassKind::Distinct || c.kind == ClassKind::DistinctKStrict;
    if (!distinctKind && c.maxLength < 0)
        throw std::invalid_argument("forEachInFiniteClass: class is not finite");

    std::vector<int> prefix;
    std::function<void(int)> rec = [&](int bound) {
        Partition pi(prefix);
        if (c.contains(pi)) fn(pi);
        for (int v = bound; v >= 1; --v) {
            if (!prefixAllows(c, prefix, v)) continue;
            prefix.push_back(v);
            rec(v);
            prefix.pop_back();
        }
    };
    rec(c.maxPart);
}

TruncatedSeries weightedSum(const PartitionClass& c,
                            const std::function<Monomial(const Partition&)>& weight,
                            const ContextPtr& ctx, int order)
{
    TruncatedSeries acc(ctx, order);
    forEachUpTo(c, order, [&](const Partition& pi) {
        Monomial w = weight(pi);
        if (w.weightedDegree() != pi.size())
            throw std::domain_error("weightedSum: weight degree differs from |pi|");
        acc.addTerm(w, 1);
    });
    return acc;
}

} // namespace partlab
