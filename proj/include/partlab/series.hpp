#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "partlab/bigint.hpp"
#include "partlab/upoly.hpp"

namespace partlab {

class VariableContext;
using ContextPtr = std::shared_ptr<const VariableContext>;

/* An ordered alphabet of variables. Each variable carries a nonnegative
 * degree weight ("grade"); truncation is by weighted total degree. Grade-0
 * marker variables must carry a finite exponent cap so that every series
 * stays finite. Exponent vectors are packed into a single 64-bit key with
 * the first variable in the most significant field, so the key order is the
 * lexicographic order by the context's variable order. */
class VariableContext {
public:
    struct Variable {
        std::string name;
        int grade = 1;
        int cap = -1; // -1: uncapped (grade >= 1 only)
    };

    static ContextPtr make(std::vector<Variable> vars);

    int size() const { return static_cast<int>(vars_.size()); }
    const std::string& name(int i) const { return vars_[static_cast<size_t>(i)].name; }
    int grade(int i) const { return vars_[static_cast<size_t>(i)].grade; }
    int cap(int i) const { return vars_[static_cast<size_t>(i)].cap; }
    int indexOf(const std::string& name) const; // -1 if absent
    bool structurallyEqual(const VariableContext& o) const;

    std::uint64_t encode(const std::vector<int>& exps) const;
    std::vector<int> decode(std::uint64_t key) const;
    int exponent(std::uint64_t key, int var) const;
    int weightedDegree(std::uint64_t key) const;
    bool withinCaps(std::uint64_t key) const;
    bool hasCaps() const { return hasCaps_; }
    int bitsPerVar() const { return bitsPerVar_; }

private:
    VariableContext() = default;
    std::vector<Variable> vars_;
    int bitsPerVar_ = 0;
    std::uint64_t fieldMask_ = 0;
    bool hasCaps_ = false;
};

/* A monomial bound to its context: an exponent per variable. */
class Monomial {
public:
    Monomial(ContextPtr ctx, std::vector<int> exps);
    // Unmentioned variables get exponent zero.
    static Monomial of(const ContextPtr& ctx,
                       std::initializer_list<std::pair<const char*, int>> exps);
    static Monomial unit(const ContextPtr& ctx);

    const ContextPtr& context() const { return ctx_; }
    const std::vector<int>& exponents() const { return exps_; }
    int exponent(const std::string& var) const;
    int weightedDegree() const;
    Monomial operator*(const Monomial& o) const;
    Monomial pow(int e) const;
    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    std::string text() const; // e.g. "a^10 b^9 c^8 d^7", "1" for the unit

private:
    ContextPtr ctx_;
    std::vector<int> exps_;
};

constexpr int kInfinity = -1; // Pochhammer length marker

/* Sparse exact series truncated at a weighted total degree (inclusive).
 * Terms are kept in graded-lexicographic order; no zero coefficients and no
 * over-order terms are ever stored. */
class TruncatedSeries {
public:
    struct Key {
        int wdeg;
        std::uint64_t packed;
        bool operator<(const Key& o) const
        {
            return wdeg != o.wdeg ? wdeg < o.wdeg : packed < o.packed;
        }
        bool operator==(const Key& o) const
        {
            return wdeg == o.wdeg && packed == o.packed;
        }
    };
    using TermMap = std::map<Key, Int>;

    TruncatedSeries(ContextPtr ctx, int order);

    static TruncatedSeries zero(const ContextPtr& ctx, int order);
    static TruncatedSeries one(const ContextPtr& ctx, int order);
    static TruncatedSeries constant(const ContextPtr& ctx, int order, Int c);
    static TruncatedSeries fromMonomial(const Monomial& m, int order, Int coeff = 1);

    const ContextPtr& context() const { return ctx_; }
    int order() const { return order_; }
    size_t termCount() const { return terms_.size(); }
    bool isZero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    Int coefficient(const Monomial& m) const;
    // Adds c * m to the series (dropped if over order or cap).
    void addTerm(const Monomial& m, const Int& c);
    void addTerm(std::uint64_t packed, int wdeg, const Int& c);

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator-() const;
    TruncatedSeries& operator*=(const Int& c);
    bool operator==(const TruncatedSeries& o) const;

    // this * c * m, re-truncated.
    TruncatedSeries shifted(const Monomial& m, const Int& c = 1) const;
    TruncatedSeries truncated(int newOrder) const;
    int minDegree() const; // order + 1 when zero

    std::string text() const; // canonical form, e.g. "1 - q - q^2 + q^5"

private:
    void checkSameContext(const TruncatedSeries& o) const;
    ContextPtr ctx_;
    int order_;
    TermMap terms_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

// (a; q)_n with n a count or kInfinity.
TruncatedSeries pochhammer(const Monomial& a, const Monomial& q, int n, int order);
// prod_i (a_i; q)_n.
TruncatedSeries pochhammerMulti(const std::vector<Monomial>& args, const Monomial& q,
                                int n, int order);
// (A; q)_n for a series base A (used when the base is a sum of monomials);
// for n = kInfinity, A must have minimum weighted degree >= 1.
TruncatedSeries pochhammerSeries(const TruncatedSeries& A, const Monomial& q, int n,
                                 int order);
// 1 / (a; q)_n; requires wdeg(a) >= 1.
TruncatedSeries inversePochhammer(const Monomial& a, const Monomial& q, int n,
                                  int order);

// Gaussian binomial / multinomial evaluated at the monomial q.
TruncatedSeries qBinomial(int n, int k, const Monomial& q, int order);
TruncatedSeries qMultinomial(int N, const std::vector<int>& parts, const Monomial& q,
                             int order);
// Substitutes X -> q into a univariate polynomial.
TruncatedSeries liftPoly(const UPoly& p, const Monomial& q, int order);

// Fixes the exponents of a subset of variables and returns the matching part
// of the series over the remaining variables.
TruncatedSeries extractCoefficient(const TruncatedSeries& s,
                                   const std::vector<std::pair<std::string, int>>& fixed);

// Term-wise exponent rewrite into a new context. Every variable of s's
// context must be assigned an image monomial over newCtx; images of graded
// variables must not lower the weighted degree.
TruncatedSeries substitute(const TruncatedSeries& s,
                           const std::vector<std::pair<std::string, Monomial>>& assignment,
                           const ContextPtr& newCtx);

// First graded-lex monomial where the two series differ, if any.
struct TermDiff {
    std::string monomial;
    Int lhs, rhs;
};
std::optional<TermDiff> firstDifference(const TruncatedSeries& a, const TruncatedSeries& b);

} // namespace partlab
