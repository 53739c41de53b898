#include "partlab/upoly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace partlab {

static const Int kZero = 0;

UPoly::UPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UPoly UPoly::zero() { return UPoly{}; }

UPoly UPoly::one() { return term(1, 0); }

UPoly UPoly::term(Int c, int e)
{
    if (c == 0) return UPoly{};
    if (e < 0) throw std::invalid_argument("UPoly::term: negative exponent");
    std::vector<Int> v(static_cast<size_t>(e) + 1);
    v[static_cast<size_t>(e)] = std::move(c);
    return UPoly(std::move(v));
}

const Int& UPoly::coeff(int e) const
{
    if (e < 0 || e >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(e)];
}

void UPoly::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UPoly& UPoly::operator+=(const UPoly& o)
{
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o)
{
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

UPoly UPoly::operator+(const UPoly& o) const
{
    UPoly r = *this;
    r += o;
    return r;
}

UPoly UPoly::operator-(const UPoly& o) const
{
    UPoly r = *this;
    r -= o;
    return r;
}

UPoly UPoly::operator*(const UPoly& o) const
{
    if (isZero() || o.isZero()) return UPoly{};
    std::vector<Int> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            out[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return UPoly(std::move(out));
}

UPoly UPoly::exactDivide(const UPoly& divisor) const
{
    if (divisor.isZero()) throw std::domain_error("UPoly: division by zero");
    if (isZero()) return UPoly{};
    if (degree() < divisor.degree())
        throw std::domain_error("UPoly: non-exact division (degree too small)");

    std::vector<Int> rem = coeffs_;
    const int dq = degree() - divisor.degree();
    std::vector<Int> quot(static_cast<size_t>(dq) + 1);
    const Int& lead = divisor.coeffs_.back();
    for (int e = dq; e >= 0; --e) {
        Int& top = rem[static_cast<size_t>(e + divisor.degree())];
        if (top == 0) continue;
        if (top % lead != 0)
            throw std::domain_error("UPoly: non-exact division (leading coefficient)");
        Int q = top / lead;
        for (int i = 0; i <= divisor.degree(); ++i)
            rem[static_cast<size_t>(e + i)] -= q * divisor.coeffs_[static_cast<size_t>(i)];
        quot[static_cast<size_t>(e)] = std::move(q);
    }
    for (const Int& c : rem)
        if (c != 0) throw std::domain_error("UPoly: non-exact division (nonzero remainder)");
    return UPoly(std::move(quot));
}

UPoly qFactorialPoly(int n)
{
    if (n < 0) throw std::invalid_argument("qFactorialPoly: negative n");
    UPoly acc = UPoly::one();
    for (int i = 1; i <= n; ++i) acc = acc * (UPoly::one() - UPoly::term(1, i));
    return acc;
}

UPoly negPochhammerPoly(int n)
{
    if (n < 0) throw std::invalid_argument("negPochhammerPoly: negative n");
    UPoly acc = UPoly::one();
    for (int i = 1; i <= n; ++i) acc = acc * (UPoly::one() + UPoly::term(1, i));
    return acc;
}

UPoly inflatePoly(const UPoly& p, int stride)
{
    if (stride < 1) throw std::invalid_argument("inflatePoly: stride must be >= 1");
    if (p.isZero()) return p;
    std::vector<Int> out(static_cast<size_t>(p.degree() * stride) + 1);
    for (int e = 0; e <= p.degree(); ++e) out[static_cast<size_t>(e * stride)] = p.coeff(e);
    return UPoly(std::move(out));
}

const UPoly& qBinomialPoly(int n, int k)
{
    static std::map<std::pair<int, int>, UPoly> cache;
    static std::mutex mtx;
    static const UPoly zero = UPoly::zero();
    static const UPoly one = UPoly::one();
    // [n, 0] is the empty product for every n; otherwise zero outside
    // 0 <= k <= n.
    if (k == 0) return one;
    if (!(n >= k && k >= 1)) return zero;

    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
    UPoly num = qFactorialPoly(n);
    UPoly den = qFactorialPoly(k) * qFactorialPoly(n - k);
    return cache.emplace(std::make_pair(n, k), num.exactDivide(den)).first->second;
}

UPoly qMultinomialPoly(int N, const std::vector<int>& parts)
{
    int sum = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("qMultinomialPoly: negative part");
        sum += p;
    }
    if (sum != N) throw std::invalid_argument("qMultinomialPoly: parts do not sum to N");
    UPoly acc = qFactorialPoly(N);
    for (int p : parts) acc = acc.exactDivide(qFactorialPoly(p));
    return acc;
}

} // namespace partlab
