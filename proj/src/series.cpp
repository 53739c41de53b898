#include "partlab/series.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace partlab {

// ---------------------------------------------------------------------------
// VariableContext

ContextPtr VariableContext::make(std::vector<Variable> vars)
{
    if (vars.empty()) throw std::invalid_argument("VariableContext: no variables");
    if (vars.size() > 8)
        throw std::invalid_argument("VariableContext: at most 8 variables supported");

    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.name.empty() || !seen.insert(v.name).second)
            throw std::invalid_argument("VariableContext: names must be unique and nonempty");
        if (v.grade < 0) throw std::invalid_argument("VariableContext: negative grade");
        if (v.grade == 0 && v.cap < 0)
            throw std::invalid_argument("VariableContext: grade-0 variable '" + v.name +
                                        "' needs a finite cap");
    }

    auto ctx = std::shared_ptr<VariableContext>(new VariableContext());
    ctx->vars_ = std::move(vars);
    ctx->bitsPerVar_ = std::min(16, 64 / static_cast<int>(ctx->vars_.size()));
    ctx->fieldMask_ = (ctx->bitsPerVar_ == 64) ? ~0ull : ((1ull << ctx->bitsPerVar_) - 1);
    for (auto& v : ctx->vars_) {
        if (v.cap < 0) continue;
        ctx->hasCaps_ = true;
        // keeping stored exponents at half a field means one product can
        // never carry into the neighbouring field
        v.cap = std::min<std::int64_t>(v.cap, static_cast<std::int64_t>(ctx->fieldMask_ / 2));
    }
    return ctx;
}

int VariableContext::indexOf(const std::string& name) const
{
    for (int i = 0; i < size(); ++i)
        if (vars_[static_cast<size_t>(i)].name == name) return i;
    return -1;
}

bool VariableContext::structurallyEqual(const VariableContext& o) const
{
    if (size() != o.size()) return false;
    for (int i = 0; i < size(); ++i) {
        const auto& a = vars_[static_cast<size_t>(i)];
        const auto& b = o.vars_[static_cast<size_t>(i)];
        if (a.name != b.name || a.grade != b.grade || a.cap != b.cap) return false;
    }
    return true;
}

std::uint64_t VariableContext::encode(const std::vector<int>& exps) const
{
    if (static_cast<int>(exps.size()) != size())
        throw std::invalid_argument("encode: exponent count mismatch");
    std::uint64_t key = 0;
    const std::uint64_t maxField = fieldMask_;
    for (int i = 0; i < size(); ++i) {
        int e = exps[static_cast<size_t>(i)];
        if (e < 0) throw std::invalid_argument("encode: negative exponent");
        if (static_cast<std::uint64_t>(e) > maxField)
            throw std::overflow_error("encode: exponent too large for packed key");
        key = (key << bitsPerVar_) | static_cast<std::uint64_t>(e);
    }
    return key;
}

std::vector<int> VariableContext::decode(std::uint64_t key) const
{
    std::vector<int> exps(static_cast<size_t>(size()));
    for (int i = size() - 1; i >= 0; --i) {
        exps[static_cast<size_t>(i)] = static_cast<int>(key & fieldMask_);
        key >>= bitsPerVar_;
    }
    return exps;
}

int VariableContext::exponent(std::uint64_t key, int var) const
{
    int shift = (size() - 1 - var) * bitsPerVar_;
    return static_cast<int>((key >> shift) & fieldMask_);
}

int VariableContext::weightedDegree(std::uint64_t key) const
{
    int deg = 0;
    for (int i = size() - 1; i >= 0; --i) {
        deg += static_cast<int>(key & fieldMask_) * vars_[static_cast<size_t>(i)].grade;
        key >>= bitsPerVar_;
    }
    return deg;
}

bool VariableContext::withinCaps(std::uint64_t key) const
{
    if (!hasCaps_) return true;
    for (int i = size() - 1; i >= 0; --i) {
        int cap = vars_[static_cast<size_t>(i)].cap;
        if (cap >= 0 && static_cast<int>(key & fieldMask_) > cap) return false;
        key >>= bitsPerVar_;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(ContextPtr ctx, std::vector<int> exps)
    : ctx_(std::move(ctx)), exps_(std::move(exps))
{
    if (static_cast<int>(exps_.size()) != ctx_->size())
        throw std::invalid_argument("Monomial: exponent count mismatch");
    for (int e : exps_)
        if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
}

Monomial Monomial::of(const ContextPtr& ctx,
                      std::initializer_list<std::pair<const char*, int>> exps)
{
    std::vector<int> v(static_cast<size_t>(ctx->size()), 0);
    for (const auto& [name, e] : exps) {
        int i = ctx->indexOf(name);
        if (i < 0)
            throw std::invalid_argument(std::string("Monomial: unknown variable ") + name);
        v[static_cast<size_t>(i)] += e;
    }
    return Monomial(ctx, std::move(v));
}

Monomial Monomial::unit(const ContextPtr& ctx)
{
    return Monomial(ctx, std::vector<int>(static_cast<size_t>(ctx->size()), 0));
}

int Monomial::exponent(const std::string& var) const
{
    int i = ctx_->indexOf(var);
    if (i < 0) throw std::invalid_argument("Monomial: unknown variable " + var);
    return exps_[static_cast<size_t>(i)];
}

int Monomial::weightedDegree() const
{
    int deg = 0;
    for (int i = 0; i < ctx_->size(); ++i) deg += exps_[static_cast<size_t>(i)] * ctx_->grade(i);
    return deg;
}

Monomial Monomial::operator*(const Monomial& o) const
{
    if (!ctx_->structurallyEqual(*o.ctx_))
        throw std::invalid_argument("Monomial: context mismatch");
    std::vector<int> v = exps_;
    for (size_t i = 0; i < v.size(); ++i) v[i] += o.exps_[i];
    return Monomial(ctx_, std::move(v));
}

Monomial Monomial::pow(int e) const
{
    if (e < 0) throw std::invalid_argument("Monomial::pow: negative power");
    std::vector<int> v(exps_.size(), 0);
    for (size_t i = 0; i < v.size(); ++i) v[i] = exps_[i] * e;
    return Monomial(ctx_, std::move(v));
}

std::string Monomial::text() const
{
    std::string out;
    for (int i = 0; i < ctx_->size(); ++i) {
        int e = exps_[static_cast<size_t>(i)];
        if (e == 0) continue;
        if (!out.empty()) out += ' ';
        out += ctx_->name(i);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// TruncatedSeries

TruncatedSeries::TruncatedSeries(ContextPtr ctx, int order)
    : ctx_(std::move(ctx)), order_(order)
{
    if (order_ < 0) throw std::invalid_argument("TruncatedSeries: negative order");
}

TruncatedSeries TruncatedSeries::zero(const ContextPtr& ctx, int order)
{
    return TruncatedSeries(ctx, order);
}

TruncatedSeries TruncatedSeries::one(const ContextPtr& ctx, int order)
{
    return constant(ctx, order, 1);
}

TruncatedSeries TruncatedSeries::constant(const ContextPtr& ctx, int order, Int c)
{
    TruncatedSeries s(ctx, order);
    if (c != 0) s.terms_[{0, 0}] = std::move(c);
    return s;
}

TruncatedSeries TruncatedSeries::fromMonomial(const Monomial& m, int order, Int coeff)
{
    TruncatedSeries s(m.context(), order);
    s.addTerm(m, coeff);
    return s;
}

Int TruncatedSeries::coefficient(const Monomial& m) const
{
    Key k{m.weightedDegree(), ctx_->encode(m.exponents())};
    auto it = terms_.find(k);
    return it == terms_.end() ? Int(0) : it->second;
}

void TruncatedSeries::addTerm(const Monomial& m, const Int& c)
{
    addTerm(ctx_->encode(m.exponents()), m.weightedDegree(), c);
}

void TruncatedSeries::addTerm(std::uint64_t packed, int wdeg, const Int& c)
{
    if (c == 0 || wdeg > order_ || !ctx_->withinCaps(packed)) return;
    auto [it, inserted] = terms_.try_emplace(Key{wdeg, packed}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void TruncatedSeries::checkSameContext(const TruncatedSeries& o) const
{
    if (!ctx_->structurallyEqual(*o.ctx_))
        throw std::invalid_argument("TruncatedSeries: context mismatch");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o)
{
    checkSameContext(o);
    if (o.order_ < order_) {
        order_ = o.order_;
        terms_.erase(terms_.upper_bound(Key{order_, ~0ull}), terms_.end());
    }
    for (const auto& [k, c] : o.terms_) {
        if (k.wdeg > order_) break;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o)
{
    checkSameContext(o);
    if (o.order_ < order_) {
        order_ = o.order_;
        terms_.erase(terms_.upper_bound(Key{order_, ~0ull}), terms_.end());
    }
    for (const auto& [k, c] : o.terms_) {
        if (k.wdeg > order_) break;
        auto [it, inserted] = terms_.try_emplace(k, Int(-c));
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const
{
    TruncatedSeries r = *this;
    r += o;
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const
{
    TruncatedSeries r = *this;
    r -= o;
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

TruncatedSeries& TruncatedSeries::operator*=(const Int& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const
{
    checkSameContext(o);
    TruncatedSeries r(ctx_, std::min(order_, o.order_));
    const bool caps = ctx_->hasCaps();
    for (const auto& [ka, ca] : terms_) {
        if (ka.wdeg > r.order_) break;
        for (const auto& [kb, cb] : o.terms_) {
            int wd = ka.wdeg + kb.wdeg;
            if (wd > r.order_) break; // o.terms_ ascending by wdeg
            std::uint64_t packed = ka.packed + kb.packed;
            if (caps && !ctx_->withinCaps(packed)) continue;
            auto [it, inserted] = r.terms_.try_emplace(Key{wd, packed}, 0);
            it->second += ca * cb;
        }
    }
    for (auto it = r.terms_.begin(); it != r.terms_.end();)
        it = (it->second == 0) ? r.terms_.erase(it) : std::next(it);
    return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const
{
    return ctx_->structurallyEqual(*o.ctx_) && order_ == o.order_ && terms_ == o.terms_;
}

TruncatedSeries TruncatedSeries::shifted(const Monomial& m, const Int& c) const
{
    if (!ctx_->structurallyEqual(*m.context()))
        throw std::invalid_argument("shifted: context mismatch");
    TruncatedSeries r(ctx_, order_);
    if (c == 0) return r;
    const std::uint64_t mk = ctx_->encode(m.exponents());
    const int mw = m.weightedDegree();
    for (const auto& [k, v] : terms_) {
        if (k.wdeg + mw > order_) break;
        std::uint64_t packed = k.packed + mk;
        if (!ctx_->withinCaps(packed)) continue;
        r.terms_[{k.wdeg + mw, packed}] = v * c;
    }
    return r;
}

TruncatedSeries TruncatedSeries::truncated(int newOrder) const
{
    TruncatedSeries r(ctx_, newOrder);
    for (const auto& [k, v] : terms_) {
        if (k.wdeg > newOrder) break;
        r.terms_.emplace(k, v);
    }
    return r;
}

int TruncatedSeries::minDegree() const
{
    return terms_.empty() ? order_ + 1 : terms_.begin()->first.wdeg;
}

std::string TruncatedSeries::text() const
{
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        Monomial m(ctx_, ctx_->decode(k.packed));
        std::string mt = m.text();
        if (mt == "1")
            out << a.str();
        else if (a == 1)
            out << mt;
        else
            out << a.str() << " " << mt;
        first = false;
    }
    return out.str();
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

// ---------------------------------------------------------------------------
// Pochhammer builders

TruncatedSeries pochhammer(const Monomial& a, const Monomial& q, int n, int order)
{
    return pochhammerSeries(TruncatedSeries::fromMonomial(a, order), q, n, order);
}

TruncatedSeries pochhammerMulti(const std::vector<Monomial>& args, const Monomial& q,
                                int n, int order)
{
    TruncatedSeries acc = TruncatedSeries::one(q.context(), order);
    for (const auto& a : args) acc = acc * pochhammer(a, q, n, order);
    return acc;
}

TruncatedSeries pochhammerSeries(const TruncatedSeries& A, const Monomial& q, int n,
                                 int order)
{
    if (n != kInfinity && n < 0)
        throw std::invalid_argument("pochhammer: negative length");
    const ContextPtr& ctx = A.context();
    if (!ctx->structurallyEqual(*q.context()))
        throw std::invalid_argument("pochhammer: context mismatch");
    TruncatedSeries acc = TruncatedSeries::one(ctx, order);
    if (A.isZero()) return acc; // every factor is 1
    const int aMin = A.minDegree();
    const int qw = q.weightedDegree();
    if (n == kInfinity && qw < 1)
        throw std::domain_error("pochhammer: non-stabilizing infinite product (grade-0 q)");
    if (n == kInfinity && aMin < 1)
        throw std::domain_error("pochhammer: infinite product needs base of degree >= 1");
    for (int i = 0; n == kInfinity || i < n; ++i) {
        if (aMin + i * qw > order) break;
        acc -= (acc * A).shifted(q.pow(i));
    }
    return acc;
}

TruncatedSeries inversePochhammer(const Monomial& a, const Monomial& q, int n, int order)
{
    const ContextPtr& ctx = a.context();
    if (!ctx->structurallyEqual(*q.context()))
        throw std::invalid_argument("inversePochhammer: context mismatch");
    const int aw = a.weightedDegree();
    if (aw < 1)
        throw std::domain_error("inversePochhammer: base must have weighted degree >= 1");
    if (n != kInfinity && n < 0)
        throw std::invalid_argument("inversePochhammer: negative length");
    const int qw = q.weightedDegree();
    if (n == kInfinity && qw < 1)
        throw std::domain_error("inversePochhammer: non-stabilizing infinite product");

    TruncatedSeries acc = TruncatedSeries::one(ctx, order);
    for (int i = 0; n == kInfinity || i < n; ++i) {
        int fw = aw + i * qw;
        if (fw > order) break;
        // geometric expansion of 1 / (1 - a q^i)
        TruncatedSeries geom = TruncatedSeries::one(ctx, order);
        Monomial factor = a * q.pow(i);
        for (int m = 1; m * fw <= order; ++m) geom.addTerm(factor.pow(m), 1);
        acc = acc * geom;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Gaussian coefficients

TruncatedSeries liftPoly(const UPoly& p, const Monomial& q, int order)
{
    TruncatedSeries s(q.context(), order);
    const int qw = q.weightedDegree();
    for (int e = 0; e <= p.degree(); ++e) {
        if (p.coeff(e) == 0) continue;
        if (qw > 0 && e * qw > order) break;
        s.addTerm(q.pow(e), p.coeff(e));
    }
    return s;
}

TruncatedSeries qBinomial(int n, int k, const Monomial& q, int order)
{
    return liftPoly(qBinomialPoly(n, k), q, order);
}

TruncatedSeries qMultinomial(int N, const std::vector<int>& parts, const Monomial& q,
                             int order)
{
    return liftPoly(qMultinomialPoly(N, parts), q, order);
}

// ---------------------------------------------------------------------------
// Coefficient extraction and substitution

TruncatedSeries extractCoefficient(const TruncatedSeries& s,
                                   const std::vector<std::pair<std::string, int>>& fixed)
{
    const ContextPtr& ctx = s.context();
    std::vector<int> fixedExp(static_cast<size_t>(ctx->size()), -1);
    for (const auto& [name, e] : fixed) {
        int i = ctx->indexOf(name);
        if (i < 0) throw std::invalid_argument("extractCoefficient: unknown variable " + name);
        if (e < 0) throw std::invalid_argument("extractCoefficient: negative exponent");
        fixedExp[static_cast<size_t>(i)] = e;
    }

    std::vector<VariableContext::Variable> rest;
    std::vector<int> restIdx;
    for (int i = 0; i < ctx->size(); ++i) {
        if (fixedExp[static_cast<size_t>(i)] >= 0) continue;
        rest.push_back({ctx->name(i), ctx->grade(i), ctx->cap(i)});
        restIdx.push_back(i);
    }
    if (rest.empty())
        throw std::invalid_argument("extractCoefficient: no variables left");
    ContextPtr subCtx = VariableContext::make(rest);

    TruncatedSeries out(subCtx, s.order());
    std::vector<int> sub(restIdx.size());
    for (const auto& [k, c] : s.terms()) {
        std::vector<int> exps = ctx->decode(k.packed);
        bool keep = true;
        for (int i = 0; i < ctx->size() && keep; ++i)
            if (fixedExp[static_cast<size_t>(i)] >= 0 &&
                exps[static_cast<size_t>(i)] != fixedExp[static_cast<size_t>(i)])
                keep = false;
        if (!keep) continue;
        for (size_t j = 0; j < restIdx.size(); ++j)
            sub[j] = exps[static_cast<size_t>(restIdx[j])];
        out.addTerm(Monomial(subCtx, sub), c);
    }
    return out;
}

TruncatedSeries substitute(const TruncatedSeries& s,
                           const std::vector<std::pair<std::string, Monomial>>& assignment,
                           const ContextPtr& newCtx)
{
    const ContextPtr& ctx = s.context();
    std::vector<const Monomial*> image(static_cast<size_t>(ctx->size()), nullptr);
    for (const auto& [name, m] : assignment) {
        int i = ctx->indexOf(name);
        if (i < 0) throw std::invalid_argument("substitute: unknown variable " + name);
        if (!m.context()->structurallyEqual(*newCtx))
            throw std::invalid_argument("substitute: image outside the new context");
        image[static_cast<size_t>(i)] = &m;
    }
    for (int i = 0; i < ctx->size(); ++i) {
        if (!image[static_cast<size_t>(i)])
            throw std::invalid_argument("substitute: missing image for " + ctx->name(i));
        if (ctx->grade(i) >= 1 && image[static_cast<size_t>(i)]->weightedDegree() < ctx->grade(i))
            throw std::invalid_argument("substitute: image of " + ctx->name(i) +
                                        " lowers the weighted degree");
    }

    TruncatedSeries out(newCtx, s.order());
    const int nNew = newCtx->size();
    std::vector<int> acc(static_cast<size_t>(nNew));
    for (const auto& [k, c] : s.terms()) {
        std::vector<int> exps = ctx->decode(k.packed);
        std::fill(acc.begin(), acc.end(), 0);
        for (int i = 0; i < ctx->size(); ++i) {
            int e = exps[static_cast<size_t>(i)];
            if (e == 0) continue;
            const auto& im = image[static_cast<size_t>(i)]->exponents();
            for (int j = 0; j < nNew; ++j) acc[static_cast<size_t>(j)] += e * im[static_cast<size_t>(j)];
        }
        out.addTerm(Monomial(newCtx, acc), c);
    }
    return out;
}

std::optional<TermDiff> firstDifference(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (!a.context()->structurallyEqual(*b.context()))
        throw std::invalid_argument("firstDifference: context mismatch");
    const int order = std::min(a.order(), b.order());
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    const auto& ctx = *a.context();
    auto report = [&](const TruncatedSeries::Key& k, Int l, Int r) -> TermDiff {
        return {Monomial(a.context(), ctx.decode(k.packed)).text(), std::move(l), std::move(r)};
    };
    while (ia != ea || ib != eb) {
        if (ia != ea && ia->first.wdeg > order) ia = ea;
        if (ib != eb && ib->first.wdeg > order) ib = eb;
        if (ia == ea && ib == eb) break;
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            return report(ia->first, ia->second, 0);
        } else if (ia == ea || ib->first < ia->first) {
            return report(ib->first, 0, ib->second);
        } else {
            if (ia->second != ib->second) return report(ia->first, ia->second, ib->second);
            ++ia;
            ++ib;
        }
    }
    return std::nullopt;
}

} // namespace partlab
