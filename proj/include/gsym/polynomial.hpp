#pragma once
#include <array>
#include <cassert>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace gsym {

constexpr int kMaxVars = 16;

// Exponent vector over at most kMaxVars variables.
struct Monomial {
    std::array<uint8_t, kMaxVars> e{};

    int totalDegree() const {
        int s = 0;
        for (auto x : e) s += x;
        return s;
    }
    bool isConstant() const {
        for (auto x : e)
            if (x) return false;
        return true;
    }
    // Canonical term order: total degree ascending, then earlier-variable-heavy first.
    bool operator<(const Monomial &o) const {
        int d1 = totalDegree(), d2 = o.totalDegree();
        if (d1 != d2) return d1 < d2;
        return e > o.e;
    }
    bool operator==(const Monomial &o) const { return e == o.e; }
    Monomial operator*(const Monomial &o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) {
            int s = e[i] + o.e[i];
            if (s > 255) throw std::overflow_error("monomial exponent overflow");
            r.e[i] = (uint8_t)s;
        }
        return r;
    }
};

// One named block of variables.  Scalar alphabets print a bare name ("b"); indexed
// alphabets always print with a subscript ("x1"), even when they hold one variable.
struct Alphabet {
    std::string name;
    int count = 1;
    int cap = -1; // joint total-degree cap over the block; negative = uncapped
    bool indexed = false;

    static Alphabet scalar(std::string n, int cap = -1) { return {std::move(n), 1, cap, false}; }
    static Alphabet vars(std::string n, int count, int cap = -1) { return {std::move(n), count, cap, true}; }
};

// Variable layout plus per-alphabet truncation caps.  Truncation by joint total
// degree is an ideal, so arithmetic in the quotient stays exact.
class TruncationContext {
    std::vector<Alphabet> alphas_;
    std::vector<int> first_;
    int nVars_ = 0;

public:
    explicit TruncationContext(std::vector<Alphabet> as) : alphas_(std::move(as)) {
        for (auto &a : alphas_) {
            if (a.count < 1) throw std::invalid_argument("alphabet needs at least one variable");
            first_.push_back(nVars_);
            nVars_ += a.count;
        }
        if (nVars_ > kMaxVars) throw std::invalid_argument("too many variables");
    }

    int varCount() const { return nVars_; }
    int alphabetCount() const { return (int)alphas_.size(); }
    const Alphabet &alphabetAt(int i) const { return alphas_[i]; }

    int alphabetIndex(const std::string &name) const {
        for (size_t i = 0; i < alphas_.size(); ++i)
            if (alphas_[i].name == name) return (int)i;
        throw std::invalid_argument("unknown alphabet: " + name);
    }
    bool hasAlphabet(const std::string &name) const {
        for (auto &a : alphas_)
            if (a.name == name) return true;
        return false;
    }

    // Variable index of the i-th variable (1-based) of the named alphabet.
    int var(const std::string &name, int i = 1) const {
        int a = alphabetIndex(name);
        if (i < 1 || i > alphas_[a].count) throw std::out_of_range("variable index out of range");
        return first_[a] + i - 1;
    }

    std::string varName(int v) const {
        for (size_t a = 0; a < alphas_.size(); ++a)
            if (v >= first_[a] && v < first_[a] + alphas_[a].count) {
                if (!alphas_[a].indexed) return alphas_[a].name;
                return alphas_[a].name + std::to_string(v - first_[a] + 1);
            }
        throw std::out_of_range("variable index out of range");
    }

    int alphabetDegree(const Monomial &m, int a) const {
        int s = 0;
        for (int i = 0; i < alphas_[a].count; ++i) s += m.e[first_[a] + i];
        return s;
    }
    int alphabetDegree(const Monomial &m, const std::string &name) const {
        return alphabetDegree(m, alphabetIndex(name));
    }

    bool admissible(const Monomial &m) const {
        for (size_t a = 0; a < alphas_.size(); ++a)
            if (alphas_[a].cap >= 0 && alphabetDegree(m, (int)a) > alphas_[a].cap) return false;
        return true;
    }

    bool operator==(const TruncationContext &o) const {
        if (alphas_.size() != o.alphas_.size()) return false;
        for (size_t i = 0; i < alphas_.size(); ++i)
            if (alphas_[i].name != o.alphas_[i].name || alphas_[i].count != o.alphas_[i].count ||
                alphas_[i].cap != o.alphas_[i].cap)
                return false;
        return true;
    }
};

// Exact multivariate polynomial in the truncated ring of a TruncationContext.
class TruncatedPolynomial {
    const TruncationContext *ctx_ = nullptr;
    std::map<Monomial, Int> terms_;

public:
    TruncatedPolynomial() = default;
    explicit TruncatedPolynomial(const TruncationContext &ctx) : ctx_(&ctx) {}

    // Accumulate one term; drops zero coefficients and monomials outside the caps.
    void addTerm(const Monomial &m, const Int &c) {
        if (c == 0 || !ctx_->admissible(m)) return;
        auto it = terms_.find(m);
        if (it == terms_.end())
            terms_.emplace(m, c);
        else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    static TruncatedPolynomial constant(const TruncationContext &ctx, Int c) {
        TruncatedPolynomial p(ctx);
        p.addTerm(Monomial{}, c);
        return p;
    }
    static TruncatedPolynomial variable(const TruncationContext &ctx, int v, int deg = 1) {
        TruncatedPolynomial p(ctx);
        Monomial m;
        if (deg < 0 || deg > 255) throw std::invalid_argument("bad exponent");
        m.e[v] = (uint8_t)deg;
        p.addTerm(m, 1);
        return p;
    }

    const TruncationContext &context() const {
        assert(ctx_);
        return *ctx_;
    }
    bool isZero() const { return terms_.empty(); }
    size_t termCount() const { return terms_.size(); }
    const std::map<Monomial, Int> &terms() const { return terms_; }

    Int coefficientOf(const Monomial &m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Int(0) : it->second;
    }
    Int constantTerm() const { return coefficientOf(Monomial{}); }

    bool operator==(const TruncatedPolynomial &o) const { return terms_ == o.terms_; }
    bool operator!=(const TruncatedPolynomial &o) const { return terms_ != o.terms_; }

    TruncatedPolynomial &operator+=(const TruncatedPolynomial &o) {
        for (auto &[m, c] : o.terms_) addTerm(m, c);
        return *this;
    }
    TruncatedPolynomial operator+(const TruncatedPolynomial &o) const {
        TruncatedPolynomial r = *this;
        r += o;
        return r;
    }
    TruncatedPolynomial &operator-=(const TruncatedPolynomial &o) {
        for (auto &[m, c] : o.terms_) addTerm(m, -c);
        return *this;
    }
    TruncatedPolynomial operator-(const TruncatedPolynomial &o) const {
        TruncatedPolynomial r = *this;
        r -= o;
        return r;
    }
    TruncatedPolynomial operator-() const {
        TruncatedPolynomial r = *this;
        for (auto &[m, c] : r.terms_) c = -c;
        return r;
    }
    TruncatedPolynomial scaled(const Int &k) const {
        TruncatedPolynomial r(*ctx_);
        if (k == 0) return r;
        for (auto &[m, c] : terms_) r.terms_.emplace(m, c * k);
        return r;
    }
    TruncatedPolynomial operator*(const TruncatedPolynomial &o) const {
        TruncatedPolynomial r(*ctx_);
        for (auto &[m1, c1] : terms_)
            for (auto &[m2, c2] : o.terms_) {
                Monomial m = m1 * m2;
                if (!ctx_->admissible(m)) continue;
                r.addTerm(m, c1 * c2);
            }
        return r;
    }
    TruncatedPolynomial pow(int n) const {
        assert(n >= 0);
        TruncatedPolynomial r = constant(*ctx_, 1);
        for (int t = 0; t < n; ++t) r = r * *this;
        return r;
    }

    // Inverse of a polynomial with constant term +-1, via the Neumann series in the
    // truncation ideal.  Throws if the nilpotent part fails to vanish (uncapped vars).
    TruncatedPolynomial inverse() const {
        Int c0 = constantTerm();
        if (c0 == -1) return (-*this).inverse().scaled(-1);
        if (c0 != 1) throw std::invalid_argument("inverse needs unit constant term");
        TruncatedPolynomial g = *this - constant(*ctx_, 1); // 1/(1+g) = sum (-g)^k
        TruncatedPolynomial r = constant(*ctx_, 1), term = constant(*ctx_, 1);
        for (int guard = 0;; ++guard) {
            if (guard > 4096) throw std::runtime_error("inverse does not terminate (uncapped variable?)");
            term = term.scaled(-1) * g;
            if (term.isZero()) break;
            r += term;
        }
        return r;
    }

    std::string toString() const;
};

using Poly = TruncatedPolynomial;

inline Poly add(const Poly &f, const Poly &g) { return f + g; }
inline Poly mul(const Poly &f, const Poly &g) { return f * g; }

// sum_{k>=0} m^k for m with zero constant term; terminates through the caps.
inline Poly geometricSeries(const Poly &m) {
    if (m.constantTerm() != 0) throw std::invalid_argument("geometricSeries needs zero constant term");
    Poly r = Poly::constant(m.context(), 1), term = Poly::constant(m.context(), 1);
    for (int guard = 0;; ++guard) {
        if (guard > 4096) throw std::runtime_error("geometricSeries does not terminate");
        term = term * m;
        if (term.isZero()) break;
        r += term;
    }
    return r;
}

// prod_{i<=m, j<=n} 1/(1 - x_i y_j)
inline Poly cauchyKernel(int m, int n, const TruncationContext &ctx, const std::string &xa = "x",
                         const std::string &ya = "y") {
    Poly r = Poly::constant(ctx, 1);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j)
            r = r * geometricSeries(Poly::variable(ctx, ctx.var(xa, i)) * Poly::variable(ctx, ctx.var(ya, j)));
    return r;
}

// prod_{i<=m, j<=n} (1 + x_i y_j)
inline Poly dualKernel(int m, int n, const TruncationContext &ctx, const std::string &xa = "x",
                       const std::string &ya = "y") {
    Poly r = Poly::constant(ctx, 1);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j)
            r = r * (Poly::constant(ctx, 1) +
                     Poly::variable(ctx, ctx.var(xa, i)) * Poly::variable(ctx, ctx.var(ya, j)));
    return r;
}

// Substitute value in {-1, 0, +1} for one variable.
inline Poly substituteValue(const Poly &f, int v, int value) {
    if (value != 0 && value != 1 && value != -1) throw std::invalid_argument("substitute supports 0, 1, -1");
    Poly r(f.context());
    for (auto &[m, c] : f.terms()) {
        int d = m.e[v];
        if (value == 0 && d > 0) continue;
        Monomial m2 = m;
        m2.e[v] = 0;
        r.addTerm(m2, (value == -1 && d % 2) ? -c : c);
    }
    return r;
}

// Assignment over several variables, applied one at a time.
inline Poly specialize(const Poly &f, const std::vector<std::pair<int, int>> &assignment) {
    Poly r = f;
    for (auto &[v, value] : assignment) r = substituteValue(r, v, value);
    return r;
}

// Map x_i -> -x_i for all variables of one alphabet.
inline Poly negateAlphabet(const Poly &f, const std::string &alphabet) {
    const auto &ctx = f.context();
    Poly r(ctx);
    for (auto &[m, c] : f.terms()) {
        int d = ctx.alphabetDegree(m, alphabet);
        r.addTerm(m, d % 2 ? -c : c);
    }
    return r;
}

// Split into homogeneous components by total degree in one alphabet.
inline std::map<int, Poly> homogeneousComponents(const Poly &f, const std::string &alphabet) {
    const auto &ctx = f.context();
    std::map<int, Poly> out;
    for (auto &[m, c] : f.terms()) {
        int d = ctx.alphabetDegree(m, alphabet);
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, Poly(ctx)).first;
        it->second.addTerm(m, c);
    }
    return out;
}

inline std::string TruncatedPolynomial::toString() const {
    if (terms_.empty()) return "0";
    const auto &ctx = *ctx_;
    std::ostringstream os;
    bool first = true;
    for (auto &[m, c] : terms_) {
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string vars;
        for (int v = 0; v < ctx.varCount(); ++v) {
            if (!m.e[v]) continue;
            if (!vars.empty()) vars += "*";
            vars += ctx.varName(v);
            if (m.e[v] > 1) vars += "^" + std::to_string((int)m.e[v]);
        }
        if (vars.empty())
            os << a;
        else if (a == 1)
            os << vars;
        else
            os << a << "*" << vars;
    }
    return os.str();
}

} // namespace gsym
