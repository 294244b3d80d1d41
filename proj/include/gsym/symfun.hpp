#pragma once
#include <optional>

#include "report.hpp"
#include "schur_ops.hpp"
#include "tableaux.hpp"

namespace gsym {

enum class SymFamily { G, g, J, j, s, h, e };
enum class EvalRoute { operators, tableaux };

inline std::string toString(SymFamily f) {
    switch (f) {
    case SymFamily::G: return "G";
    case SymFamily::g: return "g";
    case SymFamily::J: return "J";
    case SymFamily::j: return "j";
    case SymFamily::s: return "s";
    case SymFamily::h: return "h";
    default: return "e";
    }
}

inline SymFamily symFamilyFromString(const std::string &s) {
    for (auto f : {SymFamily::G, SymFamily::g, SymFamily::J, SymFamily::j, SymFamily::s, SymFamily::h,
                   SymFamily::e})
        if (toString(f) == s) return f;
    throw std::invalid_argument("unknown family: " + s);
}

inline EvalRoute evalRouteFromString(const std::string &s) {
    if (s == "operator") return EvalRoute::operators;
    if (s == "tableaux") return EvalRoute::tableaux;
    throw std::invalid_argument("unknown route: " + s);
}

// One symmetric function: G/J take outer//inner, g/j/s take outer/inner, h/e take a degree.
struct SymFunId {
    SymFamily family;
    Partition outer, inner;
    int k = 0;
};

// ---- classical bases ----

inline Poly completeHomogeneous(int k, int nVars, const TruncationContext &ctx,
                                const std::string &alphabet = "x") {
    std::vector<Poly> H(k + 1, Poly(ctx));
    H[0] = Poly::constant(ctx, 1);
    for (int v = 1; v <= nVars; ++v) {
        Poly x = Poly::variable(ctx, ctx.var(alphabet, v));
        for (int j = k; j >= 1; --j)
            for (int t = 1; t <= j; ++t) H[j] += x.pow(t) * H[j - t];
    }
    return H[k];
}

inline Poly elementarySymmetric(int k, int nVars, const TruncationContext &ctx,
                                const std::string &alphabet = "x") {
    std::vector<Poly> E(k + 1, Poly(ctx));
    E[0] = Poly::constant(ctx, 1);
    for (int v = 1; v <= nVars; ++v) {
        Poly x = Poly::variable(ctx, ctx.var(alphabet, v));
        for (int j = std::min(k, v); j >= 1; --j) E[j] += x * E[j - 1];
    }
    return E[k];
}

// ---- evaluation ----

inline Poly evaluate(const SymFunId &id, int nVars, const TruncationContext &ctx,
                     EvalRoute route = EvalRoute::operators, const std::string &alphabet = "x") {
    std::vector<int> vars;
    for (int i = 1; i <= nVars; ++i) vars.push_back(ctx.var(alphabet, i));
    auto viaChain = [&](SeriesKind kind, const Partition &from, const Partition &at) {
        ChainCache chains(ctx, kind);
        return chains.chain(from, vars).coefficient(at);
    };
    switch (id.family) {
    case SymFamily::G:
        return route == EvalRoute::operators
                   ? viaChain(SeriesKind::A, id.inner, id.outer)
                   : weightSum(FillingFamily::SVT, id.outer, id.inner, nVars, ctx, alphabet);
    case SymFamily::g:
        return route == EvalRoute::operators
                   ? viaChain(SeriesKind::B, id.outer, id.inner)
                   : weightSum(FillingFamily::RPP, id.outer, id.inner, nVars, ctx, alphabet);
    case SymFamily::J:
        return route == EvalRoute::operators ? viaChain(SeriesKind::Abar, id.inner, id.outer)
                                             : weightSum(FillingFamily::MSVT, conjugate(id.outer),
                                                         conjugate(id.inner), nVars, ctx, alphabet);
    case SymFamily::j:
        return route == EvalRoute::operators ? viaChain(SeriesKind::Bbar, id.outer, id.inner)
                                             : weightSum(FillingFamily::SSYT, conjugate(id.outer),
                                                         conjugate(id.inner), nVars, ctx, alphabet);
    case SymFamily::s: {
        // the b = 0 degeneration of the set-valued family: semistandard tableaux
        Poly f = route == EvalRoute::operators
                     ? viaChain(SeriesKind::A, id.inner, id.outer)
                     : weightSum(FillingFamily::SSYT, id.outer, id.inner, nVars, ctx, alphabet);
        return substituteValue(f, ctx.var("b"), 0);
    }
    case SymFamily::h: return completeHomogeneous(id.k, nVars, ctx, alphabet);
    default: return elementarySymmetric(id.k, nVars, ctx, alphabet);
    }
}

inline Poly schurPolynomial(const Partition &lam, int nVars, const TruncationContext &ctx,
                            const std::string &alphabet = "x") {
    return evaluate({SymFamily::s, lam, Partition({})}, nVars, ctx, EvalRoute::tableaux, alphabet);
}

// G_{lam/mu} (plain skew): sum of G_{lam//nu} over subdiagrams nu of mu.
inline Poly pureSkewG(const Partition &lam, const Partition &mu, int nVars, const TruncationContext &ctx,
                      const std::string &alphabet = "x") {
    std::vector<int> vars;
    for (int i = 1; i <= nVars; ++i) vars.push_back(ctx.var(alphabet, i));
    ChainCache chains(ctx, SeriesKind::A);
    Poly total(ctx);
    for (auto &nu : subdiagrams(mu)) total += chains.chain(nu, vars).coefficient(lam);
    return total;
}

// ---- Schur expansion and the basis phenomenon ----

enum class ExpansionBasis { monomial, schur, Gbasis, gbasis };

inline std::string toString(ExpansionBasis b) {
    switch (b) {
    case ExpansionBasis::monomial: return "monomial";
    case ExpansionBasis::schur: return "schur";
    case ExpansionBasis::Gbasis: return "G";
    default: return "g";
    }
}

struct SymExpansion {
    ExpansionBasis basis = ExpansionBasis::schur;
    const TruncationContext *ctx = nullptr;
    int nVars = 0;
    std::string alphabet = "x";
    std::map<Partition, Poly> terms; // coefficients are polynomials in the remaining variables
    Poly residual;                   // nonzero when the peeling could not finish within caps

    bool complete() const { return residual.isZero(); }
    bool operator==(const SymExpansion &o) const { return basis == o.basis && terms == o.terms; }
};

inline Poly swapVariables(const Poly &f, int v1, int v2) {
    Poly r(f.context());
    for (auto &[m, c] : f.terms()) {
        Monomial s = m;
        std::swap(s.e[v1], s.e[v2]);
        r.addTerm(s, c);
    }
    return r;
}

inline bool isSymmetricIn(const Poly &f, int nVars, const TruncationContext &ctx,
                          const std::string &alphabet = "x") {
    for (int i = 1; i < nVars; ++i)
        if (swapVariables(f, ctx.var(alphabet, i), ctx.var(alphabet, i + 1)) != f) return false;
    return true;
}

namespace detail {

// Schur expansion of one x-homogeneous component by repeated subtraction at the
// dominance-maximal monomial x^lam (where s_lam has coefficient 1).  Returns
// nothing if some maximal term is not of dominant shape (truncation artifact).
inline std::optional<std::map<Partition, Poly>>
schurExpandComponent(Poly comp, int nVars, const TruncationContext &ctx, const std::string &alphabet,
                     std::map<Partition, Poly> &schurCache) {
    std::map<Partition, Poly> out;
    std::vector<int> xv;
    for (int i = 1; i <= nVars; ++i) xv.push_back(ctx.var(alphabet, i));
    auto schurAt = [&](const Partition &lam) -> const Poly & {
        auto it = schurCache.find(lam);
        if (it == schurCache.end())
            it = schurCache.emplace(lam, schurPolynomial(lam, nVars, ctx, alphabet)).first;
        return it->second;
    };
    int guard = 0;
    while (!comp.isZero()) {
        if (++guard > 200000) throw std::runtime_error("schur expansion failed to terminate");
        // dominance-maximal x-part over all terms
        std::vector<int> best;
        for (auto &[m, c] : comp.terms()) {
            std::vector<int> xs;
            for (int v : xv) xs.push_back(m.e[v]);
            std::sort(xs.begin(), xs.end(), std::greater<int>());
            if (best.empty() || xs > best) best = xs;
        }
        while (!best.empty() && best.back() == 0) best.pop_back();
        Partition lam(best);
        // gather the coefficient polynomial at the dominant arrangement x^lam
        Poly coeff(ctx);
        for (auto &[m, c] : comp.terms()) {
            bool dominant = true;
            for (int i = 0; i < (int)xv.size(); ++i)
                if (m.e[xv[i]] != lam.part(i)) {
                    dominant = false;
                    break;
                }
            if (!dominant) continue;
            Monomial rest = m;
            for (int v : xv) rest.e[v] = 0;
            coeff.addTerm(rest, c);
        }
        if (coeff.isZero()) return std::nullopt;
        auto it = out.find(lam);
        if (it == out.end())
            out.emplace(lam, coeff);
        else {
            it->second += coeff;
            if (it->second.isZero()) out.erase(it);
        }
        comp -= coeff * schurAt(lam);
    }
    return out;
}

} // namespace detail

// f = sum of c_lambda(b) s_lambda(x_1..x_n); requires f symmetric and every
// homogeneous x-degree <= nVars so the Schur polynomials stay independent.
inline SymExpansion schurExpand(const Poly &f, int nVars, const std::string &alphabet = "x") {
    const TruncationContext &ctx = f.context();
    if (!isSymmetricIn(f, nVars, ctx, alphabet)) throw std::invalid_argument("polynomial is not symmetric");
    SymExpansion e;
    e.basis = ExpansionBasis::schur;
    e.ctx = &ctx;
    e.nVars = nVars;
    e.alphabet = alphabet;
    e.residual = Poly(ctx);
    std::map<Partition, Poly> cache;
    for (auto &[d, comp] : homogeneousComponents(f, alphabet)) {
        if (d > nVars) throw std::invalid_argument("x-degree exceeds the faithful variable count");
        auto ex = detail::schurExpandComponent(comp, nVars, ctx, alphabet, cache);
        if (!ex) throw std::invalid_argument("polynomial is not symmetric");
        for (auto &[lam, c] : *ex) {
            auto it = e.terms.find(lam);
            if (it == e.terms.end())
                e.terms.emplace(lam, c);
            else
                it->second += c;
        }
    }
    for (auto it = e.terms.begin(); it != e.terms.end();)
        it = it->second.isZero() ? e.terms.erase(it) : std::next(it);
    return e;
}

// f = sum of c_lambda(b) m_lambda(x_1..x_n): each orbit is read off at its
// weakly decreasing representative, so no subtraction loop is needed.
inline SymExpansion monomialExpand(const Poly &f, int nVars, const std::string &alphabet = "x") {
    const TruncationContext &ctx = f.context();
    if (!isSymmetricIn(f, nVars, ctx, alphabet)) throw std::invalid_argument("polynomial is not symmetric");
    SymExpansion e;
    e.basis = ExpansionBasis::monomial;
    e.ctx = &ctx;
    e.nVars = nVars;
    e.alphabet = alphabet;
    e.residual = Poly(ctx);
    std::vector<int> xv;
    for (int i = 1; i <= nVars; ++i) xv.push_back(ctx.var(alphabet, i));
    for (auto &[m, c] : f.terms()) {
        bool decreasing = true;
        for (size_t i = 0; i + 1 < xv.size(); ++i)
            if (m.e[xv[i]] < m.e[xv[i + 1]]) {
                decreasing = false;
                break;
            }
        if (!decreasing) continue;
        std::vector<int> parts;
        for (int v : xv)
            if (m.e[v]) parts.push_back(m.e[v]);
        Monomial rest = m;
        for (int v : xv) rest.e[v] = 0;
        auto it = e.terms.find(Partition(parts));
        if (it == e.terms.end()) it = e.terms.emplace(Partition(parts), Poly(ctx)).first;
        it->second.addTerm(rest, c);
    }
    return e;
}

// Conjugate every index partition (the classical involution on the Schur basis).
inline SymExpansion omega(const SymExpansion &e) {
    if (e.basis != ExpansionBasis::schur)
        throw std::invalid_argument("conjugation acts on schur-basis expansions");
    SymExpansion r = e;
    r.terms.clear();
    for (auto &[lam, c] : e.terms) {
        Partition conj = conjugate(lam);
        if (conj.length() > e.nVars)
            throw std::invalid_argument("conjugate index needs more variables than available");
        r.terms.emplace(conj, c);
    }
    return r;
}

inline Poly evaluateExpansion(const SymExpansion &e) {
    const TruncationContext &ctx = *e.ctx;
    std::vector<int> vars;
    for (int i = 1; i <= e.nVars; ++i) vars.push_back(ctx.var(e.alphabet, i));
    Poly total(ctx);
    ChainCache chainsA(ctx, SeriesKind::A), chainsB(ctx, SeriesKind::B);
    for (auto &[lam, c] : e.terms) {
        switch (e.basis) {
        case ExpansionBasis::schur: total += c * schurPolynomial(lam, e.nVars, ctx, e.alphabet); break;
        case ExpansionBasis::Gbasis: total += c * chainsA.chain(Partition({}), vars).coefficient(lam); break;
        case ExpansionBasis::gbasis: total += c * chainsB.chain(lam, vars).coefficient(Partition({})); break;
        default: throw std::invalid_argument("cannot evaluate a monomial expansion");
        }
    }
    return total;
}

namespace detail {

// Peel a symmetric polynomial against a graded family whose leading Schur term
// is s_lambda: from the bottom degree for G (higher-degree tails), from the top
// for g (lower-degree tails).
inline SymExpansion peelExpansion(const Poly &f, int nVars, const std::string &alphabet, bool fromTop,
                                  ExpansionBasis basis,
                                  const std::function<Poly(const Partition &)> &familyPoly) {
    const TruncationContext &ctx = f.context();
    if (!isSymmetricIn(f, nVars, ctx, alphabet)) throw std::invalid_argument("polynomial is not symmetric");
    SymExpansion e;
    e.basis = basis;
    e.ctx = &ctx;
    e.nVars = nVars;
    e.alphabet = alphabet;
    e.residual = Poly(ctx);
    std::map<Partition, Poly> cache;
    Poly R = f;
    int guard = 0;
    while (!R.isZero()) {
        if (++guard > 5000) {
            e.residual = R;
            return e;
        }
        auto comps = homogeneousComponents(R, alphabet);
        auto pick = fromTop ? std::prev(comps.end()) : comps.begin();
        int d = pick->first;
        if (d > nVars) {
            e.residual = R;
            return e;
        }
        auto ex = schurExpandComponent(pick->second, nVars, ctx, alphabet, cache);
        if (!ex) {
            e.residual = R;
            return e;
        }
        for (auto &[lam, c] : *ex) {
            auto it = e.terms.find(lam);
            if (it == e.terms.end())
                e.terms.emplace(lam, c);
            else
                it->second += c;
            R -= c * familyPoly(lam);
        }
    }
    for (auto it = e.terms.begin(); it != e.terms.end();)
        it = it->second.isZero() ? e.terms.erase(it) : std::next(it);
    return e;
}

} // namespace detail

inline SymExpansion GBasisExpand(const Poly &f, int nVars, const std::string &alphabet = "x") {
    const TruncationContext &ctx = f.context();
    std::vector<int> vars;
    for (int i = 1; i <= nVars; ++i) vars.push_back(ctx.var(alphabet, i));
    auto chains = std::make_shared<ChainCache>(ctx, SeriesKind::A);
    return detail::peelExpansion(f, nVars, alphabet, /*fromTop=*/false, ExpansionBasis::Gbasis,
                                 [&ctx, vars, chains](const Partition &lam) {
                                     return chains->chain(Partition({}), vars).coefficient(lam);
                                 });
}

inline SymExpansion gBasisExpand(const Poly &f, int nVars, const std::string &alphabet = "x") {
    const TruncationContext &ctx = f.context();
    std::vector<int> vars;
    for (int i = 1; i <= nVars; ++i) vars.push_back(ctx.var(alphabet, i));
    auto chains = std::make_shared<ChainCache>(ctx, SeriesKind::B);
    return detail::peelExpansion(f, nVars, alphabet, /*fromTop=*/true, ExpansionBasis::gbasis,
                                 [&ctx, vars, chains](const Partition &lam) {
                                     return chains->chain(lam, vars).coefficient(Partition({}));
                                 });
}

// ---- damping ----

// j vanishes in n variables as soon as the first part outgrows mu_1 + n; the
// g family admits no such bound (single columns give nonzero values).
inline VerificationReport dampingCheck(SymFamily family, int nVars, int bound,
                                       const TruncationContext &ctx) {
    VerificationReport rep;
    Stopwatch clock;
    if (family == SymFamily::j) {
        rep.name = "damping(j)";
        for (auto &lam : partitionsUpTo(bound))
            for (auto &mu : subdiagrams(lam)) {
                if (lam.part(0) <= mu.part(0) + nVars) continue;
                Poly v = evaluate({SymFamily::j, lam, mu}, nVars, ctx, EvalRoute::tableaux);
                ++rep.casesChecked;
                if (!v.isZero())
                    rep.recordFailure("nonzero value at " + lam.toString() + "/" + mu.toString());
            }
    } else if (family == SymFamily::g) {
        rep.name = "damping(g)";
        rep.note = "bound fails for this family; single-column witnesses are nonzero";
        for (int h = nVars + 1; h <= bound; ++h) {
            Partition lam(std::vector<int>(h, 1));
            Poly v = evaluate({SymFamily::g, lam, Partition({})}, nVars, ctx, EvalRoute::tableaux);
            ++rep.casesChecked;
            if (v.isZero()) rep.recordFailure("expected nonzero witness at " + lam.toString());
        }
    } else {
        throw std::invalid_argument("damping check applies to the j and g families");
    }
    rep.wallSeconds = clock.seconds();
    return rep;
}

} // namespace gsym
