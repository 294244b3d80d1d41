#pragma once
#include <functional>
#include <vector>

#include "module_element.hpp"
#include "report.hpp"

namespace gsym {

// ---- column operators ----

enum class ColumnKind { u, d, ut, dt }; // raise, lower, deformed raise, deformed lower

struct ColumnOperator {
    ColumnKind kind;
    int column; // i >= 1
};

// Action on a single basis partition.  The deformed kinds read the deformation
// parameter from the scalar alphabet "b" of the context.
inline ModuleElement applyColumnToBasis(const ColumnOperator &op, const TruncationContext &ctx,
                                        const Partition &p) {
    ModuleElement r(ctx);
    switch (op.kind) {
    case ColumnKind::u: {
        if (auto q = addBoxInColumn(p, op.column)) r.add(*q, Poly::constant(ctx, 1));
        break;
    }
    case ColumnKind::d: {
        if (auto q = removeBoxInColumn(p, op.column)) r.add(*q, Poly::constant(ctx, 1));
        break;
    }
    case ColumnKind::ut: { // u_i - b * u_i d_i
        if (auto q = addBoxInColumn(p, op.column)) r.add(*q, Poly::constant(ctx, 1));
        if (removeBoxInColumn(p, op.column)) // u_i d_i p = p when the column-i box is removable
            r.add(p, -Poly::variable(ctx, ctx.var("b")));
        break;
    }
    case ColumnKind::dt: { // d_i + b d_i^2 + b^2 d_i^3 + ... (finite)
        Poly bpow = Poly::constant(ctx, 1);
        Poly b = Poly::variable(ctx, ctx.var("b"));
        Partition q = p;
        while (true) {
            auto next = removeBoxInColumn(q, op.column);
            if (!next) break;
            q = *next;
            r.add(q, bpow);
            bpow = bpow * b;
        }
        break;
    }
    }
    return r;
}

inline ModuleElement applyColumn(const ColumnOperator &op, const ModuleElement &v) {
    const auto &ctx = v.context();
    ModuleElement r(ctx);
    for (auto &[p, coeff] : v.terms()) {
        ModuleElement img = applyColumnToBasis(op, ctx, p);
        for (auto &[q, c] : img.terms()) r.add(q, coeff * c);
    }
    return r;
}

// Apply a product of column operators written left-to-right; the rightmost
// factor acts first.
inline ModuleElement applyWord(const std::vector<ColumnOperator> &word, ModuleElement v) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = applyColumn(*it, v);
    return v;
}

// ---- series operators ----

enum class SeriesKind { A, B, Abar, Bbar };

struct SeriesOperator {
    SeriesKind kind;
    int variable; // variable index in the context; its alphabet must be capped
};

namespace detail {
inline int seriesCap(const TruncationContext &ctx, int variable) {
    for (int a = 0; a < ctx.alphabetCount(); ++a) {
        const Alphabet &al = ctx.alphabetAt(a);
        int first = ctx.var(al.name, 1);
        if (variable >= first && variable < first + al.count) {
            if (al.cap < 0) throw std::invalid_argument("series variable must belong to a capped alphabet");
            return al.cap;
        }
    }
    throw std::out_of_range("bad series variable");
}
} // namespace detail

// A(x):   ... (1 + x ut_2)(1 + x ut_1), rightmost factor first, columns 1..K,
//         K = maxColumn + cap + 1 (higher columns cannot contribute within cap).
// B(y):   (1 + y dt_1)(1 + y dt_2) ..., rightmost first: columns maxColumn..1.
// Abar(x): (1 - x ut_1)^{-1}(1 - x ut_2)^{-1} ..., rightmost first: columns K..1,
//          each inverse factor expanded as sum_k x^k ut_i^k to the cap.
// Bbar(y): ... (1 - y dt_2)^{-1}(1 - y dt_1)^{-1}, rightmost first: columns 1..maxColumn.
inline ModuleElement applySeries(const SeriesOperator &op, const ModuleElement &v) {
    const auto &ctx = v.context();
    int D = detail::seriesCap(ctx, op.variable);
    Poly x = Poly::variable(ctx, op.variable);
    ModuleElement r = v;
    int M = v.maxColumn();
    switch (op.kind) {
    case SeriesKind::A: {
        int K = M + D + 1;
        for (int i = 1; i <= K; ++i) r += applyColumn({ColumnKind::ut, i}, r).scaled(x);
        break;
    }
    case SeriesKind::B: {
        for (int i = M; i >= 1; --i) r += applyColumn({ColumnKind::dt, i}, r).scaled(x);
        break;
    }
    case SeriesKind::Abar: {
        int K = M + D + 1;
        for (int i = K; i >= 1; --i) {
            ModuleElement acc = r, term = r;
            for (int k = 1; k <= D; ++k) {
                term = applyColumn({ColumnKind::ut, i}, term).scaled(x);
                if (term.isZero()) break;
                acc += term;
            }
            r = acc;
        }
        break;
    }
    case SeriesKind::Bbar: {
        for (int i = 1; i <= M; ++i) {
            ModuleElement acc = r, term = r;
            for (int k = 1; k <= D; ++k) {
                term = applyColumn({ColumnKind::dt, i}, term).scaled(x);
                if (term.isZero()) break;
                acc += term;
            }
            r = acc;
        }
        break;
    }
    }
    return r;
}

// <bra, opProduct . ket>: product written left-to-right, rightmost factor acts first.
inline Poly matrixElement(const Partition &bra, const std::vector<SeriesOperator> &ops,
                          const Partition &ket, const TruncationContext &ctx) {
    ModuleElement v = ModuleElement::basis(ctx, ket);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) v = applySeries(*it, v);
    return v.coefficient(bra);
}

// Chain of one series kind over several variables (applied in the given order),
// cached by base shape.  One chain yields a whole family of coefficients.
class ChainCache {
    std::map<std::pair<Partition, std::vector<int>>, ModuleElement> cache_;
    const TruncationContext *ctx_;
    SeriesKind kind_;

public:
    ChainCache(const TruncationContext &ctx, SeriesKind kind) : ctx_(&ctx), kind_(kind) {}

    const ModuleElement &chain(const Partition &base, const std::vector<int> &vars) {
        auto key = std::make_pair(base, vars);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        ModuleElement v = ModuleElement::basis(*ctx_, base);
        for (int var : vars) v = applySeries({kind_, var}, v);
        return cache_.emplace(std::move(key), std::move(v)).first->second;
    }
};

// ---- relation battery ----

namespace detail {

using Word = std::vector<ColumnOperator>;
using Term = std::pair<int, Word>; // signed word

inline void checkRelation(VerificationReport &rep, const TruncationContext &ctx, const std::string &tag,
                          const std::vector<Partition> &lams, int i,
                          const std::vector<Term> &terms) {
    for (auto &lam : lams) {
        ModuleElement acc(ctx);
        for (auto &[sign, word] : terms) {
            ModuleElement t = applyWord(word, ModuleElement::basis(ctx, lam));
            acc += sign < 0 ? t.scaled(Poly::constant(ctx, -1)) : t;
        }
        ++rep.casesChecked;
        if (!acc.isZero()) {
            std::ostringstream os;
            os << tag << " (i=" << i << ") fails on " << lam.toString();
            rep.recordFailure(os.str());
        }
    }
}

} // namespace detail

enum class LemmaFamily { schur, deformed, yangbaxter };

// Applies both sides of every listed commutation relation to all partitions of
// weight <= maxWeight (column indices up to maxWeight + 2 by default).
inline VerificationReport verifyLemmaRelations(LemmaFamily which, int maxWeight, int xcap = 2, int ycap = 2,
                                               int bcap = -1, int maxColumnIndex = -1) {
    using detail::Word;
    VerificationReport rep;
    Stopwatch clock;
    int colMax = maxColumnIndex > 0 ? maxColumnIndex : maxWeight + 2;
    auto lams = partitionsUpTo(maxWeight);

    auto U = [](int i) { return ColumnOperator{ColumnKind::u, i}; };
    auto Dn = [](int i) { return ColumnOperator{ColumnKind::d, i}; };
    auto Ut = [](int i) { return ColumnOperator{ColumnKind::ut, i}; };
    auto Dt = [](int i) { return ColumnOperator{ColumnKind::dt, i}; };

    if (which == LemmaFamily::schur) {
        rep.name = "relations(schur)";
        TruncationContext ctx({Alphabet::scalar("b", bcap)});
        for (int i = 1; i <= colMax; ++i) {
            detail::checkRelation(rep, ctx, "[u_{i+2},u_i]", lams, i,
                                  {{1, Word{U(i + 2), U(i)}}, {-1, Word{U(i), U(i + 2)}}});
            detail::checkRelation(rep, ctx, "[d_{i+2},d_i]", lams, i,
                                  {{1, Word{Dn(i + 2), Dn(i)}}, {-1, Word{Dn(i), Dn(i + 2)}}});
            detail::checkRelation(rep, ctx, "knuth uu.u", lams, i,
                                  {{1, Word{U(i + 1), U(i), U(i)}}, {-1, Word{U(i), U(i + 1), U(i)}}});
            detail::checkRelation(
                rep, ctx, "knuth uu.v", lams, i,
                {{1, Word{U(i + 1), U(i), U(i + 1)}}, {-1, Word{U(i + 1), U(i + 1), U(i)}}});
            detail::checkRelation(rep, ctx, "knuth dd.u", lams, i,
                                  {{1, Word{Dn(i), Dn(i + 1), Dn(i)}}, {-1, Word{Dn(i), Dn(i), Dn(i + 1)}}});
            detail::checkRelation(
                rep, ctx, "knuth dd.v", lams, i,
                {{1, Word{Dn(i), Dn(i + 1), Dn(i + 1)}}, {-1, Word{Dn(i + 1), Dn(i), Dn(i + 1)}}});
            detail::checkRelation(rep, ctx, "[d_{i+1},u_i]", lams, i,
                                  {{1, Word{Dn(i + 1), U(i)}}, {-1, Word{U(i), Dn(i + 1)}}});
            detail::checkRelation(rep, ctx, "[d_i,u_{i+1}]", lams, i,
                                  {{1, Word{Dn(i), U(i + 1)}}, {-1, Word{U(i + 1), Dn(i)}}});
            detail::checkRelation(rep, ctx, "d_{i+1}u_{i+1}=u_id_i", lams, i,
                                  {{1, Word{Dn(i + 1), U(i + 1)}}, {-1, Word{U(i), Dn(i)}}});
            detail::checkRelation(rep, ctx, "[u_id_i,u_{i+1}u_i]", lams, i,
                                  {{1, Word{U(i), Dn(i), U(i + 1), U(i)}},
                                   {-1, Word{U(i + 1), U(i), U(i), Dn(i)}}});
        }
        detail::checkRelation(rep, ctx, "d_1u_1=1", lams, 1, {{1, Word{Dn(1), U(1)}}, {-1, Word{}}});
    } else if (which == LemmaFamily::deformed) {
        rep.name = "relations(deformed)";
        TruncationContext ctx({Alphabet::scalar("b", bcap)});
        for (int i = 1; i <= colMax; ++i) {
            detail::checkRelation(rep, ctx, "[ut_{i+2},ut_i]", lams, i,
                                  {{1, Word{Ut(i + 2), Ut(i)}}, {-1, Word{Ut(i), Ut(i + 2)}}});
            detail::checkRelation(rep, ctx, "[dt_{i+2},dt_i]", lams, i,
                                  {{1, Word{Dt(i + 2), Dt(i)}}, {-1, Word{Dt(i), Dt(i + 2)}}});
            detail::checkRelation(rep, ctx, "[ut_{i+1}ut_i, ut_i+ut_{i+1}]", lams, i,
                                  {{1, Word{Ut(i + 1), Ut(i), Ut(i)}},
                                   {1, Word{Ut(i + 1), Ut(i), Ut(i + 1)}},
                                   {-1, Word{Ut(i), Ut(i + 1), Ut(i)}},
                                   {-1, Word{Ut(i + 1), Ut(i + 1), Ut(i)}}});
            detail::checkRelation(rep, ctx, "[dt_idt_{i+1}, dt_i+dt_{i+1}]", lams, i,
                                  {{1, Word{Dt(i), Dt(i + 1), Dt(i)}},
                                   {1, Word{Dt(i), Dt(i + 1), Dt(i + 1)}},
                                   {-1, Word{Dt(i), Dt(i), Dt(i + 1)}},
                                   {-1, Word{Dt(i + 1), Dt(i), Dt(i + 1)}}});
            detail::checkRelation(rep, ctx, "[ut_{i+2},dt_i]", lams, i,
                                  {{1, Word{Ut(i + 2), Dt(i)}}, {-1, Word{Dt(i), Ut(i + 2)}}});
            detail::checkRelation(rep, ctx, "[ut_i,dt_{i+2}]", lams, i,
                                  {{1, Word{Ut(i), Dt(i + 2)}}, {-1, Word{Dt(i + 2), Ut(i)}}});
            detail::checkRelation(rep, ctx, "[ut_{i+1},dt_i]", lams, i,
                                  {{1, Word{Ut(i + 1), Dt(i)}}, {-1, Word{Dt(i), Ut(i + 1)}}});
        }
        detail::checkRelation(rep, ctx, "dt_1ut_1=1", lams, 1, {{1, Word{Dt(1), Ut(1)}}, {-1, Word{}}});
    } else {
        rep.name = "relations(yangbaxter)";
        // (1 - xy ut_i dt_i)^{-1}(1 + x ut_i)(1 + y dt_{i+1})
        //   = (1 - xy dt_{i+1} ut_{i+1})^{-1}(1 + y dt_{i+1})(1 + x ut_i),
        // inverse factors as geometric series truncated in xy-degree.
        TruncationContext ctx({Alphabet::scalar("b", bcap), Alphabet::vars("x", 1, xcap),
                               Alphabet::vars("y", 1, ycap)});
        Poly x = Poly::variable(ctx, ctx.var("x", 1));
        Poly y = Poly::variable(ctx, ctx.var("y", 1));
        int cap = std::min(xcap, ycap);
        auto geomPair = [&](const ColumnOperator &first, const ColumnOperator &second,
                            const ModuleElement &v) {
            ModuleElement out = v, cur = v;
            Poly xy = x * y, coeff = xy;
            for (int k = 1; k <= cap; ++k) {
                cur = applyColumn(first, applyColumn(second, cur));
                out += cur.scaled(coeff);
                coeff = coeff * xy;
            }
            return out;
        };
        for (int i = 1; i <= colMax; ++i)
            for (auto &lam : lams) {
                ModuleElement v = ModuleElement::basis(ctx, lam);
                ModuleElement w = v + applyColumn(Dt(i + 1), v).scaled(y);
                w = w + applyColumn(Ut(i), w).scaled(x);
                ModuleElement lhs = geomPair(Ut(i), Dt(i), w);
                ModuleElement w2 = v + applyColumn(Ut(i), v).scaled(x);
                w2 = w2 + applyColumn(Dt(i + 1), w2).scaled(y);
                ModuleElement rhs = geomPair(Dt(i + 1), Ut(i + 1), w2);
                ++rep.casesChecked;
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "exchange relation (i=" << i << ") fails on " << lam.toString();
                    rep.recordFailure(os.str());
                }
            }
    }
    rep.wallSeconds = clock.seconds();
    return rep;
}

} // namespace gsym
