#pragma once
#include <functional>
#include <map>
#include <vector>

#include "partition.hpp"
#include "polynomial.hpp"

namespace gsym {

enum class FillingFamily { SVT, RPP, MSVT, SSYT, ISVT, ST, IT, SYT };

inline std::string toString(FillingFamily f) {
    switch (f) {
    case FillingFamily::SVT: return "SVT";
    case FillingFamily::RPP: return "RPP";
    case FillingFamily::MSVT: return "MSVT";
    case FillingFamily::SSYT: return "SSYT";
    case FillingFamily::ISVT: return "ISVT";
    case FillingFamily::ST: return "ST";
    case FillingFamily::IT: return "IT";
    default: return "SYT";
    }
}

inline FillingFamily fillingFamilyFromString(const std::string &s) {
    for (auto f : {FillingFamily::SVT, FillingFamily::RPP, FillingFamily::MSVT, FillingFamily::SSYT,
                   FillingFamily::ISVT, FillingFamily::ST, FillingFamily::IT, FillingFamily::SYT})
        if (toString(f) == s) return f;
    throw std::invalid_argument("unknown filling family: " + s);
}

// Set-valued families fill the skew cells plus the removable corners of the
// inner shape; the corner cells may stay empty.
inline bool usesCornerCells(FillingFamily f) {
    return f == FillingFamily::SVT || f == FillingFamily::MSVT || f == FillingFamily::ISVT;
}

using FillingContent = std::map<Cell, std::vector<int>>; // sorted entries per cell

struct TableauFilling {
    FillingFamily family;
    Partition outer, inner;
    FillingContent content;
};

namespace detail {

struct FillCell {
    int row, col;
    bool corner;
};

// Cells visited in row-major order, so the left and upper neighbors of a cell
// are always placed before it.
inline std::vector<FillCell> fillCells(FillingFamily fam, const Partition &outer, const Partition &inner) {
    std::vector<FillCell> cs;
    if (usesCornerCells(fam))
        for (auto &[r, c] : removableBoxes(inner)) cs.push_back({r, c, true});
    for (auto &[r, c] : skewCells(outer, inner)) cs.push_back({r, c, false});
    std::sort(cs.begin(), cs.end(), [](const FillCell &a, const FillCell &b) {
        return std::make_pair(a.row, a.col) < std::make_pair(b.row, b.col);
    });
    return cs;
}

inline const std::vector<int> *neighbor(const FillingContent &cm, int r, int c) {
    auto it = cm.find({r, c});
    if (it == cm.end() || it->second.empty()) return nullptr;
    return &it->second;
}

// Subsets of a sorted pool in deterministic order: by size, then lexicographic.
inline void forEachSubset(const std::vector<int> &pool, int minSize,
                          const std::function<void(const std::vector<int> &)> &emit) {
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int start, int need) {
        if (need == 0) {
            emit(cur);
            return;
        }
        for (int i = start; i + need <= (int)pool.size(); ++i) {
            cur.push_back(pool[i]);
            rec(i + 1, need - 1);
            cur.pop_back();
        }
    };
    for (int size = minSize; size <= (int)pool.size(); ++size) rec(0, size);
}

// Multisets over [n] with every value's count and the total bounded by limit.
inline void forEachMultiset(int n, int limit, int minSize,
                            const std::function<void(const std::vector<int> &)> &emit) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int v) {
        if ((int)cur.size() > limit) return;
        if (v > n) {
            if ((int)cur.size() >= minSize) emit(cur);
            return;
        }
        for (int cnt = 0; cnt <= limit - (int)cur.size(); ++cnt) {
            for (int k = 0; k < cnt; ++k) cur.push_back(v);
            rec(v + 1);
            for (int k = 0; k < cnt; ++k) cur.pop_back();
        }
    };
    rec(1);
}

} // namespace detail

// Depth-first enumeration of all valid fillings with entries in [n], cells in
// row-major order.  maxTotal bounds the total number of entries for the
// set-valued families (all others are finite without it); MSVT requires it.
inline void forEachFilling(FillingFamily fam, const Partition &outer, const Partition &inner, int n,
                           int maxTotal, const std::function<void(const FillingContent &)> &emit) {
    if (!contains(outer, inner)) throw std::invalid_argument("inner shape not contained in outer");
    if (fam == FillingFamily::MSVT && maxTotal < 0)
        throw std::invalid_argument("multiset enumeration needs a total entry bound");
    auto cells = detail::fillCells(fam, outer, inner);
    FillingContent cm;

    if (fam == FillingFamily::SVT || fam == FillingFamily::MSVT) {
        // rows weakly increase, columns strictly increase, sets (or multisets)
        int total = 0;
        std::function<void(size_t)> rec = [&](size_t i) {
            if (i == cells.size()) {
                emit(cm);
                return;
            }
            auto [r, c, corner] = cells[i];
            auto tryContent = [&](const std::vector<int> &o) {
                if (maxTotal >= 0 && total + (int)o.size() > maxTotal) return;
                if (!o.empty()) {
                    if (auto *L = detail::neighbor(cm, r, c - 1); L && L->back() > o.front()) return;
                    if (auto *T = detail::neighbor(cm, r - 1, c); T && T->back() >= o.front()) return;
                }
                cm[{r, c}] = o;
                total += (int)o.size();
                rec(i + 1);
                total -= (int)o.size();
                cm.erase({r, c});
            };
            int minSize = corner ? 0 : 1;
            if (fam == FillingFamily::SVT) {
                std::vector<int> pool(n);
                for (int v = 1; v <= n; ++v) pool[v - 1] = v;
                detail::forEachSubset(pool, minSize, tryContent);
            } else {
                detail::forEachMultiset(n, maxTotal, minSize, tryContent);
            }
        };
        rec(0);
        return;
    }

    if (fam == FillingFamily::ISVT) {
        // sets of globally unused values, rows and columns strictly increase,
        // every value of [n] used exactly once overall
        unsigned used = 0;
        std::function<void(size_t)> rec = [&](size_t i) {
            if (i == cells.size()) {
                if (used == (n ? (1u << n) - 1 : 0u)) emit(cm);
                return;
            }
            auto [r, c, corner] = cells[i];
            std::vector<int> avail;
            for (int v = 1; v <= n; ++v)
                if (!(used >> (v - 1) & 1)) avail.push_back(v);
            detail::forEachSubset(avail, corner ? 0 : 1, [&](const std::vector<int> &o) {
                if (!o.empty()) {
                    if (auto *L = detail::neighbor(cm, r, c - 1); L && L->back() >= o.front()) return;
                    if (auto *T = detail::neighbor(cm, r - 1, c); T && T->back() >= o.front()) return;
                }
                cm[{r, c}] = o;
                for (int v : o) used |= 1u << (v - 1);
                rec(i + 1);
                for (int v : o) used &= ~(1u << (v - 1));
                cm.erase({r, c});
            });
        };
        rec(0);
        return;
    }

    // single-entry families
    bool rowStrict = fam == FillingFamily::ST || fam == FillingFamily::IT || fam == FillingFamily::SYT;
    bool colStrict = fam == FillingFamily::SSYT || fam == FillingFamily::IT || fam == FillingFamily::SYT;
    bool needAll = fam == FillingFamily::ST || fam == FillingFamily::IT;
    bool bijective = fam == FillingFamily::SYT;
    int top = bijective ? (int)cells.size() : n;
    unsigned used = 0;
    std::map<int, int> valueColumn; // ST: each value confined to one column
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == cells.size()) {
            if (!needAll || used == (n ? (1u << n) - 1 : 0u)) emit(cm);
            return;
        }
        auto [r, c, corner] = cells[i];
        (void)corner;
        for (int v = 1; v <= top; ++v) {
            if (bijective && (used >> (v - 1) & 1)) continue;
            if (auto *L = detail::neighbor(cm, r, c - 1)) {
                if (rowStrict ? v <= L->back() : v < L->back()) continue;
            }
            if (auto *T = detail::neighbor(cm, r - 1, c)) {
                if (colStrict ? v <= T->back() : v < T->back()) continue;
            }
            if (fam == FillingFamily::ST) {
                auto it = valueColumn.find(v);
                if (it != valueColumn.end() && it->second != c) continue;
            }
            cm[{r, c}] = {v};
            unsigned oldUsed = used;
            used |= 1u << (v - 1);
            int oldCol = -1;
            if (fam == FillingFamily::ST) {
                auto it = valueColumn.find(v);
                oldCol = it == valueColumn.end() ? -1 : it->second;
                valueColumn[v] = c;
            }
            rec(i + 1);
            if (fam == FillingFamily::ST) {
                if (oldCol < 0)
                    valueColumn.erase(v);
                else
                    valueColumn[v] = oldCol;
            }
            used = oldUsed;
            cm.erase({r, c});
        }
    };
    rec(0);
}

inline std::vector<TableauFilling> enumerateFillings(FillingFamily fam, const Partition &outer,
                                                     const Partition &inner, int n, int maxTotal = -1) {
    std::vector<TableauFilling> out;
    forEachFilling(fam, outer, inner, n, maxTotal,
                   [&](const FillingContent &cm) { out.push_back({fam, outer, inner, cm}); });
    return out;
}

// ---- counts ----

inline Int countISVT(const DoubleSlashShape &s, int n) {
    Int c = 0;
    forEachFilling(FillingFamily::ISVT, s.outer, s.inner, n, -1, [&](const FillingContent &) { ++c; });
    return c;
}

inline Int countST(const SkewShape &s, int n) {
    Int c = 0;
    forEachFilling(FillingFamily::ST, s.outer, s.inner, n, -1, [&](const FillingContent &) { ++c; });
    return c;
}

inline Int countIT(const SkewShape &s, int n) {
    Int c = 0;
    forEachFilling(FillingFamily::IT, s.outer, s.inner, n, -1, [&](const FillingContent &) { ++c; });
    return c;
}

inline Int countSYT(const SkewShape &s) {
    Int c = 0;
    forEachFilling(FillingFamily::SYT, s.outer, s.inner, 0, -1, [&](const FillingContent &) { ++c; });
    return c;
}

// ---- weight generating functions ----

// Weights use the scalar "b" of the context:
//   SVT/MSVT: (-b)^{|T| - |skew|} * prod over entries e of x_e
//   RPP:      b^{|skew| - sum_i c_i} * prod x_i^{c_i}, c_i = #columns containing i
//   SSYT:     prod x_i^{r_i} (x_i + b)^{a_i - r_i}, r_i = #rows with i, a_i = #entries i
inline Poly weightSum(FillingFamily fam, const Partition &outer, const Partition &inner, int nVars,
                      const TruncationContext &ctx, const std::string &alphabet = "x") {
    Poly b = Poly::variable(ctx, ctx.var("b"));
    auto x = [&](int i) { return Poly::variable(ctx, ctx.var(alphabet, i)); };
    int skewSize = (int)skewCells(outer, inner).size();
    Poly total(ctx);

    switch (fam) {
    case FillingFamily::SVT:
    case FillingFamily::MSVT: {
        // the x-degree of a filling's weight is its entry count, so the
        // alphabet cap bounds the search
        int cap = ctx.alphabetAt(ctx.alphabetIndex(alphabet)).cap;
        int bcap = ctx.alphabetAt(ctx.alphabetIndex("b")).cap;
        int maxTotal = cap;
        if (bcap >= 0) {
            int viaB = skewSize + bcap;
            maxTotal = maxTotal < 0 ? viaB : std::min(maxTotal, viaB);
        }
        forEachFilling(fam, outer, inner, nVars, maxTotal, [&](const FillingContent &cm) {
            int tot = 0;
            Poly w = Poly::constant(ctx, 1);
            for (auto &[cell, entries] : cm) {
                tot += (int)entries.size();
                for (int e : entries) w = w * x(e);
            }
            total += (tot - skewSize) % 2 ? -w * b.pow(tot - skewSize) : w * b.pow(tot - skewSize);
        });
        break;
    }
    case FillingFamily::RPP: {
        forEachFilling(fam, outer, inner, nVars, -1, [&](const FillingContent &cm) {
            std::map<int, std::set<int>> columnsOf;
            for (auto &[cell, entries] : cm) columnsOf[entries[0]].insert(cell.second);
            int t = 0;
            Poly w = Poly::constant(ctx, 1);
            for (auto &[v, cols] : columnsOf) {
                t += (int)cols.size();
                w = w * x(v).pow((int)cols.size());
            }
            assert(t <= skewSize);
            total += w * b.pow(skewSize - t);
        });
        break;
    }
    case FillingFamily::SSYT: {
        forEachFilling(fam, outer, inner, nVars, -1, [&](const FillingContent &cm) {
            std::map<int, std::set<int>> rowsOf;
            std::map<int, int> countOf;
            for (auto &[cell, entries] : cm) {
                rowsOf[entries[0]].insert(cell.first);
                ++countOf[entries[0]];
            }
            Poly w = Poly::constant(ctx, 1);
            for (auto &[v, rows] : rowsOf) {
                int ri = (int)rows.size(), ai = countOf[v];
                w = w * x(v).pow(ri) * (x(v) + b).pow(ai - ri);
            }
            total += w;
        });
        break;
    }
    default: throw std::invalid_argument("weightSum is defined for SVT, RPP, MSVT, SSYT");
    }
    return total;
}

} // namespace gsym
