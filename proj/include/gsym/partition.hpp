#pragma once
#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace gsym {

// Integer partition: weakly decreasing positive parts, no trailing zeros.
class Partition {
    std::vector<int> parts_;

    void normalize() {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (size_t i = 0; i + 1 < parts_.size(); ++i)
            if (parts_[i] < parts_[i + 1]) throw std::invalid_argument("parts must be weakly decreasing");
        for (int p : parts_)
            if (p < 0) throw std::invalid_argument("parts must be nonnegative");
    }

public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : parts_(parts) { normalize(); }
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { normalize(); }

    const std::vector<int> &parts() const { return parts_; }
    int length() const { return (int)parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int weight() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    int part(int i) const { return i >= 0 && i < (int)parts_.size() ? parts_[i] : 0; } // 0-based, 0 beyond
    int maxColumn() const { return parts_.empty() ? 0 : parts_[0]; }

    bool operator==(const Partition &o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition &o) const { return parts_ != o.parts_; }
    // Canonical enumeration order: by weight, then lexicographically descending parts.
    bool operator<(const Partition &o) const {
        int w1 = weight(), w2 = o.weight();
        if (w1 != w2) return w1 < w2;
        return parts_ > o.parts_;
    }

    std::string toString() const {
        if (parts_.empty()) return "-";
        std::ostringstream os;
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ",";
            os << parts_[i];
        }
        return os.str();
    }
};

using Cell = std::pair<int, int>; // (row, col), 1-based

inline Partition conjugate(const Partition &p) {
    std::vector<int> c;
    for (int j = 1; j <= p.maxColumn(); ++j) {
        int h = 0;
        for (int x : p.parts())
            if (x >= j) ++h;
        c.push_back(h);
    }
    return Partition(c);
}

inline bool contains(const Partition &lam, const Partition &mu) {
    if (mu.length() > lam.length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (lam.part(i) < mu.part(i)) return false;
    return true;
}

// Number of rows of length >= c (height of column c), c >= 1.
inline int columnHeight(const Partition &p, int c) {
    int h = 0;
    for (int x : p.parts())
        if (x >= c) ++h;
    return h;
}

// Add a box at the bottom of column c if the result is a partition.
inline std::optional<Partition> addBoxInColumn(const Partition &p, int c) {
    int h = columnHeight(p, c);
    if (c > 1 && columnHeight(p, c - 1) <= h) return std::nullopt;
    std::vector<int> q = p.parts();
    if (h < (int)q.size())
        q[h] += 1;
    else
        q.push_back(1);
    assert(q[h] == c);
    return Partition(q);
}

// Remove the box at the bottom of column c if the result is a partition.
inline std::optional<Partition> removeBoxInColumn(const Partition &p, int c) {
    int h = columnHeight(p, c);
    if (h == 0 || columnHeight(p, c + 1) >= h) return std::nullopt;
    std::vector<int> q = p.parts();
    q[h - 1] -= 1;
    return Partition(q);
}

// Removable corner cells of p, as (row, col).
inline std::vector<Cell> removableBoxes(const Partition &p) {
    std::vector<Cell> res;
    for (int i = 0; i < p.length(); ++i)
        if (i + 1 == p.length() || p.part(i + 1) < p.part(i)) res.push_back({i + 1, p.part(i)});
    return res;
}

// i(p): number of distinct part sizes == number of removable corners.
inline int distinctPartCount(const Partition &p) { return (int)removableBoxes(p).size(); }

// Skew diagram cells of lam/mu in row-major order.  Requires mu included in lam.
inline std::vector<Cell> skewCells(const Partition &lam, const Partition &mu) {
    std::vector<Cell> res;
    for (int i = 0; i < lam.length(); ++i)
        for (int j = mu.part(i) + 1; j <= lam.part(i); ++j) res.push_back({i + 1, j});
    return res;
}

inline int columnCount(const std::vector<Cell> &cells) {
    std::set<int> cs;
    for (auto &[r, c] : cells) cs.insert(c);
    return (int)cs.size();
}

inline int rowCount(const std::vector<Cell> &cells) {
    std::set<int> rs;
    for (auto &[r, c] : cells) rs.insert(r);
    return (int)rs.size();
}

// Skew shape lam/mu.  Validity (inner contained in outer) checked on construction.
struct SkewShape {
    Partition outer, inner;
    SkewShape() = default;
    SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
        if (!contains(outer, inner)) throw std::invalid_argument("inner shape not contained in outer");
    }
    std::vector<Cell> cells() const { return skewCells(outer, inner); }
    int size() const { return outer.weight() - inner.weight(); }
    int columnCount() const { return gsym::columnCount(cells()); }
    int rowCount() const { return gsym::rowCount(cells()); }
    bool operator==(const SkewShape &o) const { return outer == o.outer && inner == o.inner; }
    std::string toString() const { return outer.toString() + "/" + inner.toString(); }
};

inline bool isHorizontalStrip(const SkewShape &s) { return s.size() == s.columnCount(); }
inline bool isVerticalStrip(const SkewShape &s) { return s.size() == s.rowCount(); }
inline bool isRookStrip(const SkewShape &s) { return isHorizontalStrip(s) && isVerticalStrip(s); }

enum class StripKind { empty, horizontal, vertical, rook, none };

inline StripKind stripKind(const SkewShape &s) {
    if (s.size() == 0) return StripKind::empty;
    bool h = isHorizontalStrip(s), v = isVerticalStrip(s);
    if (h && v) return StripKind::rook;
    if (h) return StripKind::horizontal;
    if (v) return StripKind::vertical;
    return StripKind::none;
}

inline std::string toString(StripKind k) {
    switch (k) {
    case StripKind::empty: return "empty";
    case StripKind::horizontal: return "horizontal";
    case StripKind::vertical: return "vertical";
    case StripKind::rook: return "rook";
    default: return "none";
    }
}

// Moebius function of the containment order: (-1)^{|lam/mu|} on rook strips, else 0.
inline Int moebius(const Partition &lam, const Partition &mu) {
    if (!contains(lam, mu)) return 0;
    SkewShape s(lam, mu);
    if (!isRookStrip(s)) return 0;
    return s.size() % 2 ? -1 : 1;
}

// Shape lam//mu: the skew cells plus the removable corner cells of the inner shape
// (the latter may stay empty in set-valued fillings).
struct DoubleSlashShape {
    Partition outer, inner;
    DoubleSlashShape() = default;
    DoubleSlashShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
        if (!contains(outer, inner)) throw std::invalid_argument("inner shape not contained in outer");
    }
    SkewShape skew() const { return SkewShape(outer, inner); }
    bool operator==(const DoubleSlashShape &o) const { return outer == o.outer && inner == o.inner; }
    std::string toString() const { return outer.toString() + "//" + inner.toString(); }
};

// a(lam//mu): corner columns of the inner shape that meet no skew cell.
inline int openBoxCount(const DoubleSlashShape &s) {
    std::set<int> skewCols;
    for (auto &[r, c] : skewCells(s.outer, s.inner)) skewCols.insert(c);
    int a = 0;
    for (auto &[r, c] : removableBoxes(s.inner))
        if (!skewCols.count(c)) ++a;
    return a;
}

// All partitions of weight <= n, in canonical order.
inline std::vector<Partition> partitionsUpTo(int n) {
    std::vector<Partition> res;
    std::vector<int> cur;
    std::function<void(int, int)> gen = [&](int rem, int maxp) {
        if (rem == 0) {
            res.push_back(Partition(cur));
            return;
        }
        for (int part = std::min(rem, maxp); part >= 1; --part) {
            cur.push_back(part);
            gen(rem - part, part);
            cur.pop_back();
        }
    };
    for (int w = 0; w <= n; ++w) gen(w, w);
    return res;
}

// All subdiagrams (contained partitions) of p, in canonical order.
inline std::vector<Partition> subdiagrams(const Partition &p) {
    std::set<Partition> res;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int i, int prev) {
        if (i == p.length()) {
            res.insert(Partition(cur));
            return;
        }
        for (int v = 0; v <= std::min(prev, p.part(i)); ++v) {
            cur.push_back(v);
            rec(i + 1, v);
            cur.pop_back();
        }
    };
    rec(0, p.maxColumn() + 1);
    return std::vector<Partition>(res.begin(), res.end());
}

inline Int subdiagramCount(const Partition &p) {
    // DP over rows: count weakly decreasing dominated sequences.
    std::map<int, Int> byPrev{{p.maxColumn() + 1, 1}};
    for (int i = 0; i < p.length(); ++i) {
        std::map<int, Int> next;
        for (auto &[prev, cnt] : byPrev)
            for (int v = 0; v <= std::min(prev, p.part(i)); ++v) next[v] += cnt;
        byPrev = std::move(next);
    }
    Int total = 0;
    for (auto &[prev, cnt] : byPrev) total += cnt;
    return total;
}

// All lam containing base with |lam/base| <= extra, in canonical order.
inline std::vector<Partition> partitionsContaining(const Partition &base, int extra) {
    std::set<Partition> res;
    int rows = base.length() + extra;
    std::vector<int> cur;
    std::function<void(int, int, int)> rec = [&](int i, int prev, int used) {
        if (i >= base.length()) res.insert(Partition(cur));
        if (i >= rows) return;
        int lo = base.part(i);
        int hi = std::min(prev, lo + (extra - used));
        for (int v = std::max(lo, 1); v <= hi; ++v) {
            cur.push_back(v);
            rec(i + 1, v, used + (v - lo));
            cur.pop_back();
        }
    };
    rec(0, base.maxColumn() + extra, 0);
    return std::vector<Partition>(res.begin(), res.end());
}

// ---- shape string grammar ----
// partition: "5,3,3,1" or "-" for the empty partition
// skew: "outer/inner"; double-slash: "outer//inner".  Round-trips exactly.

inline Partition parsePartition(const std::string &s) {
    if (s == "-") return Partition();
    std::vector<int> parts;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad partition string: " + s);
        parts.push_back(std::stoi(tok));
    }
    if (parts.empty()) throw std::invalid_argument("bad partition string: " + s);
    return Partition(parts);
}

inline SkewShape parseSkewShape(const std::string &s) {
    auto pos = s.find('/');
    if (pos == std::string::npos || s.find("//") != std::string::npos)
        throw std::invalid_argument("bad skew shape string: " + s);
    return SkewShape(parsePartition(s.substr(0, pos)), parsePartition(s.substr(pos + 1)));
}

inline DoubleSlashShape parseDoubleSlashShape(const std::string &s) {
    auto pos = s.find("//");
    if (pos == std::string::npos) throw std::invalid_argument("bad double-slash shape string: " + s);
    return DoubleSlashShape(parsePartition(s.substr(0, pos)), parsePartition(s.substr(pos + 2)));
}

} // namespace gsym
