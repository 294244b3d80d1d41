#include <catch2/catch_amalgamated.hpp>
#include <gsym/partition.hpp>

#include <random>

using namespace gsym;

TEST_CASE("conjugate is an involution") {
    for (auto &p : partitionsUpTo(12)) REQUIRE(conjugate(conjugate(p)) == p);
}

TEST_CASE("conjugate transposes the diagram") {
    Partition p{5, 3, 3, 1};
    REQUIRE(conjugate(p) == Partition{4, 3, 3, 1, 1});
    REQUIRE(conjugate(Partition{}) == Partition{});
    for (auto &q : partitionsUpTo(8)) {
        REQUIRE(conjugate(q).weight() == q.weight());
        // cell (i,j) in q iff (j,i) in conjugate
        auto qc = conjugate(q);
        for (int i = 1; i <= q.length() + 1; ++i)
            for (int j = 1; j <= q.maxColumn() + 1; ++j)
                REQUIRE((q.part(i - 1) >= j) == (qc.part(j - 1) >= i));
    }
}

TEST_CASE("distinct part count equals removable corner count") {
    for (auto &p : partitionsUpTo(10)) {
        std::set<int> distinct(p.parts().begin(), p.parts().end());
        REQUIRE(distinctPartCount(p) == (int)distinct.size());
    }
}

TEST_CASE("add and remove box in column invert each other") {
    for (auto &p : partitionsUpTo(9)) {
        for (int c = 1; c <= p.maxColumn() + 1; ++c) {
            auto q = addBoxInColumn(p, c);
            if (q) {
                REQUIRE(q->weight() == p.weight() + 1);
                auto back = removeBoxInColumn(*q, c);
                REQUIRE(back.has_value());
                REQUIRE(*back == p);
            }
        }
        for (int c = 1; c <= p.maxColumn(); ++c) {
            auto q = removeBoxInColumn(p, c);
            if (q) {
                auto back = addBoxInColumn(*q, c);
                REQUIRE(back.has_value());
                REQUIRE(*back == p);
            }
        }
        // column-c box is removable iff (r, c) is a corner for some row r
        auto corners = removableBoxes(p);
        for (int c = 1; c <= p.maxColumn(); ++c) {
            bool corner = false;
            for (auto &[rr, cc] : corners) corner |= (cc == c);
            REQUIRE(removeBoxInColumn(p, c).has_value() == corner);
        }
    }
}

TEST_CASE("strip classification by cell counts") {
    SkewShape s(Partition{5, 3, 3, 1}, Partition{4, 3, 2});
    REQUIRE(s.size() == 3);
    REQUIRE(s.columnCount() == 3);
    REQUIRE(s.rowCount() == 3);
    REQUIRE(stripKind(s) == StripKind::rook);

    REQUIRE(stripKind(SkewShape(Partition{3, 1}, Partition{1})) == StripKind::horizontal);
    REQUIRE(stripKind(SkewShape(Partition{2, 2}, Partition{1})) == StripKind::none);
    REQUIRE(stripKind(SkewShape(Partition{3, 1}, Partition{3})) == StripKind::rook);
    REQUIRE(stripKind(SkewShape(Partition{3, 1}, Partition{1, 1})) == StripKind::horizontal);
    REQUIRE(stripKind(SkewShape(Partition{2, 1, 1}, Partition{2})) == StripKind::vertical);
    REQUIRE(stripKind(SkewShape(Partition{2, 1}, Partition{2, 1})) == StripKind::empty);
}

TEST_CASE("horizontal strips conjugate to vertical strips") {
    for (auto &lam : partitionsUpTo(7))
        for (auto &mu : subdiagrams(lam)) {
            SkewShape s(lam, mu), sc(conjugate(lam), conjugate(mu));
            REQUIRE(isHorizontalStrip(s) == isVerticalStrip(sc));
            REQUIRE(isRookStrip(s) == isRookStrip(sc));
        }
}

TEST_CASE("rook strips have pairwise distinct rows and columns") {
    for (auto &lam : partitionsUpTo(7))
        for (auto &mu : subdiagrams(lam)) {
            SkewShape s(lam, mu);
            auto cells = s.cells();
            bool distinct = true;
            for (size_t a = 0; a < cells.size(); ++a)
                for (size_t b = a + 1; b < cells.size(); ++b)
                    if (cells[a].first == cells[b].first || cells[a].second == cells[b].second)
                        distinct = false;
            REQUIRE(isRookStrip(s) == distinct);
        }
}

TEST_CASE("moebius inverts summation over subdiagrams") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> val(-9, 9);
    for (auto &lam : partitionsUpTo(8)) {
        if (lam.weight() < 5) continue; // exercise the larger posets
        std::map<Partition, Int> g, f;
        for (auto &mu : subdiagrams(lam)) g[mu] = val(rng);
        for (auto &nu : subdiagrams(lam)) {
            f[nu] = 0;
            for (auto &mu : subdiagrams(nu)) f[nu] += g[mu];
        }
        // g(lam) = sum_{mu <= lam} moebius(lam, mu) f(mu)
        Int back = 0;
        for (auto &mu : subdiagrams(lam)) back += moebius(lam, mu) * f[mu];
        REQUIRE(back == g[lam]);
    }
}

TEST_CASE("open box count on double-slash shapes") {
    REQUIRE(openBoxCount(DoubleSlashShape(Partition{2, 1}, Partition{2})) == 1);
    REQUIRE(openBoxCount(DoubleSlashShape(Partition{2, 1}, Partition{})) == 0);
    REQUIRE(openBoxCount(DoubleSlashShape(Partition{2, 2}, Partition{2})) == 0);
    REQUIRE(openBoxCount(DoubleSlashShape(Partition{3, 2}, Partition{2, 1})) == 1);
    REQUIRE(openBoxCount(DoubleSlashShape(Partition{2, 1}, Partition{2, 1})) == 2);
    // corners of the inner shape whose column meets no skew cell
    for (auto &lam : partitionsUpTo(6))
        for (auto &mu : subdiagrams(lam)) {
            int a = openBoxCount(DoubleSlashShape(lam, mu));
            REQUIRE(a >= 0);
            REQUIRE(a <= distinctPartCount(mu));
        }
}

TEST_CASE("subdiagram count matches enumeration and staircase Catalan values") {
    for (auto &p : partitionsUpTo(7)) REQUIRE(subdiagramCount(p) == (int)subdiagrams(p).size());
    std::vector<int> delta;
    for (int n = 1; n <= 6; ++n) {
        delta.insert(delta.begin(), n); // delta_n = (n, n-1, ..., 1)
        Partition staircase(delta);
        REQUIRE(subdiagramCount(staircase) == catalanNumber(n + 1));
        if (n <= 6) REQUIRE(subdiagramCount(staircase) == (int)subdiagrams(staircase).size());
    }
    REQUIRE(subdiagramCount(Partition{1}) == 2);
    REQUIRE(subdiagramCount(Partition{2, 1}) == 5);
    REQUIRE(subdiagramCount(Partition{3, 2, 1}) == 14);
}

TEST_CASE("partition enumeration is ordered and complete") {
    auto ps = partitionsUpTo(4);
    REQUIRE(ps.size() == 12);
    REQUIRE(ps[0] == Partition{});
    REQUIRE(ps[1] == Partition{1});
    REQUIRE(ps[2] == Partition{2});
    REQUIRE(ps[3] == Partition{1, 1});
    for (size_t i = 0; i + 1 < ps.size(); ++i) REQUIRE(ps[i] < ps[i + 1]);
}

TEST_CASE("partitionsContaining respects the growth bound") {
    for (auto &base : partitionsUpTo(4)) {
        auto grown = partitionsContaining(base, 2);
        for (auto &lam : grown) {
            REQUIRE(contains(lam, base));
            REQUIRE(lam.weight() - base.weight() <= 2);
        }
        // brute-force cross-check against global enumeration
        int found = 0;
        for (auto &lam : partitionsUpTo(base.weight() + 2))
            if (contains(lam, base)) ++found;
        REQUIRE((int)grown.size() == found);
    }
}

TEST_CASE("shape strings round-trip") {
    for (std::string s : {"-", "1", "3,1", "5,3,3,1", "2,2,2"}) {
        REQUIRE(parsePartition(s).toString() == s);
    }
    REQUIRE(parseSkewShape("2,1,1/1").toString() == "2,1,1/1");
    REQUIRE(parseSkewShape("3,1/-").toString() == "3,1/-");
    REQUIRE(parseDoubleSlashShape("2//1").toString() == "2//1");
    REQUIRE(parseDoubleSlashShape("5,3//3,1").toString() == "5,3//3,1");
    REQUIRE_THROWS(parsePartition("1,2"));
    REQUIRE_THROWS(parsePartition(""));
    REQUIRE_THROWS(parseSkewShape("2//1"));
    REQUIRE_THROWS(parseSkewShape("1/2"));
    REQUIRE_THROWS(parseDoubleSlashShape("2/1"));
}

TEST_CASE("column heights and containment") {
    Partition p{4, 2, 1};
    REQUIRE(columnHeight(p, 1) == 3);
    REQUIRE(columnHeight(p, 2) == 2);
    REQUIRE(columnHeight(p, 3) == 1);
    REQUIRE(columnHeight(p, 5) == 0);
    REQUIRE(contains(p, Partition{2, 2}));
    REQUIRE(!contains(p, Partition{2, 2, 2}));
    REQUIRE(contains(p, p));
}
