#pragma once
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "filtered_graph.hpp"
#include "identities.hpp"
#include "parallel.hpp"
#include "schur_ops.hpp"
#include "symfun.hpp"

namespace gsym {

// One acceptance criterion: a fixed battery of checks with a one-line verdict.
struct CriterionResult {
    int index = 0;
    std::string title;
    bool pass = true;
    long long cases = 0;
    double wallSeconds = 0;
    std::string detail; // first failure witness, or an informative note
};

namespace detail {

inline void foldReport(CriterionResult &c, const VerificationReport &r) {
    ++c.cases;
    if (!r.pass) {
        c.pass = false;
        if (c.detail.empty()) c.detail = r.name + ": " + r.witness;
    }
}

inline void foldCounted(CriterionResult &c, const VerificationReport &r) {
    c.cases += r.casesChecked;
    if (!r.pass) {
        c.pass = false;
        if (c.detail.empty()) c.detail = r.name + ": " + r.witness;
    }
}

inline void foldFlag(CriterionResult &c, bool ok, const std::string &what) {
    ++c.cases;
    if (!ok) {
        c.pass = false;
        if (c.detail.empty()) c.detail = what;
    }
}

inline void runIdentityJobs(CriterionResult &c, const std::vector<IdentitySpec> &specs, int threads) {
    std::vector<std::function<VerificationReport()>> jobs;
    jobs.reserve(specs.size());
    for (const auto &s : specs)
        jobs.push_back([s] { return verifyIdentity(s); });
    for (const auto &r : runJobs(jobs, threads)) foldReport(c, r);
}

} // namespace detail

namespace criteria {

// 1. Column-operator commutation lemmas on all shapes of weight <= 6.
inline CriterionResult lemmaBattery() {
    Stopwatch sw;
    CriterionResult c{1, "column-operator commutation lemmas"};
    for (auto fam : {LemmaFamily::schur, LemmaFamily::deformed, LemmaFamily::yangbaxter})
        detail::foldCounted(c, verifyLemmaRelations(fam, 6, 2, 2, 4, 7));
    c.wallSeconds = sw.seconds();
    return c;
}

// 2. Operator-chain and tableau evaluations agree for all four deformed families.
inline CriterionResult routeEquivalence(int threads) {
    Stopwatch sw;
    CriterionResult c{2, "operator and tableau routes agree"};
    auto lams = partitionsUpTo(6);
    std::vector<std::function<VerificationReport()>> jobs;
    for (const auto &lam : lams)
        jobs.push_back([lam] {
            TruncationContext ctx({Alphabet::scalar("b", 6), Alphabet::vars("x", 3, 6)});
            VerificationReport rep{"routes for outer " + lam.toString()};
            for (const auto &mu : subdiagrams(lam))
                for (auto fam : {SymFamily::G, SymFamily::g, SymFamily::J, SymFamily::j}) {
                    SymFunId id{fam, lam, mu};
                    ++rep.casesChecked;
                    compareAndRecord(rep, toString(fam) + " " + lam.toString() + "/" + mu.toString(),
                                     evaluate(id, 3, ctx, EvalRoute::operators),
                                     evaluate(id, 3, ctx, EvalRoute::tableaux));
                }
            return rep;
        });
    for (const auto &r : runJobs(jobs, threads)) detail::foldCounted(c, r);
    c.wallSeconds = sw.seconds();
    return c;
}

// 3. Skew Cauchy identity and its three dual variants over all small shape pairs.
inline CriterionResult skewCauchyFamily(int threads) {
    Stopwatch sw;
    CriterionResult c{3, "skew Cauchy kernel identities"};
    std::vector<IdentitySpec> specs;
    for (const auto &name : {"skewCauchy", "dualSkewCauchyJg", "dualSkewCauchyGj", "dualSkewCauchyJj"})
        for (const auto &mu : partitionsUpTo(3))
            for (const auto &nu : partitionsUpTo(3)) {
                IdentitySpec s;
                s.name = name;
                s.mu = mu;
                s.nu = nu;
                specs.push_back(s);
            }
    detail::runIdentityJobs(c, specs, threads);
    c.wallSeconds = sw.seconds();
    return c;
}

// 4. Diagonal raising-series element equals the corner-count closed form.
inline CriterionResult diagonalClosedForm() {
    Stopwatch sw;
    CriterionResult c{4, "diagonal series closed form"};
    TruncationContext ctx({Alphabet::scalar("b", 6), Alphabet::vars("x", 2, 6)});
    Poly one = Poly::constant(ctx, 1);
    Poly b = Poly::variable(ctx, ctx.var("b"));
    for (const auto &lam : partitionsUpTo(6)) {
        Poly got = matrixElement(lam, {{SeriesKind::A, ctx.var("x", 2)}, {SeriesKind::A, ctx.var("x", 1)}}, lam, ctx);
        Poly want = one;
        for (int v : {ctx.var("x", 1), ctx.var("x", 2)})
            want = want * (one - b * Poly::variable(ctx, v)).pow(distinctPartCount(lam));
        detail::foldFlag(c, got == want, "diagonal element differs at " + lam.toString());
    }
    c.wallSeconds = sw.seconds();
    return c;
}

// 5. Plain-skew sums count subdiagrams; staircase counts are Catalan numbers.
inline CriterionResult subdiagramGenerating() {
    Stopwatch sw;
    CriterionResult c{5, "plain-skew sums count subdiagrams"};
    const std::vector<std::pair<Partition, long long>> rows = {
        {Partition{}, 1}, {Partition{1}, 2}, {Partition{2, 1}, 5}, {Partition{3, 2, 1}, 14}};
    for (const auto &[mu, d] : rows) {
        detail::foldFlag(c, subdiagramCount(mu) == d,
                         "subdiagram count of " + mu.toString() + " is not " + std::to_string(d));
        IdentitySpec s;
        s.name = "specializationCatalan";
        s.mu = mu;
        s.xCap = 5;
        s.yVars = 0;
        detail::foldReport(c, verifyIdentity(s));
    }
    std::string stairs;
    bool catalanIndex = true;
    for (int n = 1; n <= 4; ++n) {
        std::vector<int> parts;
        for (int p = n; p >= 1; --p) parts.push_back(p);
        Int d = subdiagramCount(Partition(parts));
        catalanIndex = catalanIndex && d == catalanNumber(n + 1);
        stairs += (n > 1 ? "," : "") + d.str();
    }
    detail::foldFlag(c, catalanIndex, "staircase subdiagram counts are not Catalan-shifted");
    if (c.pass)
        c.detail = "d-values 1,2,5,14; staircase counts " + stairs + " hit the Catalan numbers with index shifted by one";
    c.wallSeconds = sw.seconds();
    return c;
}

// 6. Skew Pieri rules, their duals, and the simple/Schur corollaries, with the
// coefficients produced by the same closed forms the verifiers cross-check.
inline CriterionResult skewPieriFamily(int threads) {
    Stopwatch sw;
    CriterionResult c{6, "skew Pieri rules and corollaries"};
    std::vector<IdentitySpec> specs;
    for (const auto &mu : partitionsUpTo(4))
        for (const auto &nu : subdiagrams(mu)) {
            for (const auto &name : {"skewPieriG1k", "skewPierigk", "dualSkewPieriGk", "dualSkewPierigk"})
                for (int k = 0; k <= 3; ++k) {
                    IdentitySpec s;
                    s.name = name;
                    s.mu = mu;
                    s.nu = nu;
                    s.k = k;
                    specs.push_back(s);
                }
            for (const auto &name : {"simpleSkewPieri", "schurSkewPieri"}) {
                IdentitySpec s;
                s.name = name;
                s.mu = mu;
                s.nu = nu;
                specs.push_back(s);
            }
        }
    detail::runIdentityJobs(c, specs, threads);
    c.wallSeconds = sw.seconds();
    return c;
}

// 7. Conjugating the schur expansion of the set-valued family lands on the
// multiset-valued one.
inline CriterionResult conjugationDuality() {
    Stopwatch sw;
    CriterionResult c{7, "schur-basis conjugation duality"};
    TruncationContext ctx({Alphabet::scalar("b", 4), Alphabet::vars("x", 4, 4)});
    for (const auto &lam : partitionsUpTo(4))
        for (const auto &mu : subdiagrams(lam)) {
            auto gAsSchur = schurExpand(evaluate({SymFamily::G, lam, mu}, 4, ctx), 4);
            auto jAsSchur = schurExpand(evaluate({SymFamily::J, lam, mu}, 4, ctx), 4);
            bool ok = gAsSchur.complete() && jAsSchur.complete() && omega(gAsSchur) == jAsSchur;
            detail::foldFlag(c, ok, "conjugation mismatch at " + lam.toString() + "//" + mu.toString());
        }
    c.wallSeconds = sw.seconds();
    return c;
}

// 8. The two kernels are orthogonal: the telescoping rho-sum is a Kronecker delta.
inline CriterionResult orthogonalityPairs(int threads) {
    Stopwatch sw;
    CriterionResult c{8, "orthogonality of the two kernels"};
    std::vector<IdentitySpec> specs;
    for (const auto &lam : partitionsUpTo(4))
        for (const auto &mu : partitionsUpTo(4)) {
            if (!contains(lam, mu)) {
                // no rho satisfies mu <= rho <= lam: the sum is empty and the
                // delta is zero, so the instance holds by shape containment
                detail::foldFlag(c, !(lam == mu), "containment logic error");
                continue;
            }
            IdentitySpec s;
            s.name = "orthogonality";
            s.mu = lam;
            s.nu = mu;
            s.xCap = 4;
            s.yCap = 4;
            s.bCap = 4;
            specs.push_back(s);
        }
    detail::runIdentityJobs(c, specs, threads);
    c.wallSeconds = sw.seconds();
    return c;
}

// 9. Products expand with zero residual in the G basis; the damping bound holds
// for the j family and is refuted by single-column witnesses for g.
inline CriterionResult basisAndDamping() {
    Stopwatch sw;
    CriterionResult c{9, "triangular basis expansion with damping bound"};
    TruncationContext big({Alphabet::scalar("b", 6), Alphabet::vars("x", 8, 8)});
    for (const auto &mu : partitionsUpTo(2))
        for (const auto &nu : partitionsUpTo(2)) {
            Poly f = evaluate({SymFamily::G, mu, Partition{}}, 8, big) *
                     evaluate({SymFamily::G, nu, Partition{}}, 8, big);
            auto e = GBasisExpand(f, 8);
            detail::foldFlag(c, e.complete(),
                             "residual left for G_" + mu.toString() + " * G_" + nu.toString());
        }
    TruncationContext small({Alphabet::scalar("b"), Alphabet::vars("x", 2, 4)});
    detail::foldCounted(c, dampingCheck(SymFamily::j, 1, 4, small));
    detail::foldCounted(c, dampingCheck(SymFamily::j, 2, 5, small));
    detail::foldCounted(c, dampingCheck(SymFamily::g, 1, 4, small));
    c.wallSeconds = sw.seconds();
    return c;
}

// 10. Graph commutators at rank 8 with formal parameters, and the rook-strip
// down operator recovered from the kappa deformation at -1.
inline CriterionResult graphCommutators() {
    Stopwatch sw;
    CriterionResult c{10, "filtered graph commutators"};
    detail::foldCounted(c, commutatorCheck(buildGraph(GraphKind::betaY, {}, 8), CommutatorRelation::DU_UD_eq_1));
    detail::foldCounted(c,
                        commutatorCheck(buildGraph(GraphKind::kappaY, {}, 8), CommutatorRelation::eq_kappa_1_plus_D));
    detail::foldCounted(c, commutatorCheck(buildGraph(GraphKind::moebiusY, {}, 8), CommutatorRelation::eq_1_plus_D));
    detail::foldCounted(c, moebiusFromCauchy(6));
    c.wallSeconds = sw.seconds();
    return c;
}

// 11. The worked walk values: signed up-walks give -3, down-walks give 2.
inline CriterionResult walkValues() {
    Stopwatch sw;
    CriterionResult c{11, "worked walk sums"};
    FilteredGraph g = buildGraph(GraphKind::betaY, GraphParams{1, {}}, 6);
    detail::foldFlag(c, walkSum(g, Partition{2}, Partition{2, 1}, 2, WalkDirection::up) ==
                            Poly::constant(*g.ctx, -3),
                     "up-walk sum (2)->(2,1) in two steps is not -3");
    detail::foldFlag(c, walkSum(g, Partition{2, 1, 1}, Partition{1}, 2, WalkDirection::down) ==
                            Poly::constant(*g.ctx, 2),
                     "down-walk sum (2,1,1)->(1) in two steps is not 2");
    if (c.pass) c.detail = "-3 and 2 reproduced";
    c.wallSeconds = sw.seconds();
    return c;
}

// 12. Both normal-ordering templates at rank 10, and the two q-coefficient
// closed forms on all indices up to 6.
inline CriterionResult normalOrdering(int threads) {
    Stopwatch sw;
    CriterionResult c{12, "normal ordering templates"};
    std::vector<std::function<VerificationReport()>> jobs;
    for (auto rel : {OrderingRelation::weyl, OrderingRelation::shifted})
        for (int n = 0; n <= 3; ++n)
            for (int m = 0; m <= 3; ++m)
                jobs.push_back([rel, n, m] { return normalOrderingCheck(rel, n, m, 10); });
    for (const auto &r : runJobs(jobs, threads)) detail::foldReport(c, r);
    detail::foldCounted(c, qCoefficientCrossCheck(6));
    c.wallSeconds = sw.seconds();
    return c;
}

// 13. Enumerative convolution identities, the factorial sum of squared standard
// counts, and the ordered-set-partition values.
inline CriterionResult enumerativeIdentities(int threads) {
    Stopwatch sw;
    CriterionResult c{13, "enumerative convolution identities"};
    std::vector<std::function<VerificationReport()>> jobs;
    for (const auto &mu : partitionsUpTo(2))
        for (const auto &nu : partitionsUpTo(2))
            for (int m = 0; m <= 2; ++m)
                for (int n = 0; n <= 2; ++n) {
                    jobs.push_back([mu, nu, m, n] {
                        return enumerativeIdentityCheck(EnumerativeIdentity::signedFf, m, n, mu, nu, 8);
                    });
                    jobs.push_back([mu, nu, m, n] {
                        return enumerativeIdentityCheck(EnumerativeIdentity::Fg, m, n, mu, nu, 8);
                    });
                }
    for (int n = 0; n <= 6; ++n)
        jobs.push_back([n] {
            return enumerativeIdentityCheck(EnumerativeIdentity::frobeniusAnalogue, n, n, Partition{}, Partition{}, 8);
        });
    for (int n = 1; n <= 4; ++n)
        jobs.push_back(
            [n] { return enumerativeIdentityCheck(EnumerativeIdentity::fubini, 0, n, Partition{}, Partition{}, 8); });
    for (const auto &r : runJobs(jobs, threads)) detail::foldReport(c, r);
    const long long fub[] = {1, 3, 13, 75};
    for (int n = 1; n <= 4; ++n)
        detail::foldFlag(c, orderedSetPartitionCount(n) == fub[n - 1], "ordered set partition count off at n=" +
                                                                          std::to_string(n));
    if (c.pass) c.detail = "squared standard counts sum to n! up to 6; ordered-set-partition values 1,3,13,75";
    c.wallSeconds = sw.seconds();
    return c;
}

} // namespace criteria

inline std::string formatCriterion(const CriterionResult &c) {
    std::ostringstream os;
    os << "criterion " << std::setw(2) << c.index << ": " << (c.pass ? "pass" : "FAIL") << " - " << c.title << " ("
       << c.cases << " cases, " << std::fixed << std::setprecision(2) << c.wallSeconds << "s)";
    if (!c.detail.empty()) os << " [" << c.detail << "]";
    return os.str();
}

// Runs the whole battery in order; when `progress` is set, each verdict line is
// printed as soon as it is known.
inline std::vector<CriterionResult> runAcceptanceSuite(int threads = 0, std::ostream *progress = nullptr) {
    std::vector<CriterionResult> out;
    auto push = [&](CriterionResult c) {
        if (progress) *progress << formatCriterion(c) << std::endl;
        out.push_back(std::move(c));
    };
    push(criteria::lemmaBattery());
    push(criteria::routeEquivalence(threads));
    push(criteria::skewCauchyFamily(threads));
    push(criteria::diagonalClosedForm());
    push(criteria::subdiagramGenerating());
    push(criteria::skewPieriFamily(threads));
    push(criteria::conjugationDuality());
    push(criteria::orthogonalityPairs(threads));
    push(criteria::basisAndDamping());
    push(criteria::graphCommutators());
    push(criteria::walkValues());
    push(criteria::normalOrdering(threads));
    push(criteria::enumerativeIdentities(threads));
    return out;
}

inline bool allCriteriaPass(const std::vector<CriterionResult> &rs) {
    for (const auto &r : rs)
        if (!r.pass) return false;
    return true;
}

} // namespace gsym
