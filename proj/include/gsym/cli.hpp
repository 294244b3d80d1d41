#pragma once
#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json_io.hpp"
#include "suite.hpp"

namespace gsym {
namespace cli_detail {

// ---- shape strings ----
// "5,3,1" plain, "-" empty, "outer/inner" skew, "outer//inner" with corner cells.

struct ShapeSpec {
    Partition outer, inner;
    bool doubleSlash = false;
    bool skew = false;
};

inline ShapeSpec parseShapeSpec(const std::string &s) {
    ShapeSpec r;
    if (s.find("//") != std::string::npos) {
        auto d = parseDoubleSlashShape(s);
        r.outer = d.outer;
        r.inner = d.inner;
        r.doubleSlash = true;
    } else if (s.find('/') != std::string::npos) {
        auto sk = parseSkewShape(s);
        r.outer = sk.outer;
        r.inner = sk.inner;
        r.skew = true;
    } else {
        r.outer = parsePartition(s);
    }
    return r;
}

// ---- operator words ----

inline std::string toString(ColumnKind k) {
    switch (k) {
    case ColumnKind::u: return "u";
    case ColumnKind::d: return "d";
    case ColumnKind::ut: return "ut";
    default: return "dt";
    }
}

// Tokens "u3", "d1", "ut2", "dt4", separated by spaces or commas; the word is
// written left-to-right and its rightmost factor acts first.
inline std::vector<ColumnOperator> parseWord(const std::string &s) {
    std::string cleaned = s;
    for (char &c : cleaned)
        if (c == ',') c = ' ';
    std::vector<ColumnOperator> w;
    std::istringstream is(cleaned);
    std::string t;
    while (is >> t) {
        ColumnKind k;
        size_t off;
        if (t.rfind("ut", 0) == 0) {
            k = ColumnKind::ut;
            off = 2;
        } else if (t.rfind("dt", 0) == 0) {
            k = ColumnKind::dt;
            off = 2;
        } else if (t.rfind('u', 0) == 0) {
            k = ColumnKind::u;
            off = 1;
        } else if (t.rfind('d', 0) == 0) {
            k = ColumnKind::d;
            off = 1;
        } else {
            throw std::invalid_argument("bad operator token: " + t);
        }
        std::string num = t.substr(off);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad operator token: " + t);
        int col = std::stoi(num);
        if (col < 1) throw std::invalid_argument("column index must be >= 1: " + t);
        w.push_back({k, col});
    }
    if (w.empty()) throw std::invalid_argument("--word: empty operator word");
    return w;
}

inline void printJson(std::ostream &out, const Json &j) { out << j.dump(2) << "\n"; }

// ---- expand ----

struct ExpandOpts {
    std::string family = "G";
    std::string shape = "-";
    std::string route = "operator";
    std::string basis;
    int k = -1;
    int vars = 2;
    int xcap = -1;
    int bcap = -1;
    bool json = false;
};

inline std::string basisLetter(ExpansionBasis b) {
    switch (b) {
    case ExpansionBasis::monomial: return "m";
    case ExpansionBasis::schur: return "s";
    case ExpansionBasis::Gbasis: return "G";
    default: return "g";
    }
}

inline int runExpand(const ExpandOpts &o, std::ostream &out) {
    SymFamily fam = symFamilyFromString(o.family);
    EvalRoute route = evalRouteFromString(o.route);
    ShapeSpec sh = parseShapeSpec(o.shape);
    bool degreeFamily = fam == SymFamily::h || fam == SymFamily::e;
    if (degreeFamily) {
        if (o.k < 0) throw std::invalid_argument("--k: families h and e take a degree");
        if (!sh.outer.parts().empty() || !sh.inner.parts().empty())
            throw std::invalid_argument("--shape: families h and e take --k, not a shape");
    } else {
        if (o.k >= 0) throw std::invalid_argument("--k applies to families h and e only");
        if (o.xcap < 0) throw std::invalid_argument("--xcap: finite x cap required for family " + o.family);
        if (sh.doubleSlash && fam != SymFamily::G && fam != SymFamily::J)
            throw std::invalid_argument("double-slash shapes apply to families G and J");
        if (sh.skew && fam == SymFamily::J)
            throw std::invalid_argument("family J takes outer//inner; the plain skew form is not defined");
    }

    TruncationContext ctx({Alphabet::scalar("b", o.bcap), Alphabet::vars("x", o.vars, o.xcap)});
    Poly f(ctx);
    if (degreeFamily) {
        f = evaluate({fam, Partition(), Partition(), o.k}, o.vars, ctx, route);
    } else if (fam == SymFamily::G && sh.skew) {
        // plain skew: sum over subdiagrams of the inner shape
        for (const auto &nu : subdiagrams(sh.inner)) f += evaluate({fam, sh.outer, nu}, o.vars, ctx, route);
    } else {
        f = evaluate({fam, sh.outer, sh.inner}, o.vars, ctx, route);
    }

    if (o.basis.empty()) {
        if (o.json) {
            Json j;
            j["family"] = o.family;
            j["shape"] = o.shape;
            j["vars"] = o.vars;
            j["xcap"] = o.xcap;
            j["bcap"] = o.bcap;
            j["route"] = o.route;
            j["variables"] = variableNames(ctx);
            j["text"] = f.toString();
            j["terms"] = toJson(f);
            printJson(out, j);
        } else {
            out << f.toString() << "\n";
        }
        return 0;
    }

    SymExpansion ex;
    if (o.basis == "monomial")
        ex = monomialExpand(f, o.vars);
    else if (o.basis == "schur")
        ex = schurExpand(f, o.vars);
    else if (o.basis == "G")
        ex = GBasisExpand(f, o.vars);
    else
        ex = gBasisExpand(f, o.vars);
    if (o.json) {
        Json j = toJson(ex);
        j["family"] = o.family;
        j["shape"] = o.shape;
        j["xcap"] = o.xcap;
        j["bcap"] = o.bcap;
        j["route"] = o.route;
        j["variables"] = variableNames(ctx);
        printJson(out, j);
    } else {
        std::string letter = basisLetter(ex.basis);
        for (auto &[lam, c] : ex.terms) out << letter << "[" << lam.toString() << "]: " << c.toString() << "\n";
        if (!ex.complete()) out << "residual: " << ex.residual.toString() << "\n";
    }
    return 0;
}

// ---- count ----

struct CountOpts {
    std::string family;
    std::string shape = "-";
    int n = -1;
    int maxEntries = -1;
    bool list = false;
    bool json = false;
};

inline int runCount(const CountOpts &o, std::ostream &out) {
    FillingFamily fam = fillingFamilyFromString(o.family);
    ShapeSpec sh = parseShapeSpec(o.shape);
    if (usesCornerCells(fam) && sh.skew)
        throw std::invalid_argument("family " + o.family + " takes outer//inner (corner cells kept)");
    if (!usesCornerCells(fam) && sh.doubleSlash)
        throw std::invalid_argument("family " + o.family + " takes outer/inner");
    if (fam != FillingFamily::SYT && o.n < 0)
        throw std::invalid_argument("--n: entry bound required for family " + o.family);
    int nEff = fam == FillingFamily::SYT ? 0 : o.n;

    Int c = 0;
    Json fills = Json::array();
    std::vector<std::string> lines;
    forEachFilling(fam, sh.outer, sh.inner, nEff, o.maxEntries, [&](const FillingContent &cm) {
        ++c;
        if (!o.list) return;
        if (o.json) {
            fills.push_back(toJson(cm, sh.outer, sh.inner));
        } else {
            std::ostringstream os;
            bool first = true;
            for (auto &[cell, entries] : cm) {
                if (!first) os << " ";
                first = false;
                os << "(" << cell.first << "," << cell.second << "):";
                if (entries.empty()) os << "-";
                for (size_t i = 0; i < entries.size(); ++i) os << (i ? "," : "") << entries[i];
            }
            lines.push_back(os.str());
        }
    });

    if (o.json) {
        Json j;
        j["family"] = o.family;
        j["shape"] = o.shape;
        j["n"] = o.n;
        j["count"] = c.str();
        if (o.list) j["fillings"] = fills;
        printJson(out, j);
    } else {
        for (auto &l : lines) out << l << "\n";
        out << c.str() << "\n";
    }
    return 0;
}

// ---- apply ----

struct ApplyOpts {
    std::string word;
    std::string shape = "-";
    int bcap = -1;
    bool json = false;
};

inline int runApply(const ApplyOpts &o, std::ostream &out) {
    std::vector<ColumnOperator> word = parseWord(o.word);
    Partition p = parsePartition(o.shape);
    TruncationContext ctx({Alphabet::scalar("b", o.bcap)});
    ModuleElement v = applyWord(word, ModuleElement::basis(ctx, p));
    if (o.json) {
        Json j;
        Json w = Json::array();
        for (auto &op : word) w.push_back(toString(op.kind) + std::to_string(op.column));
        j["word"] = w;
        j["shape"] = toJson(p);
        j["variables"] = variableNames(ctx);
        j["result"] = toJson(v);
        printJson(out, j);
    } else {
        if (v.isZero()) {
            out << "0\n";
        } else {
            for (auto &[q, c] : v.terms()) out << q.toString() << ": " << c.toString() << "\n";
        }
    }
    return 0;
}

// ---- verify ----

struct VerifyOpts {
    std::string name;
    std::string mu = "-";
    std::string nu = "-";
    std::string beta = "formal";
    int k = 1;
    int xvars = 2;
    int yvars = 2;
    int xcap = 4;
    int ycap = 4;
    int bcap = 5;
    int slack = 0;
    bool json = false;
};

inline int runVerify(const VerifyOpts &o, std::ostream &out) {
    IdentitySpec spec;
    spec.name = o.name;
    spec.mu = parsePartition(o.mu);
    spec.nu = parsePartition(o.nu);
    spec.k = o.k;
    spec.xVars = o.xvars;
    spec.yVars = o.yvars;
    spec.xCap = o.xcap;
    spec.yCap = o.ycap;
    spec.bCap = o.bcap;
    spec.beta = betaValueFromString(o.beta);
    spec.boundSlack = o.slack;
    VerificationReport rep = verifyIdentity(spec);
    if (o.json)
        printJson(out, toJson(rep));
    else
        out << rep.summary() << "\n";
    return rep.pass ? 0 : 1;
}

// ---- graph ----

struct GraphBuildOpts {
    std::string kind;
    int rank = 4;
    std::optional<int> beta, kappa;
};

inline int runGraphBuild(const GraphBuildOpts &o, std::ostream &out) {
    FilteredGraph g = buildGraph(graphKindFromString(o.kind), {o.beta, o.kappa}, o.rank);
    printJson(out, toJson(g));
    return 0;
}

struct GraphCheckOpts {
    std::string kind;
    int rank = 8;
    std::optional<int> beta, kappa;
    bool cauchy = false;
    bool json = false;
};

inline int runGraphCheck(const GraphCheckOpts &o, std::ostream &out) {
    VerificationReport rep;
    if (o.cauchy) {
        rep = moebiusFromCauchy(o.rank);
    } else {
        if (o.kind.empty()) throw std::invalid_argument("--kind: required unless --cauchy is given");
        GraphKind kind = graphKindFromString(o.kind);
        FilteredGraph g = buildGraph(kind, {o.beta, o.kappa}, o.rank);
        rep = commutatorCheck(g, commutatorRelationFor(kind));
    }
    if (o.json)
        printJson(out, toJson(rep));
    else
        out << rep.summary() << "\n";
    return rep.pass ? 0 : 1;
}

struct GraphWalkOpts {
    std::string kind = "betaY";
    std::string from = "-";
    std::string to = "-";
    std::string dir;
    int rank = 6;
    int steps = 0;
    std::optional<int> beta, kappa;
    bool json = false;
};

inline int runGraphWalk(const GraphWalkOpts &o, std::ostream &out) {
    FilteredGraph g = buildGraph(graphKindFromString(o.kind), {o.beta, o.kappa}, o.rank);
    Poly w = walkSum(g, parsePartition(o.from), parsePartition(o.to), o.steps, walkDirectionFromString(o.dir));
    if (o.json) {
        Json j;
        j["kind"] = o.kind;
        j["rank"] = o.rank;
        j["from"] = toJson(parsePartition(o.from));
        j["to"] = toJson(parsePartition(o.to));
        j["steps"] = o.steps;
        j["direction"] = o.dir;
        j["value"] = w.toString();
        j["terms"] = toJson(w);
        printJson(out, j);
    } else {
        out << w.toString() << "\n";
    }
    return 0;
}

struct NormalOrderOpts {
    std::string relation;
    int n = 0;
    int m = 0;
    int rank = 10;
    bool json = false;
};

inline int runNormalOrder(const NormalOrderOpts &o, std::ostream &out) {
    VerificationReport rep = normalOrderingCheck(orderingRelationFromString(o.relation), o.n, o.m, o.rank);
    if (o.json)
        printJson(out, toJson(rep));
    else
        out << rep.summary() << "\n";
    return rep.pass ? 0 : 1;
}

// ---- suite ----

struct SuiteOpts {
    int threads = 0;
    bool json = false;
};

inline int runSuite(const SuiteOpts &o, std::ostream &out, std::ostream &err) {
    std::vector<CriterionResult> rs = runAcceptanceSuite(o.threads, o.json ? &err : &out);
    bool ok = allCriteriaPass(rs);
    if (o.json) {
        Json arr = Json::array();
        for (auto &c : rs) {
            Json j;
            j["index"] = c.index;
            j["title"] = c.title;
            j["pass"] = c.pass;
            j["cases"] = c.cases;
            j["wallSeconds"] = c.wallSeconds;
            j["detail"] = c.detail;
            arr.push_back(j);
        }
        Json j;
        j["criteria"] = arr;
        j["pass"] = ok;
        printJson(out, j);
    } else {
        out << (ok ? "all criteria pass" : "FAILURES present") << "\n";
    }
    return ok ? 0 : 1;
}

// ---- wiring ----

inline void addExpand(CLI::App &app, int &rc, std::ostream &out) {
    auto o = std::make_shared<ExpandOpts>();
    auto *c = app.add_subcommand("expand", "evaluate one symmetric function on the truncated ring");
    c->add_option("--family", o->family, "G, g, J, j, s, h or e")
        ->check(CLI::IsMember({"G", "g", "J", "j", "s", "h", "e"}));
    c->add_option("--shape", o->shape, "partition, outer/inner, or outer//inner; - for empty");
    c->add_option("--k", o->k, "degree for families h and e");
    c->add_option("--vars", o->vars, "number of x variables")->check(CLI::Range(0, 15));
    c->add_option("--xcap", o->xcap, "total-degree cap of the x alphabet (-1 = uncapped)");
    c->add_option("--bcap", o->bcap, "degree cap of the deformation parameter b (-1 = uncapped)");
    c->add_option("--via", o->route, "evaluation route")->check(CLI::IsMember({"operator", "tableaux"}));
    c->add_option("--basis", o->basis, "re-expand the result in a basis")
        ->check(CLI::IsMember({"monomial", "schur", "G", "g"}));
    c->add_flag("--json", o->json, "machine-readable output");
    c->callback([o, &rc, &out] { rc = runExpand(*o, out); });
}

inline void addCount(CLI::App &app, int &rc, std::ostream &out) {
    auto o = std::make_shared<CountOpts>();
    auto *c = app.add_subcommand("count", "count tableau fillings of a shape");
    c->add_option("--family", o->family, "SVT, RPP, MSVT, SSYT, ISVT, ST, IT or SYT")
        ->required()
        ->check(CLI::IsMember({"SVT", "RPP", "MSVT", "SSYT", "ISVT", "ST", "IT", "SYT"}));
    c->add_option("--shape", o->shape, "partition, outer/inner, or outer//inner; - for empty");
    c->add_option("--n", o->n, "entries drawn from 1..n (ignored for SYT)");
    c->add_option("--max-entries", o->maxEntries, "total entry bound (required for MSVT)");
    c->add_flag("--list", o->list, "also list every filling");
    c->add_flag("--json", o->json, "machine-readable output");
    c->callback([o, &rc, &out] { rc = runCount(*o, out); });
}

inline void addApply(CLI::App &app, int &rc, std::ostream &out) {
    auto o = std::make_shared<ApplyOpts>();
    auto *c = app.add_subcommand("apply", "apply a word of column operators to a partition");
    c->add_option("--word", o->word, "tokens u<i>, d<i>, ut<i>, dt<i>; rightmost acts first")->required();
    c->add_option("--shape", o->shape, "the starting partition; - for empty");
    c->add_option("--bcap", o->bcap, "degree cap of the deformation parameter b (-1 = uncapped)");
    c->add_flag("--json", o->json, "machine-readable output");
    c->callback([o, &rc, &out] { rc = runApply(*o, out); });
}

inline void addVerify(CLI::App &app, int &rc, std::ostream &out) {
    auto o = std::make_shared<VerifyOpts>();
    auto *c = app.add_subcommand("verify", "check one identity; exit 0 iff it holds");
    c->add_option("name", o->name, "identity name")->required()->check(CLI::IsMember(identityNames()));
    c->add_option("--mu", o->mu, "first shape parameter");
    c->add_option("--nu", o->nu, "second shape parameter");
    c->add_option("--k", o->k, "row/column length parameter")->check(CLI::NonNegativeNumber);
    c->add_option("--xvars", o->xvars, "number of x variables")->check(CLI::Range(0, 8));
    c->add_option("--yvars", o->yvars, "number of y variables")->check(CLI::Range(0, 8));
    c->add_option("--xcap", o->xcap, "total-degree cap of the x alphabet");
    c->add_option("--ycap", o->ycap, "total-degree cap of the y alphabet");
    c->add_option("--bcap", o->bcap, "degree cap of the deformation parameter b");
    c->add_option("--beta", o->beta, "value of the deformation parameter")
        ->check(CLI::IsMember({"formal", "0", "1", "-1"}));
    c->add_option("--bound-slack", o->slack, "widen internal summation bounds")->check(CLI::NonNegativeNumber);
    c->add_flag("--json", o->json, "machine-readable report");
    c->callback([o, &rc, &out] { rc = runVerify(*o, out); });
}

inline void addGraph(CLI::App &app, int &rc, std::ostream &out) {
    auto *g = app.add_subcommand("graph", "rank-bounded up/down graphs on partitions");
    g->require_subcommand(1);

    auto bo = std::make_shared<GraphBuildOpts>();
    auto *b = g->add_subcommand("build", "emit a graph as JSON {vertices, upEdges, downEdges}");
    b->add_option("--kind", bo->kind, "betaY, kappaY or moebiusY")
        ->required()
        ->check(CLI::IsMember({"betaY", "kappaY", "moebiusY"}));
    b->add_option("--rank", bo->rank, "keep partitions of weight <= rank")->check(CLI::NonNegativeNumber);
    b->add_option("--beta", bo->beta, "integer value for b (default: formal)");
    b->add_option("--kappa", bo->kappa, "integer value for k (default: formal)");
    b->callback([bo, &rc, &out] { rc = runGraphBuild(*bo, out); });

    auto co = std::make_shared<GraphCheckOpts>();
    auto *c = g->add_subcommand("check", "verify the up/down commutator of a graph");
    auto *kindOpt = c->add_option("--kind", co->kind, "betaY, kappaY or moebiusY")
                        ->check(CLI::IsMember({"betaY", "kappaY", "moebiusY"}));
    c->add_option("--rank", co->rank, "keep partitions of weight <= rank")->check(CLI::NonNegativeNumber);
    auto *betaOpt = c->add_option("--beta", co->beta, "integer value for b (default: formal)");
    auto *kappaOpt = c->add_option("--kappa", co->kappa, "integer value for k (default: formal)");
    c->add_flag("--cauchy", co->cauchy, "derive the rook-strip down operator from the kappa graph at -1")
        ->excludes(kindOpt)
        ->excludes(betaOpt)
        ->excludes(kappaOpt);
    c->callback([co, &rc, &out] { rc = runGraphCheck(*co, out); });
    c->add_flag("--json", co->json, "machine-readable report");

    auto wo = std::make_shared<GraphWalkOpts>();
    auto *w = g->add_subcommand("walk", "signed weighted walk sum between two partitions");
    w->add_option("--kind", wo->kind, "betaY, kappaY or moebiusY")
        ->check(CLI::IsMember({"betaY", "kappaY", "moebiusY"}));
    w->add_option("--rank", wo->rank, "keep partitions of weight <= rank")->check(CLI::NonNegativeNumber);
    w->add_option("--from", wo->from, "starting partition")->required();
    w->add_option("--to", wo->to, "ending partition")->required();
    w->add_option("--steps", wo->steps, "walk length")->required()->check(CLI::NonNegativeNumber);
    w->add_option("--dir", wo->dir, "up or down")->required()->check(CLI::IsMember({"up", "down"}));
    w->add_option("--beta", wo->beta, "integer value for b (default: formal)");
    w->add_option("--kappa", wo->kappa, "integer value for k (default: formal)");
    w->add_flag("--json", wo->json, "machine-readable output");
    w->callback([wo, &rc, &out] { rc = runGraphWalk(*wo, out); });

    auto no = std::make_shared<NormalOrderOpts>();
    auto *n = g->add_subcommand("normal-order", "check a D^n U^m reordering template");
    n->add_option("--relation", no->relation, "weyl or shifted")
        ->required()
        ->check(CLI::IsMember({"weyl", "shifted"}));
    n->add_option("--n", no->n, "down-operator power")->required()->check(CLI::NonNegativeNumber);
    n->add_option("--m", no->m, "up-operator power")->required()->check(CLI::NonNegativeNumber);
    n->add_option("--rank", no->rank, "keep partitions of weight <= rank")->check(CLI::NonNegativeNumber);
    n->add_flag("--json", no->json, "machine-readable report");
    n->callback([no, &rc, &out] { rc = runNormalOrder(*no, out); });
}

inline void addSuite(CLI::App &app, int &rc, std::ostream &out, std::ostream &err) {
    auto o = std::make_shared<SuiteOpts>();
    auto *c = app.add_subcommand("suite", "run the full acceptance battery");
    c->add_option("--threads", o->threads, "worker pool size (0 = GSYM_THREADS or machine parallelism)")
        ->check(CLI::Range(0, 256));
    c->add_flag("--json", o->json, "machine-readable summary (progress lines go to stderr)");
    c->callback([o, &rc, &out, &err] { rc = runSuite(*o, out, err); });
}

} // namespace cli_detail

inline int runCli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"symmetric Grothendieck polynomials: exact expansion, tableau counting, "
                 "identity verification and graph tooling",
                 "gsym"};
    app.require_subcommand(1);
    app.footer("Examples:\n"
               "  gsym expand --family G --shape \"2//1\" --vars 1 --xcap 2 --bcap 2\n"
               "  gsym count --family ST --shape \"2,1,1/1\" --n 2\n"
               "  gsym verify skewCauchy --mu - --nu - --xvars 1 --yvars 1 --xcap 3 --ycap 3 --bcap 3\n"
               "  gsym graph walk --kind betaY --beta 1 --rank 6 --from 2 --to 2,1 --steps 2 --dir up\n"
               "  gsym suite --threads 2");
    int rc = 0;
    cli_detail::addExpand(app, rc, out);
    cli_detail::addCount(app, rc, out);
    cli_detail::addApply(app, rc, out);
    cli_detail::addVerify(app, rc, out);
    cli_detail::addGraph(app, rc, out);
    cli_detail::addSuite(app, rc, out, err);
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

inline int runCli(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return runCli(args, std::cout, std::cerr);
}

} // namespace gsym
