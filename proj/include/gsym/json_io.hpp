#pragma once
#include <json.hpp>

#include "filtered_graph.hpp"
#include "module_element.hpp"
#include "partition.hpp"
#include "polynomial.hpp"
#include "symfun.hpp"
#include "tableaux.hpp"

namespace gsym {

using Json = nlohmann::json;

// Polynomial <-> list of {exponents, coefficient}; coefficients as decimal strings.
inline Json toJson(const Poly &f) {
    Json arr = Json::array();
    int n = f.context().varCount();
    for (auto &[m, c] : f.terms()) {
        Json t;
        t["exponents"] = std::vector<int>(m.e.begin(), m.e.begin() + n);
        t["coefficient"] = c.str();
        arr.push_back(t);
    }
    return arr;
}

inline Poly polyFromJson(const Json &j, const TruncationContext &ctx) {
    Poly f(ctx);
    for (auto &t : j) {
        Monomial m;
        auto exps = t.at("exponents").get<std::vector<int>>();
        if ((int)exps.size() != ctx.varCount()) throw std::invalid_argument("exponent list length mismatch");
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] < 0 || exps[i] > 255) throw std::invalid_argument("bad exponent");
            m.e[i] = (uint8_t)exps[i];
        }
        f.addTerm(m, Int(t.at("coefficient").get<std::string>()));
    }
    return f;
}

inline Json toJson(const Partition &p) { return Json(p.parts()); }

inline Partition partitionFromJson(const Json &j) { return Partition(j.get<std::vector<int>>()); }

// The variable layout of a context, so exponent lists are self-describing.
inline Json variableNames(const TruncationContext &ctx) {
    Json arr = Json::array();
    for (int v = 0; v < ctx.varCount(); ++v) arr.push_back(ctx.varName(v));
    return arr;
}

inline Json toJson(const VerificationReport &r) {
    Json j;
    j["name"] = r.name;
    j["pass"] = r.pass;
    j["casesChecked"] = r.casesChecked;
    j["termsCompared"] = r.termsCompared;
    j["wallSeconds"] = r.wallSeconds;
    j["witness"] = r.witness;
    j["note"] = r.note;
    return j;
}

// Module element: list of {partition, coefficient polynomial}.
inline Json toJson(const ModuleElement &v) {
    Json arr = Json::array();
    for (auto &[p, c] : v.terms()) {
        Json t;
        t["partition"] = toJson(p);
        t["coefficient"] = c.toString();
        t["terms"] = toJson(c);
        arr.push_back(t);
    }
    return arr;
}

// Expansion in a symmetric-function basis: {basis, terms, residual, complete}.
inline Json toJson(const SymExpansion &e) {
    Json j;
    j["basis"] = toString(e.basis);
    j["alphabet"] = e.alphabet;
    j["vars"] = e.nVars;
    Json terms = Json::array();
    for (auto &[lam, c] : e.terms) {
        Json t;
        t["shape"] = toJson(lam);
        t["coefficient"] = c.toString();
        t["terms"] = toJson(c);
        terms.push_back(t);
    }
    j["terms"] = terms;
    j["residual"] = e.residual.toString();
    j["complete"] = e.complete();
    return j;
}

// One tableau: {shape, cells: [{row, col, entries}]}; unused corner cells keep
// an empty entry list.
inline Json toJson(const FillingContent &cm, const Partition &outer, const Partition &inner) {
    Json j;
    j["shape"]["outer"] = toJson(outer);
    j["shape"]["inner"] = toJson(inner);
    Json cells = Json::array();
    for (auto &[cell, entries] : cm) {
        Json c;
        c["row"] = cell.first;
        c["col"] = cell.second;
        c["entries"] = entries;
        cells.push_back(c);
    }
    j["cells"] = cells;
    return j;
}

namespace detail {

// Matrix entry (p, q) is the coefficient of p in the image of q, so the edge
// runs q -> p: "from" is the column index, "to" the row index.
inline Json edgeList(const OperatorMatrix &m) {
    Json arr = Json::array();
    for (auto &[p, row] : m.rows())
        for (auto &[q, w] : row) {
            Json e;
            e["from"] = toJson(q);
            e["to"] = toJson(p);
            e["weight"] = w.toString();
            arr.push_back(e);
        }
    return arr;
}

} // namespace detail

// Graph export: {vertices, upEdges, downEdges}.  Loops are the diagonal up
// entries with the per-vertex multiplicity folded in; the "loops" list gives
// the unfolded view.
inline Json toJson(const FilteredGraph &g) {
    Json j;
    j["kind"] = toString(g.kind);
    j["rankBound"] = g.rankBound;
    j["beta"] = g.params.beta ? Json(*g.params.beta) : Json(nullptr);
    j["kappa"] = g.params.kappa ? Json(*g.params.kappa) : Json(nullptr);
    Json verts = Json::array();
    for (auto &v : g.vertices) verts.push_back(toJson(v));
    j["vertices"] = verts;
    j["upEdges"] = detail::edgeList(g.up);
    j["downEdges"] = detail::edgeList(g.down);
    Json loops = Json::array();
    for (auto &v : g.vertices) {
        int n = g.loopCount(v);
        if (n == 0) continue;
        Json l;
        l["at"] = toJson(v);
        l["count"] = n;
        l["weightEach"] = g.loopWeightPerLoop().toString();
        loops.push_back(l);
    }
    j["loops"] = loops;
    return j;
}

} // namespace gsym
