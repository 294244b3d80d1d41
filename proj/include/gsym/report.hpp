#pragma once
#include <chrono>
#include <sstream>
#include <string>

#include "polynomial.hpp"

namespace gsym {

// Outcome of one verification run.  On failure the witness pinpoints the first
// (minimal-degree) differing monomial with both coefficients.
struct VerificationReport {
    std::string name;
    bool pass = true;
    long long casesChecked = 0;
    long long termsCompared = 0;
    double wallSeconds = 0;
    std::string witness;
    std::string note;

    void recordFailure(const std::string &w) {
        if (pass) {
            pass = false;
            witness = w;
        }
    }

    std::string summary() const {
        std::ostringstream os;
        os << name << ": " << (pass ? "pass" : "FAIL") << " (" << casesChecked << " cases, " << termsCompared
           << " terms)";
        if (!pass) os << " witness: " << witness;
        if (!note.empty()) os << " [" << note << "]";
        return os.str();
    }
};

// Compare two polynomials; on mismatch record the minimal-degree differing
// monomial (map order is graded, so the first difference is minimal).
inline bool compareAndRecord(VerificationReport &rep, const std::string &tag, const Poly &lhs, const Poly &rhs) {
    rep.termsCompared += (long long)lhs.termCount() + (long long)rhs.termCount();
    if (lhs == rhs) return true;
    auto itL = lhs.terms().begin(), endL = lhs.terms().end();
    auto itR = rhs.terms().begin(), endR = rhs.terms().end();
    Monomial m;
    Int a = 0, b = 0;
    while (itL != endL || itR != endR) {
        if (itR == endR || (itL != endL && itL->first < itR->first)) {
            m = itL->first;
            a = itL->second;
            b = rhs.coefficientOf(m);
        } else if (itL == endL || itR->first < itL->first) {
            m = itR->first;
            b = itR->second;
            a = lhs.coefficientOf(m);
        } else {
            if (itL->second != itR->second) {
                m = itL->first;
                a = itL->second;
                b = itR->second;
            } else {
                ++itL;
                ++itR;
                continue;
            }
        }
        break;
    }
    std::ostringstream os;
    const auto &ctx = lhs.context();
    os << tag << " at ";
    bool any = false;
    for (int v = 0; v < ctx.varCount(); ++v)
        if (m.e[v]) {
            if (any) os << "*";
            os << ctx.varName(v);
            if (m.e[v] > 1) os << "^" << (int)m.e[v];
            any = true;
        }
    if (!any) os << "1";
    os << ": lhs=" << a << " rhs=" << b;
    rep.recordFailure(os.str());
    return false;
}

class Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

} // namespace gsym
