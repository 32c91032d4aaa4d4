#pragma once

// Exact linear equality/inequality systems over the rationals, with
// re-checkable feasibility witnesses and Farkas infeasibility certificates.
//
// Certificate convention (fixed across the library): a certificate is one
// multiplier per constraint, equalities first and then inequalities, in
// declaration order. Multipliers on inequalities must be >= 0; equality
// multipliers are unrestricted. Writing v = sum_e y_e a_e + sum_i y_i c_i and
// beta = sum_e y_e b_e + sum_i y_i d_i, the certificate proves infeasibility
// when v_j = 0 for every free variable, v_j >= 0 for every nonnegative
// variable, and beta < 0: any feasible point would give 0 <= v.x <= beta.

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "avcdos/rational.hpp"

namespace avcdos {

struct MalformedSystem : std::runtime_error {
    explicit MalformedSystem(const std::string& what) : std::runtime_error(what) {}
};

struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// One linear row: coeffs . x (= | <=) rhs.
struct LinearRow {
    RVector coeffs;
    Rat rhs;
};

struct LinearSystem {
    int num_vars = 0;
    std::vector<LinearRow> equalities;    // a.x == b
    std::vector<LinearRow> inequalities;  // a.x <= b
    std::set<int> nonneg_vars;            // x_j >= 0 for j in this set

    void add_eq(RVector a, Rat b) { equalities.push_back({std::move(a), std::move(b)}); }
    void add_le(RVector a, Rat b) { inequalities.push_back({std::move(a), std::move(b)}); }
    // a.x >= b stored as -a.x <= -b.
    void add_ge(RVector a, Rat b) {
        for (Rat& c : a) c = -c;
        inequalities.push_back({std::move(a), -b});
    }
    void require_all_nonneg() {
        for (int j = 0; j < num_vars; ++j) nonneg_vars.insert(j);
    }

    std::size_t num_constraints() const { return equalities.size() + inequalities.size(); }
};

inline void check_well_formed(const LinearSystem& sys) {
    if (sys.num_vars < 0) throw MalformedSystem("negative variable count");
    for (const LinearRow& r : sys.equalities)
        if (r.coeffs.size() != static_cast<std::size_t>(sys.num_vars))
            throw MalformedSystem("equality row length != num_vars");
    for (const LinearRow& r : sys.inequalities)
        if (r.coeffs.size() != static_cast<std::size_t>(sys.num_vars))
            throw MalformedSystem("inequality row length != num_vars");
    for (int j : sys.nonneg_vars)
        if (j < 0 || j >= sys.num_vars) throw MalformedSystem("nonneg index out of range");
}

// Exact satisfaction check of every constraint by x.
inline bool check_witness(const LinearSystem& sys, const RVector& x) {
    if (x.size() != static_cast<std::size_t>(sys.num_vars)) return false;
    for (const LinearRow& r : sys.equalities)
        if (dot(r.coeffs, x) != r.rhs) return false;
    for (const LinearRow& r : sys.inequalities)
        if (dot(r.coeffs, x) > r.rhs) return false;
    for (int j : sys.nonneg_vars)
        if (x[static_cast<std::size_t>(j)] < 0) return false;
    return true;
}

// True iff cert is a sign-valid combination of the constraints into the
// contradiction 0 <= negative. Returns false (never throws) on malformed
// certificates so it is safe on untrusted input.
inline bool verify_farkas(const LinearSystem& sys, const RVector& cert) {
    if (cert.size() != sys.num_constraints()) return false;
    const std::size_t ne = sys.equalities.size();
    RVector combined(static_cast<std::size_t>(sys.num_vars), Rat(0));
    Rat beta(0);
    for (std::size_t e = 0; e < ne; ++e) {
        const Rat& y = cert[e];
        if (y == 0) continue;
        for (int j = 0; j < sys.num_vars; ++j)
            combined[static_cast<std::size_t>(j)] += y * sys.equalities[e].coeffs[static_cast<std::size_t>(j)];
        beta += y * sys.equalities[e].rhs;
    }
    for (std::size_t i = 0; i < sys.inequalities.size(); ++i) {
        const Rat& y = cert[ne + i];
        if (y < 0) return false;
        if (y == 0) continue;
        for (int j = 0; j < sys.num_vars; ++j)
            combined[static_cast<std::size_t>(j)] += y * sys.inequalities[i].coeffs[static_cast<std::size_t>(j)];
        beta += y * sys.inequalities[i].rhs;
    }
    for (int j = 0; j < sys.num_vars; ++j) {
        const Rat& v = combined[static_cast<std::size_t>(j)];
        if (sys.nonneg_vars.count(j)) {
            if (v < 0) return false;
        } else if (v != 0) {
            return false;
        }
    }
    return beta < 0;
}

enum class Feasibility { Feasible, Infeasible };

struct FeasibilityResult {
    Feasibility status = Feasibility::Infeasible;
    RVector witness;  // set when Feasible; exact solution of the system
    RVector farkas;   // set when Infeasible (may be empty for verdict-only oracles)

    bool feasible() const { return status == Feasibility::Feasible; }
};

enum class OptStatus { Optimal, Infeasible, Unbounded };

struct OptimizationResult {
    OptStatus status = OptStatus::Infeasible;
    Rat value;       // set when Optimal
    RVector argmin;  // optimizer (for either sense); set when Optimal
    RVector farkas;  // set when Infeasible
};

enum class Sense { Minimize, Maximize };

// Plain-text dump used by the debug flag of the CLI and by bug reports.
inline std::string dump_system(const LinearSystem& sys) {
    std::string out = "vars " + std::to_string(sys.num_vars) + " / E " +
                      std::to_string(sys.equalities.size()) + " / I " +
                      std::to_string(sys.inequalities.size()) + "\n";
    auto row = [](const LinearRow& r, const char* rel) {
        std::string line;
        for (std::size_t j = 0; j < r.coeffs.size(); ++j) {
            if (j) line += " ";
            line += to_string(r.coeffs[j]);
        }
        line += std::string(" ") + rel + " " + to_string(r.rhs);
        return line;
    };
    for (const LinearRow& r : sys.equalities) out += "E " + row(r, "=") + "\n";
    for (const LinearRow& r : sys.inequalities) out += "I " + row(r, "<=") + "\n";
    out += "N";
    for (int j : sys.nonneg_vars) out += " " + std::to_string(j);
    out += "\n";
    return out;
}

}  // namespace avcdos
