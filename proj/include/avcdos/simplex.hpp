#pragma once

// Two-phase primal simplex over exact rationals with Bland's anti-cycling
// rule. Entering variable: smallest column index with negative reduced cost;
// leaving variable: smallest basis index among minimum-ratio rows. Both rules
// make witnesses, certificates and argmins reproducible across runs.
//
// Standard-form conversion (slacks, splitting of free variables, rhs sign
// flips) is internal; results are always mapped back to the caller's
// variables and constraint order. Infeasibility certificates are read off the
// terminal phase-1 tableau and re-verified before being returned.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "avcdos/linear_system.hpp"
#include "avcdos/rational.hpp"

namespace avcdos {

namespace detail {

struct StdCol {
    int orig;  // original variable index, or -1 for a slack column
    int sign;  // +1 or -1 (free variables are split into two signed columns)
};

struct StandardForm {
    std::vector<StdCol> cols;      // structural + slack columns
    std::vector<bool> row_is_eq;   // per standard row
    std::vector<int> row_index;    // original equality / inequality index
    std::vector<int> row_sigma;    // +1/-1 flip applied to make rhs >= 0
    std::vector<RVector> a;        // m rows of length cols.size()
    RVector b;                     // m, all >= 0
};

inline StandardForm build_standard_form(const LinearSystem& sys) {
    StandardForm sf;
    std::vector<std::vector<std::size_t>> var_cols(static_cast<std::size_t>(sys.num_vars));
    for (int j = 0; j < sys.num_vars; ++j) {
        var_cols[static_cast<std::size_t>(j)].push_back(sf.cols.size());
        sf.cols.push_back({j, +1});
        if (!sys.nonneg_vars.count(j)) {
            var_cols[static_cast<std::size_t>(j)].push_back(sf.cols.size());
            sf.cols.push_back({j, -1});
        }
    }
    const std::size_t num_struct = sf.cols.size();
    const std::size_t num_slack = sys.inequalities.size();
    for (std::size_t i = 0; i < num_slack; ++i) sf.cols.push_back({-1, +1});

    auto add_row = [&](const LinearRow& r, bool is_eq, int index, std::size_t slack_pos) {
        RVector row(sf.cols.size(), Rat(0));
        for (int j = 0; j < sys.num_vars; ++j) {
            const Rat& c = r.coeffs[static_cast<std::size_t>(j)];
            if (c == 0) continue;
            for (std::size_t col : var_cols[static_cast<std::size_t>(j)])
                row[col] = sf.cols[col].sign > 0 ? c : -c;
        }
        Rat rhs = r.rhs;
        if (!is_eq) row[num_struct + slack_pos] = 1;
        int sigma = 1;
        if (rhs < 0) {
            sigma = -1;
            for (Rat& c : row) c = -c;
            rhs = -rhs;
        }
        sf.row_is_eq.push_back(is_eq);
        sf.row_index.push_back(index);
        sf.row_sigma.push_back(sigma);
        sf.a.push_back(std::move(row));
        sf.b.push_back(std::move(rhs));
    };

    for (std::size_t e = 0; e < sys.equalities.size(); ++e)
        add_row(sys.equalities[e], true, static_cast<int>(e), 0);
    for (std::size_t i = 0; i < sys.inequalities.size(); ++i)
        add_row(sys.inequalities[i], false, static_cast<int>(i), i);
    return sf;
}

// Dense tableau with one artificial variable per row.
class Simplex {
  public:
    explicit Simplex(StandardForm sf) : sf_(std::move(sf)) {
        const std::size_t m = sf_.a.size();
        const std::size_t n = sf_.cols.size();
        ncols_ = n + m;
        rows_ = sf_.a;
        for (std::size_t i = 0; i < m; ++i) {
            rows_[i].resize(ncols_, Rat(0));
            rows_[i][n + i] = 1;
            basis_.push_back(static_cast<int>(n + i));
        }
        rhs_ = sf_.b;
        banned_.assign(ncols_, false);
    }

    // Minimizes the artificial sum. Returns the optimum (0 iff feasible).
    Rat phase1() {
        const std::size_t n = sf_.cols.size();
        cost_.assign(ncols_, Rat(0));
        for (std::size_t j = n; j < ncols_; ++j) cost_[j] = 1;
        reduce_cost_row();
        iterate();
        Rat w(0);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (basis_[i] >= static_cast<int>(n)) w += rhs_[i];
        return w;
    }

    // Farkas multipliers of the flipped standard rows: y_i = 1 - zbar(artificial_i).
    RVector phase1_duals() const {
        const std::size_t n = sf_.cols.size();
        RVector y(rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i) y[i] = Rat(1) - z_[n + i];
        return y;
    }

    // Pivots zero-valued artificials out of the basis; drops redundant rows.
    void purge_artificials() {
        const int n = static_cast<int>(sf_.cols.size());
        for (std::size_t i = 0; i < rows_.size();) {
            if (basis_[i] < n) {
                ++i;
                continue;
            }
            std::size_t piv = ncols_;
            for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
                if (rows_[i][j] != 0) {
                    piv = j;
                    break;
                }
            if (piv == ncols_) {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                pivot(i, piv);
                ++i;
            }
        }
        for (std::size_t j = static_cast<std::size_t>(n); j < ncols_; ++j) banned_[j] = true;
    }

    enum class Phase2 { Optimal, Unbounded };

    Phase2 phase2(const RVector& std_cost) {
        cost_.assign(ncols_, Rat(0));
        for (std::size_t j = 0; j < std_cost.size(); ++j) cost_[j] = std_cost[j];
        reduce_cost_row();
        return iterate() ? Phase2::Optimal : Phase2::Unbounded;
    }

    // Basic solution on the structural columns.
    RVector structural_solution() const {
        RVector x(sf_.cols.size(), Rat(0));
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (basis_[i] < static_cast<int>(sf_.cols.size()))
                x[static_cast<std::size_t>(basis_[i])] = rhs_[i];
        return x;
    }

    const StandardForm& sf() const { return sf_; }

  private:
    void reduce_cost_row() {
        z_ = cost_;
        zval_ = 0;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rat cb = cost_[static_cast<std::size_t>(basis_[i])];
            if (cb == 0) continue;
            for (std::size_t j = 0; j < ncols_; ++j) z_[j] -= cb * rows_[i][j];
            zval_ += cb * rhs_[i];
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        const Rat p = rows_[r][c];
        if (p != 1) {
            for (std::size_t j = 0; j < ncols_; ++j) rows_[r][j] /= p;
            rhs_[r] /= p;
        }
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == r || rows_[i][c] == 0) continue;
            const Rat f = rows_[i][c];
            for (std::size_t j = 0; j < ncols_; ++j) rows_[i][j] -= f * rows_[r][j];
            rhs_[i] -= f * rhs_[r];
        }
        if (z_[c] != 0) {
            const Rat f = z_[c];
            for (std::size_t j = 0; j < ncols_; ++j) z_[j] -= f * rows_[r][j];
            zval_ -= f * rhs_[r];
        }
        const int leaving = basis_[r];
        if (leaving >= static_cast<int>(sf_.cols.size()))
            banned_[static_cast<std::size_t>(leaving)] = true;  // artificials never re-enter
        basis_[r] = static_cast<int>(c);
    }

    // Returns true on optimality, false on unboundedness.
    bool iterate() {
        for (;;) {
            std::size_t enter = ncols_;
            for (std::size_t j = 0; j < ncols_; ++j)
                if (!banned_[j] && z_[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == ncols_) return true;
            std::size_t leave = rows_.size();
            Rat best_ratio(0);
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (rows_[i][enter] <= 0) continue;
                const Rat ratio = rhs_[i] / rows_[i][enter];
                if (leave == rows_.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == rows_.size()) return false;
            pivot(leave, enter);
        }
    }

    StandardForm sf_;
    std::vector<RVector> rows_;
    RVector rhs_;
    std::vector<int> basis_;
    std::vector<bool> banned_;
    RVector cost_, z_;
    Rat zval_;
    std::size_t ncols_ = 0;
};

inline RVector map_back_solution(const StandardForm& sf, const RVector& std_x, int num_vars) {
    RVector x(static_cast<std::size_t>(num_vars), Rat(0));
    for (std::size_t j = 0; j < sf.cols.size(); ++j) {
        if (sf.cols[j].orig < 0) continue;
        if (sf.cols[j].sign > 0)
            x[static_cast<std::size_t>(sf.cols[j].orig)] += std_x[j];
        else
            x[static_cast<std::size_t>(sf.cols[j].orig)] -= std_x[j];
    }
    return x;
}

// Converts phase-1 duals on the flipped standard rows into certificate
// multipliers on the caller's constraints (see linear_system.hpp for the
// convention being targeted).
inline RVector map_back_farkas(const StandardForm& sf, const RVector& y,
                               const LinearSystem& sys) {
    RVector cert(sys.num_constraints(), Rat(0));
    const std::size_t ne = sys.equalities.size();
    for (std::size_t r = 0; r < y.size(); ++r) {
        const Rat yhat = sf.row_sigma[r] > 0 ? y[r] : -y[r];
        if (sf.row_is_eq[r])
            cert[static_cast<std::size_t>(sf.row_index[r])] = -yhat;
        else
            cert[ne + static_cast<std::size_t>(sf.row_index[r])] = -yhat;
    }
    return cert;
}

}  // namespace detail

// Exact feasibility decision; always returns a re-verifiable witness or
// Farkas certificate.
inline FeasibilityResult lp_feasible(const LinearSystem& sys) {
    check_well_formed(sys);
    detail::Simplex sx(detail::build_standard_form(sys));
    const Rat w = sx.phase1();
    FeasibilityResult res;
    if (w > 0) {
        res.status = Feasibility::Infeasible;
        res.farkas = detail::map_back_farkas(sx.sf(), sx.phase1_duals(), sys);
        if (!verify_farkas(sys, res.farkas))
            throw std::logic_error("simplex produced an invalid Farkas certificate");
        return res;
    }
    res.status = Feasibility::Feasible;
    res.witness = detail::map_back_solution(sx.sf(), sx.structural_solution(), sys.num_vars);
    if (!check_witness(sys, res.witness))
        throw std::logic_error("simplex produced an invalid witness");
    return res;
}

// Exact optimization over the system's polyhedron.
inline OptimizationResult lp_optimize(const LinearSystem& sys, const RVector& objective,
                                      Sense sense) {
    check_well_formed(sys);
    if (objective.size() != static_cast<std::size_t>(sys.num_vars))
        throw MalformedSystem("objective length != num_vars");
    detail::Simplex sx(detail::build_standard_form(sys));
    OptimizationResult res;
    const Rat w = sx.phase1();
    if (w > 0) {
        res.status = OptStatus::Infeasible;
        res.farkas = detail::map_back_farkas(sx.sf(), sx.phase1_duals(), sys);
        if (!verify_farkas(sys, res.farkas))
            throw std::logic_error("simplex produced an invalid Farkas certificate");
        return res;
    }
    sx.purge_artificials();
    RVector std_cost(sx.sf().cols.size(), Rat(0));
    for (std::size_t j = 0; j < sx.sf().cols.size(); ++j) {
        const auto& col = sx.sf().cols[j];
        if (col.orig < 0) continue;
        Rat c = objective[static_cast<std::size_t>(col.orig)];
        if (col.sign < 0) c = -c;
        if (sense == Sense::Maximize) c = -c;
        std_cost[j] = c;
    }
    if (sx.phase2(std_cost) == detail::Simplex::Phase2::Unbounded) {
        res.status = OptStatus::Unbounded;
        return res;
    }
    res.status = OptStatus::Optimal;
    res.argmin = detail::map_back_solution(sx.sf(), sx.structural_solution(), sys.num_vars);
    if (!check_witness(sys, res.argmin))
        throw std::logic_error("simplex produced an infeasible optimizer");
    res.value = dot(objective, res.argmin);
    return res;
}

}  // namespace avcdos
