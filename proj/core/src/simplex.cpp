#include "hypersparse/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hypersparse {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kCostTol = 1e-9;

// Dense tableau in basic form: rows_ x cols_, last column is the rhs.
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * (cols + 1), 0.0) {}

    double& at(std::size_t r, std::size_t c) { return a_[r * (cols_ + 1) + c]; }
    double at(std::size_t r, std::size_t c) const { return a_[r * (cols_ + 1) + c]; }
    double& rhs(std::size_t r) { return a_[r * (cols_ + 1) + cols_]; }
    double rhs(std::size_t r) const { return a_[r * (cols_ + 1) + cols_]; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void pivot(std::size_t pr, std::size_t pc) {
        const double inv = 1.0 / at(pr, pc);
        for (std::size_t c = 0; c <= cols_; ++c) a_[pr * (cols_ + 1) + c] *= inv;
        at(pr, pc) = 1.0;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pr) continue;
            const double factor = at(r, pc);
            if (factor == 0.0) continue;
            for (std::size_t c = 0; c <= cols_; ++c)
                a_[r * (cols_ + 1) + c] -= factor * a_[pr * (cols_ + 1) + c];
            at(r, pc) = 0.0;
        }
    }

private:
    std::size_t rows_, cols_;
    std::vector<double> a_;
};

struct Phase {
    Tableau* tab;
    std::vector<double> cost;      // reduced-cost row, length cols
    double cost_rhs = 0.0;
    std::vector<std::size_t> basis;  // basic variable per row

    void price_out(std::size_t row, std::size_t col) {
        const double factor = cost[col];
        if (factor == 0.0) return;
        for (std::size_t c = 0; c < tab->cols(); ++c) cost[c] -= factor * tab->at(row, c);
        cost_rhs -= factor * tab->rhs(row);
        cost[col] = 0.0;
    }
};

// Performs one pivot; returns false when optimal, throws on unbounded.
// Columns whose entries are all below the pivot tolerance cannot host a
// numerically sound pivot, so they are skipped rather than (wrongly)
// declared unbounded directions.
bool simplex_step(Phase& ph, bool bland, const std::vector<bool>& allowed) {
    Tableau& tab = *ph.tab;
    std::vector<char> dead;
    for (;;) {
        std::size_t enter = tab.cols();
        double best = -kCostTol;
        for (std::size_t c = 0; c < tab.cols(); ++c) {
            if (!allowed[c] || (!dead.empty() && dead[c])) continue;
            if (ph.cost[c] < -kCostTol) {
                if (bland) {
                    enter = c;
                    break;
                }
                if (ph.cost[c] < best) {
                    best = ph.cost[c];
                    enter = c;
                }
            }
        }
        if (enter == tab.cols()) return false;

        std::size_t leave = tab.rows();
        double best_ratio = std::numeric_limits<double>::infinity();
        double col_max = -std::numeric_limits<double>::infinity();
        for (std::size_t r = 0; r < tab.rows(); ++r) {
            const double a = tab.at(r, enter);
            col_max = std::max(col_max, a);
            if (a <= kPivotTol) continue;
            const double ratio = tab.rhs(r) / a;
            if (ratio < best_ratio - 1e-12 ||
                (ratio < best_ratio + 1e-12 &&
                 (leave == tab.rows() || ph.basis[r] < ph.basis[leave]))) {
                best_ratio = ratio;
                leave = r;
            }
        }
        if (leave == tab.rows()) {
            if (col_max <= 0.0) throw std::runtime_error("LP is unbounded");
            if (dead.empty()) dead.assign(tab.cols(), 0);
            dead[enter] = 1;
            continue;
        }

        tab.pivot(leave, enter);
        ph.basis[leave] = enter;
        ph.price_out(leave, enter);
        return true;
    }
}

// Dantzig pricing with a stall detector: after too many pivots without
// objective improvement (degenerate plateau) switch to Bland's rule, which
// cannot cycle, and switch back once progress resumes.
std::size_t run_phase(Phase& ph, const std::vector<bool>& allowed, std::size_t budget,
                      bool& optimal) {
    const std::size_t stall_limit = std::max<std::size_t>(50, 2 * ph.tab->rows());
    std::size_t it = 0, stall = 0;
    bool bland = false;
    double last = ph.cost_rhs;
    optimal = false;
    while (it < budget) {
        if (!simplex_step(ph, bland, allowed)) {
            optimal = true;
            break;
        }
        ++it;
        if (ph.cost_rhs > last + 1e-13 * (1.0 + std::abs(last))) {
            last = ph.cost_rhs;
            stall = 0;
            bland = false;
        } else if (++stall >= stall_limit) {
            bland = true;
        }
    }
    return it;
}

}  // namespace

LpResult solve_lp(const LinearProgram& lp, std::size_t max_iterations) {
    if (lp.objective.size() != lp.num_vars)
        throw std::invalid_argument("objective length must equal num_vars");

    const std::size_t m = lp.rows.size();
    const std::size_t n = lp.num_vars;

    // Column layout: structural | slack/surplus | artificial. A row whose
    // slack can start basic (<= with nonnegative rhs, including >= rows with
    // zero rhs after negation) needs no artificial, which keeps phase 1 tiny
    // on LPs dominated by zero-rhs inequality rows.
    std::size_t slack_count = 0, art_count = 0;
    std::vector<double> row_sign(m, 1.0);
    std::vector<LinearProgram::Relation> row_rel(m);
    for (std::size_t r = 0; r < m; ++r) {
        const auto& row = lp.rows[r];
        double sign = row.rhs < 0.0 ? -1.0 : 1.0;
        auto rel = row.relation;
        if (sign < 0.0) {
            if (rel == LinearProgram::Relation::LessEqual)
                rel = LinearProgram::Relation::GreaterEqual;
            else if (rel == LinearProgram::Relation::GreaterEqual)
                rel = LinearProgram::Relation::LessEqual;
        }
        if (rel == LinearProgram::Relation::GreaterEqual && row.rhs == 0.0) {
            sign = -sign;
            rel = LinearProgram::Relation::LessEqual;
        }
        row_sign[r] = sign;
        row_rel[r] = rel;
        if (rel != LinearProgram::Relation::Equal) ++slack_count;
        if (rel != LinearProgram::Relation::LessEqual) ++art_count;
    }
    const std::size_t slack_base = n;
    const std::size_t art_base = n + slack_count;
    const std::size_t cols = art_base + art_count;

    Tableau tab(m, cols);
    std::vector<std::size_t> basis(m);
    std::size_t next_slack = slack_base;
    std::size_t next_art = art_base;
    for (std::size_t r = 0; r < m; ++r) {
        const auto& row = lp.rows[r];
        for (const auto& [var, coeff] : row.coeffs) {
            if (var >= n) throw std::invalid_argument("constraint variable out of range");
            tab.at(r, var) += row_sign[r] * coeff;
        }
        tab.rhs(r) = row_sign[r] * row.rhs;
        if (row_rel[r] == LinearProgram::Relation::LessEqual) {
            tab.at(r, next_slack) = 1.0;
            basis[r] = next_slack++;
        } else {
            if (row_rel[r] == LinearProgram::Relation::GreaterEqual)
                tab.at(r, next_slack++) = -1.0;
            tab.at(r, next_art) = 1.0;
            basis[r] = next_art++;
        }
    }

    LpResult result;

    // Phase 1: minimize the artificial sum.
    Phase ph{&tab, std::vector<double>(cols, 0.0), 0.0, basis};
    for (std::size_t r = 0; r < m; ++r) {
        if (ph.basis[r] < art_base) continue;
        for (std::size_t c = 0; c < cols; ++c) ph.cost[c] -= tab.at(r, c);
        ph.cost_rhs -= tab.rhs(r);
    }
    for (std::size_t c = art_base; c < cols; ++c) ph.cost[c] = 0.0;

    std::vector<bool> allowed(cols, true);
    bool optimal = false;
    std::size_t iter = 0;
    if (art_count > 0) iter = run_phase(ph, allowed, max_iterations, optimal);
    else optimal = true;
    result.phase1_iterations = iter;
    if (!optimal) return result;
    if (-ph.cost_rhs > 1e-7) {
        result.status = LpResult::Status::Infeasible;
        return result;
    }

    // Drive leftover (degenerate) artificials out of the basis.
    for (std::size_t r = 0; r < m; ++r) {
        if (ph.basis[r] < art_base) continue;
        std::size_t pivot_col = cols;
        for (std::size_t c = 0; c < art_base; ++c) {
            if (std::abs(tab.at(r, c)) > kPivotTol) {
                pivot_col = c;
                break;
            }
        }
        if (pivot_col == cols) continue;  // redundant row
        tab.pivot(r, pivot_col);
        ph.basis[r] = pivot_col;
    }
    for (std::size_t c = art_base; c < cols; ++c) allowed[c] = false;

    // Phase 2: original objective, repriced against the current basis.
    std::fill(ph.cost.begin(), ph.cost.end(), 0.0);
    ph.cost_rhs = 0.0;
    for (std::size_t v = 0; v < n; ++v) ph.cost[v] = lp.objective[v];
    for (std::size_t r = 0; r < m; ++r)
        if (ph.basis[r] < art_base) ph.price_out(r, ph.basis[r]);

    std::size_t iter2 = 0;
    try {
        iter2 = run_phase(ph, allowed, max_iterations - iter, optimal);
    } catch (const std::runtime_error&) {
        result.status = LpResult::Status::Unbounded;
        result.iterations = iter + iter2;
        return result;
    }
    result.iterations = iter + iter2;
    if (!optimal) return result;

    result.status = LpResult::Status::Optimal;
    result.x.assign(n, 0.0);
    for (std::size_t r = 0; r < m; ++r)
        if (ph.basis[r] < n) result.x[ph.basis[r]] = tab.rhs(r);
    result.objective = 0.0;
    for (std::size_t v = 0; v < n; ++v) result.objective += lp.objective[v] * result.x[v];
    return result;
}

}  // namespace hypersparse
