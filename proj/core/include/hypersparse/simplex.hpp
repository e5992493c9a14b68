// simplex.hpp - dense two-phase simplex with a Bland anti-cycling guard
#ifndef HYPERSPARSE_SIMPLEX_HPP
#define HYPERSPARSE_SIMPLEX_HPP

#include <cstddef>
#include <utility>
#include <vector>

namespace hypersparse {

// min c.x subject to rows of sparse constraints, x >= 0.
struct LinearProgram {
    enum class Relation { LessEqual, Equal, GreaterEqual };
    struct Row {
        std::vector<std::pair<std::size_t, double>> coeffs;
        Relation relation;
        double rhs;
    };

    std::size_t num_vars = 0;
    std::vector<double> objective;  // length num_vars
    std::vector<Row> rows;

    void add_row(std::vector<std::pair<std::size_t, double>> coeffs, Relation rel, double rhs) {
        rows.push_back({std::move(coeffs), rel, rhs});
    }
};

struct LpResult {
    enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };
    Status status = Status::IterationLimit;
    std::vector<double> x;
    double objective = 0.0;
    std::size_t iterations = 0;
    std::size_t phase1_iterations = 0;
};

LpResult solve_lp(const LinearProgram& lp, std::size_t max_iterations = 200000);

}  // namespace hypersparse

#endif
