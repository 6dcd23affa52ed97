#pragma once

#include "cflp/alpha.hpp"
#include "cflp/solver.hpp"

#include <ostream>
#include <vector>

namespace cflp::cli {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitParse = 2;
constexpr int kExitSolver = 3;
constexpr int kExitVerify = 4;

constexpr unsigned kMaxTableDegree = 64;
constexpr unsigned kMaxVerifyDegree = 20;

/// Reals print with 15 significant digits.
void print_real(std::ostream& os, double value);

void cmd_eval(std::ostream& out, unsigned n, const Alpha& alpha, double x, bool shifted);

/// CSV n,exponent,coeff_num,coeff_den; terms of each degree in descending exponent order.
void cmd_table(std::ostream& out, unsigned n_max, const Alpha& alpha, bool shifted);

/// CSV i,root for the k roots of the shifted polynomial of degree k.
void cmd_roots(std::ostream& out, unsigned k, const Alpha& alpha);

/// Writes the report as CSV sections, each introduced by a "# name" line.
void write_report(std::ostream& out, const SolveReport& report);

/// One "PASS name n=.. alpha=.." line per identity; returns true when all pass.
bool cmd_verify(std::ostream& out, unsigned n_max, const std::vector<Alpha>& alphas);

}  // namespace cflp::cli
