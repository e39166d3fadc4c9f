#pragma once

#include <string>
#include <vector>

#include "opforge/expansion.hpp"
#include "opforge/koszul.hpp"

namespace opforge {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CheckOptions {
    int arity = 4;  // bound for the arity-parameterised suites
};

// Named check suites exposed through the CLI:
//   tau-dernov, tau-nov, split, independence-bicom-dual, self-dual-nov,
//   self-dual-bicom, census-nov, census-bicom, dual-dernov,
//   cross-oracle-dual, weights, all
const std::vector<std::string>& check_suite_names();
std::vector<CheckResult> run_check_suite(const std::string& suite, const CheckOptions& opts);

// Rows = the relation polynomials of degree n as vectors over the descending
// multilinear basis columns (no consequence closure).
SparseMatrix relations_matrix(const Presentation& p, int n);

// Dual relation span extracted with right factors reduced via tau-image
// coordinates instead of the normal-form basis (two-operation quadratic
// presentations).
SparseMatrix dual_span_via_tau(const Presentation& p);

}  // namespace opforge
