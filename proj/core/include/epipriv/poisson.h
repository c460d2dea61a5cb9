// Copyright 2026 The epipriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EPIPRIV_POISSON_H_
#define EPIPRIV_POISSON_H_

#include <span>
#include <string>
#include <vector>

namespace epipriv {

// One subgroup cell: the categorical level of each factor, the (possibly
// sanitized, hence real-valued) case count, and the subgroup population
// used as the rate offset.
struct SubgroupRow {
  std::vector<std::string> levels;
  double count = 0.0;
  double population = 1.0;
};

struct SubgroupTable {
  std::vector<std::string> factor_names;
  // Declared levels per factor; the first level is the reference.
  std::vector<std::vector<std::string>> factor_levels;
  std::vector<SubgroupRow> rows;

  // Throws ValidationError on structural problems: no rows, level/factor
  // arity mismatches, unknown levels, negative counts, or non-positive
  // populations.
  void validate() const;
};

// Poisson log-linear fit with offset log(population), dummy coding with the
// first level as reference. interaction_degree selects the terms: 0 =
// intercept only, 1 = main effects, 2 = + all two-way interactions, 3 =
// + all three-way interactions.
struct PoissonFit {
  std::vector<std::string> coefficient_names;  // "(Intercept)" first
  std::vector<double> coefficients;
  std::vector<double> std_errors;  // asymptotic, from the final IRLS weights
  bool converged = false;
  int iterations = 0;
  double deviance = 0.0;
};

// Iteratively reweighted least squares, starting from zero coefficients
// with the intercept at log(total count / total population). Convergence:
// |dev - dev_prev| / (|dev| + 0.1) < 1e-8, at most 50 iterations; hitting
// the cap leaves `converged` false. An all-zero count table is degenerate
// (the likelihood has no finite maximizer) and comes back flagged
// unconverged without iterating. Throws ValidationError for a
// rank-deficient design.
PoissonFit fit_poisson(const SubgroupTable& table, int interaction_degree);

// Side-by-side coefficients from fitting the same model to the original and
// the sanitized counts.
struct CoefficientComparison {
  std::string name;
  double original = 0.0;
  double sanitized = 0.0;
  bool sign_agree = true;
};

struct ModelComparison {
  int degree = 0;
  bool original_converged = false;
  bool sanitized_converged = false;
  std::vector<CoefficientComparison> coefficients;
};

// Fits each requested interaction degree to both tables and pairs up the
// coefficients. The tables must have identical factor structure.
std::vector<ModelComparison> compare_fits(const SubgroupTable& original,
                                          const SubgroupTable& sanitized,
                                          std::span<const int> degrees);

}  // namespace epipriv

#endif  // EPIPRIV_POISSON_H_
