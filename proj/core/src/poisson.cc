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

#include "epipriv/poisson.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "epipriv/error.h"

namespace epipriv {

void SubgroupTable::validate() const {
  if (factor_names.size() != factor_levels.size()) {
    throw ValidationError("factor names and level lists differ in length");
  }
  for (std::size_t f = 0; f < factor_levels.size(); ++f) {
    if (factor_levels[f].size() < 2) {
      throw ValidationError("factor '" + factor_names[f] +
                            "' needs at least two levels");
    }
  }
  if (rows.empty()) {
    throw ValidationError("subgroup table has no rows");
  }
  for (const SubgroupRow& row : rows) {
    if (row.levels.size() != factor_names.size()) {
      throw ValidationError("row arity does not match factor count");
    }
    for (std::size_t f = 0; f < row.levels.size(); ++f) {
      const std::vector<std::string>& levels = factor_levels[f];
      if (std::find(levels.begin(), levels.end(), row.levels[f]) ==
          levels.end()) {
        throw ValidationError("unknown level '" + row.levels[f] +
                              "' for factor '" + factor_names[f] + "'");
      }
    }
    if (!(row.count >= 0.0) || !std::isfinite(row.count)) {
      throw ValidationError("counts must be nonnegative and finite");
    }
    if (!(row.population > 0.0) || !std::isfinite(row.population)) {
      throw ValidationError("populations must be positive and finite");
    }
  }
}

namespace {

// Column-builder for the dummy-coded design with interactions. Each term is
// a set of (factor, non-reference level) pairs; degree = set size.
struct Term {
  std::string name;
  std::vector<std::pair<std::size_t, std::size_t>> factors;  // (factor, level)
};

std::vector<Term> enumerate_terms(const SubgroupTable& table, int degree) {
  std::vector<Term> terms;
  const std::size_t nf = table.factor_names.size();

  // Single-factor dummies, in factor order.
  std::vector<std::vector<Term>> singles(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    for (std::size_t l = 1; l < table.factor_levels[f].size(); ++l) {
      singles[f].push_back(Term{
          table.factor_names[f] + "_" + table.factor_levels[f][l],
          {{f, l}}});
    }
  }

  // Products of dummies over factor subsets of size d, lexicographic.
  std::vector<std::size_t> combo;
  auto expand = [&](auto&& self, std::size_t start, int remaining) -> void {
    if (remaining == 0) {
      std::vector<Term> built{Term{}};
      for (std::size_t f : combo) {
        std::vector<Term> next;
        for (const Term& base : built) {
          for (const Term& s : singles[f]) {
            Term t = base;
            t.name = t.name.empty() ? s.name : t.name + ":" + s.name;
            t.factors.push_back(s.factors.front());
            next.push_back(std::move(t));
          }
        }
        built = std::move(next);
      }
      terms.insert(terms.end(), built.begin(), built.end());
      return;
    }
    for (std::size_t f = start; f < nf; ++f) {
      combo.push_back(f);
      self(self, f + 1, remaining - 1);
      combo.pop_back();
    }
  };
  for (int d = 1; d <= degree; ++d) {
    expand(expand, 0, d);
  }
  return terms;
}

Eigen::MatrixXd build_design(const SubgroupTable& table,
                             const std::vector<Term>& terms) {
  const std::size_t n = table.rows.size();
  Eigen::MatrixXd x(n, terms.size() + 1);
  x.col(0).setOnes();
  for (std::size_t r = 0; r < n; ++r) {
    const SubgroupRow& row = table.rows[r];
    for (std::size_t t = 0; t < terms.size(); ++t) {
      double v = 1.0;
      for (auto [f, l] : terms[t].factors) {
        v *= row.levels[f] == table.factor_levels[f][l] ? 1.0 : 0.0;
      }
      x(r, t + 1) = v;
    }
  }
  return x;
}

double poisson_deviance(const Eigen::VectorXd& y, const Eigen::VectorXd& mu) {
  double dev = 0.0;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (y[i] > 0.0) {
      dev += y[i] * std::log(y[i] / mu[i]) - (y[i] - mu[i]);
    } else {
      dev += mu[i];
    }
  }
  return 2.0 * dev;
}

}  // namespace

PoissonFit fit_poisson(const SubgroupTable& table, int interaction_degree) {
  table.validate();
  if (interaction_degree < 0 || interaction_degree > 3) {
    throw ValidationError("interaction degree must be in {0, 1, 2, 3}");
  }
  const std::vector<Term> terms = enumerate_terms(table, interaction_degree);

  PoissonFit fit;
  fit.coefficient_names.push_back("(Intercept)");
  for (const Term& t : terms) {
    fit.coefficient_names.push_back(t.name);
  }

  const std::size_t n = table.rows.size();
  const std::size_t p = terms.size() + 1;
  if (n < p) {
    throw ValidationError("more coefficients than rows; design is singular");
  }
  const Eigen::MatrixXd x = build_design(table, terms);
  {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(x);
    qr.setThreshold(1e-10);
    if (qr.rank() < static_cast<Eigen::Index>(p)) {
      throw ValidationError("design matrix is rank deficient");
    }
  }

  Eigen::VectorXd y(n), offset(n);
  double total_count = 0.0;
  double total_pop = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    y[r] = table.rows[r].count;
    offset[r] = std::log(table.rows[r].population);
    total_count += table.rows[r].count;
    total_pop += table.rows[r].population;
  }

  fit.coefficients.assign(p, 0.0);
  fit.std_errors.assign(p, 0.0);
  if (total_count <= 0.0) {
    // Likelihood increases without bound as the intercept goes to -inf.
    return fit;
  }

  Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
  beta[0] = std::log(total_count / total_pop);

  constexpr int kMaxIterations = 50;
  constexpr double kTolerance = 1e-8;
  double deviance_prev = std::numeric_limits<double>::infinity();
  for (int iter = 1; iter <= kMaxIterations; ++iter) {
    const Eigen::VectorXd eta = x * beta + offset;
    const Eigen::VectorXd mu = eta.array().exp();
    const double deviance = poisson_deviance(y, mu);
    fit.iterations = iter;
    fit.deviance = deviance;
    if (std::abs(deviance - deviance_prev) / (std::abs(deviance) + 0.1) <
        kTolerance) {
      fit.converged = true;
      break;
    }
    deviance_prev = deviance;

    // Weighted least squares on the working response z = eta - offset +
    // (y - mu)/mu with weights mu.
    const Eigen::VectorXd z =
        (eta - offset).array() + (y - mu).array() / mu.array();
    const Eigen::MatrixXd xtwx = x.transpose() * (mu.asDiagonal() * x);
    beta = xtwx.ldlt().solve(x.transpose() * (mu.asDiagonal() * z));
  }

  for (std::size_t c = 0; c < p; ++c) {
    fit.coefficients[c] = beta[c];
  }
  if (fit.converged) {
    const Eigen::VectorXd mu = (x * beta + offset).array().exp();
    const Eigen::MatrixXd xtwx = x.transpose() * (mu.asDiagonal() * x);
    const Eigen::MatrixXd cov =
        xtwx.ldlt().solve(Eigen::MatrixXd::Identity(p, p));
    for (std::size_t c = 0; c < p; ++c) {
      fit.std_errors[c] = std::sqrt(std::max(0.0, cov(c, c)));
    }
  }
  return fit;
}

std::vector<ModelComparison> compare_fits(const SubgroupTable& original,
                                          const SubgroupTable& sanitized,
                                          std::span<const int> degrees) {
  if (original.factor_names != sanitized.factor_names ||
      original.factor_levels != sanitized.factor_levels ||
      original.rows.size() != sanitized.rows.size()) {
    throw ValidationError("tables differ in factor structure");
  }
  for (std::size_t r = 0; r < original.rows.size(); ++r) {
    if (original.rows[r].levels != sanitized.rows[r].levels) {
      throw ValidationError("tables differ in row ordering");
    }
  }
  std::vector<ModelComparison> out;
  for (int degree : degrees) {
    const PoissonFit a = fit_poisson(original, degree);
    const PoissonFit b = fit_poisson(sanitized, degree);
    ModelComparison cmp;
    cmp.degree = degree;
    cmp.original_converged = a.converged;
    cmp.sanitized_converged = b.converged;
    for (std::size_t c = 0; c < a.coefficients.size(); ++c) {
      CoefficientComparison cc;
      cc.name = a.coefficient_names[c];
      cc.original = a.coefficients[c];
      cc.sanitized = b.coefficients[c];
      cc.sign_agree = (a.coefficients[c] >= 0.0) == (b.coefficients[c] >= 0.0);
      cmp.coefficients.push_back(std::move(cc));
    }
    out.push_back(std::move(cmp));
  }
  return out;
}

}  // namespace epipriv
