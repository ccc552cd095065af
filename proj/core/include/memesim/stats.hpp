#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace memesim::stats {

/// n observations of k features; the intercept column is implicit.
/// For logistic fits the response holds 0/1.
struct DesignMatrix {
    Eigen::MatrixXd features;
    Eigen::VectorXd response;
    std::vector<std::string> feature_names;

    Eigen::Index rows() const { return features.rows(); }
    Eigen::Index cols() const { return features.cols(); }
};

struct FitResult {
    /// Intercept first, then one coefficient per feature column.
    std::vector<double> coefficients;
    /// OLS R^2. Logistic fits report the R^2 of a linear-probability OLS fit on
    /// the same 0/1 response, for comparison with "variance explained" figures.
    std::optional<double> r_squared;
    std::optional<double> mcfadden_pseudo_r2;
    std::optional<double> log_likelihood;
    bool converged = true;
    int iterations = 0;
};

struct LogisticOptions {
    /// L2 penalty on the slopes (the intercept is not penalized).
    double ridge = 1e-6;
    int max_iter = 100;
    /// Convergence needs the penalized-gradient infinity norm <= tol.
    double tol = 1e-8;
};

/// Least squares via column-pivoted Householder QR.
/// Throws SingularDesignError for a rank-deficient design and
/// UndefinedRSquaredError for a constant response.
FitResult ols_fit(const DesignMatrix& data);

/// Ridge-penalized logistic regression by IRLS (Newton) with step halving.
/// Throws DegenerateResponseError when only one class is present. A fit that
/// does not settle within max_iter is returned with converged = false.
FitResult logistic_fit(const DesignMatrix& data, const LogisticOptions& options = {});

/// 1 - SSE/SST. Throws UndefinedRSquaredError for constant y, InputError on length mismatch.
double r_squared(std::span<const double> y, std::span<const double> y_hat);

/// 1 - lnL/lnL0. Throws InputError unless lnL0 <= lnL <= 0 and lnL0 < 0.
double mcfadden(double log_likelihood, double null_log_likelihood);

/// Bernoulli log-likelihood of `coefficients` (intercept first).
double logistic_log_likelihood(const DesignMatrix& data, std::span<const double> coefficients);

/// Gradient of the unpenalized log-likelihood with respect to the coefficients.
std::vector<double> logistic_gradient(const DesignMatrix& data, std::span<const double> coefficients);

/// Throws InputError unless the design is finite with n > k.
void check_design(const DesignMatrix& data);

}  // namespace memesim::stats
