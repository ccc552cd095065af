#include "memesim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "memesim/error.hpp"

namespace memesim::stats {

namespace {

Eigen::MatrixXd with_intercept(const Eigen::MatrixXd& features) {
    Eigen::MatrixXd x(features.rows(), features.cols() + 1);
    x.col(0).setOnes();
    x.rightCols(features.cols()) = features;
    return x;
}

std::vector<double> to_vector(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

// log(sigma(z)) without overflow.
double log_sigmoid(double z) {
    return z >= 0.0 ? -std::log1p(std::exp(-z)) : z - std::log1p(std::exp(z));
}

double sigmoid(double z) {
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

double log_likelihood(const Eigen::VectorXd& eta, const Eigen::VectorXd& y) {
    double ll = 0.0;
    for (Eigen::Index i = 0; i < eta.size(); ++i) {
        ll += y[i] > 0.5 ? log_sigmoid(eta[i]) : log_sigmoid(-eta[i]);
    }
    return ll;
}

double slope_penalty(const Eigen::VectorXd& beta, double ridge) {
    return ridge == 0.0 ? 0.0 : 0.5 * ridge * beta.tail(beta.size() - 1).squaredNorm();
}

}  // namespace

void check_design(const DesignMatrix& data) {
    if (data.response.size() != data.rows()) {
        throw InputError("response length " + std::to_string(data.response.size()) +
                         " does not match " + std::to_string(data.rows()) + " rows");
    }
    if (data.rows() <= data.cols()) {
        throw InputError("design needs more rows than feature columns");
    }
    if (!data.features.allFinite() || !data.response.allFinite()) {
        throw InputError("design contains a non-finite entry");
    }
}

double r_squared(std::span<const double> y, std::span<const double> y_hat) {
    if (y.size() != y_hat.size()) {
        throw InputError("r_squared: length mismatch");
    }
    if (y.empty()) {
        throw UndefinedRSquaredError("r_squared: empty sample");
    }
    double mean = 0.0;
    for (double v : y) mean += v;
    mean /= static_cast<double>(y.size());
    double sst = 0.0;
    double sse = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        sst += (y[i] - mean) * (y[i] - mean);
        sse += (y[i] - y_hat[i]) * (y[i] - y_hat[i]);
    }
    if (sst == 0.0) {
        throw UndefinedRSquaredError("r_squared: response is constant");
    }
    return 1.0 - sse / sst;
}

double mcfadden(double log_likelihood, double null_log_likelihood) {
    if (!(null_log_likelihood < 0.0) || !(log_likelihood <= 0.0) ||
        log_likelihood < null_log_likelihood) {
        throw InputError("mcfadden needs lnL0 <= lnL <= 0 and lnL0 < 0");
    }
    return 1.0 - log_likelihood / null_log_likelihood;
}

double logistic_log_likelihood(const DesignMatrix& data, std::span<const double> coefficients) {
    if (static_cast<Eigen::Index>(coefficients.size()) != data.cols() + 1) {
        throw InputError("coefficient count does not match the design");
    }
    const Eigen::Map<const Eigen::VectorXd> beta(coefficients.data(),
                                                 static_cast<Eigen::Index>(coefficients.size()));
    const Eigen::VectorXd eta = with_intercept(data.features) * beta;
    return log_likelihood(eta, data.response);
}

std::vector<double> logistic_gradient(const DesignMatrix& data, std::span<const double> coefficients) {
    if (static_cast<Eigen::Index>(coefficients.size()) != data.cols() + 1) {
        throw InputError("coefficient count does not match the design");
    }
    const Eigen::Map<const Eigen::VectorXd> beta(coefficients.data(),
                                                 static_cast<Eigen::Index>(coefficients.size()));
    const Eigen::MatrixXd x = with_intercept(data.features);
    const Eigen::VectorXd eta = x * beta;
    Eigen::VectorXd residual(eta.size());
    for (Eigen::Index i = 0; i < eta.size(); ++i) {
        residual[i] = data.response[i] > 0.5 ? sigmoid(-eta[i]) : -sigmoid(eta[i]);
    }
    return to_vector(x.transpose() * residual);
}

FitResult ols_fit(const DesignMatrix& data) {
    check_design(data);
    const Eigen::VectorXd& y = data.response;
    if ((y.array() == y[0]).all()) {
        throw UndefinedRSquaredError("ols_fit: response is constant");
    }
    const Eigen::MatrixXd x = with_intercept(data.features);
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(x);
    if (qr.rank() < x.cols()) {
        throw SingularDesignError("ols_fit: design has rank " + std::to_string(qr.rank()) +
                                  " < " + std::to_string(x.cols()) + " columns");
    }
    const Eigen::VectorXd beta = qr.solve(y);
    const Eigen::VectorXd fitted = x * beta;

    FitResult fit;
    fit.coefficients = to_vector(beta);
    fit.r_squared = r_squared({y.data(), static_cast<std::size_t>(y.size())},
                              {fitted.data(), static_cast<std::size_t>(fitted.size())});
    fit.converged = true;
    fit.iterations = 1;
    return fit;
}

FitResult logistic_fit(const DesignMatrix& data, const LogisticOptions& options) {
    check_design(data);
    if (options.ridge < 0.0 || !std::isfinite(options.ridge) || options.max_iter < 1 ||
        !(options.tol > 0.0)) {
        throw InputError("logistic_fit: ridge >= 0, max_iter >= 1 and tol > 0 required");
    }
    const Eigen::VectorXd& y = data.response;
    Eigen::Index positives = 0;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        if (y[i] != 0.0 && y[i] != 1.0) {
            throw InputError("logistic_fit: response must be 0 or 1");
        }
        positives += y[i] == 1.0 ? 1 : 0;
    }
    const Eigen::Index n = y.size();
    if (positives == 0 || positives == n) {
        throw DegenerateResponseError("logistic_fit: response has a single class");
    }

    const Eigen::MatrixXd x = with_intercept(data.features);
    const Eigen::Index k = x.cols();
    const double ridge = options.ridge;
    Eigen::VectorXd penalty_diag = Eigen::VectorXd::Constant(k, ridge);
    penalty_diag[0] = 0.0;

    auto objective = [&](const Eigen::VectorXd& b) {
        return log_likelihood(x * b, y) - slope_penalty(b, ridge);
    };

    Eigen::VectorXd beta = Eigen::VectorXd::Zero(k);
    double current = objective(beta);
    double last_step = std::numeric_limits<double>::infinity();
    bool converged = false;
    int iterations = 0;

    // Convergence: gradient inf-norm <= tol after a Newton step that no longer
    // moves the coefficients. Under separation the steps stay O(1) while the
    // gradient decays, so separated data runs out of iterations instead.
    for (; iterations <= options.max_iter; ++iterations) {
        const Eigen::VectorXd eta = x * beta;
        Eigen::VectorXd residual(n);
        Eigen::VectorXd weight(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            const double p = sigmoid(eta[i]);
            const double q = sigmoid(-eta[i]);
            residual[i] = y[i] == 1.0 ? q : -p;
            weight[i] = p * q;
        }
        const Eigen::VectorXd grad = x.transpose() * residual - penalty_diag.cwiseProduct(beta);
        const double scale = 1.0 + beta.cwiseAbs().maxCoeff();
        if (grad.cwiseAbs().maxCoeff() <= options.tol && last_step <= 1e-6 * scale) {
            converged = true;
            break;
        }
        if (iterations == options.max_iter) {
            break;
        }

        Eigen::MatrixXd hessian = x.transpose() * weight.asDiagonal() * x;
        hessian.diagonal() += penalty_diag;
        const Eigen::LDLT<Eigen::MatrixXd> ldlt(hessian);
        if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
            break;
        }
        const Eigen::VectorXd direction = ldlt.solve(grad);
        if (!direction.allFinite()) {
            break;
        }

        double t = 1.0;
        Eigen::VectorXd candidate = beta + direction;
        double value = objective(candidate);
        int halvings = 0;
        while (!(value >= current) && halvings < 40) {
            t *= 0.5;
            candidate = beta + t * direction;
            value = objective(candidate);
            ++halvings;
        }
        if (!(value >= current)) {
            break;
        }
        last_step = (t * direction).cwiseAbs().maxCoeff();
        beta = candidate;
        current = value;
    }

    const Eigen::VectorXd fitted_eta = x * beta;
    const double ll = log_likelihood(fitted_eta, y);
    const double pbar = static_cast<double>(positives) / static_cast<double>(n);
    const double ll0 = static_cast<double>(positives) * std::log(pbar) +
                       static_cast<double>(n - positives) * std::log1p(-pbar);
    FitResult fit;
    fit.coefficients = to_vector(beta);
    fit.log_likelihood = ll;
    fit.mcfadden_pseudo_r2 = 1.0 - ll / ll0;
    try {
        fit.r_squared = ols_fit(data).r_squared;
    } catch (const SingularDesignError&) {
        fit.r_squared.reset();
    }
    fit.converged = converged;
    fit.iterations = iterations;
    return fit;
}

}  // namespace memesim::stats
