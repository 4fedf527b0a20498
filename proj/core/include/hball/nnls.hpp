#pragma once

#include <Eigen/Dense>

namespace hball {

struct NnlsOptions {
    double dualTolFactor = 1e-10;  // dual feasibility tolerance, relative to ||A^T u||_inf
    int maxIterFactor = 10;        // iteration cap = maxIterFactor * columns
};

struct NnlsResult {
    Eigen::VectorXd x;
    double residualNorm;  // ||A x - u||_2
    int iterations;
    bool converged;  // KKT conditions met within tolerance
};

/// min ||A x - u||_2 subject to x >= 0, by the Lawson-Hanson active-set
/// method run on precomputed cross products (A^T A, A^T u). Dense problems
/// only; returns the best iterate with converged = false when the iteration
/// cap is hit.
NnlsResult nnlsSolve(const Eigen::MatrixXd& A, const Eigen::VectorXd& u,
                     const NnlsOptions& opt = {});

}  // namespace hball
