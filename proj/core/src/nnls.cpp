#include "hball/nnls.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace hball {

namespace {

// Unconstrained least squares restricted to the passive set, via the normal
// equations Gram; falls back to column-pivoted QR on the raw columns when the
// passive Gram is numerically singular.
Eigen::VectorXd passiveSolve(const Eigen::MatrixXd& A, const Eigen::VectorXd& u,
                             const Eigen::MatrixXd& AtA, const Eigen::VectorXd& Atu,
                             const std::vector<int>& passive) {
    const int p = static_cast<int>(passive.size());
    Eigen::MatrixXd G(p, p);
    Eigen::VectorXd rhs(p);
    for (int i = 0; i < p; ++i) {
        rhs[i] = Atu[passive[i]];
        for (int j = 0; j < p; ++j) G(i, j) = AtA(passive[i], passive[j]);
    }
    Eigen::LDLT<Eigen::MatrixXd> ldlt(G);
    if (ldlt.info() == Eigen::Success) {
        const Eigen::VectorXd z = ldlt.solve(rhs);
        if (z.allFinite() && (G * z - rhs).norm() <= 1e-8 * (rhs.norm() + 1.0)) return z;
    }
    Eigen::MatrixXd Ap(A.rows(), p);
    for (int j = 0; j < p; ++j) Ap.col(j) = A.col(passive[j]);
    return Ap.colPivHouseholderQr().solve(u);
}

}  // namespace

NnlsResult nnlsSolve(const Eigen::MatrixXd& A, const Eigen::VectorXd& u, const NnlsOptions& opt) {
    const int ncol = static_cast<int>(A.cols());
    const Eigen::MatrixXd AtA = A.transpose() * A;
    const Eigen::VectorXd Atu = A.transpose() * u;
    const double dualTol = opt.dualTolFactor * Atu.cwiseAbs().maxCoeff();
    const int maxIter = opt.maxIterFactor * std::max(ncol, 1);

    Eigen::VectorXd x = Eigen::VectorXd::Zero(ncol);
    std::vector<bool> inPassive(ncol, false);
    std::vector<int> passive;
    int iterations = 0;
    bool converged = false;

    while (true) {
        const Eigen::VectorXd w = Atu - AtA * x;  // dual vector
        int best = -1;
        double bestW = dualTol;
        for (int j = 0; j < ncol; ++j)
            if (!inPassive[j] && w[j] > bestW) {
                bestW = w[j];
                best = j;
            }
        if (best < 0) {
            converged = true;
            break;
        }
        inPassive[best] = true;
        passive.push_back(best);

        while (true) {
            if (++iterations > maxIter) break;
            const Eigen::VectorXd z = passiveSolve(A, u, AtA, Atu, passive);
            bool allPositive = true;
            for (int i = 0; i < static_cast<int>(passive.size()); ++i)
                if (z[i] <= 0.0) allPositive = false;
            if (allPositive) {
                for (int i = 0; i < static_cast<int>(passive.size()); ++i) x[passive[i]] = z[i];
                break;
            }
            // Step toward z until the first passive variable hits zero.
            double alpha = std::numeric_limits<double>::infinity();
            for (int i = 0; i < static_cast<int>(passive.size()); ++i) {
                if (z[i] <= 0.0) {
                    const double xi = x[passive[i]];
                    alpha = std::min(alpha, xi / (xi - z[i]));
                }
            }
            for (int i = 0; i < static_cast<int>(passive.size()); ++i) {
                const int j = passive[i];
                x[j] += alpha * (z[i] - x[j]);
            }
            std::vector<int> stillPassive;
            for (int j : passive) {
                if (x[j] > 1e-14) {
                    stillPassive.push_back(j);
                } else {
                    x[j] = 0.0;
                    inPassive[j] = false;
                }
            }
            passive = std::move(stillPassive);
            if (passive.empty()) break;
        }
        if (iterations > maxIter) break;
    }

    return NnlsResult{x, (A * x - u).norm(), iterations, converged};
}

}  // namespace hball
