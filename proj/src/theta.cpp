#include "inca/theta.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <cmath>

namespace inca {

namespace {

bool positive_definite(const Eigen::MatrixXd& a) {
    Eigen::LLT<Eigen::MatrixXd> llt(a);
    return llt.info() == Eigen::Success;
}

}  // namespace

double lovasz_theta(const SimpleGraph& g, double tol) {
    const int n = g.size();
    if (n > 32) throw resource_limit("theta SDP limited to 32 vertices");
    if (n == 0) return 0.0;
    if (tol < 1e-8) tol = 1e-8;

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v)) edges.emplace_back(u, v);
    const int m1 = static_cast<int>(edges.size());
    const int m = m1 + 1;  // one constraint per edge plus the trace

    Eigen::MatrixXd X = Eigen::MatrixXd::Identity(n, n) / n;
    Eigen::VectorXd y = Eigen::VectorXd::Zero(m);
    y(m - 1) = n + 1;
    Eigen::MatrixXd Z = (n + 1) * Eigen::MatrixXd::Identity(n, n) - Eigen::MatrixXd::Ones(n, n);

    Eigen::VectorXd b = Eigen::VectorXd::Zero(m);
    b(m - 1) = 1.0;

    double phi = b.dot(y);      // dual objective
    double psi = X.sum();       // primal objective
    double mu = Z.cwiseProduct(X).sum() / (2.0 * n);

    const double gap_tol = tol / 4.0;
    const int max_iter = 200;
    for (int iter = 0; iter < max_iter; ++iter) {
        if (phi - psi <= std::max(1.0, std::abs(phi)) * gap_tol) return (phi + psi) / 2.0;

        Eigen::MatrixXd Zi = Z.llt().solve(Eigen::MatrixXd::Identity(n, n));
        Zi = ((Zi + Zi.transpose()) / 2.0).eval();

        // Schur complement system M dy = mu*rhs - b.
        Eigen::MatrixXd M(m, m);
        Eigen::MatrixXd ZiX = Zi * X;
        for (int a = 0; a < m1; ++a) {
            auto [ia, ja] = edges[a];
            for (int c = 0; c < m1; ++c) {
                auto [ic, jc] = edges[c];
                M(a, c) = Zi(ia, ic) * X(ja, jc) + Zi(ja, ic) * X(ia, jc) +
                          Zi(ia, jc) * X(ja, ic) + Zi(ja, jc) * X(ia, ic);
            }
            M(a, m - 1) = ZiX(ia, ja) + ZiX(ja, ia);
            M(m - 1, a) = M(a, m - 1);
        }
        M(m - 1, m - 1) = Zi.cwiseProduct(X).sum();

        Eigen::VectorXd rhs(m);
        for (int a = 0; a < m1; ++a) rhs(a) = 2.0 * Zi(edges[a].first, edges[a].second);
        rhs(m - 1) = Zi.trace();

        Eigen::VectorXd dy = M.ldlt().solve(mu * rhs - b);

        Eigen::MatrixXd Aty = Eigen::MatrixXd::Zero(n, n);
        for (int a = 0; a < m1; ++a) {
            Aty(edges[a].first, edges[a].second) += dy(a);
            Aty(edges[a].second, edges[a].first) += dy(a);
        }
        Eigen::MatrixXd dZ = Aty + dy(m - 1) * Eigen::MatrixXd::Identity(n, n);
        Eigen::MatrixXd dX = mu * Zi - X - Zi * dZ * X;
        dX = ((dX + dX.transpose()) / 2.0).eval();

        double alpha_p = 1.0;
        while (!positive_definite(X + alpha_p * dX)) alpha_p *= 0.8;
        if (alpha_p < 1.0) alpha_p *= 0.95;

        double alpha_d = 1.0;
        while (!positive_definite(Z + alpha_d * dZ)) alpha_d *= 0.8;
        if (alpha_d < 1.0) alpha_d *= 0.95;

        X += alpha_p * dX;
        y += alpha_d * dy;
        Z += alpha_d * dZ;
        mu = Z.cwiseProduct(X).sum() / (2.0 * n);
        if (alpha_p + alpha_d > 1.8) mu /= 2.0;

        phi = b.dot(y);
        psi = X.sum();
    }
    throw numerical_failure("theta SDP did not converge within " + std::to_string(max_iter) +
                            " iterations");
}

}  // namespace inca
