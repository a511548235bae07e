#include "mmbl/ci.hpp"

#include <boost/math/distributions/normal.hpp>
#include <cmath>

#include "mmbl/separation.hpp"

namespace mmbl {

CiDecision CiBackend::query(NodeId x, NodeId y, const NodeSet& z) {
    ++n_tests_;
    if (x >= size() || y >= size()) throw CiError("CI query on unknown variable index");
    if (x == y) throw CiError("CI query needs two distinct variables");
    for (NodeId v : z) {
        if (v >= size()) throw CiError("CI query on unknown variable index");
        if (v == x || v == y) throw CiError("conditioning set contains a queried variable");
    }
    return evaluate(x, y, z);
}

OracleBackend::OracleBackend(Mag mag) : CiBackend(mag.graph().names()), mag_(std::move(mag)) {}

OracleBackend::OracleBackend(const Dag& dag, const NodeSet& latents) : OracleBackend(latent_project(dag, latents)) {}

CiDecision OracleBackend::evaluate(NodeId x, NodeId y, const NodeSet& z) const {
    const bool sep = m_separated(mag_, x, y, z);
    return CiDecision{sep, 0.0, sep ? 1.0 : 0.0};
}

FisherZBackend::FisherZBackend(const Dataset& data, double alpha)
    : CiBackend(data.names()), cov_(data.covariance()), n_(data.rows()), alpha_(alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw CiError("alpha must lie in (0, 1)");
    critical_ = boost::math::quantile(boost::math::normal_distribution<double>(), 1.0 - alpha / 2.0);
}

double partial_correlation(const Eigen::MatrixXd& cov, NodeId x, NodeId y, const NodeSet& z) {
    const auto xi = static_cast<Eigen::Index>(x), yi = static_cast<Eigen::Index>(y);
    double sxx = cov(xi, xi), syy = cov(yi, yi), sxy = cov(xi, yi);
    if (!z.empty()) {
        const auto k = static_cast<Eigen::Index>(z.size());
        std::vector<Eigen::Index> idx(z.begin(), z.end());
        Eigen::MatrixXd szz(k, k);
        Eigen::MatrixXd sz(k, 2);
        for (Eigen::Index i = 0; i < k; ++i) {
            for (Eigen::Index j = 0; j < k; ++j) szz(i, j) = cov(idx[i], idx[j]);
            sz(i, 0) = cov(idx[i], xi);
            sz(i, 1) = cov(idx[i], yi);
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(szz);
        const auto& ev = eig.eigenvalues();
        if (ev.minCoeff() <= 1e-10 * std::max(1.0, ev.maxCoeff())) throw CiError("degenerate conditioning set");
        const Eigen::MatrixXd inv_sz =
            eig.eigenvectors() * ev.cwiseInverse().asDiagonal() * eig.eigenvectors().transpose() * sz;
        const Eigen::Matrix2d explained = sz.transpose() * inv_sz;
        sxx -= explained(0, 0);
        syy -= explained(1, 1);
        sxy -= explained(0, 1);
    }
    const double scale = std::max({1.0, cov(xi, xi), cov(yi, yi)});
    if (sxx <= 1e-12 * scale || syy <= 1e-12 * scale) throw CiError("degenerate conditioning set");
    return sxy / std::sqrt(sxx * syy);
}

CiDecision FisherZBackend::evaluate(NodeId x, NodeId y, const NodeSet& z) const {
    const double dof = static_cast<double>(n_) - static_cast<double>(z.size()) - 3.0;
    if (dof < 1.0)
        throw CiError("insufficient sample size: n=" + std::to_string(n_) + " with " + std::to_string(z.size()) +
                      " conditioning variables");
    constexpr double kClamp = 1.0 - 1e-12;
    const double r = std::clamp(partial_correlation(cov_, x, y, z), -kClamp, kClamp);
    const double stat = std::sqrt(dof) * 0.5 * std::log((1.0 + r) / (1.0 - r));
    const double p = std::erfc(std::abs(stat) / std::sqrt(2.0));
    return CiDecision{std::abs(stat) <= critical_, stat, p};
}

}  // namespace mmbl
