#ifndef MMBL_CI_HPP_
#define MMBL_CI_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mmbl/dataset.hpp"
#include "mmbl/graph.hpp"

namespace mmbl {

class CiError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CiDecision {
    bool independent = false;
    double statistic = 0.0;  // z-value; 0 for the oracle
    double p_value = 0.0;    // 1 or 0 for the oracle
};

/**
 * Conditional independence tests over a fixed list of variables, addressed
 * by index. Every call to query() counts as one test, including calls that
 * end in an error; the counter never resets.
 */
class CiBackend {
public:
    virtual ~CiBackend() = default;

    const std::vector<std::string>& variables() const { return variables_; }
    std::size_t size() const { return variables_.size(); }

    CiDecision query(NodeId x, NodeId y, const NodeSet& z);
    std::uint64_t n_tests() const { return n_tests_; }

protected:
    explicit CiBackend(std::vector<std::string> variables) : variables_(std::move(variables)) {}
    virtual CiDecision evaluate(NodeId x, NodeId y, const NodeSet& z) const = 0;

private:
    std::vector<std::string> variables_;
    std::uint64_t n_tests_ = 0;
};

inline CiDecision ci_query(CiBackend& b, NodeId x, NodeId y, const NodeSet& z) { return b.query(x, y, z); }
inline std::uint64_t n_tests(const CiBackend& b) { return b.n_tests(); }

/// Answers by m-separation in a MAG (infinite-sample semantics).
class OracleBackend : public CiBackend {
public:
    explicit OracleBackend(Mag mag);
    /// Oracle over the observed nodes of `dag`, via latent projection.
    OracleBackend(const Dag& dag, const NodeSet& latents);

    const Mag& mag() const { return mag_; }

protected:
    CiDecision evaluate(NodeId x, NodeId y, const NodeSet& z) const override;

private:
    Mag mag_;
};

/// Fisher z-test of zero partial correlation on Gaussian data.
class FisherZBackend : public CiBackend {
public:
    FisherZBackend(const Dataset& data, double alpha);

    double alpha() const { return alpha_; }

protected:
    CiDecision evaluate(NodeId x, NodeId y, const NodeSet& z) const override;

private:
    Eigen::MatrixXd cov_;
    std::size_t n_;
    double alpha_;
    double critical_;
};

/// Partial correlation of x and y given z from a covariance matrix. Throws
/// CiError("degenerate conditioning set") when the z block is singular.
double partial_correlation(const Eigen::MatrixXd& cov, NodeId x, NodeId y, const NodeSet& z);

}  // namespace mmbl

#endif  // MMBL_CI_HPP_
