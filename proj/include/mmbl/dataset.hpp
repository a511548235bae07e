#ifndef MMBL_DATASET_HPP_
#define MMBL_DATASET_HPP_

#include <Eigen/Dense>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmbl {

class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Real-valued samples, one column per variable. Column means and the sample
/// covariance are computed once on construction.
class Dataset {
public:
    Dataset(std::vector<std::string> names, Eigen::MatrixXd rows);

    const std::vector<std::string>& names() const { return names_; }
    std::size_t rows() const { return static_cast<std::size_t>(data_.rows()); }
    std::size_t cols() const { return static_cast<std::size_t>(data_.cols()); }
    const Eigen::MatrixXd& data() const { return data_; }
    const Eigen::VectorXd& means() const { return means_; }
    const Eigen::MatrixXd& covariance() const { return cov_; }
    std::size_t column(const std::string& name) const;

private:
    std::vector<std::string> names_;
    Eigen::MatrixXd data_;
    Eigen::VectorXd means_;
    Eigen::MatrixXd cov_;
};

/// CSV with a header row of column names followed by numeric rows.
Dataset read_csv(std::istream& in);
Dataset read_csv_file(const std::filesystem::path& path);
void write_csv(std::ostream& out, const Dataset& d);
void write_csv_file(const std::filesystem::path& path, const Dataset& d);

}  // namespace mmbl

#endif  // MMBL_DATASET_HPP_
