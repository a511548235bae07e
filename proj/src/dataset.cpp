#include "mmbl/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace mmbl {

Dataset::Dataset(std::vector<std::string> names, Eigen::MatrixXd rows) : names_(std::move(names)), data_(std::move(rows)) {
    if (static_cast<Eigen::Index>(names_.size()) != data_.cols())
        throw DataError("dataset has " + std::to_string(names_.size()) + " names for " + std::to_string(data_.cols()) +
                        " columns");
    std::unordered_set<std::string> seen;
    for (const auto& n : names_)
        if (!seen.insert(n).second) throw DataError("duplicate column '" + n + "'");
    if (!data_.allFinite()) throw DataError("dataset contains missing or non-finite values");

    means_ = data_.colwise().mean().transpose();
    if (data_.rows() > 1) {
        const Eigen::MatrixXd centered = data_.rowwise() - means_.transpose();
        cov_ = (centered.transpose() * centered) / static_cast<double>(data_.rows() - 1);
    } else {
        cov_ = Eigen::MatrixXd::Zero(data_.cols(), data_.cols());
    }
}

std::size_t Dataset::column(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    throw DataError("unknown column '" + name + "'");
}

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        const auto b = cell.find_first_not_of(" \t\r");
        const auto e = cell.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? std::string{} : cell.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

}  // namespace

Dataset read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw DataError("empty CSV");
    auto names = split(line);
    if (names.empty()) throw DataError("CSV header has no columns");

    std::vector<double> values;
    std::size_t nrows = 0;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto cells = split(line);
        if (cells.size() != names.size())
            throw DataError("line " + std::to_string(lineno) + ": expected " + std::to_string(names.size()) + " values");
        for (const auto& c : cells) {
            double v = 0;
            auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), v);
            if (ec != std::errc() || ptr != c.data() + c.size() || c.empty())
                throw DataError("line " + std::to_string(lineno) + ": not a number '" + c + "'");
            values.push_back(v);
        }
        ++nrows;
    }
    Eigen::MatrixXd m(nrows, names.size());
    for (std::size_t r = 0; r < nrows; ++r)
        for (std::size_t c = 0; c < names.size(); ++c) m(r, c) = values[r * names.size() + c];
    return Dataset(std::move(names), std::move(m));
}

Dataset read_csv_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path.string());
    return read_csv(in);
}

void write_csv(std::ostream& out, const Dataset& d) {
    for (std::size_t c = 0; c < d.cols(); ++c) out << (c ? "," : "") << d.names()[c];
    out << '\n';
    char buf[64];
    for (std::size_t r = 0; r < d.rows(); ++r) {
        for (std::size_t c = 0; c < d.cols(); ++c) {
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, d.data()(r, c));
            (void)ec;
            if (c) out << ',';
            out.write(buf, ptr - buf);
        }
        out << '\n';
    }
}

void write_csv_file(const std::filesystem::path& path, const Dataset& d) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path.string());
    write_csv(out, d);
}

}  // namespace mmbl
