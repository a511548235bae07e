#ifndef MMBL_JSON_IO_HPP_
#define MMBL_JSON_IO_HPP_

#include <filesystem>
#include <json.hpp>
#include <string>

#include "mmbl/driver.hpp"
#include "mmbl/metrics.hpp"

namespace mmbl {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A result read back from JSON: the fragment plus the run summary.
struct StoredResult {
    std::string target;
    MixedGraph p;
    std::string stop_rule;
    std::uint64_t n_tests = 0;
    std::vector<std::string> trace;
};

nlohmann::json edges_to_json(const MixedGraph& g);
nlohmann::json result_to_json(const LocalResult& r);
StoredResult result_from_json(const nlohmann::json& j);

nlohmann::json pag_to_json(const MixedGraph& g);
MixedGraph pag_from_json(const nlohmann::json& j);

nlohmann::json metrics_to_json(const Metrics& m);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace mmbl

#endif  // MMBL_JSON_IO_HPP_
