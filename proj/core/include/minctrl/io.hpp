#ifndef MINCTRL_IO_HPP
#define MINCTRL_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "minctrl/dense_matrix.hpp"
#include "minctrl/experiments.hpp"
#include "minctrl/greedy.hpp"
#include "minctrl/oracles.hpp"
#include "minctrl/rational_matrix.hpp"
#include "minctrl/reductions.hpp"

// File formats. Indices are zero-based in the C++ API and one-based in every
// file this module reads or writes.
namespace minctrl::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// A matrix read from disk. `exact` is present when the file stored rationals
// ("num/den" strings); `dense` is always populated.
struct MatrixFile {
  DenseMatrix dense;
  std::optional<RationalMatrix> exact;
};

// JSON {"rows", "cols", "data": [...]} with numbers or rational strings, or
// headerless CSV of reals. Throws InvalidInput on malformed content.
MatrixFile parse_matrix(std::string_view text);
MatrixFile read_matrix_file(const std::filesystem::path& path);

json to_json(const DenseMatrix& m);
json to_json(const RationalMatrix& m);

// {"m": int, "sets": [[int, ...], ...]} with one-based elements. The result is
// validated.
HittingSetInstance parse_instance(std::string_view text);
HittingSetInstance read_instance_file(const std::filesystem::path& path);
json to_json(const HittingSetInstance& inst);

json to_json(const SolveResult& r);
json to_json(const OracleResult& r);
json to_json(const ReductionIndexMap& map);
json to_json(const SymmetricExtensionOutput& ext);  // column map only

ExperimentConfig parse_experiment_config(const json& j);
json to_json(const ExperimentConfig& cfg);
json to_json(const ExperimentReport& report);
std::string trial_records_csv(const ExperimentReport& report);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace minctrl::io

#endif  // MINCTRL_IO_HPP
