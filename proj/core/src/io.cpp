#include "minctrl/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

#include "minctrl/error.hpp"

namespace minctrl::io {
namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

double parse_real(const std::string& cell) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(cell, &used);
  } catch (const std::exception&) {
    throw InvalidInput("cannot parse number '" + cell + "'");
  }
  if (used != cell.size()) throw InvalidInput("cannot parse number '" + cell + "'");
  return v;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

template <typename T>
T get_field(const json& j, const char* key) {
  if (!j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw InvalidInput(std::string("field '") + key + "' has the wrong type");
  }
}

std::size_t get_count(const json& j, const char* key) {
  if (!j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  const json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw InvalidInput(std::string("field '") + key + "' must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

MatrixFile parse_csv(std::string_view text) {
  std::vector<double> data;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty()) continue;
    std::size_t count = 0;
    std::stringstream cells(t);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      data.push_back(parse_real(trim(cell)));
      ++count;
    }
    if (!t.empty() && t.back() == ',') throw InvalidInput("trailing comma in CSV row");
    if (rows == 0) {
      cols = count;
    } else if (count != cols) {
      throw InvalidInput("CSV row " + std::to_string(rows + 1) + " has " + std::to_string(count) +
                         " cells, expected " + std::to_string(cols));
    }
    ++rows;
  }
  if (rows == 0) throw InvalidInput("CSV matrix is empty");
  return MatrixFile{DenseMatrix(rows, cols, data), std::nullopt};
}

MatrixFile parse_json_matrix(const json& j) {
  if (!j.is_object()) throw InvalidInput("matrix JSON must be an object");
  const std::size_t rows = get_count(j, "rows");
  const std::size_t cols = get_count(j, "cols");
  if (!j.contains("data") || !j.at("data").is_array()) {
    throw InvalidInput("matrix JSON needs a 'data' array");
  }
  const json& data = j.at("data");
  if (data.size() != rows * cols) {
    throw InvalidInput("matrix 'data' has " + std::to_string(data.size()) + " entries, expected " +
                       std::to_string(rows * cols));
  }
  bool rational = false;
  for (const auto& x : data) {
    if (x.is_string()) {
      rational = true;
    } else if (!x.is_number()) {
      throw InvalidInput("matrix entries must be numbers or rational strings");
    }
  }
  if (!rational) {
    std::vector<double> values;
    values.reserve(data.size());
    for (const auto& x : data) values.push_back(x.get<double>());
    return MatrixFile{DenseMatrix(rows, cols, values), std::nullopt};
  }
  std::vector<Rational> values;
  values.reserve(data.size());
  for (const auto& x : data) {
    if (x.is_string()) {
      values.push_back(parse_rational(x.get<std::string>()));
    } else if (x.is_number_integer()) {
      values.push_back(parse_rational(x.dump()));
    } else {
      values.emplace_back(x.get<double>());
    }
  }
  RationalMatrix exact(rows, cols, std::move(values));
  DenseMatrix dense = exact.to_dense();
  return MatrixFile{std::move(dense), std::move(exact)};
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidInput("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw InvalidInput("failed writing '" + path.string() + "'");
}

MatrixFile parse_matrix(std::string_view text) {
  const std::string t = trim(text);
  if (t.empty()) throw InvalidInput("matrix file is empty");
  if (t.front() == '{') return parse_json_matrix(parse_json(t));
  return parse_csv(t);
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
  return parse_matrix(read_text_file(path));
}

json to_json(const DenseMatrix& m) {
  return json{{"schema_version", kSchemaVersion},
              {"kind", "dense"},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"data", m.row_major()}};
}

json to_json(const RationalMatrix& m) {
  json data = json::array();
  for (const auto& q : m.row_major()) data.push_back(to_string(q));
  return json{{"schema_version", kSchemaVersion},
              {"kind", "rational"},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"data", std::move(data)}};
}

HittingSetInstance parse_instance(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw InvalidInput("instance JSON must be an object");
  HittingSetInstance inst;
  inst.m = get_count(j, "m");
  if (!j.contains("sets") || !j.at("sets").is_array()) {
    throw InvalidInput("instance JSON needs a 'sets' array");
  }
  for (const auto& s : j.at("sets")) {
    if (!s.is_array()) throw InvalidInput("each set must be an array of elements");
    std::vector<std::size_t> set;
    for (const auto& e : s) {
      if (!e.is_number_integer() || e.get<long long>() < 1) {
        throw InvalidInput("set elements must be positive integers (one-based)");
      }
      set.push_back(e.get<std::size_t>() - 1);
    }
    inst.sets.push_back(std::move(set));
  }
  inst.validate();
  return inst;
}

HittingSetInstance read_instance_file(const std::filesystem::path& path) {
  return parse_instance(read_text_file(path));
}

json to_json(const HittingSetInstance& inst) {
  json sets = json::array();
  for (const auto& s : inst.sets) {
    json one = json::array();
    for (auto e : s) one.push_back(e + 1);
    sets.push_back(std::move(one));
  }
  return json{{"m", inst.m}, {"sets", std::move(sets)}};
}

namespace {

json one_based(const std::vector<std::size_t>& idx) {
  json out = json::array();
  for (auto i : idx) out.push_back(i + 1);
  return out;
}

}  // namespace

json to_json(const SolveResult& r) {
  json trace = json::array();
  for (const auto& s : r.trace) {
    trace.push_back({{"step", s.step},
                     {"index", s.index + 1},
                     {"value", s.value},
                     {"rank_before", s.rank_before},
                     {"rank_after", s.rank_after}});
  }
  return json{{"schema_version", kSchemaVersion},
              {"algorithm", r.algorithm},
              {"backend", std::string(to_string(r.backend))},
              {"n", r.n},
              {"support", one_based(r.support)},
              {"values", r.values},
              {"sparsity", r.sparsity()},
              {"final_rank", r.final_rank},
              {"controllable", r.controllable},
              {"input", r.input_vector()},
              {"rank_evaluations", r.rank_evaluations},
              {"trace", std::move(trace)}};
}

json to_json(const OracleResult& r) {
  return json{{"schema_version", kSchemaVersion},
              {"optimum", r.optimum},
              {"witness", one_based(r.witness)},
              {"enumerated", r.enumerated}};
}

json to_json(const ReductionIndexMap& map) {
  std::vector<std::size_t> elements;
  std::vector<std::size_t> sets;
  for (std::size_t e = 0; e < map.m; ++e) elements.push_back(map.element(e));
  for (std::size_t s = 0; s < map.p; ++s) sets.push_back(map.set(s));
  return json{{"m", map.m},
              {"p", map.p},
              {"dimension", map.dimension()},
              {"elements", one_based(elements)},
              {"sets", one_based(sets)},
              {"anchor", map.anchor() + 1}};
}

json to_json(const SymmetricExtensionOutput& ext) {
  json pairs = json::array();
  for (std::size_t k = 0; k < ext.column_pairs.size(); ++k) {
    pairs.push_back({{"column", ext.base_dimension + k + 1},
                     {"rows", {ext.column_pairs[k].first + 1, ext.column_pairs[k].second + 1}}});
  }
  return json{{"r", ext.r},
              {"base_dimension", ext.base_dimension},
              {"pair_columns", std::move(pairs)},
              {"final_column", ext.r}};
}

ExperimentConfig parse_experiment_config(const json& j) {
  if (!j.is_object()) throw InvalidInput("experiment config must be a JSON object");
  static const char* const known[] = {"schema_version", "n_values", "trials_per_n",
                                      "edge_probability", "log_base", "self_loops",
                                      "eigen_gap_threshold", "seed", "solver",
                                      "max_regenerations_per_trial", "workers", "record_timing"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      throw InvalidInput("unknown experiment config field '" + key + "'");
    }
  }
  ExperimentConfig cfg;
  if (!j.contains("n_values") || !j.at("n_values").is_array()) {
    throw InvalidInput("experiment config needs an 'n_values' array");
  }
  for (const auto& n : j.at("n_values")) {
    if (!n.is_number_integer() || n.get<long long>() < 1) {
      throw InvalidInput("n_values entries must be positive integers");
    }
    cfg.n_values.push_back(n.get<std::size_t>());
  }
  cfg.trials_per_n = get_count(j, "trials_per_n");
  if (j.contains("edge_probability") && !j.at("edge_probability").is_null()) {
    cfg.edge_probability = get_field<double>(j, "edge_probability");
  }
  if (j.contains("log_base")) {
    const auto base = get_field<std::string>(j, "log_base");
    if (base == "natural" || base == "e") {
      cfg.log_base = LogBase::kNatural;
    } else if (base == "10") {
      cfg.log_base = LogBase::kTen;
    } else {
      throw InvalidInput("log_base must be 'natural' or '10'");
    }
  }
  if (j.contains("self_loops")) cfg.self_loops = get_field<bool>(j, "self_loops");
  if (j.contains("eigen_gap_threshold")) {
    cfg.eigen_gap_threshold = get_field<double>(j, "eigen_gap_threshold");
  }
  if (j.contains("seed")) cfg.seed = get_field<std::uint64_t>(j, "seed");
  if (j.contains("solver")) {
    const auto solver = get_field<std::string>(j, "solver");
    if (solver == "randomized" || solver == "rand") {
      cfg.solver = SolverKind::kRandomized;
    } else if (solver == "deterministic" || solver == "det") {
      cfg.solver = SolverKind::kDeterministic;
    } else {
      throw InvalidInput("solver must be 'randomized' or 'deterministic'");
    }
  }
  if (j.contains("max_regenerations_per_trial")) {
    cfg.max_regenerations_per_trial = get_count(j, "max_regenerations_per_trial");
  }
  if (j.contains("workers")) cfg.workers = get_count(j, "workers");
  if (j.contains("record_timing")) cfg.record_timing = get_field<bool>(j, "record_timing");
  cfg.validate();
  return cfg;
}

json to_json(const ExperimentConfig& cfg) {
  return json{{"n_values", cfg.n_values},
              {"trials_per_n", cfg.trials_per_n},
              {"edge_probability",
               cfg.edge_probability ? json(*cfg.edge_probability) : json(nullptr)},
              {"log_base", cfg.log_base == LogBase::kNatural ? "natural" : "10"},
              {"self_loops", cfg.self_loops},
              {"eigen_gap_threshold", cfg.eigen_gap_threshold},
              {"seed", cfg.seed},
              {"solver", cfg.solver == SolverKind::kRandomized ? "randomized" : "deterministic"},
              {"max_regenerations_per_trial", cfg.max_regenerations_per_trial},
              {"workers", cfg.workers},
              {"record_timing", cfg.record_timing}};
}

json to_json(const ExperimentReport& report) {
  json records = json::array();
  for (const auto& r : report.records) {
    json rec{{"n", r.n},
             {"trial_index", r.trial_index},
             {"graph_seed", r.graph_seed},
             {"regenerations_used", r.regenerations_used},
             {"accepted", r.accepted},
             {"sparsity_found", r.sparsity_found},
             {"controllable", r.controllable},
             {"verified", r.verified}};
    if (report.config.record_timing) rec["wall_time_seconds"] = r.wall_time_seconds;
    records.push_back(std::move(rec));
  }
  json histogram = json::object();
  for (const auto& [n, counts] : report.histogram) {
    json per_n = json::object();
    for (const auto& [sparsity, count] : counts) per_n[std::to_string(sparsity)] = count;
    histogram[std::to_string(n)] = std::move(per_n);
  }
  return json{{"schema_version", kSchemaVersion},
              {"config", to_json(report.config)},
              {"accepted_trials", report.accepted_trials()},
              {"rejected_graph_count", report.rejected_graph_count},
              {"fraction_sparsity_1", report.fraction_with_sparsity_at_most(1)},
              {"fraction_sparsity_at_most_2", report.fraction_with_sparsity_at_most(2)},
              {"histogram", std::move(histogram)},
              {"records", std::move(records)}};
}

std::string trial_records_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "n,trial_index,graph_seed,regenerations_used,accepted,sparsity_found,controllable,verified";
  if (report.config.record_timing) out << ",wall_time_seconds";
  out << '\n';
  for (const auto& r : report.records) {
    out << r.n << ',' << r.trial_index << ',' << r.graph_seed << ',' << r.regenerations_used << ','
        << r.accepted << ',' << r.sparsity_found << ',' << r.controllable << ',' << r.verified;
    if (report.config.record_timing) out << ',' << r.wall_time_seconds;
    out << '\n';
  }
  return out.str();
}

}  // namespace minctrl::io
