#include <gtest/gtest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "minctrl/cli.hpp"
#include "minctrl/greedy.hpp"
#include "minctrl/io.hpp"

namespace minctrl {
namespace {

namespace fs = std::filesystem;
using io::json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / ("minctrl_cli_" + std::string(info->name()) + "_" +
                                        std::to_string(::getpid()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    ::unsetenv(cli::kBackendEnv);
  }
  void TearDown() override {
    fs::remove_all(dir_);
    ::unsetenv(cli::kBackendEnv);
  }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    io::write_text_file(p, text);
    return p.string();
  }

  int run(const std::vector<std::string>& args) {
    out_.str("");
    err_.str("");
    return cli::run_cli(args, out_, err_);
  }

  json out_json() const { return json::parse(out_.str()); }

  std::string example_a() { return write("example_a.json", io::to_json(testing::worked_example_a()).dump()); }
  std::string example_instance() {
    return write("example.json", R"({"m":3,"sets":[[1,2],[2,3],[1,3],[1,2,3]]})");
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, SolveDiagonalSystem) {
  const auto m = write("d.csv", "1,0,0\n0,2,0\n0,0,3\n");
  EXPECT_EQ(run({"solve", m, "--mode", "vector", "--algo", "det", "--backend", "exact"}), 0);
  EXPECT_EQ(out_json()["sparsity"], 3);
  EXPECT_EQ(out_json()["schema_version"], 1);
}

TEST_F(CliTest, SolveIdentityIsNotControllable) {
  const auto m = write("i.csv", "1,0\n0,1\n");
  EXPECT_EQ(run({"solve", m}), 1);
  EXPECT_EQ(out_json()["controllable"], false);
  EXPECT_EQ(run({"solve", m, "--mode", "diagonal"}), 0);
}

TEST_F(CliTest, SolveWorkedExample) {
  const auto a = example_a();
  for (const std::string backend : {"svd", "pbh", "exact"}) {
    EXPECT_EQ(run({"solve", a, "--backend", backend}), 0) << backend;
    EXPECT_EQ(out_json()["sparsity"], 3);
    EXPECT_EQ(run({"solve", a, "--backend", backend, "--algo", "rand", "--seed", "17"}), 0);
    EXPECT_EQ(out_json()["sparsity"], 3);
    EXPECT_EQ(out_json()["seed"], 17);
  }
  const auto out = (dir_ / "sol.json").string();
  EXPECT_EQ(run({"solve", a, "--out", out}), 0);
  EXPECT_TRUE(out_.str().empty());
  EXPECT_EQ(json::parse(io::read_text_file(out))["support"], json::parse("[1,8,2]"));
}

TEST_F(CliTest, SolveDefaultSeedIsFixed) {
  const auto a = example_a();
  EXPECT_EQ(run({"solve", a, "--algo", "rand"}), 0);
  const std::string first = out_.str();
  EXPECT_EQ(out_json()["seed"], kDefaultSeed);
  EXPECT_EQ(run({"solve", a, "--algo", "rand"}), 0);
  EXPECT_EQ(out_.str(), first);
}

TEST_F(CliTest, SolveRejectsBadInput) {
  EXPECT_EQ(run({"solve", write("bad.csv", "1,2\n3\n")}), 2);
  EXPECT_EQ(run({"solve", write("rect.csv", "1,2\n")}), 2);
  EXPECT_EQ(run({"solve", (dir_ / "missing.csv").string()}), 2);
  const auto id = write("i.csv", "1,0\n0,1\n");
  EXPECT_EQ(run({"solve", id, "--backend", "pbh"}), 2);
  EXPECT_EQ(run({"solve", id, "--backend", "lu"}), 2);
  EXPECT_EQ(run({"solve", id, "--mode", "sideways"}), 2);
}

TEST_F(CliTest, BackendFromEnvironment) {
  const auto id = write("i.csv", "1,0\n0,1\n");
  ::setenv(cli::kBackendEnv, "pbh", 1);
  EXPECT_EQ(run({"solve", id}), 2);
  EXPECT_EQ(run({"solve", id, "--backend", "svd"}), 1);
  ::setenv(cli::kBackendEnv, "bogus", 1);
  EXPECT_EQ(run({"solve", id}), 2);
}

TEST_F(CliTest, ReduceWorkedExampleMatchesPrintedMatrices) {
  const auto out = dir_ / "red";
  EXPECT_EQ(run({"reduce", example_instance(), "--out-dir", out.string()}), 0);
  const auto a = io::read_matrix_file(out / "A.json");
  ASSERT_TRUE(a.exact.has_value());
  EXPECT_EQ(*a.exact, testing::worked_example_a());
  EXPECT_EQ(*io::read_matrix_file(out / "V.json").exact, testing::worked_example_v());
  const json meta = json::parse(io::read_text_file(out / "reduction.json"));
  EXPECT_EQ(meta["index_map"]["anchor"], 8);
  EXPECT_EQ(meta["schema_version"], 1);
  EXPECT_FALSE(fs::exists(out / "A_hat.json"));
  // Reduced matrices feed straight back into solve and verify.
  EXPECT_EQ(run({"solve", (out / "A.json").string()}), 0);
  EXPECT_EQ(out_json()["sparsity"], 3);
}

TEST_F(CliTest, ReduceSingleElementAndSymmetric) {
  const auto inst = write("one.json", R"({"m":1,"sets":[[1]]})");
  const auto out = dir_ / "one";
  EXPECT_EQ(run({"reduce", inst, "--symmetric", "--out-dir", out.string()}), 0);
  EXPECT_EQ(io::read_matrix_file(out / "A.json").dense.rows(), 3u);
  EXPECT_EQ(io::read_matrix_file(out / "V.json").dense.cols(), 3u);
  const auto a_hat = io::read_matrix_file(out / "A_hat.json");
  ASSERT_TRUE(a_hat.exact.has_value());
  EXPECT_EQ(a_hat.exact->rows(), 7u);
  EXPECT_TRUE(a_hat.exact->is_symmetric());
  EXPECT_EQ(json::parse(io::read_text_file(out / "symmetric.json"))["r"], 7);
  EXPECT_EQ(run({"reduce", inst}), 0);
  EXPECT_EQ(out_json()["A"]["rows"], 3);
}

TEST_F(CliTest, ReduceRejectsInvalidInstance) {
  EXPECT_EQ(run({"reduce", write("e.json", R"({"m":2,"sets":[[1,2],[]]})")}), 2);
  EXPECT_EQ(run({"reduce", write("u.json", R"({"m":3,"sets":[[1,2]]})")}), 2);
  EXPECT_EQ(run({"reduce", write("j.json", "{not json")}), 2);
}

TEST_F(CliTest, OracleKinds) {
  EXPECT_EQ(run({"oracle", example_instance()}), 0);
  EXPECT_EQ(out_json()["optimum"], 2);
  const auto v = write("v.json", io::to_json(testing::worked_example_v()).dump());
  EXPECT_EQ(run({"oracle", v, "--kind", "min-vector"}), 0);
  EXPECT_EQ(out_json()["optimum"], 3);
  EXPECT_EQ(run({"oracle", v, "--kind", "min-diagonal"}), 0);
  EXPECT_EQ(out_json()["optimum"], 3);
}

TEST_F(CliTest, OracleGuard) {
  std::ostringstream csv;
  for (int i = 0; i < 15; ++i) {
    for (int j = 0; j < 15; ++j) csv << (i == j ? 1 : 0) << (j + 1 < 15 ? "," : "\n");
  }
  const auto m = write("id15.csv", csv.str());
  EXPECT_EQ(run({"oracle", m, "--kind", "min-vector"}), 2);
  EXPECT_EQ(run({"oracle", m, "--kind", "min-vector", "--override-guard"}), 0);
  EXPECT_EQ(out_json()["optimum"], 15);
}

TEST_F(CliTest, ExperimentRunsAndIsReproducible) {
  const auto cfg = write("cfg.json", R"({"n_values":[6,8],"trials_per_n":3,"seed":4,"solver":"randomized"})");
  const auto out1 = (dir_ / "r1.json").string();
  const auto out2 = (dir_ / "r2.json").string();
  const auto csv = (dir_ / "r.csv").string();
  EXPECT_EQ(run({"experiment", cfg, "--out", out1, "--csv", csv}), 0);
  EXPECT_EQ(run({"experiment", cfg, "--out", out2}), 0);
  EXPECT_EQ(io::read_text_file(out1), io::read_text_file(out2));
  EXPECT_EQ(json::parse(io::read_text_file(out1))["records"].size(), 6u);
  EXPECT_TRUE(fs::exists(csv));
  EXPECT_EQ(run({"experiment", write("zero.json", R"({"n_values":[6],"trials_per_n":0})")}), 2);
}

TEST_F(CliTest, VerifyExamples) {
  const auto a = example_a();
  EXPECT_EQ(run({"verify", a, write("b.csv", "1\n1\n0\n0\n0\n0\n0\n1\n")}), 0);
  EXPECT_EQ(out_json()["rank"], 8);
  const auto e1 = write("e1.csv", "1,0,0,0,0,0,0,0\n");
  for (const std::string backend : {"svd", "pbh", "exact"}) {
    EXPECT_EQ(run({"verify", a, e1, "--backend", backend}), 1) << backend;
  }
  EXPECT_EQ(run({"verify", a, write("short.csv", "1\n0\n")}), 2);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}), 2);
  EXPECT_EQ(run({"frobnicate"}), 2);
  EXPECT_EQ(run({"solve"}), 2);
  EXPECT_EQ(run({"--help"}), 0);
}

}  // namespace
}  // namespace minctrl
