#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kickfreeze/dataset.hpp"
#include "kickfreeze/experiments.hpp"
#include "kickfreeze/verification.hpp"
#include "test_helpers.hpp"

using namespace kickfreeze;
using kickfreeze::testing::pi;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Concurrence at the sample closest to (and not after) gt; post-kick when tied.
double concurrence_at(const Dataset& d, double gt) {
  const auto gts = d.values("gt");
  const auto cs = d.values("concurrence");
  double c = cs.front();
  for (std::size_t i = 0; i < gts.size(); ++i) {
    if (gts[i] <= gt + 1e-12) c = cs[i];
  }
  return c;
}

}  // namespace

TEST_CASE("figure 1 datasets") {
  ExperimentConfig cfg;
  cfg.points_per_segment = 30;
  const auto fig = run_figure1(cfg);

  CHECK(fig.free.values("gt").back() == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(fig.free.values("concurrence").back() ==
        doctest::Approx(0.46601954298361316679).epsilon(1e-9));
  CHECK(std::abs(fig.kicked.values("concurrence").back()) <= 1e-9);

  // Identical before the kick, equal concurrence right after it.
  const auto free_rows = fig.free.rows;
  const auto kicked_rows = fig.kicked.rows;
  std::size_t i = 0;
  for (; i < kicked_rows.size() && kicked_rows[i][1] < 0.3 - 1e-12; ++i) {
    REQUIRE(kicked_rows[i] == free_rows[i]);
  }
  CHECK(concurrence_at(fig.kicked, 0.3) == doctest::Approx(concurrence_at(fig.free, 0.3)).epsilon(1e-12));

  // The kick leaves two rows at the same time.
  const auto t = fig.kicked.values("t");
  int shared = 0;
  for (std::size_t k = 1; k < t.size(); ++k) shared += t[k] == t[k - 1];
  CHECK(shared == 1);

  CHECK(fig.kicked.metadata["label"] == "figure1/kicked");
  CHECK(fig.kicked.metadata["notes"].size() == 1);
}

TEST_CASE("figure 2 dataset") {
  ExperimentConfig cfg;
  cfg.points_per_segment = 40;
  const auto d = run_figure2(cfg);
  const auto gt = d.values("gt"), c = d.values("concurrence"), kicks = d.values("kicks");
  double max_c = 0;
  for (std::size_t i = 0; i < gt.size(); ++i) {
    max_c = std::max(max_c, c[i]);
    if (kicks[i] == 2) REQUIRE(std::abs(c[i] - c[0]) <= 1e-9 + std::abs(std::sin(2 * (gt[i] - 0.2))) / 2);
  }
  CHECK(max_c == doctest::Approx(std::abs(std::sin(0.2)) / 2).epsilon(1e-9));
  CHECK(concurrence_at(d, 0.2) <= 1e-9);

  SUBCASE("atom pulses at gamma/g = 1e3 track the ideal run pointwise") {
    cfg.oracle_enabled = true;
    cfg.gamma = 1e3 * cfg.g;
    const auto real = run_figure2(cfg);
    REQUIRE(real.rows.size() == d.rows.size());
    const auto rc = real.values("concurrence");
    for (std::size_t i = 0; i < rc.size(); ++i) REQUIRE(std::abs(rc[i] - c[i]) <= 1e-2);
    CHECK(real.values("p00").back() > 0);
  }
}

TEST_CASE("sweep_n follows |sin(2 gT / N)| / 2") {
  ExperimentConfig cfg;
  cfg.points_per_segment = 16;
  const std::vector<long> ns = {2, 4, 8, 16, 32};
  const auto d = sweep_n(cfg, ns);
  const auto dev = d.values("deviation");
  for (std::size_t i = 0; i < ns.size(); ++i) {
    CHECK(dev[i] == doctest::Approx(std::abs(std::sin(pi / ns[i])) / 2).epsilon(1e-9));
    if (i > 0) CHECK(dev[i] < dev[i - 1]);
  }
  CHECK(dev[4] / dev[3] == doctest::Approx(0.5).epsilon(0.05));

  cfg.theta0 = pi / 2;
  for (double x : sweep_n(cfg, ns).values("deviation")) CHECK(x <= 1e-12);

  CHECK_THROWS_AS(sweep_n(cfg, {2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(sweep_n(cfg, {4, 2}), std::invalid_argument);
}

TEST_CASE("simulate honours the configured protocol") {
  auto cfg = parse_config(R"({"g": 2, "protocol": {"total_gt": 10, "n_kicks": 20},
                              "initial_state": {"theta0": 1.1, "phi0": 0.4},
                              "sampling": {"points_per_segment": 3}})");
  const auto d = simulate(cfg);
  CHECK(d.values("fidelity").back() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(d.values("kicks").back() == 20);
  CHECK(d.values("t").back() == doctest::Approx(5.0));
  for (double c : d.values("concurrence")) CHECK(c <= 0.5);

  cfg.convention = Convention::standard;
  for (double c : simulate(cfg).values("concurrence")) CHECK(c <= 1.0);
}

TEST_CASE("oracle_compare reports shrinking pulse error") {
  auto cfg = parse_config(R"({"protocol": {"total_gt": 0.3, "kick_gt": [0.1, 0.2, 0.3]}})");
  const auto d = oracle_compare(cfg, default_gamma_ratios);
  const auto td = d.values("trace_distance_final");
  for (std::size_t i = 1; i < td.size(); ++i) CHECK(td[i] < td[i - 1]);
}

TEST_CASE("emit") {
  const auto dir = std::filesystem::temp_directory_path();

  SUBCASE("empty dataset is header-only CSV") {
    Dataset d;
    CHECK(to_csv(d) == "t,gt,concurrence,kicks,fidelity,p00\n");
  }
  SUBCASE("numbers use 12 significant digits") {
    CHECK(format_number(0.46601954298361316679) == "0.466019542984");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(3) == "3");
  }
  SUBCASE("repeated runs are byte-identical") {
    ExperimentConfig cfg;
    for (auto format : {OutputFormat::csv, OutputFormat::json}) {
      emit(run_figure2(cfg), format, dir / "kf_a.out");
      emit(run_figure2(cfg), format, dir / "kf_b.out");
      CHECK(slurp(dir / "kf_a.out") == slurp(dir / "kf_b.out"));
    }
    std::filesystem::remove(dir / "kf_a.out");
    std::filesystem::remove(dir / "kf_b.out");
  }
  SUBCASE("JSON output round-trips its metadata into the config") {
    auto cfg = parse_config(R"({"g": 7, "initial_state": {"theta0": 0.9}, "convention": "standard",
                                "oracle": {"enabled": true, "gamma": 7000}})");
    const auto text = to_json_text(simulate(cfg));
    const auto back = dataset_from_json_text(text);
    CHECK(config_from_json(back.metadata["config"]) == cfg);
    CHECK(back.columns == trajectory_columns);
    CHECK(back.metadata["convention"] == "standard");
  }
  SUBCASE("I/O errors name the path") {
    try {
      emit(Dataset{}, OutputFormat::csv, "/nonexistent-dir/out.csv");
      FAIL("expected an error");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()).find("/nonexistent-dir/out.csv") != std::string::npos);
    }
  }
}

TEST_CASE("verification suite passes") {
  for (const auto& r : run_verification(7, 60)) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
  }
}
