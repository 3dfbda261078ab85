#include <catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <limits>
#include <random>

#include "qqd/errors.hpp"
#include "qqd/measures.hpp"
#include "qqd/sweep.hpp"

using namespace qqd;
using Catch::Matchers::WithinAbs;

namespace {

SweepConfig small_config(Family f, double x, NoiseMode mode, std::size_t points = 11) {
  SweepConfig cfg;
  cfg.family = f;
  cfg.param = x;
  cfg.mode = mode;
  cfg.n_points = points;
  cfg.t_gamma_max = 2.0;
  return cfg;
}

// Random doubles spanning many magnitudes, including subnormals and signed zero.
double awkward_double(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  switch (pick(rng)) {
    case 0: return u(rng);
    case 1: return u(rng) * 1e-300;
    case 2: return u(rng) * 1e300;
    case 3: return std::numeric_limits<double>::denorm_min() * (1 + (rng() % 1000));
    case 4: return -0.0;
    default: return std::nextafter(1.0 / 3.0, 1.0) * (1 + (rng() % 7));
  }
}

std::vector<SweepRow> random_rows(std::mt19937_64& rng, const SweepConfig& cfg) {
  std::vector<SweepRow> rows(cfg.n_points);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    auto& r = rows[k];
    r.t_gamma = static_cast<double>(k) * 0.1 + 1e-17 * static_cast<double>(rng() % 3);
    if (cfg.wants(Measure::Negativity)) r.negativity = awkward_double(rng);
    if (cfg.wants(Measure::Discord)) r.discord = awkward_double(rng);
    if (cfg.wants(Measure::Geometric)) r.geometric_x2 = awkward_double(rng);
    if (cfg.wants(Measure::Classical)) r.classical = awkward_double(rng);
    if (cfg.wants(Measure::Mutual)) r.mutual = awkward_double(rng);
    if (cfg.wants_direction()) {
      r.optimal_theta = awkward_double(rng);
      r.optimal_phi = awkward_double(rng);
    }
  }
  return rows;
}

std::vector<Measure> random_measures(std::mt19937_64& rng) {
  std::vector<Measure> m;
  while (m.empty()) {
    for (Measure x : {Measure::Negativity, Measure::Discord, Measure::Geometric, Measure::Classical, Measure::Mutual}) {
      if (rng() & 1) m.push_back(x);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("sweep configuration is validated", "[sweep][config]") {
  SweepConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  SweepConfig few = cfg;
  few.n_points = 1;
  CHECK_THROWS_AS(few.validate(), InvalidConfig);
  SweepConfig horizon = cfg;
  horizon.t_gamma_max = 0.0;
  CHECK_THROWS_AS(horizon.validate(), InvalidConfig);
  SweepConfig none = cfg;
  none.measures.clear();
  CHECK_THROWS_AS(none.validate(), InvalidConfig);
  SweepConfig rate = cfg;
  rate.gamma_rate = -1.0;
  CHECK_THROWS_AS(rate.validate(), InvalidConfig);
  SweepConfig param = cfg;
  param.param = 0.7;
  CHECK_THROWS_AS(param.validate(), ParameterOutOfRange);
  CHECK_THROWS_AS(compute_sweep(few), InvalidConfig);
}

TEST_CASE("enum names round trip", "[sweep][config]") {
  for (Measure m : {Measure::Negativity, Measure::Discord, Measure::Geometric, Measure::Classical, Measure::Mutual}) {
    CHECK(parse_measure(to_string(m)) == m);
  }
  CHECK(parse_family("separable") == Family::Separable);
  CHECK(parse_mode("combined") == NoiseMode::Combined);
  CHECK(parse_format("json") == OutputFormat::Json);
  CHECK_THROWS_AS(parse_mode("global"), InvalidConfig);
  CHECK(parse_measure_list("mutual,negativity,mutual") == std::vector<Measure>{Measure::Negativity, Measure::Mutual});
  CHECK_THROWS_AS(parse_measure_list(","), InvalidConfig);
  CHECK_THROWS_AS(parse_measure_list("negativity,entropy"), InvalidConfig);
}

TEST_CASE("grid is uniform and ends on the horizon", "[sweep]") {
  SweepConfig cfg;
  cfg.t_gamma_max = 2.0;
  cfg.n_points = 201;
  const auto g = sweep_grid(cfg);
  REQUIRE(g.size() == 201);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 2.0);
  for (std::size_t k = 1; k < g.size(); ++k) CHECK(g[k] > g[k - 1]);
  CHECK_THAT(g[100], WithinAbs(1.0, 1e-15));
}

TEST_CASE("columns are present exactly when requested", "[sweep]") {
  auto cfg = small_config(Family::Entangled, 0.1, NoiseMode::Multilocal, 3);
  cfg.measures = {Measure::Negativity, Measure::Mutual};
  const auto rows = compute_sweep(cfg);
  for (const auto& r : rows) {
    CHECK(r.negativity.has_value());
    CHECK(r.mutual.has_value());
    CHECK_FALSE(r.discord.has_value());
    CHECK_FALSE(r.classical.has_value());
    CHECK_FALSE(r.geometric_x2.has_value());
    CHECK_FALSE(r.optimal_theta.has_value());
  }
  CHECK(format_csv(rows, cfg).starts_with("t_gamma,negativity,mutual\n"));

  cfg.measures = {Measure::Classical};
  const auto c = compute_sweep(cfg);
  CHECK(c[0].optimal_theta.has_value());
  CHECK(c[0].optimal_phi.has_value());
  CHECK(format_csv(c, cfg).starts_with("t_gamma,classical,theta_opt,phi_opt\n"));
}

TEST_CASE("full header order", "[sweep][csv]") {
  const auto cfg = small_config(Family::Entangled, 0.0, NoiseMode::Multilocal, 2);
  const auto csv = format_csv(compute_sweep(cfg), cfg);
  CHECK(csv.starts_with("t_gamma,negativity,discord,geometric_x2,classical,mutual,theta_opt,phi_opt\n"));
  CHECK(csv.find('\r') == std::string::npos);
}

TEST_CASE("maximally entangled row at t = 0 is all ones", "[sweep]") {
  for (NoiseMode mode : {NoiseMode::Multilocal, NoiseMode::Collective}) {
    const auto rows = compute_sweep(small_config(Family::Entangled, 0.0, mode, 3));
    const auto& r = rows.front();
    CHECK_THAT(*r.negativity, WithinAbs(1.0, 1e-9));
    CHECK_THAT(*r.discord, WithinAbs(1.0, 1e-9));
    CHECK_THAT(*r.geometric_x2, WithinAbs(1.0, 1e-9));
    CHECK_THAT(*r.classical, WithinAbs(1.0, 1e-9));
    CHECK_THAT(*r.mutual, WithinAbs(2.0, 1e-9));
  }
}

TEST_CASE("first row matches direct evaluation of the initial state", "[sweep]") {
  const auto cfg = small_config(Family::Separable, 0.2, NoiseMode::Collective, 4);
  const auto row = compute_sweep(cfg).front();
  const auto rec = evaluate_correlations(rho_separable(0.2));
  CHECK(*row.negativity == rec.negativity);
  CHECK(*row.geometric_x2 == rec.geometric_discord_x2);
  CHECK(*row.classical == rec.classical);
  CHECK(*row.mutual == rec.mutual_info);
  CHECK(*row.discord == std::max(0.0, rec.discord));
}

TEST_CASE("entangled negativity dies at ln 2 and stays dead", "[sweep]") {
  auto cfg = small_config(Family::Entangled, 0.25, NoiseMode::Multilocal, 201);
  cfg.measures = {Measure::Negativity};
  for (const auto& r : compute_sweep(cfg)) {
    if (r.t_gamma < std::log(2.0) - 1e-9) {
      CHECK(*r.negativity > 0.0);
    } else {
      CHECK(*r.negativity <= 1e-12);
    }
  }
}

TEST_CASE("separable geometric column is flat at 1/32 before ln 2", "[sweep]") {
  auto cfg = small_config(Family::Separable, 0.25, NoiseMode::Multilocal, 201);
  cfg.measures = {Measure::Geometric};
  for (const auto& r : compute_sweep(cfg)) {
    if (r.t_gamma < std::log(2.0)) CHECK_THAT(*r.geometric_x2, WithinAbs(1.0 / 32.0, 1e-12));
  }
}

TEST_CASE("rate is presentation only", "[sweep]") {
  auto a = small_config(Family::Entangled, 0.3, NoiseMode::Multilocal, 6);
  auto b = a;
  b.gamma_rate = 3.5;
  a.measures = b.measures = {Measure::Negativity, Measure::Geometric};
  const auto ra = compute_sweep(a), rb = compute_sweep(b);
  REQUIRE(ra.size() == rb.size());
  for (std::size_t k = 0; k < ra.size(); ++k) {
    CHECK_THAT(*ra[k].negativity, WithinAbs(*rb[k].negativity, 1e-14));
    CHECK_THAT(*ra[k].geometric_x2, WithinAbs(*rb[k].geometric_x2, 1e-14));
  }
}

TEST_CASE("sweeps are identical for any worker count", "[sweep][determinism]") {
  auto cfg = small_config(Family::Entangled, 0.25, NoiseMode::Collective, 9);
  cfg.workers = 1;
  const auto one = compute_sweep(cfg);
  cfg.workers = 4;
  const auto four = compute_sweep(cfg);
  CHECK(one == four);
  CHECK(format_csv(one, cfg) == format_csv(four, cfg));
}

TEST_CASE("CSV round trip reproduces rows exactly", "[sweep][csv][property]") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    SweepConfig cfg;
    cfg.n_points = 1 + rng() % 30;
    cfg.measures = random_measures(rng);
    const auto rows = random_rows(rng, cfg);
    const auto text = format_csv(rows, cfg);
    const auto back = parse_csv(text);
    REQUIRE(back.size() == rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
      CHECK(back[k] == rows[k]);
      if (rows[k].negativity) CHECK(std::signbit(*back[k].negativity) == std::signbit(*rows[k].negativity));
    }
    CHECK(format_csv(back, cfg) == text);
  }
}

TEST_CASE("JSON round trip reproduces rows exactly", "[sweep][json][property]") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    SweepConfig cfg;
    cfg.n_points = 1 + rng() % 30;
    cfg.measures = random_measures(rng);
    const auto rows = random_rows(rng, cfg);
    const auto back = parse_json(format_json(rows, cfg));
    REQUIRE(back.size() == rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) CHECK(back[k] == rows[k]);
  }
}

TEST_CASE("JSON carries the config", "[sweep][json]") {
  auto cfg = small_config(Family::Separable, 0.25, NoiseMode::Collective, 3);
  cfg.measures = {Measure::Geometric};
  const auto text = format_json(compute_sweep(cfg), cfg);
  CHECK(text.find("\"config\"") != std::string::npos);
  CHECK(text.find("\"family\": \"separable\"") != std::string::npos);
  CHECK(text.find("\"mode\": \"collective\"") != std::string::npos);
  CHECK(text.find("\"geometric_x2\"") != std::string::npos);
  CHECK(text.find("\"negativity\"") == std::string::npos);
}

TEST_CASE("malformed input raises IoFailure", "[sweep][csv]") {
  CHECK_THROWS_AS(parse_csv(""), IoFailure);
  CHECK_THROWS_AS(parse_csv("time,negativity\n0,1\n"), IoFailure);
  CHECK_THROWS_AS(parse_csv("t_gamma,negativity\n0\n"), IoFailure);
  CHECK_THROWS_AS(parse_csv("t_gamma,negativity\n0,abc\n"), IoFailure);
  CHECK_THROWS_AS(parse_csv("t_gamma,entropy\n0,1\n"), IoFailure);
  CHECK_THROWS_AS(parse_json("{\"rows\": [ {\"t_gamma\": \"x\"} ]}"), IoFailure);
  CHECK_THROWS_AS(parse_json("not json"), IoFailure);
  CHECK(parse_csv("t_gamma,negativity\r\n0,1\r\n").size() == 1);
}

TEST_CASE("run_sweep writes byte-identical files", "[sweep][io][determinism]") {
  const auto dir = std::filesystem::temp_directory_path() / "qqd_sweep_test";
  std::filesystem::create_directories(dir);
  auto cfg = small_config(Family::Entangled, 0.2, NoiseMode::Multilocal, 5);
  cfg.output_path = (dir / "a.csv").string();
  run_sweep(cfg);
  const auto first = read_text_file(cfg.output_path);
  run_sweep(cfg);
  CHECK(read_text_file(cfg.output_path) == first);

  cfg.output_format = OutputFormat::Json;
  cfg.output_path = (dir / "a.json").string();
  const auto rows = run_sweep(cfg);
  CHECK(parse_json(read_text_file(cfg.output_path)) == rows);

  cfg.output_path = (dir / "missing" / "x.csv").string();
  CHECK_THROWS_AS(run_sweep(cfg), IoFailure);
  CHECK_THROWS_AS(read_text_file((dir / "nope.csv").string()), IoFailure);
  std::filesystem::remove_all(dir);
}
