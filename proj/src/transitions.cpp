#include "qqd/transitions.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "qqd/errors.hpp"

namespace qqd {

namespace {

struct MeasureColumn {
  const char* name;
  std::optional<double> SweepRow::*field;
};

constexpr MeasureColumn kMeasureColumns[] = {
    {"negativity", &SweepRow::negativity}, {"discord", &SweepRow::discord},
    {"geometric_x2", &SweepRow::geometric_x2}, {"classical", &SweepRow::classical},
    {"mutual", &SweepRow::mutual},
};

}  // namespace

std::string_view to_string(TransitionKind kind) {
  switch (kind) {
    case TransitionKind::PlateauStart: return "plateau-start";
    case TransitionKind::PlateauEnd: return "plateau-end";
    case TransitionKind::ZeroCrossing: return "zero-crossing";
  }
  return "unknown";
}

std::vector<Transition> detect_series_transitions(std::span<const double> t_gamma, std::span<const double> values,
                                                  const std::string& measure, const TransitionOptions& options) {
  if (t_gamma.size() != values.size()) throw InvalidConfig("time and value series differ in length");
  const std::size_t n = t_gamma.size();
  if (n < options.min_rows) {
    throw InsufficientData("need at least " + std::to_string(options.min_rows) + " samples, got " + std::to_string(n));
  }
  for (std::size_t k = 1; k < n; ++k) {
    if (!(t_gamma[k] > t_gamma[k - 1])) throw InvalidConfig("t_gamma must be strictly increasing");
  }

  std::vector<Transition> out;
  std::vector<bool> flat(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double slope = (values[k + 1] - values[k]) / (t_gamma[k + 1] - t_gamma[k]);
    flat[k] = std::abs(slope) < options.plateau_threshold;
  }
  for (std::size_t k = 0; k < flat.size();) {
    if (!flat[k]) {
      ++k;
      continue;
    }
    std::size_t end = k;
    while (end + 1 < flat.size() && flat[end + 1]) ++end;
    out.push_back({t_gamma[k], measure, TransitionKind::PlateauStart});
    out.push_back({t_gamma[end + 1], measure, TransitionKind::PlateauEnd});
    k = end + 1;
  }

  bool was_above = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (values[k] >= options.zero_threshold) {
      was_above = true;
    } else if (was_above) {
      out.push_back({0.5 * (t_gamma[k - 1] + t_gamma[k]), measure, TransitionKind::ZeroCrossing});
      break;
    }
  }
  return out;
}

std::vector<Transition> detect_transitions(const std::vector<SweepRow>& rows, const TransitionOptions& options) {
  if (rows.size() < options.min_rows) {
    throw InsufficientData("need at least " + std::to_string(options.min_rows) + " rows, got " +
                           std::to_string(rows.size()));
  }
  std::vector<double> t(rows.size());
  std::transform(rows.begin(), rows.end(), t.begin(), [](const SweepRow& r) { return r.t_gamma; });

  std::vector<Transition> out;
  for (const auto& col : kMeasureColumns) {
    if (!(rows.front().*col.field)) continue;
    std::vector<double> v(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const auto& cell = rows[k].*col.field;
      if (!cell) throw InvalidConfig(std::string("column ") + col.name + " missing in row " + std::to_string(k));
      v[k] = *cell;
    }
    auto events = detect_series_transitions(t, v, col.name, options);
    out.insert(out.end(), events.begin(), events.end());
  }
  std::stable_sort(out.begin(), out.end(), [](const Transition& a, const Transition& b) { return a.t_gamma < b.t_gamma; });
  return out;
}

}  // namespace qqd
