#pragma once

// Detection of plateaus and sudden-death points in sampled measure curves.

#include <span>
#include <string>
#include <vector>

#include "qqd/sweep.hpp"

namespace qqd {

enum class TransitionKind { PlateauStart, PlateauEnd, ZeroCrossing };

struct Transition {
  double t_gamma;
  std::string measure;  ///< CSV column name, e.g. "geometric_x2"
  TransitionKind kind;
};

struct TransitionOptions {
  /// A grid cell is flat when |dv/dt_gamma| is below this.
  double plateau_threshold = kDefaultPlateauThreshold;
  /// A value below this counts as zero.
  double zero_threshold = 1e-9;
  std::size_t min_rows = 10;
};

std::string_view to_string(TransitionKind kind);

/// For every maximal run of flat cells [t_i, t_j] emits plateau-start at t_i
/// and plateau-end at t_j (the grid point shared by the last flat and first
/// non-flat cell, i.e. the midpoint of the two bracketing cells; runs touching
/// the ends report the end points). Emits one zero-crossing at the midpoint
/// of the first cell in which the value drops below zero_threshold after
/// having been above it. Throws InsufficientData for fewer than min_rows
/// samples and InvalidConfig for a non-increasing time axis.
std::vector<Transition> detect_series_transitions(std::span<const double> t_gamma, std::span<const double> values,
                                                  const std::string& measure, const TransitionOptions& options = {});

/// Runs detect_series_transitions on every measure column present in the
/// first row (angle columns are skipped). Results are sorted by time, then
/// by column order.
std::vector<Transition> detect_transitions(const std::vector<SweepRow>& rows, const TransitionOptions& options = {});

}  // namespace qqd
