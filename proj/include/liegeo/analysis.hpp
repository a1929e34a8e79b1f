#pragma once

#include <optional>
#include <vector>

#include "liegeo/fingerprint.hpp"
#include "liegeo/parapolar.hpp"
#include "liegeo/residual.hpp"

namespace liegeo {

struct ResidualSummary {
  uint32_t point = 0;
  Fingerprint fp;
  std::vector<ComponentKind> components;
  std::size_t planes_outside_symps = 0;
};

struct AnalyzeOptions {
  // residual sample size; -1 analyzes every point of small geometries and a
  // deterministic sample of 20 otherwise, 0 disables residual analysis
  int residual_sample = -1;
  bool with_local_connectivity = true;
};

struct FullAnalysis {
  ParapolarReport report;
  std::vector<std::pair<int, LacunarityVerdict>> lacunary;  // k = -1 .. 6
  KsVerdict ks;
  ImbrexVerdict imbrex;
  std::optional<bool> locally_connected;
  std::optional<uint32_t> lc_witness;
  Fingerprint fp;
  std::vector<ResidualSummary> residuals;
};

/// Deterministic sample of residual base points: every point when the
/// geometry has at most `small_cap` points, else `sample` evenly spaced.
std::vector<uint32_t> residual_sample_points(std::size_t n, int sample,
                                             std::size_t small_cap = 512);

FullAnalysis run_analysis(const Geometry& g, const AnalyzeOptions& opts = {});

}  // namespace liegeo
