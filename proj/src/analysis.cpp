#include "liegeo/analysis.hpp"

#include <algorithm>

#include "liegeo/parallel.hpp"

namespace liegeo {

std::vector<uint32_t> residual_sample_points(std::size_t n, int sample,
                                             std::size_t small_cap) {
  std::vector<uint32_t> pts;
  if (sample == 0 || n == 0) return pts;
  if (sample < 0 && n <= small_cap) {
    pts.resize(n);
    for (std::size_t i = 0; i < n; ++i) pts[i] = static_cast<uint32_t>(i);
    return pts;
  }
  std::size_t want = sample < 0 ? 20 : static_cast<std::size_t>(sample);
  want = std::min(want, n);
  for (std::size_t i = 0; i < want; ++i)
    pts.push_back(static_cast<uint32_t>((i * n) / want));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

FullAnalysis run_analysis(const Geometry& g, const AnalyzeOptions& opts) {
  FullAnalysis out;
  DistanceMatrix dm(g);
  out.report = verify_parapolar(g, dm);
  for (int k = -1; k <= 6; ++k) out.lacunary.emplace_back(k, is_k_lacunary(out.report, k));
  out.ks = ks_hypotheses(g, out.report, dm);
  out.imbrex = is_imbrex(g, out.report);
  out.fp = fingerprint(g, out.report);

  if (opts.with_local_connectivity) {
    LocalConnectivity lc = is_locally_connected(g, out.report.symps);
    out.locally_connected = lc.locally_connected;
    out.lc_witness = lc.witness;
  }

  std::vector<uint32_t> pts = residual_sample_points(g.points(), opts.residual_sample);
  out.residuals.resize(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    uint32_t p = pts[i];
    Residual r = point_residual(g, p, out.report.symps);
    ResidualSummary s;
    s.point = p;
    s.planes_outside_symps = r.planes_outside_symps;
    s.fp = fingerprint(r.geom);
    for (const ComponentClass& c : classify_components(g, r, out.report.symps))
      s.components.push_back(c.kind);
    out.residuals[i] = std::move(s);
  });
  return out;
}

}  // namespace liegeo
