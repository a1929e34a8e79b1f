#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liegeo/bitset.hpp"

namespace liegeo {

using Line = std::vector<uint32_t>;  // sorted ascending point indices

/// An immutable point-line geometry on dense integer point indices. Lines are
/// kept both as sorted index arrays and, together with the collinearity graph,
/// as bitset rows. Instances never change after construction and are safe to
/// share across threads.
class Geometry {
public:
  Geometry() = default;

  std::size_t points() const { return n_; }
  const std::vector<Line>& lines() const { return lines_; }
  std::size_t line_count() const { return lines_.size(); }

  /// Collinearity row of p (no loop at p).
  const DynBitset& adj(uint32_t p) const { return adj_[p]; }
  /// adj(p) plus p itself.
  const DynBitset& perp(uint32_t p) const { return perp_[p]; }
  bool adjacent(uint32_t p, uint32_t q) const { return adj_[p].test(q); }
  std::size_t degree(uint32_t p) const { return adj_[p].count(); }

  const std::vector<uint32_t>& lines_through(uint32_t p) const {
    return lines_through_[p];
  }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(uint32_t p) const { return labels_[p]; }

  /// False when the line set does not cover every point (allowed only for
  /// induced subgeometries, which may keep isolated points).
  bool covering() const { return covering_; }

  bool connected() const;

  bool operator==(const Geometry& o) const {
    return n_ == o.n_ && lines_ == o.lines_ && labels_ == o.labels_;
  }

  friend Geometry make_geometry(std::size_t, std::vector<Line>,
                                std::vector<std::string>, bool, bool);

private:
  std::size_t n_ = 0;
  std::vector<Line> lines_;
  std::vector<std::string> labels_;
  std::vector<DynBitset> adj_;
  std::vector<DynBitset> perp_;
  std::vector<std::vector<uint32_t>> lines_through_;
  bool covering_ = true;
};

/// Validates and canonicalizes: lines are sorted internally and ordered
/// lexicographically, duplicates collapse unless `strict` (then they are an
/// error, as is a point on no line unless `allow_uncovered`).
Geometry make_geometry(std::size_t point_count, std::vector<Line> lines,
                       std::vector<std::string> labels = {},
                       bool allow_uncovered = false, bool strict = false);

/// Geometry induced on S: lines fully inside S, points reindexed by ascending
/// parent index. Points of S on no surviving line are retained; the covering
/// flag of the result is dropped instead.
struct Induced {
  Geometry geom;
  std::vector<uint32_t> to_parent;  // new index -> parent index
};
Induced induced(const Geometry& g, const DynBitset& s);

Geometry thick_line(std::size_t s);
/// Cartesian product: lines {p1} x L2 and L1 x {p2}. Point labels carry the
/// coordinate pair.
Geometry product(const Geometry& a, const Geometry& b);

// --- plg v1 text format ------------------------------------------------
//   plg 1 <point_count> <line_count>
//   one line per geometry line: ascending indices separated by single spaces
//   optional footer:  labels:  then `<point> # <label>` per labelled point
std::string write_plg(const Geometry& g);
Geometry read_plg(const std::string& text);
Geometry read_plg_file(const std::string& path);
void write_plg_file(const Geometry& g, const std::string& path);

}  // namespace liegeo
