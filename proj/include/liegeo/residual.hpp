#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liegeo/geometry.hpp"
#include "liegeo/parapolar.hpp"

namespace liegeo {

/// The point-residual at p: points are the lines of the parent through p,
/// lines are the planar pencils with vertex p inside singular planes that lie
/// in some symp. Singular planes through p outside every symp contribute no
/// residual line and are only counted.
struct Residual {
  Geometry geom;
  uint32_t parent_point = 0;
  std::vector<uint32_t> parent_line;              // residual point -> parent line id
  std::vector<std::vector<uint32_t>> parent_plane; // residual line -> plane point set
  std::size_t planes_outside_symps = 0;
};

Residual point_residual(const Geometry& g, uint32_t p,
                        const std::vector<Symp>& symps);

struct LocalConnectivity {
  bool locally_connected = false;
  std::optional<uint32_t> witness;  // a point with disconnected residual
};
LocalConnectivity is_locally_connected(const Geometry& g,
                                       const std::vector<Symp>& symps);

enum class ComponentKind { SingleLine, SympResidue, StrongParapolar, Anomalous };

struct ComponentClass {
  ComponentKind kind;
  DynBitset residual_points;
  std::optional<ParapolarReport> report;  // for strong parapolar components
};

/// Classifies the connected components of a residual: a lone line, the lines
/// through p of a single symp of rank >= 3, or a strong parapolar space.
std::vector<ComponentClass> classify_components(const Geometry& g,
                                                const Residual& res,
                                                const std::vector<Symp>& symps);

const char* component_kind_name(ComponentKind k);

}  // namespace liegeo
