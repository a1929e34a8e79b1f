#pragma once

#include <string>

#include "liegeo/forms.hpp"
#include "liegeo/geometry.hpp"

namespace liegeo {

/// Builds a geometry from a construction string:
///   polar:sp:6:2   polar:o+:8:2   polar:o:7:2   polar:o-:6:3
///   A:4:2:2                         projective grassmannians A_{n,k}(q)
///   Bgr:sp:6:2:k=2                  polar grassmannians
///   dualpolar:sp:6:2                dual polar spaces
///   halfspin:o+:10:2                half-spin geometries
///   line:3                          a thick line
///   prod:(line:3)x(A:2:1:2)         cartesian products, nestable
Geometry build_construction(const std::string& spec);

/// Parses the form part of a construction string, e.g. "sp:6:2".
FormSpec parse_form(const std::string& spec);

/// Reads a plg file when the argument names one, otherwise builds from the
/// construction string.
Geometry load_geometry(const std::string& arg);

}  // namespace liegeo
