#include "liegeo/construct.hpp"

#include <filesystem>
#include <vector>

#include "liegeo/errors.hpp"
#include "liegeo/grassmann.hpp"
#include "liegeo/polar.hpp"

namespace liegeo {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

int to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw InputError("");
    return v;
  } catch (...) {
    throw InputError("bad " + what + ": '" + s + "'");
  }
}

// splits "(X)x(Y)" into X and Y respecting nested parentheses
std::pair<std::string, std::string> split_product(const std::string& body) {
  if (body.empty() || body[0] != '(')
    throw InputError("product needs the form (left)x(right)");
  int depth = 0;
  std::size_t close = std::string::npos;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '(') ++depth;
    else if (body[i] == ')') {
      --depth;
      if (depth == 0) {
        close = i;
        break;
      }
    }
  }
  if (close == std::string::npos || close + 2 >= body.size() ||
      body[close + 1] != 'x' || body[close + 2] != '(' || body.back() != ')')
    throw InputError("product needs the form (left)x(right)");
  return {body.substr(1, close - 1),
          body.substr(close + 3, body.size() - close - 4)};
}

}  // namespace

FormSpec parse_form(const std::string& spec) {
  auto parts = split(spec, ':');
  if (parts.size() != 3) throw InputError("form needs kind:dim:q, got '" + spec + "'");
  FormKind kind;
  if (parts[0] == "sp") kind = FormKind::Symplectic;
  else if (parts[0] == "o+") kind = FormKind::Hyperbolic;
  else if (parts[0] == "o") kind = FormKind::Parabolic;
  else if (parts[0] == "o-") kind = FormKind::Elliptic;
  else throw InputError("unknown form kind '" + parts[0] + "'");
  int dim = to_int(parts[1], "dimension");
  int q = to_int(parts[2], "field order");
  if (dim < 2) throw InputError("dimension too small");
  return FormSpec{kind, q, static_cast<std::size_t>(dim)};
}

Geometry build_construction(const std::string& spec) {
  std::size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw InputError("bad construction string '" + spec + "'");
  std::string head = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);

  if (head == "line") return thick_line(static_cast<std::size_t>(to_int(rest, "line size")));

  if (head == "polar") return build_classical(parse_form(rest)).geom;

  if (head == "A") {
    auto parts = split(rest, ':');
    if (parts.size() != 3) throw InputError("A needs n:k:q");
    return grassmannian_A(to_int(parts[0], "n"), to_int(parts[1], "k"),
                          to_int(parts[2], "q"));
  }

  if (head == "Bgr") {
    auto parts = split(rest, ':');
    if (parts.size() != 4 || parts[3].rfind("k=", 0) != 0)
      throw InputError("Bgr needs form:dim:q:k=K");
    FormSpec fs = parse_form(parts[0] + ":" + parts[1] + ":" + parts[2]);
    int k = to_int(parts[3].substr(2), "k");
    ClassicalPolar cp = build_classical(fs);
    return polar_grassmannian(cp.geom, cp.rank, k);
  }

  if (head == "dualpolar") {
    ClassicalPolar cp = build_classical(parse_form(rest));
    return dual_polar(cp.geom, cp.rank);
  }

  if (head == "halfspin") return half_spin(parse_form(rest));

  if (head == "prod") {
    auto [l, r] = split_product(rest);
    return product(build_construction(l), build_construction(r));
  }

  throw InputError("unknown construction '" + head + "'");
}

Geometry load_geometry(const std::string& arg) {
  if (arg.size() > 4 && arg.substr(arg.size() - 4) == ".plg")
    return read_plg_file(arg);
  if (std::filesystem::exists(arg) && !std::filesystem::is_directory(arg))
    return read_plg_file(arg);
  return build_construction(arg);
}

}  // namespace liegeo
