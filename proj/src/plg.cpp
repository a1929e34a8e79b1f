#include <fstream>
#include <sstream>

#include "liegeo/errors.hpp"
#include "liegeo/geometry.hpp"

namespace liegeo {

std::string write_plg(const Geometry& g) {
  std::ostringstream out;
  out << "plg 1 " << g.points() << ' ' << g.line_count() << '\n';
  for (const Line& l : g.lines()) {
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (i) out << ' ';
      out << l[i];
    }
    out << '\n';
  }
  if (g.has_labels()) {
    out << "labels:\n";
    for (std::size_t p = 0; p < g.points(); ++p)
      if (!g.label(static_cast<uint32_t>(p)).empty())
        out << p << " # " << g.label(static_cast<uint32_t>(p)) << '\n';
  }
  return out.str();
}

Geometry read_plg(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) throw InputError("empty plg input");
  std::istringstream hs(header);
  std::string magic;
  int version = 0;
  std::size_t n = 0, m = 0;
  if (!(hs >> magic >> version >> n >> m) || magic != "plg" || version != 1)
    throw InputError("bad plg header: " + header);

  std::vector<Line> lines;
  lines.reserve(m);
  std::string row;
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::getline(in, row)) throw InputError("plg truncated at line " + std::to_string(i));
    std::istringstream rs(row);
    Line l;
    uint32_t v;
    while (rs >> v) l.push_back(v);
    if (l.size() < 2) throw InputError("plg line with fewer than 2 points");
    for (std::size_t k = 0; k + 1 < l.size(); ++k)
      if (l[k] >= l[k + 1]) throw InputError("plg line indices must be strictly ascending");
    lines.push_back(std::move(l));
  }

  std::vector<std::string> labels;
  if (std::getline(in, row)) {
    if (row != "labels:") throw InputError("unexpected plg trailer: " + row);
    labels.assign(n, "");
    while (std::getline(in, row)) {
      if (row.empty()) continue;
      std::size_t hash = row.find(" # ");
      if (hash == std::string::npos) throw InputError("bad label row: " + row);
      std::size_t p = std::stoul(row.substr(0, hash));
      if (p >= n) throw InputError("label for point out of range");
      labels[p] = row.substr(hash + 3);
    }
  }
  return make_geometry(n, std::move(lines), std::move(labels),
                       /*allow_uncovered=*/false, /*strict=*/true);
}

Geometry read_plg_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return read_plg(buf.str());
}

void write_plg_file(const Geometry& g, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << write_plg(g);
}

}  // namespace liegeo
