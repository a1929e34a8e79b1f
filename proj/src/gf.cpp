#include "liegeo/gf.hpp"

#include <algorithm>

#include "liegeo/errors.hpp"

namespace liegeo {

Gf::Gf(int q) : q_(q) {
  if (q != 2 && q != 3 && q != 4) throw InputError("unsupported field order " + std::to_string(q));
  if (q == 4) {
    // polynomial basis mod x^2 + x + 1
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) add_[a][b] = static_cast<uint8_t>(a ^ b);
    auto m4 = [](int a, int b) {
      int r = 0;
      for (int i = 0; i < 2; ++i)
        if (b & (1 << i)) {
          int t = a << i;
          r ^= t;
        }
      // reduce mod x^2+x+1 (bit 2 -> bits 1,0)
      if (r & 4) r ^= 0b111;
      if (r & 4) r ^= 0b111;
      return r & 3;
    };
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) mul_[a][b] = static_cast<uint8_t>(m4(a, b));
    for (int a = 0; a < 4; ++a) neg_[a] = static_cast<uint8_t>(a);
  } else {
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        add_[a][b] = static_cast<uint8_t>((a + b) % q);
        mul_[a][b] = static_cast<uint8_t>((a * b) % q);
      }
    for (int a = 0; a < q; ++a) neg_[a] = static_cast<uint8_t>((q - a) % q);
  }
  inv_[0] = 0;
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[a][b] == 1) inv_[a] = static_cast<uint8_t>(b);
}

Vec vec_add(const Gf& f, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vec vec_scale(const Gf& f, uint8_t c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
  return r;
}

bool vec_is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](uint8_t x) { return x == 0; });
}

std::string vec_label(const Vec& a) {
  std::string s;
  s.reserve(a.size());
  for (uint8_t x : a) s.push_back(static_cast<char>('0' + x));
  return s;
}

std::string Rref::label() const {
  std::string s;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s.push_back(';');
    s += vec_label(rows[i]);
  }
  return s;
}

std::size_t Rref::hash() const {
  std::size_t h = rows.size();
  for (const Vec& r : rows)
    for (uint8_t x : r) h = h * 1099511628211ull + x + 1;
  return h;
}

Rref rref_of(const Gf& f, std::vector<Vec> gens) {
  std::vector<Vec> rows;
  for (Vec v : gens) {
    for (const Vec& r : rows) {
      // eliminate at r's pivot
      std::size_t piv = 0;
      while (piv < r.size() && r[piv] == 0) ++piv;
      if (piv < v.size() && v[piv] != 0) {
        uint8_t c = f.neg(v[piv]);  // pivot of r is 1
        for (std::size_t i = piv; i < v.size(); ++i)
          v[i] = f.add(v[i], f.mul(c, r[i]));
      }
    }
    if (vec_is_zero(v)) continue;
    std::size_t piv = 0;
    while (v[piv] == 0) ++piv;
    uint8_t c = f.inv(v[piv]);
    for (std::size_t i = piv; i < v.size(); ++i) v[i] = f.mul(c, v[i]);
    // back-eliminate v's pivot from existing rows
    for (Vec& r : rows)
      if (r[piv] != 0) {
        uint8_t k = f.neg(r[piv]);
        for (std::size_t i = piv; i < r.size(); ++i)
          r[i] = f.add(r[i], f.mul(k, v[i]));
      }
    rows.push_back(std::move(v));
  }
  std::sort(rows.begin(), rows.end(), [](const Vec& a, const Vec& b) {
    std::size_t pa = 0, pb = 0;
    while (pa < a.size() && a[pa] == 0) ++pa;
    while (pb < b.size() && b[pb] == 0) ++pb;
    return pa < pb;
  });
  return Rref{std::move(rows)};
}

std::size_t rank_of(const Gf& f, std::vector<Vec> gens) {
  return rref_of(f, std::move(gens)).rows.size();
}

Vec normalize_point(const Gf& f, Vec v) {
  std::size_t piv = 0;
  while (piv < v.size() && v[piv] == 0) ++piv;
  if (piv == v.size()) throw InputError("zero vector has no 1-space");
  uint8_t c = f.inv(v[piv]);
  for (std::size_t i = piv; i < v.size(); ++i) v[i] = f.mul(c, v[i]);
  return v;
}

std::vector<Vec> projective_points(const Gf& f, std::size_t d) {
  std::vector<Vec> out;
  Vec v(d, 0);
  // enumerate all vectors whose first nonzero coordinate is 1
  for (std::size_t piv = 0; piv < d; ++piv) {
    std::fill(v.begin(), v.end(), 0);
    v[piv] = 1;
    std::size_t free = d - piv - 1;
    std::size_t total = 1;
    for (std::size_t i = 0; i < free; ++i) total *= static_cast<std::size_t>(f.q());
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t i = piv + 1; i < d; ++i) {
        v[i] = static_cast<uint8_t>(c % f.q());
        c /= f.q();
      }
      out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vec> pencil_points(const Gf& f, const Vec& a, const Vec& b) {
  std::vector<Vec> out;
  out.push_back(normalize_point(f, a));
  for (int c = 0; c < f.q(); ++c)
    out.push_back(normalize_point(f, vec_add(f, b, vec_scale(f, static_cast<uint8_t>(c), a))));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void enumerate_rref(const Gf& f, std::size_t d, std::size_t k,
                    std::vector<std::size_t>& pivots, std::size_t from,
                    std::vector<Rref>& out) {
  if (pivots.size() == k) {
    // fill free entries: position (row i, col j) is free when j > pivots[i]
    // and j is not a pivot column
    std::vector<std::pair<std::size_t, std::size_t>> free_pos;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = pivots[i] + 1; j < d; ++j)
        if (std::find(pivots.begin(), pivots.end(), j) == pivots.end())
          free_pos.emplace_back(i, j);
    std::size_t total = 1;
    for (std::size_t i = 0; i < free_pos.size(); ++i) total *= static_cast<std::size_t>(f.q());
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<Vec> rows(k, Vec(d, 0));
      for (std::size_t i = 0; i < k; ++i) rows[i][pivots[i]] = 1;
      std::size_t c = code;
      for (auto [i, j] : free_pos) {
        rows[i][j] = static_cast<uint8_t>(c % f.q());
        c /= f.q();
      }
      out.push_back(Rref{std::move(rows)});
    }
    return;
  }
  for (std::size_t j = from; j + (k - pivots.size()) <= d; ++j) {
    pivots.push_back(j);
    enumerate_rref(f, d, k, pivots, j + 1, out);
    pivots.pop_back();
  }
}

}  // namespace

std::vector<Rref> subspaces(const Gf& f, std::size_t d, std::size_t k) {
  if (k > d) throw InputError("subspace dimension exceeds space dimension");
  std::vector<Rref> out;
  std::vector<std::size_t> pivots;
  enumerate_rref(f, d, k, pivots, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace liegeo
