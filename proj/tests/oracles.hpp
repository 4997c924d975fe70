#pragma once

// Independent reference implementations for tests: dense row reduction and
// brute-force enumeration over GF(2) vector spaces.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "ratslice/complex.hpp"
#include "ratslice/gf2.hpp"

namespace oracle {

using ratslice::Index;
using ratslice::Rational;
using Dense = std::vector<std::vector<std::uint8_t>>;  // row-major

inline Dense to_dense(const ratslice::SparseMatrixGF2& m) {
  Dense d(m.rows(), std::vector<std::uint8_t>(m.cols(), 0));
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (Index r : m.column(j)) d[r][j] = 1;
  }
  return d;
}

inline std::size_t dense_rank(Dense a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && !a[piv][c]) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r != rank && a[r][c]) {
        for (std::size_t k = 0; k < cols; ++k) a[r][k] ^= a[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

inline bool dense_in_span(const Dense& a, const std::vector<std::uint8_t>& v) {
  Dense aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(v[r]);
  return dense_rank(aug) == dense_rank(a);
}

inline std::vector<std::uint8_t> to_dense(const ratslice::VectorGF2& v) {
  std::vector<std::uint8_t> d(v.length(), 0);
  for (Index i : v.support()) d[i] = 1;
  return d;
}

inline ratslice::SparseMatrixGF2 random_matrix(std::mt19937_64& rng, std::size_t rows,
                                               std::size_t cols, double density) {
  std::bernoulli_distribution bit(density);
  std::vector<std::vector<Index>> c(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t r = 0; r < rows; ++r) {
      if (bit(rng)) c[j].push_back(static_cast<Index>(r));
    }
  }
  return ratslice::SparseMatrixGF2(rows, std::move(c));
}

// Bitmask helpers for complexes with at most 20 generators.
inline std::uint32_t boundary_mask(const ratslice::FilteredComplex& c, std::uint32_t v) {
  std::uint32_t out = 0;
  for (Index i = 0; i < c.size(); ++i) {
    if (v >> i & 1) {
      for (Index t : c.differential().column(i)) out ^= 1u << t;
    }
  }
  return out;
}

struct Enumeration {
  std::vector<std::uint32_t> cycles;
  std::vector<std::uint32_t> boundaries;
};

inline Enumeration enumerate(const ratslice::FilteredComplex& c) {
  Enumeration e;
  std::vector<bool> is_boundary(1u << c.size(), false);
  for (std::uint32_t v = 0; v < (1u << c.size()); ++v) {
    if (boundary_mask(c, v) == 0) e.cycles.push_back(v);
    is_boundary[boundary_mask(c, v)] = true;
  }
  for (std::uint32_t v = 0; v < (1u << c.size()); ++v) {
    if (is_boundary[v]) e.boundaries.push_back(v);
  }
  return e;
}

inline Rational max_alexander(const ratslice::FilteredComplex& c, std::uint32_t v) {
  Rational best;
  bool first = true;
  for (Index i = 0; i < c.size(); ++i) {
    if (v >> i & 1) {
      if (first || c.generator(i).alexander > best) best = c.generator(i).alexander;
      first = false;
    }
  }
  return best;
}

// min over representatives z + b of the top Alexander grading.
inline Rational exhaustive_tau(const ratslice::FilteredComplex& c, const Enumeration& e,
                               std::uint32_t z) {
  Rational best;
  bool first = true;
  for (std::uint32_t b : e.boundaries) {
    Rational m = max_alexander(c, z ^ b);
    if (first || m < best) best = m;
    first = false;
  }
  return best;
}

inline std::uint32_t to_mask(const ratslice::VectorGF2& v) {
  std::uint32_t m = 0;
  for (Index i : v.support()) m |= 1u << i;
  return m;
}

inline ratslice::VectorGF2 from_mask(std::size_t n, std::uint32_t m) {
  std::vector<Index> s;
  for (Index i = 0; i < n; ++i) {
    if (m >> i & 1) s.push_back(i);
  }
  return ratslice::VectorGF2(n, s);
}

// Extremes of tau over all nonzero classes, by enumerating every cycle.
inline std::pair<Rational, Rational> exhaustive_extremes(const ratslice::FilteredComplex& c) {
  auto e = enumerate(c);
  std::vector<bool> boundary(1u << c.size(), false);
  for (auto b : e.boundaries) boundary[b] = true;
  Rational lo;
  Rational hi;
  bool first = true;
  for (auto z : e.cycles) {
    if (boundary[z]) continue;
    Rational t = exhaustive_tau(c, e, z);
    if (first || t < lo) lo = t;
    if (first || t > hi) hi = t;
    first = false;
  }
  return {lo, hi};
}

// Homology ranks per (spinc, maslov) from dense ranks of graded pieces.
inline std::map<ratslice::HomologyKey, std::size_t> dense_homology(const ratslice::FilteredComplex& c) {
  std::map<ratslice::HomologyKey, std::vector<Index>> blocks;
  for (Index i = 0; i < c.size(); ++i) {
    blocks[{c.generator(i).spinc, c.generator(i).maslov}].push_back(i);
  }
  auto piece_rank = [&](const std::vector<Index>& src, const std::vector<Index>& dst) {
    if (src.empty() || dst.empty()) return std::size_t{0};
    Dense d(dst.size(), std::vector<std::uint8_t>(src.size(), 0));
    for (std::size_t j = 0; j < src.size(); ++j) {
      for (std::size_t r = 0; r < dst.size(); ++r) {
        d[r][j] = c.differential().get(dst[r], src[j]);
      }
    }
    return dense_rank(d);
  };
  std::map<ratslice::HomologyKey, std::size_t> out;
  for (const auto& [key, members] : blocks) {
    std::vector<Index> below;
    std::vector<Index> above;
    auto b = blocks.find({key.first, key.second - 1});
    if (b != blocks.end()) below = b->second;
    auto a = blocks.find({key.first, key.second + 1});
    if (a != blocks.end()) above = a->second;
    std::size_t h = members.size() - piece_rank(members, below) - piece_rank(above, members);
    if (h) out[key] = h;
  }
  return out;
}

// Random valid filtered complex: cancelling pairs and isolated generators,
// then scrambled by filtered, grading-preserving changes of basis.
inline ratslice::FilteredComplex random_complex(std::mt19937_64& rng, std::size_t max_gens) {
  std::uniform_int_distribution<int> maslov(-2, 2);
  std::uniform_int_distribution<int> alex(-6, 6);  // quarters
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> drop(0, 4);
  std::uniform_int_distribution<std::size_t> count(1, max_gens);
  const std::size_t target = count(rng);
  struct G {
    int m;
    int a4;
    int s;
  };
  std::vector<G> g;
  std::vector<std::vector<std::uint8_t>> d;  // d[i][j]: arrow j -> i
  auto add = [&](G x) {
    g.push_back(x);
    for (auto& row : d) row.push_back(0);
    d.emplace_back(g.size(), 0);
  };
  while (g.size() < target) {
    G x{maslov(rng), alex(rng), coin(rng)};
    if (g.size() + 2 <= target && coin(rng)) {
      add(x);
      add({x.m - 1, x.a4 - drop(rng), x.s});
      d[g.size() - 1][g.size() - 2] = 1;
    } else {
      add(x);
    }
  }
  const std::size_t n = g.size();
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int step = 0; step < 4 * static_cast<int>(n); ++step) {
    std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    if (i == j || g[i].m != g[j].m || g[i].s != g[j].s || g[j].a4 > g[i].a4) continue;
    // New basis e_i' = e_i + e_j. In the new coordinates: column i += column j,
    // then row j += row i.
    for (std::size_t r = 0; r < n; ++r) d[r][i] ^= d[r][j];
    for (std::size_t c = 0; c < n; ++c) d[j][c] ^= d[i][c];
  }
  std::vector<ratslice::Generator> gens;
  std::vector<std::vector<Index>> diff(n);
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back({"g" + std::to_string(i), Rational(g[i].m), Rational(g[i].a4, 4),
                    g[i].s ? "b" : "a"});
    for (std::size_t r = 0; r < n; ++r) {
      if (d[r][i]) diff[i].push_back(static_cast<Index>(r));
    }
  }
  return ratslice::FilteredComplex(std::move(gens), std::move(diff));
}

}  // namespace oracle
