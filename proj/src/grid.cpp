#include "ratslice/grid.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>

#include "ratslice/error.hpp"
#include "ratslice/parallel.hpp"

namespace ratslice {

namespace {

void check_permutation(const std::vector<int>& p, const char* name) {
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    int v = p[i];
    if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[v]) {
      throw InputError(std::string(name) + " is not a permutation of 0.." +
                       std::to_string(p.size() - 1));
    }
    seen[v] = true;
  }
}

int mod(int a, int n) { return ((a % n) + n) % n; }

// v in the half-open cyclic interval [lo, hi).
bool in_cyclic(int v, int lo, int hi, int n) { return mod(v - lo, n) < mod(hi - lo, n); }

// v strictly inside the cyclic interval (lo, hi).
bool inside_cyclic(int v, int lo, int hi, int n) {
  int d = mod(v - lo, n);
  return d > 0 && d < mod(hi - lo, n);
}

class PermCodec {
 public:
  explicit PermCodec(int n) : n_(n) {
    fact_[0] = 1;
    for (int k = 1; k <= n; ++k) fact_[k] = fact_[k - 1] * k;
  }
  std::uint64_t count() const { return fact_[n_]; }

  void unrank(std::uint64_t idx, int* out) const {
    std::array<int, 16> pool{};
    std::iota(pool.begin(), pool.begin() + n_, 0);
    int left = n_;
    for (int i = 0; i < n_; ++i) {
      std::uint64_t f = fact_[n_ - 1 - i];
      int k = static_cast<int>(idx / f);
      idx %= f;
      out[i] = pool[k];
      std::copy(pool.begin() + k + 1, pool.begin() + left, pool.begin() + k);
      --left;
    }
  }

  std::uint64_t rank(const int* p) const {
    std::uint64_t r = 0;
    for (int i = 0; i < n_; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < n_; ++j) smaller += p[j] < p[i];
      r += smaller * fact_[n_ - 1 - i];
    }
    return r;
  }

 private:
  int n_;
  std::array<std::uint64_t, 16> fact_{};
};

struct GradingTables {
  int n;
  const std::vector<int>& x;
  const std::vector<int>& o;
  int oo;
  int xx;

  static int self_pairs(const std::vector<int>& p) {
    int c = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] < p[j];
    }
    return c;
  }

  explicit GradingTables(const GridDiagram& g)
      : n(static_cast<int>(g.size())), x(g.x()), o(g.o()), oo(self_pairs(g.o())),
        xx(self_pairs(g.x())) {}

  // M relative to the marking set m: I(s,s) - I(s,m) - I(m,s) + I(m,m) + 1,
  // with states at lattice points and markings at cell centres.
  int maslov(const int* s, const std::vector<int>& m, int mm) const {
    int ss = 0;
    int sm = 0;
    int ms = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) ss += s[i] < s[j];
      for (int k = 0; k < n; ++k) {
        if (i <= k && s[i] <= m[k]) ++sm;
        if (k < i && m[k] < s[i]) ++ms;
      }
    }
    return ss - sm - ms + mm + 1;
  }

  std::pair<int, int> gradings(const int* s) const {
    int mo = maslov(s, o, oo);
    int mx = maslov(s, x, xx);
    int twice = mo - mx - (n - 1);
    if (twice % 2 != 0) throw InputError("grid does not encode a knot: half-integral Alexander");
    return {mo, twice / 2};
  }
};

// Calls emit(target_state) for every empty rectangle with no O from s.
// The target is s with columns a and b swapped.
template <class Emit>
void for_each_rectangle(const GridDiagram& g, const int* s, Emit emit) {
  const int n = static_cast<int>(g.size());
  const auto& x = g.x();
  const auto& o = g.o();
  std::array<int, 16> t{};
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const int lo = s[a];
      const int hi = s[b];
      bool ok = true;
      for (int c = mod(a + 1, n); c != b && ok; c = mod(c + 1, n)) {
        if (inside_cyclic(s[c], lo, hi, n)) ok = false;
      }
      int xs = 0;
      for (int c = a; c != b && ok; c = mod(c + 1, n)) {
        if (in_cyclic(o[c], lo, hi, n)) ok = false;
        if (in_cyclic(x[c], lo, hi, n)) ++xs;
      }
      if (!ok) continue;
      std::copy(s, s + n, t.begin());
      std::swap(t[a], t[b]);
      emit(t.data(), xs);
    }
  }
}

void require_knot(const GridDiagram& g) {
  std::size_t c = g.components();
  if (c != 1) {
    throw InputError("grid encodes a link with " + std::to_string(c) +
                     " components; a knot is required");
  }
}

std::string state_id(const int* s, int n) {
  std::string id;
  for (int i = 0; i < n; ++i) id += static_cast<char>('0' + s[i]);
  return id;
}

std::vector<Index> cancel_pairs(std::vector<Index> v) {
  std::sort(v.begin(), v.end());
  std::vector<Index> out;
  for (std::size_t k = 0; k < v.size();) {
    std::size_t run = k;
    while (run < v.size() && v[run] == v[k]) ++run;
    if ((run - k) % 2 == 1) out.push_back(v[k]);
    k = run;
  }
  return out;
}

using Poly = std::map<long long, long long>;

// Q with (1 + u^-1)^power * Q = P, coefficients nonnegative.
Poly divide_one_plus_inverse(Poly p, std::size_t power) {
  for (std::size_t step = 0; step < power; ++step) {
    if (p.empty()) throw CheckFailure("division by W leaves a remainder");
    const long long dmin = p.begin()->first;
    const long long dmax = p.rbegin()->first;
    Poly q;
    long long above = 0;
    for (long long d = dmax; d > dmin; --d) {
      long long coef = (p.count(d) ? p.at(d) : 0) - above;
      if (coef < 0) throw CheckFailure("division by W produces a negative rank");
      if (coef) q[d] = coef;
      above = coef;
    }
    if (p.at(dmin) != above) throw CheckFailure("division by W leaves a remainder");
    p = std::move(q);
  }
  return p;
}

}  // namespace

GridDiagram::GridDiagram(std::vector<int> x, std::vector<int> o) : x_(std::move(x)), o_(std::move(o)) {
  if (x_.size() != o_.size()) throw InputError("X and O rows have different lengths");
  if (x_.size() < 2) throw InputError("grid size must be at least 2");
  if (x_.size() > 15) throw InputError("grid size must be at most 15");
  check_permutation(x_, "X");
  check_permutation(o_, "O");
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (x_[i] == o_[i]) {
      throw InputError("column " + std::to_string(i) + " has X and O in the same cell");
    }
  }
}

std::size_t GridDiagram::components() const {
  const std::size_t n = size();
  std::vector<int> o_inv(n);
  for (std::size_t i = 0; i < n; ++i) o_inv[o_[i]] = static_cast<int>(i);
  std::vector<bool> seen(n, false);
  std::size_t cycles = 0;
  for (std::size_t r = 0; r < n; ++r) {
    if (seen[r]) continue;
    ++cycles;
    for (std::size_t v = r; !seen[v]; v = static_cast<std::size_t>(x_[o_inv[v]])) seen[v] = true;
  }
  return cycles;
}

std::vector<Crossing> crossings(const GridDiagram& g) {
  const int n = static_cast<int>(g.size());
  std::vector<int> x_inv(n);
  std::vector<int> o_inv(n);
  for (int i = 0; i < n; ++i) {
    x_inv[g.x()[i]] = i;
    o_inv[g.o()[i]] = i;
  }
  // Vertical strands run X -> O, horizontal strands O -> X.
  std::vector<Crossing> out;
  for (int c = 0; c < n; ++c) {
    int v_lo = std::min(g.x()[c], g.o()[c]);
    int v_hi = std::max(g.x()[c], g.o()[c]);
    int over_y = g.o()[c] > g.x()[c] ? 1 : -1;
    for (int r = v_lo + 1; r < v_hi; ++r) {
      int h_lo = std::min(x_inv[r], o_inv[r]);
      int h_hi = std::max(x_inv[r], o_inv[r]);
      if (c <= h_lo || c >= h_hi) continue;
      int under_x = x_inv[r] > o_inv[r] ? 1 : -1;
      // sign of over x under, with over = (0, over_y) and under = (under_x, 0)
      out.push_back({c, r, -over_y * under_x});
    }
  }
  return out;
}

int writhe(const GridDiagram& g) {
  int w = 0;
  for (const auto& c : crossings(g)) w += c.sign;
  return w;
}

GridDiagram mirror(const GridDiagram& g) {
  std::vector<int> x(g.x().rbegin(), g.x().rend());
  std::vector<int> o(g.o().rbegin(), g.o().rend());
  return GridDiagram(std::move(x), std::move(o));
}

GridDiagram torus_knot_grid(int p, int q) {
  if (p < 1) throw InputError("p must be at least 1");
  if (q == 0) throw InputError("q must be nonzero");
  if (std::gcd(p, std::abs(q)) != 1) {
    throw InputError("p and q must be coprime, got gcd " + std::to_string(std::gcd(p, std::abs(q))));
  }
  const int n = p + std::abs(q);
  std::vector<int> x(n);
  std::vector<int> o(n);
  for (int i = 0; i < n; ++i) {
    x[i] = i;
    o[i] = (i + p) % n;
  }
  GridDiagram g(std::move(x), std::move(o));
  // This layout draws the negative torus knot under the crossing convention.
  return q > 0 ? mirror(g) : g;
}

GridDiagram cyclic_shift_columns(const GridDiagram& g, int k) {
  const int n = static_cast<int>(g.size());
  std::vector<int> x(n);
  std::vector<int> o(n);
  for (int i = 0; i < n; ++i) {
    x[mod(i + k, n)] = g.x()[i];
    o[mod(i + k, n)] = g.o()[i];
  }
  return GridDiagram(std::move(x), std::move(o));
}

GridDiagram cyclic_shift_rows(const GridDiagram& g, int k) {
  const int n = static_cast<int>(g.size());
  std::vector<int> x(n);
  std::vector<int> o(n);
  for (int i = 0; i < n; ++i) {
    x[i] = mod(g.x()[i] + k, n);
    o[i] = mod(g.o()[i] + k, n);
  }
  return GridDiagram(std::move(x), std::move(o));
}

bool can_commute_columns(const GridDiagram& g, std::size_t i) {
  const std::size_t n = g.size();
  const std::size_t j = (i + 1) % n;
  int a_lo = std::min(g.x()[i], g.o()[i]);
  int a_hi = std::max(g.x()[i], g.o()[i]);
  int b_lo = std::min(g.x()[j], g.o()[j]);
  int b_hi = std::max(g.x()[j], g.o()[j]);
  if (a_lo == b_lo || a_lo == b_hi || a_hi == b_lo || a_hi == b_hi) return false;
  bool disjoint = a_hi < b_lo || b_hi < a_lo;
  bool nested = (a_lo < b_lo && b_hi < a_hi) || (b_lo < a_lo && a_hi < b_hi);
  return disjoint || nested;
}

GridDiagram commute_columns(const GridDiagram& g, std::size_t i) {
  if (i >= g.size()) throw InputError("column index out of range");
  if (!can_commute_columns(g, i)) {
    throw InputError("columns " + std::to_string(i) + " and " + std::to_string((i + 1) % g.size()) +
                     " interleave; commutation not allowed");
  }
  std::vector<int> x = g.x();
  std::vector<int> o = g.o();
  std::size_t j = (i + 1) % g.size();
  std::swap(x[i], x[j]);
  std::swap(o[i], o[j]);
  return GridDiagram(std::move(x), std::move(o));
}

GridDiagram stabilize(const GridDiagram& g, std::size_t column, bool o_right, bool o_up) {
  const int n = static_cast<int>(g.size());
  if (column >= g.size()) throw InputError("column index out of range");
  const int c = static_cast<int>(column);
  const int r = g.x()[c];
  auto colmap = [c](int k) { return k < c ? k : k + 1; };
  auto rowmap = [r](int s) { return s < r ? s : s + 1; };
  const int a = o_right ? c + 1 : c;
  const int a_bar = o_right ? c : c + 1;
  const int b = o_up ? r + 1 : r;
  const int b_bar = o_up ? r : r + 1;
  std::vector<int> x(n + 1);
  std::vector<int> o(n + 1);
  for (int k = 0; k < n; ++k) {
    if (k == c) continue;
    x[colmap(k)] = rowmap(g.x()[k]);
    o[colmap(k)] = g.o()[k] == r ? b : rowmap(g.o()[k]);
  }
  x[a] = b_bar;
  o[a] = rowmap(g.o()[c]);
  x[a_bar] = b;
  o[a_bar] = b_bar;
  return GridDiagram(std::move(x), std::move(o));
}

std::pair<int, int> grid_gradings(const GridDiagram& g, const std::vector<int>& perm) {
  if (perm.size() != g.size()) throw InputError("state length does not match grid size");
  check_permutation(perm, "state");
  return GradingTables(g).gradings(perm.data());
}

FilteredComplex compile(const GridDiagram& g) {
  require_knot(g);
  const int n = static_cast<int>(g.size());
  if (g.size() > kMaxCompileSize) {
    throw InputError("grid size " + std::to_string(n) + " exceeds the compile cap of " +
                     std::to_string(kMaxCompileSize) +
                     ": the stored complex would hold n! generators and their rectangles; "
                     "grid_tau streams up to size " + std::to_string(kMaxTauSize));
  }
  PermCodec codec(n);
  const std::uint64_t total = codec.count();
  GradingTables tables(g);
  std::vector<Generator> gens(total);
  std::vector<std::vector<Index>> diff(total);
  const std::size_t threads = thread_count();
  parallel_chunks(total, threads, [&](std::size_t begin, std::size_t end, std::size_t) {
    std::array<int, 16> s{};
    for (std::size_t idx = begin; idx < end; ++idx) {
      codec.unrank(idx, s.data());
      auto [m, a] = tables.gradings(s.data());
      gens[idx] = {state_id(s.data(), n), Rational(m), Rational(a), "0"};
      std::vector<Index> targets;
      for_each_rectangle(g, s.data(), [&](const int* t, int) {
        targets.push_back(static_cast<Index>(codec.rank(t)));
      });
      diff[idx] = cancel_pairs(std::move(targets));
    }
  });
  return FilteredComplex(std::move(gens), std::move(diff));
}

Rational grid_tau(const GridDiagram& g) {
  require_knot(g);
  const int n = static_cast<int>(g.size());
  if (g.size() > kMaxTauSize) {
    throw InputError("grid size " + std::to_string(n) + " exceeds the cap of " +
                     std::to_string(kMaxTauSize) + " (n! generators must be enumerated)");
  }
  PermCodec codec(n);
  const std::uint64_t total = codec.count();
  GradingTables tables(g);
  const std::size_t threads = thread_count();

  std::vector<std::int16_t> maslov(total);
  std::vector<std::int16_t> alexander(total);
  parallel_chunks(total, threads, [&](std::size_t begin, std::size_t end, std::size_t) {
    std::array<int, 16> s{};
    for (std::size_t idx = begin; idx < end; ++idx) {
      codec.unrank(idx, s.data());
      auto [m, a] = tables.gradings(s.data());
      maslov[idx] = static_cast<std::int16_t>(m);
      alexander[idx] = static_cast<std::int16_t>(a);
    }
  });

  // Local indices inside each Maslov level of the window.
  std::vector<std::int32_t> local(total, -1);
  std::array<std::vector<std::uint64_t>, 3> level;  // Maslov -1, 0, 1
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    int m = maslov[idx];
    if (m < -1 || m > 1) continue;
    auto& members = level[m + 1];
    local[idx] = static_cast<std::int32_t>(members.size());
    members.push_back(idx);
  }

  auto boundary_block = [&](const std::vector<std::uint64_t>& sources, std::size_t rows) {
    std::vector<std::vector<Index>> cols(sources.size());
    parallel_chunks(sources.size(), threads, [&](std::size_t begin, std::size_t end, std::size_t) {
      std::array<int, 16> s{};
      for (std::size_t k = begin; k < end; ++k) {
        codec.unrank(sources[k], s.data());
        std::vector<Index> targets;
        for_each_rectangle(g, s.data(), [&](const int* t, int) {
          targets.push_back(static_cast<Index>(local[codec.rank(t)]));
        });
        cols[k] = cancel_pairs(std::move(targets));
      }
    });
    return SparseMatrixGF2(rows, std::move(cols));
  };

  // Persistence pairing in one total order of the Maslov-0 generators:
  // descending Alexander, so position 0 enters the filtration last.
  const std::size_t n0 = level[1].size();
  std::vector<std::uint32_t> order(n0);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return alexander[level[1][a]] > alexander[level[1][b]];
  });
  std::vector<Index> position(n0);
  for (std::size_t p = 0; p < n0; ++p) position[order[p]] = static_cast<Index>(p);

  // Rows of d1 by position; a pivot row is a Maslov-0 generator that kills a class.
  SparseMatrixGF2 d1 = boundary_block(level[2], n0);
  std::vector<std::vector<Index>> d1_cols(d1.cols());
  for (std::size_t j = 0; j < d1.cols(); ++j) {
    for (Index r : d1.column(j)) d1_cols[j].push_back(position[r]);
    std::sort(d1_cols[j].begin(), d1_cols[j].end());
  }
  EchelonForm deaths(SparseMatrixGF2(n0, std::move(d1_cols)));
  std::vector<bool> paired(n0, false);
  for (Index c : deaths.pivot_columns()) paired[deaths.reduced_column(c).support().front()] = true;

  // Columns of d0 in filtration order; a column that reduces to zero gives birth.
  SparseMatrixGF2 d0 = boundary_block(level[1], level[0].size());
  std::vector<std::vector<Index>> d0_cols(n0);
  for (std::size_t k = 0; k < n0; ++k) d0_cols[k] = d0.column(order[n0 - 1 - k]);
  EchelonForm births(SparseMatrixGF2(level[0].size(), std::move(d0_cols)));
  for (const auto& z : births.kernel()) {
    const std::size_t p = n0 - 1 - z.support().back();
    if (!paired[p]) return Rational(alexander[level[1][order[p]]]);
  }
  throw CheckFailure("no nonzero homology class in Maslov grading 0");
}

BigradedRanks tilde_knot_floer_ranks(const GridDiagram& g) {
  BigradedRanks out;
  for (const auto& [key, r] : associated_graded_ranks(compile(g))) {
    out[{std::get<1>(key), std::get<2>(key)}] += r;
  }
  return out;
}

BigradedRanks divide_out_w(const BigradedRanks& tilde, std::size_t power) {
  // W shifts both gradings by -1, so each line M - A = const divides separately.
  std::map<long long, Poly> lines;
  for (const auto& [key, r] : tilde) {
    const auto& [m, a] = key;
    if (!is_integer(m) || !is_integer(a)) throw CheckFailure("non-integral knot grading");
    long long mi = to_int64(m, "maslov");
    long long ai = to_int64(a, "alexander");
    lines[mi - ai][ai] += static_cast<long long>(r);
  }
  BigradedRanks out;
  for (const auto& [delta, poly] : lines) {
    for (const auto& [ai, r] : divide_one_plus_inverse(poly, power)) {
      out[{Rational(ai + delta), Rational(ai)}] = static_cast<std::size_t>(r);
    }
  }
  return out;
}

std::map<Rational, std::size_t> divide_out_w(const std::map<Rational, std::size_t>& ranks,
                                             std::size_t power) {
  Poly p;
  for (const auto& [m, r] : ranks) p[to_int64(m, "maslov")] += static_cast<long long>(r);
  std::map<Rational, std::size_t> out;
  for (const auto& [m, r] : divide_one_plus_inverse(p, power)) {
    out[Rational(m)] = static_cast<std::size_t>(r);
  }
  return out;
}

BigradedRanks hat_knot_floer_ranks(const GridDiagram& g) {
  return divide_out_w(tilde_knot_floer_ranks(g), g.size() - 1);
}

GridDiagram parse_grid(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<int>> rows;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        row.push_back(v);
      } catch (const std::exception&) {
        throw InputError("grid line " + std::to_string(line_no) + ": '" + tok +
                         "' is not an integer");
      }
    }
    if (row.empty()) continue;
    if (rows.size() == 2) {
      throw InputError("grid line " + std::to_string(line_no) + ": expected exactly two rows");
    }
    rows.push_back(std::move(row));
  }
  if (rows.size() != 2) throw InputError("grid file must contain two rows (X then O)");
  return GridDiagram(rows[0], rows[1]);
}

std::string format_grid(const GridDiagram& g) {
  std::ostringstream os;
  for (const auto* row : {&g.x(), &g.o()}) {
    for (std::size_t i = 0; i < row->size(); ++i) os << (i ? " " : "") << (*row)[i];
    os << "\n";
  }
  return os.str();
}

}  // namespace ratslice
