#include "ratslice/complex.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "ratslice/error.hpp"

namespace ratslice {

namespace {

std::vector<std::vector<Index>> sorted_columns(std::vector<std::vector<Index>> columns) {
  for (auto& col : columns) {
    std::sort(col.begin(), col.end());
    if (std::adjacent_find(col.begin(), col.end()) != col.end()) {
      throw InputError("differential lists a target twice");
    }
  }
  return columns;
}

// Ranks of the homology of the blocks cut out by `key`, keeping only arrows
// accepted by `keep`. The complex must be valid, so kept arrows from a block
// land in a single block one Maslov step down.
template <class Key, class KeyFn, class KeepFn>
std::map<Key, std::size_t> block_homology(const FilteredComplex& c, KeyFn key, KeepFn keep) {
  const auto& gens = c.generators();
  std::map<Key, std::vector<Index>> blocks;
  std::vector<Index> local(c.size());
  for (Index i = 0; i < c.size(); ++i) {
    auto& members = blocks[key(gens[i])];
    local[i] = static_cast<Index>(members.size());
    members.push_back(i);
  }
  std::map<Key, std::size_t> incoming;
  std::map<Key, std::size_t> out_rank;
  for (const auto& [k, members] : blocks) {
    const std::vector<Index>* target = nullptr;
    std::optional<Key> target_key;
    std::vector<std::vector<Index>> cols;
    cols.reserve(members.size());
    for (Index i : members) {
      std::vector<Index> col;
      for (Index t : c.differential().column(i)) {
        if (!keep(gens[i], gens[t])) continue;
        if (!target) {
          target_key = key(gens[t]);
          target = &blocks.at(*target_key);
        }
        col.push_back(local[t]);
      }
      std::sort(col.begin(), col.end());
      cols.push_back(std::move(col));
    }
    std::size_t r = target ? rank(SparseMatrixGF2(target->size(), std::move(cols))) : 0;
    out_rank[k] = r;
    if (target_key) incoming[*target_key] += r;
  }
  std::map<Key, std::size_t> ranks;
  for (const auto& [k, members] : blocks) {
    std::size_t h = members.size() - out_rank[k] - incoming[k];
    if (h > 0) ranks[k] = h;
  }
  return ranks;
}

std::string class_id(std::uint64_t mask) {
  std::string id;
  for (std::size_t b = 0; b < 64; ++b) {
    if (mask >> b & 1) {
      if (!id.empty()) id += "+";
      id += "h" + std::to_string(b);
    }
  }
  return id;
}

}  // namespace

FilteredComplex::FilteredComplex(std::vector<Generator> generators,
                                 std::vector<std::vector<Index>> differential)
    : generators_(std::move(generators)) {
  if (differential.size() != generators_.size()) {
    throw InputError("differential has " + std::to_string(differential.size()) +
                     " entries for " + std::to_string(generators_.size()) + " generators");
  }
  for (Index i = 0; i < generators_.size(); ++i) {
    const auto& id = generators_[i].id;
    if (id.empty()) throw InputError("generator " + std::to_string(i) + " has an empty id");
    if (!lookup_.emplace(id, i).second) throw InputError("duplicate generator id '" + id + "'");
  }
  d_ = SparseMatrixGF2(generators_.size(), sorted_columns(std::move(differential)));
}

std::optional<Index> FilteredComplex::index_of(const std::string& id) const {
  auto it = lookup_.find(id);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::boundary_squared: return "boundary_squared";
    case Violation::Kind::maslov_drop: return "maslov_drop";
    case Violation::Kind::alexander_increase: return "alexander_increase";
    case Violation::Kind::spinc_change: return "spinc_change";
  }
  return "unknown";
}

std::string ValidationReport::summary() const {
  if (violations.empty()) return "valid";
  std::ostringstream os;
  os << violations.size() << " violation(s)";
  std::size_t shown = 0;
  for (const auto& v : violations) {
    if (shown++ == 5) {
      os << "; ...";
      break;
    }
    os << "; " << to_string(v.kind) << " " << v.source << " -> " << v.target;
    if (!v.detail.empty()) os << " (" << v.detail << ")";
  }
  return os.str();
}

ValidationReport validate(const FilteredComplex& c) {
  ValidationReport report;
  const auto& gens = c.generators();
  const auto& d = c.differential();
  for (Index i = 0; i < c.size(); ++i) {
    for (Index t : d.column(i)) {
      const auto& x = gens[i];
      const auto& y = gens[t];
      if (x.maslov - y.maslov != 1) {
        report.violations.push_back({Violation::Kind::maslov_drop, x.id, y.id,
                                     "M " + format_rational(x.maslov) + " -> " +
                                         format_rational(y.maslov)});
      }
      if (y.alexander > x.alexander) {
        report.violations.push_back({Violation::Kind::alexander_increase, x.id, y.id,
                                     "A " + format_rational(x.alexander) + " -> " +
                                         format_rational(y.alexander)});
      }
      if (x.spinc != y.spinc) {
        report.violations.push_back(
            {Violation::Kind::spinc_change, x.id, y.id, x.spinc + " -> " + y.spinc});
      }
    }
  }
  SparseMatrixGF2 dd = d.multiply(d);
  for (Index i = 0; i < c.size(); ++i) {
    for (Index t : dd.column(i)) {
      report.violations.push_back(
          {Violation::Kind::boundary_squared, gens[i].id, gens[t].id, "d^2 nonzero"});
    }
  }
  return report;
}

void require_valid(const FilteredComplex& c) {
  auto report = validate(c);
  if (!report.ok()) throw CheckFailure("invalid complex: " + report.summary());
}

std::map<HomologyKey, std::size_t> homology_ranks(const FilteredComplex& c) {
  require_valid(c);
  return block_homology<HomologyKey>(
      c, [](const Generator& g) { return HomologyKey{g.spinc, g.maslov}; },
      [](const Generator&, const Generator&) { return true; });
}

std::map<BigradedKey, std::size_t> associated_graded_ranks(const FilteredComplex& c) {
  require_valid(c);
  return block_homology<BigradedKey>(
      c, [](const Generator& g) { return BigradedKey{g.spinc, g.maslov, g.alexander}; },
      [](const Generator& x, const Generator& y) { return x.alexander == y.alexander; });
}

std::vector<FloerClass> homology_basis(const FilteredComplex& c) {
  const auto& d = c.differential();
  EchelonForm ech(d);
  const auto& kernel = ech.kernel();
  std::vector<std::vector<Index>> cols = d.columns();
  for (const auto& k : kernel) cols.push_back(k.support());
  EchelonForm extended(SparseMatrixGF2(c.size(), std::move(cols)));
  std::vector<FloerClass> basis;
  for (Index j : extended.pivot_columns()) {
    if (j < c.size()) continue;
    const VectorGF2& rep = kernel[j - c.size()];
    std::string spinc = c.generator(rep.support().front()).spinc;
    for (Index g : rep.support()) {
      if (c.generator(g).spinc != spinc) {
        spinc.clear();
        break;
      }
    }
    basis.push_back({rep, spinc});
  }
  return basis;
}

namespace {

void require_nonzero_class(const FilteredComplex& c, const FloerClass& alpha) {
  const auto& a = alpha.representative;
  if (a.length() != c.size()) {
    throw InputError("class representative has length " + std::to_string(a.length()) +
                     ", complex has " + std::to_string(c.size()) + " generators");
  }
  if (!c.differential().apply(a).is_zero()) throw InputError("representative is not a cycle");
  if (in_image(c.differential(), a)) throw InputError("class is zero in homology");
}

}  // namespace

Rational tau(const FilteredComplex& c, const FloerClass& alpha) {
  require_valid(c);
  require_nonzero_class(c, alpha);
  const auto& gens = c.generators();
  std::vector<Rational> levels;
  for (const auto& g : gens) levels.push_back(g.alexander);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  for (const Rational& j : levels) {
    // Project onto generators strictly above level j.
    std::vector<Index> above(c.size(), static_cast<Index>(-1));
    Index count = 0;
    for (Index i = 0; i < c.size(); ++i) {
      if (gens[i].alexander > j) above[i] = count++;
    }
    if (count == 0) return j;
    std::vector<std::vector<Index>> cols;
    for (Index i = 0; i < c.size(); ++i) {
      std::vector<Index> col;
      for (Index t : c.differential().column(i)) {
        if (above[t] != static_cast<Index>(-1)) col.push_back(above[t]);
      }
      cols.push_back(std::move(col));
    }
    std::vector<Index> v;
    for (Index i : alpha.representative.support()) {
      if (above[i] != static_cast<Index>(-1)) v.push_back(above[i]);
    }
    if (in_image(SparseMatrixGF2(count, std::move(cols)), VectorGF2(count, std::move(v)))) {
      return j;
    }
  }
  return levels.back();
}

FiltrationReducer::FiltrationReducer(const FilteredComplex& c)
    : FiltrationReducer(c.differential(), [&c] {
        std::vector<Rational> a;
        for (const auto& g : c.generators()) a.push_back(g.alexander);
        return a;
      }()) {}

FiltrationReducer::FiltrationReducer(const SparseMatrixGF2& differential,
                                     std::vector<Rational> alexander)
    : alexander_(std::move(alexander)) {
  const std::size_t n = alexander_.size();
  if (differential.rows() != n) throw InputError("differential does not match gradings");
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(),
                   [this](Index a, Index b) { return alexander_[a] > alexander_[b]; });
  position_.resize(n);
  for (Index p = 0; p < n; ++p) position_[order_[p]] = p;
  std::vector<std::vector<Index>> cols;
  cols.reserve(differential.cols());
  for (const auto& col : differential.columns()) {
    std::vector<Index> mapped;
    mapped.reserve(col.size());
    for (Index r : col) mapped.push_back(position_[r]);
    std::sort(mapped.begin(), mapped.end());
    cols.push_back(std::move(mapped));
  }
  permuted_ = SparseMatrixGF2(n, std::move(cols));
  echelon_.emplace(permuted_);
}

VectorGF2 FiltrationReducer::to_positions(const VectorGF2& v) const {
  if (v.length() != alexander_.size()) throw InputError("cycle length mismatch");
  std::vector<Index> s;
  s.reserve(v.support().size());
  for (Index i : v.support()) s.push_back(position_[i]);
  std::sort(s.begin(), s.end());
  return VectorGF2(alexander_.size(), std::move(s));
}

std::optional<Rational> FiltrationReducer::try_level(const VectorGF2& cycle) const {
  auto r = echelon_->reduce(to_positions(cycle));
  if (r.residual.is_zero()) return std::nullopt;
  return alexander_[order_[r.residual.support().front()]];
}

Rational FiltrationReducer::level(const VectorGF2& cycle) const {
  auto t = try_level(cycle);
  if (!t) throw InputError("class is zero in homology");
  return *t;
}

std::vector<Rational> FiltrationReducer::adapted_levels(const std::vector<VectorGF2>& basis) const {
  std::vector<std::vector<Index>> cols = permuted_.columns();
  const std::size_t offset = cols.size();
  for (const auto& b : basis) cols.push_back(to_positions(b).support());
  EchelonForm ext(SparseMatrixGF2(alexander_.size(), std::move(cols)));
  std::vector<Rational> levels;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    VectorGF2 red = ext.reduced_column(static_cast<Index>(offset + j));
    if (red.is_zero()) throw InputError("classes are linearly dependent in homology");
    levels.push_back(alexander_[order_[red.support().front()]]);
  }
  return levels;
}

void validate_spectrum(const TauSpectrum& s) {
  if (s.taus.empty()) throw InputError("tau spectrum lists no classes");
  if (s.tau_max < s.tau_min) throw InputError("tau_max is below tau_min");
  Rational lo = s.taus.begin()->second;
  Rational hi = lo;
  for (const auto& [id, t] : s.taus) {
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  if (lo < s.tau_min || hi > s.tau_max) {
    throw InputError("a listed tau lies outside [tau_min, tau_max]");
  }
  if (s.enumeration_complete && (lo != s.tau_min || hi != s.tau_max)) {
    throw InputError("complete enumeration disagrees with tau_min/tau_max");
  }
}

TauSpectrum tau_spectrum(const FilteredComplex& c, std::size_t limit) {
  require_valid(c);
  auto basis = homology_basis(c);
  if (basis.empty()) throw InputError("homology is zero; no classes to grade");
  limit = std::min<std::size_t>(limit, 62);
  FiltrationReducer reducer(c);
  std::vector<VectorGF2> reps;
  for (const auto& b : basis) reps.push_back(b.representative);
  auto levels = reducer.adapted_levels(reps);

  TauSpectrum s;
  s.tau_max = *std::max_element(levels.begin(), levels.end());
  s.tau_min = *std::min_element(levels.begin(), levels.end());
  const std::size_t r = reps.size();
  if (r <= limit) {
    VectorGF2 acc(c.size());
    const std::uint64_t total = std::uint64_t{1} << r;
    for (std::uint64_t k = 1; k < total; ++k) {
      acc += reps[std::countr_zero(k)];
      s.taus.emplace(class_id(k ^ (k >> 1)), reducer.level(acc));
    }
    s.enumeration_complete = true;
  } else {
    for (std::size_t i = 0; i < r; ++i) {
      s.taus["h" + std::to_string(i)] = reducer.level(reps[i]);
    }
    s.enumeration_complete = false;
  }
  validate_spectrum(s);
  return s;
}

TauSpectrum connected_sum_shift(const TauSpectrum& s, const Rational& tau_knot) {
  TauSpectrum out = s;
  for (auto& [id, t] : out.taus) t += tau_knot;
  out.tau_max += tau_knot;
  out.tau_min += tau_knot;
  return out;
}

}  // namespace ratslice
