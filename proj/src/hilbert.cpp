#include "galg/hilbert.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "galg/errors.hpp"
#include "galg/generators.hpp"
#include "galg/limits.hpp"

namespace galg {

HilbertSeries::HilbertSeries(std::vector<std::uint64_t> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::uint64_t HilbertSeries::total() const {
  std::uint64_t s = 0;
  for (auto c : coeffs_) s += c;
  return s;
}

std::string HilbertSeries::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (k == 0 || coeffs_[k] != 1) out << coeffs_[k];
    if (k >= 1) out << 't';
    if (k >= 2) out << '^' << k;
  }
  return out.str();
}

SpanBasis::SpanBasis(AmbientPtr ambient) : ambient_(std::move(ambient)) {}

AlgebraElement SpanBasis::reduce(const AlgebraElement& v) const {
  if (!v.ambient()->same_as(*ambient_)) throw InvalidInput("element lives in a different ambient");
  if (rows_.empty() || v.is_zero()) return v;
  std::map<std::uint64_t, Rational> work;
  for (const auto& [s, c] : v.terms()) work.emplace_hint(work.end(), s.bits, c);
  // Walk monomials upward; eliminating a pivot only creates larger monomials
  // because every row's pivot is its smallest monomial.
  auto it = work.begin();
  while (it != work.end()) {
    auto p = pivot_row_.find(it->first);
    if (p == pivot_row_.end()) {
      ++it;
      continue;
    }
    const Rational factor = it->second;
    const auto& row = rows_[p->second].terms();
    for (auto t = row.begin() + 1; t != row.end(); ++t) {
      auto [w, inserted] = work.try_emplace(t->first.bits, 0);
      w->second -= factor * t->second;
      if (w->second == 0) work.erase(w);
    }
    it = work.erase(it);
  }
  std::vector<AlgebraElement::Term> terms;
  terms.reserve(work.size());
  for (auto& [bits, c] : work) terms.emplace_back(EdgeSubset{bits}, std::move(c));
  return AlgebraElement::from_terms(ambient_, std::move(terms));
}

bool SpanBasis::insert(const AlgebraElement& v) {
  AlgebraElement r = reduce(v);
  if (r.is_zero()) return false;
  const Rational lead = r.terms().front().second;
  r *= Rational(1) / lead;
  pivot_row_.emplace(r.terms().front().first.bits, rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

namespace {

void require_common_ambient(std::span<const AlgebraElement> gens) {
  for (const auto& g : gens) {
    if (!g.ambient()->same_as(*gens.front().ambient())) {
      throw InvalidInput("generators live in different ambient algebras");
    }
  }
  require_rank_bound(gens.front().ambient()->edge_count());
}

// Multiplies every generator by each row of `frontier` and inserts the
// products into `basis`. Returns the rows that were added.
std::vector<AlgebraElement> extend(SpanBasis& basis, std::span<const AlgebraElement> gens,
                                   const std::vector<AlgebraElement>& frontier) {
  std::vector<AlgebraElement> added;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    for (const auto& r : frontier) {
      if (basis.insert(g * r)) added.push_back(basis.rows().back());
    }
  }
  return added;
}

}  // namespace

SeriesResult graded_series(std::span<const AlgebraElement> gens) {
  SeriesResult out;
  out.dimensions.push_back(1);
  if (!gens.empty()) {
    require_common_ambient(gens);
    for (const auto& g : gens) {
      if (!g.is_homogeneous(1)) throw InvalidInput("graded generators must be homogeneous of degree 1");
    }
    const AmbientPtr& ambient = gens.front().ambient();
    std::vector<AlgebraElement> previous{AlgebraElement::one(ambient)};
    while (true) {
      SpanBasis component(ambient);
      extend(component, gens, previous);
      if (component.size() == 0) break;
      out.dimensions.push_back(component.size());
      previous = component.rows();
    }
  }
  out.plateau_k = out.dimensions.size() - 1;
  out.series = HilbertSeries(std::vector<std::uint64_t>(out.dimensions.begin(), out.dimensions.end()));
  return out;
}

namespace {

// F_0 = constants and F_{k+1} = F_k + sum_g g F_k. Writing F_k = F_{k-1} + N_k
// for the rows N_k added at step k, g F_{k-1} already lies in F_k, so only
// g N_k has to be reduced. Since F_{k+1} = F_1 F_k, the first k with
// F_{k+1} = F_k ends the filtration.
SpanBasis run_filtration(const AmbientPtr& ambient, std::span<const AlgebraElement> gens,
                         std::vector<std::size_t>& dims) {
  SpanBasis basis(ambient);
  basis.insert(AlgebraElement::one(ambient));
  dims.assign(1, 1);
  std::vector<AlgebraElement> frontier = basis.rows();
  while (!gens.empty()) {
    frontier = extend(basis, gens, frontier);
    if (frontier.empty()) break;
    dims.push_back(basis.size());
  }
  return basis;
}

}  // namespace

SeriesResult filtered_series(std::span<const AlgebraElement> gens) {
  SeriesResult out;
  if (gens.empty()) {
    out.dimensions = {1};
    out.series = HilbertSeries({1});
    return out;
  }
  require_common_ambient(gens);
  run_filtration(gens.front().ambient(), gens, out.dimensions);
  std::vector<std::uint64_t> series;
  std::size_t prev = 0;
  for (std::size_t d : out.dimensions) {
    series.push_back(d - prev);
    prev = d;
  }
  out.plateau_k = out.dimensions.size() - 1;
  out.series = HilbertSeries(std::move(series));
  return out;
}

SpanBasis subalgebra_basis(const AmbientPtr& ambient, std::span<const AlgebraElement> gens) {
  for (const auto& g : gens) {
    if (!g.ambient()->same_as(*ambient)) throw InvalidInput("generator lives in a different ambient");
  }
  require_rank_bound(ambient->edge_count());
  std::vector<std::size_t> dims;
  return run_filtration(ambient, gens, dims);
}

UniPoly sample_admissible_poly(std::size_t degree, std::uint64_t seed, int bound) {
  if (bound < 1) throw InvalidInput("coefficient bound must be positive");
  degree = std::max<std::size_t>(degree, 1);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-bound, bound);
  auto nonzero = [&] {
    int c = 0;
    while (c == 0) c = dist(rng);
    return c;
  };
  std::vector<Rational> coeffs(degree + 1, 0);
  coeffs[1] = nonzero();
  for (std::size_t k = 2; k < degree; ++k) coeffs[k] = dist(rng);
  if (degree >= 2) coeffs[degree] = nonzero();
  return UniPoly(std::move(coeffs));
}

SeriesResult generic_series(const AmbientPtr& ambient, std::span<const std::uint64_t> seeds) {
  if (seeds.size() < 2) throw InvalidInput("generic series needs at least two seeds");
  require_rank_bound(ambient->edge_count());
  std::vector<SeriesResult> samples;
  for (std::uint64_t seed : seeds) {
    const UniPoly f = sample_admissible_poly(ambient->edge_count(), seed);
    const auto gens = f_generators(ambient, f);
    samples.push_back(filtered_series(gens));
  }
  bool consensus = std::all_of(samples.begin(), samples.end(),
                               [&](const SeriesResult& s) { return s.series == samples.front().series; });
  std::size_t pick = 0;
  if (!consensus) {
    // First sample that no other sample strictly majorizes.
    for (std::size_t i = 0; i < samples.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < samples.size() && !dominated; ++j) {
        dominated = majorize(samples[j].series, samples[i].series) == Majorization::greater;
      }
      if (!dominated) {
        pick = i;
        break;
      }
    }
  }
  SeriesResult out = samples[pick];
  out.consensus = consensus;
  return out;
}

Majorization majorize(const HilbertSeries& a, const HilbertSeries& b) {
  const std::size_t n = std::max(a.size(), b.size());
  std::uint64_t sa = 0, sb = 0;
  bool some_greater = false, some_less = false;
  for (std::size_t k = 0; k < n; ++k) {
    sa += a.coefficient(k);
    sb += b.coefficient(k);
    some_greater |= sa > sb;
    some_less |= sa < sb;
  }
  if (some_greater && some_less) return Majorization::incomparable;
  if (some_greater) return Majorization::greater;
  if (some_less) return Majorization::less;
  return Majorization::equal;
}

const char* to_string(Majorization m) {
  switch (m) {
    case Majorization::less: return "less";
    case Majorization::equal: return "equal";
    case Majorization::greater: return "greater";
    case Majorization::incomparable: return "incomparable";
  }
  return "?";
}

}  // namespace galg
