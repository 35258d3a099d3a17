#include "galg/squarefree.hpp"

#include <algorithm>
#include <sstream>

#include "galg/errors.hpp"
#include "galg/graph_algorithms.hpp"

namespace galg {

namespace {

// Tree ambients up to this many edges precompute a slim-subset table.
constexpr std::size_t kSlimTableEdges = 22;

bool support_less(EdgeSubset a, EdgeSubset b) { return a.bits < b.bits; }

}  // namespace

Ambient::Ambient(AmbientKind kind, Multigraph g) : kind_(kind), graph_(std::move(g)) {
  if (kind_ == AmbientKind::tree) {
    if (!graph_.is_connected()) throw InvalidInput("tree algebra requires connected graph");
    if (graph_.edge_count() <= kSlimTableEdges) {
      const std::uint64_t count = std::uint64_t{1} << graph_.edge_count();
      slim_.resize(count);
      const EdgeSubset all = graph_.all_edges();
      for (std::uint64_t s = 0; s < count; ++s) {
        slim_[s] = spans_connected(graph_, all - EdgeSubset{s});
      }
    }
  }
}

std::shared_ptr<const Ambient> Ambient::full(Multigraph g) {
  return std::shared_ptr<const Ambient>(new Ambient(AmbientKind::full, std::move(g)));
}

std::shared_ptr<const Ambient> Ambient::tree(Multigraph g) {
  return std::shared_ptr<const Ambient>(new Ambient(AmbientKind::tree, std::move(g)));
}

std::shared_ptr<const Ambient> Ambient::make(AmbientKind kind, Multigraph g) {
  return kind == AmbientKind::full ? full(std::move(g)) : tree(std::move(g));
}

bool Ambient::admits(EdgeSubset support) const {
  if (!support.is_subset_of(graph_.all_edges())) return false;
  if (kind_ == AmbientKind::full) return true;
  if (!slim_.empty()) return slim_[support.bits];
  return spans_connected(graph_, graph_.all_edges() - support);
}

std::size_t Ambient::dimension() const {
  if (kind_ == AmbientKind::full) return std::size_t{1} << graph_.edge_count();
  if (!slim_.empty()) return static_cast<std::size_t>(std::count(slim_.begin(), slim_.end(), true));
  std::size_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << graph_.edge_count();
  for (std::uint64_t s = 0; s < total; ++s) count += admits(EdgeSubset{s});
  return count;
}

bool Ambient::same_as(const Ambient& other) const {
  return this == &other || (kind_ == other.kind_ && graph_ == other.graph_);
}

AlgebraElement::AlgebraElement(AmbientPtr ambient) : ambient_(std::move(ambient)) {
  if (!ambient_) throw InvalidInput("element needs an ambient algebra");
}

AlgebraElement AlgebraElement::constant(AmbientPtr ambient, const Rational& c) {
  AlgebraElement a(std::move(ambient));
  if (c != 0) a.terms_.emplace_back(EdgeSubset{}, c);
  return a;
}

AlgebraElement AlgebraElement::monomial(AmbientPtr ambient, EdgeSubset support, const Rational& c) {
  if (!support.is_subset_of(ambient->graph().all_edges())) {
    throw InvalidInput("monomial support outside the edge set");
  }
  AlgebraElement a(std::move(ambient));
  if (c != 0 && a.ambient_->admits(support)) a.terms_.emplace_back(support, c);
  return a;
}

AlgebraElement AlgebraElement::from_terms(AmbientPtr ambient, std::vector<Term> terms) {
  AlgebraElement a(std::move(ambient));
  const EdgeSubset all = a.ambient_->graph().all_edges();
  for (const auto& [s, c] : terms) {
    if (!s.is_subset_of(all)) throw InvalidInput("monomial support outside the edge set");
  }
  std::erase_if(terms, [&](const Term& t) { return !a.ambient_->admits(t.first); });
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return support_less(x.first, y.first); });
  for (auto& t : terms) {
    if (!a.terms_.empty() && a.terms_.back().first == t.first) {
      a.terms_.back().second += t.second;
      if (a.terms_.back().second == 0) a.terms_.pop_back();
    } else if (t.second != 0) {
      a.terms_.push_back(std::move(t));
    }
  }
  return a;
}

Rational AlgebraElement::coefficient(EdgeSubset support) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), support,
                             [](const Term& t, EdgeSubset s) { return support_less(t.first, s); });
  if (it != terms_.end() && it->first == support) return it->second;
  return 0;
}

EdgeSubset AlgebraElement::support_degree1() const {
  EdgeSubset out;
  for (const auto& [s, c] : terms_) {
    if (s.size() == 1) out = out | s;
  }
  return out;
}

bool AlgebraElement::is_homogeneous(std::size_t degree) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.first.size() == degree; });
}

void AlgebraElement::require_same_ambient(const AlgebraElement& o) const {
  if (!ambient_->same_as(*o.ambient_)) throw InvalidInput("elements live in different ambient algebras");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  require_same_ambient(o);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && support_less(a->first, b->first))) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || support_less(b->first, a->first)) {
      merged.push_back(*b++);
    } else {
      Rational sum = a->second + b->second;
      if (sum != 0) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) { return *this += -o; }

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  a.require_same_ambient(b);
  AlgebraElement r(a.ambient_);
  if (a.is_zero() || b.is_zero()) return r;
  std::vector<AlgebraElement::Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  const Ambient& amb = *a.ambient_;
  for (const auto& [sa, ca] : a.terms_) {
    for (const auto& [sb, cb] : b.terms_) {
      if (sa.intersects(sb)) continue;
      const EdgeSubset s = sa | sb;
      if (!amb.admits(s)) continue;
      products.emplace_back(s, ca * cb);
    }
  }
  std::sort(products.begin(), products.end(),
            [](const auto& x, const auto& y) { return support_less(x.first, y.first); });
  for (auto& t : products) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      r.terms_.back().second += t.second;
    } else {
      if (!r.terms_.empty() && r.terms_.back().second == 0) r.terms_.pop_back();
      r.terms_.push_back(std::move(t));
    }
  }
  if (!r.terms_.empty() && r.terms_.back().second == 0) r.terms_.pop_back();
  return r;
}

AlgebraElement AlgebraElement::pow(std::size_t k) const {
  AlgebraElement result = one(ambient_);
  AlgebraElement base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

void AlgebraElement::add_term(EdgeSubset support, const Rational& c) {
  *this += monomial(ambient_, support, c);
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<std::vector<std::size_t>, const Rational*>> sorted;
  sorted.reserve(terms_.size());
  for (const auto& [s, c] : terms_) sorted.emplace_back(s.members(), &c);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::ostringstream out;
  bool first = true;
  for (const auto& [edges, c] : sorted) {
    if (!first) out << " + ";
    first = false;
    out << c->get_str() << " *";
    if (edges.empty()) out << " 1";
    else out << ' ';
    for (std::size_t e : edges) out << "φ_{" << e << '}';
  }
  return out.str();
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.ambient_->same_as(*b.ambient_) && a.terms_ == b.terms_;
}

AlgebraElement phi(const AmbientPtr& ambient, std::size_t e) {
  if (e >= ambient->edge_count()) {
    throw InvalidInput("edge index " + std::to_string(e) + " out of range");
  }
  return AlgebraElement::monomial(ambient, EdgeSubset::singleton(e));
}

}  // namespace galg
