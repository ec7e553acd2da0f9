#include "gspin/span.hpp"

#include <algorithm>

namespace gspin {

SpanBasis::SpanBasis(FieldContextPtr context) : context_(std::move(context)) {}

namespace {

Key pivot_of(const FieldElement& row) { return row.terms().front().first; }

}  // namespace

FieldElement SpanBasis::reduce(const FieldElement& v) const {
  require_same_context(*context_, *v.context());
  // A reduced row vanishes at every other pivot, so subtracting it never
  // creates a pivot term: one pass over v's own pivot terms is enough.
  TermAccumulator acc;
  for (const auto& [k, c] : v.terms()) acc.add(k, c);
  for (const auto& [k, c] : v.terms()) {
    auto it = std::lower_bound(rows_.begin(), rows_.end(), k,
                               [](const FieldElement& row, Key key) { return pivot_of(row) < key; });
    if (it == rows_.end() || pivot_of(*it) != k) continue;
    for (const auto& [rk, rc] : it->terms()) acc.add(rk, -c * rc);
  }
  return FieldElement::from_terms(context_, acc.take());
}

bool SpanBasis::insert(const FieldElement& v) {
  FieldElement r = reduce(v);
  if (r.is_zero()) return false;
  const Rational lead = r.terms().front().second;
  r *= Rational(1) / lead;
  const Key p = pivot_of(r);
  for (auto& row : rows_)
    if (const Rational* c = row.find(p)) {
      const Rational factor = *c;
      row -= factor * r;
    }
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), p,
                              [](const FieldElement& row, Key key) { return pivot_of(row) < key; });
  rows_.insert(pos, std::move(r));
  return true;
}

bool SpanBasis::contains(const FieldElement& v) const { return reduce(v).is_zero(); }

bool SpanBasis::is_subspace_of(const SpanBasis& other) const {
  return std::all_of(rows_.begin(), rows_.end(), [&](const FieldElement& row) { return other.contains(row); });
}

bool SpanBasis::operator==(const SpanBasis& other) const {
  return context_->same_as(*other.context_) && rows_ == other.rows_;
}

}  // namespace gspin
