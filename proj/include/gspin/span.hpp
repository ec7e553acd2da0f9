#pragma once

#include <cstddef>
#include <vector>

#include "gspin/field_algebra.hpp"

namespace gspin {

/// Exact reduced row echelon basis of a subspace of F_H(Λ) in monomial
/// coordinates. Every row is monic at its pivot (its smallest key) and no
/// other row has a term at that pivot, so two spans are equal iff their row
/// lists are equal.
class SpanBasis {
 public:
  explicit SpanBasis(FieldContextPtr context);

  /// Returns true when `v` enlarged the span.
  bool insert(const FieldElement& v);
  bool contains(const FieldElement& v) const;
  /// Remainder of `v` after eliminating every pivot of the basis.
  FieldElement reduce(const FieldElement& v) const;

  std::size_t rank() const noexcept { return rows_.size(); }
  const FieldContextPtr& context() const noexcept { return context_; }
  /// Rows in ascending pivot order.
  const std::vector<FieldElement>& rows() const noexcept { return rows_; }
  bool is_subspace_of(const SpanBasis& other) const;
  bool operator==(const SpanBasis& other) const;

 private:
  FieldContextPtr context_;
  std::vector<FieldElement> rows_;
};

}  // namespace gspin
