#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gspin/field_algebra.hpp"
#include "gspin/report.hpp"
#include "gspin/span.hpp"

namespace gspin {

/// v_h(x) = Σ_{k∈G} ρ_{kh⁻¹k⁻¹}(x−½) δ_k(x) ρ_{khk⁻¹}(x+½), h ∈ H.
/// Throws NotInH, or OutOfInterval unless x−½ and x+½ are links of Λ.
FieldElement make_v(const FieldContextPtr& ctx, Elem h, Pos x);
/// w_g(l) = Σ_{k∈G} δ_k(l−½) δ_{kg}(l+½).
/// Throws OutOfInterval unless l−½ and l+½ are sites of Λ.
FieldElement make_w(const FieldContextPtr& ctx, Elem g, Pos l);

/// The unital algebra generated by `generators`: the span of I closed under
/// right multiplication by each generator.
SpanBasis generated_subalgebra(const FieldContextPtr& ctx, const std::vector<FieldElement>& generators);
/// span{z_H(M) : M a basis monomial}.
SpanBasis expectation_image(const FieldContextPtr& ctx);

/// {v_h(x) : x a site of `obs`, h ∈ H} ∪ {w_g(l) : l a link of `obs`, g ∈ G}.
std::vector<FieldElement> observable_generators(const FieldContextPtr& ctx, const Interval& obs);

/// For Λ = [n−½, m] compares span z_H(F_H(Λ)) with the algebra generated by
/// the v/w generators placed in [n, m−½]. Throws IntervalShapeError for any
/// other shape.
CheckResult verify_invariant_subalgebra(const FieldContextPtr& ctx);

/// Pairs (u, u*) with a common rational weight c standing for the scalar
/// √c on both members.
struct QuasiFamily {
  std::string label;
  std::vector<std::pair<FieldElement, FieldElement>> pairs;
  Rational weight = 1;
};

/// u_{x,y} = δ_x(k) ρ_y(k+½), x ∈ G, y ∈ H, weight |G|.
QuasiFamily standard_family(const FieldContextPtr& ctx, Pos k);
/// δ_x(k) ρ_y(l+½), weight |G|.
QuasiFamily shifted_family(const FieldContextPtr& ctx, Pos k, Pos l);
/// Any family given by explicit (u, partner) pairs.
QuasiFamily custom_family(std::string label, std::vector<std::pair<FieldElement, FieldElement>> pairs,
                          Rational weight);

struct QuasiBasisResult {
  bool left_ok = true;
  bool right_ok = true;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  /// First basis monomial violating either identity, with the offending
  /// side ("left": c·Σ u z(u*a), "right": c·Σ z(au) u*) and its value.
  std::optional<Monomial> counterexample;
  std::string side;
  std::optional<FieldElement> lhs;

  bool passed() const noexcept { return left_ok && right_ok; }
};

/// c·Σ u z(u′a) and c·Σ z(au) u′ over the family's pairs (u, u′).
FieldElement quasi_left(const QuasiFamily& fam, const FieldElement& a);
FieldElement quasi_right(const QuasiFamily& fam, const FieldElement& a);

/// Both identities on every basis monomial of F_H(Λ).
QuasiBasisResult check_quasi_basis(const FieldContextPtr& ctx, const QuasiFamily& fam);

/// c·Σ u u′. Throws NotAQuasiBasis when `check` failed.
FieldElement compute_index(const QuasiFamily& fam, const QuasiBasisResult& check);
FieldElement compute_index(const FieldContextPtr& ctx, const QuasiFamily& fam);

/// The scalar c with f = c·I, if any.
std::optional<Rational> identity_multiple(const FieldElement& f);
/// f commutes with every basis monomial.
bool is_central(const FieldElement& f);

struct MonotonicityResult {
  std::size_t rank_small = 0;
  std::size_t rank_large = 0;
  bool included = false;
  bool strict = false;
};

/// Compares z_{H₁}(F_{H₁}(Λ)) ↪ F_{H₂}(Λ) with z_{H₂}(F_{H₂}(Λ)).
MonotonicityResult check_monotonicity(const SubgroupPtr& small, const SubgroupPtr& large, const Interval& iv,
                                      std::uint64_t cap = kDefaultMonomialCap);

}  // namespace gspin
