#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "gspin/group.hpp"
#include "gspin/rational.hpp"
#include "gspin/report.hpp"

namespace gspin {

/// Basis vector (h, g) of D(H;G): h ∈ H, g ∈ G, both as G indices.
struct DoubleBasis {
  Elem h = 0;
  Elem g = 0;
  auto operator<=>(const DoubleBasis&) const = default;
};

nlohmann::json to_json(const DoubleBasis& b);

/// Finitely supported rational combination of basis pairs. Zero
/// coefficients are never stored, so == is structural equality.
class DoubleElement {
 public:
  using Terms = std::map<DoubleBasis, Rational>;

  explicit DoubleElement(SubgroupPtr context);
  /// Throws NotInH when h ∉ H.
  static DoubleElement basis(SubgroupPtr context, Elem h, Elem g, Rational coeff = 1);

  const SubgroupPtr& context() const noexcept { return context_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const DoubleBasis& b) const;

  void add(const DoubleBasis& b, const Rational& c);

  DoubleElement& operator+=(const DoubleElement& other);
  DoubleElement& operator-=(const DoubleElement& other);
  DoubleElement& operator*=(const Rational& c);
  friend DoubleElement operator+(DoubleElement a, const DoubleElement& b) { return a += b; }
  friend DoubleElement operator-(DoubleElement a, const DoubleElement& b) { return a -= b; }
  friend DoubleElement operator*(const Rational& c, DoubleElement a) { return a *= c; }
  bool operator==(const DoubleElement& other) const;

 private:
  SubgroupPtr context_;
  Terms terms_;
};

nlohmann::json to_json(const DoubleElement& a);

/// Element of the n-fold tensor power D(H;G)^{⊗n}.
class TensorElement {
 public:
  using Key = std::vector<DoubleBasis>;
  using Terms = std::map<Key, Rational>;

  TensorElement(SubgroupPtr context, std::size_t arity);

  const SubgroupPtr& context() const noexcept { return context_; }
  std::size_t arity() const noexcept { return arity_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(Key key, const Rational& c);
  TensorElement& operator+=(const TensorElement& other);
  bool operator==(const TensorElement& other) const;

 private:
  SubgroupPtr context_;
  std::size_t arity_;
  Terms terms_;
};

/// Structure constants on basis pairs; the product of two basis elements is
/// either zero or one basis element.
using BasisProduct = std::function<std::optional<DoubleBasis>(const Subgroup&, DoubleBasis, DoubleBasis)>;

/// (h₁,g₁)(h₂,g₂) = δ_{h₁g₁, g₁h₂} (h₁, g₁g₂)
std::optional<DoubleBasis> basis_product(const Subgroup& H, DoubleBasis a, DoubleBasis b);

DoubleElement multiply(const DoubleElement& a, const DoubleElement& b);
DoubleElement multiply_with(const BasisProduct& product, const DoubleElement& a, const DoubleElement& b);
inline DoubleElement operator*(const DoubleElement& a, const DoubleElement& b) { return multiply(a, b); }

/// Σ_{h∈H} (h, e)
DoubleElement unit(const SubgroupPtr& context);
/// (h,g)* = (g⁻¹hg, g⁻¹), conjugate-linear (scalars are rational, so linear here).
DoubleElement star(const DoubleElement& a);
/// Δ(h,g) = Σ_{t∈H} (t,g) ⊗ (t⁻¹h, g)
TensorElement coproduct(const DoubleElement& a);
/// ε(h,g) = δ_{h,e}
Rational counit(const DoubleElement& a);
/// S(h,g) = (g⁻¹h⁻¹g, g⁻¹)
DoubleElement antipode(const DoubleElement& a);
/// Δ⁽ⁿ⁾ by the closed form Σ_{t₁..tₙ∈H} (t₁,g)⊗(t₁⁻¹t₂,g)⊗…⊗(tₙ⁻¹h,g); n = 0 gives `a`.
TensorElement iterated_coproduct(const DoubleElement& a, std::size_t n);
/// z_H = (1/|G|) Σ_g (e,g)
DoubleElement cointegral(const SubgroupPtr& context);

/// Rank-one tensor a ⊗ b.
TensorElement tensor(const DoubleElement& a, const DoubleElement& b);
TensorElement as_tensor(const DoubleElement& a);
/// Factorwise product in the tensor power algebra.
TensorElement multiply(const TensorElement& x, const TensorElement& y,
                       const BasisProduct& product = basis_product);
/// Replaces factor `index` of every term by the tensor `f(basis)`, splicing
/// its factors in place: (id⊗…⊗f⊗…⊗id).
TensorElement expand_factor(const TensorElement& x, std::size_t index,
                            const std::function<TensorElement(const DoubleBasis&)>& f);
/// Multiplies the factors of every term in order, b₁b₂…bₙ, or bₙ…b₂b₁
/// when `reversed`.
DoubleElement contract(const TensorElement& x, const BasisProduct& product = basis_product,
                       bool reversed = false);

/// All |H|·|G| basis elements in canonical order.
std::vector<DoubleBasis> double_basis(const Subgroup& H);

/// Exhaustive verification over basis elements of ten identities:
/// associativity, unit, coassociativity, counit, bialgebra (Δ and ε are
/// algebra maps), antipode, antipode_square (S² = id and ∗∘S∘∗∘S = id),
/// star (involutive, antimultiplicative, Δ and ε ∗-compatible),
/// twisted_antipode (Σ S(a₍₂₎)a₍₁₎ = Σ a₍₂₎S(a₍₁₎) = ε(a)1) and cointegral
/// (a·z = z·a = ε(a)z, ε(z) = 1, z² = z, z* = z).
///
/// `product` replaces the multiplication rule for fault injection.
std::vector<CheckResult> verify_hopf_axioms(const SubgroupPtr& context,
                                            const BasisProduct& product = basis_product);

}  // namespace gspin
