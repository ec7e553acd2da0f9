#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gspin/group.hpp"
#include "gspin/rational.hpp"

namespace gspin {

/// A point of ½ℤ stored doubled: even = site x = twice/2, odd = link.
struct Pos {
  int twice = 0;

  static constexpr Pos site(int x) { return Pos{2 * x}; }
  static constexpr Pos from_twice(int t) { return Pos{t}; }
  constexpr bool is_site() const { return twice % 2 == 0; }
  constexpr bool is_link() const { return !is_site(); }
  /// Moves by `halves` half-steps.
  constexpr Pos shifted(int halves) const { return Pos{twice + halves}; }
  auto operator<=>(const Pos&) const = default;
};

/// "1", "3/2", "-1/2"
std::string to_string(Pos p);
Pos parse_pos(std::string_view text);

/// Λ = {s ∈ ½ℤ : lo ≤ s ≤ hi}, endpoints doubled.
struct Interval {
  int lo2 = 0;
  int hi2 = 0;

  /// "lo:hi" with halves written as fractions, e.g. "1/2:3".
  static Interval parse(std::string_view text);
  /// Λ_{½,m} = {½, 1, …, m}
  static Interval half_to(int m) { return Interval{1, 2 * m}; }

  bool contains(Pos p) const { return lo2 <= p.twice && p.twice <= hi2; }
  std::vector<Pos> sites() const;
  std::vector<Pos> links() const;
  bool starts_at_link() const { return Pos{lo2}.is_link(); }
  bool ends_at_site() const { return Pos{hi2}.is_site(); }
  /// Drops ½ at both ends: Λ_{n−½,m} ↦ Λ_{n,m−½}.
  Interval shrink() const { return Interval{lo2 + 1, hi2 - 1}; }
  bool operator==(const Interval&) const = default;
};

std::string to_string(const Interval& iv);

/// Basis monomial Π_{x asc} δ_{σ(x)}(x) · Π_{l asc} ρ_{τ(l)}(l): a total site
/// assignment σ (values in G) and link assignment τ (values in H, stored as
/// G indices), both ordered by position.
struct Monomial {
  std::vector<Elem> sigma;
  std::vector<Elem> tau;
  auto operator<=>(const Monomial&) const = default;
};

/// Canonical coordinate of a basis monomial: σ-code · |H|^{#links} + τ-code,
/// each a mixed-radix number with the leftmost position most significant.
using Key = std::uint64_t;

inline constexpr std::uint64_t kDefaultMonomialCap = 1'000'000;

/// |G|^{#sites} · |H|^{#links}, saturating at UINT64_MAX.
std::uint64_t field_dimension(std::size_t order_G, std::size_t order_H, const Interval& iv);

/// The local algebra F_H(Λ) for a fixed (G, H, Λ).
class FieldContext {
 public:
  /// Throws DimensionCap when the basis would exceed `cap` monomials.
  static std::shared_ptr<const FieldContext> make(SubgroupPtr subgroup, Interval interval,
                                                  std::uint64_t cap = kDefaultMonomialCap);

  const Subgroup& subgroup() const noexcept { return *subgroup_; }
  const SubgroupPtr& subgroup_ptr() const noexcept { return subgroup_; }
  const GroupTable& group() const noexcept { return subgroup_->group(); }
  const Interval& interval() const noexcept { return interval_; }

  const std::vector<Pos>& sites() const noexcept { return sites_; }
  const std::vector<Pos>& links() const noexcept { return links_; }
  std::size_t site_count() const noexcept { return sites_.size(); }
  std::size_t link_count() const noexcept { return links_.size(); }
  std::optional<std::size_t> site_index(Pos p) const;
  std::optional<std::size_t> link_index(Pos p) const;
  /// Number of links strictly left of site i.
  std::size_t links_before_site(std::size_t i) const noexcept { return links_before_site_[i]; }

  std::uint64_t dimension() const noexcept { return sigma_count_ * tau_count_; }
  std::uint64_t sigma_count() const noexcept { return sigma_count_; }
  std::uint64_t tau_count() const noexcept { return tau_count_; }

  Key sigma_code(std::span<const Elem> sigma) const;
  Key tau_code(std::span<const Elem> tau) const;
  Key key(Key sigma_code, Key tau_code) const noexcept { return sigma_code * tau_count_ + tau_code; }
  Key encode(const Monomial& m) const { return key(sigma_code(m.sigma), tau_code(m.tau)); }
  void decode_sigma(Key sigma_code, std::span<Elem> out) const;
  void decode_tau(Key tau_code, std::span<Elem> out) const;
  Monomial decode(Key k) const;

  bool same_as(const FieldContext& other) const noexcept;

 private:
  FieldContext(SubgroupPtr subgroup, Interval interval);

  SubgroupPtr subgroup_;
  Interval interval_;
  std::vector<Pos> sites_;
  std::vector<Pos> links_;
  std::vector<std::size_t> links_before_site_;
  std::uint64_t sigma_count_ = 1;
  std::uint64_t tau_count_ = 1;
};

using FieldContextPtr = std::shared_ptr<const FieldContext>;

/// Π over links of τ(l) in ascending order.
Elem tau_total(const FieldContext& ctx, const Monomial& m);

/// Sums coefficients by key and produces the canonical sorted term list.
class TermAccumulator {
 public:
  void add(Key k, const Rational& c);
  std::vector<std::pair<Key, Rational>> take();
  bool empty() const noexcept { return terms_.empty(); }

 private:
  std::unordered_map<Key, Rational> terms_;
};

/// Rational combination of basis monomials of one F_H(Λ); terms sorted by
/// key with no zeros, so == is exact equality.
class FieldElement {
 public:
  using Term = std::pair<Key, Rational>;

  explicit FieldElement(FieldContextPtr context);
  static FieldElement monomial(FieldContextPtr context, const Monomial& m, Rational coeff = 1);
  /// Merges duplicate keys and drops zeros.
  static FieldElement from_terms(FieldContextPtr context, std::vector<Term> terms);

  const FieldContextPtr& context() const noexcept { return context_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Binary search; nullptr when absent.
  const Rational* find(Key k) const;
  Rational coefficient(Key k) const;

  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  FieldElement& operator*=(const Rational& c);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(const Rational& c, FieldElement a) { return a *= c; }
  bool operator==(const FieldElement& other) const;

 private:
  FieldContextPtr context_;
  std::vector<Term> terms_;
};

void require_same_context(const FieldContext& a, const FieldContext& b);

/// Sum of all monomials with τ ≡ e.
FieldElement identity(const FieldContextPtr& ctx);
/// δ_g(x) expanded over all values of the other sites, τ ≡ e.
FieldElement generator_delta(const FieldContextPtr& ctx, Elem g, Pos x);
/// ρ_h(l) expanded over all σ, τ(l) = h and e elsewhere.
FieldElement generator_rho(const FieldContextPtr& ctx, Elem h, Pos l);

/// Normal-ordered product of two basis monomials M=(σ,τ), M′=(σ′,τ′):
/// nonzero iff σ(x) = P(x)·σ′(x) at every site, with P(x) the ascending
/// product of τ over links left of x; then τ″(l) = Q(l)⁻¹τ(l)Q(l)·τ′(l),
/// with Q(l) the ascending product of τ′ over links left of l.
std::optional<Monomial> multiply_monomials(const FieldContext& ctx, const Monomial& a, const Monomial& b);
/// The adjoint of a basis monomial is again a basis monomial.
Monomial star_monomial(const FieldContext& ctx, const Monomial& m);

FieldElement multiply(const FieldElement& a, const FieldElement& b);
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return multiply(a, b); }
FieldElement star(const FieldElement& a);

/// Inclusion F_{H₁}(Λ) ↪ F_{H₂}(Λ) for H₁ ⊆ H₂ in the same G; throws
/// NotASubgroup otherwise.
FieldElement embed(const FieldElement& a, const FieldContextPtr& target);

/// {"sites": {"x": g}, "links": {"l2": h}}, link keys doubled.
nlohmann::json to_json(const FieldContext& ctx, const Monomial& m);
/// [{"monomial": ..., "coeff": "p/q"}]
nlohmann::json to_json(const FieldElement& a);

}  // namespace gspin
