#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "gspin/field_algebra.hpp"
#include "gspin/quantum_double.hpp"
#include "gspin/report.hpp"

namespace gspin {

/// Closed form: (h,g)·M = [h = g·τ_total·g⁻¹] (gσ, gτg⁻¹).
FieldElement act_basis(const FieldContextPtr& ctx, const DoubleBasis& a, const Monomial& m);
/// Bilinear extension of act_basis. Throws ContextMismatch unless both
/// sides share (G, H).
FieldElement act(const DoubleElement& a, const FieldElement& f);

enum class Factorization {
  /// δ(x) for every site, then ρ(l) for every link, ρ_e included.
  full,
  /// As `full` but the ρ_e = I factors are left out.
  skip_trivial_links,
};

/// Reference action: each monomial is split into its generator factors, the
/// iterated coproduct of `a` is applied factor by factor using
/// (h,g)δ_f(x) = δ_{h,e}δ_{gf}(x) and (h,g)ρ_t(l) = δ_{h,gtg⁻¹}ρ_h(l), and
/// the results are multiplied back. Each generator rule fixes its tensor
/// label, so the sum over labels is carried as a map from running prefix
/// product to partial result instead of being enumerated.
FieldElement act_coproduct(const DoubleElement& a, const FieldElement& f,
                           Factorization factorization = Factorization::full);

/// z_H(M) = [τ_total = e] (1/|G|) Σ_g (gσ, gτg⁻¹)
FieldElement conditional_expectation(const FieldElement& f);

/// `terms` distinct random monomials with nonzero coefficients in ±{1,½,…,3}.
FieldElement random_element(const FieldContextPtr& ctx, std::mt19937_64& rng, std::size_t terms = 4);
DoubleElement random_double_element(const SubgroupPtr& ctx, std::mt19937_64& rng, std::size_t terms = 3);

struct SuiteOptions {
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  double tol = 1e-9;
};

/// unit, bimodularity, positivity, idempotence, contraction:
///  z(I) = I; z(F₁FF₂) = F₁z(F)F₂ with F₁, F₂ fixed points; π(z(F*F)) ⪰ 0;
///  z∘z = z on every basis monomial; π(z(F*F) − z(F)*z(F)) ⪰ 0.
std::vector<CheckResult> verify_expectation_properties(const FieldContextPtr& ctx, const SuiteOptions& options = {});

/// Inputs to the module-algebra suite: every (basis a, basis M) combination
/// when the grid is at most `exhaustive_limit` pairs, `samples` random
/// draws otherwise.
struct ModuleOptions : SuiteOptions {
  std::size_t exhaustive_limit = 4096;
};

/// act_consistency (closed form vs the coproduct chain, both factorizations),
/// composition (ab)(F) = a(b(F)), leibniz a(F₁F₂) = Σ a₍₁₎(F₁)a₍₂₎(F₂),
/// star a(F*) = (S(a*)(F))*, unit a(I) = ε(a)I, cointegral z_H·F = z_H(F).
std::vector<CheckResult> verify_module_algebra(const FieldContextPtr& ctx, const ModuleOptions& options = {});

}  // namespace gspin
