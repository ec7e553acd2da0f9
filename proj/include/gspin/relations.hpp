#pragma once

#include "gspin/field_algebra.hpp"
#include "gspin/matrix_rep.hpp"
#include "gspin/report.hpp"

namespace gspin {

/// The six defining relations of the field algebra, exhaustively over all
/// labels and positions of Λ:
///   Σ_g δ_g(x) = I = ρ_e(l);  δ_{g₁}(x)δ_{g₂}(x) = δ_{g₁,g₂}δ_{g₁}(x);
///   ρ_{h₁}(l)ρ_{h₂}(l) = ρ_{h₁h₂}(l);  δ's at different sites commute;
///   ρ_h(l)δ_g(x) = δ_{hg}(x)ρ_h(l) (l<x), δ_g(x)ρ_h(l) (l>x);
///   ρ_{h₁}(l)ρ_{h₂}(l′) = ρ_{h₂}(l′)ρ_{h₂⁻¹h₁h₂}(l) (l>l′);
/// plus δ* = δ and ρ_h* = ρ_{h⁻¹}.
CheckResult verify_field_relations(const FieldContextPtr& ctx);
/// The same identities for the configuration matrices.
CheckResult verify_rep_relations(const ConfigSpace& space);

}  // namespace gspin
