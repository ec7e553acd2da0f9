#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "gspin/field_algebra.hpp"

namespace gspin {

/// Configurations c: sites → G of the chain, canonically enumerated (leftmost
/// site most significant). When Λ ends at a link an extra site right of it
/// is appended, otherwise ρ at the last link would act trivially and the
/// representation would not be faithful.
class ConfigSpace {
 public:
  explicit ConfigSpace(FieldContextPtr context);

  const FieldContextPtr& context() const noexcept { return context_; }
  std::size_t dimension() const noexcept { return dimension_; }
  /// Site positions of a configuration, including the extra one if any.
  const std::vector<Pos>& positions() const noexcept { return positions_; }
  bool has_extra_site() const noexcept { return positions_.size() > context_->site_count(); }

  std::size_t index(const std::vector<Elem>& config) const;
  std::vector<Elem> config(std::size_t index) const;

  /// Image of configuration c under the permutation of ρ_h(l).
  void apply_rho(std::vector<Elem>& config, Elem h, Pos l) const;
  /// π(M)e_c, or nullopt when it vanishes.
  std::optional<std::size_t> apply_monomial(const Monomial& m, std::size_t column) const;

 private:
  FieldContextPtr context_;
  std::vector<Pos> positions_;
  std::size_t dimension_ = 1;
};

template <typename Scalar>
using RepMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Diagonal projection onto {c : c(x) = g}.
template <typename Scalar>
RepMatrix<Scalar> represent_delta(const ConfigSpace& space, Elem g, Pos x);
/// Permutation c ↦ c′, c′(y) = h·c(y) for sites y > l.
template <typename Scalar>
RepMatrix<Scalar> represent_rho(const ConfigSpace& space, Elem h, Pos l);
/// Linear extension of the monomial images Π π(δ) · Π π(ρ).
template <typename Scalar>
RepMatrix<Scalar> represent(const ConfigSpace& space, const FieldElement& f);

template <typename Scalar>
bool is_self_adjoint(const RepMatrix<Scalar>& m) {
  return m.rows() == m.cols() && m == m.transpose();
}

struct PsdDetail {
  bool psd = false;
  bool exact_used = false;
  std::optional<bool> exact_psd;
  double min_eigenvalue = 0.0;
  /// First negative pivot (or zero pivot with a nonzero row) of the exact path.
  std::optional<std::size_t> failing_pivot;
};

/// Matrices up to this size also get the exact pivoted decomposition.
inline constexpr std::size_t kExactPsdLimit = 256;

/// Throws NotSelfAdjoint. PSD iff every eigenvalue ≥ −tol and, when the
/// exact path runs, no symmetric elimination pivot is negative.
PsdDetail psd_detail(const RepMatrix<Rational>& m, double tol, std::size_t exact_limit = kExactPsdLimit);
inline bool psd_check(const RepMatrix<Rational>& m, double tol) { return psd_detail(m, tol).psd; }

/// Exact rank of {π(M) : M a basis monomial} as vectors of matrix entries;
/// equals dim F_H(Λ) iff the representation is faithful.
std::size_t representation_rank(const ConfigSpace& space);

/// {"dimension": n, "entries": [[row, col, "p/q"], ...]}
nlohmann::json dump_matrix(const RepMatrix<Rational>& m);

extern template RepMatrix<Rational> represent_delta<Rational>(const ConfigSpace&, Elem, Pos);
extern template RepMatrix<double> represent_delta<double>(const ConfigSpace&, Elem, Pos);
extern template RepMatrix<Rational> represent_rho<Rational>(const ConfigSpace&, Elem, Pos);
extern template RepMatrix<double> represent_rho<double>(const ConfigSpace&, Elem, Pos);
extern template RepMatrix<Rational> represent<Rational>(const ConfigSpace&, const FieldElement&);
extern template RepMatrix<double> represent<double>(const ConfigSpace&, const FieldElement&);

}  // namespace gspin
