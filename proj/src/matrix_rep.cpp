#include "gspin/matrix_rep.hpp"

#include <map>

#include "gspin/error.hpp"

namespace gspin {

ConfigSpace::ConfigSpace(FieldContextPtr context) : context_(std::move(context)) {
  positions_ = context_->sites();
  const Interval& iv = context_->interval();
  if (Pos{iv.hi2}.is_link()) positions_.push_back(Pos{iv.hi2 + 1});
  for (std::size_t i = 0; i < positions_.size(); ++i) dimension_ *= context_->group().order();
}

std::size_t ConfigSpace::index(const std::vector<Elem>& config) const {
  std::size_t out = 0;
  for (const Elem g : config) out = out * context_->group().order() + g;
  return out;
}

std::vector<Elem> ConfigSpace::config(std::size_t index) const {
  std::vector<Elem> out(positions_.size());
  const std::size_t n = context_->group().order();
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Elem>(index % n);
    index /= n;
  }
  return out;
}

void ConfigSpace::apply_rho(std::vector<Elem>& config, Elem h, Pos l) const {
  const GroupTable& G = context_->group();
  for (std::size_t i = 0; i < positions_.size(); ++i)
    if (positions_[i] > l) config[i] = G.mul(h, config[i]);
}

std::optional<std::size_t> ConfigSpace::apply_monomial(const Monomial& m, std::size_t column) const {
  std::vector<Elem> c = config(column);
  // The rightmost factor acts first.
  for (std::size_t j = context_->link_count(); j-- > 0;) apply_rho(c, m.tau[j], context_->links()[j]);
  for (std::size_t i = 0; i < context_->site_count(); ++i)
    if (c[i] != m.sigma[i]) return std::nullopt;
  return index(c);
}

template <typename Scalar>
RepMatrix<Scalar> represent_delta(const ConfigSpace& space, Elem g, Pos x) {
  const auto i = space.context()->site_index(x);
  if (!i) throw Error(ErrorKind::OutOfInterval, "δ(" + to_string(x) + ") outside the interval");
  const auto n = static_cast<Eigen::Index>(space.dimension());
  RepMatrix<Scalar> m = RepMatrix<Scalar>::Zero(n, n);
  for (Eigen::Index c = 0; c < n; ++c)
    if (space.config(static_cast<std::size_t>(c))[*i] == g) m(c, c) = Scalar(1);
  return m;
}

template <typename Scalar>
RepMatrix<Scalar> represent_rho(const ConfigSpace& space, Elem h, Pos l) {
  if (!space.context()->link_index(l))
    throw Error(ErrorKind::OutOfInterval, "ρ(" + to_string(l) + ") outside the interval");
  const auto n = static_cast<Eigen::Index>(space.dimension());
  RepMatrix<Scalar> m = RepMatrix<Scalar>::Zero(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    auto cfg = space.config(static_cast<std::size_t>(c));
    space.apply_rho(cfg, h, l);
    m(static_cast<Eigen::Index>(space.index(cfg)), c) = Scalar(1);
  }
  return m;
}

namespace {

template <typename Scalar>
Scalar convert(const Rational& r) {
  if constexpr (std::is_same_v<Scalar, Rational>) return r;
  else return r.template convert_to<Scalar>();
}

}  // namespace

template <typename Scalar>
RepMatrix<Scalar> represent(const ConfigSpace& space, const FieldElement& f) {
  require_same_context(*space.context(), *f.context());
  const auto n = static_cast<Eigen::Index>(space.dimension());
  RepMatrix<Scalar> m = RepMatrix<Scalar>::Zero(n, n);
  const FieldContext& ctx = *f.context();
  for (const auto& [k, c] : f.terms()) {
    const Monomial mono = ctx.decode(k);
    const Scalar s = convert<Scalar>(c);
    for (std::size_t col = 0; col < space.dimension(); ++col)
      if (const auto row = space.apply_monomial(mono, col))
        m(static_cast<Eigen::Index>(*row), static_cast<Eigen::Index>(col)) += s;
  }
  return m;
}

template RepMatrix<Rational> represent_delta<Rational>(const ConfigSpace&, Elem, Pos);
template RepMatrix<double> represent_delta<double>(const ConfigSpace&, Elem, Pos);
template RepMatrix<Rational> represent_rho<Rational>(const ConfigSpace&, Elem, Pos);
template RepMatrix<double> represent_rho<double>(const ConfigSpace&, Elem, Pos);
template RepMatrix<Rational> represent<Rational>(const ConfigSpace&, const FieldElement&);
template RepMatrix<double> represent<double>(const ConfigSpace&, const FieldElement&);

PsdDetail psd_detail(const RepMatrix<Rational>& m, double tol, std::size_t exact_limit) {
  if (!is_self_adjoint(m)) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        if (m(i, j) != m(j, i))
          throw Error(ErrorKind::NotSelfAdjoint, "matrix is not self-adjoint",
                      {{"row", i}, {"col", j}, {"value", to_string(m(i, j))},
                       {"transpose", to_string(m(j, i))}});
    throw Error(ErrorKind::NotSelfAdjoint, "matrix is not square");
  }
  PsdDetail d;
  const Eigen::Index n = m.rows();

  if (n > 0) {
    const Eigen::MatrixXd md = m.unaryExpr([](const Rational& r) { return r.convert_to<double>(); });
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(md, Eigen::EigenvaluesOnly);
    d.min_eigenvalue = solver.eigenvalues().minCoeff();
  }
  bool float_ok = d.min_eigenvalue >= -tol;

  if (static_cast<std::size_t>(n) <= exact_limit) {
    d.exact_used = true;
    // Symmetric elimination without row exchanges: each pivot is a Schur
    // complement diagonal, which must be nonnegative, and a zero pivot
    // forces its whole remaining row to vanish.
    RepMatrix<Rational> a = m;
    bool ok = true;
    for (Eigen::Index k = 0; k < n && ok; ++k) {
      const Rational p = a(k, k);
      if (p < 0) {
        ok = false;
      } else if (p == 0) {
        for (Eigen::Index j = k + 1; j < n; ++j)
          if (a(k, j) != 0) {
            ok = false;
            break;
          }
      } else {
        for (Eigen::Index i = k + 1; i < n; ++i) {
          if (a(i, k) == 0) continue;
          const Rational f = a(i, k) / p;
          for (Eigen::Index j = k; j < n; ++j)
            if (a(k, j) != 0) a(i, j) -= f * a(k, j);
        }
      }
      if (!ok) d.failing_pivot = static_cast<std::size_t>(k);
    }
    d.exact_psd = ok;
  }
  d.psd = float_ok && d.exact_psd.value_or(true);
  return d;
}

std::size_t representation_rank(const ConfigSpace& space) {
  using Vec = std::map<std::uint64_t, Rational>;
  const FieldContext& ctx = *space.context();
  const std::uint64_t n = space.dimension();
  std::map<std::uint64_t, Vec> rows;  // pivot → reduced row, monic at pivot
  for (Key k = 0; k < ctx.dimension(); ++k) {
    const Monomial m = ctx.decode(k);
    Vec v;
    for (std::size_t col = 0; col < n; ++col)
      if (const auto row = space.apply_monomial(m, col)) v[*row * n + col] += 1;
    for (auto it = v.begin(); it != v.end();) {
      const auto r = rows.find(it->first);
      if (r == rows.end()) {
        ++it;
        continue;
      }
      const Rational c = it->second;
      const std::uint64_t from = it->first;
      for (const auto& [key, val] : r->second) {
        Rational& slot = v[key];
        slot -= c * val;
      }
      for (auto jt = v.begin(); jt != v.end();) jt = jt->second == 0 ? v.erase(jt) : std::next(jt);
      it = v.upper_bound(from);
    }
    if (v.empty()) continue;
    const Rational lead = v.begin()->second;
    for (auto& [key, val] : v) val /= lead;
    const std::uint64_t p = v.begin()->first;
    for (auto& [pk, row] : rows) {
      const auto hit = row.find(p);
      if (hit == row.end()) continue;
      const Rational c = hit->second;
      for (const auto& [key, val] : v) row[key] -= c * val;
      for (auto jt = row.begin(); jt != row.end();) jt = jt->second == 0 ? row.erase(jt) : std::next(jt);
    }
    rows.emplace(p, std::move(v));
  }
  return rows.size();
}

nlohmann::json dump_matrix(const RepMatrix<Rational>& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) entries.push_back({i, j, to_string(m(i, j))});
  return {{"dimension", m.rows()}, {"entries", entries}};
}

}  // namespace gspin
