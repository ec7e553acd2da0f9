#include "gspin/relations.hpp"

#include <string>

namespace gspin {

namespace {

/// Walks every relation instance; `eq(lhs, rhs)` compares two algebra
/// elements built from the model's generators.
template <typename Model>
CheckResult check_relations(const FieldContext& ctx, const std::string& name, Model& A) {
  const GroupTable& G = ctx.group();
  const auto H = ctx.subgroup().members();
  const Elem e = G.unit();
  auto fail = [&](const std::string& rel, nlohmann::json w) {
    w["relation"] = rel;
    return make_fail(name, "relation " + rel + " violated", std::move(w));
  };
  using T = decltype(A.identity());
  const T I = A.identity();

  for (const Pos x : ctx.sites()) {
    T sum = A.zero();
    for (Elem g = 0; g < G.order(); ++g) sum = A.add(sum, A.delta(g, x));
    if (!A.eq(sum, I)) return fail("partition", {{"x", to_string(x)}});
    for (Elem g1 = 0; g1 < G.order(); ++g1) {
      if (!A.eq(A.star(A.delta(g1, x)), A.delta(g1, x))) return fail("delta_star", {{"x", to_string(x)}, {"g", g1}});
      for (Elem g2 = 0; g2 < G.order(); ++g2) {
        const T lhs = A.mul(A.delta(g1, x), A.delta(g2, x));
        if (!A.eq(lhs, g1 == g2 ? A.delta(g1, x) : A.zero()))
          return fail("delta_delta", {{"x", to_string(x)}, {"g1", g1}, {"g2", g2}});
        for (const Pos y : ctx.sites())
          if (y != x && !A.eq(A.mul(A.delta(g1, x), A.delta(g2, y)), A.mul(A.delta(g2, y), A.delta(g1, x))))
            return fail("delta_commute", {{"x", to_string(x)}, {"y", to_string(y)}, {"g1", g1}, {"g2", g2}});
      }
    }
  }
  for (const Pos l : ctx.links()) {
    if (!A.eq(A.rho(e, l), I)) return fail("rho_unit", {{"l", to_string(l)}});
    for (const Elem h1 : H) {
      if (!A.eq(A.star(A.rho(h1, l)), A.rho(G.inv(h1), l))) return fail("rho_star", {{"l", to_string(l)}, {"h", h1}});
      for (const Elem h2 : H)
        if (!A.eq(A.mul(A.rho(h1, l), A.rho(h2, l)), A.rho(G.mul(h1, h2), l)))
          return fail("rho_rho_same", {{"l", to_string(l)}, {"h1", h1}, {"h2", h2}});
      for (const Pos x : ctx.sites())
        for (Elem g = 0; g < G.order(); ++g) {
          const T lhs = A.mul(A.rho(h1, l), A.delta(g, x));
          const T rhs = l < x ? A.mul(A.delta(G.mul(h1, g), x), A.rho(h1, l)) : A.mul(A.delta(g, x), A.rho(h1, l));
          if (!A.eq(lhs, rhs)) return fail("rho_delta", {{"l", to_string(l)}, {"x", to_string(x)}, {"h", h1}, {"g", g}});
        }
      for (const Pos m : ctx.links()) {
        if (!(l > m)) continue;
        for (const Elem h2 : H) {
          const T lhs = A.mul(A.rho(h1, l), A.rho(h2, m));
          const T rhs = A.mul(A.rho(h2, m), A.rho(G.mul(G.mul(G.inv(h2), h1), h2), l));
          if (!A.eq(lhs, rhs))
            return fail("rho_rho_braid", {{"l", to_string(l)}, {"l_prime", to_string(m)}, {"h1", h1}, {"h2", h2}});
        }
      }
    }
  }
  return make_pass(name, "all defining relations hold");
}

struct FieldModel {
  FieldContextPtr ctx;
  FieldElement identity() const { return gspin::identity(ctx); }
  FieldElement zero() const { return FieldElement(ctx); }
  FieldElement delta(Elem g, Pos x) const { return generator_delta(ctx, g, x); }
  FieldElement rho(Elem h, Pos l) const { return generator_rho(ctx, h, l); }
  FieldElement add(const FieldElement& a, const FieldElement& b) const { return a + b; }
  FieldElement mul(const FieldElement& a, const FieldElement& b) const { return a * b; }
  FieldElement star(const FieldElement& a) const { return gspin::star(a); }
  bool eq(const FieldElement& a, const FieldElement& b) const { return a == b; }
};

/// 0/1 permutation and projection matrices: double arithmetic is exact here.
struct RepModel {
  const ConfigSpace& space;
  using M = RepMatrix<double>;
  M identity() const { return M::Identity(n(), n()); }
  M zero() const { return M::Zero(n(), n()); }
  M delta(Elem g, Pos x) const { return represent_delta<double>(space, g, x); }
  M rho(Elem h, Pos l) const { return represent_rho<double>(space, h, l); }
  M add(const M& a, const M& b) const { return a + b; }
  M mul(const M& a, const M& b) const { return a * b; }
  M star(const M& a) const { return a.transpose(); }
  bool eq(const M& a, const M& b) const { return a == b; }
  Eigen::Index n() const { return static_cast<Eigen::Index>(space.dimension()); }
};

}  // namespace

CheckResult verify_field_relations(const FieldContextPtr& ctx) {
  FieldModel model{ctx};
  return timed([&] { return check_relations(*ctx, "field.relations", model); });
}

CheckResult verify_rep_relations(const ConfigSpace& space) {
  RepModel model{space};
  return timed([&] { return check_relations(*space.context(), "rep.relations", model); });
}

}  // namespace gspin
