#include "gspin/observable.hpp"

#include <deque>

#include "gspin/action.hpp"
#include "gspin/error.hpp"

namespace gspin {

namespace {

void require_position(const FieldContext& ctx, Pos p, bool site, const std::string& what) {
  const bool ok = site ? ctx.site_index(p).has_value() : ctx.link_index(p).has_value();
  if (!ok)
    throw Error(ErrorKind::OutOfInterval,
                what + " needs " + (site ? "site " : "link ") + to_string(p) + " inside " + to_string(ctx.interval()),
                {{"position", to_string(p)}});
}

}  // namespace

FieldElement make_v(const FieldContextPtr& ctx, Elem h, Pos x) {
  if (h >= ctx->group().order() || !ctx->subgroup().contains(h))
    throw Error(ErrorKind::NotInH, "v label " + std::to_string(h) + " is not in H", {{"h", h}});
  require_position(*ctx, x, true, "v(" + to_string(x) + ")");
  require_position(*ctx, x.shifted(-1), false, "v(" + to_string(x) + ")");
  require_position(*ctx, x.shifted(1), false, "v(" + to_string(x) + ")");
  const GroupTable& G = ctx->group();
  FieldElement out(ctx);
  for (Elem k = 0; k < G.order(); ++k)
    out += generator_rho(ctx, G.conj(k, G.inv(h)), x.shifted(-1)) * generator_delta(ctx, k, x) *
           generator_rho(ctx, G.conj(k, h), x.shifted(1));
  return out;
}

FieldElement make_w(const FieldContextPtr& ctx, Elem g, Pos l) {
  if (g >= ctx->group().order())
    throw Error(ErrorKind::OutOfRange, "w label " + std::to_string(g) + " is not in G", {{"g", g}});
  require_position(*ctx, l, false, "w(" + to_string(l) + ")");
  require_position(*ctx, l.shifted(-1), true, "w(" + to_string(l) + ")");
  require_position(*ctx, l.shifted(1), true, "w(" + to_string(l) + ")");
  const GroupTable& G = ctx->group();
  FieldElement out(ctx);
  for (Elem k = 0; k < G.order(); ++k)
    out += generator_delta(ctx, k, l.shifted(-1)) * generator_delta(ctx, G.mul(k, g), l.shifted(1));
  return out;
}

SpanBasis generated_subalgebra(const FieldContextPtr& ctx, const std::vector<FieldElement>& generators) {
  SpanBasis span(ctx);
  std::deque<FieldElement> frontier;
  const FieldElement I = identity(ctx);
  span.insert(I);
  frontier.push_back(I);
  while (!frontier.empty()) {
    const FieldElement v = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      FieldElement p = v * g;
      if (span.insert(p)) frontier.push_back(std::move(p));
    }
  }
  return span;
}

SpanBasis expectation_image(const FieldContextPtr& ctx) {
  SpanBasis span(ctx);
  for (Key k = 0; k < ctx->dimension(); ++k)
    span.insert(conditional_expectation(FieldElement::from_terms(ctx, {{k, Rational(1)}})));
  return span;
}

std::vector<FieldElement> observable_generators(const FieldContextPtr& ctx, const Interval& obs) {
  std::vector<FieldElement> out;
  for (const Pos x : obs.sites())
    for (const Elem h : ctx->subgroup().members()) out.push_back(make_v(ctx, h, x));
  for (const Pos l : obs.links())
    for (Elem g = 0; g < ctx->group().order(); ++g) out.push_back(make_w(ctx, g, l));
  return out;
}

CheckResult verify_invariant_subalgebra(const FieldContextPtr& ctx) {
  const Interval& iv = ctx->interval();
  if (!iv.starts_at_link() || !iv.ends_at_site() || iv.lo2 + 1 > iv.hi2)
    throw Error(ErrorKind::IntervalShapeError,
                "interval " + to_string(iv) + " must start at a link and end at a site",
                {{"interval", to_string(iv)}});
  const Interval obs = iv.shrink();
  return timed([&] {
    const auto gens = observable_generators(ctx, obs);
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (conditional_expectation(gens[i]) != gens[i])
        return make_fail("invariant_subalgebra", "a v/w generator is not fixed by z_H", {{"generator", i}});
    const SpanBasis image = expectation_image(ctx);
    const SpanBasis algebra = generated_subalgebra(ctx, gens);
    const nlohmann::json data = {{"field_interval", to_string(iv)},
                                 {"observable_interval", to_string(obs)},
                                 {"image_rank", image.rank()},
                                 {"generated_rank", algebra.rank()}};
    if (image == algebra)
      return make_pass("invariant_subalgebra",
                       "z_H(F_H) = <v, w>, rank " + std::to_string(image.rank()), data);
    // Name a row of one span missing from the other.
    nlohmann::json w = {{"image_rank", image.rank()}, {"generated_rank", algebra.rank()}};
    for (const auto& row : image.rows())
      if (!algebra.contains(row)) {
        w["missing_from_generated"] = to_json(row);
        break;
      }
    if (!w.contains("missing_from_generated"))
      for (const auto& row : algebra.rows())
        if (!image.contains(row)) {
          w["missing_from_image"] = to_json(row);
          break;
        }
    return make_fail("invariant_subalgebra", "spans differ", w, data);
  });
}

namespace {

QuasiFamily delta_rho_family(const FieldContextPtr& ctx, Pos k, Pos link, std::string label) {
  const FieldContext& c = *ctx;
  require_position(c, k, true, label);
  require_position(c, link, false, label);
  QuasiFamily fam;
  fam.label = std::move(label);
  fam.weight = Rational(static_cast<long>(c.group().order()));
  for (Elem x = 0; x < c.group().order(); ++x)
    for (const Elem y : c.subgroup().members()) {
      FieldElement u = generator_delta(ctx, x, k) * generator_rho(ctx, y, link);
      FieldElement us = star(u);
      fam.pairs.emplace_back(std::move(u), std::move(us));
    }
  return fam;
}

}  // namespace

QuasiFamily standard_family(const FieldContextPtr& ctx, Pos k) {
  return delta_rho_family(ctx, k, k.shifted(1), "std(k=" + to_string(k) + ")");
}

QuasiFamily shifted_family(const FieldContextPtr& ctx, Pos k, Pos l) {
  return delta_rho_family(ctx, k, l.shifted(1), "shifted(k=" + to_string(k) + ",l=" + to_string(l) + ")");
}

QuasiFamily custom_family(std::string label, std::vector<std::pair<FieldElement, FieldElement>> pairs,
                          Rational weight) {
  return QuasiFamily{std::move(label), std::move(pairs), std::move(weight)};
}

FieldElement quasi_left(const QuasiFamily& fam, const FieldElement& a) {
  FieldElement sum(a.context());
  for (const auto& [u, us] : fam.pairs) sum += u * conditional_expectation(us * a);
  return fam.weight * std::move(sum);
}

FieldElement quasi_right(const QuasiFamily& fam, const FieldElement& a) {
  FieldElement sum(a.context());
  for (const auto& [u, us] : fam.pairs) sum += conditional_expectation(a * u) * us;
  return fam.weight * std::move(sum);
}

QuasiBasisResult check_quasi_basis(const FieldContextPtr& ctx, const QuasiFamily& fam) {
  QuasiBasisResult r;
  for (Key k = 0; k < ctx->dimension(); ++k) {
    const FieldElement a = FieldElement::from_terms(ctx, {{k, Rational(1)}});
    FieldElement left = quasi_left(fam, a);
    FieldElement right = quasi_right(fam, a);
    const bool lok = left == a, rok = right == a;
    ++r.checked;
    if (lok && rok) continue;
    ++r.failures;
    r.left_ok = r.left_ok && lok;
    r.right_ok = r.right_ok && rok;
    if (!r.counterexample) {
      r.counterexample = ctx->decode(k);
      r.side = lok ? "right" : "left";
      r.lhs = lok ? std::move(right) : std::move(left);
    }
  }
  return r;
}

FieldElement compute_index(const QuasiFamily& fam, const QuasiBasisResult& check) {
  if (!check.passed())
    throw Error(ErrorKind::NotAQuasiBasis, "family " + fam.label + " is not a quasi-basis; no index is defined");
  if (fam.pairs.empty()) throw Error(ErrorKind::NotAQuasiBasis, "empty family");
  FieldElement sum(fam.pairs.front().first.context());
  for (const auto& [u, us] : fam.pairs) sum += u * us;
  return fam.weight * std::move(sum);
}

FieldElement compute_index(const FieldContextPtr& ctx, const QuasiFamily& fam) {
  return compute_index(fam, check_quasi_basis(ctx, fam));
}

std::optional<Rational> identity_multiple(const FieldElement& f) {
  const FieldElement I = identity(f.context());
  if (f.is_zero()) return Rational(0);
  const Rational c = f.terms().front().second;
  if (f == c * I) return c;
  return std::nullopt;
}

bool is_central(const FieldElement& f) {
  const FieldContextPtr& ctx = f.context();
  for (Key k = 0; k < ctx->dimension(); ++k) {
    const FieldElement m = FieldElement::from_terms(ctx, {{k, Rational(1)}});
    if (f * m != m * f) return false;
  }
  return true;
}

MonotonicityResult check_monotonicity(const SubgroupPtr& small, const SubgroupPtr& large, const Interval& iv,
                                      std::uint64_t cap) {
  const auto ctx_small = FieldContext::make(small, iv, cap);
  const auto ctx_large = FieldContext::make(large, iv, cap);
  const SpanBasis image_small = expectation_image(ctx_small);
  const SpanBasis image_large = expectation_image(ctx_large);
  MonotonicityResult r;
  r.rank_small = image_small.rank();
  r.rank_large = image_large.rank();
  r.included = true;
  for (const auto& row : image_small.rows())
    if (!image_large.contains(embed(row, ctx_large))) {
      r.included = false;
      break;
    }
  r.strict = r.included && r.rank_small < r.rank_large;
  return r;
}

}  // namespace gspin
