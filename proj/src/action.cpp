#include "gspin/action.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "gspin/error.hpp"
#include "gspin/matrix_rep.hpp"

namespace gspin {

namespace {

void require_shared(const Subgroup& double_side, const FieldContext& field_side) {
  if (!double_side.same_as(field_side.subgroup()))
    throw Error(ErrorKind::ContextMismatch, "D(H;G) and F_H(Λ) are over different (G, H)");
}

/// The shifted monomial (gσ, gτg⁻¹) when the charge condition holds.
std::optional<Monomial> act_monomial(const FieldContext& ctx, const DoubleBasis& a, const Monomial& m) {
  const GroupTable& G = ctx.group();
  if (a.h != G.conj(a.g, tau_total(ctx, m))) return std::nullopt;
  Monomial out{m.sigma, m.tau};
  for (auto& s : out.sigma) s = G.mul(a.g, s);
  for (auto& t : out.tau) t = G.conj(a.g, t);
  return out;
}

}  // namespace

FieldElement act_basis(const FieldContextPtr& ctx, const DoubleBasis& a, const Monomial& m) {
  if (const auto out = act_monomial(*ctx, a, m)) return FieldElement::monomial(ctx, *out);
  return FieldElement(ctx);
}

FieldElement act(const DoubleElement& a, const FieldElement& f) {
  const FieldContext& ctx = *f.context();
  require_shared(*a.context(), ctx);
  TermAccumulator acc;
  for (const auto& [b, cb] : a.terms())
    for (const auto& [k, c] : f.terms())
      if (const auto out = act_monomial(ctx, b, ctx.decode(k))) acc.add(ctx.encode(*out), cb * c);
  return FieldElement::from_terms(f.context(), acc.take());
}

namespace {

struct Factor {
  bool is_delta;
  Elem label;
  Pos pos;
};

std::vector<Factor> factorize(const FieldContext& ctx, const Monomial& m, Factorization how) {
  std::vector<Factor> out;
  for (std::size_t i = 0; i < ctx.site_count(); ++i) out.push_back({true, m.sigma[i], ctx.sites()[i]});
  for (std::size_t j = 0; j < ctx.link_count(); ++j) {
    if (how == Factorization::skip_trivial_links && m.tau[j] == ctx.group().unit()) continue;
    out.push_back({false, m.tau[j], ctx.links()[j]});
  }
  return out;
}

/// (a′, g) applied to one generator; the tensor label a′ is forced.
struct GeneratorImage {
  Elem label;
  FieldElement value;
};

GeneratorImage act_generator(const FieldContextPtr& ctx, Elem g, const Factor& f) {
  const GroupTable& G = ctx->group();
  if (f.is_delta) return {G.unit(), generator_delta(ctx, G.mul(g, f.label), f.pos)};
  const Elem h = G.conj(g, f.label);
  return {h, generator_rho(ctx, h, f.pos)};
}

}  // namespace

FieldElement act_coproduct(const DoubleElement& a, const FieldElement& f, Factorization factorization) {
  const FieldContextPtr& ctx = f.context();
  require_shared(*a.context(), *ctx);
  const GroupTable& G = ctx->group();
  FieldElement total(ctx);
  for (const auto& [k, c] : f.terms()) {
    const auto factors = factorize(*ctx, ctx->decode(k), factorization);
    for (const auto& [b, cb] : a.terms()) {
      // Δ⁽ⁿ⁻¹⁾(h,g) = Σ (t₁,g)⊗(t₁⁻¹t₂,g)⊗…⊗(t_{n−1}⁻¹h,g): the running
      // product of the labels must end at h.
      std::map<Elem, FieldElement> state;
      state.emplace(G.unit(), identity(ctx));
      for (const Factor& factor : factors) {
        const GeneratorImage image = act_generator(ctx, b.g, factor);
        std::map<Elem, FieldElement> next;
        for (const auto& [prefix, partial] : state) {
          FieldElement product = partial * image.value;
          if (!product.is_zero()) next.emplace(G.mul(prefix, image.label), std::move(product));
        }
        state = std::move(next);
      }
      if (auto it = state.find(b.h); it != state.end()) total += (cb * c) * it->second;
    }
  }
  return total;
}

FieldElement conditional_expectation(const FieldElement& f) {
  const FieldContext& ctx = *f.context();
  const GroupTable& G = ctx.group();
  const Rational weight = Rational(1) / Rational(static_cast<long>(G.order()));
  TermAccumulator acc;
  for (const auto& [k, c] : f.terms()) {
    const Monomial m = ctx.decode(k);
    if (tau_total(ctx, m) != G.unit()) continue;
    const Rational w = c * weight;
    for (Elem g = 0; g < G.order(); ++g) {
      Monomial shifted{m.sigma, m.tau};
      for (auto& s : shifted.sigma) s = G.mul(g, s);
      for (auto& t : shifted.tau) t = G.conj(g, t);
      acc.add(ctx.encode(shifted), w);
    }
  }
  return FieldElement::from_terms(f.context(), acc.take());
}

namespace {

Rational random_coefficient(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 3), den(1, 2), sign(0, 1);
  Rational c(num(rng), den(rng));
  return sign(rng) ? Rational(-c) : c;
}

}  // namespace

FieldElement random_element(const FieldContextPtr& ctx, std::mt19937_64& rng, std::size_t terms) {
  terms = static_cast<std::size_t>(std::min<std::uint64_t>(terms, ctx->dimension()));
  std::uniform_int_distribution<Key> pick(0, ctx->dimension() - 1);
  std::unordered_set<Key> chosen;
  std::vector<FieldElement::Term> out;
  while (out.size() < terms) {
    const Key k = pick(rng);
    if (chosen.insert(k).second) out.emplace_back(k, random_coefficient(rng));
  }
  return FieldElement::from_terms(ctx, std::move(out));
}

DoubleElement random_double_element(const SubgroupPtr& ctx, std::mt19937_64& rng, std::size_t terms) {
  std::uniform_int_distribution<std::size_t> pick_h(0, ctx->order() - 1);
  std::uniform_int_distribution<Elem> pick_g(0, static_cast<Elem>(ctx->group().order() - 1));
  DoubleElement out(ctx);
  for (std::size_t i = 0; i < terms; ++i) out.add({ctx->member(pick_h(rng)), pick_g(rng)}, random_coefficient(rng));
  return out;
}

namespace {

nlohmann::json element_witness(const FieldElement& f) { return to_json(f); }

/// Beyond this the configuration matrices are too large for the suite.
constexpr std::size_t kPositivityDimLimit = 512;

}  // namespace

std::vector<CheckResult> verify_expectation_properties(const FieldContextPtr& ctx, const SuiteOptions& options) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(options.seed);

  out.push_back(timed([&] {
    const FieldElement I = identity(ctx);
    if (conditional_expectation(I) == I) return make_pass("expectation.unit", "z_H(I) = I");
    return make_fail("expectation.unit", "z_H(I) differs from I", to_json(conditional_expectation(I)));
  }));

  out.push_back(timed([&] {
    for (std::size_t n = 0; n < options.samples; ++n) {
      const FieldElement F1 = conditional_expectation(random_element(ctx, rng));
      const FieldElement F2 = conditional_expectation(random_element(ctx, rng));
      const FieldElement F = random_element(ctx, rng);
      if (conditional_expectation(F1 * F * F2) != F1 * conditional_expectation(F) * F2)
        return make_fail("expectation.bimodular", "z_H(F₁FF₂) ≠ F₁z_H(F)F₂",
                         {{"F1", element_witness(F1)}, {"F", element_witness(F)}, {"F2", element_witness(F2)}});
    }
    return make_pass("expectation.bimodular", "z_H(F₁FF₂) = F₁z_H(F)F₂ exactly",
                     {{"triples", options.samples}});
  }));

  const ConfigSpace space(ctx);
  const std::size_t psd_samples = std::min<std::size_t>(options.samples, 50);
  auto psd_suite = [&](const std::string& name, bool contraction) {
    return timed([&] {
      if (space.dimension() > kPositivityDimLimit) {
        CheckResult r = make_pass(name, "representation too large for the PSD suite");
        r.status = Status::skipped;
        return r;
      }
      double worst = 0.0;
      for (std::size_t n = 0; n < psd_samples; ++n) {
        const FieldElement F = random_element(ctx, rng);
        FieldElement target = conditional_expectation(star(F) * F);
        if (contraction) {
          const FieldElement zF = conditional_expectation(F);
          target -= star(zF) * zF;
        }
        const PsdDetail d = psd_detail(represent<Rational>(space, target), options.tol);
        worst = std::min(worst, d.min_eigenvalue);
        if (!d.psd)
          return make_fail(name, "representation matrix is not positive semidefinite",
                           {{"F", element_witness(F)},
                            {"min_eigenvalue", d.min_eigenvalue},
                            {"pivot", d.failing_pivot ? nlohmann::json(*d.failing_pivot) : nlohmann::json()}});
      }
      return make_pass(name, "PSD with exact pivots", {{"samples", psd_samples}});
    });
  };
  out.push_back(psd_suite("expectation.positive", false));

  out.push_back(timed([&] {
    for (Key k = 0; k < ctx->dimension(); ++k) {
      const FieldElement M = FieldElement::from_terms(ctx, {{k, Rational(1)}});
      const FieldElement z = conditional_expectation(M);
      if (conditional_expectation(z) != z)
        return make_fail("expectation.idempotent", "z_H(z_H(M)) ≠ z_H(M)", to_json(*ctx, ctx->decode(k)));
    }
    return make_pass("expectation.idempotent", "z_H∘z_H = z_H on every basis monomial",
                     {{"monomials", ctx->dimension()}});
  }));

  out.push_back(psd_suite("expectation.contraction", true));
  return out;
}

std::vector<CheckResult> verify_module_algebra(const FieldContextPtr& ctx, const ModuleOptions& options) {
  const SubgroupPtr& H = ctx->subgroup_ptr();
  const auto dbasis = double_basis(*H);
  const std::size_t D = dbasis.size();
  const std::uint64_t dim = ctx->dimension();
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> pick_d(0, D - 1);
  std::uniform_int_distribution<Key> pick_m(0, dim - 1);

  auto basis = [&](const DoubleBasis& b) { return DoubleElement::basis(H, b.h, b.g); };
  auto mono = [&](Key k) { return FieldElement::from_terms(ctx, {{k, Rational(1)}}); };
  // Runs `test(a, ..., M, ...)` over the grid of `na` double labels and `nm`
  // monomials, exhaustively when small.
  auto sweep = [&](std::size_t na, std::size_t nm, auto&& test) -> std::pair<bool, std::size_t> {
    double cells = 1.0;
    for (std::size_t i = 0; i < na; ++i) cells *= static_cast<double>(D);
    for (std::size_t i = 0; i < nm; ++i) cells *= static_cast<double>(dim);
    std::vector<DoubleBasis> as(na);
    std::vector<Key> ms(nm);
    if (cells <= static_cast<double>(options.exhaustive_limit)) {
      const auto total = static_cast<std::size_t>(cells);
      for (std::size_t cell = 0; cell < total; ++cell) {
        std::size_t rest = cell;
        for (auto& m : ms) { m = static_cast<Key>(rest % dim); rest /= dim; }
        for (auto& a : as) { a = dbasis[rest % D]; rest /= D; }
        if (!test(as, ms)) return {false, cell + 1};
      }
      return {true, total};
    }
    for (std::size_t n = 0; n < options.samples; ++n) {
      for (auto& a : as) a = dbasis[pick_d(rng)];
      for (auto& m : ms) m = pick_m(rng);
      if (!test(as, ms)) return {false, n + 1};
    }
    return {true, options.samples};
  };

  std::vector<CheckResult> out;
  auto run = [&](const std::string& name, const std::string& claim, std::size_t na, std::size_t nm,
                 auto&& test) {
    out.push_back(timed([&] {
      std::vector<DoubleBasis> bad_a;
      std::vector<Key> bad_m;
      auto [ok, checked] = sweep(na, nm, [&](const std::vector<DoubleBasis>& as, const std::vector<Key>& ms) {
        if (test(as, ms)) return true;
        bad_a = as;
        bad_m = ms;
        return false;
      });
      if (ok) return make_pass(name, claim, {{"checked", checked}});
      nlohmann::json w = {{"a", nlohmann::json::array()}, {"monomials", nlohmann::json::array()}};
      for (const auto& b : bad_a) w["a"].push_back(to_json(b));
      for (Key k : bad_m) w["monomials"].push_back(to_json(*ctx, ctx->decode(k)));
      return make_fail(name, "violated: " + claim, w, {{"checked", checked}});
    }));
  };

  run("module.act_consistency", "act_basis = act_coproduct (with and without ρ_e factors)", 1, 1,
      [&](const auto& as, const auto& ms) {
        const FieldElement M = mono(ms[0]);
        const FieldElement closed = act_basis(ctx, as[0], ctx->decode(ms[0]));
        return closed == act_coproduct(basis(as[0]), M, Factorization::full) &&
               closed == act_coproduct(basis(as[0]), M, Factorization::skip_trivial_links);
      });

  run("module.composition", "(ab)(F) = a(b(F))", 2, 1, [&](const auto& as, const auto& ms) {
    const DoubleElement a = basis(as[0]), b = basis(as[1]);
    const FieldElement M = mono(ms[0]);
    return act(a * b, M) == act(a, act(b, M));
  });

  run("module.leibniz", "a(F₁F₂) = Σ a₍₁₎(F₁)a₍₂₎(F₂)", 1, 2, [&](const auto& as, const auto& ms) {
    const DoubleElement a = basis(as[0]);
    const FieldElement F1 = mono(ms[0]), F2 = mono(ms[1]);
    FieldElement rhs(ctx);
    const TensorElement delta = coproduct(a);
    for (const auto& [key, c] : delta.terms())
      rhs += c * (act(basis(key[0]), F1) * act(basis(key[1]), F2));
    return act(a, F1 * F2) == rhs;
  });

  run("module.star", "a(F*) = (S(a*)(F))*", 1, 1, [&](const auto& as, const auto& ms) {
    const DoubleElement a = basis(as[0]);
    const FieldElement M = mono(ms[0]);
    return act(a, star(M)) == star(act(antipode(star(a)), M));
  });

  run("module.unit", "a(I) = ε(a)·I", 1, 0, [&](const auto& as, const auto&) {
    const DoubleElement a = basis(as[0]);
    return act(a, identity(ctx)) == counit(a) * identity(ctx);
  });

  run("module.cointegral", "z_H acting on F is the conditional expectation", 0, 1, [&](const auto&, const auto& ms) {
    const FieldElement M = mono(ms[0]);
    return act(cointegral(H), M) == conditional_expectation(M);
  });

  out.push_back(timed([&] {
    const DoubleElement one = unit(H);
    for (std::size_t n = 0; n < std::min<std::size_t>(options.samples, 50); ++n) {
      const FieldElement F = random_element(ctx, rng);
      if (act(one, F) != F || act_coproduct(one, F) != F)
        return make_fail("module.identity", "the unit of D(H;G) does not act as the identity", to_json(F));
    }
    return make_pass("module.identity", "1_D acts as the identity");
  }));
  return out;
}

}  // namespace gspin
