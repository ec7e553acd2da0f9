#include "doctest.h"

#include "gspin/action.hpp"
#include "gspin/error.hpp"
#include "gspin/observable.hpp"
#include "gspin/span.hpp"
#include "support/oracles.hpp"

using namespace gspin;

namespace {

FieldContextPtr field(const char* group, const char* sub, const char* interval) {
  return FieldContext::make(parse_subgroup(parse_builtin_group(group), sub), Interval::parse(interval));
}

FieldElement mono(const FieldContextPtr& ctx, std::vector<Elem> sigma, std::vector<Elem> tau) {
  return FieldElement::monomial(ctx, Monomial{std::move(sigma), std::move(tau)});
}

}  // namespace

TEST_CASE("closed-form action agrees with brute-force coproduct evaluation on full grids") {
  for (auto [g, h, iv] : {std::tuple{"cyclic:2", "full", "1/2:2"}, {"symmetric:3", "0,3,4", "1/2:3/2"},
                          {"symmetric:3", "full", "1:2"}, {"cyclic:4", "0,2", "1/2:1"}}) {
    const auto ctx = field(g, h, iv);
    const auto& H = ctx->subgroup_ptr();
    std::size_t pairs = 0;
    for (const auto& b : double_basis(*H))
      for (Key k = 0; k < ctx->dimension(); ++k) {
        const Monomial m = ctx->decode(k);
        const auto expected = oracle::act_brute(ctx, b, m);
        CHECK(act_basis(ctx, b, m) == expected);
        const auto basis = DoubleElement::basis(H, b.h, b.g);
        const auto f = FieldElement::monomial(ctx, m);
        CHECK(act_coproduct(basis, f) == expected);
        CHECK(act_coproduct(basis, f, Factorization::skip_trivial_links) == expected);
        ++pairs;
      }
    CHECK(pairs == H->order() * ctx->group().order() * ctx->dimension());
  }
}

TEST_CASE("property: random S3/A3 pairs on [1/2,2] against brute force") {
  const auto ctx = field("symmetric:3", "0,3,4", "1/2:2");
  std::mt19937_64 rng(8);
  for (int n = 0; n < 300; ++n) {
    const auto a = oracle::any_double(ctx->subgroup_ptr(), rng);
    const auto f = oracle::any_element(ctx, rng, 3);
    CHECK(act(a, f) == oracle::act_brute(a, f));
  }
}

TEST_CASE("generator rules") {
  const auto ctx = field("symmetric:3", "0,3,4", "1/2:2");
  const auto& G = ctx->group();
  const auto& H = ctx->subgroup_ptr();
  const Pos l{1};
  for (Elem g = 0; g < 6; ++g)
    for (Elem h : H->members())
      for (Elem t : H->members()) {
        const auto lhs = act(DoubleElement::basis(H, h, g), generator_rho(ctx, t, l));
        const auto rhs = h == G.conj(g, t) ? generator_rho(ctx, h, l) : FieldElement(ctx);
        CHECK(lhs == rhs);
      }
  for (Elem g = 0; g < 6; ++g)
    for (Elem f = 0; f < 6; ++f) {
      CHECK(act(DoubleElement::basis(H, 0, g), generator_delta(ctx, f, Pos::site(1))) ==
            generator_delta(ctx, G.mul(g, f), Pos::site(1)));
      CHECK(act(DoubleElement::basis(H, 3, g), generator_delta(ctx, f, Pos::site(1))).is_zero());
    }
  std::mt19937_64 rng(1);
  for (int n = 0; n < 50; ++n) {
    const auto f = oracle::any_element(ctx, rng);
    CHECK(act(unit(H), f) == f);
  }
  // (e,e) keeps exactly the τ_total = e part
  for (Key k = 0; k < ctx->dimension(); ++k) {
    const Monomial m = ctx->decode(k);
    const auto f = FieldElement::monomial(ctx, m);
    CHECK(act(DoubleElement::basis(H, 0, 0), f) == (tau_total(*ctx, m) == G.unit() ? f : FieldElement(ctx)));
  }
}

TEST_CASE("conditional expectation on generators") {
  const auto ctx = field("symmetric:3", "0,3,4", "1/2:2");
  const auto I = identity(ctx);
  CHECK(conditional_expectation(I) == I);
  for (Elem g = 0; g < 6; ++g)
    for (Pos x : ctx->sites()) CHECK(conditional_expectation(generator_delta(ctx, g, x)) == Rational(1, 6) * I);
  for (Elem t : ctx->subgroup().members())
    for (Pos l : ctx->links())
      CHECK(conditional_expectation(generator_rho(ctx, t, l)) == (t == 0 ? I : FieldElement(ctx)));
}

TEST_CASE("conditional expectation equals the cointegral action") {
  const auto ctx = field("symmetric:3", "0,3,4", "1/2:2");
  const auto z = cointegral(ctx->subgroup_ptr());
  for (Key k = 0; k < ctx->dimension(); ++k) {
    const auto f = FieldElement::monomial(ctx, ctx->decode(k));
    CHECK(conditional_expectation(f) == oracle::act_brute(z, f));
  }
}

TEST_CASE("expectation of a product monomial on [1/2,2]") {
  // z(δ_{g1}(1)δ_{g2}(2)ρ_{h1}(½)ρ_{h2}(3/2)) = (1/|G|) w_{g1⁻¹g2}(3/2) v_{g1⁻¹h1⁻¹g1}(1) when h1h2 = e
  const auto ctx = field("symmetric:3", "0,3,4", "1/2:2");
  const auto& G = ctx->group();
  for (Elem g1 = 0; g1 < 6; ++g1)
    for (Elem g2 = 0; g2 < 6; ++g2)
      for (Elem h1 : ctx->subgroup().members())
        for (Elem h2 : ctx->subgroup().members()) {
          const auto lhs = conditional_expectation(mono(ctx, {g1, g2}, {h1, h2}));
          if (G.mul(h1, h2) != G.unit()) {
            CHECK(lhs.is_zero());
            continue;
          }
          const auto w = make_w(ctx, G.mul(G.inv(g1), g2), Pos{3});
          const auto v = make_v(ctx, G.conj(G.inv(g1), G.inv(h1)), Pos::site(1));
          CHECK(lhs == Rational(1, 6) * (w * v));
        }
}

TEST_CASE("image dimension counts G-orbits of τ_total = e monomials") {
  for (auto [g, h, iv] : {std::tuple{"symmetric:3", "0,3,4", "1/2:2"}, {"cyclic:2", "full", "1/2:3"},
                          {"quaternion8", "center", "1:5/2"}, {"cyclic:4", "0,2", "1:1"}}) {
    const auto ctx = field(g, h, iv);
    std::uint64_t neutral = 0;
    for (Key k = 0; k < ctx->dimension(); ++k)
      if (tau_total(*ctx, ctx->decode(k)) == ctx->group().unit()) ++neutral;
    CHECK(expectation_image(ctx).rank() == neutral / ctx->group().order());
  }
}

TEST_CASE("module algebra and expectation suites pass") {
  for (auto [g, h, iv] : {std::tuple{"cyclic:2", "full", "1/2:2"}, {"symmetric:3", "0,3,4", "1/2:2"},
                          {"cyclic:4", "0,2", "1:2"}}) {
    const auto ctx = field(g, h, iv);
    ModuleOptions mo;
    mo.samples = 150;
    for (const auto& r : verify_module_algebra(ctx, mo)) CHECK_MESSAGE(r.passed(), r.name << ": " << r.message);
    SuiteOptions so;
    so.samples = 60;
    for (const auto& r : verify_expectation_properties(ctx, so))
      CHECK_MESSAGE(r.status != Status::fail, r.name << ": " << r.message);
  }
}

TEST_CASE("fault injection: the oracle rejects a mis-conjugated action") {
  // (h,g)·M with g⁻¹τg in place of gτg⁻¹ differs for non-abelian G
  const auto ctx = field("symmetric:3", "full", "1/2:1");
  const auto& G = ctx->group();
  std::size_t mismatches = 0;
  for (const auto& b : double_basis(ctx->subgroup()))
    for (Key k = 0; k < ctx->dimension(); ++k) {
      const Monomial m = ctx->decode(k);
      FieldElement bent(ctx);
      if (b.h == G.conj(G.inv(b.g), m.tau[0]))
        bent = FieldElement::monomial(ctx, Monomial{{G.mul(b.g, m.sigma[0])}, {b.h}});
      if (!(bent == oracle::act_brute(ctx, b, m))) ++mismatches;
    }
  CHECK(mismatches > 0);
}

TEST_CASE("context mismatch") {
  const auto a = field("symmetric:3", "0,3,4", "1/2:2");
  const auto b = field("symmetric:3", "full", "1/2:2");
  CHECK_THROWS_AS(act(unit(b->subgroup_ptr()), identity(a)), Error);
}
