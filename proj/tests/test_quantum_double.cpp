#include "doctest.h"

#include "gspin/error.hpp"
#include "gspin/quantum_double.hpp"
#include "support/oracles.hpp"

using namespace gspin;

namespace {

SubgroupPtr ctx(const char* group, const char* sub) { return parse_subgroup(parse_builtin_group(group), sub); }

}  // namespace

TEST_CASE("basis product matches the crossed product C(H) ⋊ CG") {
  for (auto [g, h] : {std::pair{"symmetric:3", "0,3,4"}, {"quaternion8", "center"}, {"cyclic:4", "0,2"}}) {
    const auto H = ctx(g, h);
    const auto basis = double_basis(*H);
    for (const auto& a : basis)
      for (const auto& b : basis) {
        const auto A = DoubleElement::basis(H, a.h, a.g), B = DoubleElement::basis(H, b.h, b.g);
        const auto expected = oracle::from_crossed(H, oracle::crossed_multiply(*H, oracle::to_crossed(A), oracle::to_crossed(B)));
        CHECK(A * B == expected);
      }
  }
}

TEST_CASE("structure maps on explicit elements of D(A3;S3)") {
  const auto H = ctx("symmetric:3", "0,3,4");
  const auto& G = H->group();
  // (h,g)* = (g⁻¹hg, g⁻¹) with h = 3, g = 1 (a transposition)
  const auto a = DoubleElement::basis(H, 3, 1);
  const Elem gi = G.inv(1);
  CHECK(star(a) == DoubleElement::basis(H, G.mul(G.mul(gi, 3), 1), gi));
  CHECK(antipode(a) == DoubleElement::basis(H, G.mul(G.mul(gi, G.inv(3)), 1), gi));
  CHECK(counit(a) == 0);
  CHECK(counit(DoubleElement::basis(H, 0, 5)) == 1);
  const auto d = coproduct(a);
  CHECK(d.terms().size() == 3);
  for (const auto& [key, c] : d.terms()) {
    CHECK(c == 1);
    CHECK(key[0].g == 1);
    CHECK(key[1].g == 1);
    CHECK(G.mul(key[0].h, key[1].h) == 3);
  }
  CHECK(unit(H).terms().size() == 3);
  const auto z = cointegral(H);
  CHECK(z.terms().size() == 6);
  CHECK(z.coefficient({0, 2}) == Rational(1, 6));
}

TEST_CASE("labels outside H are rejected") {
  const auto H = ctx("symmetric:3", "0,3,4");
  CHECK_THROWS_AS(DoubleElement::basis(H, 1, 0), Error);
  try {
    DoubleElement::basis(H, 2, 0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInH);
  }
}

TEST_CASE("iterated coproduct equals repeated application of Δ") {
  const auto H = ctx("symmetric:3", "0,3,4");
  auto delta = [&](const DoubleBasis& b) { return coproduct(DoubleElement::basis(H, b.h, b.g)); };
  for (const auto& b : double_basis(*H)) {
    const auto a = DoubleElement::basis(H, b.h, b.g);
    TensorElement t = as_tensor(a);
    for (std::size_t n = 1; n <= 3; ++n) {
      t = expand_factor(t, n - 1, delta);
      CHECK(t == iterated_coproduct(a, n));
    }
  }
}

TEST_CASE("all ten identities hold on the standard contexts") {
  for (auto [g, h] : {std::pair{"cyclic:2", "full"}, {"cyclic:4", "0,2"}, {"symmetric:3", "trivial"},
                      {"symmetric:3", "0,3,4"}, {"quaternion8", "center"}, {"dihedral:3", "full"}}) {
    const auto results = verify_hopf_axioms(ctx(g, h));
    CHECK(results.size() == 10);
    for (const auto& r : results) {
      INFO(g << " " << h << " " << r.name << ": " << r.message);
      CHECK(r.passed());
    }
  }
}

TEST_CASE("a corrupted product is caught with a witness") {
  const auto H = ctx("symmetric:3", "0,3,4");
  // drop the twist: (h₁,g₁)(h₂,g₂) = δ_{h₁,h₂}(h₁,g₁g₂)
  const BasisProduct wrong = [](const Subgroup& S, DoubleBasis a, DoubleBasis b) -> std::optional<DoubleBasis> {
    if (a.h != b.h) return std::nullopt;
    return DoubleBasis{a.h, S.group().mul(a.g, b.g)};
  };
  const auto results = verify_hopf_axioms(H, wrong);
  bool any_fail = false;
  for (const auto& r : results)
    if (!r.passed()) {
      any_fail = true;
      CHECK_FALSE(r.witness.is_null());
    }
  CHECK(any_fail);
}

TEST_CASE("property: algebra laws on random elements") {
  std::mt19937_64 rng(11);
  const auto H = ctx("symmetric:4", "0,7,16,23");  // Klein four-group V4
  for (int n = 0; n < 60; ++n) {
    const auto a = oracle::any_double(H, rng), b = oracle::any_double(H, rng), c = oracle::any_double(H, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(star(a * b) == star(b) * star(a));
    CHECK(antipode(a * b) == antipode(b) * antipode(a));
    CHECK(counit(a * b) == counit(a) * counit(b));
    CHECK(star(star(a)) == a);
    CHECK(unit(H) * a == a);
    CHECK(a * cointegral(H) == counit(a) * cointegral(H));
  }
}
