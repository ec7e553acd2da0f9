#include "doctest.h"

#include "gspin/span.hpp"
#include "support/oracles.hpp"

using namespace gspin;

namespace {

FieldContextPtr small_ctx() {
  return FieldContext::make(parse_subgroup(parse_builtin_group("cyclic:2"), "full"), Interval::half_to(2));
}

FieldElement vec(const FieldContextPtr& ctx, std::vector<std::pair<Key, Rational>> terms) {
  return FieldElement::from_terms(ctx, std::move(terms));
}

/// Rank by dense Gaussian elimination over the rationals.
std::size_t dense_rank(const FieldContextPtr& ctx, const std::vector<FieldElement>& vs) {
  const std::size_t n = ctx->dimension();
  std::vector<std::vector<Rational>> m;
  for (const auto& v : vs) {
    std::vector<Rational> row(n);
    for (const auto& [k, c] : v.terms()) row[k] = c;
    m.push_back(row);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != rank && m[r][col] != 0) {
        const Rational f = m[r][col] / m[rank][col];
        for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[rank][j];
      }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("insert, contains and reduce") {
  const auto ctx = small_ctx();
  SpanBasis s(ctx);
  CHECK(s.rank() == 0);
  CHECK(s.insert(vec(ctx, {{1, 2}, {3, 1}})));
  CHECK(s.insert(vec(ctx, {{3, 1}, {5, 1}})));
  CHECK_FALSE(s.insert(vec(ctx, {{1, 4}, {3, 3}, {5, 1}})));
  CHECK(s.rank() == 2);
  CHECK(s.contains(vec(ctx, {{1, -2}, {5, 1}})));
  CHECK_FALSE(s.contains(vec(ctx, {{5, 1}})));
  CHECK(s.reduce(vec(ctx, {{1, 2}, {3, 1}})).is_zero());
  CHECK_FALSE(s.insert(FieldElement(ctx)));
  // reduced echelon: monic pivots, no row touches another's pivot
  for (const auto& row : s.rows()) {
    CHECK(row.terms().front().second == 1);
    for (const auto& other : s.rows())
      if (&other != &row) CHECK(other.find(row.terms().front().first) == nullptr);
  }
}

TEST_CASE("property: basis is canonical and rank matches dense elimination") {
  const auto ctx = small_ctx();
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<FieldElement> vs;
    std::uniform_int_distribution<int> count(1, 10);
    for (int i = count(rng); i > 0; --i) vs.push_back(oracle::any_element(ctx, rng, 4));
    SpanBasis a(ctx), b(ctx);
    for (const auto& v : vs) a.insert(v);
    // same space from shuffled, rescaled and recombined spanning vectors
    std::vector<FieldElement> ws = vs;
    std::shuffle(ws.begin(), ws.end(), rng);
    for (std::size_t i = 0; i + 1 < ws.size(); ++i) ws[i] += Rational(3) * ws[i + 1];
    for (auto& w : ws) w *= Rational(-2, 5);
    for (const auto& w : ws) b.insert(w);
    CHECK(a.rank() == dense_rank(ctx, vs));
    CHECK(a == b);
    CHECK(a.is_subspace_of(b));
    for (const auto& v : vs) CHECK(a.contains(v));
  }
}

TEST_CASE("strict subspace") {
  const auto ctx = small_ctx();
  SpanBasis a(ctx), b(ctx);
  a.insert(vec(ctx, {{0, 1}}));
  b.insert(vec(ctx, {{0, 1}}));
  b.insert(vec(ctx, {{2, 1}}));
  CHECK(a.is_subspace_of(b));
  CHECK_FALSE(b.is_subspace_of(a));
  CHECK_FALSE(a == b);
}
