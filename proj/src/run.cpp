#include "gspin/run.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "gspin/action.hpp"
#include "gspin/matrix_rep.hpp"
#include "gspin/observable.hpp"
#include "gspin/quantum_double.hpp"
#include "gspin/relations.hpp"

namespace gspin {

const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> names = {"hopf",       "rep-oracle",           "module-algebra",
                                                 "expectation", "invariant-subalgebra", "quasi-basis",
                                                 "index",       "monotonicity"};
  return names;
}

namespace {

CheckResult skipped(std::string name, std::string why) {
  CheckResult r = make_pass(std::move(name), std::move(why));
  r.status = Status::skipped;
  return r;
}

std::string scalar_text(const Rational& c) {
  if (denominator(c) == 1) return numerator(c).str();
  return to_string(c);
}

/// Dense exact products stay cheap up to this configuration dimension.
constexpr std::size_t kExactRepLimit = 64;
constexpr std::size_t kRepLimit = 1024;
constexpr std::uint64_t kFaithfulLimit = 50000;

template <typename Scalar>
bool rep_multiplicative(const ConfigSpace& space, const FieldElement& a, const FieldElement& b) {
  return represent<Scalar>(space, a * b) == represent<Scalar>(space, a) * represent<Scalar>(space, b);
}

void run_rep_oracle(const FieldContextPtr& ctx, const RunConfig& config, std::vector<CheckResult>& out) {
  out.push_back(verify_field_relations(ctx));

  out.push_back(timed([&] {
    std::mt19937_64 rng(config.seed);
    std::uniform_int_distribution<Key> pick(0, ctx->dimension() - 1);
    for (std::size_t n = 0; n < config.samples; ++n) {
      const Key k[3] = {pick(rng), pick(rng), pick(rng)};
      const FieldElement a = FieldElement::from_terms(ctx, {{k[0], Rational(1)}});
      const FieldElement b = FieldElement::from_terms(ctx, {{k[1], Rational(1)}});
      const FieldElement c = FieldElement::from_terms(ctx, {{k[2], Rational(1)}});
      const FieldElement ab = a * b;
      if (ab.size() > 1 || (a * b) * c != a * (b * c))
        return make_fail("field.associativity", "basis product not multiplicity-free or not associative",
                         {to_json(*ctx, ctx->decode(k[0])), to_json(*ctx, ctx->decode(k[1])),
                          to_json(*ctx, ctx->decode(k[2]))});
    }
    return make_pass("field.associativity", "basis products are 0 or one monomial and associative",
                     {{"triples", config.samples}});
  }));

  const ConfigSpace space(ctx);
  if (space.dimension() > kRepLimit) {
    for (const char* name : {"rep.relations", "rep.multiply", "rep.star", "rep.faithful"})
      out.push_back(skipped(name, "configuration space of dimension " + std::to_string(space.dimension()) +
                                      " exceeds the representation limit"));
    return;
  }
  out.push_back(verify_rep_relations(space));

  out.push_back(timed([&] {
    std::mt19937_64 rng(config.seed + 1);
    std::uniform_int_distribution<Key> pick(0, ctx->dimension() - 1);
    const bool exact = space.dimension() <= kExactRepLimit;
    for (std::size_t n = 0; n < config.samples; ++n) {
      const Key ka = pick(rng), kb = pick(rng);
      const FieldElement a = FieldElement::from_terms(ctx, {{ka, Rational(1)}});
      const FieldElement b = FieldElement::from_terms(ctx, {{kb, Rational(1)}});
      const bool ok = exact ? rep_multiplicative<Rational>(space, a, b) : rep_multiplicative<double>(space, a, b);
      if (!ok)
        return make_fail("rep.multiply", "π(MM′) ≠ π(M)π(M′)",
                         {to_json(*ctx, ctx->decode(ka)), to_json(*ctx, ctx->decode(kb))});
    }
    return make_pass("rep.multiply", "π(MM′) = π(M)π(M′) on random basis pairs",
                     {{"pairs", config.samples}, {"scalar", exact ? "rational" : "double (0/1 entries)"}});
  }));

  out.push_back(timed([&] {
    std::mt19937_64 rng(config.seed + 2);
    for (std::size_t n = 0; n < std::min<std::size_t>(config.samples, 50); ++n) {
      const FieldElement f = random_element(ctx, rng);
      if (represent<Rational>(space, star(f)) != represent<Rational>(space, f).transpose())
        return make_fail("rep.star", "π(F*) ≠ π(F)ᵀ", to_json(f));
    }
    return make_pass("rep.star", "π(F*) = π(F)ᵀ on random elements");
  }));

  out.push_back(timed([&] {
    if (ctx->dimension() > kFaithfulLimit)
      return skipped("rep.faithful", "too many monomials for the exact rank");
    const std::size_t rank = representation_rank(space);
    const nlohmann::json data = {{"rank", rank}, {"dimension", ctx->dimension()}};
    if (rank == ctx->dimension())
      return make_pass("rep.faithful", "rank of monomial images = dim F_H(Λ) = " + std::to_string(rank), data);
    return make_fail("rep.faithful", "monomial images are linearly dependent", data, data);
  }));
}

nlohmann::json monomial_witness(const FieldContext& ctx, const QuasiBasisResult& r) {
  nlohmann::json w = {{"side", r.side}};
  if (r.counterexample) w["monomial"] = to_json(ctx, *r.counterexample);
  if (r.lhs) w["lhs"] = to_json(*r.lhs);
  return w;
}

}  // namespace

Report run(const RunConfig& config) {
  for (const auto& c : config.checks)
    if (std::find(all_checks().begin(), all_checks().end(), c) == all_checks().end())
      throw Error(ErrorKind::ConfigError, "unknown check '" + c + "'");
  if (config.family != "std" && config.family != "shifted")
    throw Error(ErrorKind::ConfigError, "family must be std or shifted, got '" + config.family + "'");

  const GroupPtr G = config.group_file ? load_group_file(*config.group_file) : parse_builtin_group(config.group);
  const SubgroupPtr H = parse_subgroup(G, config.subgroup);
  const Interval iv = Interval::parse(config.interval);
  const FieldContextPtr ctx = FieldContext::make(H, iv, config.cap);

  auto wanted = [&](const std::string& name) {
    return config.checks.empty() || std::find(config.checks.begin(), config.checks.end(), name) != config.checks.end();
  };

  // Family positions are validated up front so a bad k or l is a context error.
  std::optional<QuasiFamily> family;
  Pos k{}, l{};
  if (wanted("quasi-basis") || wanted("index")) {
    if (config.k) {
      k = parse_pos(*config.k);
    } else {
      const auto& sites = ctx->sites();
      auto it = std::find_if(sites.begin(), sites.end(), [&](Pos s) { return ctx->link_index(s.shifted(1)).has_value(); });
      if (it == sites.end())
        throw Error(ErrorKind::OutOfInterval, "no site k with k+1/2 in " + to_string(iv));
      k = *it;
    }
    l = config.l ? parse_pos(*config.l) : k;
    family = config.family == "std" ? standard_family(ctx, k) : shifted_family(ctx, k, l);
  }

  Report report;
  report.group = {{"name", G->name()}, {"order", G->order()}};
  report.subgroup = {{"members", std::vector<Elem>(H->members().begin(), H->members().end())},
                     {"order", H->order()}};
  report.interval = to_string(iv);
  if (family)
    report.family = {{"kind", config.family}, {"label", family->label}, {"k", to_string(k)},
                     {"l", to_string(l)}, {"weight", to_string(family->weight)}, {"size", family->pairs.size()}};
  auto& out = report.checks;

  if (wanted("hopf"))
    for (auto r : verify_hopf_axioms(H)) {
      r.name = "hopf." + r.name;
      out.push_back(std::move(r));
    }

  if (wanted("rep-oracle")) run_rep_oracle(ctx, config, out);

  if (wanted("module-algebra")) {
    ModuleOptions options;
    options.samples = config.samples;
    options.seed = config.seed;
    options.tol = config.tol;
    for (auto& r : verify_module_algebra(ctx, options)) out.push_back(std::move(r));
  }

  if (wanted("expectation")) {
    SuiteOptions options{config.samples, config.seed, config.tol};
    for (auto& r : verify_expectation_properties(ctx, options)) out.push_back(std::move(r));
  }

  if (wanted("invariant-subalgebra")) {
    if (!iv.starts_at_link() || !iv.ends_at_site() || iv.lo2 + 1 > iv.hi2)
      out.push_back(skipped("invariant_subalgebra", "IntervalShapeError: interval " + to_string(iv) +
                                                        " must start at a link and end at a site"));
    else
      out.push_back(verify_invariant_subalgebra(ctx));
  }

  std::optional<QuasiBasisResult> qb;
  double qb_seconds = 0.0;
  if (family && (wanted("quasi-basis") || wanted("index"))) {
    CheckResult r = timed([&] {
      qb = check_quasi_basis(ctx, *family);
      return CheckResult{};
    });
    qb_seconds = r.seconds;
  }
  const bool asserted = iv.starts_at_link();

  if (wanted("quasi-basis") && qb) {
    nlohmann::json data = {{"family", family->label}, {"checked", qb->checked}, {"failures", qb->failures},
                           {"left_ok", qb->left_ok}, {"right_ok", qb->right_ok}};
    CheckResult r;
    if (qb->passed()) {
      r = make_pass("quasi_basis", "c·Σ u z(u*a) = a = c·Σ z(au) u* on all " + std::to_string(qb->checked) +
                                       " basis monomials", data);
    } else if (!asserted) {
      data["witness"] = monomial_witness(*ctx, *qb);
      r = skipped("quasi_basis", "fails, but intervals starting at a site are reported only");
      r.data = data;
    } else {
      r = make_fail("quasi_basis", "quasi-basis identity violated on " + std::to_string(qb->failures) +
                                       " basis monomials", monomial_witness(*ctx, *qb), data);
    }
    r.seconds = qb_seconds;
    out.push_back(std::move(r));
  }

  if (wanted("index") && qb) {
    out.push_back(timed([&] {
      if (!qb->passed())
        return make_fail("index", "NotAQuasiBasis: family " + family->label + " is not a quasi-basis; no index",
                         monomial_witness(*ctx, *qb));
      const FieldElement index = compute_index(*family, *qb);
      const auto c = identity_multiple(index);
      const Rational expected(static_cast<long>(G->order() * H->order()));
      nlohmann::json data = {{"expected", to_string(expected)}};
      if (!c) return make_fail("index", "index is not a multiple of I", to_json(index), data);
      report.index_scalar = to_string(*c);
      data["index_scalar"] = to_string(*c);
      if (*c != expected)
        return make_fail("index", "Index z_H = " + scalar_text(*c) + " · I, expected |G||H| = " + scalar_text(expected),
                         {{"index_scalar", to_string(*c)}}, data);
      if (!is_central(index)) return make_fail("index", "index is not central", {{"index_scalar", to_string(*c)}}, data);
      return make_pass("index", "Index z_H = " + scalar_text(*c) + " · I = |G||H|·I, central", data);
    }));
  }

  if (wanted("monotonicity")) {
    out.push_back(timed([&] {
      const SubgroupPtr small = parse_subgroup(G, config.monotone_from);
      if (!small->is_subset_of(*H))
        throw Error(ErrorKind::NotASubgroup, "monotone-from subgroup is not contained in H");
      if (small->same_as(*H) && H->order() == 1) return skipped("monotonicity", "H is trivial; nothing below it");
      const MonotonicityResult m = check_monotonicity(small, H, iv, config.cap);
      const nlohmann::json data = {{"from", std::vector<Elem>(small->members().begin(), small->members().end())},
                                   {"rank_small", m.rank_small},
                                   {"rank_large", m.rank_large},
                                   {"included", m.included},
                                   {"strict", m.strict}};
      if (m.strict)
        return make_pass("monotonicity", "rank " + std::to_string(m.rank_small) + " ⊊ rank " +
                                             std::to_string(m.rank_large), data);
      return make_fail("monotonicity", m.included ? "inclusion is not strict" : "image is not included", data, data);
    }));
  }
  return report;
}

nlohmann::json to_json(const Report& report, bool include_timing) {
  std::size_t passed = 0, failed = 0, skipped_n = 0;
  for (const auto& c : report.checks) {
    if (c.status == Status::pass) ++passed;
    else if (c.status == Status::fail) ++failed;
    else ++skipped_n;
  }
  nlohmann::json j = {{"schema", 1},
                      {"group", report.group},
                      {"subgroup", report.subgroup},
                      {"interval", report.interval},
                      {"checks", to_json(std::span<const CheckResult>(report.checks), include_timing)},
                      {"summary",
                       {{"passed", passed}, {"failed", failed}, {"skipped", skipped_n},
                        {"status", failed == 0 ? "pass" : "fail"}}}};
  if (!report.family.is_null()) j["family"] = report.family;
  if (report.index_scalar) j["index_scalar"] = *report.index_scalar;
  return j;
}

std::string to_text(const Report& report) {
  std::ostringstream os;
  os << "group " << report.group["name"].get<std::string>() << " (order " << report.group["order"] << "), H = {";
  const auto& members = report.subgroup["members"];
  for (std::size_t i = 0; i < members.size(); ++i) os << (i ? "," : "") << members[i];
  os << "}, Λ = " << report.interval << "\n";
  std::size_t failed = 0;
  for (const auto& c : report.checks) {
    const char* tag = c.status == Status::pass ? "PASS" : c.status == Status::fail ? "FAIL" : "SKIP";
    if (c.status == Status::fail) ++failed;
    os << "[" << tag << "] " << c.name << ": " << c.message << "\n";
    if (c.status == Status::fail && !c.witness.is_null()) os << "       witness: " << c.witness.dump() << "\n";
  }
  if (report.index_scalar) os << "Index z_H = " << scalar_text(parse_rational(*report.index_scalar)) << " · I\n";
  os << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed") << "\n";
  return os.str();
}

nlohmann::json error_json(const Error& error) {
  nlohmann::json e = {{"kind", std::string(to_string(error.kind()))}, {"message", error.what()}};
  if (!error.witness().is_null()) e["witness"] = error.witness();
  return {{"schema", 1}, {"error", e}};
}

}  // namespace gspin
