// Acceptance runner: one [PASS]/[FAIL] line per criterion, details indented
// below it. `acceptance --criterion N` runs a single criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gspin/action.hpp"
#include "gspin/error.hpp"
#include "gspin/matrix_rep.hpp"
#include "gspin/observable.hpp"
#include "gspin/quantum_double.hpp"
#include "gspin/run.hpp"
#include "support/oracles.hpp"

using namespace gspin;

namespace {

class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)) {}

  /// Records one sub-check.
  bool expect(bool ok, const std::string& what) {
    details_.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    ok_ = ok_ && ok;
    return ok;
  }
  void note(const std::string& what) { details_.push_back("     " + what); }
  bool ok() const { return ok_; }
  const std::string& title() const { return title_; }
  const std::vector<std::string>& details() const { return details_; }

 private:
  std::string title_;
  bool ok_ = true;
  std::vector<std::string> details_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

FieldContextPtr field(const char* group, const char* sub, Interval iv) {
  return FieldContext::make(parse_subgroup(parse_builtin_group(group), sub), iv);
}

std::string label(const char* group, const char* sub) { return std::string("(") + group + ", " + sub + ")"; }

std::uint64_t orbit_count(const FieldContext& ctx) {
  std::uint64_t n = 0;
  for (Key k = 0; k < ctx.dimension(); ++k)
    if (tau_total(ctx, ctx.decode(k)) == ctx.group().unit()) ++n;
  return n / ctx.group().order();
}

// ---------------------------------------------------------------------------

void c1(Criterion& c) {
  const auto t0 = Clock::now();
  for (auto [g, h] : {std::pair{"cyclic:2", "full"}, {"cyclic:4", "0,2"}, {"symmetric:3", "trivial"},
                      {"symmetric:3", "0,3,4"}, {"quaternion8", "center"}, {"symmetric:4", "0,3,4,7,8,11,12,15,16,19,20,23"}}) {
    const auto H = parse_subgroup(parse_builtin_group(g), h);
    const auto results = verify_hopf_axioms(H);
    std::string failed;
    for (const auto& r : results)
      if (!r.passed()) failed += " " + r.name;
    c.expect(failed.empty() && results.size() == 10,
             label(g, h) + ": " + std::to_string(results.size()) + " identities" +
                 (failed.empty() ? " pass" : ", failing:" + failed));
  }
  const double s = seconds_since(t0);
  c.expect(s < 30.0, "total runtime " + fmt_seconds(s) + " < 30s");
}

void c2(Criterion& c) {
  const auto S3 = parse_builtin_group("symmetric:3");
  try {
    parse_subgroup(S3, "0,2");
    c.expect(false, "{e,(12)} accepted");
  } catch (const Error& e) {
    c.expect(e.kind() == ErrorKind::NotNormal, std::string("rejected with ") + std::string(to_string(e.kind())));
    const auto& w = e.witness();
    const bool valid = w.contains("g") && w.contains("h") && w.contains("conjugate") &&
                       (w["h"] == 0 || w["h"] == 2) && w["conjugate"] != 0 && w["conjugate"] != 2 &&
                       S3->conj(w["g"].get<Elem>(), w["h"].get<Elem>()) == w["conjugate"].get<Elem>();
    c.expect(valid, "conjugation witness " + w.dump());
  }
}

void c3(Criterion& c) {
  const auto ctx = field("symmetric:3", "0,3,4", Interval::half_to(2));
  const auto letters = oracle::alphabet(*ctx);
  std::vector<FieldElement> gens;
  for (const auto& l : letters)
    gens.push_back(l.delta ? generator_delta(ctx, l.label, l.pos) : generator_rho(ctx, l.label, l.pos));
  std::size_t words = 0, mismatches = 0;
  oracle::Word word;
  std::function<void(const FieldElement&, int)> walk = [&](const FieldElement& prefix, int depth) {
    if (depth == 4) return;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      word.push_back(letters[i]);
      const FieldElement p = prefix * gens[i];
      ++words;
      if (p != oracle::expand(ctx, oracle::normalize(ctx->group(), word))) ++mismatches;
      walk(p, depth + 1);
      word.pop_back();
    }
  };
  walk(identity(ctx), 0);
  c.expect(mismatches == 0 && words == 111150,
           "(S3, A3) [1/2,2]: " + std::to_string(words) + " products of ≤4 generators vs rewriting, " +
               std::to_string(mismatches) + " mismatches");

  const ConfigSpace space(ctx);
  std::mt19937_64 rng(3);
  std::size_t bad = 0;
  const std::size_t pairs = 500;
  for (std::size_t n = 0; n < pairs; ++n) {
    const auto A = FieldElement::monomial(ctx, oracle::any_monomial(*ctx, rng));
    const auto B = FieldElement::monomial(ctx, oracle::any_monomial(*ctx, rng));
    if (represent<Rational>(space, A * B) != represent<Rational>(space, A) * represent<Rational>(space, B)) ++bad;
  }
  c.expect(bad == 0, std::to_string(pairs) + " random basis pairs: π(AB) = π(A)π(B) exactly, " +
                         std::to_string(bad) + " mismatches");

  std::uint64_t counted = 0;
  for (Key k = 0; k < ctx->dimension(); ++k)
    if (ctx->encode(ctx->decode(k)) == k) ++counted;
  const std::uint64_t formula = 6 * 6 * 3 * 3;
  const std::size_t rank = representation_rank(space);
  c.expect(counted == formula && ctx->dimension() == formula && rank == formula,
           "dim = |G|^2|H|^2 = " + std::to_string(formula) + "; basis count " + std::to_string(counted) +
               ", representation rank " + std::to_string(rank));
}

void c4(Criterion& c) {
  auto grid = [&](const char* g, const char* h, std::size_t expected_pairs) {
    const auto ctx = field(g, h, Interval::half_to(2));
    std::size_t pairs = 0, bad = 0;
    for (const auto& b : double_basis(ctx->subgroup()))
      for (Key k = 0; k < ctx->dimension(); ++k) {
        const auto m = ctx->decode(k);
        const auto closed = act_basis(ctx, b, m);
        const auto chain = act_coproduct(DoubleElement::basis(ctx->subgroup_ptr(), b.h, b.g),
                                         FieldElement::monomial(ctx, m));
        if (closed != chain || closed != oracle::act_brute(ctx, b, m)) ++bad;
        ++pairs;
      }
    c.expect(bad == 0 && pairs == expected_pairs,
             label(g, h) + " [1/2,2]: full grid of " + std::to_string(pairs) +
                 " (a, M) pairs, closed form = coproduct chain = brute force; " + std::to_string(bad) + " mismatches");
  };
  grid("cyclic:2", "full", 64);
  grid("symmetric:3", "0,3,4", 5832);

  const auto ctx = field("symmetric:3", "0,3,4", Interval::half_to(2));
  std::mt19937_64 rng(4);
  std::size_t bad = 0;
  for (int n = 0; n < 2000; ++n) {
    const auto a = oracle::any_double(ctx->subgroup_ptr(), rng);
    const auto f = oracle::any_element(ctx, rng, 3);
    if (act(a, f) != act_coproduct(a, f)) ++bad;
  }
  c.expect(bad == 0, "(S3, A3): 2000 random (element, element) pairs, " + std::to_string(bad) + " mismatches");

  for (auto [g, h] : {std::pair{"cyclic:2", "full"}, {"symmetric:3", "0,3,4"}}) {
    ModuleOptions mo;
    mo.samples = 2000;
    for (const auto& r : verify_module_algebra(field(g, h, Interval::half_to(2)), mo))
      c.expect(r.passed(), label(g, h) + " " + r.name + ": " + r.message +
                               (r.data.contains("checked") ? " (" + r.data["checked"].dump() + " cases)" : ""));
  }
}

void c5(Criterion& c) {
  for (auto [g, h] : {std::pair{"symmetric:3", "0,3,4"}, {"cyclic:2", "full"}}) {
    const auto ctx = field(g, h, Interval::half_to(2));
    SuiteOptions so;
    so.samples = 200;
    so.tol = 1e-9;
    for (const auto& r : verify_expectation_properties(ctx, so)) {
      std::string extra;
      if (r.data.contains("triples")) extra = " (" + r.data["triples"].dump() + " triples)";
      if (r.data.contains("samples")) extra = " (" + r.data["samples"].dump() + " samples)";
      if (r.data.contains("monomials")) extra = " (" + r.data["monomials"].dump() + " monomials)";
      bool ok = r.passed();
      if (r.name == "expectation.bimodular") ok = ok && r.data.value("triples", 0) >= 200;
      if (r.name == "expectation.positive") ok = ok && r.data.value("samples", 0) >= 50;
      c.expect(ok, label(g, h) + " " + r.name + ": " + r.message + extra);
    }
  }
}

void c6(Criterion& c) {
  const auto t0 = Clock::now();
  for (auto [g, h] : {std::pair{"symmetric:3", "0,3,4"}, {"cyclic:2", "full"}})
    for (int m : {2, 3}) {
      const auto ctx = field(g, h, Interval::half_to(m));
      const auto r = verify_invariant_subalgebra(ctx);
      const auto expected = orbit_count(*ctx);
      const bool ok = r.passed() && r.data["image_rank"] == expected && r.data["generated_rank"] == expected;
      c.expect(ok, label(g, h) + " m=" + std::to_string(m) + ": image rank " + r.data["image_rank"].dump() +
                       ", generated rank " + r.data["generated_rank"].dump() + ", orbit count " +
                       std::to_string(expected) + (r.passed() ? ", spans equal" : ", " + r.message));
    }
  const double s = seconds_since(t0);
  c.expect(s < 120.0, "runtime " + fmt_seconds(s) + " < 2 min");
}

void c7(Criterion& c) {
  for (auto [g, h, expected] : {std::tuple{"cyclic:2", "full", 4}, {"cyclic:4", "0,2", 8}, {"symmetric:3", "0,3,4", 18},
                                {"symmetric:3", "trivial", 6}, {"quaternion8", "center", 16},
                                {"symmetric:3", "full", 36}}) {
    const auto t0 = Clock::now();
    for (int m : {2, 3}) {
      const auto ctx = field(g, h, Interval::half_to(m));
      const auto fam = standard_family(ctx, Pos::site(1));
      const auto check = check_quasi_basis(ctx, fam);
      std::string msg = label(g, h) + " [1/2," + std::to_string(m) + "]: quasi-basis on " +
                        std::to_string(check.checked) + " monomials " + (check.passed() ? "holds" : "FAILS");
      bool ok = check.passed() && check.checked == ctx->dimension();
      if (check.passed()) {
        const auto index = compute_index(fam, check);
        const auto scalar = identity_multiple(index);
        ok = ok && scalar == Rational(expected) && is_central(index);
        msg += ", index " + (scalar ? to_string(*scalar) + "·I" : std::string("not scalar")) + ", expected " +
               std::to_string(expected) + "·I";
      }
      c.expect(ok, msg);
    }
    const double s = seconds_since(t0);
    c.expect(s < 120.0, label(g, h) + " runtime " + fmt_seconds(s) + " < 2 min");
  }
}

/// δ_x(1)ρ_y(½) paired with δ_x(1)ρ_{y⁻¹}(½) in place of its adjoint.
QuasiFamily commuted_partner_family(const FieldContextPtr& ctx) {
  const auto& G = ctx->group();
  std::vector<std::pair<FieldElement, FieldElement>> pairs;
  for (Elem x = 0; x < G.order(); ++x)
    for (Elem y : ctx->subgroup().members()) {
      const auto d = generator_delta(ctx, x, Pos::site(1));
      pairs.emplace_back(d * generator_rho(ctx, y, Pos{1}), d * generator_rho(ctx, G.inv(y), Pos{1}));
    }
  return custom_family("commuted-partner", std::move(pairs), Rational(static_cast<long>(G.order())));
}

/// weight·Σ u z(u′a) (or the right-hand identity) by rewriting and the
/// brute-force cointegral action.
FieldElement brute_side(const FieldContextPtr& ctx, const QuasiFamily& fam, const Monomial& m, bool left) {
  const auto z = cointegral(ctx->subgroup_ptr());
  const auto a = FieldElement::monomial(ctx, m);
  FieldElement out(ctx);
  for (const auto& [u, up] : fam.pairs)
    out += left ? oracle::word_multiply(u, oracle::act_brute(z, oracle::word_multiply(up, a)))
                : oracle::word_multiply(oracle::act_brute(z, oracle::word_multiply(a, u)), up);
  return fam.weight * out;
}

void c8(Criterion& c) {
  for (auto [g, h] : {std::pair{"cyclic:2", "full"}, {"symmetric:3", "0,3,4"}}) {
    const auto wide = field(g, h, Interval::half_to(3));
    const auto r12 = check_quasi_basis(wide, shifted_family(wide, Pos::site(1), Pos::site(2)));
    c.expect(r12.passed(), label(g, h) + " k=1,l=2 on [1/2,3]: passes on " + std::to_string(r12.checked) +
                               " monomials");
  }
  for (auto [g, h] : {std::pair{"cyclic:2", "full"}, {"symmetric:3", "0,3,4"}}) {
    const auto ctx = field(g, h, Interval::half_to(2));
    const auto& G = ctx->group();
    const auto fam = shifted_family(ctx, Pos::site(1), Pos::site(0));
    const auto r10 = check_quasi_basis(ctx, fam);
    if (r10.passed()) {
      c.expect(false, label(g, h) + " k=1,l=0 on [1/2,2] with (u, u*) pairs: expected failure, but both identities "
                                    "hold on all " + std::to_string(r10.checked) + " monomials");
    } else {
      const bool agrees = *r10.lhs == brute_side(ctx, fam, *r10.counterexample, r10.side == "left");
      c.expect(agrees, label(g, h) + " k=1,l=0 on [1/2,2]: fails at " + to_json(*ctx, *r10.counterexample).dump() +
                           ", lhs matches brute force");
    }

    // the same positions with partner δ_x(1)ρ_{y⁻¹}(½) instead of the adjoint
    const auto commuted = commuted_partner_family(ctx);
    const auto rc = check_quasi_basis(ctx, commuted);
    if (rc.passed()) {
      c.expect(false, label(g, h) + " commuted partner: unexpectedly a quasi-basis");
      continue;
    }
    c.expect(*rc.lhs == brute_side(ctx, commuted, *rc.counterexample, rc.side == "left"),
             label(g, h) + " commuted partner δ_x(1)ρ_{y⁻¹}(½): fails at " +
                 to_json(*ctx, *rc.counterexample).dump() + " (" + rc.side + "), lhs matches brute force");
    std::size_t matches = 0;
    for (Key k = 0; k < ctx->dimension(); ++k) {
      const Monomial m = ctx->decode(k);
      const Elem g1 = m.sigma[0], g2 = m.sigma[1], h1 = m.tau[0], h2 = m.tau[1];
      const Elem p = G.inv(G.mul(h1, h2));
      // δ_{h₂⁻¹h₁⁻¹g₁}(1)δ_{h₂⁻¹h₁⁻¹g₂}(2)ρ_{h₂⁻¹h₁h₂}(½)ρ_{h₂⁻¹h₁⁻¹h₂h₁h₂}(3/2)
      const Monomial display{{G.mul(p, g1), G.mul(p, g2)},
                             {G.mul(G.mul(G.inv(h2), h1), h2), G.mul(G.mul(p, h2), G.mul(h1, h2))}};
      if (quasi_left(commuted, FieldElement::monomial(ctx, m)) == FieldElement::monomial(ctx, display)) ++matches;
    }
    c.expect(matches == ctx->dimension(), label(g, h) + " commuted partner: left side equals the mismatch monomial "
                                          "δ_{h₂⁻¹h₁⁻¹g₁}(1)δ_{h₂⁻¹h₁⁻¹g₂}(2)ρ_{h₂⁻¹h₁h₂}(½)ρ_{h₂⁻¹h₁⁻¹h₂h₁h₂}(3/2) on " +
                                          std::to_string(matches) + "/" + std::to_string(ctx->dimension()) +
                                          " monomials");
  }
}

void c9(Criterion& c) {
  const auto S3 = parse_builtin_group("symmetric:3");
  const auto Z4 = parse_builtin_group("cyclic:4");
  for (auto [name, small, large] :
       {std::tuple{"{e} ⊂ A3 in S3", trivial_subgroup(S3), parse_subgroup(S3, "0,3,4")},
        {"{0,2} ⊂ Z4", parse_subgroup(Z4, "0,2"), full_subgroup(Z4)}})
    for (int m : {2, 3}) {
      const auto r = check_monotonicity(small, large, Interval::half_to(m));
      c.expect(r.included && r.strict && r.rank_small < r.rank_large,
               std::string(name) + " [1/2," + std::to_string(m) + "]: rank " + std::to_string(r.rank_small) +
                   " → " + std::to_string(r.rank_large) + (r.included ? ", included" : ", NOT included") +
                   (r.strict ? ", strict" : ", not strict"));
    }
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void c10(Criterion& c) {
  const auto dir = std::filesystem::temp_directory_path();
  std::vector<std::string> outputs;
  for (int n = 0; n < 2; ++n) {
    const auto path = dir / ("gspin_acceptance_" + std::to_string(n) + ".json");
    std::filesystem::remove(path);
    const std::string cmd = std::string(GSPIN_CLI) + " report --group symmetric:3 --subgroup 0,3,4 --output " +
                            path.string() + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    c.expect(rc == 0, "run " + std::to_string(n + 1) + " of the full (S3, A3) suite exits 0");
    outputs.push_back(slurp(path));
  }
  const bool same = !outputs[0].empty() && outputs[0] == outputs[1];
  c.expect(same, "reports byte-identical (" + std::to_string(outputs[0].size()) + " bytes)");
  if (!outputs[0].empty()) {
    const auto j = nlohmann::json::parse(outputs[0]);
    c.note("report: " + j["summary"].dump() + ", index_scalar " + j.value("index_scalar", std::string("-")));
  }
}

struct Entry {
  int number;
  const char* title;
  void (*body)(Criterion&);
};

const Entry kCriteria[] = {
    {1, "Hopf axiom suite on six contexts", c1},
    {2, "normality gate", c2},
    {3, "field algebra vs rewriting and matrix oracles", c3},
    {4, "action consistency and module-algebra axioms", c4},
    {5, "conditional expectation properties", c5},
    {6, "invariant subalgebra equals generated algebra", c6},
    {7, "quasi-basis and Index z_H = |G||H|·I", c7},
    {8, "shifted families: k=1,l=2 passes, k=1,l=0 fails", c8},
    {9, "monotonicity in H", c9},
    {10, "deterministic JSON reports", c10},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  if (only < 0 || only > 10) {
    std::cerr << "criterion must be 1..10\n";
    return 2;
  }
  bool all_ok = true;
  for (const auto& e : kCriteria) {
    if (only && e.number != only) continue;
    Criterion c(e.title);
    const auto t0 = Clock::now();
    try {
      e.body(c);
    } catch (const Error& err) {
      c.expect(false, std::string("error ") + std::string(to_string(err.kind())) + ": " + err.what());
    } catch (const std::exception& err) {
      c.expect(false, std::string("exception: ") + err.what());
    }
    std::cout << (c.ok() ? "[PASS]" : "[FAIL]") << " C" << e.number << " " << c.title() << " ("
              << fmt_seconds(seconds_since(t0)) << ")\n";
    for (const auto& d : c.details()) std::cout << "       " << d << "\n";
    std::cout.flush();
    all_ok = all_ok && c.ok();
  }
  return all_ok ? 0 : 1;
}
