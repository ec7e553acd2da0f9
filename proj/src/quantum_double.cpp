#include "gspin/quantum_double.hpp"

#include "gspin/error.hpp"

namespace gspin {

namespace {

void require_same(const SubgroupPtr& a, const SubgroupPtr& b) {
  if (a != b && !a->same_as(*b))
    throw Error(ErrorKind::ContextMismatch, "elements of D(H;G) over different (G,H)");
}

}  // namespace

nlohmann::json to_json(const DoubleBasis& b) { return {{"h", b.h}, {"g", b.g}}; }

DoubleElement::DoubleElement(SubgroupPtr context) : context_(std::move(context)) {}

DoubleElement DoubleElement::basis(SubgroupPtr context, Elem h, Elem g, Rational coeff) {
  if (!context->contains(h))
    throw Error(ErrorKind::NotInH, "label h=" + std::to_string(h) + " is not in H", {{"h", h}});
  if (g >= context->group().order())
    throw Error(ErrorKind::OutOfRange, "g=" + std::to_string(g) + " is not in G", {{"g", g}});
  DoubleElement out(std::move(context));
  out.add({h, g}, coeff);
  return out;
}

Rational DoubleElement::coefficient(const DoubleBasis& b) const {
  const auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

void DoubleElement::add(const DoubleBasis& b, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

DoubleElement& DoubleElement::operator+=(const DoubleElement& other) {
  require_same(context_, other.context_);
  for (const auto& [b, c] : other.terms_) add(b, c);
  return *this;
}

DoubleElement& DoubleElement::operator-=(const DoubleElement& other) {
  require_same(context_, other.context_);
  for (const auto& [b, c] : other.terms_) add(b, -c);
  return *this;
}

DoubleElement& DoubleElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, v] : terms_) v *= c;
  return *this;
}

bool DoubleElement::operator==(const DoubleElement& other) const {
  return (context_ == other.context_ || context_->same_as(*other.context_)) &&
         terms_ == other.terms_;
}

nlohmann::json to_json(const DoubleElement& a) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [b, c] : a.terms()) arr.push_back({{"h", b.h}, {"g", b.g}, {"coeff", to_string(c)}});
  return arr;
}

TensorElement::TensorElement(SubgroupPtr context, std::size_t arity)
    : context_(std::move(context)), arity_(arity) {}

void TensorElement::add(Key key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
  require_same(context_, other.context_);
  if (arity_ != other.arity_)
    throw Error(ErrorKind::ContextMismatch, "tensor arity mismatch");
  for (const auto& [k, c] : other.terms_) add(k, c);
  return *this;
}

bool TensorElement::operator==(const TensorElement& other) const {
  return arity_ == other.arity_ && terms_ == other.terms_;
}

std::optional<DoubleBasis> basis_product(const Subgroup& H, DoubleBasis a, DoubleBasis b) {
  const GroupTable& G = H.group();
  if (G.mul(a.h, a.g) != G.mul(a.g, b.h)) return std::nullopt;
  return DoubleBasis{a.h, G.mul(a.g, b.g)};
}

DoubleElement multiply_with(const BasisProduct& product, const DoubleElement& a,
                            const DoubleElement& b) {
  require_same(a.context(), b.context());
  DoubleElement out(a.context());
  const Subgroup& H = *a.context();
  for (const auto& [ba, ca] : a.terms())
    for (const auto& [bb, cb] : b.terms())
      if (auto p = product(H, ba, bb)) out.add(*p, ca * cb);
  return out;
}

DoubleElement multiply(const DoubleElement& a, const DoubleElement& b) {
  return multiply_with(basis_product, a, b);
}

DoubleElement unit(const SubgroupPtr& context) {
  DoubleElement out(context);
  for (Elem h : context->members()) out.add({h, context->group().unit()}, 1);
  return out;
}

DoubleElement star(const DoubleElement& a) {
  const GroupTable& G = a.context()->group();
  DoubleElement out(a.context());
  for (const auto& [b, c] : a.terms()) {
    const Elem gi = G.inv(b.g);
    out.add({G.conj(gi, b.h), gi}, c);
  }
  return out;
}

TensorElement coproduct(const DoubleElement& a) {
  const Subgroup& H = *a.context();
  const GroupTable& G = H.group();
  TensorElement out(a.context(), 2);
  for (const auto& [b, c] : a.terms())
    for (Elem t : H.members()) out.add({{t, b.g}, {G.mul(G.inv(t), b.h), b.g}}, c);
  return out;
}

Rational counit(const DoubleElement& a) {
  const Elem e = a.context()->group().unit();
  Rational sum = 0;
  for (const auto& [b, c] : a.terms())
    if (b.h == e) sum += c;
  return sum;
}

DoubleElement antipode(const DoubleElement& a) {
  const GroupTable& G = a.context()->group();
  DoubleElement out(a.context());
  for (const auto& [b, c] : a.terms()) {
    const Elem gi = G.inv(b.g);
    out.add({G.conj(gi, G.inv(b.h)), gi}, c);
  }
  return out;
}

TensorElement iterated_coproduct(const DoubleElement& a, std::size_t n) {
  const Subgroup& H = *a.context();
  const GroupTable& G = H.group();
  TensorElement out(a.context(), n + 1);
  std::vector<std::size_t> digits(n, 0);
  for (const auto& [b, c] : a.terms()) {
    std::fill(digits.begin(), digits.end(), 0);
    while (true) {
      TensorElement::Key key;
      key.reserve(n + 1);
      Elem prev = G.unit();
      for (std::size_t i = 0; i < n; ++i) {
        const Elem t = H.member(digits[i]);
        key.push_back({G.mul(G.inv(prev), t), b.g});
        prev = t;
      }
      key.push_back({G.mul(G.inv(prev), b.h), b.g});
      out.add(std::move(key), c);
      std::size_t i = 0;
      while (i < n && ++digits[i] == H.order()) digits[i++] = 0;
      if (i == n) break;
    }
  }
  return out;
}

DoubleElement cointegral(const SubgroupPtr& context) {
  const GroupTable& G = context->group();
  DoubleElement out(context);
  const Rational w(1, static_cast<long>(G.order()));
  for (Elem g = 0; g < G.order(); ++g) out.add({G.unit(), g}, w);
  return out;
}

TensorElement tensor(const DoubleElement& a, const DoubleElement& b) {
  require_same(a.context(), b.context());
  TensorElement out(a.context(), 2);
  for (const auto& [ba, ca] : a.terms())
    for (const auto& [bb, cb] : b.terms()) out.add({ba, bb}, ca * cb);
  return out;
}

TensorElement as_tensor(const DoubleElement& a) {
  TensorElement out(a.context(), 1);
  for (const auto& [b, c] : a.terms()) out.add({b}, c);
  return out;
}

TensorElement multiply(const TensorElement& x, const TensorElement& y, const BasisProduct& product) {
  require_same(x.context(), y.context());
  if (x.arity() != y.arity()) throw Error(ErrorKind::ContextMismatch, "tensor arity mismatch");
  const Subgroup& H = *x.context();
  TensorElement out(x.context(), x.arity());
  TensorElement::Key key(x.arity());
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      bool alive = true;
      for (std::size_t i = 0; i < key.size() && alive; ++i) {
        auto p = product(H, kx[i], ky[i]);
        if (p) key[i] = *p;
        else alive = false;
      }
      if (alive) out.add(key, cx * cy);
    }
  return out;
}

TensorElement expand_factor(const TensorElement& x, std::size_t index,
                            const std::function<TensorElement(const DoubleBasis&)>& f) {
  std::optional<TensorElement> out;
  for (const auto& [k, c] : x.terms()) {
    const TensorElement piece = f(k[index]);
    if (!out) out.emplace(x.context(), x.arity() - 1 + piece.arity());
    for (const auto& [pk, pc] : piece.terms()) {
      TensorElement::Key key;
      key.reserve(out->arity());
      key.insert(key.end(), k.begin(), k.begin() + static_cast<std::ptrdiff_t>(index));
      key.insert(key.end(), pk.begin(), pk.end());
      key.insert(key.end(), k.begin() + static_cast<std::ptrdiff_t>(index) + 1, k.end());
      out->add(std::move(key), c * pc);
    }
  }
  return out ? *out : TensorElement(x.context(), x.arity());
}

DoubleElement contract(const TensorElement& x, const BasisProduct& product, bool reversed) {
  const Subgroup& H = *x.context();
  DoubleElement out(x.context());
  for (const auto& [k, c] : x.terms()) {
    if (k.empty()) continue;
    std::optional<DoubleBasis> acc = reversed ? k.back() : k.front();
    for (std::size_t i = 1; i < k.size() && acc; ++i)
      acc = product(H, *acc, reversed ? k[k.size() - 1 - i] : k[i]);
    if (acc) out.add(*acc, c);
  }
  return out;
}

std::vector<DoubleBasis> double_basis(const Subgroup& H) {
  std::vector<DoubleBasis> out;
  out.reserve(H.order() * H.group().order());
  for (Elem h : H.members())
    for (Elem g = 0; g < H.group().order(); ++g) out.push_back({h, g});
  return out;
}

namespace {

TensorElement map_each_factor(const TensorElement& x,
                              const std::function<DoubleBasis(const DoubleBasis&)>& f,
                              std::optional<std::size_t> only = std::nullopt) {
  TensorElement out(x.context(), x.arity());
  for (const auto& [k, c] : x.terms()) {
    TensorElement::Key key = k;
    for (std::size_t i = 0; i < key.size(); ++i)
      if (!only || *only == i) key[i] = f(key[i]);
    out.add(std::move(key), c);
  }
  return out;
}

DoubleBasis single(const DoubleElement& a) { return a.terms().begin()->first; }

nlohmann::json witness_of(std::initializer_list<std::pair<const char*, DoubleBasis>> items) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, b] : items) j[name] = to_json(b);
  return j;
}

}  // namespace

std::vector<CheckResult> verify_hopf_axioms(const SubgroupPtr& ctx, const BasisProduct& product) {
  const Subgroup& H = *ctx;
  const GroupTable& G = H.group();
  const auto basis = double_basis(H);
  const auto one = unit(ctx);
  const auto z = cointegral(ctx);
  auto mul = [&](const DoubleElement& a, const DoubleElement& b) { return multiply_with(product, a, b); };
  auto elem = [&](const DoubleBasis& b) { return DoubleElement::basis(ctx, b.h, b.g); };
  auto basis_star = [&](const DoubleBasis& b) { return single(star(elem(b))); };
  auto basis_antipode = [&](const DoubleBasis& b) { return single(antipode(elem(b))); };
  auto delta_of = [&](const DoubleBasis& b) { return coproduct(elem(b)); };
  const nlohmann::json dims = {{"dim", basis.size()}, {"order_G", G.order()}, {"order_H", H.order()}};

  std::vector<CheckResult> out;

  // associativity
  {
    std::optional<CheckResult> fail;
    for (const auto& a : basis) {
      for (const auto& b : basis) {
        const auto ab = product(H, a, b);
        for (const auto& c : basis) {
          const auto bc = product(H, b, c);
          const auto left = ab ? product(H, *ab, c) : std::nullopt;
          const auto right = bc ? product(H, a, *bc) : std::nullopt;
          if (left != right) {
            fail = make_fail("associativity", "(ab)c != a(bc)", witness_of({{"a", a}, {"b", b}, {"c", c}}));
            break;
          }
        }
        if (fail) break;
      }
      if (fail) break;
    }
    out.push_back(fail ? *fail : make_pass("associativity", "(ab)c = a(bc) on all basis triples", dims));
  }

  // unit
  {
    std::optional<CheckResult> fail;
    for (const auto& b : basis) {
      const auto x = elem(b);
      if (!(mul(one, x) == x) || !(mul(x, one) == x)) {
        fail = make_fail("unit", "1·a = a·1 = a violated", witness_of({{"a", b}}));
        break;
      }
    }
    out.push_back(fail ? *fail : make_pass("unit", "Σ_h (h,e) is a two-sided unit", dims));
  }

  // coassociativity, and agreement with the closed form of Δ⁽²⁾
  {
    std::optional<CheckResult> fail;
    for (const auto& b : basis) {
      const auto d = delta_of(b);
      const auto left = expand_factor(d, 0, delta_of);
      const auto right = expand_factor(d, 1, delta_of);
      if (!(left == right) || !(left == iterated_coproduct(elem(b), 2))) {
        fail = make_fail("coassociativity", "(Δ⊗id)Δ != (id⊗Δ)Δ", witness_of({{"a", b}}));
        break;
      }
    }
    out.push_back(fail ? *fail : make_pass("coassociativity", "(Δ⊗id)Δ = (id⊗Δ)Δ = Δ⁽²⁾", dims));
  }

  // counit
  {
    std::optional<CheckResult> fail;
    for (const auto& b : basis) {
      const auto d = delta_of(b);
      DoubleElement left(ctx), right(ctx);
      for (const auto& [k, c] : d.terms()) {
        left += counit(elem(k[0])) * c * elem(k[1]);
        right += counit(elem(k[1])) * c * elem(k[0]);
      }
      if (!(left == elem(b)) || !(right == elem(b))) {
        fail = make_fail("counit", "(ε⊗id)Δ = (id⊗ε)Δ = id violated", witness_of({{"a", b}}));
        break;
      }
    }
    out.push_back(fail ? *fail : make_pass("counit", "(ε⊗id)Δ = (id⊗ε)Δ = id", dims));
  }

  // bialgebra
  {
    std::optional<CheckResult> fail;
    if (!(coproduct(one) == tensor(one, one)) || counit(one) != 1)
      fail = make_fail("bialgebra", "Δ(1) = 1⊗1 or ε(1) = 1 violated", nullptr);
    for (std::size_t i = 0; i < basis.size() && !fail; ++i) {
      const auto da = delta_of(basis[i]);
      const auto ea = counit(elem(basis[i]));
      for (const auto& b : basis) {
        const auto ab = mul(elem(basis[i]), elem(b));
        if (!(coproduct(ab) == multiply(da, delta_of(b), product)) ||
            counit(ab) != ea * counit(elem(b))) {
          fail = make_fail("bialgebra", "Δ(ab) = Δ(a)Δ(b) or ε(ab) = ε(a)ε(b) violated",
                           witness_of({{"a", basis[i]}, {"b", b}}));
          break;
        }
      }
    }
    out.push_back(fail ? *fail : make_pass("bialgebra", "Δ and ε are unital algebra maps on all basis pairs", dims));
  }

  // antipode: m(S⊗id)Δ = m(id⊗S)Δ = ε(·)1
  {
    std::optional<CheckResult> fail;
    for (const auto& b : basis) {
      const auto d = delta_of(b);
      const auto expected = counit(elem(b)) * one;
      const auto left = contract(map_each_factor(d, basis_antipode, 0), product);
      const auto right = contract(map_each_factor(d, basis_antipode, 1), product);
      if (!(left == expected) || !(right == expected)) {
        fail = make_fail("antipode", "m(S⊗id)Δ = m(id⊗S)Δ = ε(·)1 violated", witness_of({{"a", b}}));
        break;
      }
    }
    out.push_back(fail ? *fail : make_pass("antipode", "m(S⊗id)Δ = m(id⊗S)Δ = ε(·)1", dims));
  }

  // antipode_square
  {
    std::optional<CheckResult> fail;
    for (const auto& b : basis) {
      const auto s = basis_antipode(b);
      if (basis_antipode(s) != b || basis_star(basis_antipode(basis_star(s))) != b) {
        fail = make_fail("antipode_square", "S² = id or ∗∘S∘∗∘S = id violated", witness_of({{"a", b}}));
        break;
      }
    }
    out.push_back(fail ? *fail : make_pass("antipode_square", "S² = id and ∗∘S∘∗∘S = id", dims));
  }

  // star
  {
    std::optional<CheckResult> fail;
    for (const auto& b : basis) {
      const auto bs = basis_star(b);
      const auto d = delta_of(b);
      if (basis_star(bs) != b || !(delta_of(bs) == map_each_factor(d, basis_star)) ||
          counit(elem(bs)) != counit(elem(b))) {
        fail = make_fail("star", "∗ not involutive or not compatible with Δ, ε", witness_of({{"a", b}}));
        break;
      }
    }
    for (std::size_t i = 0; i < basis.size() && !fail; ++i)
      for (const auto& b : basis) {
        const auto a = elem(basis[i]);
        const auto x = elem(b);
        if (!(star(mul(a, x)) == mul(star(x), star(a)))) {
          fail = make_fail("star", "(ab)* != b*a*", witness_of({{"a", basis[i]}, {"b", b}}));
          break;
        }
      }
    out.push_back(fail ? *fail
                       : make_pass("star", "∗ is an antimultiplicative involution with Δ∘∗ = (∗⊗∗)Δ, ε∘∗ = ε", dims));
  }

  // twisted_antipode: Σ S(a₍₂₎)a₍₁₎ = Σ a₍₂₎S(a₍₁₎) = ε(a)1
  {
    std::optional<CheckResult> fail;
    for (const auto& b : basis) {
      const auto d = delta_of(b);
      const auto expected = counit(elem(b)) * one;
      const auto left = contract(map_each_factor(d, basis_antipode, 1), product, true);
      const auto right = contract(map_each_factor(d, basis_antipode, 0), product, true);
      if (!(left == expected) || !(right == expected)) {
        fail = make_fail("twisted_antipode", "Σ S(a₂)a₁ = Σ a₂S(a₁) = ε(a)1 violated", witness_of({{"a", b}}));
        break;
      }
    }
    out.push_back(fail ? *fail : make_pass("twisted_antipode", "Σ S(a₂)a₁ = Σ a₂S(a₁) = ε(a)1", dims));
  }

  // cointegral
  {
    std::optional<CheckResult> fail;
    if (counit(z) != 1 || !(mul(z, z) == z) || !(star(z) == z))
      fail = make_fail("cointegral", "ε(z) = 1, z² = z or z* = z violated", nullptr);
    for (const auto& b : basis) {
      if (fail) break;
      const auto a = elem(b);
      const auto expected = counit(a) * z;
      if (!(mul(a, z) == expected) || !(mul(z, a) == expected)) {
        fail = make_fail("cointegral", "a·z = z·a = ε(a)z violated", witness_of({{"a", b}}));
      }
    }
    out.push_back(fail ? *fail : make_pass("cointegral", "a·z = z·a = ε(a)z, ε(z) = 1, z² = z = z*", dims));
  }
  return out;
}

}  // namespace gspin
