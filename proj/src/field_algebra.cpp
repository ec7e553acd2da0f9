#include "gspin/field_algebra.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "gspin/error.hpp"

namespace gspin {

std::string to_string(Pos p) {
  if (p.is_site()) return std::to_string(p.twice / 2);
  return std::to_string(p.twice) + "/2";
}

Pos parse_pos(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
      throw Error(ErrorKind::ConfigError, "bad position '" + std::string(text) + "'");
    return v;
  };
  if (slash == std::string_view::npos) return Pos::site(parse_int(text));
  if (text.substr(slash + 1) != "2")
    throw Error(ErrorKind::ConfigError, "position '" + std::string(text) + "' is not in ½ℤ");
  const int num = parse_int(text.substr(0, slash));
  return Pos::from_twice(num);
}

Interval Interval::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorKind::ConfigError, "interval '" + std::string(text) + "' must be lo:hi");
  const Pos lo = parse_pos(text.substr(0, colon));
  const Pos hi = parse_pos(text.substr(colon + 1));
  if (lo.twice > hi.twice)
    throw Error(ErrorKind::ConfigError, "interval '" + std::string(text) + "' is empty");
  return Interval{lo.twice, hi.twice};
}

std::vector<Pos> Interval::sites() const {
  std::vector<Pos> out;
  for (int t = lo2; t <= hi2; ++t)
    if (Pos{t}.is_site()) out.push_back(Pos{t});
  return out;
}

std::vector<Pos> Interval::links() const {
  std::vector<Pos> out;
  for (int t = lo2; t <= hi2; ++t)
    if (Pos{t}.is_link()) out.push_back(Pos{t});
  return out;
}

std::string to_string(const Interval& iv) {
  return to_string(Pos{iv.lo2}) + ":" + to_string(Pos{iv.hi2});
}

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    out *= base;
  }
  return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

}  // namespace

std::uint64_t field_dimension(std::size_t order_G, std::size_t order_H, const Interval& iv) {
  return saturating_mul(saturating_pow(order_G, iv.sites().size()),
                        saturating_pow(order_H, iv.links().size()));
}

FieldContext::FieldContext(SubgroupPtr subgroup, Interval interval)
    : subgroup_(std::move(subgroup)),
      interval_(interval),
      sites_(interval.sites()),
      links_(interval.links()) {
  links_before_site_.reserve(sites_.size());
  for (const Pos s : sites_)
    links_before_site_.push_back(static_cast<std::size_t>(
        std::count_if(links_.begin(), links_.end(), [&](Pos l) { return l < s; })));
  sigma_count_ = saturating_pow(subgroup_->group().order(), sites_.size());
  tau_count_ = saturating_pow(subgroup_->order(), links_.size());
}

FieldContextPtr FieldContext::make(SubgroupPtr subgroup, Interval interval, std::uint64_t cap) {
  if (interval.lo2 > interval.hi2)
    throw Error(ErrorKind::ConfigError, "empty interval " + to_string(interval));
  const auto dim = field_dimension(subgroup->group().order(), subgroup->order(), interval);
  if (dim > cap)
    throw Error(ErrorKind::DimensionCap,
                "dim F_H(" + to_string(interval) + ") = " +
                    (dim == std::numeric_limits<std::uint64_t>::max() ? std::string("overflow")
                                                                      : std::to_string(dim)) +
                    " monomials exceeds the cap of " + std::to_string(cap),
                {{"dimension", dim}, {"cap", cap}});
  return FieldContextPtr(new FieldContext(std::move(subgroup), interval));
}

std::optional<std::size_t> FieldContext::site_index(Pos p) const {
  if (!p.is_site() || !interval_.contains(p)) return std::nullopt;
  return static_cast<std::size_t>(std::lower_bound(sites_.begin(), sites_.end(), p) - sites_.begin());
}

std::optional<std::size_t> FieldContext::link_index(Pos p) const {
  if (!p.is_link() || !interval_.contains(p)) return std::nullopt;
  return static_cast<std::size_t>(std::lower_bound(links_.begin(), links_.end(), p) - links_.begin());
}

Key FieldContext::sigma_code(std::span<const Elem> sigma) const {
  const Key n = group().order();
  Key code = 0;
  for (const Elem g : sigma) code = code * n + g;
  return code;
}

Key FieldContext::tau_code(std::span<const Elem> tau) const {
  const Key n = subgroup_->order();
  Key code = 0;
  for (const Elem h : tau) code = code * n + subgroup_->position(h);
  return code;
}

void FieldContext::decode_sigma(Key code, std::span<Elem> out) const {
  const Key n = group().order();
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Elem>(code % n);
    code /= n;
  }
}

void FieldContext::decode_tau(Key code, std::span<Elem> out) const {
  const Key n = subgroup_->order();
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = subgroup_->member(static_cast<std::size_t>(code % n));
    code /= n;
  }
}

Monomial FieldContext::decode(Key k) const {
  Monomial m{std::vector<Elem>(sites_.size()), std::vector<Elem>(links_.size())};
  decode_sigma(k / tau_count_, m.sigma);
  decode_tau(k % tau_count_, m.tau);
  return m;
}

bool FieldContext::same_as(const FieldContext& other) const noexcept {
  return this == &other || (interval_ == other.interval_ && subgroup_->same_as(*other.subgroup_));
}

Elem tau_total(const FieldContext& ctx, const Monomial& m) {
  const GroupTable& G = ctx.group();
  Elem acc = G.unit();
  for (const Elem t : m.tau) acc = G.mul(acc, t);
  return acc;
}

void TermAccumulator::add(Key k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) it->second += c;
}

std::vector<std::pair<Key, Rational>> TermAccumulator::take() {
  std::vector<std::pair<Key, Rational>> out;
  out.reserve(terms_.size());
  for (auto& [k, c] : terms_)
    if (c != 0) out.emplace_back(k, std::move(c));
  terms_.clear();
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

void require_same_context(const FieldContext& a, const FieldContext& b) {
  if (!a.same_as(b))
    throw Error(ErrorKind::ContextMismatch, "field elements over different (G, H, Λ)");
}

FieldElement::FieldElement(FieldContextPtr context) : context_(std::move(context)) {}

FieldElement FieldElement::monomial(FieldContextPtr context, const Monomial& m, Rational coeff) {
  FieldElement out(std::move(context));
  if (coeff != 0) out.terms_.emplace_back(out.context_->encode(m), std::move(coeff));
  return out;
}

FieldElement FieldElement::from_terms(FieldContextPtr context, std::vector<Term> terms) {
  FieldElement out(std::move(context));
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first) out.terms_.back().second += t.second;
    else out.terms_.push_back(std::move(t));
    if (out.terms_.back().second == 0) out.terms_.pop_back();
  }
  return out;
}

const Rational* FieldElement::find(Key k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term& t, Key key) { return t.first < key; });
  if (it == terms_.end() || it->first != k) return nullptr;
  return &it->second;
}

Rational FieldElement::coefficient(Key k) const {
  const Rational* c = find(k);
  return c ? *c : Rational(0);
}

namespace {

std::vector<FieldElement::Term> merge(const std::vector<FieldElement::Term>& a,
                                      const std::vector<FieldElement::Term>& b, bool subtract) {
  std::vector<FieldElement::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, subtract ? Rational(-b[j].second) : b[j].second);
      ++j;
    } else {
      Rational c = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  require_same_context(*context_, *other.context_);
  terms_ = merge(terms_, other.terms_, false);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) {
  require_same_context(*context_, *other.context_);
  terms_ = merge(terms_, other.terms_, true);
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& c) {
  if (c == 0) terms_.clear();
  for (auto& t : terms_) t.second *= c;
  return *this;
}

bool FieldElement::operator==(const FieldElement& other) const {
  return context_->same_as(*other.context_) && terms_ == other.terms_;
}

FieldElement identity(const FieldContextPtr& ctx) {
  const Key e_tau = ctx->tau_code(std::vector<Elem>(ctx->link_count(), ctx->group().unit()));
  std::vector<FieldElement::Term> terms;
  terms.reserve(ctx->sigma_count());
  for (Key s = 0; s < ctx->sigma_count(); ++s) terms.emplace_back(ctx->key(s, e_tau), 1);
  return FieldElement::from_terms(ctx, std::move(terms));
}

FieldElement generator_delta(const FieldContextPtr& ctx, Elem g, Pos x) {
  const auto i = ctx->site_index(x);
  if (!i)
    throw Error(ErrorKind::OutOfInterval,
                "δ(" + to_string(x) + ") is not a site of " + to_string(ctx->interval()),
                {{"position", to_string(x)}});
  if (g >= ctx->group().order())
    throw Error(ErrorKind::OutOfRange, "δ label " + std::to_string(g) + " is not in G", {{"g", g}});
  const Key e_tau = ctx->tau_code(std::vector<Elem>(ctx->link_count(), ctx->group().unit()));
  std::vector<Elem> sigma(ctx->site_count());
  std::vector<FieldElement::Term> terms;
  for (Key s = 0; s < ctx->sigma_count(); ++s) {
    ctx->decode_sigma(s, sigma);
    if (sigma[*i] == g) terms.emplace_back(ctx->key(s, e_tau), 1);
  }
  return FieldElement::from_terms(ctx, std::move(terms));
}

FieldElement generator_rho(const FieldContextPtr& ctx, Elem h, Pos l) {
  const auto j = ctx->link_index(l);
  if (!j)
    throw Error(ErrorKind::OutOfInterval,
                "ρ(" + to_string(l) + ") is not a link of " + to_string(ctx->interval()),
                {{"position", to_string(l)}});
  if (h >= ctx->group().order() || !ctx->subgroup().contains(h))
    throw Error(ErrorKind::NotInH, "ρ label " + std::to_string(h) + " is not in H", {{"h", h}});
  std::vector<Elem> tau(ctx->link_count(), ctx->group().unit());
  tau[*j] = h;
  const Key t = ctx->tau_code(tau);
  std::vector<FieldElement::Term> terms;
  terms.reserve(ctx->sigma_count());
  for (Key s = 0; s < ctx->sigma_count(); ++s) terms.emplace_back(ctx->key(s, t), 1);
  return FieldElement::from_terms(ctx, std::move(terms));
}

namespace {

/// Prefix products of one link assignment, shared by both factor roles.
struct TauData {
  Key code = 0;
  std::vector<Elem> tau;
  std::vector<Elem> site_prefix;  // P(x): product of τ over links left of site x
  std::vector<Elem> link_prefix;  // Q(l): product of τ over links left of link l
};

TauData make_tau_data(const FieldContext& ctx, Key code) {
  const GroupTable& G = ctx.group();
  TauData d;
  d.code = code;
  d.tau.resize(ctx.link_count());
  ctx.decode_tau(code, d.tau);
  d.link_prefix.resize(ctx.link_count());
  Elem acc = G.unit();
  for (std::size_t j = 0; j < d.tau.size(); ++j) {
    d.link_prefix[j] = acc;
    acc = G.mul(acc, d.tau[j]);
  }
  d.site_prefix.resize(ctx.site_count());
  for (std::size_t i = 0; i < ctx.site_count(); ++i) {
    const std::size_t nb = ctx.links_before_site(i);
    d.site_prefix[i] = nb == 0 ? G.unit() : G.mul(d.link_prefix[nb - 1], d.tau[nb - 1]);
  }
  return d;
}

/// τ″(l) = Q(l)⁻¹ τ(l) Q(l) τ′(l)
void combine_tau(const GroupTable& G, const TauData& left, const TauData& right, std::span<Elem> out) {
  for (std::size_t j = 0; j < out.size(); ++j) {
    const Elem q = right.link_prefix[j];
    out[j] = G.mul(G.mul(G.mul(G.inv(q), left.tau[j]), q), right.tau[j]);
  }
}

std::vector<TauData> distinct_taus(const FieldElement& a) {
  const FieldContext& ctx = *a.context();
  std::vector<Key> codes;
  codes.reserve(a.size());
  for (const auto& [k, c] : a.terms()) codes.push_back(k % ctx.tau_count());
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  std::vector<TauData> out;
  out.reserve(codes.size());
  for (Key code : codes) out.push_back(make_tau_data(ctx, code));
  return out;
}

}  // namespace

std::optional<Monomial> multiply_monomials(const FieldContext& ctx, const Monomial& a, const Monomial& b) {
  const GroupTable& G = ctx.group();
  const TauData ta = make_tau_data(ctx, ctx.tau_code(a.tau));
  const TauData tb = make_tau_data(ctx, ctx.tau_code(b.tau));
  for (std::size_t i = 0; i < ctx.site_count(); ++i)
    if (a.sigma[i] != G.mul(ta.site_prefix[i], b.sigma[i])) return std::nullopt;
  Monomial out{a.sigma, std::vector<Elem>(ctx.link_count())};
  combine_tau(G, ta, tb, out.tau);
  return out;
}

Monomial star_monomial(const FieldContext& ctx, const Monomial& m) {
  const GroupTable& G = ctx.group();
  // (Πρ_τ)* = ρ_{τ(l_k)⁻¹}(l_k) ⋯ ρ_{τ(l_1)⁻¹}(l_1), normal ordered one factor at a time.
  std::vector<Elem> reversed(ctx.link_count(), G.unit());
  for (std::size_t i = ctx.link_count(); i-- > 0;) {
    const Elem a = G.inv(m.tau[i]);
    reversed[i] = G.mul(reversed[i], a);
    for (std::size_t j = i + 1; j < reversed.size(); ++j) reversed[j] = G.conj(G.inv(a), reversed[j]);
  }
  const TauData r = make_tau_data(ctx, ctx.tau_code(reversed));
  Monomial out{std::vector<Elem>(ctx.site_count()), std::move(reversed)};
  for (std::size_t i = 0; i < ctx.site_count(); ++i) out.sigma[i] = G.mul(r.site_prefix[i], m.sigma[i]);
  return out;
}

FieldElement multiply(const FieldElement& a, const FieldElement& b) {
  require_same_context(*a.context(), *b.context());
  const FieldContext& ctx = *a.context();
  const GroupTable& G = ctx.group();
  if (a.is_zero() || b.is_zero()) return FieldElement(a.context());

  const auto taus_a = distinct_taus(a);
  const auto taus_b = distinct_taus(b);
  auto index_of = [](const std::vector<TauData>& v, Key code) {
    return static_cast<std::size_t>(
        std::lower_bound(v.begin(), v.end(), code, [](const TauData& d, Key c) { return d.code < c; }) -
        v.begin());
  };

  // τ″ depends only on the pair of link assignments.
  std::vector<Key> tau_product(taus_a.size() * taus_b.size());
  {
    std::vector<Elem> out(ctx.link_count());
    for (std::size_t i = 0; i < taus_a.size(); ++i)
      for (std::size_t j = 0; j < taus_b.size(); ++j) {
        combine_tau(G, taus_a[i], taus_b[j], out);
        tau_product[i * taus_b.size() + j] = ctx.tau_code(out);
      }
  }

  TermAccumulator acc;
  std::vector<Elem> sigma(ctx.site_count()), partner(ctx.site_count());
  const Key T = ctx.tau_count();
  const bool drive_left = a.size() * taus_b.size() <= b.size() * taus_a.size();
  if (drive_left) {
    for (const auto& [ka, ca] : a.terms()) {
      const Key sa = ka / T;
      const std::size_t ia = index_of(taus_a, ka % T);
      ctx.decode_sigma(sa, sigma);
      for (std::size_t ib = 0; ib < taus_b.size(); ++ib) {
        for (std::size_t x = 0; x < sigma.size(); ++x)
          partner[x] = G.mul(G.inv(taus_a[ia].site_prefix[x]), sigma[x]);
        const Rational* cb = b.find(ctx.key(ctx.sigma_code(partner), taus_b[ib].code));
        if (cb) acc.add(ctx.key(sa, tau_product[ia * taus_b.size() + ib]), ca * *cb);
      }
    }
  } else {
    for (const auto& [kb, cb] : b.terms()) {
      const std::size_t ib = index_of(taus_b, kb % T);
      ctx.decode_sigma(kb / T, sigma);
      for (std::size_t ia = 0; ia < taus_a.size(); ++ia) {
        for (std::size_t x = 0; x < sigma.size(); ++x)
          partner[x] = G.mul(taus_a[ia].site_prefix[x], sigma[x]);
        const Key sa = ctx.sigma_code(partner);
        const Rational* ca = a.find(ctx.key(sa, taus_a[ia].code));
        if (ca) acc.add(ctx.key(sa, tau_product[ia * taus_b.size() + ib]), *ca * cb);
      }
    }
  }
  return FieldElement::from_terms(a.context(), acc.take());
}

FieldElement star(const FieldElement& a) {
  const FieldContext& ctx = *a.context();
  std::vector<FieldElement::Term> terms;
  terms.reserve(a.size());
  for (const auto& [k, c] : a.terms()) terms.emplace_back(ctx.encode(star_monomial(ctx, ctx.decode(k))), c);
  return FieldElement::from_terms(a.context(), std::move(terms));
}

FieldElement embed(const FieldElement& a, const FieldContextPtr& target) {
  const FieldContext& src = *a.context();
  if (src.subgroup().group_ptr() != target->subgroup().group_ptr() ||
      !src.subgroup().is_subset_of(target->subgroup()))
    throw Error(ErrorKind::NotASubgroup, "source H is not contained in target H of the same G");
  if (!(src.interval() == target->interval()))
    throw Error(ErrorKind::ContextMismatch, "embed requires the same interval");
  std::vector<FieldElement::Term> terms;
  terms.reserve(a.size());
  for (const auto& [k, c] : a.terms()) terms.emplace_back(target->encode(src.decode(k)), c);
  return FieldElement::from_terms(target, std::move(terms));
}

nlohmann::json to_json(const FieldContext& ctx, const Monomial& m) {
  nlohmann::json sites = nlohmann::json::object(), links = nlohmann::json::object();
  for (std::size_t i = 0; i < ctx.site_count(); ++i) sites[std::to_string(ctx.sites()[i].twice / 2)] = m.sigma[i];
  for (std::size_t j = 0; j < ctx.link_count(); ++j) links[std::to_string(ctx.links()[j].twice)] = m.tau[j];
  return {{"sites", sites}, {"links", links}};
}

nlohmann::json to_json(const FieldElement& a) {
  nlohmann::json arr = nlohmann::json::array();
  const FieldContext& ctx = *a.context();
  for (const auto& [k, c] : a.terms())
    arr.push_back({{"monomial", to_json(ctx, ctx.decode(k))}, {"coeff", to_string(c)}});
  return arr;
}

}  // namespace gspin
