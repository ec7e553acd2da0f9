#include "gspin/group.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>

#include "gspin/error.hpp"

namespace gspin {

GroupTable::GroupTable(std::string name, std::size_t order, std::vector<Elem> table, Elem unit,
                       std::vector<Elem> inverse)
    : name_(std::move(name)),
      order_(order),
      table_(std::move(table)),
      unit_(unit),
      inverse_(std::move(inverse)) {}

bool GroupTable::is_abelian() const {
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<Elem> GroupTable::center() const {
  std::vector<Elem> out;
  for (Elem a = 0; a < order_; ++a) {
    bool central = true;
    for (Elem b = 0; b < order_ && central; ++b) central = mul(a, b) == mul(b, a);
    if (central) out.push_back(a);
  }
  return out;
}

GroupPtr validate_group(std::string name, const std::vector<std::vector<long long>>& rows,
                        std::optional<long long> unit) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error(ErrorKind::MalformedTable, "empty table");
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n)
      throw Error(ErrorKind::MalformedTable, "row " + std::to_string(a) + " has length " +
                                                 std::to_string(rows[a].size()) + ", expected " +
                                                 std::to_string(n),
                  {{"row", a}});
    for (std::size_t b = 0; b < n; ++b) {
      const long long v = rows[a][b];
      if (v < 0 || v >= static_cast<long long>(n))
        throw Error(ErrorKind::OutOfRange,
                    "entry mul(" + std::to_string(a) + "," + std::to_string(b) + ") = " +
                        std::to_string(v) + " outside 0.." + std::to_string(n - 1),
                    {{"a", a}, {"b", b}, {"value", v}});
      table[a * n + b] = static_cast<Elem>(v);
    }
  }
  auto at = [&](Elem a, Elem b) { return table[a * n + b]; };

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = at(a, b);
      for (Elem c = 0; c < n; ++c)
        if (at(ab, c) != at(a, at(b, c)))
          throw Error(ErrorKind::NotAssociative,
                      "(a·b)·c != a·(b·c) for a=" + std::to_string(a) + " b=" + std::to_string(b) +
                          " c=" + std::to_string(c),
                      {{"a", a}, {"b", b}, {"c", c}});
    }

  auto is_unit = [&](Elem e) {
    for (Elem a = 0; a < n; ++a)
      if (at(e, a) != a || at(a, e) != a) return false;
    return true;
  };
  Elem e = 0;
  if (unit) {
    if (*unit < 0 || *unit >= static_cast<long long>(n))
      throw Error(ErrorKind::OutOfRange, "declared unit " + std::to_string(*unit) + " out of range",
                  {{"unit", *unit}});
    e = static_cast<Elem>(*unit);
    if (!is_unit(e))
      throw Error(ErrorKind::NoUnit, "declared unit " + std::to_string(e) + " is not an identity",
                  {{"unit", e}});
  } else {
    bool found = false;
    for (Elem c = 0; c < n && !found; ++c)
      if (is_unit(c)) {
        e = c;
        found = true;
      }
    if (!found) throw Error(ErrorKind::NoUnit, "no two-sided identity element");
  }

  std::vector<Elem> inverse(n);
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n && !found; ++b)
      if (at(a, b) == e && at(b, a) == e) {
        inverse[a] = b;
        found = true;
      }
    if (!found)
      throw Error(ErrorKind::NoInverse, "element " + std::to_string(a) + " has no inverse",
                  {{"element", a}});
  }
  return GroupPtr(new GroupTable(std::move(name), n, std::move(table), e, std::move(inverse)));
}

namespace {

std::vector<std::vector<long long>> table_from(std::size_t n, auto&& product) {
  std::vector<std::vector<long long>> rows(n, std::vector<long long>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rows[a][b] = static_cast<long long>(product(a, b));
  return rows;
}

GroupPtr symmetric(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  auto rows = table_from(perms.size(), [&](std::size_t a, std::size_t b) {
    std::vector<int> r(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = perms[a][static_cast<std::size_t>(perms[b][i])];
    return index_of(r);
  });
  return validate_group("S" + std::to_string(n), rows, 0);
}

// Unit quaternions ±1, ±i, ±j, ±k encoded as 2·basis + sign.
GroupPtr quaternion8() {
  // basis product table for 1,i,j,k: (sign, basis)
  static constexpr int kSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static constexpr int kBasis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  auto rows = table_from(8, [](std::size_t a, std::size_t b) {
    const std::size_t ba = a / 2, bb = b / 2;
    int sign = kSign[ba][bb] * (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1);
    return 2 * static_cast<std::size_t>(kBasis[ba][bb]) + (sign < 0 ? 1 : 0);
  });
  return validate_group("Q8", rows, 0);
}

}  // namespace

GroupPtr builtin_group(std::string_view family, int parameter) {
  if (family == "cyclic") {
    if (parameter < 1 || parameter > 4096)
      throw Error(ErrorKind::ParameterOutOfRange, "cyclic order must be in 1..4096",
                  {{"parameter", parameter}});
    const auto n = static_cast<std::size_t>(parameter);
    return validate_group("Z" + std::to_string(n),
                          table_from(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; }),
                          0);
  }
  if (family == "dihedral") {
    if (parameter < 1 || parameter > 2048)
      throw Error(ErrorKind::ParameterOutOfRange, "dihedral parameter must be in 1..2048",
                  {{"parameter", parameter}});
    const auto n = static_cast<std::size_t>(parameter);
    auto rows = table_from(2 * n, [n](std::size_t a, std::size_t b) {
      const std::size_t i = a % n, s = a / n, j = b % n, t = b / n;
      const std::size_t rot = s == 0 ? (i + j) % n : (i + n - j) % n;
      return rot + n * ((s + t) % 2);
    });
    return validate_group("D" + std::to_string(n), rows, 0);
  }
  if (family == "symmetric") {
    if (parameter < 1 || parameter > 4)
      throw Error(ErrorKind::ParameterOutOfRange, "symmetric degree must be in 1..4",
                  {{"parameter", parameter}});
    return symmetric(parameter);
  }
  if (family == "quaternion8" || family == "quaternion") return quaternion8();
  throw Error(ErrorKind::UnknownFamily, "unknown group family '" + std::string(family) + "'",
              {{"family", std::string(family)}});
}

GroupPtr parse_builtin_group(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view family = text.substr(0, colon);
  int parameter = 0;
  if (colon != std::string_view::npos) {
    const auto digits = text.substr(colon + 1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), parameter);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
      throw Error(ErrorKind::ConfigError, "bad group parameter in '" + std::string(text) + "'");
  } else if (family != "quaternion8" && family != "quaternion") {
    throw Error(ErrorKind::ConfigError,
                "group '" + std::string(text) + "' needs a parameter (family:n)");
  }
  return builtin_group(family, parameter);
}

GroupPtr group_from_json(const nlohmann::json& doc) {
  try {
    const std::string name = doc.value("name", std::string("G"));
    auto rows = doc.at("table").get<std::vector<std::vector<long long>>>();
    if (doc.contains("order") && doc.at("order").get<std::size_t>() != rows.size())
      throw Error(ErrorKind::MalformedTable,
                  "declared order " + std::to_string(doc.at("order").get<std::size_t>()) +
                      " does not match table size " + std::to_string(rows.size()));
    std::optional<long long> unit;
    if (doc.contains("unit") && !doc.at("unit").is_null()) unit = doc.at("unit").get<long long>();
    return validate_group(name, rows, unit);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedTable, std::string("group JSON: ") + e.what());
  }
}

GroupPtr load_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open group file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedTable, "group file " + path.string() + ": " + e.what());
  }
  return group_from_json(doc);
}

Subgroup::Subgroup(GroupPtr group, std::vector<Elem> members)
    : group_(std::move(group)), members_(std::move(members)), position_(group_->order(), -1) {
  for (std::size_t i = 0; i < members_.size(); ++i) position_[members_[i]] = static_cast<int>(i);
}

bool Subgroup::same_as(const Subgroup& other) const noexcept {
  return group_ == other.group_ && members_ == other.members_;
}

bool Subgroup::is_subset_of(const Subgroup& other) const noexcept {
  if (group_ != other.group_) return false;
  return std::all_of(members_.begin(), members_.end(), [&](Elem h) { return other.contains(h); });
}

SubgroupPtr validate_normal_subgroup(GroupPtr group, std::vector<Elem> members) {
  const GroupTable& G = *group;
  for (Elem h : members)
    if (h >= G.order())
      throw Error(ErrorKind::OutOfRange, "subgroup member " + std::to_string(h) + " out of range",
                  {{"element", h}});
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<bool> in(G.order(), false);
  for (Elem h : members) in[h] = true;

  if (!in[G.unit()])
    throw Error(ErrorKind::MissingUnit, "subgroup does not contain the unit " +
                                            std::to_string(G.unit()),
                {{"unit", G.unit()}});
  for (Elem a : members) {
    if (!in[G.inv(a)])
      throw Error(ErrorKind::NotClosed,
                  "inverse of " + std::to_string(a) + " (" + std::to_string(G.inv(a)) +
                      ") is missing",
                  {{"a", a}, {"inverse", G.inv(a)}});
    for (Elem b : members)
      if (!in[G.mul(a, b)])
        throw Error(ErrorKind::NotClosed,
                    "product " + std::to_string(a) + "·" + std::to_string(b) + " = " +
                        std::to_string(G.mul(a, b)) + " is missing",
                    {{"a", a}, {"b", b}, {"product", G.mul(a, b)}});
  }
  for (Elem g = 0; g < G.order(); ++g)
    for (Elem h : members)
      if (!in[G.conj(g, h)])
        throw Error(ErrorKind::NotNormal,
                    "g·h·g⁻¹ = " + std::to_string(G.conj(g, h)) + " leaves the subgroup for g=" +
                        std::to_string(g) + ", h=" + std::to_string(h) +
                        "; the crossed product D(H;G) is undefined for a non-normal H",
                    {{"g", g}, {"h", h}, {"conjugate", G.conj(g, h)}});
  return SubgroupPtr(new Subgroup(std::move(group), std::move(members)));
}

SubgroupPtr trivial_subgroup(GroupPtr group) {
  const Elem e = group->unit();
  return validate_normal_subgroup(std::move(group), {e});
}

SubgroupPtr full_subgroup(GroupPtr group) {
  std::vector<Elem> all(group->order());
  std::iota(all.begin(), all.end(), Elem{0});
  return validate_normal_subgroup(std::move(group), std::move(all));
}

SubgroupPtr center_subgroup(GroupPtr group) {
  auto z = group->center();
  return validate_normal_subgroup(std::move(group), std::move(z));
}

SubgroupPtr parse_subgroup(GroupPtr group, std::string_view text) {
  if (text == "trivial") return trivial_subgroup(std::move(group));
  if (text == "full") return full_subgroup(std::move(group));
  if (text == "center") return center_subgroup(std::move(group));
  std::vector<Elem> members;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    const auto token = text.substr(start, end - start);
    long long value = -1;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw Error(ErrorKind::ConfigError, "bad subgroup element '" + std::string(token) + "'");
    if (value < 0 || value >= static_cast<long long>(group->order()))
      throw Error(ErrorKind::OutOfRange, "subgroup member " + std::to_string(value) +
                                             " out of range",
                  {{"element", value}});
    members.push_back(static_cast<Elem>(value));
    start = end + 1;
  }
  return validate_normal_subgroup(std::move(group), std::move(members));
}

std::vector<Elem> left_coset_representatives(const Subgroup& subgroup) {
  const GroupTable& G = subgroup.group();
  std::vector<bool> covered(G.order(), false);
  std::vector<Elem> reps;
  // The unit's coset H itself comes first even when e is not index 0.
  auto take = [&](Elem t) {
    reps.push_back(t);
    for (Elem h : subgroup.members()) covered[G.mul(t, h)] = true;
  };
  take(G.unit());
  for (Elem g = 0; g < G.order(); ++g)
    if (!covered[g]) take(g);
  return reps;
}

}  // namespace gspin
