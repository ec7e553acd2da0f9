#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace gspin {

/// Dense element index 0..order-1.
using Elem = std::uint32_t;

/// A finite group given by its full Cayley table. Only obtainable through
/// validate_group / builtin_group, so every instance has passed the
/// exhaustive group-axiom check.
class GroupTable {
 public:
  std::size_t order() const noexcept { return order_; }
  Elem unit() const noexcept { return unit_; }
  const std::string& name() const noexcept { return name_; }

  Elem mul(Elem a, Elem b) const noexcept { return table_[a * order_ + b]; }
  Elem inv(Elem a) const noexcept { return inverse_[a]; }
  /// g·h·g⁻¹
  Elem conj(Elem g, Elem h) const noexcept { return mul(mul(g, h), inverse_[g]); }

  bool is_abelian() const;
  std::vector<Elem> center() const;
  /// Row-major Cayley table.
  std::span<const Elem> table() const noexcept { return table_; }

 private:
  GroupTable(std::string name, std::size_t order, std::vector<Elem> table, Elem unit,
             std::vector<Elem> inverse);
  friend std::shared_ptr<const GroupTable> validate_group(std::string,
                                                          const std::vector<std::vector<long long>>&,
                                                          std::optional<long long>);

  std::string name_;
  std::size_t order_;
  std::vector<Elem> table_;
  Elem unit_;
  std::vector<Elem> inverse_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

/// Checks shape, range, associativity (all triples), unit and inverses.
/// When `unit` is absent the two-sided identity is detected.
GroupPtr validate_group(std::string name, const std::vector<std::vector<long long>>& rows,
                        std::optional<long long> unit = std::nullopt);

/// Built-in families, unit at index 0:
///  - "cyclic" n:     k ↔ k mod n.
///  - "dihedral" n:   order 2n, r^i s^j ↔ i + n·j, with s r s = r⁻¹.
///  - "symmetric" n:  n ≤ 4, permutations of {0..n-1} in lexicographic order
///                    of one-line notation; product p·q = p∘q (q first).
///  - "quaternion8":  1,-1,i,-i,j,-j,k,-k ↔ 0..7 (parameter ignored).
GroupPtr builtin_group(std::string_view family, int parameter);

/// "cyclic:4", "symmetric:3", "quaternion8", ...
GroupPtr parse_builtin_group(std::string_view text);

/// {"name": str, "order": n, "table": [[...]], "unit": idx?}
GroupPtr group_from_json(const nlohmann::json& doc);
GroupPtr load_group_file(const std::filesystem::path& path);

/// A normal subgroup of a validated group. Members are kept sorted.
class Subgroup {
 public:
  const GroupTable& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t order() const noexcept { return members_.size(); }
  std::span<const Elem> members() const noexcept { return members_; }
  bool contains(Elem g) const noexcept { return g < position_.size() && position_[g] >= 0; }
  /// Index of h inside members(); h must be a member.
  std::size_t position(Elem h) const noexcept { return static_cast<std::size_t>(position_[h]); }
  Elem member(std::size_t pos) const noexcept { return members_[pos]; }

  /// Same ambient group object and same member set.
  bool same_as(const Subgroup& other) const noexcept;
  bool is_subset_of(const Subgroup& other) const noexcept;

 private:
  Subgroup(GroupPtr group, std::vector<Elem> members);
  friend std::shared_ptr<const Subgroup> validate_normal_subgroup(GroupPtr, std::vector<Elem>);

  GroupPtr group_;
  std::vector<Elem> members_;
  std::vector<int> position_;
};

using SubgroupPtr = std::shared_ptr<const Subgroup>;

/// Fails with MissingUnit, NotClosed or NotNormal (witness {"g","h"} with
/// g·h·g⁻¹ ∉ members) unless `members` is a normal subgroup.
SubgroupPtr validate_normal_subgroup(GroupPtr group, std::vector<Elem> members);

SubgroupPtr trivial_subgroup(GroupPtr group);
SubgroupPtr full_subgroup(GroupPtr group);
SubgroupPtr center_subgroup(GroupPtr group);

/// "trivial", "full", "center" or a comma separated index list "0,3,4".
SubgroupPtr parse_subgroup(GroupPtr group, std::string_view text);

/// t₁ = e, t₂, ... one per left coset tH, each the smallest index in its coset,
/// ordered by first appearance.
std::vector<Elem> left_coset_representatives(const Subgroup& subgroup);

}  // namespace gspin
