#pragma once

// Finite groups as explicit Cayley tables with the identity at index 0.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tga {

inline constexpr std::size_t kMaxGroupOrder = 64;

struct GroupElem {
  std::uint32_t index = 0;
  auto operator<=>(const GroupElem&) const = default;
};

enum class GroupClass { Abelian, Hamiltonian, Other };

std::string_view to_string(GroupClass c);

class Group {
 public:
  /// Validates the table: identity at 0, Latin square, associative.  Throws InvalidTable.
  static std::shared_ptr<const Group> from_table(std::vector<std::vector<std::uint32_t>> table,
                                                 std::vector<std::string> names = {},
                                                 std::string label = "table");

  static std::shared_ptr<const Group> cyclic(std::uint32_t m);
  /// Elements (a, b) numbered a * |G2| + b.
  static std::shared_ptr<const Group> direct_product(const Group& g1, const Group& g2);
  /// Order 2m: r^i s^j at index i + m j, with s r s = r^{-1}.
  static std::shared_ptr<const Group> dihedral(std::uint32_t m);
  /// 1, g, g^2, g^3, h, gh, g^2h, g^3h with g^4 = 1, h^2 = g^2, h^{-1} g h = g^{-1}.
  static std::shared_ptr<const Group> quaternion8();

  std::size_t order() const { return n_; }
  GroupElem identity() const { return {0}; }
  GroupElem mul(GroupElem a, GroupElem b) const { return {table_[a.index * n_ + b.index]}; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * n_ + b]; }
  GroupElem inverse(GroupElem a) const { return {inverse_[a.index]}; }
  GroupElem pow(GroupElem a, std::int64_t e) const;
  GroupElem conjugate(GroupElem g, GroupElem h) const;  // h^{-1} g h

  std::uint32_t element_order(GroupElem g) const { return orders_[g.index]; }
  const std::vector<std::uint32_t>& element_orders() const { return orders_; }
  std::uint32_t exponent() const;

  bool is_abelian() const { return abelian_; }
  GroupClass classify() const;

  /// Cyclic subgroup <g> listed as g^0, g^1, ..., g^{ord-1}.
  std::vector<GroupElem> cyclic_subgroup(GroupElem g) const;

  std::vector<std::pair<GroupElem, GroupElem>> commuting_pairs() const;

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(GroupElem g) const { return names_[g.index]; }
  std::optional<GroupElem> find_name(const std::string& name) const;
  const std::string& label() const { return label_; }
  std::vector<std::vector<std::uint32_t>> table() const;

  /// Set for direct_product(cyclic(m), cyclic(n)): (m, n).
  const std::optional<std::pair<std::uint32_t, std::uint32_t>>& cyclic_product_shape() const { return shape_; }

 private:
  Group() = default;
  void finish();

  std::size_t n_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> orders_;
  std::vector<std::string> names_;
  std::string label_;
  bool abelian_ = false;
  std::optional<std::uint32_t> cyclic_order_;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> shape_;
};

using GroupPtr = std::shared_ptr<const Group>;

struct Subgroup {
  GroupPtr group;
  /// embedding[i] = index in the ambient group of subgroup element i.
  std::vector<GroupElem> embedding;
};

/// Closure of `generators`, re-indexed in discovery order with the identity at 0.
Subgroup generated_subgroup(const Group& g, const std::vector<GroupElem>& generators);

}  // namespace tga
