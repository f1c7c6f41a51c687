#include "tga/group.hpp"

#include <algorithm>
#include <numeric>

#include "tga/error.hpp"

namespace tga {

std::string_view to_string(GroupClass c) {
  switch (c) {
    case GroupClass::Abelian: return "abelian";
    case GroupClass::Hamiltonian: return "hamiltonian";
    case GroupClass::Other: return "other";
  }
  return "other";
}

std::shared_ptr<const Group> Group::from_table(std::vector<std::vector<std::uint32_t>> table,
                                               std::vector<std::string> names, std::string label) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::InvalidTable, "empty table");
  if (n > kMaxGroupOrder) throw Error(ErrorCode::InvalidTable, "group order exceeds 64");
  std::shared_ptr<Group> g(new Group());
  g->n_ = n;
  g->table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw Error(ErrorCode::InvalidTable, "table is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) throw Error(ErrorCode::InvalidTable, "entry out of range");
      g->table_[i * n + j] = table[i][j];
    }
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    if (g->mul(0u, i) != i || g->mul(i, 0u) != i)
      throw Error(ErrorCode::InvalidTable, "index 0 is not the identity");
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      row[g->table_[i * n + j]] = true;
      col[g->table_[j * n + i]] = true;
    }
    if (std::find(row.begin(), row.end(), false) != row.end() ||
        std::find(col.begin(), col.end(), false) != col.end())
      throw Error(ErrorCode::InvalidTable, "table is not a Latin square");
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      const std::uint32_t ab = g->mul(a, b);
      for (std::uint32_t c = 0; c < n; ++c) {
        if (g->mul(ab, c) != g->mul(a, g->mul(b, c)))
          throw Error(ErrorCode::InvalidTable, "not associative at (" + std::to_string(a) + "," +
                                                   std::to_string(b) + "," + std::to_string(c) + ")");
      }
    }
  }
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back("g_" + std::to_string(i));
  } else if (names.size() != n) {
    throw Error(ErrorCode::InvalidTable, "names do not match the order");
  }
  g->names_ = std::move(names);
  g->label_ = std::move(label);
  g->finish();
  return g;
}

void Group::finish() {
  inverse_.assign(n_, 0);
  orders_.assign(n_, 1);
  for (std::uint32_t a = 0; a < n_; ++a) {
    for (std::uint32_t b = 0; b < n_; ++b) {
      if (mul(a, b) == 0) inverse_[a] = b;
    }
    std::uint32_t x = a;
    std::uint32_t ord = 1;
    while (x != 0) {
      x = mul(x, a);
      ++ord;
    }
    orders_[a] = ord;
  }
  abelian_ = true;
  for (std::uint32_t a = 0; a < n_ && abelian_; ++a) {
    for (std::uint32_t b = a + 1; b < n_; ++b) {
      if (mul(a, b) != mul(b, a)) {
        abelian_ = false;
        break;
      }
    }
  }
}

std::shared_ptr<const Group> Group::cyclic(std::uint32_t m) {
  if (m < 1) throw Error(ErrorCode::InvalidTable, "cyclic order must be >= 1");
  std::vector<std::vector<std::uint32_t>> t(m, std::vector<std::uint32_t>(m));
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < m; ++j) t[i][j] = (i + j) % m;
    names.push_back(i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i));
  }
  auto g = from_table(std::move(t), std::move(names), "C" + std::to_string(m));
  auto mg = std::const_pointer_cast<Group>(g);
  mg->cyclic_order_ = m;
  return g;
}

std::shared_ptr<const Group> Group::direct_product(const Group& g1, const Group& g2) {
  const std::size_t n1 = g1.order(), n2 = g2.order();
  const std::size_t n = n1 * n2;
  if (n > kMaxGroupOrder) throw Error(ErrorCode::InvalidTable, "group order exceeds 64");
  std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
  std::vector<std::string> names;
  for (std::uint32_t a1 = 0; a1 < n1; ++a1) {
    for (std::uint32_t a2 = 0; a2 < n2; ++a2) {
      names.push_back("(" + g1.names_[a1] + "," + g2.names_[a2] + ")");
      for (std::uint32_t b1 = 0; b1 < n1; ++b1) {
        for (std::uint32_t b2 = 0; b2 < n2; ++b2) {
          t[a1 * n2 + a2][b1 * n2 + b2] = static_cast<std::uint32_t>(g1.mul(a1, b1) * n2 + g2.mul(a2, b2));
        }
      }
    }
  }
  auto g = from_table(std::move(t), std::move(names), g1.label() + "x" + g2.label());
  if (g1.cyclic_order_ && g2.cyclic_order_) {
    std::const_pointer_cast<Group>(g)->shape_ = std::make_pair(*g1.cyclic_order_, *g2.cyclic_order_);
  }
  return g;
}

namespace {

// Elements r^i s^j (i < m, j < 2) with s r = r^{-1} s and s^2 = r^{s_square}.
std::vector<std::vector<std::uint32_t>> metacyclic_table(std::uint32_t m, std::uint32_t s_square) {
  const std::uint32_t n = 2 * m;
  std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = 0; b < 2; ++b) {
      for (std::uint32_t c = 0; c < m; ++c) {
        for (std::uint32_t d = 0; d < 2; ++d) {
          // r^a s^b r^c s^d = r^{a + (-1)^b c} s^{b + d}
          std::uint32_t e = b == 0 ? (a + c) % m : (a + m - c) % m;
          std::uint32_t f = b + d;
          if (f == 2) {
            f = 0;
            e = (e + s_square) % m;
          }
          t[a + m * b][c + m * d] = e + m * f;
        }
      }
    }
  }
  return t;
}

}  // namespace

std::shared_ptr<const Group> Group::dihedral(std::uint32_t m) {
  if (m < 1) throw Error(ErrorCode::InvalidTable, "dihedral parameter must be >= 1");
  std::vector<std::string> names;
  for (std::uint32_t j = 0; j < 2; ++j) {
    for (std::uint32_t i = 0; i < m; ++i) {
      std::string r = i == 0 ? "" : i == 1 ? "r" : "r^" + std::to_string(i);
      std::string s = j == 0 ? "" : "s";
      std::string nm = r + s;
      names.push_back(nm.empty() ? "1" : nm);
    }
  }
  return from_table(metacyclic_table(m, 0), std::move(names), "D" + std::to_string(m));
}

std::shared_ptr<const Group> Group::quaternion8() {
  return from_table(metacyclic_table(4, 2), {"1", "g", "g^2", "g^3", "h", "gh", "g^2h", "g^3h"}, "Q8");
}

GroupElem Group::pow(GroupElem a, std::int64_t e) const {
  const std::int64_t ord = orders_[a.index];
  std::int64_t r = ((e % ord) + ord) % ord;
  std::uint32_t x = 0;
  while (r-- > 0) x = mul(x, a.index);
  return {x};
}

GroupElem Group::conjugate(GroupElem g, GroupElem h) const {
  return mul(mul(inverse(h), g), h);
}

std::uint32_t Group::exponent() const {
  std::uint32_t e = 1;
  for (auto o : orders_) e = std::lcm(e, o);
  return e;
}

std::vector<GroupElem> Group::cyclic_subgroup(GroupElem g) const {
  std::vector<GroupElem> out;
  GroupElem x = identity();
  for (std::uint32_t i = 0; i < orders_[g.index]; ++i) {
    out.push_back(x);
    x = mul(x, g);
  }
  return out;
}

GroupClass Group::classify() const {
  if (abelian_) return GroupClass::Abelian;
  for (std::uint32_t g = 0; g < n_; ++g) {
    const auto cyc = cyclic_subgroup({g});
    for (std::uint32_t h = 0; h < n_; ++h) {
      const GroupElem c = conjugate({g}, {h});
      if (std::find(cyc.begin(), cyc.end(), c) == cyc.end()) return GroupClass::Other;
    }
  }
  return GroupClass::Hamiltonian;
}

std::vector<std::pair<GroupElem, GroupElem>> Group::commuting_pairs() const {
  std::vector<std::pair<GroupElem, GroupElem>> out;
  for (std::uint32_t a = 0; a < n_; ++a) {
    for (std::uint32_t b = 0; b < n_; ++b) {
      if (mul(a, b) == mul(b, a)) out.emplace_back(GroupElem{a}, GroupElem{b});
    }
  }
  return out;
}

std::optional<GroupElem> Group::find_name(const std::string& name) const {
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (names_[i] == name) return GroupElem{i};
  }
  return std::nullopt;
}

std::vector<std::vector<std::uint32_t>> Group::table() const {
  std::vector<std::vector<std::uint32_t>> t(n_, std::vector<std::uint32_t>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) t[i][j] = table_[i * n_ + j];
  }
  return t;
}

Subgroup generated_subgroup(const Group& g, const std::vector<GroupElem>& generators) {
  std::vector<std::uint32_t> members{0};
  std::vector<int> position(g.order(), -1);
  position[0] = 0;
  // Breadth-first closure under right multiplication by generators; finite, so
  // closure under products suffices for a subgroup.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (const auto& s : generators) {
      const std::uint32_t x = g.mul(members[i], s.index);
      if (position[x] < 0) {
        position[x] = static_cast<int>(members.size());
        members.push_back(x);
      }
    }
  }
  const std::size_t m = members.size();
  std::vector<std::vector<std::uint32_t>> t(m, std::vector<std::uint32_t>(m));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back(g.names()[members[i]]);
    for (std::size_t j = 0; j < m; ++j) {
      t[i][j] = static_cast<std::uint32_t>(position[g.mul(members[i], members[j])]);
    }
  }
  Subgroup out;
  out.group = Group::from_table(std::move(t), std::move(names), "<" + g.label() + " subgroup>");
  for (auto x : members) out.embedding.push_back({x});
  return out;
}

}  // namespace tga
