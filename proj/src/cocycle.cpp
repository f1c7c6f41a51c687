#include "tga/cocycle.hpp"

#include <numeric>

#include "tga/error.hpp"

namespace tga {

FactorSystem::FactorSystem(FieldPtr field, GroupPtr group, std::vector<FieldElem> table, std::string label)
    : field_(std::move(field)), group_(std::move(group)), table_(std::move(table)), label_(std::move(label)) {
  const std::size_t n = group_->order();
  if (table_.size() != n * n) throw Error(ErrorCode::InvalidTable, "factor system table must be |G| x |G|");
  for (auto e : table_) {
    if (!field_->contains(e)) throw Error(ErrorCode::InvalidTable, "factor system entry outside the field");
  }
}

bool FactorSystem::operator==(const FactorSystem& other) const {
  return *field_ == *other.field_ && group_->table() == other.group_->table() && table_ == other.table_;
}

ValidationReport validate_factor_system(const FactorSystem& rho) {
  const Field& f = rho.field();
  const Group& g = rho.group();
  const auto n = static_cast<std::uint32_t>(g.order());
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (rho.at(a, b).code == 0)
        throw Error(ErrorCode::ZeroEntry, "rho(" + std::to_string(a) + "," + std::to_string(b) + ") = 0");
    }
  }
  ValidationReport report;
  for (std::uint32_t a = 0; a < n; ++a) {
    if (rho.at(a, 0) != f.one() || rho.at(0, a) != f.one()) {
      report.normalization_violations.emplace_back(GroupElem{a}, GroupElem{0});
    }
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      const std::uint32_t ab = g.mul(a, b);
      for (std::uint32_t c = 0; c < n; ++c) {
        const FieldElem lhs = f.mul(rho.at(a, b), rho.at(ab, c));
        const FieldElem rhs = f.mul(rho.at(b, c), rho.at(a, g.mul(b, c)));
        if (lhs != rhs) report.identity_violations.push_back({GroupElem{a}, GroupElem{b}, GroupElem{c}});
      }
    }
  }
  return report;
}

SymmetryReport is_symmetric(const FactorSystem& rho) {
  for (const auto& [g, h] : rho.group().commuting_pairs()) {
    if (rho(g, h) != rho(h, g)) return {false, std::make_pair(g, h)};
  }
  return {};
}

FieldElem power_scalar(const FactorSystem& rho, GroupElem g) {
  const Group& grp = rho.group();
  const Field& f = rho.field();
  FieldElem alpha = f.one();
  GroupElem gi = g;
  for (std::uint32_t i = 1; i < grp.element_order(g); ++i) {
    alpha = f.mul(alpha, rho(g, gi));
    gi = grp.mul(gi, g);
  }
  return alpha;
}

Rescaling Rescaling::make(const Field& field, std::vector<FieldElem> mu) {
  if (mu.empty() || mu[0] != field.one()) throw Error(ErrorCode::PreconditionFailed, "rescaling must map 1 to 1");
  for (auto m : mu) {
    if (m.code == 0 || !field.contains(m)) throw Error(ErrorCode::PreconditionFailed, "rescaling values must be units");
  }
  return {std::move(mu)};
}

Rescaling compose(const Field& field, const Rescaling& a, const Rescaling& b) {
  Rescaling out = a;
  for (std::size_t i = 0; i < out.mu.size(); ++i) out.mu[i] = field.mul(a.mu[i], b.mu[i]);
  return out;
}

Rescaling pointwise_inverse(const Field& field, const Rescaling& a) {
  Rescaling out = a;
  for (auto& m : out.mu) m = field.inv(m);
  return out;
}

FactorSystem apply_rescaling(const FactorSystem& rho, const Rescaling& mu) {
  const Field& f = rho.field();
  const Group& g = rho.group();
  const auto n = static_cast<std::uint32_t>(g.order());
  if (mu.mu.size() != n) throw Error(ErrorCode::PreconditionFailed, "rescaling size must equal |G|");
  std::vector<FieldElem> table(static_cast<std::size_t>(n) * n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      const FieldElem num = f.mul(rho.at(a, b), f.mul(mu.mu[a], mu.mu[b]));
      table[a * n + b] = f.div(num, mu.mu[g.mul(a, b)]);
    }
  }
  return FactorSystem(rho.field_ptr(), rho.group_ptr(), std::move(table), rho.label());
}

UnitPowerRescaling unit_power_rescaling(const FactorSystem& rho) {
  const Field& f = rho.field();
  const Group& g = rho.group();
  UnitPowerRescaling out;
  std::vector<FieldElem> mu(g.order(), f.one());
  for (std::uint32_t i = 1; i < g.order(); ++i) {
    const GroupElem x{i};
    const std::uint32_t n = g.element_order(x);
    const FieldElem alpha = power_scalar(rho, x);
    const auto root = f.nth_root(f.inv(alpha), n);
    if (!root) {
      out.failures.push_back({x, n, alpha});
      continue;
    }
    mu[i] = *root;
  }
  if (!out.ok()) return out;
  out.mu = Rescaling::make(f, std::move(mu));
  out.rescaled = apply_rescaling(rho, *out.mu);
  return out;
}

FactorSystem make_factor_system(const CocycleKind& kind, GroupPtr group, FieldPtr field) {
  const Field& f = *field;
  const auto n = static_cast<std::uint32_t>(group->order());
  std::vector<FieldElem> table(static_cast<std::size_t>(n) * n, f.one());
  switch (kind.kind) {
    case CocycleKind::Kind::Trivial:
      return FactorSystem(field, group, std::move(table), "trivial");
    case CocycleKind::Kind::LambdaPairing: {
      const auto& shape = group->cyclic_product_shape();
      if (!shape) throw Error(ErrorCode::IncompatibleLambda, "lambda pairing needs a product of two cyclic groups");
      const auto [m, nn] = *shape;
      if (!f.contains(kind.lambda) || kind.lambda.code == 0)
        throw Error(ErrorCode::IncompatibleLambda, "lambda must be a nonzero field element");
      if (f.pow(kind.lambda, std::gcd(m, nn)) != f.one())
        throw Error(ErrorCode::IncompatibleLambda, "lambda^gcd(m,n) != 1, pairing is not bilinear");
      for (std::uint32_t x = 0; x < n; ++x) {
        for (std::uint32_t y = 0; y < n; ++y) {
          const std::uint32_t a2 = x % nn;
          const std::uint32_t b1 = y / nn;
          table[x * n + y] = f.pow(kind.lambda, static_cast<std::int64_t>(a2) * b1);
        }
      }
      return FactorSystem(field, group, std::move(table), "lambda_pairing");
    }
    case CocycleKind::Kind::Coboundary: {
      FactorSystem trivial(field, group, std::move(table), "coboundary");
      return apply_rescaling(trivial, Rescaling::make(f, kind.mu));
    }
    case CocycleKind::Kind::Explicit: {
      if (kind.table.size() != n) throw Error(ErrorCode::InvalidTable, "explicit table must have |G| rows");
      for (std::uint32_t x = 0; x < n; ++x) {
        if (kind.table[x].size() != n) throw Error(ErrorCode::InvalidTable, "explicit table must have |G| columns");
        for (std::uint32_t y = 0; y < n; ++y) table[x * n + y] = kind.table[x][y];
      }
      FactorSystem rho(field, group, std::move(table), "explicit");
      ValidationReport report;
      try {
        report = validate_factor_system(rho);
      } catch (const Error& e) {
        throw Error(ErrorCode::InvalidTable, e.what());
      }
      if (!report.valid()) {
        throw Error(ErrorCode::InvalidTable,
                    std::to_string(report.identity_violations.size()) + " cocycle identity violations, " +
                        std::to_string(report.normalization_violations.size()) + " normalization violations");
      }
      return rho;
    }
  }
  throw Error(ErrorCode::PreconditionFailed, "unknown cocycle kind");
}

}  // namespace tga
