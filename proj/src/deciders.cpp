#include "tga/deciders.hpp"

#include <numeric>
#include <random>

namespace tga {

namespace {

AlgebraElement group_sum(const VBasis& vb, GroupElem g, std::uint32_t terms) {
  AlgebraElement s = AlgebraElement::one(vb.ambient);
  AlgebraElement power = s;
  for (std::uint32_t i = 1; i < terms; ++i) {
    power = power * vb.v[g.index];
    s = s + power;
  }
  return s;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * base % m);
    base = static_cast<std::uint64_t>(static_cast<unsigned __int128>(base) * base % m);
    e >>= 1;
  }
  return r;
}

// GF(Q) with Q = p^degree contains an n-th root of a, where a has multiplicative order d.
bool root_available(std::uint32_t p, std::uint32_t degree, std::uint64_t d, std::uint64_t n) {
  const std::uint64_t m = d * n;
  const std::uint64_t r = (mod_pow(p, degree, m) + m - 1) % m;  // (Q - 1) mod dn
  const std::uint64_t g = std::gcd(n, r);
  return r % (d * g) == 0;
}

bool isotropic2_available(std::uint32_t p, std::uint32_t degree) {
  return p == 2 || mod_pow(p, degree, 4) == 1;
}

bool has_order_four(const Group& g) {
  for (auto o : g.element_orders()) {
    if (o == 4) return true;
  }
  return false;
}

void require_admissible(const AlgebraPtr& ambient) {
  ClosureReport report = sufficiently_closed(ambient);
  if (!report.passes) throw NotAdmissibleError(std::move(report));
}

std::vector<Condition> theorem_conditions(const AlgebraPtr& ambient, bool with_orders) {
  const Group& g = ambient->group();
  std::vector<Condition> out;
  out.push_back({"abelian", g.is_abelian()});
  if (with_orders) out.push_back({"orders_invertible", ambient->field().integer_invertible(g.order())});
  out.push_back({"symmetric", is_symmetric(ambient->factor_system()).symmetric});
  out.push_back({"sufficiently_closed", true});
  return out;
}

bool all_hold(const std::vector<Condition>& cs) {
  for (const auto& c : cs) {
    if (!c.holds) return false;
  }
  return true;
}

}  // namespace

std::optional<VBasis> make_v_basis(const AlgebraPtr& ambient) {
  UnitPowerRescaling r = unit_power_rescaling(ambient->factor_system());
  if (!r.ok()) return std::nullopt;
  VBasis vb{ambient, *r.mu, {}};
  vb.v.reserve(ambient->dim());
  for (std::uint32_t g = 0; g < ambient->dim(); ++g) {
    vb.v.push_back(AlgebraElement::basis(ambient, GroupElem{g}, vb.mu.mu[g]));
  }
  return vb;
}

bool unit_commutation_holds(const VBasis& vb, GroupElem g, GroupElem h) {
  const std::uint32_t n = vb.ambient->group().element_order(g);
  const AlgebraElement& vh = vb.v[h.index];
  AlgebraElement lhs = vb.v[g.index] * vh;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (lhs == vh) return true;
    lhs = lhs * vb.v[g.index];
  }
  return false;
}

std::optional<Witness> witness_unit_commutation(const AlgebraPtr& ambient) {
  const auto vb = make_v_basis(ambient);
  if (!vb) return std::nullopt;
  const Group& grp = ambient->group();
  const auto one = AlgebraElement::one(ambient);
  for (std::uint32_t g = 1; g < grp.order(); ++g) {
    const GroupElem ge{g};
    const AlgebraElement left = vb->v[g] - one;
    const AlgebraElement right = group_sum(*vb, ge, grp.element_order(ge));
    for (std::uint32_t h = 0; h < grp.order(); ++h) {
      AlgebraElement x = left * vb->v[h] * right;
      if (x.is_zero()) continue;
      auto w = Witness::nilpotent("unit_commutation", std::move(x), 2);
      if (!w) continue;
      w->label("g", grp.name(ge)).label("h", grp.name(GroupElem{h}));
      return w;
    }
  }
  return std::nullopt;
}

std::optional<Witness> witness_char_p(const AlgebraPtr& ambient) {
  const std::uint32_t p = ambient->field().characteristic();
  const Group& grp = ambient->group();
  if (grp.order() % p != 0) return std::nullopt;
  const auto vb = make_v_basis(ambient);
  if (!vb) return std::nullopt;
  for (std::uint32_t g = 1; g < grp.order(); ++g) {
    if (grp.element_order(GroupElem{g}) != p) continue;
    auto w = Witness::nilpotent("char_p", group_sum(*vb, GroupElem{g}, p), p);
    if (!w) return std::nullopt;
    w->label("g", grp.name(GroupElem{g}));
    return w;
  }
  return std::nullopt;
}

std::optional<Witness> witness_quaternion(const AlgebraPtr& ambient) {
  if (ambient->group().classify() != GroupClass::Hamiltonian) return std::nullopt;
  const auto iso = ambient->field().isotropic(2);
  if (!iso) return std::nullopt;
  return witness_quaternion(ambient, (*iso)[0], (*iso)[1]);
}

std::optional<Witness> witness_quaternion(const AlgebraPtr& ambient, FieldElem alpha, FieldElem beta) {
  const Field& f = ambient->field();
  if (f.add(f.mul(alpha, alpha), f.mul(beta, beta)).code != 0) return std::nullopt;
  if (alpha.code == 0 && beta.code == 0) return std::nullopt;
  const Group& grp = ambient->group();
  if (grp.is_abelian()) return std::nullopt;
  const auto vb = make_v_basis(ambient);
  if (!vb) return std::nullopt;
  for (std::uint32_t gi = 1; gi < grp.order(); ++gi) {
    const GroupElem g{gi};
    if (grp.element_order(g) != 4) continue;
    const GroupElem g2 = grp.mul(g, g);
    for (std::uint32_t hi = 1; hi < grp.order(); ++hi) {
      const GroupElem h{hi};
      if (grp.mul(h, h) != g2 || grp.conjugate(g, h) != grp.inverse(g)) continue;
      const auto& vg = vb->v[gi];
      const auto& vh = vb->v[hi];
      if (!(vg * vh * vg == vh)) continue;
      const auto vg2 = vg * vg;
      const auto vg3 = vg2 * vg;
      AlgebraElement w = (vg2 * vh - vh).scaled(alpha) + (vg3 * vh - vg * vh).scaled(beta);
      auto wit = Witness::nilpotent("quaternion", std::move(w), 2);
      if (!wit) continue;
      wit->label("g", grp.name(g)).label("h", grp.name(h));
      return wit;
    }
  }
  return std::nullopt;
}

std::optional<Witness> find_nilpotent_witness(const AlgebraPtr& ambient) {
  if (auto w = witness_char_p(ambient)) return w;
  if (auto w = witness_unit_commutation(ambient)) return w;
  return witness_quaternion(ambient);
}

ClosureReport sufficiently_closed(const AlgebraPtr& ambient) {
  ClosureReport report;
  const Field& f = ambient->field();
  const Group& grp = ambient->group();
  report.missing_roots = unit_power_rescaling(ambient->factor_system()).failures;
  report.needs_isotropic = grp.classify() == GroupClass::Hamiltonian || has_order_four(grp);
  if (report.needs_isotropic) report.isotropic_ok = f.isotropic(2).has_value();
  report.passes = report.missing_roots.empty() && report.isotropic_ok;
  if (report.passes) return report;

  const std::uint32_t p = f.characteristic();
  const std::uint32_t k = f.degree();
  for (std::uint32_t m = 2; m <= 64; ++m) {
    const std::uint32_t degree = k * m;
    bool ok = !report.needs_isotropic || isotropic2_available(p, degree);
    for (const auto& miss : report.missing_roots) {
      if (!ok) break;
      const std::uint64_t d = f.multiplicative_order(f.inv(miss.alpha));
      ok = root_available(p, degree, d, miss.order);
    }
    if (ok) {
      report.suggested_degree = degree;
      break;
    }
  }
  return report;
}

namespace {

std::string closure_message(const ClosureReport& r) {
  std::string msg = "instance is not sufficiently closed:";
  if (!r.missing_roots.empty()) msg += " " + std::to_string(r.missing_roots.size()) + " missing roots";
  if (!r.isotropic_ok) msg += " no solution of x^2 + y^2 = 0";
  if (r.suggested_degree) msg += "; try extension degree " + std::to_string(*r.suggested_degree);
  return msg;
}

}  // namespace

NotAdmissibleError::NotAdmissibleError(ClosureReport report)
    : Error(ErrorCode::NotAdmissible, closure_message(report)), report_(std::move(report)) {}

std::string_view to_string(Property p) {
  switch (p) {
    case Property::NoNilpotents: return "no_nilpotents";
    case Property::NWeaklyRegular: return "n_weakly_regular";
    case Property::StronglyRegular: return "strongly_regular";
    case Property::XiN: return "xi_N";
    case Property::GroupRingNWeak: return "group_ring_n_weak";
  }
  return "unknown";
}

std::optional<Property> parse_property(std::string_view s) {
  for (auto p : {Property::NoNilpotents, Property::NWeaklyRegular, Property::StronglyRegular, Property::XiN,
                 Property::GroupRingNWeak}) {
    if (s == to_string(p)) return p;
  }
  if (s == "n_weak") return Property::NWeaklyRegular;
  return std::nullopt;
}

const Condition* Decision::condition(std::string_view name) const {
  for (const auto& c : conditions) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Decision decide_no_nilpotents(const AlgebraPtr& ambient) {
  require_admissible(ambient);
  Decision d;
  d.property = Property::NoNilpotents;
  d.conditions = theorem_conditions(ambient, true);
  d.verdict = all_hold(d.conditions);
  if (!d.verdict) d.witness = find_nilpotent_witness(ambient);
  return d;
}

Decision decide_n_weakly_regular(const AlgebraPtr& ambient, std::uint32_t n) {
  if (n < 2) throw Error(ErrorCode::PreconditionFailed, "n-weak regularity needs n >= 2");
  require_admissible(ambient);
  Decision d;
  d.property = Property::NWeaklyRegular;
  d.n = n;
  d.conditions = theorem_conditions(ambient, true);
  d.verdict = all_hold(d.conditions);
  if (!d.verdict) d.witness = find_nilpotent_witness(ambient);
  return d;
}

Decision decide_strongly_regular(const AlgebraPtr& ambient) {
  require_admissible(ambient);
  Decision d;
  d.property = Property::StronglyRegular;
  d.conditions = theorem_conditions(ambient, true);
  d.verdict = all_hold(d.conditions);
  if (!d.verdict) d.witness = find_nilpotent_witness(ambient);
  return d;
}

Decision decide_xi_N(const AlgebraPtr& ambient) {
  require_admissible(ambient);
  Decision d;
  d.property = Property::XiN;
  d.conditions = theorem_conditions(ambient, false);
  d.verdict = all_hold(d.conditions);
  // Noncommutative ambients contain nilpotents; those are the certificates attached.
  if (!d.verdict) d.witness = find_nilpotent_witness(ambient);
  return d;
}

Decision decide_group_ring_n_weak(const AlgebraPtr& ambient) {
  const Field& f = ambient->field();
  for (auto e : ambient->factor_system().entries()) {
    if (e != f.one()) throw Error(ErrorCode::PreconditionFailed, "group ring decider needs the trivial factor system");
  }
  const Group& grp = ambient->group();
  Decision d;
  d.property = Property::GroupRingNWeak;
  bool no_p_elements = true;
  for (auto o : grp.element_orders()) {
    if (o % f.characteristic() == 0) no_p_elements = false;
  }
  d.conditions.push_back({"abelian", grp.is_abelian()});
  d.conditions.push_back({"no_p_elements", no_p_elements});
  if (grp.classify() == GroupClass::Hamiltonian) {
    // Over a finite field x^2 + y^2 + z^2 = 0 always has a nontrivial solution,
    // so the hamiltonian branch never applies.
    d.isotropic_solution = f.isotropic(3);
    d.conditions.push_back({"sum_of_three_squares_anisotropic", !d.isotropic_solution.has_value()});
  }
  d.verdict = grp.is_abelian() && no_p_elements;
  return d;
}

EquivalenceReport decide_equivalences(const AlgebraPtr& ambient, std::uint32_t n_max, std::uint64_t seed,
                                      std::size_t samples) {
  if (n_max < 2) throw Error(ErrorCode::PreconditionFailed, "n_max must be at least 2");
  EquivalenceReport r;
  for (std::uint32_t n = 2; n <= n_max; ++n) r.n_weak.push_back(decide_n_weakly_regular(ambient, n));
  r.strongly_regular = decide_strongly_regular(ambient);
  r.conditions_hold = all_hold(theorem_conditions(ambient, true));
  r.all_equal = r.strongly_regular.verdict == r.conditions_hold;
  for (const auto& d : r.n_weak) r.all_equal = r.all_equal && d.verdict == r.conditions_hold;
  if (!r.conditions_hold) return r;

  const Field& f = ambient->field();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coeff(0, f.order() - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<FieldElem> c(ambient->dim());
    for (auto& x : c) x = FieldElem{coeff(rng)};
    const AlgebraElement a(ambient, std::move(c));
    ++r.samples;
    const auto bv = solve(left_right_rep(a * a, Side::Left), a.to_prime_vector());
    if (!bv) continue;
    const auto b = AlgebraElement::from_prime_vector(ambient, *bv);
    if (a * b * a == a) ++r.sample_witnesses;
  }
  return r;
}

}  // namespace tga
