#include "tga/algebra.hpp"

#include <algorithm>

#include "tga/error.hpp"

namespace tga {

TwistedGroupAlgebra::TwistedGroupAlgebra(FactorSystem rho) : rho_(std::move(rho)) {}

std::shared_ptr<const TwistedGroupAlgebra> TwistedGroupAlgebra::make(FactorSystem rho) {
  ValidationReport report;
  try {
    report = validate_factor_system(rho);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidTable, e.what());
  }
  if (!report.valid()) throw Error(ErrorCode::InvalidTable, "factor system is not a normalized 2-cocycle");

  std::shared_ptr<TwistedGroupAlgebra> alg(new TwistedGroupAlgebra(std::move(rho)));
  const Group& g = alg->group();
  const Field& f = alg->field();
  alg->n_ = g.order();
  alg->prod_.resize(alg->n_ * alg->n_);
  alg->log_rho_.resize(alg->n_ * alg->n_);
  for (std::uint32_t a = 0; a < alg->n_; ++a) {
    for (std::uint32_t b = 0; b < alg->n_; ++b) {
      alg->prod_[a * alg->n_ + b] = g.mul(a, b);
      alg->log_rho_[a * alg->n_ + b] = f.log(alg->rho_.at(a, b));
    }
  }
  alg->commutative_ = g.is_abelian() && is_symmetric(alg->rho_).symmetric;
  return alg;
}

void TwistedGroupAlgebra::mul_into(const FieldElem* a, const FieldElem* b, FieldElem* out) const {
  const Field& f = field();
  const std::uint32_t* exp = f.exp_table();
  const std::uint32_t* log = f.log_table();
  std::fill(out, out + n_, FieldElem{0});
  std::uint32_t lb[kMaxGroupOrder];
  std::uint32_t nzb[kMaxGroupOrder];
  std::size_t nb = 0;
  for (std::size_t h = 0; h < n_; ++h) {
    if (b[h].code != 0) {
      nzb[nb++] = static_cast<std::uint32_t>(h);
      lb[h] = log[b[h].code];
    }
  }
  for (std::size_t g = 0; g < n_; ++g) {
    if (a[g].code == 0) continue;
    const std::uint32_t la = log[a[g].code];
    const std::uint32_t* prow = prod_.data() + g * n_;
    const std::uint32_t* rrow = log_rho_.data() + g * n_;
    for (std::size_t t = 0; t < nb; ++t) {
      const std::uint32_t h = nzb[t];
      const FieldElem term{exp[la + lb[h] + rrow[h]]};
      FieldElem& slot = out[prow[h]];
      slot = f.add(slot, term);
    }
  }
}

AlgebraElement::AlgebraElement(AlgebraPtr ambient, std::vector<FieldElem> coeffs)
    : ambient_(std::move(ambient)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ambient_->dim()) throw Error(ErrorCode::AmbientMismatch, "coefficient vector length != |G|");
  for (auto c : coeffs_) {
    if (!ambient_->field().contains(c)) throw Error(ErrorCode::AmbientMismatch, "coefficient outside the field");
  }
}

AlgebraElement AlgebraElement::zero(AlgebraPtr ambient) {
  const auto n = ambient->dim();
  return {std::move(ambient), std::vector<FieldElem>(n)};
}

AlgebraElement AlgebraElement::one(AlgebraPtr ambient) { return basis(std::move(ambient), GroupElem{0}); }

AlgebraElement AlgebraElement::basis(AlgebraPtr ambient, GroupElem g, std::optional<FieldElem> c) {
  std::vector<FieldElem> v(ambient->dim());
  v[g.index] = c.value_or(ambient->field().one());
  return {std::move(ambient), std::move(v)};
}

AlgebraElement AlgebraElement::from_prime_vector(AlgebraPtr ambient, std::span<const std::uint32_t> v) {
  const Field& f = ambient->field();
  const std::uint32_t k = f.degree();
  if (v.size() != ambient->prime_dim()) throw Error(ErrorCode::AmbientMismatch, "prime vector length mismatch");
  std::vector<FieldElem> coeffs(ambient->dim());
  for (std::size_t g = 0; g < coeffs.size(); ++g) coeffs[g] = f.from_coeffs(v.subspan(g * k, k));
  return {std::move(ambient), std::move(coeffs)};
}

PrimeVector AlgebraElement::to_prime_vector() const {
  const Field& f = ambient_->field();
  const std::uint32_t k = f.degree();
  PrimeVector out(coeffs_.size() * k);
  for (std::size_t g = 0; g < coeffs_.size(); ++g) {
    const auto c = f.coeffs(coeffs_[g]);
    std::copy(c.begin(), c.end(), out.begin() + static_cast<std::ptrdiff_t>(g * k));
  }
  return out;
}

bool AlgebraElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](FieldElem c) { return c.code == 0; });
}

std::vector<GroupElem> AlgebraElement::support() const {
  std::vector<GroupElem> out;
  for (std::uint32_t g = 0; g < coeffs_.size(); ++g) {
    if (coeffs_[g].code != 0) out.push_back({g});
  }
  return out;
}

void AlgebraElement::check_same(const AlgebraElement& b) const {
  if (ambient_ != b.ambient_) throw Error(ErrorCode::AmbientMismatch, "elements of different algebras");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& b) const {
  check_same(b);
  const Field& f = ambient_->field();
  std::vector<FieldElem> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(coeffs_[i], b.coeffs_[i]);
  return {ambient_, std::move(out)};
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& b) const {
  check_same(b);
  const Field& f = ambient_->field();
  std::vector<FieldElem> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(coeffs_[i], b.coeffs_[i]);
  return {ambient_, std::move(out)};
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& b) const {
  check_same(b);
  std::vector<FieldElem> out(coeffs_.size());
  ambient_->mul_into(coeffs_.data(), b.coeffs_.data(), out.data());
  return {ambient_, std::move(out)};
}

AlgebraElement AlgebraElement::operator-() const {
  const Field& f = ambient_->field();
  std::vector<FieldElem> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.neg(coeffs_[i]);
  return {ambient_, std::move(out)};
}

AlgebraElement AlgebraElement::scaled(FieldElem c) const {
  const Field& f = ambient_->field();
  std::vector<FieldElem> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.mul(coeffs_[i], c);
  return {ambient_, std::move(out)};
}

AlgebraElement AlgebraElement::pow(std::uint64_t e) const {
  AlgebraElement result = one(ambient_);
  AlgebraElement base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

bool AlgebraElement::operator==(const AlgebraElement& b) const {
  return ambient_ == b.ambient_ && coeffs_ == b.coeffs_;
}

AlgebraElement alg_arith(AlgebraOp op, const AlgebraElement& a, const AlgebraElement& b, FieldElem scalar) {
  switch (op) {
    case AlgebraOp::Add: return a + b;
    case AlgebraOp::Sub: return a - b;
    case AlgebraOp::Mul: return a * b;
    case AlgebraOp::ScalarMul: return a.scaled(scalar);
    case AlgebraOp::Neg: return -a;
  }
  throw Error(ErrorCode::PreconditionFailed, "unknown algebra op");
}

std::vector<GroupElem> support(const AlgebraElement& a) { return a.support(); }

PrimeMatrix left_right_rep(const AlgebraElement& a, Side side) {
  const auto& amb = a.ambient();
  const Field& f = amb->field();
  const std::uint32_t k = f.degree();
  const std::size_t n = amb->dim();
  PrimeMatrix m(amb->prime_dim(), amb->prime_dim(), f.characteristic());
  for (std::uint32_t g = 0; g < n; ++g) {
    const auto ug = AlgebraElement::basis(amb, {g});
    const AlgebraElement prod = side == Side::Left ? a * ug : ug * a;
    for (std::uint32_t i = 0; i < k; ++i) {
      // K is central, so a (u_g x^i) = (a u_g) x^i and likewise on the right.
      const auto col = prod.scaled(f.basis_elem(i)).to_prime_vector();
      m.set_column(g * k + i, col);
    }
  }
  return m;
}

bool is_nilpotent(const AlgebraElement& a) {
  const std::size_t n = a.ambient()->dim();
  AlgebraElement x = a;
  std::size_t reach = 1;
  while (!x.is_zero() && reach < n) {
    x = x * x;
    reach *= 2;
  }
  return x.is_zero();
}

bool is_central(const AlgebraElement& a) {
  const auto& amb = a.ambient();
  for (std::uint32_t g = 0; g < amb->dim(); ++g) {
    const auto ug = AlgebraElement::basis(amb, {g});
    if (!(a * ug == ug * a)) return false;
  }
  return true;
}

namespace {

std::vector<AlgebraElement> prime_basis(const AlgebraPtr& amb) {
  const Field& f = amb->field();
  std::vector<AlgebraElement> out;
  for (std::uint32_t g = 0; g < amb->dim(); ++g) {
    for (std::uint32_t i = 0; i < f.degree(); ++i) out.push_back(AlgebraElement::basis(amb, {g}, f.basis_elem(i)));
  }
  return out;
}

std::uint64_t frobenius_exponent(const AlgebraPtr& amb) {
  const std::uint64_t p = amb->field().characteristic();
  std::uint64_t pe = p;
  while (pe < amb->prime_dim()) pe *= p;
  return pe;
}

// Kernel of x -> x^{p^e} restricted to span(basis); the map is additive there.
std::vector<AlgebraElement> frobenius_kernel(const AlgebraPtr& amb, const std::vector<AlgebraElement>& basis) {
  const std::uint64_t pe = frobenius_exponent(amb);
  const std::uint32_t p = amb->field().characteristic();
  PrimeMatrix m(amb->prime_dim(), basis.size(), p);
  for (std::size_t j = 0; j < basis.size(); ++j) m.set_column(j, basis[j].pow(pe).to_prime_vector());
  std::vector<AlgebraElement> out;
  for (const auto& coeffs : kernel_basis(m)) {
    PrimeVector v(amb->prime_dim(), 0);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (coeffs[j] == 0) continue;
      const auto bj = basis[j].to_prime_vector();
      for (std::size_t r = 0; r < v.size(); ++r) v[r] = static_cast<std::uint32_t>((v[r] + static_cast<std::uint64_t>(coeffs[j]) * bj[r]) % p);
    }
    out.push_back(AlgebraElement::from_prime_vector(amb, v));
  }
  return out;
}

}  // namespace

std::vector<AlgebraElement> center_basis(const AlgebraPtr& amb) {
  const std::size_t d = amb->prime_dim();
  const std::size_t n = amb->dim();
  const std::uint32_t p = amb->field().characteristic();
  const auto basis = prime_basis(amb);
  // Column j: the commutators [e_j, u_h] for every h, stacked.
  PrimeMatrix m(d * n, d, p);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::uint32_t h = 0; h < n; ++h) {
      const auto uh = AlgebraElement::basis(amb, {h});
      const auto comm = (basis[j] * uh - uh * basis[j]).to_prime_vector();
      for (std::size_t r = 0; r < d; ++r) m(h * d + r, j) = comm[r];
    }
  }
  std::vector<AlgebraElement> out;
  for (const auto& v : kernel_basis(m)) out.push_back(AlgebraElement::from_prime_vector(amb, v));
  return out;
}

std::vector<AlgebraElement> nilradical_commutative(const AlgebraPtr& amb) {
  if (!amb->is_commutative()) throw Error(ErrorCode::NotCommutative, "nilradical_commutative needs a commutative algebra");
  return frobenius_kernel(amb, prime_basis(amb));
}

std::vector<AlgebraElement> central_nilradical(const AlgebraPtr& amb) {
  if (amb->is_commutative()) return nilradical_commutative(amb);
  return frobenius_kernel(amb, center_basis(amb));
}

bool in_span(const std::vector<AlgebraElement>& basis, const AlgebraElement& v) {
  const auto& amb = v.ambient();
  PrimeMatrix m(amb->prime_dim(), basis.size(), amb->field().characteristic());
  for (std::size_t j = 0; j < basis.size(); ++j) m.set_column(j, basis[j].to_prime_vector());
  return solve(m, v.to_prime_vector()).has_value();
}

Restriction restrict_equation(const AlgebraElement& a, const AlgebraElement& x, const AlgebraElement& b,
                              const AlgebraElement& c) {
  if (!(a * x * b == c)) throw Error(ErrorCode::PreconditionFailed, "a x b != c");
  std::vector<GroupElem> gens;
  for (const auto* e : {&a, &b, &c}) {
    for (auto g : e->support()) {
      if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
    }
  }
  Subgroup h = generated_subgroup(a.ambient()->group(), gens);
  std::vector<FieldElem> y(x.coeffs().size());
  for (auto g : h.embedding) y[g.index] = x.coeff(g);
  return {AlgebraElement(x.ambient(), std::move(y)), std::move(h)};
}

}  // namespace tga
