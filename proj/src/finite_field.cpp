#include "tga/finite_field.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "tga/error.hpp"

namespace tga {
namespace {

constexpr std::uint32_t kNoLog = 0xffffffffu;

// Remainder of `num` modulo the monic `den` over GF(p); both constant term first.
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> num, std::span<const std::uint32_t> den,
                                    std::uint32_t p) {
  const std::size_t dd = den.size() - 1;
  for (std::size_t i = num.size(); i-- > dd;) {
    const std::uint32_t c = num[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) {
      const std::size_t idx = i - dd + j;
      num[idx] = static_cast<std::uint32_t>((num[idx] + static_cast<std::uint64_t>(p - c) * den[j]) % p);
    }
  }
  num.resize(std::min(num.size(), dd));
  return num;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
  if (poly.size() < 2 || poly.back() != 1) return false;
  const std::size_t k = poly.size() - 1;
  if (k == 1) return true;
  if (poly[0] % p == 0) return false;
  // A reducible polynomial has a monic factor of degree <= k/2; p^{k/2} <= 2^8 here.
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t t = 0; t < count; ++t) {
      std::vector<std::uint32_t> factor(d + 1, 0);
      std::uint64_t rest = t;
      for (std::size_t i = 0; i < d; ++i) {
        factor[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      factor[d] = 1;
      auto r = poly_mod(std::vector<std::uint32_t>(poly.begin(), poly.end()), factor, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t k) {
  if (k == 1) return {0, 1};
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  // Lexicographic on (c_{k-1}, ..., c_0): c_0 is the least significant digit of t.
  for (std::uint64_t t = 0; t < count; ++t) {
    std::vector<std::uint32_t> poly(k + 1, 0);
    std::uint64_t rest = t;
    for (std::uint32_t i = 0; i < k; ++i) {
      poly[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    poly[k] = 1;
    if (is_irreducible(poly, p)) return poly;
  }
  throw Error(ErrorCode::InvalidField, "no irreducible polynomial found");
}

std::shared_ptr<const Field> Field::make(const FieldSpec& spec) {
  if (spec.modulus.empty()) return make(spec.p, spec.k);
  return make(spec.p, spec.k, spec.modulus);
}

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::uint32_t k,
                                         std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidField, "characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw Error(ErrorCode::InvalidField, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw Error(ErrorCode::InvalidField, "field order exceeds 2^16");
  }

  std::shared_ptr<Field> f(new Field());
  f->spec_.p = p;
  f->spec_.k = k;
  f->q_ = static_cast<std::uint32_t>(q);
  if (modulus) {
    const auto& m = *modulus;
    if (m.size() != k + 1 || m.back() != 1 ||
        std::any_of(m.begin(), m.end(), [p](std::uint32_t c) { return c >= p; }))
      throw Error(ErrorCode::InvalidField, "modulus must be monic of degree k with entries in [0, p)");
    if (!is_irreducible(m, p)) throw Error(ErrorCode::InvalidField, "modulus is not irreducible");
    f->spec_.modulus = m;
  } else {
    f->spec_.modulus = smallest_irreducible(p, k);
  }

  f->pow_p_.resize(k + 1);
  f->pow_p_[0] = 1;
  for (std::uint32_t i = 1; i <= k; ++i) f->pow_p_[i] = f->pow_p_[i - 1] * p;

  if (k == 1) {
    f->add_mode_ = AddMode::Prime;
  } else if (p == 2) {
    f->add_mode_ = AddMode::Xor;
  } else {
    f->add_mode_ = AddMode::Zech;
  }

  // Smallest code generating the multiplicative group.
  const std::uint32_t qm1 = f->q_ - 1;
  f->exp_.assign(3 * static_cast<std::size_t>(qm1) + 1, 0);
  f->log_.assign(f->q_, 0);
  for (std::uint32_t cand = 1; cand < f->q_; ++cand) {
    std::vector<std::uint32_t> powers;
    powers.reserve(qm1);
    FieldElem x{1};
    bool primitive = true;
    for (std::uint32_t i = 0; i < qm1; ++i) {
      if (i > 0 && x.code == 1) {
        primitive = false;
        break;
      }
      powers.push_back(x.code);
      x = f->mul_poly(x, FieldElem{cand});
    }
    if (!primitive || x.code != 1) continue;
    for (std::uint32_t i = 0; i < qm1; ++i) {
      f->log_[powers[i]] = i;
    }
    for (std::size_t i = 0; i < f->exp_.size(); ++i) f->exp_[i] = powers[i % qm1];
    break;
  }

  if (f->add_mode_ == AddMode::Zech) {
    f->zech_.assign(qm1, kNoLog);
    for (std::uint32_t i = 0; i < qm1; ++i) {
      const FieldElem s = f->add_digits(FieldElem{1}, FieldElem{f->exp_[i]});
      f->zech_[i] = s.code == 0 ? kNoLog : f->log_[s.code];
    }
  }
  f->minus_one_ = f->from_int(-1);
  return f;
}

std::string Field::name() const {
  return "GF(" + std::to_string(q_) + ")";
}

FieldElem Field::from_int(std::int64_t v) const {
  const std::int64_t p = spec_.p;
  return {static_cast<std::uint32_t>(((v % p) + p) % p)};
}

FieldElem Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != spec_.k)
    throw Error(ErrorCode::InvalidField, "element needs exactly " + std::to_string(spec_.k) + " coefficients");
  std::uint32_t code = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= spec_.p) throw Error(ErrorCode::InvalidField, "coefficient not reduced mod p");
    code += coeffs[i] * pow_p_[i];
  }
  return {code};
}

std::vector<std::uint32_t> Field::coeffs(FieldElem a) const {
  std::vector<std::uint32_t> out(spec_.k);
  std::uint32_t rest = a.code;
  for (auto& c : out) {
    c = rest % spec_.p;
    rest /= spec_.p;
  }
  return out;
}

FieldElem Field::add_digits(FieldElem a, FieldElem b) const {
  std::uint32_t out = 0;
  std::uint32_t x = a.code;
  std::uint32_t y = b.code;
  for (std::uint32_t i = 0; i < spec_.k; ++i) {
    out += ((x % spec_.p + y % spec_.p) % spec_.p) * pow_p_[i];
    x /= spec_.p;
    y /= spec_.p;
  }
  return {out};
}

FieldElem Field::add_zech(FieldElem a, FieldElem b) const {
  if (a.code == 0) return b;
  if (b.code == 0) return a;
  const std::uint32_t qm1 = q_ - 1;
  const std::uint32_t la = log_[a.code];
  const std::uint32_t lb = log_[b.code];
  const std::uint32_t d = lb >= la ? lb - la : lb + qm1 - la;
  const std::uint32_t z = zech_[d];
  if (z == kNoLog) return {0};
  return {exp_[la + z]};
}

FieldElem Field::mul_poly(FieldElem a, FieldElem b) const {
  const auto ca = coeffs(a);
  const auto cb = coeffs(b);
  std::vector<std::uint32_t> prod(2 * spec_.k - 1, 0);
  for (std::uint32_t i = 0; i < spec_.k; ++i) {
    for (std::uint32_t j = 0; j < spec_.k; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % spec_.p);
    }
  }
  auto r = poly_mod(std::move(prod), spec_.modulus, spec_.p);
  r.resize(spec_.k, 0);
  std::uint32_t code = 0;
  for (std::uint32_t i = 0; i < spec_.k; ++i) code += r[i] * pow_p_[i];
  return {code};
}

FieldElem Field::neg(FieldElem a) const {
  if (a.code == 0) return a;
  switch (add_mode_) {
    case AddMode::Prime: return {spec_.p - a.code};
    case AddMode::Xor: return a;
    case AddMode::Zech: break;
  }
  return mul(a, minus_one_);
}

FieldElem Field::inv(FieldElem a) const {
  if (a.code == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const std::uint32_t qm1 = q_ - 1;
  return {exp_[(qm1 - log_[a.code]) % qm1]};
}

FieldElem Field::pow(FieldElem a, std::int64_t e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  if (e == 0) return one();
  if (a.code == 0) return zero();
  const std::uint64_t qm1 = q_ - 1;
  const std::uint64_t r = (static_cast<std::uint64_t>(log_[a.code]) * (static_cast<std::uint64_t>(e) % qm1)) % qm1;
  return {exp_[r]};
}

std::uint64_t Field::multiplicative_order(FieldElem a) const {
  if (a.code == 0) throw Error(ErrorCode::ZeroArgument, "zero has no multiplicative order");
  const std::uint64_t qm1 = q_ - 1;
  return qm1 / std::gcd<std::uint64_t>(log_[a.code], qm1);
}

// Coefficient sequences compare leading coefficient first, which is the order of the codes.
std::uint32_t Field::lex_key(FieldElem a) const { return a.code; }

FieldElem Field::from_lex_key(std::uint32_t key) const { return {key}; }

bool Field::has_nth_root(FieldElem a, std::uint64_t n) const {
  if (a.code == 0) throw Error(ErrorCode::ZeroArgument, "root test of zero");
  const std::uint64_t qm1 = q_ - 1;
  const std::uint64_t e = qm1 / std::gcd(n % qm1 == 0 ? qm1 : n % qm1, qm1);
  return pow(a, static_cast<std::int64_t>(e)).code == 1;
}

std::optional<FieldElem> Field::nth_root(FieldElem a, std::uint64_t n) const {
  if (a.code == 0) throw Error(ErrorCode::ZeroArgument, "nth root of zero");
  if (n == 0) throw Error(ErrorCode::PreconditionFailed, "root index must be positive");
  if (q_ <= (1u << 12)) return nth_root_bruteforce(a, n);
  return nth_root_logs(a, n);
}

std::optional<FieldElem> Field::nth_root_bruteforce(FieldElem a, std::uint64_t n) const {
  const std::uint64_t r = n % (q_ - 1);
  const std::int64_t e = static_cast<std::int64_t>(r == 0 ? q_ - 1 : r);
  for (std::uint32_t key = 1; key < q_; ++key) {
    const FieldElem mu = from_lex_key(key);
    if (pow(mu, e) == a) return mu;
  }
  return std::nullopt;
}

std::optional<FieldElem> Field::nth_root_logs(FieldElem a, std::uint64_t n) const {
  if (!has_nth_root(a, n)) return std::nullopt;
  const std::uint64_t qm1 = q_ - 1;
  const std::uint64_t nr = n % qm1;
  const std::uint64_t d = std::gcd(nr == 0 ? qm1 : nr, qm1);
  const std::uint64_t m = qm1 / d;
  const std::uint64_t l = log_[a.code] / d;  // d | log a by the existence test
  // mu = g^t with t * n = log a (mod q - 1):  t = l * (n/d)^{-1} (mod m) + j m.
  std::uint64_t base = 0;
  if (m > 1) {
    const std::int64_t nd = static_cast<std::int64_t>((n / d) % m);
    std::int64_t old_r = nd, r = static_cast<std::int64_t>(m), old_s = 1, s = 0;
    while (r != 0) {
      const std::int64_t quot = old_r / r;
      std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
      std::tie(old_s, s) = std::make_pair(s, old_s - quot * s);
    }
    const std::int64_t mm = static_cast<std::int64_t>(m);
    const std::uint64_t inv = static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
    base = (l % m) * inv % m;
  }
  std::optional<FieldElem> best;
  for (std::uint64_t j = 0; j < d; ++j) {
    const FieldElem mu{exp_[(base + j * m) % qm1]};
    if (!best || lex_less(mu, *best)) best = mu;
  }
  return best;
}

std::optional<std::vector<FieldElem>> Field::isotropic(int dim) const {
  if (dim != 2 && dim != 3) throw Error(ErrorCode::PreconditionFailed, "isotropic dimension must be 2 or 3");
  const FieldElem first = from_lex_key(1);  // lexicographically first nonzero element
  auto sqrt_or_zero = [&](FieldElem t) -> std::optional<FieldElem> {
    if (t.code == 0) return zero();
    return nth_root(t, 2);
  };
  if (dim == 2) {
    // x = 0 forces y = 0; the ratio y/x is a square root of -1, so the first x decides.
    const auto y = sqrt_or_zero(neg(mul(first, first)));
    if (!y) return std::nullopt;
    return std::vector<FieldElem>{first, *y};
  }
  if (const auto z = sqrt_or_zero(neg(mul(first, first)))) {
    return std::vector<FieldElem>{zero(), first, *z};
  }
  for (std::uint32_t key = 0; key < q_; ++key) {
    const FieldElem y = from_lex_key(key);
    const FieldElem t = neg(add(mul(first, first), mul(y, y)));
    if (const auto z = sqrt_or_zero(t)) return std::vector<FieldElem>{first, y, *z};
  }
  return std::nullopt;
}

FieldElem Field::arith(ArithOp op, FieldElem a, FieldElem b) const {
  switch (op) {
    case ArithOp::Add: return add(a, b);
    case ArithOp::Sub: return sub(a, b);
    case ArithOp::Mul: return mul(a, b);
    case ArithOp::Neg: return neg(a);
    case ArithOp::Inv: return inv(a);
    case ArithOp::Pow: break;
  }
  throw Error(ErrorCode::PreconditionFailed, "pow takes an integer exponent");
}

FieldElem Field::arith(ArithOp op, FieldElem a, std::int64_t exponent) const {
  if (op == ArithOp::Pow) return pow(a, exponent);
  return arith(op, a, from_int(exponent));
}

Scalar::Scalar(FieldPtr field, FieldElem value) : field_(std::move(field)), value_(value) {
  if (!field_->contains(value_)) throw Error(ErrorCode::InvalidField, "element code out of range");
}

namespace {
const Field& common_field(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field() && !(*a.field() == *b.field()))
    throw Error(ErrorCode::FieldMismatch, a.field()->name() + " vs " + b.field()->name());
  return *a.field();
}
}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) { return {a.field(), common_field(a, b).add(a.value(), b.value())}; }
Scalar operator-(const Scalar& a, const Scalar& b) { return {a.field(), common_field(a, b).sub(a.value(), b.value())}; }
Scalar operator*(const Scalar& a, const Scalar& b) { return {a.field(), common_field(a, b).mul(a.value(), b.value())}; }
Scalar operator/(const Scalar& a, const Scalar& b) { return {a.field(), common_field(a, b).div(a.value(), b.value())}; }
Scalar Scalar::operator-() const { return {field_, field_->neg(value_)}; }
Scalar Scalar::inv() const { return {field_, field_->inv(value_)}; }
Scalar Scalar::pow(std::int64_t e) const { return {field_, field_->pow(value_, e)}; }
bool operator==(const Scalar& a, const Scalar& b) { return a.value() == b.value() && *a.field() == *b.field(); }

Scalar ff_arith(ArithOp op, const Scalar& a, const Scalar& b) {
  const Field& f = common_field(a, b);
  return {a.field(), f.arith(op, a.value(), b.value())};
}

Scalar ff_arith(ArithOp op, const Scalar& a, std::int64_t exponent) {
  return {a.field(), a.field()->arith(op, a.value(), exponent)};
}

}  // namespace tga
