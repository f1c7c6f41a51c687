#include "tga/oracles.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <thread>

#include "tga/deciders.hpp"
#include "tga/witness.hpp"

namespace tga {

namespace {

constexpr std::uint64_t kChunk = 8192;

enum class Outcome { Certified, Refuted, Undetermined };

// Runs check(i) for i in [0, total) split into chunks; each worker handles one chunk
// per round.  Returns the smallest index whose check returned `stop`, if any, so the
// result does not depend on the worker count.
std::optional<std::uint64_t> first_index(std::uint64_t total, unsigned parallelism,
                                         const std::function<Outcome(std::uint64_t)>& check, Outcome stop,
                                         std::uint64_t& undetermined, std::uint64_t& checked) {
  const unsigned workers = std::max(1u, parallelism);
  std::vector<std::optional<std::uint64_t>> hit(workers);
  std::vector<std::uint64_t> undet(workers), done(workers);
  for (std::uint64_t base = 0; base < total; base += kChunk * workers) {
    auto run = [&](unsigned w) {
      hit[w].reset();
      undet[w] = 0;
      done[w] = 0;
      const std::uint64_t lo = base + w * kChunk;
      const std::uint64_t hi = std::min(total, lo + kChunk);
      for (std::uint64_t i = lo; i < hi; ++i) {
        const Outcome o = check(i);
        ++done[w];
        if (o == stop) {
          hit[w] = i;
          return;
        }
        if (o == Outcome::Undetermined) ++undet[w];
      }
    };
    if (workers == 1) {
      run(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
      for (auto& t : pool) t.join();
    }
    for (unsigned w = 0; w < workers; ++w) {
      checked += done[w];
      undetermined += undet[w];
      if (hit[w]) {
        // Later workers may have scanned past this point; the count stays an upper bound.
        return hit[w];
      }
    }
  }
  return std::nullopt;
}

bool nilpotent_raw(const TwistedGroupAlgebra& alg, std::vector<FieldElem>& x, std::vector<FieldElem>& tmp) {
  const std::size_t n = alg.dim();
  std::size_t reach = 1;
  while (true) {
    bool zero = true;
    for (auto c : x) {
      if (c.code != 0) {
        zero = false;
        break;
      }
    }
    if (zero) return true;
    if (reach >= n) return false;
    alg.mul_into(x.data(), x.data(), tmp.data());
    x.swap(tmp);
    reach *= 2;
  }
}

bool nonzero_nilpotent(const AlgebraElement& a) { return !a.is_zero() && is_nilpotent(a); }

std::vector<FieldElem> random_coeffs(const AlgebraPtr& ambient, std::mt19937_64& rng) {
  const std::uint32_t q = ambient->field().order();
  std::vector<FieldElem> c(ambient->dim());
  for (auto& x : c) x = FieldElem{static_cast<std::uint32_t>(rng() % q)};
  return c;
}

// Sampling stream: deterministic candidates, then random elements interleaved with
// products (v_g - 1) r (1 + v_g + ... + v_g^{n-1}).
class SampleStream {
 public:
  SampleStream(const AlgebraPtr& ambient, std::vector<AlgebraElement> seeds, std::uint64_t budget, std::uint64_t seed)
      : ambient_(ambient), seeds_(std::move(seeds)), budget_(budget), rng_(seed), vb_(make_v_basis(ambient)) {}

  std::uint64_t size() const { return seeds_.size() + budget_; }

  /// Next `count` elements (fewer at the end of the stream).
  std::vector<AlgebraElement> next(std::uint64_t count) {
    std::vector<AlgebraElement> out;
    while (out.size() < count && pos_ < size()) {
      out.push_back(pos_ < seeds_.size() ? seeds_[pos_] : draw(pos_ - seeds_.size()));
      ++pos_;
    }
    return out;
  }

 private:
  AlgebraElement draw(std::uint64_t s) {
    AlgebraElement r(ambient_, random_coeffs(ambient_, rng_));
    if (s % 2 == 1 && vb_) {
      const Group& grp = ambient_->group();
      const auto g = static_cast<std::uint32_t>(rng_() % grp.order());
      const auto one = AlgebraElement::one(ambient_);
      AlgebraElement sum = one, power = one;
      for (std::uint32_t i = 1; i < grp.element_order(GroupElem{g}); ++i) {
        power = power * vb_->v[g];
        sum = sum + power;
      }
      r = (vb_->v[g] - one) * r * sum;
    }
    return r;
  }

  AlgebraPtr ambient_;
  std::vector<AlgebraElement> seeds_;
  std::uint64_t budget_;
  std::mt19937_64 rng_;
  std::optional<VBasis> vb_;
  std::uint64_t pos_ = 0;
};

// Runs `check` over the stream batch by batch; returns the first element hit.
std::optional<AlgebraElement> first_sample(SampleStream& stream, unsigned parallelism,
                                           const std::function<Outcome(const AlgebraElement&)>& check, Outcome stop,
                                           std::uint64_t& undetermined, std::uint64_t& checked) {
  const std::uint64_t batch = kChunk * std::max(1u, parallelism);
  while (true) {
    const auto items = stream.next(batch);
    if (items.empty()) return std::nullopt;
    auto f = [&](std::uint64_t i) { return check(items[i]); };
    if (const auto hit = first_index(items.size(), parallelism, f, stop, undetermined, checked)) return items[*hit];
  }
}

std::vector<AlgebraElement> constructor_elements(const AlgebraPtr& ambient) {
  std::vector<AlgebraElement> out;
  for (const auto& w : {witness_char_p(ambient), witness_unit_commutation(ambient), witness_quaternion(ambient)}) {
    if (!w) continue;
    // Walk down to a square-zero power, then add its products with the basis.
    AlgebraElement x = w->get("x");
    while (!(x * x).is_zero()) x = x * x;
    out.push_back(x);
    for (std::uint32_t g = 0; g < ambient->dim(); ++g) {
      const auto u = AlgebraElement::basis(ambient, GroupElem{g});
      out.push_back(u * x);
      out.push_back(x * u);
    }
  }
  return out;
}

}  // namespace

std::uint64_t element_space_size(const AlgebraPtr& ambient) {
  const std::uint64_t q = ambient->field().order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < ambient->dim(); ++i) {
    if (total > UINT64_MAX / q) return UINT64_MAX;
    total *= q;
  }
  return total;
}

AlgebraElement element_from_index(const AlgebraPtr& ambient, std::uint64_t index) {
  const std::uint64_t q = ambient->field().order();
  std::vector<FieldElem> c(ambient->dim());
  for (auto& x : c) {
    x = FieldElem{static_cast<std::uint32_t>(index % q)};
    index /= q;
  }
  return AlgebraElement(ambient, std::move(c));
}

NilpotentSearchResult oracle_nilpotent_search(const AlgebraPtr& ambient, const OracleOptions& opts) {
  NilpotentSearchResult res;
  const std::uint64_t total = element_space_size(ambient);
  const TwistedGroupAlgebra& alg = *ambient;
  std::uint64_t undetermined = 0;
  if (total <= opts.exhaustive_cap) {
    res.exhaustive = true;
    const std::uint64_t q = alg.field().order();
    auto check = [&](std::uint64_t i) {
      if (i == 0) return Outcome::Certified;
      std::vector<FieldElem> x(alg.dim()), tmp(alg.dim());
      std::uint64_t t = i;
      for (auto& c : x) {
        c = FieldElem{static_cast<std::uint32_t>(t % q)};
        t /= q;
      }
      return nilpotent_raw(alg, x, tmp) ? Outcome::Refuted : Outcome::Certified;
    };
    const auto hit = first_index(total, opts.parallelism, check, Outcome::Refuted, undetermined, res.checked);
    if (hit) res.found = element_from_index(ambient, *hit);
    return res;
  }
  res.seed = opts.seed;
  SampleStream stream(ambient, constructor_elements(ambient), opts.budget, opts.seed);
  auto check = [](const AlgebraElement& a) { return nonzero_nilpotent(a) ? Outcome::Refuted : Outcome::Certified; };
  res.found = first_sample(stream, opts.parallelism, check, Outcome::Refuted, undetermined, res.checked);
  return res;
}

std::string_view to_string(ScanProperty p) {
  switch (p) {
    case ScanProperty::Regular: return "regular";
    case ScanProperty::StronglyRegular: return "strongly_regular";
    case ScanProperty::NWeak: return "n_weak";
    case ScanProperty::XiN: return "xi_N";
  }
  return "unknown";
}

ScanReport oracle_property_scan(const AlgebraPtr& ambient, ScanProperty property, std::uint32_t n,
                                const OracleOptions& opts) {
  if (property == ScanProperty::NWeak && n < 2) throw Error(ErrorCode::PreconditionFailed, "n must be >= 2");
  ScanReport rep;
  rep.property = property;
  rep.n = property == ScanProperty::NWeak ? n : 0;
  const bool commutative = ambient->is_commutative();
  std::vector<AlgebraElement> central_nil;
  if (property == ScanProperty::XiN) central_nil = central_nilradical(ambient);
  const auto one = AlgebraElement::one(ambient);

  auto classify = [&](const AlgebraElement& a) -> Outcome {
    switch (property) {
      case ScanProperty::Regular: return regularity_witness(a) ? Outcome::Certified : Outcome::Refuted;
      case ScanProperty::StronglyRegular:
        return strong_regularity_witness(a) ? Outcome::Certified : Outcome::Refuted;
      case ScanProperty::XiN: return xi_n_witness(a, central_nil) ? Outcome::Certified : Outcome::Refuted;
      case ScanProperty::NWeak: {
        if (commutative) return n_weak_witness(a, n) ? Outcome::Certified : Outcome::Refuted;
        const auto c = solve(left_right_rep(a.pow(n + 1), Side::Left), a.to_prime_vector());
        if (c && Witness::n_weak(a, one, AlgebraElement::from_prime_vector(ambient, *c), n)) {
          return Outcome::Certified;
        }
        if (!a.is_zero() && (a * a).is_zero()) return Outcome::Refuted;
        return Outcome::Undetermined;
      }
    }
    return Outcome::Undetermined;
  };

  const std::uint64_t total = element_space_size(ambient);
  if (total <= opts.exhaustive_cap) {
    rep.exhaustive = true;
    auto check = [&](std::uint64_t i) { return classify(element_from_index(ambient, i)); };
    const auto hit = first_index(total, opts.parallelism, check, Outcome::Refuted, rep.undetermined, rep.checked);
    if (hit) rep.counterexample = element_from_index(ambient, *hit);
  } else {
    rep.seed = opts.seed;
    std::vector<AlgebraElement> seeds = constructor_elements(ambient);
    for (std::uint32_t g = 0; g < ambient->dim(); ++g) seeds.push_back(AlgebraElement::basis(ambient, GroupElem{g}));
    SampleStream stream(ambient, std::move(seeds), opts.budget, opts.seed);
    rep.counterexample = first_sample(stream, opts.parallelism, classify, Outcome::Refuted, rep.undetermined, rep.checked);
  }
  rep.pass = !rep.counterexample && rep.undetermined == 0;
  rep.conclusive = rep.counterexample.has_value() || (rep.exhaustive && rep.undetermined == 0);
  return rep;
}

}  // namespace tga
