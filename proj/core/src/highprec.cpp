#include "trigrat/highprec.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace trigrat {

namespace {

class Float {
 public:
  explicit Float(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  Float(const Float&) = delete;
  Float& operator=(const Float&) = delete;
  ~Float() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

struct PiBounds {
  explicit PiBounds(mpfr_prec_t p) : lo(p), hi(p) {
    mpfr_const_pi(lo.get(), MPFR_RNDD);
    mpfr_const_pi(hi.get(), MPFR_RNDU);
  }
  Float lo;
  Float hi;
};

// Readers share the lock; a miss computes outside it and inserts under the
// exclusive lock (first insertion wins).
class PiCache {
 public:
  std::shared_ptr<const PiBounds> get(mpfr_prec_t p) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = entries_.find(p); it != entries_.end()) return it->second;
    }
    auto fresh = std::make_shared<const PiBounds>(p);
    std::unique_lock lock(mutex_);
    return entries_.emplace(p, std::move(fresh)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<mpfr_prec_t, std::shared_ptr<const PiBounds>> entries_;
};

PiCache& pi_cache() {
  static PiCache cache;
  return cache;
}

enum class Quantity { Tan2, Tan, Cos };

// Enclosure of the chosen quantity at f*pi for 0 <= f <= 1/2, evaluated at
// working precision p. Returns false when p is too coarse to separate the
// argument from pi/2 (tan quantities only).
bool raw_enclosure(Quantity q, const Rational& f, mpfr_prec_t p, Float& lo, Float& hi) {
  const auto pi = pi_cache().get(p);
  const Integer d = f.num();
  const Integer n = f.den();

  Float xl(p), xh(p);
  mpfr_mul_z(xl.get(), pi->lo.get(), d.get_mpz_t(), MPFR_RNDD);
  mpfr_div_z(xl.get(), xl.get(), n.get_mpz_t(), MPFR_RNDD);
  mpfr_mul_z(xh.get(), pi->hi.get(), d.get_mpz_t(), MPFR_RNDU);
  mpfr_div_z(xh.get(), xh.get(), n.get_mpz_t(), MPFR_RNDU);

  // cos is decreasing on [0, pi].
  Float cl(p), ch(p);
  mpfr_cos(cl.get(), xh.get(), MPFR_RNDD);
  mpfr_cos(ch.get(), xl.get(), MPFR_RNDU);
  if (q == Quantity::Cos) {
    mpfr_set(lo.get(), cl.get(), MPFR_RNDD);
    mpfr_set(hi.get(), ch.get(), MPFR_RNDU);
    return true;
  }
  // cl > 0 puts the whole argument interval below pi/2, where sin increases.
  if (mpfr_sgn(cl.get()) <= 0) return false;
  Float sl(p), sh(p);
  mpfr_sin(sl.get(), xl.get(), MPFR_RNDD);
  mpfr_sin(sh.get(), xh.get(), MPFR_RNDU);
  if (q == Quantity::Tan) {
    mpfr_div(lo.get(), sl.get(), ch.get(), MPFR_RNDD);
    mpfr_div(hi.get(), sh.get(), cl.get(), MPFR_RNDU);
    return true;
  }
  mpfr_sqr(sl.get(), sl.get(), MPFR_RNDD);
  mpfr_sqr(ch.get(), ch.get(), MPFR_RNDU);
  mpfr_sqr(sh.get(), sh.get(), MPFR_RNDU);
  mpfr_sqr(cl.get(), cl.get(), MPFR_RNDD);
  mpfr_div(lo.get(), sl.get(), ch.get(), MPFR_RNDD);
  mpfr_div(hi.get(), sh.get(), cl.get(), MPFR_RNDU);
  return true;
}

void check_bits(unsigned bits) {
  if (bits < kMinBits) throw std::invalid_argument("precision below 8 bits");
}

// Snaps raw bounds outward to the grid 2^-(bits+6) and pads each side by
// 2^-(bits+2). With raw width <= 2^-(bits+6) the result has width < 2^(1-bits),
// and enclosures for increasing bits are nested.
RatInterval padded(mpfr_srcptr raw_lo, mpfr_srcptr raw_hi, bool negate, unsigned bits) {
  const unsigned long grid = bits + 6;
  const mpfr_prec_t p = std::max(mpfr_get_prec(raw_lo), mpfr_get_prec(raw_hi));
  Float t(p);
  Integer lo, hi;
  mpfr_mul_2ui(t.get(), raw_lo, grid, MPFR_RNDD);
  mpfr_get_z(lo.get_mpz_t(), t.get(), MPFR_RNDD);
  mpfr_mul_2ui(t.get(), raw_hi, grid, MPFR_RNDU);
  mpfr_get_z(hi.get_mpz_t(), t.get(), MPFR_RNDU);
  if (negate) {
    std::swap(lo, hi);
    lo = -lo;
    hi = -hi;
  }
  lo -= 16;
  hi += 16;
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), grid);
  return RatInterval{Rational(lo, den), Rational(hi, den)};
}

RatInterval enclose(Quantity q, const Rational& f, bool negate, unsigned bits) {
  check_bits(bits);
  const long grid = static_cast<long>(bits) + 6;
  mpfr_prec_t p = static_cast<mpfr_prec_t>(bits) + 32;
  for (;;) {
    Float lo(p), hi(p), w(p);
    if (raw_enclosure(q, f, p, lo, hi)) {
      mpfr_sub(w.get(), hi.get(), lo.get(), MPFR_RNDU);
      if (mpfr_cmp_ui_2exp(w.get(), 1, -grid) <= 0) return padded(lo.get(), hi.get(), negate, bits);
    }
    if (p > (mpfr_prec_t{1} << 24)) throw std::runtime_error("enclosure precision runaway");
    p += p / 2;
  }
}

Integer pow2(unsigned long e) {
  Integer r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
  return r;
}

}  // namespace

RatInterval operator+(const RatInterval& a, const RatInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
  const Rational p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  const auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
  return {*mn, *mx};
}

RatInterval square(const RatInterval& a) {
  if (a.lo.sign() >= 0) return {a.lo * a.lo, a.hi * a.hi};
  if (a.hi.sign() <= 0) return {a.hi * a.hi, a.lo * a.lo};
  return {Rational(0), std::max(a.lo * a.lo, a.hi * a.hi)};
}

bool intersects(const RatInterval& a, const RatInterval& b) { return a.lo <= b.hi && b.lo <= a.hi; }

RatInterval pi_interval(unsigned bits) {
  check_bits(bits);
  const auto pi = pi_cache().get(static_cast<mpfr_prec_t>(bits) + 8);
  return padded(pi->lo.get(), pi->hi.get(), false, bits);
}

RatInterval eval_tan_squared(const ReducedAngle& angle, unsigned bits) {
  check_bits(bits);
  const ReducedAngle a = reduce_for_tan(angle.fraction());
  if (a.is_tan_pole()) throw PoleError("tan^2 has a pole at " + angle.fraction().str());
  return enclose(Quantity::Tan2, a.fraction(), false, bits);
}

RatInterval eval_tan(const Rational& r, unsigned bits) {
  check_bits(bits);
  const ReducedAngle a = reduce_for_tan(r);
  if (a.is_tan_pole()) throw PoleError("tan has a pole at " + r.str());
  return enclose(Quantity::Tan, a.fraction(), a.sign < 0, bits);
}

RatInterval eval_cos(const ReducedAngle& angle, unsigned bits) {
  check_bits(bits);
  const Rational f = reduce_for_cos(angle.fraction()).fraction();
  // cos((1 - f) pi) = -cos(f pi) keeps the argument in [0, pi/2].
  if (f > Rational(1, 2)) return enclose(Quantity::Cos, Rational(1) - f, true, bits);
  return enclose(Quantity::Cos, f, false, bits);
}

RatInterval eval_polynomial(const IntPolynomial& p, const RatInterval& x) {
  if (p.is_zero()) return {Rational(0), Rational(0)};
  // Integer Horner over a common denominator: acc / scale^k.
  Integer scale;
  mpz_lcm(scale.get_mpz_t(), x.lo.den().get_mpz_t(), x.hi.den().get_mpz_t());
  const Integer xl = x.lo.num() * (scale / x.lo.den());
  const Integer xh = x.hi.num() * (scale / x.hi.den());

  const auto& c = p.coeffs();
  Integer lo = c.back();
  Integer hi = c.back();
  Integer scale_pow = 1;
  Integer prods[4];
  for (std::size_t j = c.size() - 1; j-- > 0;) {
    prods[0] = lo * xl;
    prods[1] = lo * xh;
    prods[2] = hi * xl;
    prods[3] = hi * xh;
    const auto [mn, mx] = std::minmax_element(std::begin(prods), std::end(prods));
    lo = *mn;
    hi = *mx;
    scale_pow *= scale;
    const Integer shift = c[j] * scale_pow;
    lo += shift;
    hi += shift;
  }
  return {Rational(lo, scale_pow), Rational(hi, scale_pow)};
}

ResidualEnclosure residual_enclosure(const IntPolynomial& p, const ReducedAngle& angle,
                                     unsigned target_bits) {
  unsigned bits = std::max(target_bits, kMinBits) + 64;
  const Rational target(Integer(1), pow2(target_bits));
  for (;;) {
    const RatInterval s = eval_tan_squared(angle, bits);
    ResidualEnclosure out{eval_polynomial(p, s), bits};
    const Rational w = out.image.width();
    if (w < target) return out;
    // log2 of the excess width, rounded up, plus slack.
    const long excess = static_cast<long>(mpz_sizeinbase(w.num().get_mpz_t(), 2)) -
                        static_cast<long>(mpz_sizeinbase(w.den().get_mpz_t(), 2)) +
                        static_cast<long>(target_bits) + 2;
    bits += static_cast<unsigned>(std::max(excess, 1L)) + 16;
    if (bits > (1u << 20)) throw std::runtime_error("residual precision runaway");
  }
}

std::vector<Rational> exceptional_values(TrigFunction f) {
  switch (f) {
    case TrigFunction::Tan2: return {Rational(0), Rational(1, 3), Rational(1), Rational(3)};
    case TrigFunction::Tan: return {Rational(-1), Rational(0), Rational(1)};
    case TrigFunction::Cos2:
      return {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
    case TrigFunction::Cos:
      return {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1)};
  }
  return {};
}

bool crosscheck(const Rational& r, TrigFunction f, const TrigVerdict& verdict, unsigned bits) {
  const bool tan_like = f == TrigFunction::Tan2 || f == TrigFunction::Tan;
  const bool at_pole = reduce_for_tan(r).is_tan_pole();
  if (verdict.kind == VerdictKind::Pole) return tan_like && at_pole;
  if (tan_like && at_pole) return false;

  auto enclosure = [&](unsigned b) {
    switch (f) {
      case TrigFunction::Tan2: return eval_tan_squared(reduce_for_tan(r), b);
      case TrigFunction::Tan: return eval_tan(r, b);
      case TrigFunction::Cos2: return square(eval_cos(reduce_for_cos(r), b));
      case TrigFunction::Cos: break;
    }
    return eval_cos(reduce_for_cos(r), b);
  };

  if (verdict.kind == VerdictKind::Exact) {
    return verdict.value.has_value() && enclosure(bits).contains(*verdict.value);
  }
  const std::vector<Rational> specials = exceptional_values(f);
  for (unsigned b = std::max(bits, kMinBits); b <= 4096; b *= 2) {
    const RatInterval box = enclosure(b);
    if (std::all_of(specials.begin(), specials.end(),
                    [&](const Rational& v) { return box.excludes(v); })) {
      return true;
    }
  }
  return false;
}

}  // namespace trigrat
