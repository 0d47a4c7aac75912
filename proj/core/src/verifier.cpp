// Certificate checker. Deliberately independent of classifier.cpp: every
// value is re-derived from the certificate input with exact arithmetic,
// polynomial construction, angle reduction and certified enclosures.

#include <stdexcept>
#include <type_traits>

#include "trigrat/angle.hpp"
#include "trigrat/certifier.hpp"
#include "trigrat/highprec.hpp"
#include "trigrat/polynomial.hpp"

namespace trigrat {

namespace {

// tan^2 at the angles where it is rational or undefined. Outer nullopt: not a
// base denominator; inner nullopt: the pole.
std::optional<std::optional<Rational>> base_tan_squared(const Integer& den) {
  if (den == 1) return std::optional<Rational>(Rational(0));
  if (den == 2) return std::optional<Rational>();
  if (den == 3) return std::optional<Rational>(Rational(3));
  if (den == 4) return std::optional<Rational>(Rational(1));
  if (den == 6) return std::optional<Rational>(Rational(1, 3));
  return std::nullopt;
}

constexpr unsigned kBaseCheckBits = 64;

// Thrown inside the checker; converted into a failed VerificationResult.
struct Reject {
  std::string reason;
};

[[noreturn]] void reject(std::string reason) { throw Reject{std::move(reason)}; }

class Checker {
 public:
  explicit Checker(const Certificate& c) : cert_(c) {}

  VerificationResult run() {
    try {
      const TrigVerdict entailed = check_function();
      if (pos_ != cert_.steps.size()) reject("unexpected trailing steps");
      if (!(entailed == cert_.verdict)) {
        reject("verdict not entailed: steps give " + entailed.str() + ", certificate claims " +
               cert_.verdict.str());
      }
      return VerificationResult::pass();
    } catch (const Reject& r) {
      return VerificationResult::fail(r.reason);
    } catch (const std::exception& e) {
      return VerificationResult::fail(std::string("check aborted: ") + e.what());
    }
  }

 private:
  template <class Step>
  const Step& next(const char* what) {
    if (pos_ >= cert_.steps.size()) reject(std::string("missing ") + what + " step");
    const Step* s = std::get_if<Step>(&cert_.steps[pos_]);
    if (s == nullptr) reject(std::string("expected ") + what + " step at position " + std::to_string(pos_));
    ++pos_;
    return *s;
  }

  template <class Step>
  bool peek() const {
    return pos_ < cert_.steps.size() && std::holds_alternative<Step>(cert_.steps[pos_]);
  }

  void expect_identity(Relation rel) {
    const auto& s = next<IdentityStep>("identity_step");
    if (s.relation != rel) reject("identity step cites the wrong relation");
  }

  TrigVerdict check_function() {
    switch (cert_.function) {
      case TrigFunction::Tan2: return check_tan_squared();
      case TrigFunction::Tan: {
        expect_identity(Relation::Tan2IsTanSquared);
        const TrigVerdict t2 = check_tan_squared();
        if (t2.kind != VerdictKind::Exact) return t2;
        const std::optional<Rational> root = check_sqrt(*t2.value);
        if (!root) return TrigVerdict::irrational();
        return TrigVerdict::exact(Rational(reduce_for_tan(cert_.input).sign) * *root);
      }
      case TrigFunction::Cos2: {
        expect_identity(Relation::Cos2FromTan2);
        return cos_squared_from(check_tan_squared());
      }
      case TrigFunction::Cos: {
        expect_identity(Relation::Cos2IsCosSquared);
        expect_identity(Relation::Cos2FromTan2);
        const TrigVerdict c2 = cos_squared_from(check_tan_squared());
        if (c2.kind != VerdictKind::Exact) return c2;
        const std::optional<Rational> root = check_sqrt(*c2.value);
        if (!root) return TrigVerdict::irrational();
        const Rational f = reduce_for_cos(cert_.input).fraction();
        const Rational half(1, 2);
        const int sign = f < half ? 1 : (f > half ? -1 : 0);
        return TrigVerdict::exact(Rational(sign) * *root);
      }
    }
    reject("unknown function");
  }

  static TrigVerdict cos_squared_from(const TrigVerdict& t2) {
    switch (t2.kind) {
      case VerdictKind::Pole: return TrigVerdict::exact(0);
      case VerdictKind::Exact: return TrigVerdict::exact(Rational(1) / (Rational(1) + *t2.value));
      case VerdictKind::Irrational: break;
    }
    return TrigVerdict::irrational();
  }

  std::optional<Rational> check_sqrt(const Rational& radicand) {
    const auto& s = next<SqrtStep>("sqrt_step");
    if (s.radicand != radicand) reject("sqrt step radicand mismatch");
    const std::optional<Rational> root = is_perfect_square(radicand);
    if (root != s.square_test_result) reject("square test mismatch");
    return root;
  }

  TrigVerdict check_tan_squared() {
    ReducedAngle start = reduce_for_tan(cert_.input);
    start.sign = 1;

    if (peek<BaseStep>()) {
      const auto& base = next<BaseStep>("base");
      if (base.angle != start.fraction()) reject("base angle mismatch");
      const auto table = base_tan_squared(start.n);
      if (!table) reject("base step at a non-exceptional denominator");
      if (*table != base.value) reject("base identity mismatch");
      if (!base.value) return TrigVerdict::pole();
      if (!eval_tan_squared(start, kBaseCheckBits).contains(*base.value)) {
        reject("base value outside its numeric enclosure");
      }
      return TrigVerdict::exact(*base.value);
    }

    if (base_tan_squared(start.n)) reject("chain step at an exceptional denominator");
    const auto& chain = next<ChainStep>("chain");
    if (chain.angles.empty()) reject("empty chain");
    if (chain.angles.front() != start.fraction()) reject("chain does not start at the input angle");
    const Rational half(1, 2);
    for (std::size_t i = 0; i < chain.angles.size(); ++i) {
      const Rational& a = chain.angles[i];
      if (a.sign() < 0 || a > half) reject("chain angle outside [0, 1/2]");
      // The double-angle map is never applied at its pole T = 1.
      if (a.den() == 2 || a.den() == 4) reject("chain passes through denominator 2 or 4");
      if (i + 1 < chain.angles.size()) {
        const ReducedAngle doubled = double_for_tan_squared(ReducedAngle{a.num(), a.den(), 1});
        if (doubled.fraction() != chain.angles[i + 1]) reject("chain doubling mismatch");
      }
    }
    const Rational& last = chain.angles.back();

    if (peek<PolyStep>()) {
      check_poly(next<PolyStep>("poly"), last);
      return TrigVerdict::irrational();
    }
    check_backward_quadratic(next<BackwardQuadraticStep>("backward_quadratic"), last);
    return TrigVerdict::irrational();
  }

  void check_poly(const PolyStep& poly, const Rational& last) {
    if (poly.q != last.den()) reject("poly q differs from the chain's final denominator");
    if (poly.q < 5 || mpz_even_p(poly.q.get_mpz_t())) reject("poly q must be odd and at least 5");
    if (poly.d_prime != last.num()) reject("poly d' differs from the chain's final numerator");

    const IntPolynomial Q = build_Q(poly.q);
    if (poly.coeffs != Q.coeffs()) reject("Q coefficient mismatch");
    if (poly.candidates != divisors(poly.q)) reject("candidate list mismatch");
    if (poly.exclusions.size() != poly.candidates.size()) reject("missing exclusion");

    const ReducedAngle s_angle = reduce_for_tan(Rational(Integer(2 * poly.d_prime), poly.q));
    for (std::size_t i = 0; i < poly.candidates.size(); ++i) {
      const Exclusion& ex = poly.exclusions[i];
      if (ex.candidate != Rational(poly.candidates[i])) reject("missing exclusion");
      if (const auto* nr = std::get_if<NonrootExclusion>(&ex.method)) {
        const Rational value = eval_at_rational(Q, ex.candidate);
        if (value != nr->q_value) reject("exact evaluation mismatch");
        if (value.is_zero()) reject("nonroot exclusion of an actual root");
        continue;
      }
      const auto& sep = std::get<SeparationExclusion>(ex.method);
      if (sep.bits < kMinBits || sep.bits > kMaxSeparationBits) reject("separation bits out of range");
      const RatInterval box = eval_tan_squared(s_angle, sep.bits);
      if (!(box == sep.interval)) reject("separation interval mismatch");
      if (!box.excludes(ex.candidate)) reject("candidate not separated");
    }
  }

  void check_backward_quadratic(const BackwardQuadraticStep& bq, const Rational& last) {
    if (bq.den != last.den()) reject("backward quadratic den differs from the chain's end");
    if (bq.den != 8 && bq.den != 12) reject("backward quadratic only applies at denominators 8 and 12");
    const ReducedAngle doubled = double_for_tan_squared(ReducedAngle{last.num(), last.den(), 1});
    const auto table = base_tan_squared(doubled.n);
    if (!table || !*table) reject("doubled angle has no rational tan^2");
    if (bq.D != **table) reject("backward quadratic D mismatch");

    const Integer a = bq.D.num();
    const Integer b = -2 * (bq.D.num() + 2 * bq.D.den());
    if (bq.quad_coeffs != std::vector<Integer>{a, b, a}) reject("quadratic coefficient mismatch");
    const Integer disc = b * b - 4 * a * a;
    if (bq.discriminant != disc) reject("discriminant mismatch");
    std::optional<Integer> witness;
    if (auto root = is_perfect_square(Rational(disc))) witness = root->num();
    if (witness != bq.square_witness) reject("square witness mismatch");
    if (witness) reject("quadratic has rational roots; no irrationality follows");
  }

  const Certificate& cert_;
  std::size_t pos_ = 0;
};

}  // namespace

VerificationResult verify_certificate(const Certificate& c) { return Checker(c).run(); }

}  // namespace trigrat
