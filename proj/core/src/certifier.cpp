#include "trigrat/certifier.hpp"

#include <stdexcept>

#include "trigrat/angle.hpp"
#include "trigrat/polynomial.hpp"

namespace trigrat {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Cos2FromTan2: return "cos2 = 1/(1+tan2)";
    case Relation::Tan2IsTanSquared: return "tan2 = tan^2";
    case Relation::Cos2IsCosSquared: return "cos2 = cos^2";
  }
  return "?";
}

std::optional<Relation> parse_relation(std::string_view text) {
  for (Relation r : {Relation::Cos2FromTan2, Relation::Tan2IsTanSquared, Relation::Cos2IsCosSquared}) {
    if (to_string(r) == text) return r;
  }
  return std::nullopt;
}

namespace {

bool is_base_denominator(const Integer& n) {
  return n == 1 || n == 2 || n == 3 || n == 4 || n == 6;
}

ReducedAngle separation_angle(const Integer& q, const Integer& d_prime) {
  return reduce_for_tan(Rational(Integer(2 * d_prime), q));
}

Exclusion exclude_with(const IntPolynomial& Q, const Integer& q, const Integer& d_prime,
                       const Rational& candidate, unsigned start_bits) {
  const Rational value = eval_at_rational(Q, candidate);
  if (!value.is_zero()) return Exclusion{candidate, NonrootExclusion{value}};

  // The candidate is a genuine root of Q_q. s differs from it because s is
  // tan^2 at an angle of odd denominator q >= 5, so refinement terminates.
  const ReducedAngle angle = separation_angle(q, d_prime);
  for (unsigned bits = std::max(start_bits, kMinBits); bits <= kMaxSeparationBits; bits *= 2) {
    RatInterval box = eval_tan_squared(angle, bits);
    if (box.excludes(candidate)) {
      return Exclusion{candidate, SeparationExclusion{std::move(box), bits}};
    }
  }
  throw std::runtime_error("separation of candidate " + candidate.str() + " exceeded " +
                           std::to_string(kMaxSeparationBits) + " bits");
}

void append_tan_squared_proof(const Rational& r, unsigned separation_bits,
                              std::vector<CertStep>& steps) {
  ReducedAngle start = reduce_for_tan(r);
  start.sign = 1;
  if (is_base_denominator(start.n)) {
    steps.emplace_back(BaseStep{start.fraction(), classify_tan_squared(start.fraction()).value});
    return;
  }

  const OddPart parts = odd_part(start.n);
  const Integer& q = parts.odd;
  // q in {1, 3} stops one doubling above tan^2 = 1 (den 4) or 1/3 (den 6).
  const Integer stop = q >= 5 ? q : Integer(q == 1 ? 8 : 12);
  const DoublingChain chain = doubling_chain(start, stop);

  ChainStep chain_step;
  for (const ReducedAngle& a : chain.angles) chain_step.angles.push_back(a.fraction());
  steps.emplace_back(std::move(chain_step));
  const ReducedAngle& last = chain.angles.back();

  if (q >= 5) {
    const IntPolynomial Q = build_Q(q);
    PolyStep poly;
    poly.q = q;
    poly.d_prime = last.d;
    poly.coeffs = Q.coeffs();
    poly.candidates = divisors(q);
    for (const Integer& c : poly.candidates) {
      poly.exclusions.push_back(exclude_with(Q, q, last.d, Rational(c), separation_bits));
    }
    steps.emplace_back(std::move(poly));
    return;
  }

  // q in {1, 3}: the chain stops at 8 or 12, one doubling short of tan^2 = 1
  // or 1/3. The preimage quadratic D x^2 - 2(D+2) x + D has no rational root.
  const Rational D = *classify_tan_squared(double_for_tan_squared(last).fraction()).value;
  BackwardQuadraticStep bq;
  bq.den = last.n;
  bq.D = D;
  const Integer a = D.num();
  const Integer b = -2 * (D.num() + 2 * D.den());
  bq.quad_coeffs = {a, b, a};
  bq.discriminant = b * b - 4 * a * a;
  if (auto root = is_perfect_square(Rational(bq.discriminant))) bq.square_witness = root->num();
  steps.emplace_back(std::move(bq));
}

}  // namespace

Exclusion exclude_candidate(const Integer& q, const Integer& d_prime, const Rational& candidate,
                            unsigned start_bits) {
  if (q < 5 || mpz_even_p(q.get_mpz_t())) {
    throw std::invalid_argument("exclude_candidate: q must be odd and at least 5");
  }
  if (gcd(d_prime, q) != 1) throw std::invalid_argument("exclude_candidate: gcd(d', q) != 1");
  if (candidate.sign() <= 0) throw std::invalid_argument("exclude_candidate: candidate must be positive");
  return exclude_with(build_Q(q), q, d_prime, candidate, start_bits);
}

Certificate certify(const Rational& r, TrigFunction f, unsigned separation_bits) {
  Certificate cert;
  cert.input = r;
  cert.function = f;
  cert.verdict = classify(r, f);

  switch (f) {
    case TrigFunction::Tan2: break;
    case TrigFunction::Tan: cert.steps.emplace_back(IdentityStep{Relation::Tan2IsTanSquared}); break;
    case TrigFunction::Cos2: cert.steps.emplace_back(IdentityStep{Relation::Cos2FromTan2}); break;
    case TrigFunction::Cos:
      cert.steps.emplace_back(IdentityStep{Relation::Cos2IsCosSquared});
      cert.steps.emplace_back(IdentityStep{Relation::Cos2FromTan2});
      break;
  }
  append_tan_squared_proof(r, separation_bits, cert.steps);

  std::optional<Rational> radicand;
  if (f == TrigFunction::Tan) radicand = classify_tan_squared(r).value;
  if (f == TrigFunction::Cos) radicand = classify_cos_squared(r).value;
  if (radicand) cert.steps.emplace_back(SqrtStep{*radicand, is_perfect_square(*radicand)});
  return cert;
}

}  // namespace trigrat
