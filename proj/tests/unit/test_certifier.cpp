#include <doctest.h>

#include <json.hpp>

#include "../support/mutation.hpp"
#include "../support/oracles.hpp"
#include "trigrat/angle.hpp"
#include "trigrat/certifier.hpp"
#include "trigrat/polynomial.hpp"

using namespace trigrat;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

template <class Step>
const Step& step_at(const Certificate& c, std::size_t i) {
  REQUIRE(i < c.steps.size());
  const Step* s = std::get_if<Step>(&c.steps[i]);
  REQUIRE(s != nullptr);
  return *s;
}

constexpr TrigFunction kFunctions[] = {TrigFunction::Tan2, TrigFunction::Tan, TrigFunction::Cos2,
                                       TrigFunction::Cos};

}  // namespace

TEST_CASE("certificate for 1/5") {
  const Certificate c = certify(Rational(1, 5), TrigFunction::Tan2);
  CHECK(c.verdict == TrigVerdict::irrational());
  REQUIRE(c.steps.size() == 2);
  CHECK(step_at<ChainStep>(c, 0).angles == std::vector<Rational>{Rational(1, 5)});
  const auto& poly = step_at<PolyStep>(c, 1);
  CHECK(poly.q == 5);
  CHECK(poly.coeffs == ints({5, -10, 1}));
  CHECK(poly.candidates == ints({1, 5}));
  REQUIRE(poly.exclusions.size() == 2);
  CHECK(std::get<NonrootExclusion>(poly.exclusions[0].method).q_value == Rational(-4));
  CHECK(std::get<NonrootExclusion>(poly.exclusions[1].method).q_value == Rational(-20));
  CHECK(verify_certificate(c));
}

TEST_CASE("certificate for 1/8 uses the backward quadratic") {
  const Certificate c = certify(Rational(1, 8), TrigFunction::Tan2);
  CHECK(c.verdict == TrigVerdict::irrational());
  CHECK(step_at<ChainStep>(c, 0).angles == std::vector<Rational>{Rational(1, 8)});
  const auto& bq = step_at<BackwardQuadraticStep>(c, 1);
  CHECK(bq.den == 8);
  CHECK(bq.D == Rational(1));
  // x^2 - 6x + 1, roots 3 +- 2 sqrt(2)
  CHECK(bq.quad_coeffs == ints({1, -6, 1}));
  CHECK(bq.discriminant == 32);
  CHECK_FALSE(bq.square_witness.has_value());
  CHECK(verify_certificate(c));

  const Certificate c24 = certify(Rational(5, 24), TrigFunction::Tan2);
  CHECK(step_at<ChainStep>(c24, 0).angles == std::vector<Rational>{Rational(5, 24), Rational(5, 12)});
  const auto& bq12 = step_at<BackwardQuadraticStep>(c24, 1);
  CHECK(bq12.D == Rational(1, 3));
  CHECK(bq12.quad_coeffs == ints({1, -14, 1}));
  CHECK(bq12.discriminant == 192);
  CHECK(verify_certificate(c24));
}

TEST_CASE("certificate for 1/6 is a base step") {
  const Certificate c = certify(Rational(1, 6), TrigFunction::Tan2);
  CHECK(c.verdict == TrigVerdict::exact(Rational(1, 3)));
  REQUIRE(c.steps.size() == 1);
  CHECK(step_at<BaseStep>(c, 0).value == Rational(1, 3));
  CHECK(verify_certificate(c));
}

TEST_CASE("certificate for 1/15 separates s from 3") {
  const Certificate c = certify(Rational(1, 15), TrigFunction::Tan2);
  const auto& poly = step_at<PolyStep>(c, 1);
  CHECK(poly.coeffs == build_Q(15).coeffs());
  CHECK(poly.candidates == ints({1, 3, 5, 15}));
  REQUIRE(poly.exclusions.size() == 4);
  for (std::size_t i : {0u, 2u, 3u}) {
    const auto& nr = std::get<NonrootExclusion>(poly.exclusions[i].method);
    CHECK(nr.q_value == eval_at_rational(build_Q(15), poly.exclusions[i].candidate));
    CHECK_FALSE(nr.q_value.is_zero());
  }
  const auto& sep = std::get<SeparationExclusion>(poly.exclusions[1].method);
  CHECK(sep.bits <= 128);
  CHECK(sep.interval.excludes(3));
  // s = tan^2(2 pi / 15)
  CHECK(std::fabs(oracle::to_double(sep.interval.midpoint()) - static_cast<double>(oracle::tan_squared_ld(2, 15))) < 1e-12);
  CHECK(verify_certificate(c));
}

TEST_CASE("exclude_candidate") {
  const Exclusion a = exclude_candidate(5, 1, 5);
  CHECK(std::get<NonrootExclusion>(a.method).q_value == Rational(-20));

  const Exclusion b = exclude_candidate(15, 2, 3);
  const auto& sb = std::get<SeparationExclusion>(b.method);
  CHECK(sb.bits <= 128);
  CHECK(sb.interval.excludes(3));
  CHECK(std::fabs(oracle::to_double(sb.interval.midpoint()) - static_cast<double>(oracle::tan_squared_ld(4, 15))) < 1e-12);

  // 3 is a root of Q_9 = X^4 - 36X^3 + 126X^2 - 84X + 9, but s = tan^2(2 pi/9) ~ 0.704.
  CHECK(eval_at_rational(IntPolynomial(ints({9, -84, 126, -36, 1})), 3).is_zero());
  const Exclusion c = exclude_candidate(9, 1, 3);
  const auto& sc = std::get<SeparationExclusion>(c.method);
  CHECK(sc.interval.contains(Rational(704, 1000)) == false);
  CHECK(std::fabs(oracle::to_double(sc.interval.midpoint()) - static_cast<double>(oracle::tan_squared_ld(2, 9))) < 1e-12);
  CHECK(std::fabs(oracle::to_double(sc.interval.midpoint()) - 0.704) < 1e-3);

  CHECK_THROWS_AS(exclude_candidate(3, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(exclude_candidate(10, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(exclude_candidate(15, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(exclude_candidate(15, 1, 0), std::invalid_argument);
}

TEST_CASE("wrapped certificates for tan, cos2 and cos") {
  const Certificate t = certify(Rational(1, 3), TrigFunction::Tan);
  CHECK(t.verdict == TrigVerdict::irrational());
  CHECK(step_at<IdentityStep>(t, 0).relation == Relation::Tan2IsTanSquared);
  const auto& root3 = step_at<SqrtStep>(t, t.steps.size() - 1);
  CHECK(root3.radicand == Rational(3));
  CHECK_FALSE(root3.square_test_result.has_value());
  CHECK(verify_certificate(t));

  const Certificate c = certify(Rational(1, 4), TrigFunction::Cos);
  CHECK(c.verdict == TrigVerdict::irrational());
  CHECK(step_at<IdentityStep>(c, 0).relation == Relation::Cos2IsCosSquared);
  CHECK(step_at<IdentityStep>(c, 1).relation == Relation::Cos2FromTan2);
  CHECK(step_at<SqrtStep>(c, c.steps.size() - 1).radicand == Rational(1, 2));
  CHECK(verify_certificate(c));

  CHECK(certify(Rational(2, 3), TrigFunction::Cos).verdict == TrigVerdict::exact(Rational(-1, 2)));
  CHECK(verify_certificate(certify(Rational(3, 2), TrigFunction::Cos)));
  CHECK(verify_certificate(certify(Rational(1, 2), TrigFunction::Tan)));
  CHECK(verify_certificate(certify(Rational(-3, 4), TrigFunction::Tan)));
}

TEST_CASE("verifier rejects tampering") {
  Certificate c = certify(Rational(1, 5), TrigFunction::Tan2);
  std::get<NonrootExclusion>(std::get<PolyStep>(c.steps[1]).exclusions[0].method).q_value = Rational(0);
  const VerificationResult r = verify_certificate(c);
  CHECK_FALSE(r);
  CHECK(r.reason == "exact evaluation mismatch");

  Certificate wrong = certify(Rational(1, 6), TrigFunction::Tan2);
  wrong.verdict = TrigVerdict::irrational();
  const VerificationResult w = verify_certificate(wrong);
  CHECK_FALSE(w);
  CHECK(w.reason.rfind("verdict not entailed", 0) == 0);

  Certificate dropped = certify(Rational(1, 15), TrigFunction::Tan2);
  std::get<PolyStep>(dropped.steps[1]).exclusions.pop_back();
  CHECK(verify_certificate(dropped).reason == "missing exclusion");

  Certificate extra = certify(Rational(1, 7), TrigFunction::Tan2);
  extra.steps.emplace_back(IdentityStep{Relation::Tan2IsTanSquared});
  CHECK_FALSE(verify_certificate(extra));

  // An irrational claim for 1/8 built on a chain through the pole at 1/4.
  Certificate through_pole = certify(Rational(1, 8), TrigFunction::Tan2);
  std::get<ChainStep>(through_pole.steps[0]).angles.push_back(Rational(1, 4));
  CHECK_FALSE(verify_certificate(through_pole));
}

TEST_CASE("JSON round trip and strict parsing") {
  for (const Rational& r : {Rational(1, 5), Rational(1, 8), Rational(1, 15), Rational(1, 2), Rational(7, 6)}) {
    for (TrigFunction f : kFunctions) {
      const Certificate c = certify(r, f);
      const std::string text = to_json(c);
      REQUIRE(parse_certificate(text) == c);
      REQUIRE(verify_certificate_json(text));
    }
  }
  auto doc = nlohmann::json::parse(to_json(certify(Rational(1, 5), TrigFunction::Tan2)));
  doc["extra"] = 1;
  CHECK_FALSE(verify_certificate_json(doc.dump()));
  CHECK_THROWS_AS(parse_certificate(doc.dump()), CertificateFormatError);

  doc.erase("extra");
  doc["version"] = 2;
  CHECK_THROWS_AS(parse_certificate(doc.dump()), CertificateFormatError);

  doc["version"] = 1;
  doc["steps"][1]["q"] = 5;  // native number instead of a decimal string
  CHECK_THROWS_AS(parse_certificate(doc.dump()), CertificateFormatError);

  CHECK_FALSE(verify_certificate_json("not json"));
  CHECK_FALSE(verify_certificate_json("{}"));
}

TEST_CASE("soundness sweep up to 60") {
  for (const Rational& r : sweep_angles(60)) {
    for (TrigFunction f : kFunctions) {
      const Certificate c = certify(r, f);
      REQUIRE(c.verdict == classify(r, f));
      const VerificationResult res = verify_certificate(c);
      INFO(to_string(f), " ", r.str(), ": ", res.reason);
      REQUIRE(res);
    }
  }
}

TEST_CASE("chains never touch denominators 2 or 4") {
  for (const Rational& r : sweep_angles(256)) {
    const Certificate c = certify(r, TrigFunction::Tan2);
    for (const CertStep& s : c.steps) {
      if (const auto* chain = std::get_if<ChainStep>(&s)) {
        for (const Rational& a : chain->angles) REQUIRE((a.den() != 2 && a.den() != 4));
      }
    }
  }
}

TEST_CASE("single-field mutations are caught") {
  auto g = oracle::rng(4242);
  const auto angles = sweep_angles(120);
  std::uniform_int_distribution<std::size_t> pick_angle(0, angles.size() - 1);
  std::uniform_int_distribution<int> pick_fn(0, 3);
  int mutated = 0;
  while (mutated < 100) {
    const Certificate c = certify(angles[pick_angle(g)], kFunctions[pick_fn(g)]);
    auto doc = nlohmann::json::parse(to_json(c));
    const auto sites = mutation::mutation_sites(doc);
    if (sites.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick_site(0, sites.size() - 1);
    const auto site = sites[pick_site(g)];
    mutation::bump(doc, site);
    INFO(c.input.str(), " ", to_string(c.function), " at ", site.to_string());
    REQUIRE_FALSE(verify_certificate_json(doc.dump()));
    ++mutated;
  }
}
