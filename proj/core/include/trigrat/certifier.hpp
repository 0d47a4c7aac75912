#pragma once

// Machine-checkable certificates for the rationality verdicts.
//
// A tan^2 certificate is one of
//   * a base step citing tan^2 at denominator 1, 2, 3, 4 or 6;
//   * a doubling chain down to the odd part q >= 5 of the denominator, then
//     a poly step: s = tan^2(2 d' pi / q) is a root of the monic Q_q, so a
//     rational s would be a divisor of q; every divisor is excluded;
//   * a doubling chain down to denominator 8 or 12, then a backward-quadratic
//     step showing that the preimages of tan^2 = 1 or 1/3 under the
//     double-angle map are irrational.
// The double-angle map sends rationals to rationals, so irrationality at the
// end of a chain travels back to its start. Certificates for tan, cos^2 and
// cos wrap the tan^2 proof with identity and square-root steps.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "trigrat/classifier.hpp"
#include "trigrat/exact.hpp"
#include "trigrat/highprec.hpp"

namespace trigrat {

inline constexpr unsigned kDefaultSeparationBits = 128;
inline constexpr unsigned kMaxSeparationBits = 4096;
inline constexpr int kCertificateVersion = 1;

struct BaseStep {
  Rational angle;
  std::optional<Rational> value;  // nullopt: the tan pole
  friend bool operator==(const BaseStep&, const BaseStep&) = default;
};

struct ChainStep {
  std::vector<Rational> angles;
  friend bool operator==(const ChainStep&, const ChainStep&) = default;
};

struct NonrootExclusion {
  Rational q_value;  // Q(candidate), nonzero
  friend bool operator==(const NonrootExclusion&, const NonrootExclusion&) = default;
};

struct SeparationExclusion {
  RatInterval interval;  // eval_tan_squared(s angle, bits)
  unsigned bits = 0;
  friend bool operator==(const SeparationExclusion&, const SeparationExclusion&) = default;
};

struct Exclusion {
  Rational candidate;
  std::variant<NonrootExclusion, SeparationExclusion> method;
  friend bool operator==(const Exclusion&, const Exclusion&) = default;
};

struct PolyStep {
  Integer q;
  Integer d_prime;  // s = tan^2(2 d' pi / q)
  std::vector<Integer> coeffs;
  std::vector<Integer> candidates;
  std::vector<Exclusion> exclusions;
  friend bool operator==(const PolyStep&, const PolyStep&) = default;
};

struct BackwardQuadraticStep {
  Integer den;
  Rational D;
  std::vector<Integer> quad_coeffs;  // ascending, integer-scaled
  Integer discriminant;
  std::optional<Integer> square_witness;
  friend bool operator==(const BackwardQuadraticStep&, const BackwardQuadraticStep&) = default;
};

struct SqrtStep {
  Rational radicand;
  std::optional<Rational> square_test_result;
  friend bool operator==(const SqrtStep&, const SqrtStep&) = default;
};

enum class Relation { Cos2FromTan2, Tan2IsTanSquared, Cos2IsCosSquared };

/// "cos2 = 1/(1+tan2)", "tan2 = tan^2", "cos2 = cos^2".
std::string_view to_string(Relation r);
std::optional<Relation> parse_relation(std::string_view text);

struct IdentityStep {
  Relation relation;
  friend bool operator==(const IdentityStep&, const IdentityStep&) = default;
};

using CertStep = std::variant<BaseStep, ChainStep, PolyStep, BackwardQuadraticStep, SqrtStep, IdentityStep>;

struct Certificate {
  Rational input;
  TrigFunction function = TrigFunction::Tan2;
  TrigVerdict verdict;
  std::vector<CertStep> steps;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Rules out one RRT candidate for s = tan^2(2 d' pi / q): exact evaluation of
/// Q_q when the candidate is not a root, otherwise an enclosure of s that
/// misses the candidate, starting at start_bits and doubling up to 4096.
/// Requires q odd >= 5, gcd(d', q) = 1 and candidate > 0; throws
/// std::invalid_argument otherwise and std::runtime_error past the cap.
Exclusion exclude_candidate(const Integer& q, const Integer& d_prime, const Rational& candidate,
                            unsigned start_bits = kDefaultSeparationBits);

Certificate certify(const Rational& r, TrigFunction f,
                    unsigned separation_bits = kDefaultSeparationBits);

struct VerificationResult {
  bool passed = false;
  std::string reason;  // empty on success

  static VerificationResult pass() { return {true, {}}; }
  static VerificationResult fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return passed; }
};

/// Re-derives every step from the input alone (no classifier involved) and
/// checks that the steps entail the stated verdict.
VerificationResult verify_certificate(const Certificate& c);

/// Canonical JSON rendering: integers and rationals as decimal strings.
std::string to_json(const Certificate& c, int indent = 2);

class CertificateFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Strict parse: unknown or missing fields, non-canonical numbers and a
/// version other than 1 throw CertificateFormatError.
Certificate parse_certificate(std::string_view json_text);

/// parse_certificate followed by verify_certificate; format errors fail.
VerificationResult verify_certificate_json(std::string_view json_text);

}  // namespace trigrat
