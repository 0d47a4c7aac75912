#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "trigrat/exact.hpp"

namespace trigrat {

enum class TrigFunction { Tan2, Tan, Cos2, Cos };

/// "tan2", "tan", "cos2", "cos".
std::string_view to_string(TrigFunction f);
/// Inverse of to_string; std::nullopt for anything else.
std::optional<TrigFunction> parse_trig_function(std::string_view text);

enum class VerdictKind { Pole, Exact, Irrational };

std::string_view to_string(VerdictKind k);

/// Outcome of asking whether f(r pi) is rational. value is set iff Exact.
struct TrigVerdict {
  VerdictKind kind = VerdictKind::Irrational;
  std::optional<Rational> value;

  static TrigVerdict pole() { return {VerdictKind::Pole, std::nullopt}; }
  static TrigVerdict exact(Rational v) { return {VerdictKind::Exact, std::move(v)}; }
  static TrigVerdict irrational() { return {VerdictKind::Irrational, std::nullopt}; }

  /// "pole", "irrational" or "exact <value>".
  std::string str() const;

  friend bool operator==(const TrigVerdict&, const TrigVerdict&) = default;
};

// Closed-form tables on the reduced denominator. The exceptional denominators
// are {1, 2, 3, 4, 6} for tan^2 and cos^2, {1, 4} for tan and {1, 2, 3} for cos.
TrigVerdict classify_tan_squared(const Rational& r);
TrigVerdict classify_tan(const Rational& r);
TrigVerdict classify_cos_squared(const Rational& r);
TrigVerdict classify_cos(const Rational& r);

TrigVerdict classify(const Rational& r, TrigFunction f);

}  // namespace trigrat
