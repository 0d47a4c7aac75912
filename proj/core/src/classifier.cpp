#include "trigrat/classifier.hpp"

#include "trigrat/angle.hpp"

namespace trigrat {

std::string_view to_string(TrigFunction f) {
  switch (f) {
    case TrigFunction::Tan2: return "tan2";
    case TrigFunction::Tan: return "tan";
    case TrigFunction::Cos2: return "cos2";
    case TrigFunction::Cos: return "cos";
  }
  return "?";
}

std::optional<TrigFunction> parse_trig_function(std::string_view text) {
  for (TrigFunction f : {TrigFunction::Tan2, TrigFunction::Tan, TrigFunction::Cos2, TrigFunction::Cos}) {
    if (to_string(f) == text) return f;
  }
  return std::nullopt;
}

std::string_view to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Pole: return "pole";
    case VerdictKind::Exact: return "exact";
    case VerdictKind::Irrational: return "irrational";
  }
  return "?";
}

std::string TrigVerdict::str() const {
  std::string out(to_string(kind));
  if (value) out += " " + value->str();
  return out;
}

TrigVerdict classify_tan_squared(const Rational& r) {
  const ReducedAngle a = reduce_for_tan(r);
  if (!a.n.fits_ulong_p()) return TrigVerdict::irrational();
  switch (a.n.get_ui()) {
    case 1: return TrigVerdict::exact(0);
    case 2: return TrigVerdict::pole();
    case 3: return TrigVerdict::exact(3);
    case 4: return TrigVerdict::exact(1);
    case 6: return TrigVerdict::exact(Rational(1, 3));
    default: return TrigVerdict::irrational();
  }
}

TrigVerdict classify_tan(const Rational& r) {
  const ReducedAngle a = reduce_for_tan(r);
  if (a.n == 1) return TrigVerdict::exact(0);
  if (a.n == 2) return TrigVerdict::pole();
  if (a.n == 4) return TrigVerdict::exact(a.sign);
  // Denominators 3 and 6 give tan = +-sqrt(3), +-1/sqrt(3).
  return TrigVerdict::irrational();
}

TrigVerdict classify_cos_squared(const Rational& r) {
  const TrigVerdict t2 = classify_tan_squared(r);
  switch (t2.kind) {
    case VerdictKind::Pole: return TrigVerdict::exact(0);
    case VerdictKind::Exact: return TrigVerdict::exact(Rational(1) / (Rational(1) + *t2.value));
    case VerdictKind::Irrational: break;
  }
  return TrigVerdict::irrational();
}

TrigVerdict classify_cos(const Rational& r) {
  const ReducedAngle a = reduce_for_cos(r);
  const Rational f = a.fraction();
  const Rational half(1, 2);
  // cos is decreasing on [0, pi]; the sign is that of 1/2 - f.
  const int sign = f < half ? 1 : (f > half ? -1 : 0);
  if (a.n == 1 || a.n == 3) {
    return TrigVerdict::exact(a.n == 1 ? Rational(sign) : Rational(sign, 2));
  }
  if (a.n == 2) return TrigVerdict::exact(0);
  return TrigVerdict::irrational();
}

TrigVerdict classify(const Rational& r, TrigFunction f) {
  switch (f) {
    case TrigFunction::Tan2: return classify_tan_squared(r);
    case TrigFunction::Tan: return classify_tan(r);
    case TrigFunction::Cos2: return classify_cos_squared(r);
    case TrigFunction::Cos: return classify_cos(r);
  }
  return TrigVerdict::irrational();
}

}  // namespace trigrat
