#include <json.hpp>

#include <algorithm>
#include <initializer_list>

#include "trigrat/certifier.hpp"

namespace trigrat {

using nlohmann::json;

namespace {

json str(const Rational& r) { return r.str(); }
json str(const Integer& v) { return v.get_str(); }

json verdict_json(const TrigVerdict& v) {
  json out = {{"kind", std::string(to_string(v.kind))}};
  if (v.value) out["value"] = str(*v.value);
  return out;
}

json integers_json(const std::vector<Integer>& xs) {
  json arr = json::array();
  for (const Integer& x : xs) arr.push_back(str(x));
  return arr;
}

struct StepWriter {
  json operator()(const BaseStep& s) const {
    return {{"type", "base"}, {"angle", str(s.angle)}, {"value", s.value ? str(*s.value) : json("pole")}};
  }
  json operator()(const ChainStep& s) const {
    json angles = json::array();
    for (const Rational& a : s.angles) angles.push_back(str(a));
    return {{"type", "chain"}, {"angles", angles}};
  }
  json operator()(const PolyStep& s) const {
    json exclusions = json::array();
    for (const Exclusion& ex : s.exclusions) {
      json e = {{"candidate", str(ex.candidate)}};
      if (const auto* nr = std::get_if<NonrootExclusion>(&ex.method)) {
        e["method"] = "nonroot";
        e["Q_value"] = str(nr->q_value);
      } else {
        const auto& sep = std::get<SeparationExclusion>(ex.method);
        e["method"] = "separation";
        e["interval_lo"] = str(sep.interval.lo);
        e["interval_hi"] = str(sep.interval.hi);
        e["bits"] = sep.bits;
      }
      exclusions.push_back(std::move(e));
    }
    return {{"type", "poly"},
            {"q", str(s.q)},
            {"d_prime", str(s.d_prime)},
            {"coeffs", integers_json(s.coeffs)},
            {"candidates", integers_json(s.candidates)},
            {"exclusions", exclusions}};
  }
  json operator()(const BackwardQuadraticStep& s) const {
    return {{"type", "backward_quadratic"},
            {"den", str(s.den)},
            {"D", str(s.D)},
            {"quad_coeffs", integers_json(s.quad_coeffs)},
            {"discriminant", str(s.discriminant)},
            {"square_witness", s.square_witness ? str(*s.square_witness) : json(nullptr)}};
  }
  json operator()(const SqrtStep& s) const {
    return {{"type", "sqrt_step"},
            {"radicand", str(s.radicand)},
            {"square_test_result", s.square_test_result ? str(*s.square_test_result) : json(nullptr)}};
  }
  json operator()(const IdentityStep& s) const {
    return {{"type", "identity_step"}, {"relation", std::string(to_string(s.relation))}};
  }
};

// ---- strict reading ----

[[noreturn]] void bad(const std::string& what) { throw CertificateFormatError(what); }

void expect_keys(const json& obj, std::initializer_list<const char*> keys, const char* where) {
  if (!obj.is_object()) bad(std::string(where) + ": expected an object");
  for (const char* k : keys) {
    if (!obj.contains(k)) bad(std::string(where) + ": missing field '" + k + "'");
  }
  for (const auto& item : obj.items()) {
    const bool known = std::any_of(keys.begin(), keys.end(), [&](const char* k) { return item.key() == k; });
    if (!known) bad(std::string(where) + ": unknown field '" + item.key() + "'");
  }
}

const std::string& text_of(const json& j, const char* field) {
  if (!j.is_string()) bad(std::string("field '") + field + "' must be a string");
  return j.get_ref<const std::string&>();
}

Rational rational_of(const json& j, const char* field) {
  try {
    return parse_canonical_rational(text_of(j, field));
  } catch (const CertificateFormatError&) {
    throw;
  } catch (const std::exception& e) {
    bad(std::string("field '") + field + "': " + e.what());
  }
}

Integer integer_of(const json& j, const char* field) {
  const Rational r = rational_of(j, field);
  if (!r.is_integer()) bad(std::string("field '") + field + "' must be an integer");
  return r.num();
}

std::optional<Rational> optional_rational_of(const json& j, const char* field) {
  if (j.is_null()) return std::nullopt;
  return rational_of(j, field);
}

std::vector<Integer> integers_of(const json& j, const char* field) {
  if (!j.is_array()) bad(std::string("field '") + field + "' must be an array");
  std::vector<Integer> out;
  for (const json& x : j) out.push_back(integer_of(x, field));
  return out;
}

unsigned bits_of(const json& j) {
  if (!j.is_number_unsigned()) bad("field 'bits' must be a nonnegative integer");
  const auto v = j.get<std::uint64_t>();
  if (v > kMaxSeparationBits) bad("field 'bits' exceeds the precision cap");
  return static_cast<unsigned>(v);
}

TrigVerdict verdict_of(const json& j) {
  if (!j.is_object() || !j.contains("kind")) bad("verdict: missing 'kind'");
  const std::string& kind = text_of(j["kind"], "kind");
  if (kind == "exact") {
    expect_keys(j, {"kind", "value"}, "verdict");
    return TrigVerdict::exact(rational_of(j["value"], "value"));
  }
  expect_keys(j, {"kind"}, "verdict");
  if (kind == "pole") return TrigVerdict::pole();
  if (kind == "irrational") return TrigVerdict::irrational();
  bad("verdict: unknown kind '" + kind + "'");
}

Exclusion exclusion_of(const json& j) {
  if (!j.is_object() || !j.contains("method")) bad("exclusion: missing 'method'");
  const std::string& method = text_of(j["method"], "method");
  if (method == "nonroot") {
    expect_keys(j, {"candidate", "method", "Q_value"}, "exclusion");
    return Exclusion{rational_of(j["candidate"], "candidate"),
                     NonrootExclusion{rational_of(j["Q_value"], "Q_value")}};
  }
  if (method == "separation") {
    expect_keys(j, {"candidate", "method", "interval_lo", "interval_hi", "bits"}, "exclusion");
    return Exclusion{rational_of(j["candidate"], "candidate"),
                     SeparationExclusion{RatInterval{rational_of(j["interval_lo"], "interval_lo"),
                                                     rational_of(j["interval_hi"], "interval_hi")},
                                         bits_of(j["bits"])}};
  }
  bad("exclusion: unknown method '" + method + "'");
}

CertStep step_of(const json& j) {
  if (!j.is_object() || !j.contains("type")) bad("step: missing 'type'");
  const std::string& type = text_of(j["type"], "type");
  if (type == "base") {
    expect_keys(j, {"type", "angle", "value"}, "base");
    BaseStep s{rational_of(j["angle"], "angle"), std::nullopt};
    if (!(j["value"].is_string() && j["value"].get_ref<const std::string&>() == "pole")) {
      s.value = rational_of(j["value"], "value");
    }
    return s;
  }
  if (type == "chain") {
    expect_keys(j, {"type", "angles"}, "chain");
    if (!j["angles"].is_array()) bad("chain: 'angles' must be an array");
    ChainStep s;
    for (const json& a : j["angles"]) s.angles.push_back(rational_of(a, "angles"));
    return s;
  }
  if (type == "poly") {
    expect_keys(j, {"type", "q", "d_prime", "coeffs", "candidates", "exclusions"}, "poly");
    PolyStep s;
    s.q = integer_of(j["q"], "q");
    s.d_prime = integer_of(j["d_prime"], "d_prime");
    s.coeffs = integers_of(j["coeffs"], "coeffs");
    s.candidates = integers_of(j["candidates"], "candidates");
    if (!j["exclusions"].is_array()) bad("poly: 'exclusions' must be an array");
    for (const json& e : j["exclusions"]) s.exclusions.push_back(exclusion_of(e));
    return s;
  }
  if (type == "backward_quadratic") {
    expect_keys(j, {"type", "den", "D", "quad_coeffs", "discriminant", "square_witness"},
                "backward_quadratic");
    BackwardQuadraticStep s;
    s.den = integer_of(j["den"], "den");
    s.D = rational_of(j["D"], "D");
    s.quad_coeffs = integers_of(j["quad_coeffs"], "quad_coeffs");
    s.discriminant = integer_of(j["discriminant"], "discriminant");
    if (!j["square_witness"].is_null()) s.square_witness = integer_of(j["square_witness"], "square_witness");
    return s;
  }
  if (type == "sqrt_step") {
    expect_keys(j, {"type", "radicand", "square_test_result"}, "sqrt_step");
    return SqrtStep{rational_of(j["radicand"], "radicand"),
                    optional_rational_of(j["square_test_result"], "square_test_result")};
  }
  if (type == "identity_step") {
    expect_keys(j, {"type", "relation"}, "identity_step");
    const auto rel = parse_relation(text_of(j["relation"], "relation"));
    if (!rel) bad("identity_step: unknown relation");
    return IdentityStep{*rel};
  }
  bad("unknown step type '" + type + "'");
}

}  // namespace

std::string to_json(const Certificate& c, int indent) {
  json steps = json::array();
  for (const CertStep& s : c.steps) steps.push_back(std::visit(StepWriter{}, s));
  const json out = {{"version", kCertificateVersion},
                    {"input", str(c.input)},
                    {"function", std::string(to_string(c.function))},
                    {"verdict", verdict_json(c.verdict)},
                    {"steps", steps}};
  return out.dump(indent);
}

Certificate parse_certificate(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  expect_keys(root, {"version", "input", "function", "verdict", "steps"}, "certificate");
  if (!root["version"].is_number_integer() || root["version"].get<long>() != kCertificateVersion) {
    bad("unsupported certificate version");
  }
  Certificate c;
  c.input = rational_of(root["input"], "input");
  const auto f = parse_trig_function(text_of(root["function"], "function"));
  if (!f) bad("unknown function");
  c.function = *f;
  c.verdict = verdict_of(root["verdict"]);
  if (!root["steps"].is_array()) bad("'steps' must be an array");
  for (const json& s : root["steps"]) c.steps.push_back(step_of(s));
  return c;
}

VerificationResult verify_certificate_json(std::string_view json_text) {
  Certificate c;
  try {
    c = parse_certificate(json_text);
  } catch (const CertificateFormatError& e) {
    return VerificationResult::fail(std::string("malformed certificate: ") + e.what());
  }
  return verify_certificate(c);
}

}  // namespace trigrat
