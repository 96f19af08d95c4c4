#include "ivhf/interval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace ivhf {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::Inverted: return "Inverted";
    case ErrorKind::NegativeScalar: return "NegativeScalar";
    case ErrorKind::EmptyElement: return "EmptyElement";
    case ErrorKind::EmptyUniverse: return "EmptyUniverse";
    case ErrorKind::UniverseMismatch: return "UniverseMismatch";
    case ErrorKind::ParameterMismatch: return "ParameterMismatch";
    case ErrorKind::EmptyParameterIntersection: return "EmptyParameterIntersection";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::InvalidSoftSet: return "InvalidSoftSet";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::UnknownLaw: return "UnknownLaw";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

namespace {

bool in_unit(double v) noexcept { return std::isfinite(v) && v >= 0.0 && v <= 1.0; }

// Kernel outputs are in [0,1] mathematically; rounding may push an endpoint
// one ulp outside or swap nearly equal endpoints.
UnitInterval settle(double lower, double upper) {
  lower = std::clamp(lower, 0.0, 1.0);
  upper = std::clamp(upper, 0.0, 1.0);
  return UnitInterval::canonical_pair(lower, upper);
}

std::string format_pair(double lower, double upper) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "[%.12g, %.12g]", lower, upper);
  return buf;
}

// Endpoint sums on a 1e-12 lattice. Values are bounded by 2 so the product
// fits comfortably in an int64.
long long quantized_sum(const RealInterval& a) noexcept {
  return std::llround((a.lower + a.upper) * 1e12);
}

}  // namespace

UnitInterval UnitInterval::make(double lower, double upper) {
  if (!in_unit(lower) || !in_unit(upper)) {
    throw Error(ErrorKind::OutOfRange,
                "interval endpoint outside [0,1]: " + format_pair(lower, upper));
  }
  if (lower > upper) {
    throw Error(ErrorKind::Inverted,
                "interval lower endpoint exceeds upper: " + format_pair(lower, upper));
  }
  return UnitInterval(lower, upper);
}

UnitInterval UnitInterval::canonical_pair(double a, double b) {
  return make(std::min(a, b), std::max(a, b));
}

std::string to_string(const UnitInterval& a) { return format_pair(a.lower(), a.upper()); }
std::string to_string(const RealInterval& a) { return format_pair(a.lower, a.upper); }

bool approx_equal(const UnitInterval& a, const UnitInterval& b, double tol) noexcept {
  return std::abs(a.lower() - b.lower()) <= tol && std::abs(a.upper() - b.upper()) <= tol;
}

RealInterval interval_add(const RealInterval& a, const RealInterval& b) noexcept {
  return {a.lower + b.lower, a.upper + b.upper};
}

RealInterval interval_scale(double scale, const RealInterval& a) {
  if (!(scale >= 0.0)) {
    throw Error(ErrorKind::NegativeScalar, "interval scale factor must be non-negative");
  }
  if (scale == 0.0) return {0.0, 0.0};
  return {scale * a.lower, scale * a.upper};
}

double possibility_ge(const RealInterval& a, const RealInterval& b) noexcept {
  const double span = a.width() + b.width();
  if (span <= 0.0) {
    if (a.lower > b.lower) return 1.0;
    if (a.lower < b.lower) return 0.0;
    return 0.5;
  }
  const double ratio = std::max((b.upper - a.lower) / span, 0.0);
  return std::max(1.0 - ratio, 0.0);
}

RankOutcome rank_compare(const RealInterval& a, const RealInterval& b) noexcept {
  RankOutcome out;
  out.possibility = possibility_ge(a, b);
  const long long sa = quantized_sum(a);
  const long long sb = quantized_sum(b);
  if (sa != sb) {
    out.verdict = sa > sb ? Verdict::greater : Verdict::less;
  } else if (a.lower != b.lower) {
    out.verdict = a.lower > b.lower ? Verdict::greater : Verdict::less;
  } else if (a.upper != b.upper) {
    out.verdict = a.upper > b.upper ? Verdict::greater : Verdict::less;
  } else {
    out.verdict = Verdict::equal;
  }
  return out;
}

bool rank_less(const RealInterval& a, const RealInterval& b) noexcept {
  const long long sa = quantized_sum(a);
  const long long sb = quantized_sum(b);
  if (sa != sb) return sa < sb;
  if (a.lower != b.lower) return a.lower < b.lower;
  return a.upper < b.upper;
}

UnitInterval interval_complement(const UnitInterval& a) noexcept {
  return settle(1.0 - a.upper(), 1.0 - a.lower());
}

UnitInterval interval_join(const UnitInterval& a, const UnitInterval& b) noexcept {
  return settle(std::max(a.lower(), b.lower()), std::max(a.upper(), b.upper()));
}

UnitInterval interval_meet(const UnitInterval& a, const UnitInterval& b) noexcept {
  return settle(std::min(a.lower(), b.lower()), std::min(a.upper(), b.upper()));
}

UnitInterval ring_sum_kernel(const UnitInterval& a, const UnitInterval& b) noexcept {
  return settle(a.lower() + b.lower() - a.lower() * b.lower(),
                a.upper() + b.upper() - a.upper() * b.upper());
}

UnitInterval ring_product_kernel(const UnitInterval& a, const UnitInterval& b) noexcept {
  return settle(a.lower() * b.lower(), a.upper() * b.upper());
}

double star_kernel(double a, double b) noexcept {
  return (a + b) / (2.0 * (a * b + 1.0));
}

std::string_view to_string(OperatorKind kind) noexcept {
  switch (kind) {
    case OperatorKind::O1: return "O1";
    case OperatorKind::O2: return "O2";
    case OperatorKind::O3: return "O3";
    case OperatorKind::O4: return "O4";
  }
  return "O?";
}

namespace {

double endpoint_kernel(OperatorKind kind, double x, double y) noexcept {
  const double d = std::abs(x - y);
  switch (kind) {
    case OperatorKind::O1: return d / (1.0 + d);
    case OperatorKind::O2: return d / (1.0 + 2.0 * d);
    case OperatorKind::O3: return d / 2.0;
    case OperatorKind::O4: return std::abs(star_kernel(x, y)) / 2.0;
  }
  return 0.0;
}

}  // namespace

RealInterval operator_kernel_raw(OperatorKind kind, const UnitInterval& a,
                                 const UnitInterval& b) noexcept {
  return {endpoint_kernel(kind, a.lower(), b.lower()),
          endpoint_kernel(kind, a.upper(), b.upper())};
}

UnitInterval operator_kernel(OperatorKind kind, const UnitInterval& a,
                             const UnitInterval& b) noexcept {
  const RealInterval raw = operator_kernel_raw(kind, a, b);
  return settle(raw.lower, raw.upper);
}

}  // namespace ivhf
