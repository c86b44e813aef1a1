#include "shortness/rational.hpp"

#include <charconv>
#include <numeric>

#include "shortness/errors.hpp"

namespace shortness {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::InvalidInput, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  num_ = g == 0 ? 0 : num / g;
  den_ = g == 0 ? 1 : den / g;
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t value = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || s.empty()) {
    throw Error(ErrorKind::InvalidInput, "malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text), 1);
  const std::int64_t p = parse_int(text.substr(0, slash), text);
  const std::int64_t q = parse_int(text.substr(slash + 1), text);
  if (q <= 0) throw Error(ErrorKind::InvalidInput, "rational denominator must be positive: '" + std::string(text) + "'");
  return Rational(p, q);
}

std::int64_t Rational::ceil() const noexcept {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmbeddingInconsistent: return "EmbeddingInconsistent";
    case ErrorKind::CutIsWholeGraph: return "CutIsWholeGraph";
    case ErrorKind::ReconstructionInvalid: return "ReconstructionInvalid";
    case ErrorKind::GluingNotPlanar: return "GluingNotPlanar";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::UndefinedForDepth: return "UndefinedForDepth";
    case ErrorKind::NoSuchCycle: return "NoSuchCycle";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::NoSimplicialVertex: return "NoSimplicialVertex";
    case ErrorKind::ConstructionFailed: return "ConstructionFailed";
    case ErrorKind::BaseCaseUnverified: return "BaseCaseUnverified";
    case ErrorKind::InvalidCrossEdge: return "InvalidCrossEdge";
    case ErrorKind::NotFoundWithinBudget: return "NotFoundWithinBudget";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace shortness
