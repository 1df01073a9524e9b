#include "erdos/rational.hpp"

#include <cctype>

#include "erdos/errors.hpp"

namespace erdos {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInterval: return "MalformedInterval";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::EmptyPattern: return "EmptyPattern";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::NotFineEnough: return "NotFineEnough";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotDenseEnough: return "NotDenseEnough";
    case ErrorCode::NotClusteredEnough: return "NotClusteredEnough";
    case ErrorCode::TrialBudgetExceeded: return "TrialBudgetExceeded";
    case ErrorCode::SelectionFailed: return "SelectionFailed";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::EmptyBox: return "EmptyBox";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::AllMethodsFailed: return "AllMethodsFailed";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::UnknownCommand: return "UnknownCommand";
  }
  return "UnknownError";
}

Rational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view body = text.substr(begin, end - begin);
  if (body.empty()) throw Error(ErrorCode::ParseError, "empty rational");

  auto check_part = [&](std::string_view part, bool sign_ok) {
    if (part.empty()) return false;
    size_t i = 0;
    if (sign_ok && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };

  size_t slash = body.find('/');
  std::string num_text, den_text = "1";
  if (slash == std::string_view::npos) {
    if (!check_part(body, true))
      throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(body) + "'");
    num_text = std::string(body);
  } else {
    std::string_view num_part = body.substr(0, slash);
    std::string_view den_part = body.substr(slash + 1);
    if (!check_part(num_part, true) || !check_part(den_part, false))
      throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(body) + "'");
    num_text = std::string(num_part);
    den_text = std::string(den_part);
  }
  if (num_text[0] == '+') num_text.erase(0, 1);

  BigInt num(num_text), den(den_text);
  if (den == 0)
    throw Error(ErrorCode::ParseError, "zero denominator: '" + std::string(body) + "'");
  return make_rational(num, den);
}

std::string rat_str(const Rational& value) { return value.get_str(); }

BigInt rat_floor(const Rational& value) {
  BigInt result;
  mpz_fdiv_q(result.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return result;
}

BigInt rat_ceil(const Rational& value) {
  BigInt result;
  mpz_cdiv_q(result.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return result;
}

Rational rat_abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

const Rational& rat_min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
const Rational& rat_max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

Rational rat_pow(const Rational& base, unsigned long exponent) {
  Rational result;
  mpz_pow_ui(result.get_num().get_mpz_t(), base.get_num().get_mpz_t(), exponent);
  mpz_pow_ui(result.get_den().get_mpz_t(), base.get_den().get_mpz_t(), exponent);
  // base canonical => base^e canonical
  return result;
}

Rational rat_pow2(long exponent) {
  Rational result(1);
  if (exponent >= 0)
    mpz_mul_2exp(result.get_num().get_mpz_t(), result.get_num().get_mpz_t(),
                 static_cast<unsigned long>(exponent));
  else
    mpz_mul_2exp(result.get_den().get_mpz_t(), result.get_den().get_mpz_t(),
                 static_cast<unsigned long>(-exponent));
  return result;
}

double rat_double(const Rational& value) { return value.get_d(); }

Rational largest_pow2_below(const Rational& bound) {
  if (bound <= 0) throw Error(ErrorCode::BadParams, "largest_pow2_below needs bound > 0");
  long e = 0;
  Rational p(1);
  if (p < bound) {
    while (p * 2 < bound) { p *= 2; ++e; }
  } else {
    while (p >= bound) { p /= 2; --e; }
  }
  return p;
}

}  // namespace erdos
