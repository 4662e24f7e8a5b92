#include "dk/bigpoint.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cmath>

namespace dk {

namespace {

// v.hi * (1 - 1e-30) at generous precision: strips decimal->binary dust so
// exact decimal boundaries are not bumped by the ceiling rules.
MpReal guarded_hi(const Encl& v, Prec p) {
  MpReal g(p), eps(p);
  mpfr_set_str(eps.raw(), "1e-30", 10, MPFR_RNDN);
  mpfr_ui_sub(eps.raw(), 1, eps.raw(), MPFR_RNDN);
  mpfr_mul(g.raw(), v.hi().raw(), eps.raw(), MPFR_RNDN);
  return g;
}

long floor_log10(const MpReal& g) {
  MpReal l(g.prec());
  mpfr_log10(l.raw(), g.raw(), MPFR_RNDN);
  return (long)std::floor(mpfr_get_d(l.raw(), MPFR_RNDN));
}

// ceil(g / 10^shift) as an exact integer (shift may be negative).
mpz_class ceil_shifted(const MpReal& g, long shift) {
  Prec p = std::max<Prec>(g.prec(), (Prec)(std::labs(shift) * 4 + 96));
  MpReal pow10(p), q(p);
  mpfr_ui_pow_ui(pow10.raw(), 10, (unsigned long)std::labs(shift), MPFR_RNDN);
  if (shift >= 0)
    mpfr_div(q.raw(), g.raw(), pow10.raw(), MPFR_RNDU);
  else
    mpfr_mul(q.raw(), g.raw(), pow10.raw(), MPFR_RNDU);
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), q.raw(), MPFR_RNDU);
  return z;
}

std::string mantissa_from_digits(const std::string& digits, long& e10) {
  std::string m = digits.substr(0, 1);
  if (digits.size() > 1) m += "." + digits.substr(1);
  (void)e10;
  return m;
}

}  // namespace

BigPoint BigPoint::parse(const std::string& s, Prec p) {
  std::string body = s;
  long expo = 0;
  auto epos = body.find_first_of("eE");
  if (epos != std::string::npos) {
    expo = std::stol(body.substr(epos + 1));
    body = body.substr(0, epos);
  }
  if (body.empty() || body[0] == '-')
    throw ConfigError("abscissa must be positive: " + s);
  std::string digits;
  long point_shift = -1;  // digits before the decimal point
  bool seen_point = false;
  for (char c : body) {
    if (c == '.') {
      if (seen_point) throw ConfigError("malformed number: " + s);
      seen_point = true;
      point_shift = (long)digits.size();
      continue;
    }
    if (!std::isdigit((unsigned char)c)) throw ConfigError("malformed number: " + s);
    digits += c;
  }
  if (digits.empty()) throw ConfigError("malformed number: " + s);
  if (point_shift < 0) point_shift = (long)digits.size();
  // strip leading zeros, adjusting the implied exponent
  size_t firstnz = digits.find_first_not_of('0');
  if (firstnz == std::string::npos) throw ConfigError("abscissa must be positive: " + s);
  long e10 = expo + point_shift - 1 - (long)firstnz;
  digits = digits.substr(firstnz);
  // keep given significant digits (trailing zeros are meaningful in print forms)
  BigPoint b;
  b.exp10_ = e10;
  b.mantissa_ = mantissa_from_digits(digits, e10);
  b.value_ = Encl::from_string(s, p);
  b.ln_ = log_e(b.value_);
  return b;
}

BigPoint BigPoint::from_encl(const Encl& value) {
  if (!value.strictly_positive()) throw DomainError("BigPoint requires positive value");
  MpReal mid(value.prec());
  mpfr_add(mid.raw(), value.lo().raw(), value.hi().raw(), MPFR_RNDN);
  mpfr_div_2ui(mid.raw(), mid.raw(), 1, MPFR_RNDN);
  std::string s = decimal_str(mid, 21);
  BigPoint b = parse(s, value.prec());
  b.value_ = value;  // keep the caller's certified enclosure
  b.ln_ = log_e(value);
  return b;
}

std::string BigPoint::format_pub() const {
  if (exp10_ < 0 || exp10_ >= 6) return format();
  // expand mantissa * 10^exp10 as plain decimal
  std::string digits = mantissa_;
  auto dot = digits.find('.');
  std::string frac;
  if (dot != std::string::npos) {
    frac = digits.substr(dot + 1);
    digits = digits.substr(0, dot);
  }
  std::string all = digits + frac;
  long int_len = exp10_ + 1;
  while ((long)all.size() < int_len) all += '0';
  std::string out = all.substr(0, int_len);
  std::string rest = all.substr(int_len);
  while (!rest.empty() && rest.back() == '0') rest.pop_back();
  if (!rest.empty()) out += "." + rest;
  return out;
}

std::string round_up_pub(const Encl& v, int sig) {
  if (!v.strictly_positive()) throw DomainError("publication rounding needs positive value");
  Prec p = std::max<Prec>(v.prec(), 192);
  MpReal g = guarded_hi(v, p);
  if (mpfr_cmp_ui(g.raw(), 1000000) < 0) {
    mpz_class z = ceil_shifted(g, 0);
    return z.get_str();
  }
  return ceil_sig_str(v, sig, false);
}

std::string ceil_sig_str(const Encl& v, int sig, bool plain_int_below_1e6) {
  if (!v.strictly_positive()) throw DomainError("ceil_sig needs positive value");
  Prec p = std::max<Prec>(v.prec(), 192);
  MpReal g = guarded_hi(v, p);
  if (plain_int_below_1e6 && mpfr_cmp_ui(g.raw(), 1000000) < 0) {
    mpz_class z = ceil_shifted(g, 0);
    return z.get_str();
  }
  long e10 = floor_log10(g);
  mpz_class D = ceil_shifted(g, e10 - sig + 1);
  std::string digits = D.get_str();
  if ((long)digits.size() == sig + 1) {  // 99999 -> 100000 rollover
    e10 += 1;
    digits = digits.substr(0, sig);
  }
  std::string m = digits.substr(0, 1);
  if (digits.size() > 1) m += "." + digits.substr(1);
  return m + "e" + std::to_string(e10);
}

std::string ceil_decimals_str(const Encl& v, int decimals) {
  if (!v.strictly_positive()) throw DomainError("ceil_decimals needs positive value");
  Prec p = std::max<Prec>(v.prec(), 192);
  MpReal g = guarded_hi(v, p);
  mpz_class D = ceil_shifted(g, -decimals);
  std::string digits = D.get_str();
  while ((long)digits.size() < decimals + 1) digits = "0" + digits;
  std::string out = digits.substr(0, digits.size() - decimals);
  out += "." + digits.substr(digits.size() - decimals);
  return out;
}

std::string ceil_sci_str(const Encl& v, int sig) {
  if (!v.strictly_positive()) throw DomainError("ceil_sci needs positive value");
  Prec p = std::max<Prec>(v.prec(), 192);
  MpReal g = guarded_hi(v, p);
  long e10 = floor_log10(g);
  mpz_class D = ceil_shifted(g, e10 - sig + 1);
  std::string digits = D.get_str();
  if ((long)digits.size() == sig + 1) {
    e10 += 1;
    digits = digits.substr(0, sig);
  }
  std::string m = digits.substr(0, 1);
  if (digits.size() > 1) m += "." + digits.substr(1);
  return m + "e" + std::to_string(e10);
}

}  // namespace dk
