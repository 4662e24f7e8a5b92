#pragma once
// Decimal-anchored abscissa.  Thresholds reach 1.601e98, far past double
// range for *decimal-faithful* round-tripping, so the canonical form is a
// normalized decimal mantissa in [1, 10) plus a power of ten, with a certified
// enclosure of the value and of its natural log alongside.

#include <string>

#include "dk/encl.hpp"

namespace dk {

class BigPoint {
 public:
  // Accepts "162726", "17551062.4", "1.601e98", "1e29".
  static BigPoint parse(const std::string& s, Prec p = 0);
  static BigPoint from_encl(const Encl& value);

  const std::string& mantissa() const { return mantissa_; }  // "1.601"
  long exp10() const { return exp10_; }
  const Encl& value() const { return value_; }
  const Encl& ln() const { return ln_; }

  // Canonical scientific form "1.601e98".
  std::string format() const { return mantissa_ + "e" + std::to_string(exp10_); }
  // Publication form: plain integer when below 1e6, otherwise format().
  std::string format_pub() const;

 private:
  std::string mantissa_;
  long exp10_ = 0;
  Encl value_;
  Encl ln_;
};

// Publication round-up of a positive enclosure midpoint-free: whole-number
// ceiling below 1e6, else ceiling at `sig` significant decimal figures.
// A relative guard of 1e-30 strips decimal->binary representation dust so
// that values sitting exactly on a decimal boundary do not get bumped.
// Returns the normalized decimal string, e.g. "162726" or "1.7552e7".
std::string round_up_pub(const Encl& v, int sig = 5);

// Ceiling at `sig` significant figures regardless of magnitude ("1.601e98"),
// same dust guard.  plain_int_below_1e6 keeps integer formatting small.
std::string ceil_sig_str(const Encl& v, int sig, bool plain_int_below_1e6);

// Round-up at fixed number of decimals ("0.6449" from 0.64484...): used for
// the published omega/alpha panels.  Value must be positive and < 1e15.
std::string ceil_decimals_str(const Encl& v, int decimals);

// Scientific round-up at `sig` significant figures: "7.0882e-5".
std::string ceil_sci_str(const Encl& v, int sig);

}  // namespace dk
