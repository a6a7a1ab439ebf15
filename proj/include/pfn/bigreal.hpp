#ifndef PFN_BIGREAL_HPP
#define PFN_BIGREAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

namespace pfn {

// Adaptive-precision real number. Every value carries its working precision
// in bits; arithmetic between two values is performed at the larger of the
// two precisions. Precision never drops below 64 bits.
//
// All operations round to nearest (even), so each primitive is correct to
// 0.5 ulp and the transcendental wrappers comfortably meet their 4-ulp
// contract. Values are immutable after construction and safe to share
// across threads.
class BigReal {
 public:
  static constexpr long kMinBits = 64;

  explicit BigReal(long precision_bits = kMinBits);
  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  static BigReal from_ui(unsigned long v, long bits);
  static BigReal from_si(long v, long bits);
  static BigReal from_double(double v, long bits);
  static BigReal from_string(const std::string& s, long bits);
  // Exact when bits >= bit length of z; otherwise the precision is raised
  // so the integer is always represented exactly.
  static BigReal from_integer(const mpz_class& z, long bits);
  static BigReal pi(long bits);
  // 2^e, exact.
  static BigReal pow2(long e, long bits);

  long precision_bits() const { return mpfr_get_prec(x_); }

  BigReal operator+(const BigReal& rhs) const;
  BigReal operator-(const BigReal& rhs) const;
  BigReal operator*(const BigReal& rhs) const;
  BigReal operator/(const BigReal& rhs) const;
  BigReal operator-() const;

  BigReal add_ui(unsigned long v) const;
  BigReal sub_ui(unsigned long v) const;
  BigReal mul_ui(unsigned long v) const;
  BigReal div_ui(unsigned long v) const;
  BigReal ui_div(unsigned long v) const;  // v / *this
  BigReal abs() const;
  BigReal sqr() const;
  // x^(num/den) for small integer exponents, den > 0.
  BigReal pow_rational(long num, unsigned long den) const;

  int cmp(const BigReal& rhs) const { return mpfr_cmp(x_, rhs.x_); }
  int cmp_ui(unsigned long v) const { return mpfr_cmp_ui(x_, v); }
  int cmp_si(long v) const { return mpfr_cmp_si(x_, v); }
  int sign() const { return mpfr_sgn(x_); }
  bool operator<(const BigReal& r) const { return cmp(r) < 0; }
  bool operator<=(const BigReal& r) const { return cmp(r) <= 0; }
  bool operator>(const BigReal& r) const { return cmp(r) > 0; }
  bool operator>=(const BigReal& r) const { return cmp(r) >= 0; }
  bool operator==(const BigReal& r) const { return cmp(r) == 0; }

  bool is_zero() const { return mpfr_zero_p(x_); }
  bool is_finite() const { return mpfr_number_p(x_); }

  // Nearest integer (ties to even; callers hold rounding certificates that
  // keep ties out of reach).
  mpz_class round_to_nearest() const;

  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  // Scientific notation with `digits` significant digits, round-half-even.
  std::string str(int digits = 20) const;

  mpfr_srcptr raw() const { return x_; }
  mpfr_ptr raw_mut() { return x_; }

 private:
  mpfr_t x_;
  bool owned_ = true;
};

enum class Transcendental { Exp, Sinh, Cosh, Cos, Sqrt, Log };

// Single-call kernel for the transcendental evaluations the series need.
// Result is at the operand's precision; sqrt of a negative or log of a
// non-positive value is a domain error.
BigReal eval_transcendental(const BigReal& x, Transcendental kind);

// Convenience forwarders.
BigReal exp(const BigReal& x);
BigReal sinh(const BigReal& x);
BigReal cosh(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal log(const BigReal& x);

// ceil(mu(n) / ln 2), the integer-bit budget of the dominant series
// magnitude e^{mu(n)}. Evaluated with directed rounding so the result is
// never an underestimate.
long mu_ceil_bits(std::uint64_t n);

// Precision plan for an N-term series evaluation at index n. bits covers
// the dominant magnitude plus 64 guard bits plus a 10*log2(N+1) surcharge;
// rounding_slack is the conservative bound (N+5) * 2^(-bits + ceil(mu/ln2) + 8)
// on accumulated rounding error, always < 1/8 for a formula-chosen plan.
struct PrecisionPlan {
  std::uint64_t n = 0;
  std::uint64_t terms = 0;
  long bits = BigReal::kMinBits;
  BigReal rounding_slack;
};

PrecisionPlan plan_precision(std::uint64_t n, std::uint64_t terms);

// Same slack model evaluated at an arbitrary working precision (used when
// the caller overrides the planned bits).
BigReal rounding_slack_at(std::uint64_t n, std::uint64_t terms, long bits);

// |a - b| measured in units in the last place at precision `bits`,
// relative to the larger magnitude. Returns 0 when both are zero.
double ulp_distance(const BigReal& a, const BigReal& b, long bits);

}  // namespace pfn

#endif  // PFN_BIGREAL_HPP
