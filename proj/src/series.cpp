#include "pfn/series.hpp"

#include <stdexcept>

namespace pfn {

BigReal growth_constant(long bits) {
  BigReal two_thirds = BigReal::from_ui(2, bits + 32).div_ui(3);
  BigReal c = BigReal::pi(bits + 32) * sqrt(two_thirds);
  BigReal r(bits);
  mpfr_set(r.raw_mut(), c.raw(), MPFR_RNDN);
  return r;
}

BigReal mu(std::uint64_t n, long bits) {
  if (n == 0) throw std::invalid_argument("mu: n must be >= 1");
  BigReal t = sqrt(BigReal::from_ui(24, bits + 32).mul_ui(n).sub_ui(1));
  BigReal m = BigReal::pi(bits + 32).div_ui(6) * t;
  BigReal r(bits);
  mpfr_set(r.raw_mut(), m.raw(), MPFR_RNDN);
  return r;
}

BigReal lambda_n(std::uint64_t n, long bits) {
  if (n == 0) throw std::invalid_argument("lambda_n: n must be >= 1");
  BigReal t = BigReal::from_ui(24, bits + 32).mul_ui(n).sub_ui(1).div_ui(24);
  BigReal l = sqrt(t);
  BigReal r(bits);
  mpfr_set(r.raw_mut(), l.raw(), MPFR_RNDN);
  return r;
}

namespace {

// sqrt(12)/(24n-1) * k^{-1/2}, the shared prefactor of both kernels.
BigReal kernel_prefactor(const BigReal& k, std::uint64_t n, long bits) {
  BigReal s12 = sqrt(BigReal::from_ui(12, bits));
  BigReal denom = BigReal::from_ui(24, bits).mul_ui(n).sub_ui(1);
  return s12 / denom / sqrt(k);
}

BigReal round_to(const BigReal& x, long bits) {
  BigReal r(bits);
  mpfr_set(r.raw_mut(), x.raw(), MPFR_RNDN);
  return r;
}

}  // namespace

BigReal hr_kernel_real(const BigReal& k, std::uint64_t n, long bits) {
  long work = bits + 32;
  BigReal m = mu(n, work);
  BigReal kk(work);
  mpfr_set(kk.raw_mut(), k.raw(), MPFR_RNDN);
  BigReal one = BigReal::from_ui(1, work);
  BigReal val = kernel_prefactor(kk, n, work) * (one - kk / m) * exp(m / kk);
  return round_to(val, bits);
}

BigReal hr_kernel(std::uint64_t k, std::uint64_t n, long bits) {
  if (k == 0 || n == 0) throw std::invalid_argument("hr_kernel: k, n >= 1");
  return hr_kernel_real(BigReal::from_ui(k, bits), n, bits);
}

BigReal rademacher_kernel(std::uint64_t k, std::uint64_t n, long bits) {
  if (k == 0 || n == 0) throw std::invalid_argument("rademacher_kernel: k, n >= 1");
  long work = bits + 32;
  BigReal m = mu(n, work);
  BigReal kk = BigReal::from_ui(k, work);
  BigReal one = BigReal::from_ui(1, work);
  BigReal x = m / kk;
  BigReal bracket = (one - kk / m) * exp(x) + (one + kk / m) * exp(-x);
  BigReal val = kernel_prefactor(kk, n, work) * bracket;
  return round_to(val, bits);
}

namespace {

SeriesTerm make_term(std::uint64_t k, std::uint64_t n, long bits,
                     SeriesKind kind) {
  SeriesTerm t;
  t.k = k;
  t.ak = ak_selberg(k, n, bits);
  t.kernel = kind == SeriesKind::HardyRamanujan ? hr_kernel(k, n, bits)
                                                : rademacher_kernel(k, n, bits);
  t.term = t.ak.value * t.kernel;
  return t;
}

}  // namespace

SeriesTerm hr_term(std::uint64_t k, std::uint64_t n, long bits) {
  return make_term(k, n, bits, SeriesKind::HardyRamanujan);
}

SeriesTerm rademacher_term(std::uint64_t k, std::uint64_t n, long bits) {
  return make_term(k, n, bits, SeriesKind::Rademacher);
}

BigReal phi_derivative_form(std::uint64_t q, std::uint64_t n, long bits) {
  if (q == 0 || n == 0) throw std::invalid_argument("phi_derivative_form: q, n >= 1");
  long work = bits + 32;
  BigReal m = mu(n, work);
  BigReal lam = lambda_n(n, work);
  BigReal qq = BigReal::from_ui(q, work);
  BigReal one = BigReal::from_ui(1, work);
  // d/dn(e^{C lambda / q} / lambda) = e^{mu/q} (mu/q - 1) / (2 lambda^3)
  BigReal ddn = exp(m / qq) * (m / qq - one) / (lam * lam * lam).mul_ui(2);
  BigReal coef =
      sqrt(qq) / (BigReal::pi(work) * sqrt(BigReal::from_ui(2, work))).mul_ui(2);
  return round_to(coef * ddn, bits);
}

BigReal rademacher_derivative_form(std::uint64_t k, std::uint64_t n, long bits) {
  if (k == 0 || n == 0)
    throw std::invalid_argument("rademacher_derivative_form: k, n >= 1");
  long work = bits + 32;
  BigReal m = mu(n, work);
  BigReal lam = lambda_n(n, work);
  BigReal kk = BigReal::from_ui(k, work);
  BigReal x = m / kk;
  // d/dn(sinh(C lambda/k) / lambda) = [x cosh x - sinh x] / (2 lambda^3)
  BigReal ddn = (x * cosh(x) - sinh(x)) / (lam * lam * lam).mul_ui(2);
  BigReal coef = sqrt(kk) / (BigReal::pi(work) * sqrt(BigReal::from_ui(2, work)));
  return round_to(coef * ddn, bits);
}

PartialSum partial_sum(std::uint64_t n, SeriesKind kind, std::uint64_t N,
                       long bits) {
  if (N == 0) throw std::invalid_argument("partial_sum: N must be >= 1");
  PartialSum ps;
  ps.n = n;
  ps.kind = kind;
  ps.terms = N;
  ps.term_list.reserve(N);
  for (std::uint64_t k = 1; k <= N; ++k)
    ps.term_list.push_back(make_term(k, n, bits, kind));
  BigReal acc = BigReal::from_ui(0, bits);
  for (const SeriesTerm& t : ps.term_list) acc = acc + t.term;
  ps.sum = acc;
  return ps;
}

BigReal partial_sum_value(std::uint64_t n, SeriesKind kind, std::uint64_t N,
                          long bits) {
  if (N == 0) throw std::invalid_argument("partial_sum_value: N must be >= 1");
  BigReal acc = BigReal::from_ui(0, bits);
  for (std::uint64_t k = 1; k <= N; ++k)
    acc = acc + make_term(k, n, bits, kind).term;
  return acc;
}

std::vector<TermMagnitude> term_magnitude_report(std::uint64_t n,
                                                 SeriesKind kind,
                                                 std::uint64_t N_max,
                                                 long bits) {
  if (N_max == 0) throw std::invalid_argument("term_magnitude_report: N_max >= 1");
  std::vector<TermMagnitude> rows;
  rows.reserve(N_max);
  for (std::uint64_t k = 1; k <= N_max; ++k) {
    TermMagnitude row;
    row.k = k;
    row.magnitude = make_term(k, n, bits, kind).term.abs();
    row.inv_k_squared = BigReal::from_ui(1, bits).div_ui(k).div_ui(k);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace pfn
