#include "pfn/estimators.hpp"

#include <stdexcept>

#include "pfn/series.hpp"

namespace pfn {

namespace {

BigReal round_to(const BigReal& x, long bits) {
  BigReal r(bits);
  mpfr_set(r.raw_mut(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal four_sqrt3(long bits) {
  return sqrt(BigReal::from_ui(3, bits)).mul_ui(4);
}

}  // namespace

BigReal estimate_hr141(std::uint64_t n, long bits) {
  if (n == 0) throw std::invalid_argument("estimate_hr141: n >= 1");
  long work = bits + 32;
  BigReal val = exp(growth_constant(work) * sqrt(BigReal::from_ui(n, work))) /
                four_sqrt3(work).mul_ui(n);
  return round_to(val, bits);
}

BigReal estimate_hr155(std::uint64_t n, long bits) {
  if (n == 0) throw std::invalid_argument("estimate_hr155: n >= 1");
  long work = bits + 32;
  BigReal lam = lambda_n(n, work);
  BigReal c = growth_constant(work);
  BigReal one = BigReal::from_ui(1, work);
  BigReal val =
      exp(c * lam) / (four_sqrt3(work) * lam.sqr()) * (one - one / (c * lam));
  return round_to(val, bits);
}

BigReal estimate_uspensky(std::uint64_t n, long bits) {
  if (n == 0) throw std::invalid_argument("estimate_uspensky: n >= 1");
  long work = bits + 32;
  // e^{pi sqrt((2/3)(n - 1/24))} / (4 sqrt 3 (n - 1/24))
  //   * (1 - sqrt 3 / (pi sqrt(2n - 1/12)))
  BigReal n24 = BigReal::from_ui(24, work).mul_ui(n).sub_ui(1).div_ui(24);
  BigReal piw = BigReal::pi(work);
  BigReal expo = exp(piw * sqrt(n24.mul_ui(2).div_ui(3)));
  BigReal corr = BigReal::from_ui(1, work) -
                 sqrt(BigReal::from_ui(3, work)) / (piw * sqrt(n24.mul_ui(2)));
  BigReal val = expo / (four_sqrt3(work) * n24) * corr;
  return round_to(val, bits);
}

BigReal estimate_multiterm161(std::uint64_t n, unsigned terms, long bits) {
  if (terms < 1 || terms > 4)
    throw std::invalid_argument(
        "estimate_multiterm161: 1..4 displayed terms; use partial_sum beyond");
  return partial_sum_value(n, SeriesKind::HardyRamanujan, terms, bits);
}

EstimateReport make_report(std::uint64_t n, EstimateFormula formula,
                           const PartitionTable& table, long bits) {
  EstimateReport rep;
  rep.n = n;
  rep.formula = formula;
  switch (formula) {
    case EstimateFormula::HR141: rep.estimate = estimate_hr141(n, bits); break;
    case EstimateFormula::HR155: rep.estimate = estimate_hr155(n, bits); break;
    case EstimateFormula::Uspensky: rep.estimate = estimate_uspensky(n, bits); break;
    case EstimateFormula::TwoTerm161:
      rep.estimate = estimate_multiterm161(n, 2, bits);
      break;
    case EstimateFormula::FourTerm161x:
      rep.estimate = estimate_multiterm161(n, 4, bits);
      break;
  }
  rep.exact = table.at(n);
  BigReal exact_r = BigReal::from_integer(rep.exact, bits);
  rep.ratio = rep.estimate / exact_r;
  BigReal err = (exact_r - rep.estimate).abs();
  long work = bits + 32;
  BigReal c = growth_constant(work);
  BigReal sq = sqrt(BigReal::from_ui(n, work));
  switch (formula) {
    case EstimateFormula::HR141:
      rep.scaled_error = rep.ratio.sub_ui(1);
      break;
    case EstimateFormula::HR155:
      rep.scaled_error = err.mul_ui(n) * exp(-(c * sq.div_ui(2)));
      break;
    case EstimateFormula::Uspensky:
      rep.scaled_error = err * exp(-(c * sq.div_ui(2)));
      break;
    case EstimateFormula::TwoTerm161:
      rep.scaled_error =
          err * exp(-(c * sq.mul_ui(9).div_ui(20)));  // 0.9 * C/2
      break;
    case EstimateFormula::FourTerm161x:
      rep.scaled_error =
          err * exp(-(c * sq.mul_ui(9).div_ui(40)));  // 0.9 * C/4
      break;
  }
  return rep;
}

std::vector<LogAsymptoticsRow> log_asymptotics_report(
    std::span<const std::uint64_t> n_grid, const PartitionTable& table,
    long bits) {
  if (n_grid.empty())
    throw std::invalid_argument("log_asymptotics_report: empty grid");
  std::vector<LogAsymptoticsRow> rows;
  rows.reserve(n_grid.size());
  long work = bits + 32;
  for (std::uint64_t n : n_grid) {
    if (n == 0) throw std::invalid_argument("log_asymptotics_report: n >= 1");
    LogAsymptoticsRow row;
    row.n = n;
    BigReal logp = log(BigReal::from_integer(table.at(n), work));
    BigReal sq = sqrt(BigReal::from_ui(n, work));
    row.log_p_over_sqrt_n = round_to(logp / sq, bits);
    BigReal resid = logp - growth_constant(work) * sq +
                    log(BigReal::from_ui(n, work)) +
                    log(four_sqrt3(work));
    row.normalized_residual = round_to(resid, bits);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace pfn
