#include "pfn/engine.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pfn {

CertifiedValue compute_certified(std::uint64_t n, SeriesKind kind,
                                 long bits_override) {
  CertifiedValue cv;
  cv.n = n;
  cv.kind = kind;
  cv.certificate = certify(n, kind, bits_override);
  std::uint64_t N = cv.certificate.N;
  cv.plan = plan_precision(n, N);
  long bits = bits_override > 0 ? std::max(bits_override, BigReal::kMinBits)
                                : cv.plan.bits;
  if (bits_override > 0) {
    cv.plan.bits = bits;
    cv.plan.rounding_slack = rounding_slack_at(n, N, bits);
  }
  cv.sum = partial_sum_value(n, kind, N, bits);
  cv.value = cv.sum.round_to_nearest();
  return cv;
}

namespace {

SweepRow certified_row(std::uint64_t n, SeriesKind kind,
                       const PartitionTable* oracle) {
  CertifiedValue cv = compute_certified(n, kind);
  SweepRow row;
  row.n = n;
  row.N = cv.certificate.N;
  row.bits = cv.plan.bits;
  row.certified = cv.certificate.certified;
  row.value = cv.value;
  if (oracle != nullptr && oracle->covers(n))
    row.oracle_match = row.certified && cv.value == oracle->at(n);
  return row;
}

SweepRow lehmer_row(std::uint64_t n, const PartitionTable& oracle) {
  std::uint64_t N = lehmer_rule_terms(n);
  PrecisionPlan plan = plan_precision(n, N);
  BigReal sum = partial_sum_value(n, SeriesKind::HardyRamanujan, N, plan.bits);
  SweepRow row;
  row.n = n;
  row.N = N;
  row.bits = plan.bits;
  row.certified = true;  // by the n > 600 theorem, not by a bound scan
  row.value = sum.round_to_nearest();
  if (oracle.covers(n)) row.oracle_match = row.value == oracle.at(n);
  return row;
}

template <typename Fn>
std::vector<SweepRow> run_rows(std::uint64_t from, std::uint64_t to,
                               Execution exec, Fn&& fn) {
  if (to < from) throw std::invalid_argument("sweep: empty range");
  std::size_t count = static_cast<std::size_t>(to - from + 1);
  std::vector<SweepRow> rows(count);
  if (exec == Execution::OpenMP) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i)
      rows[static_cast<std::size_t>(i)] =
          fn(from + static_cast<std::uint64_t>(i));
    return rows;
#endif
  }
  for (std::size_t i = 0; i < count; ++i) rows[i] = fn(from + i);
  return rows;
}

}  // namespace

std::vector<SweepRow> certified_range(std::uint64_t from, std::uint64_t to,
                                      SeriesKind kind,
                                      const PartitionTable* oracle,
                                      Execution exec) {
  return run_rows(from, to, exec,
                  [&](std::uint64_t n) { return certified_row(n, kind, oracle); });
}

std::vector<SweepRow> lehmer_rule_range(std::uint64_t from, std::uint64_t to,
                                        const PartitionTable& oracle,
                                        Execution exec) {
  if (from <= 600)
    throw std::invalid_argument("lehmer_rule_range: rule requires n > 600");
  return run_rows(from, to, exec,
                  [&](std::uint64_t n) { return lehmer_row(n, oracle); });
}

namespace {

struct AkAgreementAcc {
  double hr_selberg = 0.0;
  double hr_table2 = 0.0;
  double selberg_table2 = 0.0;
  double printed_defect = 0.0;
  double imag = 0.0;

  void merge(const AkAgreementAcc& o) {
    hr_selberg = std::max(hr_selberg, o.hr_selberg);
    hr_table2 = std::max(hr_table2, o.hr_table2);
    selberg_table2 = std::max(selberg_table2, o.selberg_table2);
    printed_defect = std::max(printed_defect, o.printed_defect);
    imag = std::max(imag, o.imag);
  }
};

double abs_diff(const BigReal& a, const BigReal& b) {
  return (a - b).abs().to_double();
}

AkAgreementAcc ak_agreement_one_k(std::uint64_t k, std::uint64_t n_max,
                                  long bits) {
  AkAgreementAcc acc;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    AkValue hr = ak_hr(k, n, bits);
    AkValue sel = ak_selberg(k, n, bits);
    acc.hr_selberg = std::max(acc.hr_selberg, abs_diff(hr.value, sel.value));
    acc.imag = std::max(acc.imag, hr.imag_residue.to_double());
    if (k <= 18) {
      AkValue tab = ak_table2(k, n, bits);
      acc.hr_table2 = std::max(acc.hr_table2, abs_diff(hr.value, tab.value));
      acc.selberg_table2 =
          std::max(acc.selberg_table2, abs_diff(sel.value, tab.value));
      if (k >= 15 && k <= 17) {
        AkValue printed = ak_table2_printed(k, n, bits);
        acc.printed_defect =
            std::max(acc.printed_defect, abs_diff(hr.value, printed.value));
      }
    }
  }
  return acc;
}

}  // namespace

AkAgreement ak_agreement_grid(std::uint64_t k_pair, std::uint64_t n_max,
                              long bits, Execution exec) {
  AkAgreementAcc total;
  if (exec == Execution::OpenMP) {
#ifdef _OPENMP
#pragma omp parallel
    {
      AkAgreementAcc local;
#pragma omp for schedule(dynamic) nowait
      for (std::int64_t k = 1; k <= static_cast<std::int64_t>(k_pair); ++k)
        local.merge(ak_agreement_one_k(static_cast<std::uint64_t>(k), n_max, bits));
#pragma omp critical
      total.merge(local);
    }
#else
    for (std::uint64_t k = 1; k <= k_pair; ++k)
      total.merge(ak_agreement_one_k(k, n_max, bits));
#endif
  } else {
    for (std::uint64_t k = 1; k <= k_pair; ++k)
      total.merge(ak_agreement_one_k(k, n_max, bits));
  }
  AkAgreement out;
  out.max_hr_selberg = total.hr_selberg;
  out.max_hr_table2 = total.hr_table2;
  out.max_selberg_table2 = total.selberg_table2;
  out.max_printed_defect = total.printed_defect;
  out.max_imag_residue = total.imag;
  return out;
}

namespace {

AkBoundSweep ak_bound_one_k(std::uint64_t k, std::uint64_t n_max, long bits) {
  AkBoundSweep acc;
  BigReal limit = BigReal::from_ui(k, bits).pow_rational(5, 6);
  double limit_d = limit.to_double();
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    BigReal a = ak_selberg(k, n, bits).value.abs();
    double ratio = a.to_double() / limit_d;
    acc.max_ratio = std::max(acc.max_ratio, ratio);
    if (!(a < limit.mul_ui(2))) ++acc.violations;
  }
  return acc;
}

}  // namespace

AkBoundSweep ak_bound_sweep(std::uint64_t k_max, std::uint64_t n_max,
                            long bits, Execution exec) {
  AkBoundSweep total;
  if (exec == Execution::OpenMP) {
#ifdef _OPENMP
#pragma omp parallel
    {
      AkBoundSweep local;
#pragma omp for schedule(dynamic) nowait
      for (std::int64_t k = 1; k <= static_cast<std::int64_t>(k_max); ++k) {
        AkBoundSweep one = ak_bound_one_k(static_cast<std::uint64_t>(k), n_max, bits);
        local.max_ratio = std::max(local.max_ratio, one.max_ratio);
        local.violations += one.violations;
      }
#pragma omp critical
      {
        total.max_ratio = std::max(total.max_ratio, local.max_ratio);
        total.violations += local.violations;
      }
    }
    return total;
#endif
  }
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    AkBoundSweep one = ak_bound_one_k(k, n_max, bits);
    total.max_ratio = std::max(total.max_ratio, one.max_ratio);
    total.violations += one.violations;
  }
  return total;
}

}  // namespace pfn
