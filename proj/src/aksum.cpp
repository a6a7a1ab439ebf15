#include "pfn/aksum.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

namespace pfn {

namespace {

constexpr std::uint64_t kMaxK = 1u << 20;  // keeps the exact phase arithmetic in range

void check_pq(std::uint64_t p, std::uint64_t q) {
  if (q < 2 || p < 1 || p >= q)
    throw std::invalid_argument("omega: need 1 <= p < q, q >= 2");
  if (q > kMaxK) throw std::invalid_argument("omega: q too large");
  if (std::gcd(p, q) != 1)
    throw std::invalid_argument("omega: p and q must be coprime");
}

}  // namespace

OmegaRoot omega_with(std::uint64_t p, std::uint64_t q, std::uint64_t p_prime,
                     OmegaFormula formula) {
  check_pq(p, q);
  if (p_prime == 0 || (1 + static_cast<__int128>(p) * p_prime) % q != 0)
    throw std::invalid_argument("omega: q must divide 1 + p*p'");
  if (formula == OmegaFormula::PNumerator && p % 2 == 0)
    throw std::invalid_argument("omega: numerator formula requires odd p");
  if (formula == OmegaFormula::QNumerator && q % 2 == 0)
    throw std::invalid_argument("omega: numerator formula requires odd q");

  __int128 P = p, Q = q, PP = p_prime;
  __int128 shared = (Q * Q - 1) * (2 * P - PP + P * P * PP);
  __int128 e;
  int sign;
  if (formula == OmegaFormula::QNumerator) {
    // (-p/q) * exp(-{ (q-1)/4 + (q^2-1)(2p - p' + p^2 p')/(12q) } pi i)
    e = 3 * Q * (Q - 1) + shared;
    sign = jacobi(-static_cast<long long>(p), q);
  } else {
    // (-q/p) * exp(-{ (2-pq-p)/4 + (q^2-1)(2p - p' + p^2 p')/(12q) } pi i)
    e = 3 * Q * (2 - P * Q - P) + shared;
    sign = jacobi(-static_cast<long long>(q), p);
  }
  OmegaRoot w;
  w.p = p;
  w.q = q;
  w.sign = sign;
  w.angle = ExactAngle::from_wide(-e, 12 * Q);
  return w;
}

OmegaRoot omega(std::uint64_t p, std::uint64_t q) {
  check_pq(p, q);
  std::uint64_t pp = mod_inverse_complement(p, q);
  // Odd q takes the q-numerator formula; both-odd is indifferent and the
  // q-numerator form is canonical. Even q forces odd p.
  OmegaFormula f =
      q % 2 == 1 ? OmegaFormula::QNumerator : OmegaFormula::PNumerator;
  return omega_with(p, q, pp, f);
}

AkValue ak_hr(std::uint64_t k, std::uint64_t n, long bits) {
  if (k == 0) throw std::invalid_argument("ak_hr: k must be >= 1");
  AkValue out;
  out.k = k;
  out.n = n;
  if (k == 1) {
    // Empty product of residues; the value 1 is forced by the cosine routes.
    out.value = BigReal::from_ui(1, bits);
    out.imag_residue = BigReal::from_ui(0, bits);
    return out;
  }
  long work = bits + 64;
  BigReal re = BigReal::from_ui(0, work);
  BigReal im = BigReal::from_ui(0, work);
  std::uint64_t n_mod = n % k;
  for (std::uint64_t p = 1; p < k; ++p) {
    if (std::gcd(p, k) != 1) continue;
    OmegaRoot w = omega(p, k);
    // total phase = omega angle - 2 n p pi / k, exactly.
    ExactAngle rot(-2 * static_cast<long long>(n_mod * p),
                   static_cast<long long>(k));
    ExactAngle total = w.angle + rot;
    BigReal c = angle_cos(total, work);
    BigReal s = angle_sin(total, work);
    if (w.sign < 0) {
      re = re - c;
      im = im - s;
    } else {
      re = re + c;
      im = im + s;
    }
  }
  out.value = BigReal(bits);
  mpfr_set(out.value.raw_mut(), re.raw(), MPFR_RNDN);
  out.imag_residue = BigReal(bits);
  mpfr_abs(out.imag_residue.raw_mut(), im.raw(), MPFR_RNDN);
  return out;
}

AkValue ak_selberg(std::uint64_t k, std::uint64_t n, long bits) {
  if (k == 0 || k > kMaxK) throw std::invalid_argument("ak_selberg: bad k");
  AkValue out;
  out.k = k;
  out.n = n;
  long work = bits + 64;
  BigReal acc = BigReal::from_ui(0, work);
  std::uint64_t n_mod = n % k;
  bool nonempty = false;
  for (std::uint64_t l = 0; l < 2 * k; ++l) {
    // (3l^2 + l)/2 + n = 0 (mod k); one of l, 3l+1 is even, so the halving
    // is exact before any reduction.
    std::uint64_t g = (l % 2 == 0) ? (l / 2) * (3 * l + 1) : l * ((3 * l + 1) / 2);
    if ((g + n_mod) % k != 0) continue;
    nonempty = true;
    BigReal c = angle_cos(ExactAngle(static_cast<long long>(6 * l + 1),
                                     static_cast<long long>(6 * k)),
                          work);
    acc = (l % 2 == 0) ? acc + c : acc - c;
  }
  out.imag_residue = BigReal::from_ui(0, bits);
  if (!nonempty) {
    out.value = BigReal::from_ui(0, bits);
    return out;
  }
  BigReal scale = sqrt(BigReal::from_ui(k, work).div_ui(3));
  BigReal v = scale * acc;
  out.value = BigReal(bits);
  mpfr_set(out.value.raw_mut(), v.raw(), MPFR_RNDN);
  return out;
}

namespace {

// One summand 2 cos((a/b) n pi + (c/d) pi).
struct CosEntry {
  int a, b, c, d;
};

// k = 3..18. A_1 and A_2 are handled directly.
struct TableRow {
  unsigned k;
  std::array<CosEntry, 8> e;
  unsigned count;
};

constexpr TableRow kRepairedTable[] = {
    {3, {{{2, 3, -1, 18}}}, 1},
    {4, {{{1, 2, -1, 8}}}, 1},
    {5, {{{2, 5, -1, 5}, {4, 5, 0, 1}}}, 2},
    {6, {{{1, 3, -5, 18}}}, 1},
    {7, {{{2, 7, -5, 14}, {4, 7, -1, 14}, {6, 7, 1, 14}}}, 3},
    {8, {{{1, 4, -7, 16}, {3, 4, -1, 16}}}, 2},
    {9, {{{2, 9, -14, 27}, {4, 9, -4, 27}, {8, 9, 4, 27}}}, 3},
    {10, {{{1, 5, -3, 5}, {3, 5, 0, 1}}}, 2},
    {11,
     {{{2, 11, -15, 22}, {4, 11, -5, 22}, {6, 11, -3, 22}, {8, 11, -3, 22},
       {10, 11, 5, 22}}},
     5},
    {12, {{{1, 6, -55, 72}, {5, 6, 1, 72}}}, 2},
    {13,
     {{{2, 13, -11, 13}, {4, 13, -4, 13}, {6, 13, -1, 13}, {8, 13, 1, 13},
       {10, 13, 0, 1}, {12, 13, 4, 13}}},
     6},
    {14, {{{1, 7, -13, 14}, {3, 7, -3, 14}, {5, 7, -3, 14}}}, 3},
    // First summand repaired: printed phase -(1/90)pi, derivation gives
    // +(89/90)pi (the printed summand is the negation of the true one).
    {15, {{{2, 15, 89, 90}, {4, 15, -7, 18}, {8, 15, -19, 90}, {14, 15, 7, 18}}}, 4},
    // Second summand repaired: printed +(27/32)pi, derivation gives -(5/32)pi.
    {16, {{{1, 8, 29, 32}, {3, 8, -5, 32}, {5, 8, 5, 32}, {7, 8, 3, 32}}}, 4},
    // Sixth summand repaired: printed phase -(5/17) n pi (a stray n),
    // derivation gives the constant phase -(5/17)pi.
    {17,
     {{{2, 17, 14, 17}, {4, 17, -8, 17}, {6, 17, -5, 17}, {8, 17, 0, 1},
       {10, 17, -1, 17}, {12, 17, -5, 17}, {14, 17, -1, 17}, {16, 17, 8, 17}}},
     8},
    {18, {{{1, 9, 20, 27}, {5, 9, -2, 27}, {7, 9, 2, 27}}}, 3},
};

constexpr TableRow kPrintedRow15 = {
    15, {{{2, 15, -1, 90}, {4, 15, -7, 18}, {8, 15, -19, 90}, {14, 15, 7, 18}}}, 4};
constexpr TableRow kPrintedRow16 = {
    16, {{{1, 8, 29, 32}, {3, 8, 27, 32}, {5, 8, 5, 32}, {7, 8, 3, 32}}}, 4};
// The stray n collapses the sixth summand to 2 cos((7/17) n pi).
constexpr TableRow kPrintedRow17 = {
    17,
    {{{2, 17, 14, 17}, {4, 17, -8, 17}, {6, 17, -5, 17}, {8, 17, 0, 1},
      {10, 17, -1, 17}, {7, 17, 0, 1}, {14, 17, -1, 17}, {16, 17, 8, 17}}},
    8};

constexpr Table2Repair kRepairs[] = {
    {15, 1, "2cos((2/15)n pi - (1/90) pi)", "2cos((2/15)n pi + (89/90) pi)"},
    {16, 2, "2cos((3/8)n pi + (27/32) pi)", "2cos((3/8)n pi - (5/32) pi)"},
    {17, 6, "2cos((12/17)n pi - (5/17) n pi)", "2cos((12/17)n pi - (5/17) pi)"},
};

AkValue eval_table_row(const TableRow& row, std::uint64_t n, long bits) {
  AkValue out;
  out.k = row.k;
  out.n = n;
  long work = bits + 64;
  BigReal acc = BigReal::from_ui(0, work);
  for (unsigned i = 0; i < row.count; ++i) {
    const CosEntry& t = row.e[i];
    std::uint64_t n_mod = n % static_cast<std::uint64_t>(2 * t.b);
    ExactAngle ang =
        ExactAngle(static_cast<long long>(t.a) * static_cast<long long>(n_mod),
                   t.b) +
        ExactAngle(t.c, t.d);
    acc = acc + angle_cos(ang, work).mul_ui(2);
  }
  out.value = BigReal(bits);
  mpfr_set(out.value.raw_mut(), acc.raw(), MPFR_RNDN);
  out.imag_residue = BigReal::from_ui(0, bits);
  return out;
}

AkValue eval_table(std::uint64_t k, std::uint64_t n, long bits, bool printed) {
  if (k < 1 || k > 18)
    throw std::invalid_argument("ak_table2: closed forms exist for k = 1..18");
  AkValue out;
  out.k = k;
  out.n = n;
  if (k == 1) {
    out.value = BigReal::from_ui(1, bits);
    out.imag_residue = BigReal::from_ui(0, bits);
    return out;
  }
  if (k == 2) {
    out.value = BigReal::from_si(n % 2 == 0 ? 1 : -1, bits);
    out.imag_residue = BigReal::from_ui(0, bits);
    return out;
  }
  if (printed) {
    if (k == 15) return eval_table_row(kPrintedRow15, n, bits);
    if (k == 16) return eval_table_row(kPrintedRow16, n, bits);
    if (k == 17) return eval_table_row(kPrintedRow17, n, bits);
  }
  return eval_table_row(kRepairedTable[k - 3], n, bits);
}

}  // namespace

AkValue ak_table2(std::uint64_t k, std::uint64_t n, long bits) {
  return eval_table(k, n, bits, false);
}

AkValue ak_table2_printed(std::uint64_t k, std::uint64_t n, long bits) {
  return eval_table(k, n, bits, true);
}

std::span<const Table2Repair> table2_repairs() { return kRepairs; }

}  // namespace pfn
