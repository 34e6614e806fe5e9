#include "oracles.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace oracle {

namespace {

using i128 = __int128;

i64 isqrt(i128 n) {
  if (n < 0) return -1;
  auto r = static_cast<i64>(std::sqrt(static_cast<long double>(n)));
  while (static_cast<i128>(r) * r > n) --r;
  while (static_cast<i128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(i128 n) {
  const i64 r = isqrt(n);
  return r >= 0 && static_cast<i128>(r) * r == n;
}

i64 gcd3(i64 a, i64 b, i64 c) { return std::gcd(std::gcd(a, b), c); }

using Form = std::tuple<i64, i64, i64>;

bool zagier_reduced(const Form& f) {
  const auto [a, b, c] = f;
  return a > 0 && c > 0 && b > a + c;
}

// f(-y, x + n y), with the unique n that keeps the form Zagier reduced
Form zagier_step(const Form& f) {
  const auto [a, b, c] = f;
  std::optional<Form> next;
  for (i64 n = 1; n <= 2 * b + 2; ++n) {
    const Form g{c, 2 * c * n - b, a - b * n + c * n * n};
    if (!zagier_reduced(g)) continue;
    if (next) throw std::logic_error("Zagier step is not unique");
    next = g;
  }
  if (!next) throw std::logic_error("Zagier step not found");
  return *next;
}

}  // namespace

i64 definite_class_number(i64 D) {
  if (D >= 0 || ((D % 4) + 4) % 4 > 1) throw std::invalid_argument("bad negative discriminant");
  i64 count = 0;
  for (i64 a = 1; 3 * a * a <= -D; ++a) {
    for (i64 b = -a + 1; b <= a; ++b) {
      const i64 num = b * b - D;
      if (num % (4 * a) != 0) continue;
      const i64 c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (gcd3(a, b, c) != 1) continue;
      ++count;
    }
  }
  return count;
}

i64 narrow_class_number(i64 D) {
  if (D <= 0 || is_square(D)) throw std::invalid_argument("bad positive discriminant");
  // D = (b - a - c)(b + a + c) + (a - c)^2 forces b < D
  std::set<Form> reduced;
  for (i64 b = 1; b <= D; ++b) {
    const i64 num = b * b - D;
    if (num <= 0 || num % 4 != 0) continue;
    const i64 ac = num / 4;
    for (i64 a = 1; a <= ac; ++a) {
      if (ac % a != 0) continue;
      const Form f{a, b, ac / a};
      if (zagier_reduced(f) && gcd3(a, b, ac / a) == 1) reduced.insert(f);
    }
  }
  i64 cycles = 0;
  std::set<Form> seen;
  for (const Form& start : reduced) {
    if (seen.count(start)) continue;
    ++cycles;
    Form f = start;
    do {
      seen.insert(f);
      f = zagier_step(f);
      if (!reduced.count(f)) throw std::logic_error("Zagier step left the reduced set");
    } while (f != start);
  }
  return cycles;
}

std::optional<PellUnit> smallest_unit(i64 D, i64 y_limit) {
  for (i64 y = 1; y <= y_limit; ++y) {
    const i128 dy2 = static_cast<i128>(D) * y * y;
    for (int norm : {-1, 1}) {
      // x^2 - D y^2 = 4 norm
      const i128 x2 = dy2 + 4 * norm;
      if (x2 > 0 && is_square(x2)) return PellUnit{isqrt(x2), y, norm};
    }
  }
  return std::nullopt;
}

int unit_norm_from_period(i64 d) {
  const i64 a0 = isqrt(d);
  if (a0 * a0 == d) throw std::invalid_argument("square d");
  i64 m = 0, q = 1, a = a0, period = 0;
  do {
    m = q * a - m;
    q = (d - m * m) / q;
    a = (a0 + m) / q;
    ++period;
  } while (a != 2 * a0);
  return period % 2 == 1 ? -1 : 1;
}

i64 class_number(i64 d) {
  const i64 D = field_discriminant(d);
  if (D < 0) return definite_class_number(D);
  const i64 narrow = narrow_class_number(D);
  return unit_norm_from_period(d) == -1 ? narrow : narrow / 2;
}

i64 field_discriminant(i64 d) { return ((d % 4) + 4) % 4 == 1 ? d : 4 * d; }

}  // namespace oracle
