#include "torus/forms.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace torus {

Integer centered_residue(const Integer& b, const Integer& a) {
  const Integer m = 2 * abs(a);
  Integer r = floor_mod(b, m);
  if (r > abs(a)) r -= m;
  return r;
}

BinaryForm with_b(const Integer& a, const Integer& b, const Integer& D) {
  const Integer num = b * b - D;
  if (num % (4 * a) != 0) throw std::logic_error("form coefficients are not integral");
  return {a, b, num / (4 * a)};
}

BinaryForm principal_form(const Integer& D) {
  const Integer s = floor_mod(D, 2);
  return {1, s, (s * s - D) / 4};
}

BinaryForm opposite(const BinaryForm& f) { return {f.a, -f.b, f.c}; }

BinaryForm compose_raw(const BinaryForm& f, const BinaryForm& g) {
  const Integer D = f.discriminant();
  if (g.discriminant() != D) throw std::invalid_argument("composition of forms with different discriminants");
  const Integer s = (f.b + g.b) / 2;
  const Bezout first = extended_gcd(f.a, g.a);
  const Bezout second = extended_gcd(first.g, s);
  const Integer e = second.g;
  const Integer u = second.x * first.x;
  const Integer v = second.x * first.y;
  const Integer w = second.y;
  const Integer A = f.a * g.a / (e * e);
  const Integer num = u * f.a * g.b + v * g.a * f.b + w * (f.b * g.b + D) / 2;
  if (num % e != 0) throw std::logic_error("composition produced a non-integral middle coefficient");
  const Integer B = centered_residue(num / e, A);
  return with_b(A, B, D);
}

bool is_reduced_definite(const BinaryForm& f) {
  if (f.a <= 0 || abs(f.b) > f.a || f.a > f.c) return false;
  if ((abs(f.b) == f.a || f.a == f.c) && f.b < 0) return false;
  return true;
}

BinaryForm reduce_definite(BinaryForm f) {
  const Integer D = f.discriminant();
  if (D >= 0 || f.a <= 0) throw std::invalid_argument("reduce_definite needs a positive definite form");
  for (;;) {
    f = with_b(f.a, centered_residue(f.b, f.a), D);
    if (f.a > f.c) {
      f = {f.c, -f.b, f.a};
      continue;
    }
    if (f.a == f.c && f.b < 0) f.b = -f.b;
    return f;
  }
}

BinaryForm compose_definite(const BinaryForm& f, const BinaryForm& g) {
  return reduce_definite(compose_raw(f, g));
}

BinaryForm power_definite(const BinaryForm& f, Integer n) {
  const Integer D = f.discriminant();
  BinaryForm result = reduce_definite(principal_form(D));
  BinaryForm base = reduce_definite(f);
  if (n < 0) {
    base = reduce_definite(opposite(base));
    n = -n;
  }
  while (n > 0) {
    if (n % 2 == 1) result = compose_definite(result, base);
    base = compose_definite(base, base);
    n /= 2;
  }
  return result;
}

std::vector<BinaryForm> reduced_definite_forms(const Integer& D) {
  if (D >= 0 || floor_mod(D, 4) > 1) throw std::invalid_argument("not a negative discriminant");
  std::vector<BinaryForm> out;
  // 3 a^2 <= |D|
  for (Integer a = 1; 3 * a * a <= -D; ++a) {
    for (Integer b = -a + 1; b <= a; ++b) {
      const Integer num = b * b - D;
      if (num % (4 * a) != 0) continue;
      const Integer c = num / (4 * a);
      const BinaryForm f{a, b, c};
      if (is_reduced_definite(f) && f.is_primitive()) out.push_back(f);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// exact comparisons against sqrt(D) for integer x, D > 0 not a square
bool less_than_sqrt(const Integer& x, const Integer& root) { return x <= root; }
bool greater_than_sqrt(const Integer& x, const Integer& root) { return x >= root + 1; }

}  // namespace

bool is_reduced_indefinite(const BinaryForm& f) {
  const Integer D = f.discriminant();
  const Integer root = isqrt(D);
  const Integer a2 = 2 * abs(f.a);
  // |sqrt(D) - 2|a|| < b < sqrt(D)
  return f.b > 0 && less_than_sqrt(f.b, root) && greater_than_sqrt(a2 + f.b, root) &&
         less_than_sqrt(a2 - f.b, root);
}

BinaryForm rho(const BinaryForm& f) {
  const Integer D = f.discriminant();
  const Integer root = isqrt(D);
  const Integer mc = abs(f.c);
  Integer r;
  if (mc <= root) {
    // largest r < sqrt(D) with r = -b mod 2|c|
    r = root - floor_mod(root + f.b, 2 * mc);
  } else {
    r = centered_residue(-f.b, f.c);
  }
  return with_b(f.c, r, D);
}

BinaryForm reduce_indefinite(BinaryForm f) {
  if (f.discriminant() <= 0) throw std::invalid_argument("reduce_indefinite needs D > 0");
  while (!is_reduced_indefinite(f)) f = rho(f);
  return f;
}

std::vector<BinaryForm> reduced_indefinite_forms(const Integer& D) {
  if (D <= 0 || is_square(D) || floor_mod(D, 4) > 1) throw std::invalid_argument("not a positive nonsquare discriminant");
  const Integer root = isqrt(D);
  std::vector<BinaryForm> out;
  for (Integer b = 1; b <= root; ++b) {
    if (floor_mod(b - D, 2) != 0) continue;
    const Integer m = (D - b * b) / 4;  // a c = -m
    for (Integer a = 1; a <= root; ++a) {
      if (m % a != 0) continue;
      for (int sign : {1, -1}) {
        const BinaryForm f{sign * a, b, -sign * (m / a)};
        if (is_reduced_indefinite(f) && f.is_primitive()) out.push_back(f);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t FormCycles::cycle_of(const BinaryForm& reduced) const {
  const auto it = index.find(reduced);
  if (it == index.end()) throw std::invalid_argument("form is not a reduced form of this discriminant");
  return it->second;
}

FormCycles indefinite_cycles(const Integer& D) {
  const auto forms = reduced_indefinite_forms(D);
  FormCycles out;
  for (const BinaryForm& start : forms) {
    if (out.index.count(start)) continue;
    std::vector<BinaryForm> cycle;
    BinaryForm f = start;
    do {
      out.index[f] = out.cycles.size();
      cycle.push_back(f);
      f = rho(f);
      if (!is_reduced_indefinite(f)) throw std::logic_error("rho left the set of reduced forms");
    } while (!(f == start));
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

}  // namespace torus
