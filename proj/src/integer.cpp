#include "torus/integer.hpp"

namespace torus {

unsigned valuation(Integer n, const Integer& p) {
  unsigned v = 0;
  if (n == 0) return 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Integer k = 3; k * k <= n; k += 2) {
    if (n % k == 0) return false;
  }
  return true;
}

std::vector<Integer> prime_divisors(Integer n) {
  std::vector<Integer> out;
  n = abs(n);
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_squarefree(const Integer& n) {
  Integer m = abs(n);
  if (m == 0) return false;
  for (Integer p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
    if (m % p == 0) m /= p;
  }
  return true;
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

IntMatrix identity_matrix(Index n) { return IntMatrix::Identity(n, n); }

}  // namespace torus
