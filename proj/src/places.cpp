#include "torus/places.hpp"

#include <algorithm>
#include <stdexcept>

namespace torus {

PrimeSet normalize_prime_set(std::vector<Integer> primes) {
  for (const Integer& p : primes) {
    if (!is_prime(p)) throw std::invalid_argument("S entry " + p.str() + " is not a prime");
  }
  std::sort(primes.begin(), primes.end());
  if (std::adjacent_find(primes.begin(), primes.end()) != primes.end())
    throw std::invalid_argument("S entries must be distinct primes");
  return primes;
}

std::string to_string(const PrimeSet& S) {
  std::string out = "{inf";
  for (const Integer& p : S) out += "," + p.str();
  return out + "}";
}

}  // namespace torus
