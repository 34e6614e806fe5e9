#pragma once

#include "torus/group.hpp"

#include <string>
#include <vector>

namespace torus {

/// A place of Q: the infinite place (prime == 0) or a rational prime.
struct Place {
  Integer prime = 0;

  static Place infinite() { return {}; }
  static Place finite(Integer p) { return {std::move(p)}; }
  bool is_infinite() const { return prime == 0; }
  std::string to_string() const { return is_infinite() ? "inf" : prime.str(); }
  friend bool operator==(const Place&, const Place&) = default;
};

/// Splitting data of a place v of the base field in a Galois extension with
/// group G, for a chosen place w above v.
struct PlaceDatum {
  Place place;
  int e = 1;  // ramification index
  int f = 1;  // residue degree
  int g = 1;  // number of places above v
  Subgroup decomposition;
  Subgroup inertia;

  int local_degree() const { return e * f; }
  bool ramified() const { return e > 1; }
};

/// Finite primes of S (the infinite place is always in S). Sorted, distinct.
using PrimeSet = std::vector<Integer>;

/// Sorts and validates a user-supplied list of finite S-primes.
PrimeSet normalize_prime_set(std::vector<Integer> primes);

std::string to_string(const PrimeSet& S);

}  // namespace torus
