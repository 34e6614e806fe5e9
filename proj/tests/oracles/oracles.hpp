#pragma once

// Test-only reference implementations. Deliberately share no code with the
// library: plain 64/128-bit integers, different reduction theory.

#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

/// Number of reduced primitive positive definite forms of discriminant D < 0,
/// counted by a direct loop over (a, b).
i64 definite_class_number(i64 D);

/// Narrow class number of discriminant D > 0 (non-square), counted as cycles of
/// Zagier-reduced forms (a > 0, c > 0, b > a + c).
i64 narrow_class_number(i64 D);

/// Smallest unit (x + y sqrt(D))/2 > 1 of discriminant D, found by scanning y.
struct PellUnit {
  i64 x = 0;
  i64 y = 0;
  int norm = 0;
};
std::optional<PellUnit> smallest_unit(i64 D, i64 y_limit);

/// Sign of the norm of the fundamental unit of Q(sqrt d), d > 1 squarefree:
/// -1 exactly when the continued fraction of sqrt d has odd period.
int unit_norm_from_period(i64 d);

/// Class number of Q(sqrt d): reduced-form count, or the narrow count halved
/// when the fundamental unit has norm +1.
i64 class_number(i64 d);

/// d or 4d.
i64 field_discriminant(i64 d);

}  // namespace oracle
