#include "torus/quadratic.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace torus {

// ---- fields and numbers ----

QuadraticField::QuadraticField(Integer d, Integer discriminant_bound)
    : d_(std::move(d)), group_(FiniteGroup::cyclic(2)) {
  if (d_ == 0 || d_ == 1) throw QuadraticError("d must differ from 0 and 1");
  if (!is_squarefree(d_)) throw QuadraticError("d = " + d_.str() + " is not squarefree");
  disc_ = floor_mod(d_, 4) == 1 ? d_ : 4 * d_;
  if (abs(disc_) > discriminant_bound)
    throw QuadraticError("discriminant " + disc_.str() + " exceeds the bound " + discriminant_bound.str());
}

QuadraticNumber QuadraticNumber::pow(long n) const {
  QuadraticNumber base = n < 0 ? inverse() : *this;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  QuadraticNumber out{1, 0, d};
  while (e > 0) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

int QuadraticNumber::sign() const {
  const int sa = a.sign(), sb = b.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  if (d < 0) throw std::logic_error("sign of a non-real number");
  // opposite signs: compare a^2 with d b^2
  return a * a > Rational(d) * b * b ? sa : sb;
}

std::string QuadraticNumber::to_string() const {
  if (b == 0) return torus::to_string(a);
  std::string out = a == 0 ? "" : torus::to_string(a) + (b > 0 ? "+" : "");
  if (b == -1)
    out += "-";
  else if (b != 1)
    out += torus::to_string(b) + "*";
  return out + "sqrt(" + d.str() + ")";
}

bool is_algebraic_integer(const QuadraticNumber& x) {
  const Rational trace = 2 * x.a;
  return is_integral(trace) && is_integral(x.norm());
}

namespace {

// coefficient of sqrt(d) in sqrt(D)/2
Rational half_root(const QuadraticField& F) { return F.discriminant() == F.d() ? Rational(1, 2) : Rational(1); }

// (s^2 - D)/4, the norm of w = (s + sqrt(D))/2
Integer omega_norm(const QuadraticField& F) {
  const Integer s = F.s();
  return (s * s - F.discriminant()) / 4;
}

QuadraticNumber one(const QuadraticField& F) { return {1, 0, F.d()}; }

// ---- ideals ----

// content * [a, w - r] with a > 0, 0 <= r < a; w = (s + sqrt(D))/2.
struct Ideal {
  Integer content = 1;
  Integer a = 1;
  Integer r = 0;
};

Ideal unit_ideal() { return {}; }

// Lattice spanned by vectors (x, y) = x + y w; returns the ideal in HNF.
Ideal ideal_from_generators(const std::vector<std::pair<Integer, Integer>>& gens) {
  Integer X = 0, Y = 0, A = 0;
  for (const auto& [x, y] : gens) {
    if (y == 0) {
      A = gcd(A, x);
      continue;
    }
    if (Y == 0) {
      A = gcd(A, X);
      X = x;
      Y = y;
      continue;
    }
    const Bezout bz = extended_gcd(Y, y);
    const Integer residual = (y / bz.g) * X - (Y / bz.g) * x;
    X = bz.x * X + bz.y * x;
    Y = bz.g;
    A = gcd(A, residual);
  }
  if (Y < 0) {
    X = -X;
    Y = -Y;
  }
  A = abs(A);
  if (A == 0 || Y == 0) throw std::logic_error("ideal lattice is not of full rank");
  if (A % Y != 0 || X % Y != 0) throw std::logic_error("lattice is not an ideal");
  Ideal out;
  out.content = Y;
  out.a = A / Y;
  out.r = floor_mod(-(X / Y), out.a);
  return out;
}

Ideal multiply(const QuadraticField& F, const Ideal& I, const Ideal& J) {
  const Integer n0 = omega_norm(F);
  const Integer s = F.s();
  // (w - r1)(w - r2) = (s - r1 - r2) w + r1 r2 - n0
  Ideal out = ideal_from_generators({{I.a * J.a, 0},
                                     {-I.a * J.r, I.a},
                                     {-J.a * I.r, J.a},
                                     {I.r * J.r - n0, s - I.r - J.r}});
  out.content *= I.content * J.content;
  return out;
}

BinaryForm form_of(const QuadraticField& F, const Ideal& I) {
  return with_b(I.a, 2 * I.r - F.s(), F.discriminant());
}

Ideal ideal_of(const QuadraticField& F, const BinaryForm& f) {
  const Integer a = abs(f.a);
  return {1, a, floor_mod((f.b + F.s()) / 2, a)};
}

// Forms (a, b, c) stand for the ideal [|a|, (-b + sqrt(D))/2]. Moving to
// (c, r, .) with r = -b mod 2c multiplies that ideal by (-b - sqrt(D))/(2a).
struct Tracked {
  BinaryForm form;
  QuadraticNumber multiplier;
  bool track = true;
};

void step(const QuadraticField& F, Tracked& t, const Integer& r) {
  if (!t.track) {
    t.form = with_b(t.form.c, r, F.discriminant());
    return;
  }
  const QuadraticNumber beta_bar{Rational(-t.form.b, 2), -half_root(F), F.d()};
  t.multiplier = t.multiplier * beta_bar.scaled(Rational(1) / Rational(t.form.a));
  t.form = with_b(t.form.c, r, F.discriminant());
}

void reduce_tracked(const QuadraticField& F, Tracked& t) {
  if (F.is_real()) {
    while (!is_reduced_indefinite(t.form)) step(F, t, rho(t.form).b);
    return;
  }
  for (;;) {
    t.form = with_b(t.form.a, centered_residue(t.form.b, t.form.a), F.discriminant());
    if (t.form.a > t.form.c || (t.form.a == t.form.c && t.form.b < 0)) {
      step(F, t, -t.form.b);
      continue;
    }
    return;
  }
}

// Class bookkeeping shared by class_number, unit_module and friends.
class ClassContext {
 public:
  explicit ClassContext(const QuadraticField& F) : F_(F) {
    const Integer& D = F.discriminant();
    if (F.is_real()) {
      cycles_ = indefinite_cycles(D);
      const std::size_t n = cycles_.cycles.size();
      for (std::size_t i = 0; i < n; ++i) {
        const BinaryForm& f = cycles_.cycles[i].front();
        const std::size_t partner = cycles_.cycle_of(BinaryForm{-f.a, f.b, -f.c});
        wide_id_.push_back(static_cast<int>(std::min(i, partner)));
      }
      for (std::size_t i = 0; i < n; ++i)
        if (wide_id_[i] == static_cast<int>(i)) reps_.push_back(ideal_of(F, cycles_.cycles[i].front()));
      narrow_h_ = static_cast<long>(n);
    } else {
      const auto forms = reduced_definite_forms(D);
      for (std::size_t i = 0; i < forms.size(); ++i) {
        index_[forms[i]] = static_cast<int>(i);
        reps_.push_back(ideal_of(F, forms[i]));
      }
      narrow_h_ = static_cast<long>(forms.size());
    }
    principal_ = class_of(unit_ideal());
  }

  const QuadraticField& field() const { return F_; }
  long class_count() const { return static_cast<long>(reps_.size()); }
  long narrow_count() const { return narrow_h_; }
  const std::vector<Ideal>& representatives() const { return reps_; }
  int principal() const { return principal_; }

  BinaryForm reduced_form(const Ideal& I) const {
    Tracked t{form_of(F_, I), one(F_), false};
    reduce_tracked(F_, t);
    return t.form;
  }

  int class_of(const Ideal& I) const {
    const BinaryForm f = reduced_form(I);
    if (F_.is_real()) return wide_id_[cycles_.cycle_of(f)];
    return index_.at(f);
  }

  // primitive reduced representative of the class of I J
  Ideal product_class(const Ideal& I, const Ideal& J) const {
    Ideal p = multiply(F_, I, J);
    p.content = 1;
    return ideal_of(F_, reduced_form(p));
  }

  Ideal power_class(Ideal I, Integer n) const {
    Ideal out = unit_ideal();
    I.content = 1;
    while (n > 0) {
      if (n % 2 == 1) out = product_class(out, I);
      I = product_class(I, I);
      n /= 2;
    }
    return out;
  }

  Integer order_of(const Ideal& I) const {
    const Integer h = class_count();
    for (Integer k = 1; k <= h; ++k) {
      if (h % k != 0) continue;
      if (class_of(power_class(I, k)) == principal_) return k;
    }
    throw std::logic_error("ideal class order does not divide the class number");
  }

  // generator of an integral ideal, when principal
  std::optional<QuadraticNumber> generator(const Ideal& I) const {
    Tracked t{form_of(F_, I), one(F_)};
    reduce_tracked(F_, t);
    auto result = [&]() {
      QuadraticNumber g = t.multiplier.inverse().scaled(Rational(I.content));
      const Rational expected = Rational(I.content * I.content * I.a);
      if (!is_algebraic_integer(g) || abs(g.norm()) != expected)
        throw std::logic_error("tracked reduction produced a wrong generator");
      return g;
    };
    if (!F_.is_real()) {
      if (t.form.a == 1) return result();
      return std::nullopt;
    }
    const BinaryForm start = t.form;
    do {
      if (abs(t.form.a) == 1) return result();
      step(F_, t, rho(t.form).b);
    } while (!(t.form == start));
    return std::nullopt;
  }

 private:
  QuadraticField F_;
  FormCycles cycles_;
  std::vector<int> wide_id_;
  std::map<BinaryForm, int> index_;
  std::vector<Ideal> reps_;
  long narrow_h_ = 0;
  int principal_ = 0;
};

Integer root_mod(const QuadraticField& F, const Integer& p) {
  const Integer n0 = omega_norm(F);
  for (Integer r = 0; r < p; ++r)
    if (floor_mod(r * r - F.s() * r + n0, p) == 0) return r;
  throw QuadraticError("prime " + p.str() + " is inert: no ideal of norm " + p.str());
}

struct PrimeIdeal {
  Integer p;
  Ideal ideal;
  std::size_t conjugate = 0;
  int multiplicity = 1;  // in the divisor of (p)
};

std::vector<PrimeIdeal> primes_above(const QuadraticField& F, const PrimeSet& S) {
  std::vector<PrimeIdeal> out;
  for (const Integer& p : S) {
    const std::size_t k = out.size();
    switch (kronecker(F.discriminant(), p)) {
      case -1:
        out.push_back({p, {p, 1, 0}, k, 1});
        break;
      case 0:
        out.push_back({p, {1, p, root_mod(F, p)}, k, 2});
        break;
      default: {
        const Integer r = root_mod(F, p);
        out.push_back({p, {1, p, r}, k + 1, 1});
        out.push_back({p, {1, p, floor_mod(F.s() - r, p)}, k, 1});
      }
    }
  }
  return out;
}

QuadraticNumber root_of_unity(const QuadraticField& F) {
  if (F.d() == -1) return {0, 1, F.d()};
  if (F.d() == -3) return {Rational(1, 2), Rational(1, 2), F.d()};
  return {-1, 0, F.d()};
}

int unit_torsion_order(const QuadraticField& F) {
  if (F.d() == -1) return 4;
  if (F.d() == -3) return 6;
  return 2;
}

bool exceeds_one_in_absolute_value(const QuadraticNumber& u) {
  const QuadraticNumber v = u.scaled(Rational(u.sign()));
  return QuadraticNumber{v.a - 1, v.b, v.d}.sign() > 0;
}

}  // namespace

// ---- class groups ----

ClassGroupResult class_number(const QuadraticField& F) {
  const ClassContext ctx(F);
  const Integer narrow = ctx.narrow_count();
  Integer h = narrow;
  if (F.is_real() && fundamental_unit(F).norm == 1) h = narrow / 2;
  if (h != ctx.class_count()) throw std::logic_error("narrow/wide class count mismatch for " + F.name());
  std::vector<Integer> orders;
  for (const Ideal& I : ctx.representatives()) orders.push_back(ctx.order_of(I));
  return {h, structure_from_element_orders(orders), narrow};
}

FundamentalUnit fundamental_unit(const QuadraticField& F) {
  if (!F.is_real()) throw QuadraticError("fundamental unit requires a real quadratic field");
  const Integer& d = F.d();
  const bool one_mod_four = floor_mod(d, 4) == 1;
  const Integer root = isqrt(d);
  // theta = (P + sqrt(d))/Q: sqrt(d), or (-1 + sqrt(d))/2 when d = 1 mod 4
  Integer P = one_mod_four ? -1 : 0;
  Integer Q = one_mod_four ? 2 : 1;
  Integer A_prev = 0, A = 1, B_prev = 1, B = 0;  // convergents -2 and -1
  for (;;) {
    const Integer q = Q > 0 ? floor_div(P + root, Q) : -(floor_div(P + root, -Q) + 1);
    const Integer A_next = q * A + A_prev;
    const Integer B_next = q * B + B_prev;
    A_prev = A;
    A = A_next;
    B_prev = B;
    B = B_next;
    P = q * Q - P;
    Q = (d - P * P) / Q;
    const Integer norm = one_mod_four ? A * A + A * B + B * B * ((1 - d) / 4) : A * A - d * B * B;
    if (norm == 1 || norm == -1) {
      if (one_mod_four) return {2 * A + B, B, norm == 1 ? 1 : -1};
      return {2 * A, 2 * B, norm == 1 ? 1 : -1};
    }
  }
}

int kronecker(const Integer& D, const Integer& p) {
  if (p == 2) {
    if (D % 2 == 0) return 0;
    const Integer r = floor_mod(D, 8);
    return (r == 1 || r == 7) ? 1 : -1;
  }
  const Integer a = floor_mod(D, p);
  if (a == 0) return 0;
  Integer base = a, e = (p - 1) / 2, result = 1;
  while (e > 0) {
    if (e % 2 == 1) result = result * base % p;
    base = base * base % p;
    e /= 2;
  }
  return result == 1 ? 1 : -1;
}

PlaceDatum splitting(const QuadraticField& F, const Place& v) {
  const FiniteGroup& G = F.galois_group();
  if (v.is_infinite()) {
    if (F.is_real()) return {v, 1, 1, 2, trivial_subgroup(G), trivial_subgroup(G)};
    return {v, 2, 1, 1, whole_group(G), whole_group(G)};
  }
  if (!is_prime(v.prime)) throw QuadraticError(v.prime.str() + " is not a prime");
  switch (kronecker(F.discriminant(), v.prime)) {
    case 0:
      return {v, 2, 1, 1, whole_group(G), whole_group(G)};
    case 1:
      return {v, 1, 1, 2, trivial_subgroup(G), trivial_subgroup(G)};
    default:
      return {v, 1, 2, 1, whole_group(G), trivial_subgroup(G)};
  }
}

std::vector<PlaceDatum> relevant_places(const QuadraticField& F, const PrimeSet& S) {
  std::vector<Integer> primes = prime_divisors(F.discriminant());
  primes.insert(primes.end(), S.begin(), S.end());
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<PlaceDatum> out{splitting(F, Place::infinite())};
  for (const Integer& p : primes) out.push_back(splitting(F, Place::finite(p)));
  return out;
}

// ---- S-units ----

UnitModuleDescription unit_module(const QuadraticField& F, const PrimeSet& S) {
  const ClassContext ctx(F);
  const std::vector<PrimeIdeal> P = primes_above(F, S);
  const Index r = static_cast<Index>(P.size());
  const int w = unit_torsion_order(F);
  const QuadraticNumber zeta = root_of_unity(F);

  // Relations among the S-prime classes: Schreier generators of the kernel of
  // Z^r -> Cl along a breadth-first enumeration of the image.
  std::map<int, IntVector> word;
  std::vector<std::pair<int, Ideal>> queue{{ctx.principal(), unit_ideal()}};
  word[ctx.principal()] = IntVector::Zero(r);
  std::vector<IntVector> relations;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [x, rep] = queue[head];
    for (Index i = 0; i < r; ++i) {
      const Ideal next = ctx.product_class(rep, P[static_cast<std::size_t>(i)].ideal);
      const int y = ctx.class_of(next);
      IntVector candidate = word[x];
      candidate(i) += 1;
      auto it = word.find(y);
      if (it == word.end()) {
        word[y] = candidate;
        queue.push_back({y, next});
      } else {
        relations.push_back(candidate - it->second);
      }
    }
  }
  IntMatrix rel(r, static_cast<Index>(relations.size()));
  for (std::size_t j = 0; j < relations.size(); ++j) rel.col(static_cast<Index>(j)) = relations[j];
  const ColumnEchelon<Integer> lattice = column_echelon(rel, false);
  if (lattice.rank() != r) throw std::logic_error("S-unit divisor lattice is not of full rank");
  const IntMatrix& B = lattice.E;

  // generators alpha_j with divisor B e_j
  std::vector<QuadraticNumber> alpha;
  for (Index j = 0; j < r; ++j) {
    IntVector shifted = B.col(j);
    Rational scale = 1;
    for (std::size_t i = 0; i < P.size();) {
      std::size_t end = i + 1;
      while (end < P.size() && P[end].p == P[i].p) ++end;
      Integer k = 0;
      for (std::size_t t = i; t < end; ++t) {
        const Integer need = -shifted(static_cast<Index>(t));
        if (need > 0) k = std::max(k, (need + P[t].multiplicity - 1) / P[t].multiplicity);
      }
      for (std::size_t t = i; t < end; ++t) shifted(static_cast<Index>(t)) += k * P[t].multiplicity;
      scale /= Rational(pow(P[i].p, static_cast<unsigned>(k)));
      i = end;
    }
    Ideal I = unit_ideal();
    for (Index i = 0; i < r; ++i)
      for (Integer e = 0; e < shifted(i); ++e) I = multiply(F, I, P[static_cast<std::size_t>(i)].ideal);
    const auto g = ctx.generator(I);
    if (!g) throw QuadraticError("non-principal S-prime power generator not found within bound");
    alpha.push_back(g->scaled(scale));
  }

  std::optional<FundamentalUnit> eps;
  if (F.is_real()) eps = fundamental_unit(F);
  const Index offset = eps ? 1 : 0;
  const Index rank = offset + r;
  IntMatrix sigma = IntMatrix::Zero(rank + 1, rank + 1);
  sigma(rank, rank) = w - 1;  // zeta -> zeta^{-1}
  if (eps) {
    sigma(0, 0) = -1;  // sigma(eps) = N(eps) eps^{-1}
    if (eps->norm == -1) sigma(rank, 0) = w / 2;
  }
  for (Index j = 0; j < r; ++j) {
    IntVector image = IntVector::Zero(r);
    for (Index i = 0; i < r; ++i) image(static_cast<Index>(P[static_cast<std::size_t>(i)].conjugate)) = B(i, j);
    const auto c = solve_echelon(lattice, image);
    if (!c) throw std::logic_error("conjugation does not preserve the S-unit divisor lattice");
    QuadraticNumber u = alpha[static_cast<std::size_t>(j)].conjugate();
    for (Index i = 0; i < r; ++i) {
      u = u * alpha[static_cast<std::size_t>(i)].pow(-static_cast<long>((*c)(i)));
      sigma(offset + i, offset + j) = (*c)(i);
    }
    if (eps) {
      const QuadraticNumber e = eps->value(F.d());
      const QuadraticNumber e_inv = e.inverse();
      long s = 0;
      while (exceeds_one_in_absolute_value(u)) {
        u = u * e_inv;
        ++s;
      }
      while (exceeds_one_in_absolute_value(u.inverse())) {
        u = u * e;
        --s;
      }
      sigma(0, offset + j) = s;
    }
    int t = 0;
    while (t < w && !(zeta.pow(t) == u)) ++t;
    if (t == w) throw std::logic_error("unit part of a conjugated S-unit is not a root of unity");
    sigma(rank, offset + j) = t;
  }

  std::vector<std::string> labels;
  std::vector<QuadraticNumber> gens;
  if (eps) {
    labels.push_back("eps");
    gens.push_back(eps->value(F.d()));
  }
  for (Index j = 0; j < r; ++j) {
    labels.push_back("alpha" + std::to_string(j + 1));
    gens.push_back(alpha[static_cast<std::size_t>(j)]);
  }
  labels.push_back("zeta" + std::to_string(w));
  gens.push_back(zeta);

  GModule module(F.galois_group(), rank, {Integer(w)}, {identity_matrix(rank + 1), sigma});
  std::optional<int> norm;
  if (eps) norm = eps->norm;
  return {std::move(module), std::move(labels), norm, std::move(gens)};
}

Integer s_class_number(const QuadraticField& F, const PrimeSet& S) {
  const ClassContext ctx(F);
  const std::vector<PrimeIdeal> P = primes_above(F, S);
  std::vector<Ideal> seen{unit_ideal()};
  std::vector<int> ids{ctx.principal()};
  for (std::size_t head = 0; head < seen.size(); ++head) {
    for (const PrimeIdeal& q : P) {
      const Ideal next = ctx.product_class(seen[head], q.ideal);
      const int y = ctx.class_of(next);
      if (std::find(ids.begin(), ids.end(), y) != ids.end()) continue;
      ids.push_back(y);
      seen.push_back(next);
    }
  }
  return Integer(ctx.class_count()) / Integer(ids.size());
}

Integer ideal_class_order(const QuadraticField& F, const Integer& p) {
  if (!is_prime(p)) throw QuadraticError(p.str() + " is not a prime");
  if (kronecker(F.discriminant(), p) == -1)
    throw QuadraticError("prime " + p.str() + " is inert: no ideal of norm " + p.str());
  const ClassContext ctx(F);
  return ctx.order_of({1, p, root_mod(F, p)});
}

std::optional<QuadraticNumber> prime_generator(const QuadraticField& F, const Integer& p) {
  if (kronecker(F.discriminant(), p) == -1) return QuadraticNumber{Rational(p), 0, F.d()};
  const ClassContext ctx(F);
  return ctx.generator({1, p, root_mod(F, p)});
}

}  // namespace torus
