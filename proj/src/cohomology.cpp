#include "torus/cohomology.hpp"

namespace torus {

namespace {

void check_degree(int degree) {
  if (degree < -1 || degree > 2)
    throw CohomologyError("cohomology degree " + std::to_string(degree) + " is outside the supported band -1..2");
}

void check_group(const FiniteGroup& G, const GModule& M) {
  if (!M.group().same_as(G)) throw CohomologyError("module is not a module over the given group");
}

IntMatrix norm_matrix(const GModule& M) {
  IntMatrix N = IntMatrix::Zero(M.dimension(), M.dimension());
  for (int g = 0; g < M.group().order(); ++g) N += M.action(g);
  return N;
}

// rows: one block (A_g - 1) per element g
IntMatrix augmentation_stack(const GModule& M) {
  const Index n = M.dimension();
  const int order = M.group().order();
  IntMatrix out(order * n, n);
  const IntMatrix id = identity_matrix(n);
  for (int g = 0; g < order; ++g) out.middleRows(g * n, n) = M.action(g) - id;
  return out;
}

IntMatrix augmentation_columns(const GModule& M) {
  const Index n = M.dimension();
  const int order = M.group().order();
  IntMatrix out(n, order * n);
  const IntMatrix id = identity_matrix(n);
  for (int g = 0; g < order; ++g) out.middleCols(g * n, n) = M.action(g) - id;
  return out;
}

CohomologyResult finish(int degree, const IntMatrix& numerator, const IntMatrix& denominator) {
  const Subquotient sq(numerator, denominator);
  return {degree, sq.structure(), sq.generators()};
}

Subquotient bar_subquotient(const FiniteGroup& G, const GModule& M, int degree) {
  const Index order = G.order();
  const Index lower = degree == 1 ? order : order * order;
  const Index upper = lower * order;
  const IntMatrix cocycles =
      lattice_preimage(bar_differential(G, M, degree), repeated_relations(M, upper));
  const IntMatrix rel = repeated_relations(M, lower);
  return Subquotient(hcat(cocycles, rel), hcat(bar_differential(G, M, degree - 1), rel));
}

bool congruent_columns(const IntVector& a, const IntVector& b, const std::vector<Integer>& mods) {
  for (Index i = 0; i < a.size(); ++i) {
    if ((a(i) - b(i)) % mods[static_cast<std::size_t>(i)] != 0) return false;
  }
  return true;
}

bool all_zero(const IntVector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

}  // namespace

IntMatrix repeated_relations(const GModule& M, Index copies) {
  const IntMatrix rel = M.relations();
  IntMatrix out = IntMatrix::Zero(copies * rel.rows(), copies * rel.cols());
  for (Index c = 0; c < copies; ++c) out.block(c * rel.rows(), c * rel.cols(), rel.rows(), rel.cols()) = rel;
  return out;
}

IntMatrix bar_differential(const FiniteGroup& G, const GModule& M, int k) {
  const Index n = M.dimension();
  const int N = G.order();
  const IntMatrix id = identity_matrix(n);
  switch (k) {
    case 0:
      return augmentation_stack(M);
    case 1: {
      // (df)(g,h) = g f(h) - f(gh) + f(g)
      IntMatrix d = IntMatrix::Zero(Index(N) * N * n, Index(N) * n);
      for (int g = 0; g < N; ++g)
        for (int h = 0; h < N; ++h) {
          const Index row = (Index(g) * N + h) * n;
          d.block(row, h * n, n, n) += M.action(g);
          d.block(row, G.mul(g, h) * n, n, n) -= id;
          d.block(row, g * n, n, n) += id;
        }
      return d;
    }
    case 2: {
      // (df)(g,h,k) = g f(h,k) - f(gh,k) + f(g,hk) - f(g,h)
      IntMatrix d = IntMatrix::Zero(Index(N) * N * N * n, Index(N) * N * n);
      for (int g = 0; g < N; ++g)
        for (int h = 0; h < N; ++h)
          for (int l = 0; l < N; ++l) {
            const Index row = ((Index(g) * N + h) * N + l) * n;
            auto col = [&](int a, int b) { return (Index(a) * N + b) * n; };
            d.block(row, col(h, l), n, n) += M.action(g);
            d.block(row, col(G.mul(g, h), l), n, n) -= id;
            d.block(row, col(g, G.mul(h, l)), n, n) += id;
            d.block(row, col(g, h), n, n) -= id;
          }
      return d;
    }
    default:
      throw CohomologyError("bar differential only implemented for k in {0,1,2}");
  }
}

CohomologyResult tate_cohomology(const FiniteGroup& G, const GModule& M, int degree) {
  check_degree(degree);
  check_group(G, M);
  const IntMatrix rel = M.relations();
  switch (degree) {
    case 0: {
      const IntMatrix fixed = lattice_preimage(augmentation_stack(M), repeated_relations(M, G.order()));
      return finish(0, hcat(fixed, rel), hcat(norm_matrix(M), rel));
    }
    case -1: {
      const IntMatrix ker_norm = lattice_preimage(norm_matrix(M), rel);
      return finish(-1, hcat(ker_norm, rel), hcat(augmentation_columns(M), rel));
    }
    default: {
      const Subquotient sq = bar_subquotient(G, M, degree);
      return {degree, sq.structure(), sq.generators()};
    }
  }
}

CohomologyResult tate_cohomology_cyclic(const FiniteGroup& G, const GModule& M, int degree) {
  check_degree(degree);
  check_group(G, M);
  const int s = G.cyclic_generator();
  const IntMatrix rel = M.relations();
  const IntMatrix shift = M.action(s) - identity_matrix(M.dimension());
  const IntMatrix norm = norm_matrix(M);
  if (degree % 2 == 0) {
    return finish(degree, hcat(lattice_preimage(shift, rel), rel), hcat(norm, rel));
  }
  return finish(degree, hcat(lattice_preimage(norm, rel), rel), hcat(shift, rel));
}

Rational herbrand_quotient(const FiniteGroup& G, const GModule& M) {
  if (!G.is_cyclic()) throw CohomologyError("Herbrand quotient requires a cyclic group");
  const Integer h0 = tate_cohomology(G, M, 0).group.order();
  const Integer h1 = tate_cohomology(G, M, 1).group.order();
  return Rational(h0, h1);
}

FiniteModuleWithAction h1_with_residual_action(const FiniteGroup& D, const Subgroup& I, const GModule& M) {
  check_group(D, M);
  if (!I.parent().same_as(D)) throw CohomologyError("inertia subgroup belongs to a different group");
  if (!I.is_normal()) throw CohomologyError("subgroup is not normal");

  const FiniteGroup IG = I.as_group();
  const GModule MI = restrict_module(M, I);
  const Index n = M.dimension();
  const int ni = IG.order();
  const Subquotient sq = bar_subquotient(IG, MI, 1);
  const auto& mods = sq.structure().invariant_factors();
  const Index k = static_cast<Index>(mods.size());

  const QuotientGroup Q = quotient_group(D, I);

  // cochain c in M^{|I|} -> (d.c)(x) = d c(d^{-1} x d)
  auto act = [&](int d, const IntVector& c) {
    IntVector out(c.size());
    const int dinv = D.inv(d);
    for (int x = 0; x < ni; ++x) {
      const int y = I.local_index(D.conjugate(I.elements()[static_cast<std::size_t>(x)], dinv));
      out.segment(x * n, n) = M.action(d) * c.segment(y * n, n);
    }
    return out;
  };

  const IntMatrix coboundaries = hcat(bar_differential(IG, MI, 0), repeated_relations(MI, ni));
  std::vector<IntMatrix> action(static_cast<std::size_t>(Q.group.order()));
  std::vector<bool> assigned(action.size(), false);
  for (int d = 0; d < D.order(); ++d) {
    IntMatrix a(k, k);
    for (Index j = 0; j < k; ++j) {
      const IntVector image = act(d, IntVector(sq.generators().col(j)));
      if (!sq.contains(image)) throw CohomologyError("residual action does not preserve cocycles");
      a.col(j) = sq.coordinates(image);
    }
    for (Index j = 0; j < coboundaries.cols(); ++j) {
      const IntVector image = act(d, IntVector(coboundaries.col(j)));
      if (!sq.contains(image) || !all_zero(sq.coordinates(image)))
        throw CohomologyError("residual action does not preserve coboundaries");
    }
    const auto q = static_cast<std::size_t>(Q.coset_of[static_cast<std::size_t>(d)]);
    if (!assigned[q]) {
      action[q] = a;
      assigned[q] = true;
      continue;
    }
    for (Index j = 0; j < k; ++j)
      if (!congruent_columns(IntVector(action[q].col(j)), IntVector(a.col(j)), mods))
        throw CohomologyError("residual action depends on the coset representative");
  }
  // homomorphism check on residues
  for (int a = 0; a < Q.group.order(); ++a)
    for (int b = 0; b < Q.group.order(); ++b) {
      const IntMatrix prod = action[static_cast<std::size_t>(a)] * action[static_cast<std::size_t>(b)];
      const IntMatrix& ab = action[static_cast<std::size_t>(Q.group.mul(a, b))];
      for (Index j = 0; j < k; ++j)
        if (!congruent_columns(IntVector(prod.col(j)), IntVector(ab.col(j)), mods))
          throw CohomologyError("residual action is not a homomorphism");
    }
  return {sq.structure(), Q.group, std::move(action)};
}

FiniteAbelianGroup fixed_points(const FiniteModuleWithAction& F) {
  const auto& mods = F.structure.invariant_factors();
  const Index k = static_cast<Index>(mods.size());
  if (k == 0) return {};
  IntMatrix rel = IntMatrix::Zero(k, k);
  for (Index i = 0; i < k; ++i) rel(i, i) = mods[static_cast<std::size_t>(i)];
  const Index copies = static_cast<Index>(F.action.size());
  IntMatrix stack(copies * k, k);
  IntMatrix target = IntMatrix::Zero(copies * k, copies * k);
  for (Index c = 0; c < copies; ++c) {
    stack.middleRows(c * k, k) = F.action[static_cast<std::size_t>(c)] - identity_matrix(k);
    target.block(c * k, c * k, k, k) = rel;
  }
  const IntMatrix fixed = lattice_preimage(stack, target);
  return Subquotient(hcat(fixed, rel), rel).structure();
}

}  // namespace torus
