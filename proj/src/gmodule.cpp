#include "torus/gmodule.hpp"

#include <deque>

namespace torus {

namespace {

std::string where(int g, int h) {
  return " (elements " + std::to_string(g) + ", " + std::to_string(h) + ")";
}

}  // namespace

GModule::GModule(FiniteGroup group, Index rank, std::vector<Integer> torsion,
                 std::vector<IntMatrix> action)
    : group_(std::move(group)), rank_(rank), torsion_(std::move(torsion)), action_(std::move(action)) {
  if (rank_ < 0) throw ModuleError("negative rank");
  for (const Integer& t : torsion_) {
    if (t < 2) throw ModuleError("torsion orders must be at least 2");
  }
  if (static_cast<int>(action_.size()) != group_.order())
    throw ModuleError("need one action matrix per group element");
  const Index n = dimension();
  for (IntMatrix& a : action_) {
    if (a.rows() != n || a.cols() != n) throw ModuleError("action matrix has wrong shape");
    for (Index i = rank_; i < n; ++i)
      for (Index j = 0; j < n; ++j) a(i, j) = floor_mod(a(i, j), torsion_[static_cast<std::size_t>(i - rank_)]);
    for (Index i = 0; i < rank_; ++i)
      for (Index j = rank_; j < n; ++j)
        if (a(i, j) != 0) throw ModuleError("action maps torsion into the free part");
    for (Index j = rank_; j < n; ++j) {
      const Integer& tj = torsion_[static_cast<std::size_t>(j - rank_)];
      for (Index i = rank_; i < n; ++i) {
        const Integer& ti = torsion_[static_cast<std::size_t>(i - rank_)];
        if ((tj * a(i, j)) % ti != 0) throw ModuleError("action is not well defined on torsion");
      }
    }
  }
  const IntMatrix id = identity_matrix(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Integer diff = action_[0](i, j) - id(i, j);
      if (i < rank_ ? diff != 0 : diff % torsion_[static_cast<std::size_t>(i - rank_)] != 0)
        throw ModuleError("identity element does not act trivially");
    }
  for (int g = 0; g < group_.order(); ++g) {
    for (int h = 0; h < group_.order(); ++h) {
      const IntMatrix prod = action_[static_cast<std::size_t>(g)] * action_[static_cast<std::size_t>(h)];
      const IntMatrix& gh = action_[static_cast<std::size_t>(group_.mul(g, h))];
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
          const Integer diff = prod(i, j) - gh(i, j);
          if (i < rank_ ? diff != 0 : diff % torsion_[static_cast<std::size_t>(i - rank_)] != 0)
            throw ModuleError("action is not a homomorphism" + where(g, h));
        }
    }
  }
}

GModule GModule::from_generators(FiniteGroup group, Index rank, std::vector<Integer> torsion,
                                 const std::vector<int>& generators,
                                 const std::vector<IntMatrix>& matrices) {
  if (generators.size() != matrices.size())
    throw ModuleError("generator list and matrix list differ in length");
  const Index n = rank + static_cast<Index>(torsion.size());
  for (int g : generators) {
    if (g < 0 || g >= group.order()) throw ModuleError("generator index out of range");
  }
  std::vector<IntMatrix> action(static_cast<std::size_t>(group.order()));
  std::vector<bool> done(static_cast<std::size_t>(group.order()), false);
  action[0] = identity_matrix(n);
  done[0] = true;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < generators.size(); ++k) {
      const int y = group.mul(x, generators[k]);
      if (done[static_cast<std::size_t>(y)]) continue;
      if (matrices[k].rows() != n || matrices[k].cols() != n)
        throw ModuleError("generator matrix has wrong shape");
      action[static_cast<std::size_t>(y)] = action[static_cast<std::size_t>(x)] * matrices[k];
      done[static_cast<std::size_t>(y)] = true;
      queue.push_back(y);
    }
  }
  for (bool d : done) {
    if (!d) throw ModuleError("listed generators do not generate the group");
  }
  // Generator matrices themselves must match (a generator could be reached
  // through a different word first).
  GModule m(std::move(group), rank, std::move(torsion), std::move(action));
  for (std::size_t k = 0; k < generators.size(); ++k) {
    for (Index j = 0; j < n; ++j) {
      if (!m.equal_elements(IntVector(matrices[k].col(j)), IntVector(m.action(generators[k]).col(j))))
        throw ModuleError("generator matrices are inconsistent with the group law");
    }
  }
  return m;
}

IntMatrix GModule::relations() const {
  return AbelianPresentation::mixed(rank_, torsion_).relations;
}

bool GModule::equal_elements(const IntVector& x, const IntVector& y) const {
  for (Index i = 0; i < dimension(); ++i) {
    const Integer diff = x(i) - y(i);
    if (i < rank_ ? diff != 0 : diff % torsion_[static_cast<std::size_t>(i - rank_)] != 0) return false;
  }
  return true;
}

IntVector GModule::normalize(IntVector x) const {
  for (Index i = rank_; i < dimension(); ++i) x(i) = floor_mod(x(i), torsion_[static_cast<std::size_t>(i - rank_)]);
  return x;
}

GModule standard_module(const FiniteGroup& G, StandardKind kind) {
  const int n = G.order();
  std::vector<IntMatrix> action;
  action.reserve(static_cast<std::size_t>(n));
  switch (kind) {
    case StandardKind::trivial:
      for (int g = 0; g < n; ++g) action.push_back(identity_matrix(1));
      return GModule(G, 1, {}, std::move(action));
    case StandardKind::regular:
      for (int g = 0; g < n; ++g) {
        IntMatrix a = IntMatrix::Zero(n, n);
        for (int h = 0; h < n; ++h) a(G.mul(g, h), h) = 1;
        action.push_back(std::move(a));
      }
      return GModule(G, n, {}, std::move(action));
    case StandardKind::norm_torus:
      // basis: images of h != 0; image of 0 is minus the sum of the others
      for (int g = 0; g < n; ++g) {
        IntMatrix a = IntMatrix::Zero(n - 1, n - 1);
        for (int h = 1; h < n; ++h) {
          const int gh = G.mul(g, h);
          if (gh != 0) {
            a(gh - 1, h - 1) = 1;
          } else {
            for (int k = 0; k < n - 1; ++k) a(k, h - 1) = -1;
          }
        }
        action.push_back(std::move(a));
      }
      return GModule(G, n - 1, {}, std::move(action));
    case StandardKind::dual_torus:
      // g (h - 1) = (gh - 1) - (g - 1)
      for (int g = 0; g < n; ++g) {
        IntMatrix a = IntMatrix::Zero(n - 1, n - 1);
        for (int h = 1; h < n; ++h) {
          const int gh = G.mul(g, h);
          if (gh != 0) a(gh - 1, h - 1) += 1;
          if (g != 0) a(g - 1, h - 1) -= 1;
        }
        action.push_back(std::move(a));
      }
      return GModule(G, n - 1, {}, std::move(action));
    case StandardKind::permutation:
      return permutation_module(G, whole_group(G));
  }
  throw ModuleError("unknown module kind");
}

GModule permutation_module(const FiniteGroup& G, const Subgroup& H) {
  if (!H.parent().same_as(G)) throw ModuleError("subgroup belongs to a different group");
  const int n = G.order();
  std::vector<int> coset(static_cast<std::size_t>(n), -1);
  int count = 0;
  for (int g = 0; g < n; ++g) {
    if (coset[static_cast<std::size_t>(g)] >= 0) continue;
    for (int h : H.elements()) coset[static_cast<std::size_t>(G.mul(g, h))] = count;
    ++count;
  }
  std::vector<int> rep(static_cast<std::size_t>(count));
  for (int g = n - 1; g >= 0; --g) rep[static_cast<std::size_t>(coset[static_cast<std::size_t>(g)])] = g;
  std::vector<IntMatrix> action;
  for (int g = 0; g < n; ++g) {
    IntMatrix a = IntMatrix::Zero(count, count);
    for (int c = 0; c < count; ++c) a(coset[static_cast<std::size_t>(G.mul(g, rep[static_cast<std::size_t>(c)]))], c) = 1;
    action.push_back(std::move(a));
  }
  return GModule(G, count, {}, std::move(action));
}

GModule restrict_module(const GModule& M, const Subgroup& H) {
  if (!H.parent().same_as(M.group())) throw ModuleError("subgroup is not a subgroup of the module's group");
  std::vector<IntMatrix> action;
  for (int h : H.elements()) action.push_back(M.action(h));
  return GModule(H.as_group(), M.rank(), M.torsion(), std::move(action));
}

StandardKind parse_standard_kind(const std::string& name) {
  if (name == "trivial") return StandardKind::trivial;
  if (name == "regular") return StandardKind::regular;
  if (name == "norm" || name == "norm_torus") return StandardKind::norm_torus;
  if (name == "dual" || name == "dual_torus") return StandardKind::dual_torus;
  throw ModuleError("unknown module kind '" + name + "' (expected trivial, regular, norm, dual)");
}

std::string to_string(StandardKind kind) {
  switch (kind) {
    case StandardKind::trivial: return "trivial";
    case StandardKind::regular: return "regular";
    case StandardKind::norm_torus: return "norm";
    case StandardKind::dual_torus: return "dual";
    case StandardKind::permutation: return "permutation";
  }
  return "?";
}

}  // namespace torus
