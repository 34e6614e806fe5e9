#include "torus/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

namespace torus {

FiniteGroup::FiniteGroup() {
  auto d = std::make_shared<Data>();
  d->order = 1;
  d->table = {0};
  d->inverse = {0};
  data_ = std::move(d);
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n < 1) throw GroupError("group table must have at least one row");
  auto d = std::make_shared<Data>();
  d->order = n;
  d->table.reserve(static_cast<std::size_t>(n * n));
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw GroupError("group table is not square");
    for (int x : row) {
      if (x < 0 || x >= n) throw GroupError("group table entry out of range");
      d->table.push_back(x);
    }
  }
  auto at = [&](int a, int b) { return d->table[static_cast<std::size_t>(a * n + b)]; };
  for (int x = 0; x < n; ++x) {
    if (at(0, x) != x || at(x, 0) != x) throw GroupError("element 0 is not a two-sided identity");
  }
  d->inverse.assign(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (at(x, y) == 0) {
        if (at(y, x) != 0) throw GroupError("inverse is not two-sided");
        d->inverse[static_cast<std::size_t>(x)] = y;
        break;
      }
    }
    if (d->inverse[static_cast<std::size_t>(x)] < 0) throw GroupError("element without inverse");
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (at(at(x, y), z) != at(x, at(y, z))) throw GroupError("group table is not associative");
  return FiniteGroup(std::move(d));
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw GroupError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return from_table(t);
}

FiniteGroup FiniteGroup::klein_four() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = a ^ b;
  return from_table(t);
}

FiniteGroup FiniteGroup::symmetric3() {
  return group_from_permutations({{1, 0, 2}, {0, 2, 1}}, 3);
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  int x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteGroup::is_cyclic() const {
  for (int a = 0; a < order(); ++a)
    if (element_order(a) == order()) return true;
  return false;
}

int FiniteGroup::cyclic_generator() const {
  for (int a = 0; a < order(); ++a)
    if (element_order(a) == order()) return a;
  throw GroupError("group is not cyclic");
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(order()));
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < order(); ++b) t[static_cast<std::size_t>(a)].push_back(mul(a, b));
  return t;
}

bool FiniteGroup::same_as(const FiniteGroup& other) const {
  return data_ == other.data_ || data_->table == other.data_->table;
}

FiniteGroup group_from_permutations(const std::vector<Permutation>& generators, int degree) {
  if (degree < 1) throw GroupError("permutation domain is empty");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree) throw GroupError("generator has wrong degree");
    std::vector<bool> seen(static_cast<std::size_t>(degree), false);
    for (int x : g) {
      if (x < 0 || x >= degree || seen[static_cast<std::size_t>(x)])
        throw GroupError("generator is not a bijection");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }
  auto compose = [&](const Permutation& a, const Permutation& b) {
    Permutation c(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) c[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(b[static_cast<std::size_t>(i)])];
    return c;
  };
  Permutation id(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) id[static_cast<std::size_t>(i)] = i;

  std::vector<Permutation> elems{id};
  std::map<Permutation, int> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : generators) {
      Permutation y = compose(elems[head], g);
      if (!index.count(y)) {
        index.emplace(y, static_cast<int>(elems.size()));
        elems.push_back(std::move(y));
      }
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = index.at(compose(elems[a], elems[b]));
  return FiniteGroup::from_table(t);
}

Subgroup::Subgroup(FiniteGroup parent, std::vector<int> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.empty() || elements_.front() != 0) throw GroupError("subgroup must contain the identity");
  for (int x : elements_) {
    if (x < 0 || x >= parent_.order()) throw GroupError("subgroup element out of range");
  }
  for (int x : elements_) {
    if (!contains(parent_.inv(x))) throw GroupError("subset is not closed under inverses");
    for (int y : elements_)
      if (!contains(parent_.mul(x, y))) throw GroupError("subset is not closed under multiplication");
  }
}

bool Subgroup::contains(int g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (!parent_.same_as(other.parent_)) return false;
  return std::all_of(elements_.begin(), elements_.end(), [&](int x) { return other.contains(x); });
}

bool Subgroup::is_normal() const {
  for (int g = 0; g < parent_.order(); ++g)
    for (int x : elements_)
      if (!contains(parent_.conjugate(x, g))) return false;
  return true;
}

int Subgroup::local_index(int g) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || *it != g) throw GroupError("element not in subgroup");
  return static_cast<int>(it - elements_.begin());
}

FiniteGroup Subgroup::as_group() const {
  const std::size_t n = elements_.size();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = local_index(parent_.mul(elements_[a], elements_[b]));
  return FiniteGroup::from_table(t);
}

Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<int>& generators) {
  for (int g : generators) {
    if (g < 0 || g >= G.order()) throw GroupError("generator index out of range");
  }
  std::set<int> seen{0};
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int g : generators) {
      const int y = G.mul(x, g);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return Subgroup(G, std::vector<int>(seen.begin(), seen.end()));
}

Subgroup whole_group(const FiniteGroup& G) {
  std::vector<int> all(static_cast<std::size_t>(G.order()));
  for (int i = 0; i < G.order(); ++i) all[static_cast<std::size_t>(i)] = i;
  return Subgroup(G, all);
}

Subgroup trivial_subgroup(const FiniteGroup& G) { return Subgroup(G, {0}); }

Subgroup commutator_subgroup(const FiniteGroup& G) {
  std::set<int> comms;
  for (int a = 0; a < G.order(); ++a)
    for (int b = 0; b < G.order(); ++b) comms.insert(G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b))));
  return subgroup_generated(G, std::vector<int>(comms.begin(), comms.end()));
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& G) {
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> frontier{{0}};
  found.insert({0});
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& h : frontier) {
      for (int g = 0; g < G.order(); ++g) {
        if (std::binary_search(h.begin(), h.end(), g)) continue;
        std::vector<int> gens = h;
        gens.push_back(g);
        auto s = subgroup_generated(G, gens).elements();
        if (found.insert(s).second) next.push_back(std::move(s));
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> sorted(found.begin(), found.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<Subgroup> out;
  for (auto& s : sorted) out.emplace_back(G, s);
  return out;
}

QuotientGroup quotient_group(const FiniteGroup& G, const Subgroup& N) {
  if (!N.parent().same_as(G)) throw GroupError("subgroup belongs to a different group");
  if (!N.is_normal()) throw GroupError("subgroup is not normal");
  QuotientGroup q;
  q.coset_of.assign(static_cast<std::size_t>(G.order()), -1);
  for (int g = 0; g < G.order(); ++g) {
    if (q.coset_of[static_cast<std::size_t>(g)] >= 0) continue;
    const int idx = static_cast<int>(q.representative.size());
    q.representative.push_back(g);
    for (int n : N.elements()) q.coset_of[static_cast<std::size_t>(G.mul(g, n))] = idx;
  }
  const std::size_t m = q.representative.size();
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      t[a][b] = q.coset_of[static_cast<std::size_t>(G.mul(q.representative[a], q.representative[b]))];
  q.group = FiniteGroup::from_table(t);
  return q;
}

Abelianization abelianization(const FiniteGroup& G) {
  const QuotientGroup q = quotient_group(G, commutator_subgroup(G));
  const int m = q.group.order();
  // Z^m / < e_0, e_a + e_b - e_ab >
  IntMatrix rel = IntMatrix::Zero(m, m * m + 1);
  rel(0, m * m) = 1;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const Index c = a * m + b;
      rel(a, c) += 1;
      rel(b, c) += 1;
      rel(q.group.mul(a, b), c) -= 1;
    }
  }
  const auto snf = smith_normal_form(rel, {.left = true, .right = false});
  std::vector<Index> rows;
  std::vector<Integer> mods;
  for (Index i = 0; i < snf.rank; ++i) {
    if (snf.D(i, i) != 1) {
      rows.push_back(i);
      mods.push_back(snf.D(i, i));
    }
  }
  Abelianization ab;
  ab.group = FiniteAbelianGroup(mods);
  for (int g = 0; g < G.order(); ++g) {
    const int c = q.coset_of[static_cast<std::size_t>(g)];
    IntVector v(static_cast<Index>(rows.size()));
    for (std::size_t k = 0; k < rows.size(); ++k)
      v(static_cast<Index>(k)) = floor_mod(snf.U(rows[k], c), mods[k]);
    ab.coordinates.push_back(std::move(v));
  }
  return ab;
}

int abelian_image_order(const Abelianization& ab, const Subgroup& H) {
  std::set<std::vector<std::string>> image;
  for (int h : H.elements()) {
    const IntVector& v = ab.coordinates[static_cast<std::size_t>(h)];
    std::vector<std::string> key;
    for (Index i = 0; i < v.size(); ++i) key.push_back(v(i).str());
    image.insert(key);
  }
  return static_cast<int>(image.size());
}

}  // namespace torus
