#include "genhyper/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "genhyper/error.hpp"

namespace genhyper {

SubgroupLattice SubgroupLattice::build(const FiniteGroup& g,
                                       unsigned order_cap) {
  if (g.order() > order_cap)
    throw BudgetError("group order " + std::to_string(g.order()) +
                      " exceeds lattice cap of " + std::to_string(order_cap));

  SubgroupLattice l;
  l.g_ = &g;

  struct Item {
    Subgroup sub;
    std::vector<ElemIdx> gens;
  };
  std::vector<Item> items;
  std::unordered_map<Bitset, unsigned, BitsetHash> seen;

  auto add = [&](Subgroup sub, std::vector<ElemIdx> gens) -> bool {
    auto it = seen.find(sub.mask);
    if (it != seen.end()) return false;
    seen.emplace(sub.mask, static_cast<unsigned>(items.size()));
    items.push_back(Item{std::move(sub), std::move(gens)});
    return true;
  };

  // seed with every cyclic subgroup (the trivial one comes from index 0)
  for (unsigned i = 0; i < g.order(); ++i) {
    ElemIdx e = static_cast<ElemIdx>(i);
    add(generate(g, std::span<const ElemIdx>(&e, 1)), {e});
  }

  // adjoin one element at a time; each extension at least doubles the order,
  // so generating chains stay logarithmic
  for (std::size_t head = 0; head < items.size(); ++head) {
    if (items[head].sub.order == g.order()) continue;
    std::vector<ElemIdx> gens = items[head].gens;  // copy: items may realloc
    Bitset mask = items[head].sub.mask;
    gens.push_back(0);
    for (unsigned e = 1; e < g.order(); ++e) {
      if (mask.test(e)) continue;
      gens.back() = static_cast<ElemIdx>(e);
      add(generate(g, gens), gens);
    }
  }

  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.sub.order != b.sub.order) return a.sub.order < b.sub.order;
    return a.sub.mask.mask_less(b.sub.mask);
  });

  const unsigned count = static_cast<unsigned>(items.size());
  l.nodes_.resize(count);
  for (unsigned i = 0; i < count; ++i) {
    LatticeNode& n = l.nodes_[i];
    n.sub = std::move(items[i].sub);
    n.gens = std::move(items[i].gens);
    n.index = g.order() / n.sub.order;
    n.normal = is_normal(g, n.sub);
    l.by_mask_.emplace(n.sub.mask, i);
  }

  l.reach_.assign(count, Bitset(count));
  for (unsigned i = 0; i < count; ++i)
    for (unsigned j = 0; j < count; ++j)
      if (l.nodes_[i].sub.order <= l.nodes_[j].sub.order &&
          l.nodes_[i].sub.mask.is_subset_of(l.nodes_[j].sub.mask))
        l.reach_[i].set(j);

  for (unsigned i = 0; i + 1 < count; ++i) {
    bool maximal = true;
    for (unsigned j = i + 1; j + 1 < count && maximal; ++j)
      if (l.strictly_includes(i, j)) maximal = false;
    l.nodes_[i].maximal = maximal;
  }

  l.fill_moebius();
  return l;
}

void SubgroupLattice::fill_moebius() {
  // top-down in decreasing order; strict supersets always have larger order
  const unsigned count = node_count();
  nodes_[count - 1].moebius = 1;
  for (unsigned i = count - 1; i-- > 0;) {
    long long sum = 0;
    for (unsigned j = i + 1; j < count; ++j)
      if (strictly_includes(i, j)) sum += nodes_[j].moebius;
    nodes_[i].moebius = -sum;
  }
}

std::vector<unsigned> SubgroupLattice::maximal_nodes() const {
  std::vector<unsigned> out;
  for (unsigned i = 0; i < node_count(); ++i)
    if (nodes_[i].maximal) out.push_back(i);
  return out;
}

Subgroup SubgroupLattice::frattini() const {
  auto maxes = maximal_nodes();
  if (maxes.empty())  // trivial group
    return Subgroup{g_->full_mask(), g_->order()};
  Bitset mask = nodes_[maxes[0]].sub.mask;
  for (std::size_t k = 1; k < maxes.size(); ++k)
    mask &= nodes_[maxes[k]].sub.mask;
  unsigned order = mask.count();
  return Subgroup{std::move(mask), order};
}

unsigned SubgroupLattice::find_node(const Bitset& mask) const {
  auto it = by_mask_.find(mask);
  if (it == by_mask_.end())
    throw InvalidInput("mask is not a subgroup in the lattice");
  return it->second;
}

Subgroup frattini_subgroup(const FiniteGroup& g, unsigned order_cap) {
  return SubgroupLattice::build(g, order_cap).frattini();
}

EulerianSequence a_sequence(const SubgroupLattice& l) {
  EulerianSequence seq;
  seq.group_order = l.group().order();
  for (unsigned i = 0; i < l.node_count(); ++i)
    seq.a[l.node(i).index] += l.node(i).moebius;
  return seq;
}

namespace {

// Largest proper subgroup of H (a lattice node) that is normal in H.
// Ties broken by node id, so chains are deterministic.
unsigned maximal_normal_in(const SubgroupLattice& l, unsigned h) {
  const FiniteGroup& g = l.group();
  auto h_elems = [&] {
    std::vector<ElemIdx> v;
    l.node(h).sub.mask.for_each(
        [&](unsigned i) { v.push_back(static_cast<ElemIdx>(i)); });
    return v;
  }();

  unsigned best = l.node_count();
  for (unsigned k = 0; k < l.node_count(); ++k) {
    if (k == h || !l.includes(k, h)) continue;
    if (best != l.node_count() &&
        l.node(k).sub.order <= l.node(best).sub.order)
      continue;
    bool normal = true;
    for (ElemIdx x : h_elems) {
      ElemIdx xi = g.inverse(x);
      bool ok = true;
      l.node(k).sub.mask.for_each([&](unsigned e) {
        if (ok && !l.node(k).sub.mask.test(
                      g.mult(g.mult(xi, static_cast<ElemIdx>(e)), x)))
          ok = false;
      });
      if (!ok) {
        normal = false;
        break;
      }
    }
    if (normal) best = k;
  }
  if (best == l.node_count())
    throw std::logic_error("no proper normal subgroup found");
  return best;
}

}  // namespace

std::vector<unsigned> composition_factor_orders(const SubgroupLattice& l) {
  std::vector<unsigned> factors;
  unsigned h = l.top();
  while (l.node(h).sub.order > 1) {
    unsigned k = maximal_normal_in(l, h);
    factors.push_back(l.node(h).sub.order / l.node(k).sub.order);
    h = k;
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

bool is_p_solvable_oracle(const SubgroupLattice& l, unsigned p) {
  for (unsigned f : composition_factor_orders(l)) {
    bool p_power = true;
    unsigned m = f;
    while (m % p == 0) m /= p;
    p_power = (m == 1);
    bool coprime = (f % p != 0);
    if (!p_power && !coprime) return false;
  }
  return true;
}

}  // namespace genhyper
