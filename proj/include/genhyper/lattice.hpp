#ifndef GENHYPER_LATTICE_HPP
#define GENHYPER_LATTICE_HPP

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "genhyper/group.hpp"

namespace genhyper {

struct LatticeNode {
  Subgroup sub;
  std::vector<ElemIdx> gens;  // short generating chain from construction
  unsigned index = 0;         // |G| / |H|
  bool maximal = false;
  bool normal = false;
  long long moebius = 0;
};

// Full subgroup lattice, built by cyclic extension: start from all cyclic
// subgroups and repeatedly adjoin single elements until no new subgroup
// appears. Deduplication is by exact membership mask. Nodes are sorted by
// (order, mask), so ids are canonical; node 0 is trivial, the last node is G.
class SubgroupLattice {
 public:
  static SubgroupLattice build(const FiniteGroup& g, unsigned order_cap = 400);

  const FiniteGroup& group() const { return *g_; }
  unsigned node_count() const { return static_cast<unsigned>(nodes_.size()); }
  const LatticeNode& node(unsigned i) const { return nodes_[i]; }
  unsigned top() const { return node_count() - 1; }

  // subset-or-equal relation between node masks
  bool includes(unsigned i, unsigned j) const { return reach_[i].test(j); }
  bool strictly_includes(unsigned i, unsigned j) const {
    return i != j && reach_[i].test(j);
  }

  std::vector<unsigned> maximal_nodes() const;
  Subgroup frattini() const;  // intersection of maximal subgroups; G if none

  // node id for an exact mask; throws InvalidInput if absent
  unsigned find_node(const Bitset& mask) const;

 private:
  const FiniteGroup* g_ = nullptr;
  std::vector<LatticeNode> nodes_;
  std::vector<Bitset> reach_;  // reach_[i].test(j): node i <= node j
  std::unordered_map<Bitset, unsigned, BitsetHash> by_mask_;

  void fill_moebius();
};

Subgroup frattini_subgroup(const FiniteGroup& g, unsigned order_cap = 400);

// a_n = sum of moebius values over subgroups of index n. Entries exist for
// every n that is the index of some subgroup (possibly with value 0).
struct EulerianSequence {
  std::map<unsigned, long long> a;
  unsigned group_order = 0;

  long long at(unsigned n) const {
    auto it = a.find(n);
    return it == a.end() ? 0 : it->second;
  }
};

EulerianSequence a_sequence(const SubgroupLattice& l);

// Orders of the composition factors of G, computed by walking maximal
// normal chains through the lattice (Jordan-Hoelder makes the multiset
// independent of the chain).
std::vector<unsigned> composition_factor_orders(const SubgroupLattice& l);

// True iff every composition factor is a p-group or has order coprime to p.
bool is_p_solvable_oracle(const SubgroupLattice& l, unsigned p);

}  // namespace genhyper

#endif  // GENHYPER_LATTICE_HPP
