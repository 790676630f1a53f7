#ifndef GENHYPER_GROUP_HPP
#define GENHYPER_GROUP_HPP

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "genhyper/bitset.hpp"
#include "genhyper/perm.hpp"

namespace genhyper {

using ElemIdx = std::uint16_t;

// Finite permutation group given by its full element table.
//
// The table is built by breadth-first closure from the generators, in input
// order, so element indices are reproducible across runs. Index 0 is the
// identity.
class FiniteGroup {
 public:
  static FiniteGroup close(const std::vector<Perm>& generators,
                           std::string name = "",
                           unsigned order_cap = 5000);

  unsigned order() const { return static_cast<unsigned>(elems_.size()); }
  unsigned degree() const { return degree_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  const Perm& element(ElemIdx i) const { return elems_[i]; }
  const std::vector<ElemIdx>& generator_indices() const { return gens_; }

  ElemIdx mult(ElemIdx a, ElemIdx b) const {
    if (!mult_.empty()) return mult_[static_cast<std::size_t>(a) * order() + b];
    return index_of(elems_[a] * elems_[b]);
  }
  ElemIdx inverse(ElemIdx a) const { return inv_[a]; }
  unsigned element_order(ElemIdx a) const { return orders_[a]; }
  ElemIdx index_of(const Perm& p) const;  // throws InvalidInput if absent
  bool contains(const Perm& p) const { return index_.count(p) != 0; }

  bool is_abelian() const;
  bool is_cyclic() const;  // some element has order |G|
  unsigned exponent() const;

  Bitset full_mask() const;

 private:
  unsigned degree_ = 1;
  std::vector<Perm> elems_;
  std::unordered_map<Perm, ElemIdx, PermHash> index_;
  std::vector<ElemIdx> gens_;
  std::vector<ElemIdx> mult_;  // full table when the order is small enough
  std::vector<ElemIdx> inv_;
  std::vector<unsigned> orders_;
  std::string name_;
};

// Subgroup of a fixed ambient group, as a membership mask over element
// indices. Always contains index 0 and is closed under product and inverse.
struct Subgroup {
  Bitset mask;
  unsigned order = 0;

  bool is_trivial() const { return order == 1; }
};

// Closure of `seed` inside g (the subgroup generated by those elements).
// Direct computation, no caching.
Subgroup generate(const FiniteGroup& g, std::span<const ElemIdx> seed);

// Memoizing wrapper around generate(). The key is the sorted, deduplicated
// seed with the identity dropped (it never contributes). Not thread-safe;
// use one cache per worker.
class GenCache {
 public:
  explicit GenCache(const FiniteGroup& g, unsigned max_key_size = 16)
      : g_(&g), max_key_size_(max_key_size) {}

  const Subgroup& generated(std::span<const ElemIdx> seed);
  bool generates(std::span<const ElemIdx> seed) {
    return generated(seed).order == g_->order();
  }

  // Seeds the cache with every cyclic subgroup.
  void precompute_cyclic();

  std::uint64_t query_count() const { return queries_; }
  std::size_t size() const { return memo_.size(); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<ElemIdx>& v) const {
      std::size_t h = 1469598103934665603ull;
      for (ElemIdx e : v) {
        h ^= e;
        h *= 1099511628211ull;
      }
      return h;
    }
  };

  const FiniteGroup* g_;
  unsigned max_key_size_;
  std::uint64_t queries_ = 0;
  std::unordered_map<std::vector<ElemIdx>, Subgroup, KeyHash> memo_;
  Subgroup scratch_;  // holds the result for keys too large to cache
};

bool is_normal(const FiniteGroup& g, const Subgroup& h);

Subgroup derived_subgroup(const FiniteGroup& g);
Subgroup derived_subgroup_of(const FiniteGroup& g, const Subgroup& h);
std::vector<Subgroup> derived_series(const FiniteGroup& g);
bool is_solvable_oracle(const FiniteGroup& g);

Subgroup center(const FiniteGroup& g);
bool is_nilpotent_oracle(const FiniteGroup& g);

// Largest nilpotent normal subgroup: the product over primes p of the
// largest normal p-subgroup (elements whose normal closure is a p-group).
Subgroup fitting_subgroup(const FiniteGroup& g);

// d(G): the least size of a generating set. 0 for the trivial group.
// Searches subset sizes ascending; every finite group is generated by
// at most floor(log2 |G|) elements.
unsigned min_generator_count(const FiniteGroup& g);

// Quotient G/N realized as a permutation group via the left regular action
// on cosets, then re-closed into canonical table form. projection[i] is the
// quotient index of element i.
struct QuotientMap {
  FiniteGroup quotient;
  std::vector<ElemIdx> projection;
};
QuotientMap quotient_group(const FiniteGroup& g, const Subgroup& n);

// Gaschutz lift: given coset representatives g_1..g_r whose images generate
// G/N with r >= d(G), finds u_i in N with <g_1 u_1, ..., g_r u_r> = G.
// Searches N^r in element-index order, so the result is deterministic.
// Throws InvalidInput if the images do not generate G/N or r < d(G).
std::vector<ElemIdx> lift_generating_tuple(const FiniteGroup& g,
                                           const Subgroup& n,
                                           std::span<const ElemIdx> coset_tuple);

std::vector<unsigned> prime_divisors(unsigned n);
bool is_prime(unsigned n);
bool is_prime_power(unsigned n, unsigned* prime = nullptr);

}  // namespace genhyper

#endif  // GENHYPER_GROUP_HPP
