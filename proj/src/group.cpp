#include "genhyper/group.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "genhyper/error.hpp"
#include "genhyper/subsets.hpp"

namespace genhyper {

namespace {

// Full multiplication tables are kept up to this order; beyond it products
// go through the element hash index.
constexpr unsigned kMultTableCap = 2048;

std::vector<ElemIdx> mask_elements(const Bitset& mask) {
  std::vector<ElemIdx> out;
  out.reserve(mask.count());
  mask.for_each([&](unsigned i) { out.push_back(static_cast<ElemIdx>(i)); });
  return out;
}

}  // namespace

FiniteGroup FiniteGroup::close(const std::vector<Perm>& generators,
                               std::string name, unsigned order_cap) {
  if (generators.empty())
    throw InvalidInput("group closure needs at least one generator");
  const unsigned degree = generators[0].degree();
  if (degree < 1) throw InvalidInput("degree must be at least 1");
  for (const Perm& p : generators)
    if (p.degree() != degree)
      throw InvalidInput("generators have mismatched degrees");

  FiniteGroup g;
  g.degree_ = degree;
  g.name_ = std::move(name);
  g.elems_.push_back(Perm::identity(degree));
  g.index_.emplace(g.elems_[0], 0);

  // breadth-first closure; element order is reproducible by construction
  for (std::size_t head = 0; head < g.elems_.size(); ++head) {
    Perm cur = g.elems_[head];
    for (const Perm& s : generators) {
      Perm p = cur * s;
      if (g.index_.emplace(p, static_cast<ElemIdx>(g.elems_.size())).second) {
        g.elems_.push_back(std::move(p));
        if (g.elems_.size() > order_cap)
          throw BudgetError("group order exceeds cap of " +
                            std::to_string(order_cap));
      }
    }
  }

  for (const Perm& s : generators) {
    ElemIdx gi = g.index_.at(s);
    if (std::find(g.gens_.begin(), g.gens_.end(), gi) == g.gens_.end())
      g.gens_.push_back(gi);
  }

  const unsigned n = g.order();
  if (n <= kMultTableCap) {
    g.mult_.resize(static_cast<std::size_t>(n) * n);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j)
        g.mult_[static_cast<std::size_t>(i) * n + j] =
            g.index_.at(g.elems_[i] * g.elems_[j]);
  }
  g.inv_.resize(n);
  for (unsigned i = 0; i < n; ++i) g.inv_[i] = g.index_.at(g.elems_[i].inverse());
  g.orders_.resize(n);
  for (unsigned i = 0; i < n; ++i) g.orders_[i] = g.elems_[i].order();
  return g;
}

ElemIdx FiniteGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw InvalidInput("permutation is not an element of " +
                       (name_.empty() ? std::string("the group") : name_));
  return it->second;
}

bool FiniteGroup::is_abelian() const {
  for (ElemIdx a : gens_)
    for (ElemIdx b : gens_)
      if (mult(a, b) != mult(b, a)) return false;
  return true;
}

bool FiniteGroup::is_cyclic() const {
  for (unsigned i = 0; i < order(); ++i)
    if (orders_[i] == order()) return true;
  return false;
}

unsigned FiniteGroup::exponent() const {
  unsigned e = 1;
  for (unsigned o : orders_) e = std::lcm(e, o);
  return e;
}

Bitset FiniteGroup::full_mask() const {
  Bitset m(order());
  for (unsigned i = 0; i < order(); ++i) m.set(i);
  return m;
}

Subgroup generate(const FiniteGroup& g, std::span<const ElemIdx> seed) {
  Bitset mask(g.order());
  mask.set(0);
  unsigned count = 1;
  std::vector<ElemIdx> work;
  std::vector<ElemIdx> gens;
  for (ElemIdx s : seed) {
    if (!mask.test(s)) {
      mask.set(s);
      ++count;
      work.push_back(s);
      gens.push_back(s);
    }
  }
  for (std::size_t head = 0; head < work.size(); ++head) {
    ElemIdx x = work[head];
    for (ElemIdx s : gens) {
      ElemIdx y = g.mult(x, s);
      if (!mask.test(y)) {
        mask.set(y);
        ++count;
        work.push_back(y);
      }
    }
  }
  return Subgroup{std::move(mask), count};
}

const Subgroup& GenCache::generated(std::span<const ElemIdx> seed) {
  ++queries_;
  std::vector<ElemIdx> key(seed.begin(), seed.end());
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  if (!key.empty() && key.front() == 0) key.erase(key.begin());
  if (key.size() > max_key_size_) {
    scratch_ = generate(*g_, key);
    return scratch_;
  }
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  Subgroup sub = generate(*g_, key);
  return memo_.emplace(std::move(key), std::move(sub)).first->second;
}

void GenCache::precompute_cyclic() {
  for (unsigned i = 1; i < g_->order(); ++i) {
    ElemIdx e = static_cast<ElemIdx>(i);
    generated(std::span<const ElemIdx>(&e, 1));
  }
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  auto elems = mask_elements(h.mask);
  for (ElemIdx x : g.generator_indices()) {
    ElemIdx xi = g.inverse(x);
    for (ElemIdx e : elems)
      if (!h.mask.test(g.mult(g.mult(xi, e), x))) return false;
  }
  return true;
}

Subgroup derived_subgroup_of(const FiniteGroup& g, const Subgroup& h) {
  auto elems = mask_elements(h.mask);
  Bitset comms(g.order());
  std::vector<ElemIdx> seed;
  for (ElemIdx a : elems) {
    ElemIdx ai = g.inverse(a);
    for (ElemIdx b : elems) {
      ElemIdx c = g.mult(g.mult(g.mult(ai, g.inverse(b)), a), b);
      if (!comms.test(c)) {
        comms.set(c);
        seed.push_back(c);
      }
    }
  }
  return generate(g, seed);
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  Subgroup whole{g.full_mask(), g.order()};
  return derived_subgroup_of(g, whole);
}

std::vector<Subgroup> derived_series(const FiniteGroup& g) {
  std::vector<Subgroup> series;
  series.push_back(Subgroup{g.full_mask(), g.order()});
  for (;;) {
    Subgroup next = derived_subgroup_of(g, series.back());
    if (next.order == series.back().order) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable_oracle(const FiniteGroup& g) {
  return derived_series(g).back().order == 1;
}

Subgroup center(const FiniteGroup& g) {
  Bitset mask(g.order());
  unsigned count = 0;
  for (unsigned x = 0; x < g.order(); ++x) {
    bool central = true;
    for (ElemIdx s : g.generator_indices()) {
      if (g.mult(static_cast<ElemIdx>(x), s) !=
          g.mult(s, static_cast<ElemIdx>(x))) {
        central = false;
        break;
      }
    }
    if (central) {
      mask.set(x);
      ++count;
    }
  }
  return Subgroup{std::move(mask), count};
}

bool is_nilpotent_oracle(const FiniteGroup& g) {
  // upper central series: Z_{i+1} = { x : [x, s] in Z_i for all generators s }
  Bitset z(g.order());
  z.set(0);
  unsigned zcount = 1;
  for (;;) {
    if (zcount == g.order()) return true;
    Bitset next(g.order());
    unsigned ncount = 0;
    for (unsigned x = 0; x < g.order(); ++x) {
      ElemIdx xi = g.inverse(static_cast<ElemIdx>(x));
      bool in = true;
      for (ElemIdx s : g.generator_indices()) {
        ElemIdx comm = g.mult(g.mult(g.mult(xi, g.inverse(s)),
                                     static_cast<ElemIdx>(x)), s);
        if (!z.test(comm)) {
          in = false;
          break;
        }
      }
      if (in) {
        next.set(x);
        ++ncount;
      }
    }
    if (ncount == zcount) return false;  // series stalled below G
    z = std::move(next);
    zcount = ncount;
  }
}

namespace {

bool order_is_power_of(unsigned n, unsigned p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

// Normal closure of a single element.
Subgroup normal_closure(const FiniteGroup& g, ElemIdx e) {
  Bitset conj(g.order());
  std::vector<ElemIdx> seed;
  for (unsigned x = 0; x < g.order(); ++x) {
    ElemIdx c = g.mult(g.mult(g.inverse(static_cast<ElemIdx>(x)), e),
                       static_cast<ElemIdx>(x));
    if (!conj.test(c)) {
      conj.set(c);
      seed.push_back(c);
    }
  }
  return generate(g, seed);
}

}  // namespace

Subgroup fitting_subgroup(const FiniteGroup& g) {
  std::vector<ElemIdx> fit_seed;
  for (unsigned p : prime_divisors(g.order())) {
    // O_p(G) = elements whose normal closure is a p-group
    for (unsigned e = 1; e < g.order(); ++e) {
      if (!order_is_power_of(g.element_order(static_cast<ElemIdx>(e)), p))
        continue;
      Subgroup ncl = normal_closure(g, static_cast<ElemIdx>(e));
      if (order_is_power_of(ncl.order, p))
        fit_seed.push_back(static_cast<ElemIdx>(e));
    }
  }
  return generate(g, fit_seed);
}

unsigned min_generator_count(const FiniteGroup& g) {
  const unsigned n = g.order();
  if (n == 1) return 0;
  unsigned max_k = 0;
  while ((1u << (max_k + 1)) <= n) ++max_k;
  std::vector<ElemIdx> cand;
  for (unsigned i = 1; i < n; ++i) cand.push_back(static_cast<ElemIdx>(i));
  std::vector<unsigned> pos;
  std::vector<ElemIdx> seed;
  for (unsigned k = 1; k <= max_k; ++k) {
    colex_first(k, pos);
    do {
      seed.clear();
      for (unsigned p : pos) seed.push_back(cand[p]);
      if (generate(g, seed).order == n) return k;
    } while (colex_next(static_cast<unsigned>(cand.size()), pos));
  }
  throw std::logic_error("no generating set of size <= log2(|G|) found");
}

QuotientMap quotient_group(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw InvalidInput("subgroup is not normal");
  const unsigned order = g.order();
  const unsigned index = order / n.order;
  auto n_elems = mask_elements(n.mask);

  std::vector<int> coset_id(order, -1);
  std::vector<ElemIdx> reps;
  for (unsigned i = 0; i < order; ++i) {
    if (coset_id[i] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(static_cast<ElemIdx>(i));
    for (ElemIdx e : n_elems) coset_id[g.mult(static_cast<ElemIdx>(i), e)] = id;
  }

  auto act = [&](ElemIdx a) {
    std::vector<unsigned> img(index);
    for (unsigned j = 0; j < index; ++j)
      img[j] = static_cast<unsigned>(coset_id[g.mult(a, reps[j])]);
    return Perm(std::move(img));
  };

  std::vector<Perm> qgens;
  for (ElemIdx gi : g.generator_indices()) qgens.push_back(act(gi));
  if (qgens.empty()) qgens.push_back(Perm::identity(index));

  std::string qname = g.name().empty() ? "" : g.name() + "/N" +
                                              std::to_string(n.order);
  FiniteGroup quotient = FiniteGroup::close(qgens, qname, g.order());
  if (quotient.order() != index)
    throw std::logic_error("coset action has wrong order");

  std::vector<ElemIdx> projection(order);
  for (unsigned i = 0; i < order; ++i)
    projection[i] = quotient.index_of(act(static_cast<ElemIdx>(i)));
  return QuotientMap{std::move(quotient), std::move(projection)};
}

std::vector<ElemIdx> lift_generating_tuple(const FiniteGroup& g,
                                           const Subgroup& n,
                                           std::span<const ElemIdx> coset_tuple) {
  if (!is_normal(g, n)) throw InvalidInput("subgroup is not normal");
  const unsigned r = static_cast<unsigned>(coset_tuple.size());

  // images generate G/N iff <tuple, N> = G
  std::vector<ElemIdx> seed(coset_tuple.begin(), coset_tuple.end());
  auto n_elems = mask_elements(n.mask);
  seed.insert(seed.end(), n_elems.begin(), n_elems.end());
  if (generate(g, seed).order != g.order())
    throw InvalidInput("coset images do not generate the quotient");
  if (r < min_generator_count(g))
    throw InvalidInput("tuple shorter than d(G)");

  std::vector<unsigned> odo(r, 0);
  std::vector<ElemIdx> lifted(r);
  for (;;) {
    for (unsigned i = 0; i < r; ++i)
      lifted[i] = g.mult(coset_tuple[i], n_elems[odo[i]]);
    if (generate(g, lifted).order == g.order()) return lifted;
    unsigned i = r;
    while (i > 0) {
      --i;
      if (++odo[i] < n_elems.size()) break;
      odo[i] = 0;
      if (i == 0) {
        // existence is guaranteed; reaching this is a defect
        throw std::logic_error("generating lift not found");
      }
    }
  }
}

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime_power(unsigned n, unsigned* prime) {
  if (n < 2) return false;
  auto ps = prime_divisors(n);
  if (ps.size() != 1) return false;
  if (prime) *prime = ps[0];
  return true;
}

}  // namespace genhyper
