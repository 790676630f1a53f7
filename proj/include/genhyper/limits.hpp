#ifndef GENHYPER_LIMITS_HPP
#define GENHYPER_LIMITS_HPP

#include <cstdint>

namespace genhyper {

// Per-analysis caps. Defaults keep every supported analysis at desk scale;
// all of them can be raised from the CLI config file.
struct Limits {
  unsigned degree_cap = 32;        // points, for parsed/constructed groups
  unsigned order_cap = 5000;       // group closure
  unsigned lattice_cap = 400;      // |G| for full subgroup lattice
  unsigned hypergraph_cap = 200;   // |G| for minimal generating set enumeration
  std::uint64_t tuple_cap = 10'000'000;    // |G|^t for brute-force counting
  unsigned recover_cap = 24;               // system size for coefficient recovery
  std::uint64_t mgse_budget = 100'000'000; // generation queries in the exchange scan
};

}  // namespace genhyper

#endif  // GENHYPER_LIMITS_HPP
