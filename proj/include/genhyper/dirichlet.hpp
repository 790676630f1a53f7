#ifndef GENHYPER_DIRICHLET_HPP
#define GENHYPER_DIRICHLET_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "genhyper/group.hpp"
#include "genhyper/lattice.hpp"
#include "genhyper/rational.hpp"

namespace genhyper {

// Finite Dirichlet polynomial sum_n terms[n] / n^t.
struct DirichletPolynomial {
  std::map<unsigned, long long> terms;

  static DirichletPolynomial from(const EulerianSequence& seq) {
    return DirichletPolynomial{seq.a};
  }
  BigRational evaluate(unsigned t) const;
};

// Value of the Dirichlet polynomial of the coefficient sequence at integer t:
// the probability that a random ordered t-tuple generates the group.
BigRational p_gen_exact(const EulerianSequence& seq, unsigned t);

// The same probability counted exhaustively over all |G|^t ordered tuples.
// Independent of the lattice route; this is the oracle side of the identity.
// Workers split the first coordinate; counts are summed, so the result does
// not depend on the worker count.
BigRational p_gen_bruteforce(const FiniteGroup& g, unsigned t,
                             std::uint64_t tuple_cap = 10'000'000,
                             unsigned jobs = 1);

// Solves the m x m system sum_j a_j / j^i = P[i-1] (i = 1..m) for integer
// coefficients a_j, by fraction-free (Bareiss) elimination after clearing
// denominators. m = P.size() and must equal the group order. A non-integral
// solution means the input is not the probability sequence of any group of
// order m; that is reported as InvalidInput.
EulerianSequence recover_a_from_P(const std::vector<BigRational>& P,
                                  unsigned recover_cap = 24);

// Multiplicativity tests on the coefficient sequence: a_{p^c d} = a_{p^c} a_d
// for gcd(d, p) = 1, and a_{rs} = a_r a_s for coprime r, s. Absent indices
// count as 0.
bool detect_p_solvable(const EulerianSequence& seq, unsigned p);
bool detect_solvable(const EulerianSequence& seq);

// Pointwise equality of coefficient sequences (zero entries normalized).
bool same_sequence(const EulerianSequence& x, const EulerianSequence& y);

}  // namespace genhyper

#endif  // GENHYPER_DIRICHLET_HPP
