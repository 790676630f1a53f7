#include "genhyper/dirichlet.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "genhyper/error.hpp"

namespace genhyper {

BigRational DirichletPolynomial::evaluate(unsigned t) const {
  BigRational sum = 0;
  for (const auto& [n, an] : terms) {
    BigRational term(BigInt(an), int_pow(BigInt(n), t));
    term.canonicalize();
    sum += term;
  }
  return sum;
}

BigRational p_gen_exact(const EulerianSequence& seq, unsigned t) {
  if (t < 1) throw InvalidInput("t must be a positive integer");
  return DirichletPolynomial::from(seq).evaluate(t);
}

namespace {

// Counts generating t-tuples with first coordinate in [lo, hi).
std::uint64_t count_range(const FiniteGroup& g, unsigned t, unsigned lo,
                          unsigned hi) {
  const unsigned n = g.order();
  GenCache cache(g, t);
  std::uint64_t count = 0;
  std::vector<ElemIdx> tuple(t, 0);
  for (unsigned first = lo; first < hi; ++first) {
    tuple[0] = static_cast<ElemIdx>(first);
    std::fill(tuple.begin() + 1, tuple.end(), static_cast<ElemIdx>(0));
    for (;;) {
      if (cache.generates(tuple)) ++count;
      unsigned i = t;
      bool done = true;
      while (i > 1) {
        --i;
        if (++tuple[i] < n) {
          done = false;
          break;
        }
        tuple[i] = 0;
      }
      if (done) break;
    }
  }
  return count;
}

}  // namespace

BigRational p_gen_bruteforce(const FiniteGroup& g, unsigned t,
                             std::uint64_t tuple_cap, unsigned jobs) {
  if (t < 1) throw InvalidInput("t must be a positive integer");
  const unsigned n = g.order();
  BigInt total = int_pow(BigInt(n), t);
  if (total > BigInt(static_cast<unsigned long>(tuple_cap)))
    throw BudgetError("|G|^t = " + to_string(total) + " exceeds tuple cap of " +
                      std::to_string(tuple_cap));

  std::uint64_t count = 0;
  if (jobs <= 1 || n < 2 * jobs) {
    count = count_range(g, t, 0, n);
  } else {
    std::vector<std::uint64_t> partial(jobs, 0);
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      unsigned lo = static_cast<unsigned>(std::uint64_t(n) * w / jobs);
      unsigned hi = static_cast<unsigned>(std::uint64_t(n) * (w + 1) / jobs);
      workers.emplace_back(
          [&g, t, lo, hi, &partial, w] { partial[w] = count_range(g, t, lo, hi); });
    }
    for (auto& th : workers) th.join();
    count = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
  }

  BigRational p(BigInt(static_cast<unsigned long>(count)), total);
  p.canonicalize();
  return p;
}

EulerianSequence recover_a_from_P(const std::vector<BigRational>& P,
                                  unsigned recover_cap) {
  const unsigned m = static_cast<unsigned>(P.size());
  if (m < 1) throw InvalidInput("need at least one probability value");
  if (m > recover_cap)
    throw BudgetError("system size " + std::to_string(m) +
                      " exceeds recovery cap of " + std::to_string(recover_cap));

  // clear denominators: row i gets multiplied by L^i, L = lcm(1..m)
  const BigInt L = lcm_upto(m);
  std::vector<std::vector<BigInt>> A(m, std::vector<BigInt>(m + 1));
  BigInt Li = 1;
  for (unsigned i = 0; i < m; ++i) {
    Li *= L;
    for (unsigned j = 0; j < m; ++j) A[i][j] = int_pow(L / BigInt(j + 1), i + 1);
    BigRational rhs = P[i] * BigRational(Li);
    rhs.canonicalize();
    if (!is_integer(rhs))
      throw InvalidInput(
          "probability values are incompatible with a group of order " +
          std::to_string(m));
    A[i][m] = rhs.get_num();
  }

  // fraction-free elimination; the coefficient matrix is a generalized
  // Vandermonde matrix with distinct positive nodes, so pivots never vanish
  BigInt prev = 1;
  for (unsigned k = 0; k < m; ++k) {
    if (A[k][k] == 0) throw std::logic_error("unexpected zero pivot");
    for (unsigned i = k + 1; i < m; ++i) {
      for (unsigned j = k + 1; j <= m; ++j) {
        BigInt num = A[k][k] * A[i][j] - A[i][k] * A[k][j];
        mpz_divexact(A[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      A[i][k] = 0;
    }
    prev = A[k][k];
  }

  std::vector<BigRational> x(m);
  for (unsigned i = m; i-- > 0;) {
    BigRational acc(A[i][m]);
    for (unsigned j = i + 1; j < m; ++j) acc -= BigRational(A[i][j]) * x[j];
    x[i] = acc / BigRational(A[i][i]);
    x[i].canonicalize();
    if (!is_integer(x[i]))
      throw InvalidInput(
          "recovered coefficients are not integers; the input is not the "
          "probability sequence of a group of order " +
          std::to_string(m));
  }

  EulerianSequence seq;
  seq.group_order = m;
  for (unsigned j = 0; j < m; ++j) {
    BigInt num = x[j].get_num();
    if (num == 0) continue;
    if (!num.fits_slong_p())
      throw InvalidInput("recovered coefficient overflows");
    seq.a[j + 1] = num.get_si();
  }
  return seq;
}

bool detect_p_solvable(const EulerianSequence& seq, unsigned p) {
  const unsigned m = seq.group_order;
  for (std::uint64_t pc = p; pc <= m; pc *= p) {
    for (unsigned d = 1; pc * d <= m; ++d) {
      if (d % p == 0) continue;
      if (seq.at(static_cast<unsigned>(pc * d)) !=
          seq.at(static_cast<unsigned>(pc)) * seq.at(d))
        return false;
    }
  }
  return true;
}

bool detect_solvable(const EulerianSequence& seq) {
  const unsigned m = seq.group_order;
  for (unsigned r = 2; r <= m; ++r) {
    for (unsigned s = r + 1; r * s <= m && s <= m; ++s) {
      if (std::gcd(r, s) != 1) continue;
      if (seq.at(r * s) != seq.at(r) * seq.at(s)) return false;
    }
  }
  return true;
}

bool same_sequence(const EulerianSequence& x, const EulerianSequence& y) {
  if (x.group_order != y.group_order) return false;
  for (const auto& [n, v] : x.a)
    if (y.at(n) != v) return false;
  for (const auto& [n, v] : y.a)
    if (x.at(n) != v) return false;
  return true;
}

}  // namespace genhyper
