#ifndef GENHYPER_PERM_HPP
#define GENHYPER_PERM_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace genhyper {

// Permutation of {0..degree-1}, stored as the image table.
//
// Composition is left-to-right throughout: (a * b)[p] == b[a[p]],
// i.e. a acts first. Cycle notation in text is 1-based.
class Perm {
 public:
  Perm() = default;
  static Perm identity(unsigned degree);
  explicit Perm(std::vector<unsigned> images);  // validates bijection

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  unsigned operator[](unsigned p) const { return images_[p]; }
  const std::vector<unsigned>& images() const { return images_; }

  Perm operator*(const Perm& b) const;  // this, then b
  Perm inverse() const;
  bool is_identity() const;
  unsigned order() const;  // least k >= 1 with a^k = identity

  bool operator==(const Perm& o) const { return images_ == o.images_; }
  bool operator!=(const Perm& o) const { return images_ != o.images_; }
  bool operator<(const Perm& o) const { return images_ < o.images_; }

  // Disjoint-cycle form, 1-based, e.g. "(1,2)(3,4)"; "()" for the identity.
  std::string cycle_string() const;

  std::size_t hash() const;

 private:
  std::vector<unsigned> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

// Parses a product of parenthesized cycles of 1-based points, e.g.
// "(2,3,4,5)" or "(1,2)(3,4)". "()" is the identity. Points absent from
// all cycles are fixed. A point may appear at most once in the whole
// expression. Throws ParseError with the byte offset of the problem.
Perm parse_cycles(const std::string& text, unsigned degree);

}  // namespace genhyper

#endif  // GENHYPER_PERM_HPP
