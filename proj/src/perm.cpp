#include "genhyper/perm.hpp"

#include <algorithm>
#include <cctype>

#include "genhyper/error.hpp"

namespace genhyper {

Perm Perm::identity(unsigned degree) {
  std::vector<unsigned> img(degree);
  for (unsigned i = 0; i < degree; ++i) img[i] = i;
  return Perm(std::move(img));
}

Perm::Perm(std::vector<unsigned> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (unsigned v : images_) {
    if (v >= images_.size() || seen[v])
      throw InvalidInput("image table is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::operator*(const Perm& b) const {
  if (degree() != b.degree())
    throw InvalidInput("degree mismatch in permutation product");
  std::vector<unsigned> img(degree());
  for (unsigned p = 0; p < degree(); ++p) img[p] = b.images_[images_[p]];
  Perm r;
  r.images_ = std::move(img);
  return r;
}

Perm Perm::inverse() const {
  std::vector<unsigned> img(degree());
  for (unsigned p = 0; p < degree(); ++p) img[images_[p]] = p;
  Perm r;
  r.images_ = std::move(img);
  return r;
}

bool Perm::is_identity() const {
  for (unsigned p = 0; p < degree(); ++p)
    if (images_[p] != p) return false;
  return true;
}

unsigned Perm::order() const {
  // lcm of cycle lengths
  std::vector<bool> seen(degree(), false);
  unsigned ord = 1;
  for (unsigned p = 0; p < degree(); ++p) {
    if (seen[p]) continue;
    unsigned len = 0, q = p;
    do {
      seen[q] = true;
      q = images_[q];
      ++len;
    } while (q != p);
    unsigned a = ord, b = len;
    while (b) {
      unsigned t = a % b;
      a = b;
      b = t;
    }
    ord = ord / a * len;
  }
  return ord;
}

std::string Perm::cycle_string() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (unsigned p = 0; p < degree(); ++p) {
    if (seen[p] || images_[p] == p) {
      seen[p] = true;
      continue;
    }
    out += '(';
    unsigned q = p;
    bool first = true;
    do {
      if (!first) out += ',';
      out += std::to_string(q + 1);
      seen[q] = true;
      q = images_[q];
      first = false;
    } while (q != p);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t Perm::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (unsigned v : images_) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

Perm parse_cycles(const std::string& text, unsigned degree) {
  if (degree < 1) throw InvalidInput("degree must be at least 1");
  std::vector<unsigned> img(degree);
  for (unsigned i = 0; i < degree; ++i) img[i] = i;
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation", 0);
  bool any_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '('", i);
    ++i;
    any_cycle = true;
    std::vector<unsigned> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!cycle.empty()) {
        if (text[i] != ',') throw ParseError("expected ',' or ')'", i);
        ++i;
        skip_ws();
      }
      std::size_t start = i;
      unsigned long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned long>(text[i] - '0');
        if (v > 1000000) throw ParseError("point out of range", start);
        ++i;
      }
      if (i == start) throw ParseError("expected a point number", i);
      if (v < 1 || v > degree) throw ParseError("point out of range", start);
      unsigned p = static_cast<unsigned>(v - 1);
      if (used[p]) throw ParseError("repeated point in permutation", start);
      used[p] = true;
      cycle.push_back(p);
      skip_ws();
    }
    if (i == text.size()) throw ParseError("unterminated cycle", text.size());
    ++i;  // ')'
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k)
      img[cycle[k]] = cycle[k + 1];
    if (cycle.size() >= 2) img[cycle.back()] = cycle.front();
    skip_ws();
  }
  if (!any_cycle) throw ParseError("empty permutation", 0);
  return Perm(std::move(img));
}

}  // namespace genhyper
