#ifndef GENHYPER_ERROR_HPP
#define GENHYPER_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace genhyper {

// Malformed user input: cycle strings, group files, construction expressions.
// `offset` is the byte position in the offending text when known.
class ParseError : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit ParseError(const std::string& msg, std::size_t offset = npos)
      : std::runtime_error(offset == npos ? msg
                                          : msg + " (at offset " +
                                                std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A configured cap or search budget was exceeded.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// A caller violated an operation's stated precondition, or supplied
// semantically invalid data (e.g. a probability sequence that cannot
// belong to any group).
class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace genhyper

#endif  // GENHYPER_ERROR_HPP
