#ifndef SEG2TREE_ERROR_HPP
#define SEG2TREE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace seg2tree {

// Failure categories surfaced by the toolkit. CLI maps them to nonzero exits;
// tests match on the code rather than the message.
enum class Errc {
  MalformedInput,
  LeafMismatch,
  EmptyCorpus,
  LengthMismatch,
  UnknownDoc,
  OutOfRange,
  TooShort,
  EmptyInput,
  GammaOutOfRange,
  GranularityOrder,
  DocMismatch,
  UnitMismatch,
  MissingGenre,
  Io,
  Config,
};

const char* errc_name(Errc code);

class ToolkitError : public std::runtime_error {
 public:
  ToolkitError(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw ToolkitError(code, message);
}

}  // namespace seg2tree

#endif  // SEG2TREE_ERROR_HPP
