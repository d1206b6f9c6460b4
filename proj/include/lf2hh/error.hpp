#ifndef LF2HH_ERROR_HPP
#define LF2HH_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lf2hh {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// lf-core
class SortError : public Error {
 public:
  using Error::Error;
};
class NonTerminationGuard : public Error {
 public:
  using Error::Error;
};
class ClassifierError : public Error {
 public:
  using Error::Error;
};
class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(const std::string& name)
      : Error("unbound variable '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// hohh-core / translator / extractor
class CanonicityError : public Error {
 public:
  using Error::Error;
};
class GrammarError : public Error {
 public:
  using Error::Error;
};
class SimpleTypeError : public Error {
 public:
  using Error::Error;
};
class DecodeError : public Error {
 public:
  using Error::Error;
};

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, SourcePos pos)
      : Error(std::to_string(pos.line) + ":" + std::to_string(pos.column) +
              ": " + message),
        pos_(pos) {}
  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

}  // namespace lf2hh

#endif  // LF2HH_ERROR_HPP
