#ifndef LF2HH_HOHH_TYPE_HPP
#define LF2HH_HOHH_TYPE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace lf2hh::hohh {

enum class TypeKind : std::uint8_t { lf_obj, lf_type, prop, arrow };

class SimpleType {
 public:
  SimpleType() = default;

  TypeKind kind() const;
  bool is(TypeKind k) const { return node_ && kind() == k; }
  explicit operator bool() const { return node_ != nullptr; }
  const SimpleType& domain() const;
  const SimpleType& codomain() const;

  friend bool operator==(const SimpleType& a, const SimpleType& b);

  friend SimpleType lf_obj();
  friend SimpleType lf_type();
  friend SimpleType prop();
  friend SimpleType arrow(SimpleType a, SimpleType b);

 private:
  struct Node;
  explicit SimpleType(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

SimpleType lf_obj();
SimpleType lf_type();
SimpleType prop();
SimpleType arrow(SimpleType a, SimpleType b);
// a1 -> ... -> an -> result
SimpleType arrows(const std::vector<SimpleType>& args, SimpleType result);

// Number of leading arrows.
std::size_t arity(const SimpleType& t);
// Argument types and final target of an arrow chain.
std::vector<SimpleType> arg_types(const SimpleType& t);
SimpleType target(const SimpleType& t);

// True when `o` occurs to the left of an arrow anywhere in `t`.
bool prop_in_argument(const SimpleType& t);

// `lf-obj -> lf-type`, with parentheses on arrow arguments.
std::string to_string(const SimpleType& t);

}  // namespace lf2hh::hohh

#endif  // LF2HH_HOHH_TYPE_HPP
