#pragma once

#include <memory>
#include <string>

namespace refutelint::frontend {

/// MiniC type: void, a fixed-width integer, or a 64-bit pointer.
struct Type {
  enum class Kind { Void, Integer, Pointer };

  Kind kind = Kind::Void;
  unsigned width = 0;  // bits; 64 for pointers
  bool is_signed = false;
  std::shared_ptr<const Type> pointee;

  static Type voidType() { return {}; }
  static Type integer(unsigned width, bool is_signed) { return {Kind::Integer, width, is_signed, nullptr}; }
  static Type boolType() { return integer(1, false); }
  static Type charType() { return integer(8, true); }
  static Type intType() { return integer(32, true); }
  static Type uintType() { return integer(32, false); }
  static Type longType() { return integer(64, true); }
  static Type ulongType() { return integer(64, false); }
  static Type pointerTo(Type pointee) {
    return {Kind::Pointer, 64, false, std::make_shared<const Type>(std::move(pointee))};
  }

  bool isVoid() const { return kind == Kind::Void; }
  bool isInteger() const { return kind == Kind::Integer; }
  bool isPointer() const { return kind == Kind::Pointer; }
  bool isBool() const { return isInteger() && width == 1; }
  bool isScalar() const { return isInteger() || isPointer(); }

  /// C spelling, e.g. "unsigned int", "char *".
  std::string str() const;

  friend bool operator==(const Type& a, const Type& b);
};

/// Integer promotion: anything narrower than int becomes int.
Type promote(const Type& t);
/// Usual arithmetic conversions on two integer types.
Type commonType(const Type& a, const Type& b);

}  // namespace refutelint::frontend
