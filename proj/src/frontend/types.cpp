#include "refutelint/frontend/types.h"

namespace refutelint::frontend {

std::string Type::str() const {
  switch (kind) {
    case Kind::Void: return "void";
    case Kind::Pointer: {
      std::string inner = pointee->str();
      return inner + (inner.back() == '*' ? "*" : " *");
    }
    case Kind::Integer: break;
  }
  switch (width) {
    case 1: return "_Bool";
    case 8: return is_signed ? "char" : "unsigned char";
    case 32: return is_signed ? "int" : "unsigned int";
    case 64: return is_signed ? "long" : "unsigned long";
  }
  return "<bad type>";
}

bool operator==(const Type& a, const Type& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Type::Kind::Void: return true;
    case Type::Kind::Integer: return a.width == b.width && a.is_signed == b.is_signed;
    case Type::Kind::Pointer: return *a.pointee == *b.pointee;
  }
  return false;
}

Type promote(const Type& t) {
  if (t.isInteger() && t.width < 32) return Type::intType();
  return t;
}

Type commonType(const Type& a0, const Type& b0) {
  const Type a = promote(a0);
  const Type b = promote(b0);
  if (a == b) return a;
  if (a.is_signed == b.is_signed) return a.width >= b.width ? a : b;
  const Type& u = a.is_signed ? b : a;
  const Type& s = a.is_signed ? a : b;
  // Unsigned wins at equal or higher rank; a wider signed type absorbs it.
  if (u.width >= s.width) return u;
  return s;
}

}  // namespace refutelint::frontend
