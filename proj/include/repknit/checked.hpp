#pragma once

#include <cstdint>
#include <string>

#include "repknit/error.hpp"

namespace repknit::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorCode::ArithmeticOverflow, "checked", std::to_string(a) + " + " + std::to_string(b));
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw Error(ErrorCode::ArithmeticOverflow, "checked", std::to_string(a) + " - " + std::to_string(b));
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorCode::ArithmeticOverflow, "checked", std::to_string(a) + " * " + std::to_string(b));
  return r;
}

}  // namespace repknit::checked
