#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "strsolve/unicode.hpp"

namespace strsolve {

/// Concrete value of a string or integer variable.
using Value = std::variant<Word, std::int64_t>;

inline bool is_string(const Value& v) { return std::holds_alternative<Word>(v); }
inline const Word& as_string(const Value& v) { return std::get<Word>(v); }
inline std::int64_t as_int(const Value& v) { return std::get<std::int64_t>(v); }

}  // namespace strsolve
