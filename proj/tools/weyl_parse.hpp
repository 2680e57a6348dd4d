#pragma once

#include <string_view>

#include "mulx/affine_weyl.hpp"

namespace mulx::cli {

/// Parses a word in the CLI grammar: whitespace-separated tokens
/// s<k> | t | t- | w0 | a<k>, each with an optional ^<exp>. a<k> and w0
/// expand per their definitions at the given level. Throws parse_error with
/// the byte offset of the offending token in Error::detail.
WeylWord parse_weyl_word(std::string_view text, int level);

}  // namespace mulx::cli
