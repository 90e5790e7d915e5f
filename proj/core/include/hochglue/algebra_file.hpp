#pragma once

#include <string>
#include <string_view>

#include "hochglue/algebra.hpp"

namespace hochglue {

//! Line-oriented format:
//!   field Q | field F <p>
//!   vertex <name>
//!   arrow <name> <source> <target>
//!   rel <arrow> <arrow> ...     (traversal order: first-traversed arrow first)
//!   # comment
//! Throws ParseError with line and column.
MonomialAlgebra parse_algebra(std::string_view text, BuildOptions options = {});
std::string print_algebra(const MonomialAlgebra& a);
MonomialAlgebra load_algebra(const std::string& file, BuildOptions options = {});

}  // namespace hochglue
