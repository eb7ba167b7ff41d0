#pragma once

#include <string>
#include <string_view>

#include "uchain/complex.hpp"

namespace uchain {

// Line-oriented formats; `#` starts a comment.
//
//   complex <name>
//   gen <id> <grading>
//   d <source-id> <target-id> <polynomial>
//
//   map <name>
//   source <complex-name>
//   target <complex-name>
//   degree <int>
//   f <source-id> <target-id> <polynomial>

GradedComplex parse_complex(std::string_view text);
std::string format_complex(const GradedComplex& c);

/// Parses a map whose source and target are the given complexes. The names on
/// the `source` / `target` lines must match the complexes' names.
ChainMap parse_chain_map(std::string_view text, const GradedComplex& source,
                         const GradedComplex& target);
std::string format_chain_map(const ChainMap& f);

GradedComplex read_complex_file(const std::string& path);
ChainMap read_chain_map_file(const std::string& path, const GradedComplex& source,
                             const GradedComplex& target);

}  // namespace uchain
