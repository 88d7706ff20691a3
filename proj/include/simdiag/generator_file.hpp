#pragma once

#include <string>
#include <vector>

#include "simdiag/permutation.hpp"

namespace simdiag {

// Generator file format:
//   degree <n>
//   (0 1 2)(3 4)        cycle notation
//   img 1 2 0 4 3       image list
//   # comment
std::vector<Permutation> parse_generator_file(const std::string& path);
std::vector<Permutation> parse_generator_text(const std::string& text,
                                              const std::string& origin = "<text>");

}  // namespace simdiag
