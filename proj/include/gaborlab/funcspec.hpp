// SPDX-License-Identifier: Apache-2.0
//
// Function spec mini-language used by the CLI and reports:
//   chi:<e1,e2,...>   indicator of the listed elements
//   delta:<e>         indicator of one element
//   const:1           the constant 1 (chi_G)
//   random:dense      dense complex gaussian draw
//   random:sparse<k>  k-sparse draw
//   [[re,im],...]     inline JSON array of values
//   @path or a path   JSON file with such an array

#pragma once

#include <string>

#include "gaborlab/fourier.hpp"

namespace gaborlab {

struct ParsedFunction {
  GroupFunction fn;
  std::string canonical_spec;
};

ParsedFunction parse_function_spec(const std::string& spec, const FiniteGroup& g, Rng& rng);

}  // namespace gaborlab
