#pragma once

#include <iosfwd>

#include "k3lat/dsl.hpp"

namespace k3lat {

// Text format for embedding witnesses:
//   # comment lines allowed
//   sub: <expression>
//   ambient: <expression>
//   matrix:
//   <ambient-rank rows of sub-rank integers>
// The witness is validated (Gram identity + primitivity) on load.
EmbeddingWitness read_witness(std::istream& in);
EmbeddingWitness load_witness(const std::string& path);
void write_witness(std::ostream& out, const EmbeddingWitness& w, const std::string& sub_expr,
                   const std::string& ambient_expr);

}  // namespace k3lat
