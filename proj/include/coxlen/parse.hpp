#pragma once

// Text formats shared by the command line and the Python module.
//
//   vector   "(-3,-2,1)", "[1,0,-1]" or "1/2,-1/2"
//   window   "[4,2,0]"
//   word     "s1 s2 s1", "1 2 1" or "s_{1} s_{2}"; empty means identity
//   element  items joined by ';' and multiplied left to right:
//              lambda=v        translation by v (ambient coordinates)
//              coroot=c        translation by sum c_i alpha_i^vee
//              word=w          linear part given by a word
//              refl(i,j)       reflection in <x, beta_i> = j, beta_i the
//                              i-th positive root (1-based, canonical order)
//              identity

#include <string_view>
#include <vector>

#include "coxlen/affgroup.hpp"
#include "coxlen/affsym.hpp"
#include "coxlen/linalg.hpp"
#include "coxlen/rootsys.hpp"

namespace coxlen {

Vector parse_vector(std::string_view text);
IntVector parse_int_vector(std::string_view text);
Window parse_window(std::string_view text);
std::vector<int> parse_word(const RootSystem& rs, std::string_view text);
/// Parses and validates; throws ParseError on malformed or invalid input.
AffineElement parse_element(const RootSystem& rs, std::string_view text);

}  // namespace coxlen
