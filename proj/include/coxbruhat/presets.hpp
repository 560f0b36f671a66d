#pragma once

#include <string>
#include <string_view>

#include "coxbruhat/core.hpp"

namespace coxbruhat {

// Finite and affine Coxeter systems with generators named s1..sn.
// Labelling follows Bourbaki: B_n has m(s_{n-1}, s_n) = 4, D_n branches at
// s_{n-2}, F4 is 3-4-3, H3/H4 put the 5 between s1 and s2.

CoxeterSystem type_a(int n, int length_cap = kDefaultLengthCap);
CoxeterSystem type_b(int n, int length_cap = kDefaultLengthCap);
CoxeterSystem type_d(int n, int length_cap = kDefaultLengthCap);
CoxeterSystem type_f4(int length_cap = kDefaultLengthCap);
CoxeterSystem type_h(int n, int length_cap = kDefaultLengthCap);
/// Dihedral group of order 2m; m = kInfinity gives the infinite dihedral group.
CoxeterSystem type_i2(int m, int length_cap = kDefaultLengthCap);
/// Affine type A~_n (n >= 1): a cycle of n+1 generators; A~_1 is I2(infinity).
CoxeterSystem type_affine_a(int n, int length_cap = kDefaultLengthCap);

/// Parses "A3", "B3", "D4", "F4", "H3", "H4", "I2:5", "I2:inf", "affA2".
/// Throws InvalidCoxeterMatrix on an unknown or malformed type.
CoxeterSystem system_from_type(std::string_view type, int length_cap = kDefaultLengthCap);

/// Reduced word (generator i = transposition (i+1, i+2)) of the permutation
/// with the given one-line notation, e.g. {4,2,3,1} -> s1 s2 s3 s2 s1.
/// Throws InvalidWord if the input is not a permutation of 1..n.
Word permutation_word(const std::vector<int>& one_line);

/// Matrix file schema: {"generators": [...], "m": [[...], ...]}, 0 = infinity.
CoxeterSystem system_from_json(std::string_view json_text, int length_cap = kDefaultLengthCap);
std::string system_to_json(const CoxeterSystem& sys);

} // namespace coxbruhat
