#pragma once

#include <optional>
#include <string>

#include "cdiag/diagram.hpp"

namespace cdiag {

// Diagrams of the finite types: families A (rank >= 1), B (rank >= 2),
// D (rank >= 4), E (rank 6..8), F (rank 4), G (rank 2).  Trees get the
// default orientation (small index to large); any orientation of the same
// tree is mutation-equivalent.  Throws BadParams on an unknown family or
// rank.
Diagram dynkin(char family, int rank);

// Smallest diagrams beyond finite type: each is 2-infinite while every
// proper subdiagram is 2-finite.  Families A (rank >= 2, a non-oriented
// cycle), B (rank >= 3), C (rank >= 2), D (rank >= 4), E (rank 6..8),
// F (rank 4), G (rank 2 with edge parameter 1..3), and I (rank 2 with
// pair weight >= 4).  `param` is only meaningful for G and I.  Throws
// BadParams otherwise.
Diagram affine_diagram(char family, int rank, Weight param = 1);

// Label such as "A3" or "G2" when the underlying weighted graph is one of
// the finite-type shapes, otherwise nullopt.
std::optional<std::string> dynkin_label(const Diagram& d);

// Label such as "D6(1)", "G2(1)(2)" or "I2(5)" when d matches one of the
// affine shapes: a cycle of weight-1 edges must be non-oriented to count
// as an A(1), and a two-vertex diagram matches I2(a) for weight a >= 4.
std::optional<std::string> extended_dynkin_label(const Diagram& d);

} // namespace cdiag
