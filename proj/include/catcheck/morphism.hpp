#pragma once

#include <vector>

#include "catcheck/instance.hpp"

namespace catcheck {

// A morphism in one of the shipped instances.  `data` is a total function
// table of length |dom| (finset/pfinset, entries < |cod|, pfinset sends 0 to
// 0) or a row-major |cod| x |dom| matrix over F_p (finvect).
struct Morphism {
  ObjHandle dom;
  ObjHandle cod;
  std::vector<int> data;

  const Instance& inst() const { return dom.inst; }
  friend bool operator==(const Morphism&, const Morphism&) = default;
};

// Builds and validates; throws std::invalid_argument on ill-typed data.
Morphism make_morphism(const Instance& inst, int dom, int cod,
                       std::vector<int> data);

void validate_morphism(const Morphism& m);
bool morphism_is_valid(const Morphism& m);

}  // namespace catcheck
