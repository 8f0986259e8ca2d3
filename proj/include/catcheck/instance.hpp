#pragma once

#include <stdexcept>
#include <string>

namespace catcheck {

enum class Kind { finset, finvect, pfinset };

// A concrete category: the kind plus, for finvect, the prime of the base
// field.  prime is normalized to 0 for the other kinds so that default
// equality compares tags correctly.
struct Instance {
  Kind kind = Kind::finset;
  int prime = 0;
  friend bool operator==(const Instance&, const Instance&) = default;
};

Instance finset();
Instance finvect(int prime = 2);
Instance pfinset();

bool is_prime(int p);
std::string instance_name(const Instance& inst);
Instance parse_instance(const std::string& name, int prime = 2);

// Skeletal object handle: cardinality (finset/pfinset) or dimension
// (finvect).  Two handles are equal iff tags and payloads are equal.
struct ObjHandle {
  Instance inst;
  int size = 0;
  friend bool operator==(const ObjHandle&, const ObjHandle&) = default;
};

ObjHandle obj(const Instance& inst, int size);

// Global facts an instance guarantees.  Used for suite selection and report
// annotation; the suites re-verify everything they rely on.
struct CapabilityRecord {
  bool pointed = false;
  bool epi_is_regular = false;
  bool strict_initial = false;
  bool additive = false;
};

CapabilityRecord instance_card(const Instance& inst);

}  // namespace catcheck
