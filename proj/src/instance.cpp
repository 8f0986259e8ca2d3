#include "catcheck/instance.hpp"

namespace catcheck {

Instance finset() { return {Kind::finset, 0}; }

Instance finvect(int prime) {
  if (!is_prime(prime))
    throw std::invalid_argument("finvect prime must be a prime, got " +
                                std::to_string(prime));
  return {Kind::finvect, prime};
}

Instance pfinset() { return {Kind::pfinset, 0}; }

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string instance_name(const Instance& inst) {
  switch (inst.kind) {
    case Kind::finset: return "finset";
    case Kind::finvect: return "finvect";
    case Kind::pfinset: return "pfinset";
  }
  return "?";
}

Instance parse_instance(const std::string& name, int prime) {
  if (name == "finset") return finset();
  if (name == "finvect") return finvect(prime);
  if (name == "pfinset") return pfinset();
  throw std::invalid_argument("unknown instance: " + name);
}

ObjHandle obj(const Instance& inst, int size) {
  if (size < 0) throw std::invalid_argument("object size must be >= 0");
  if (inst.kind == Kind::pfinset && size < 1)
    throw std::invalid_argument("pointed sets have size >= 1");
  return {inst, size};
}

CapabilityRecord instance_card(const Instance& inst) {
  switch (inst.kind) {
    case Kind::finset:
      return {.pointed = false, .epi_is_regular = true,
              .strict_initial = true, .additive = false};
    case Kind::finvect:
      return {.pointed = true, .epi_is_regular = true,
              .strict_initial = false, .additive = true};
    case Kind::pfinset:
      return {.pointed = true, .epi_is_regular = true,
              .strict_initial = false, .additive = false};
  }
  return {};
}

}  // namespace catcheck
