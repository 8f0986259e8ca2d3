#include "catcheck/morphism.hpp"

namespace catcheck {

Morphism make_morphism(const Instance& inst, int dom, int cod,
                       std::vector<int> data) {
  Morphism m{obj(inst, dom), obj(inst, cod), std::move(data)};
  validate_morphism(m);
  return m;
}

void validate_morphism(const Morphism& m) {
  if (!(m.dom.inst == m.cod.inst))
    throw std::invalid_argument("morphism endpoints in different instances");
  const Instance& inst = m.inst();
  const int dom = m.dom.size;
  const int cod = m.cod.size;
  if (dom < 0 || cod < 0)
    throw std::invalid_argument("negative object size");

  if (inst.kind == Kind::finvect) {
    if (static_cast<long>(m.data.size()) != static_cast<long>(dom) * cod)
      throw std::invalid_argument("matrix entry count mismatch");
    for (int v : m.data)
      if (v < 0 || v >= inst.prime)
        throw std::invalid_argument("matrix entry outside field");
    return;
  }

  if (inst.kind == Kind::pfinset && (dom < 1 || cod < 1))
    throw std::invalid_argument("pointed sets have size >= 1");
  if (static_cast<int>(m.data.size()) != dom)
    throw std::invalid_argument("table length mismatch");
  for (int v : m.data)
    if (v < 0 || v >= cod)
      throw std::invalid_argument("table entry out of range");
  if (inst.kind == Kind::pfinset && dom >= 1 && m.data[0] != 0)
    throw std::invalid_argument("basepoint not preserved");
}

bool morphism_is_valid(const Morphism& m) {
  try {
    validate_morphism(m);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace catcheck
