#include "catcheck/unionfind.hpp"

#include <stdexcept>

namespace catcheck {

namespace {

int find_root(std::vector<int>& parent, int x) {
  int root = x;
  while (parent[root] != root) root = parent[root];
  while (parent[x] != root) {
    int next = parent[x];
    parent[x] = root;
    x = next;
  }
  return root;
}

}  // namespace

QuotientResult union_find_quotient(
    int size, const std::vector<std::pair<int, int>>& pairs) {
  if (size < 0) throw std::out_of_range("negative size");
  std::vector<int> parent(size);
  for (int i = 0; i < size; ++i) parent[i] = i;
  for (const auto& [a, b] : pairs) {
    if (a < 0 || a >= size || b < 0 || b >= size)
      throw std::out_of_range("pair index out of range");
    const int ra = find_root(parent, a);
    const int rb = find_root(parent, b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  // Scanning ascending, a class is first met at its minimal representative,
  // so first-seen numbering equals ascending-minimal-representative order.
  QuotientResult out;
  out.projection.resize(size);
  std::vector<int> label(size, -1);
  for (int i = 0; i < size; ++i) {
    const int r = find_root(parent, i);
    if (label[r] < 0) label[r] = out.classes++;
    out.projection[i] = label[r];
  }
  return out;
}

}  // namespace catcheck
