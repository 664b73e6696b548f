#include "geoconv/orientation.hpp"

namespace geoconv {

OrientationSpace::OrientationSpace(const Graph& g, EnumerationOptions options)
    : graph_(&g) {
  const int m = g.size();
  if (options.edge_budget < 1)
    throw Error("edge budget must be at least 1");
  if (m > options.edge_budget || m > 63) throw BudgetExceeded(m, options.edge_budget);
  symmetric_ = options.use_reversal_symmetry && m >= 1;
  size_ = std::uint64_t{1} << (symmetric_ ? m - 1 : m);
}

void OrientationSpace::for_each(
    std::uint64_t begin, std::uint64_t end,
    const std::function<void(std::uint64_t, const Digraph&)>& fn) const {
  if (end > size_) end = size_;
  for (std::uint64_t k = begin; k < end; ++k) {
    const std::uint64_t mask = mask_at(k);
    fn(mask, Digraph::orientation(*graph_, mask));
  }
}

std::vector<Digraph> enumerate_orientations(const Graph& g,
                                            EnumerationOptions options) {
  OrientationSpace space(g, options);
  std::vector<Digraph> out;
  out.reserve(space.size());
  space.for_each([&](std::uint64_t, const Digraph& d) { out.push_back(d); });
  return out;
}

}  // namespace geoconv
