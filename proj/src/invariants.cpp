#include "geoconv/invariants.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace geoconv {
namespace {

// Calls pred on every subset of `pool` of size k, in lexicographic order,
// each OR-ed with `base`. Returns the first accepted set.
template <typename Pred>
std::optional<Mask> first_subset(Mask base, Mask pool, int k, Pred&& pred) {
  std::vector<int> items;
  for_each_bit(pool, [&](int v) { items.push_back(v); });
  const int p = static_cast<int>(items.size());
  if (k < 0 || k > p) return std::nullopt;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask s = base;
    for (int i : idx) s |= bit(items[i]);
    if (pred(s)) return s;
    int i = k - 1;
    while (i >= 0 && idx[i] == p - k + i) --i;
    if (i < 0) return std::nullopt;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

template <typename Pred>
SetResult least_superset(int n, Mask mandatory, Pred&& pred) {
  const Mask pool = full_mask(n) & ~mandatory;
  for (int extra = 0; extra <= popcount(pool); ++extra) {
    if (auto s = first_subset(mandatory, pool, extra, pred))
      return {popcount(*s), VertexSet(n, *s)};
  }
  throw Error("no spanning set found; the vertex set itself should qualify");
}

Mask extreme_mask(const Digraph& d) { return extreme_vertices(d).bits(); }

}  // namespace

SetResult geodetic_number(const IntervalTable& table, Mask extreme) {
  const Mask all = full_mask(table.order());
  return least_superset(table.order(), extreme,
                        [&](Mask s) { return table.of_set(s) == all; });
}

SetResult geodetic_number(const Digraph& d) {
  return geodetic_number(IntervalTable(d), extreme_mask(d));
}

SetResult hull_number(const IntervalTable& table, Mask extreme) {
  const Mask all = full_mask(table.order());
  return least_superset(table.order(), extreme,
                        [&](Mask s) { return table.hull(s) == all; });
}

SetResult hull_number(const Digraph& d) {
  return hull_number(IntervalTable(d), extreme_mask(d));
}

SetResult convexity_number(const IntervalTable& table, Mask extreme) {
  const int n = table.order();
  if (n < 2)
    throw PreconditionError("convexity number needs at least 2 vertices");
  if (extreme != 0) {
    // V - v is convex iff v is extreme; the lexicographically least such set
    // drops the largest extreme vertex.
    const int v = 63 - std::countl_zero(extreme);
    return {n - 1, VertexSet(n, full_mask(n) & ~bit(v))};
  }
  for (int size = n - 1; size >= 1; --size) {
    if (auto s = first_subset(0, full_mask(n), size,
                              [&](Mask m) { return table.convex(m); }))
      return {size, VertexSet(n, *s)};
  }
  throw Error("no convex singleton found; singletons are always convex");
}

SetResult convexity_number(const Digraph& d) {
  if (d.order() < 2)
    throw PreconditionError("convexity number needs at least 2 vertices");
  return convexity_number(IntervalTable(d), extreme_mask(d));
}

DigraphInvariants digraph_invariants(const Digraph& d) {
  const IntervalTable table(d);
  const Mask extreme = extreme_mask(d);
  DigraphInvariants out{geodetic_number(table, extreme),
                        hull_number(table, extreme), {}};
  if (d.order() >= 2) out.convexity = convexity_number(table, extreme);
  return out;
}

namespace {

void take_min(Extremum& best, int value, std::uint64_t mask, bool& first) {
  if (first || value < best.value || (value == best.value && mask < best.mask))
    best = {value, mask};
}
void take_max(Extremum& best, int value, std::uint64_t mask, bool& first) {
  if (first || value > best.value || (value == best.value && mask < best.mask))
    best = {value, mask};
}

struct Partial {
  OrientableNumbers numbers;
  bool empty = true;
};

void absorb(Partial& into, int g, int h, int con, std::uint64_t mask) {
  bool first = into.empty;
  auto& r = into.numbers;
  take_min(r.g_min, g, mask, first);
  take_max(r.g_max, g, mask, first);
  take_min(r.h_min, h, mask, first);
  take_max(r.h_max, h, mask, first);
  take_min(r.con_min, con, mask, first);
  take_max(r.con_max, con, mask, first);
  into.empty = false;
  ++r.orientations;
}

void merge(Partial& into, const Partial& other) {
  if (other.empty) return;
  if (into.empty) {
    into = other;
    return;
  }
  auto& a = into.numbers;
  const auto& b = other.numbers;
  bool first = false;
  take_min(a.g_min, b.g_min.value, b.g_min.mask, first);
  take_max(a.g_max, b.g_max.value, b.g_max.mask, first);
  take_min(a.h_min, b.h_min.value, b.h_min.mask, first);
  take_max(a.h_max, b.h_max.value, b.h_max.mask, first);
  take_min(a.con_min, b.con_min.value, b.con_min.mask, first);
  take_max(a.con_max, b.con_max.value, b.con_max.mask, first);
  a.orientations += b.orientations;
}

}  // namespace

OrientableNumbers orientable_numbers(const Graph& g, OrientableOptions options) {
  if (g.order() < 3)
    throw PreconditionError("orientable numbers need at least 3 vertices");
  if (!is_connected(g))
    throw PreconditionError("orientable numbers need a connected graph");
  const OrientationSpace space(g, options.enumeration);

  auto scan = [&](std::uint64_t begin, std::uint64_t end, Partial& out) {
    space.for_each(begin, end, [&](std::uint64_t mask, const Digraph& d) {
      const IntervalTable table(d);
      const Mask extreme = extreme_mask(d);
      absorb(out, geodetic_number(table, extreme).value,
             hull_number(table, extreme).value,
             convexity_number(table, extreme).value, mask);
    });
  };

  const std::uint64_t total = space.size();
  const int workers = static_cast<int>(std::clamp<std::uint64_t>(
      static_cast<std::uint64_t>(std::max(1, options.workers)), 1, total));
  std::vector<Partial> parts(workers);
  if (workers == 1) {
    scan(0, total, parts[0]);
  } else {
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min(total, chunk * w);
      const std::uint64_t end = std::min(total, begin + chunk);
      threads.emplace_back([&, begin, end, w] { scan(begin, end, parts[w]); });
    }
    for (auto& t : threads) t.join();
  }
  Partial result;
  for (const Partial& p : parts) merge(result, p);
  return result.numbers;
}

}  // namespace geoconv
