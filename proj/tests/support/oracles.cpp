#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace sigmaforge::testkit {

namespace {

bool sigma_ok(const Graph& g, const std::vector<int>& part, int k) {
  const int n = g.vertex_count();
  std::vector<int> count(static_cast<std::size_t>(n * k), 0);
  for (const auto& [u, v] : g.edges()) {
    ++count[static_cast<std::size_t>(u * k + part[static_cast<std::size_t>(v)])];
    ++count[static_cast<std::size_t>(v * k + part[static_cast<std::size_t>(u)])];
  }
  for (const auto& [u, v] : g.edges()) {
    bool same = true;
    for (int i = 0; i < k && same; ++i)
      same = count[static_cast<std::size_t>(u * k + i)] == count[static_cast<std::size_t>(v * k + i)];
    if (same) return false;
  }
  return true;
}

bool has_sigma_partition(const Graph& g, int k) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  while (true) {
    if (sigma_ok(g, a, k)) return true;
    int i = n - 1;
    while (i > 0) {
      const int cap = std::min(k - 1, prefix_max[static_cast<std::size_t>(i - 1)] + 1);
      if (a[static_cast<std::size_t>(i)] < cap) break;
      --i;
    }
    if (i == 0) return false;
    ++a[static_cast<std::size_t>(i)];
    prefix_max[static_cast<std::size_t>(i)] = std::max(prefix_max[static_cast<std::size_t>(i - 1)], a[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < n; ++j) {
      a[static_cast<std::size_t>(j)] = 0;
      prefix_max[static_cast<std::size_t>(j)] = prefix_max[static_cast<std::size_t>(i)];
    }
  }
}

bool has_lucky_labeling(const Graph& g, int k) {
  const int n = g.vertex_count();
  std::vector<int> label(static_cast<std::size_t>(n), 1);
  std::vector<long long> sum(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) sum[static_cast<std::size_t>(v)] = g.degree(v);
  auto bump = [&](int v, int delta) {
    for (Vertex w : g.neighbors(v)) sum[static_cast<std::size_t>(w)] += delta;
  };
  while (true) {
    bool ok = true;
    for (const auto& [u, v] : g.edges())
      if (sum[static_cast<std::size_t>(u)] == sum[static_cast<std::size_t>(v)]) {
        ok = false;
        break;
      }
    if (ok) return true;
    int i = 0;
    while (i < n && label[static_cast<std::size_t>(i)] == k) {
      bump(i, 1 - k);
      label[static_cast<std::size_t>(i)] = 1;
      ++i;
    }
    if (i == n) return false;
    ++label[static_cast<std::size_t>(i)];
    bump(i, 1);
  }
}

bool colorable(const Graph& g, const std::vector<int>& order, std::vector<int>& color, std::size_t pos, int k) {
  if (pos == order.size()) return true;
  const int v = order[pos];
  int highest = 0;
  for (std::size_t i = 0; i < pos; ++i) highest = std::max(highest, color[static_cast<std::size_t>(order[i])]);
  for (int c = 1; c <= std::min(k, highest + 1); ++c) {
    bool clash = false;
    for (Vertex w : g.neighbors(v))
      if (color[static_cast<std::size_t>(w)] == c) clash = true;
    if (clash) continue;
    color[static_cast<std::size_t>(v)] = c;
    if (colorable(g, order, color, pos + 1, k)) return true;
    color[static_cast<std::size_t>(v)] = 0;
  }
  return false;
}

}  // namespace

std::optional<int> naive_sigma_number(const Graph& g, int max_k) {
  for (int k = 1; k <= max_k; ++k)
    if (has_sigma_partition(g, k)) return k;
  return std::nullopt;
}

std::optional<int> naive_lucky_number(const Graph& g, int max_k) {
  for (int k = 1; k <= max_k; ++k)
    if (has_lucky_labeling(g, k)) return k;
  return std::nullopt;
}

std::optional<int> naive_min_part(const Graph& g) {
  const int n = g.vertex_count();
  std::optional<int> best;
  std::vector<int> part(static_cast<std::size_t>(n));
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    for (int v = 0; v < n; ++v) part[static_cast<std::size_t>(v)] = (mask >> v) & 1u;
    if (!sigma_ok(g, part, 2)) continue;
    const int ones = std::popcount(mask);
    const int small = std::min(ones, n - ones);
    if (!best || small < *best) best = small;
  }
  return best;
}

int chromatic_number(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  for (int k = 1;; ++k) {
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    if (colorable(g, order, color, 0, k)) return k;
  }
}

}  // namespace sigmaforge::testkit
