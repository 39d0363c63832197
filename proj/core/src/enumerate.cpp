#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "drunkcop/generators.hpp"

namespace drunkcop {
namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw GeneratorError("exhaustive enumeration supports 1 <= n <= " +
                         std::to_string(kMaxEnumerationOrder));
  }
}

constexpr int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }

// Each task covers this many consecutive masks.
constexpr std::uint64_t kChunk = 1 << 14;

}  // namespace

std::uint64_t edge_mask_count(int n) {
  check_order(n);
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

bool mask_is_connected(int n, std::uint64_t mask) {
  std::uint32_t adj[kMaxEnumerationOrder] = {};
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (mask >> pair_bit(i, j) & 1) {
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
      }
    }
  }
  const std::uint32_t all = (1u << n) - 1;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) {
      next |= adj[std::countr_zero(f)];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (mask >> pair_bit(i, j) & 1) edges.push_back({i, j});
    }
  }
  return Graph::build(n, edges);
}

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn) {
  const std::uint64_t total = edge_mask_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (mask_is_connected(n, mask)) fn(graph_from_mask(n, mask));
  }
}

void for_each_connected_graph_parallel(
    int n, int workers, const std::function<void(int, const Graph&)>& fn) {
  const std::uint64_t total = edge_mask_count(n);
  if (workers <= 1) {
    for_each_connected_graph(n, [&](const Graph& g) { fn(0, g); });
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto run = [&](int worker) {
    for (;;) {
      const std::uint64_t start = next.fetch_add(kChunk);
      if (start >= total) return;
      const std::uint64_t stop = std::min(total, start + kChunk);
      for (std::uint64_t mask = start; mask < stop; ++mask) {
        if (mask_is_connected(n, mask)) fn(worker, graph_from_mask(n, mask));
      }
    }
  };
  auto body = [&](int worker) {
    try {
      run(worker);
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      next.store(total);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(body, w);
  }
  if (failure) std::rethrow_exception(failure);
}

std::uint64_t count_connected_graphs(int n) {
  const std::uint64_t total = edge_mask_count(n);
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    count += mask_is_connected(n, mask);
  }
  return count;
}

}  // namespace drunkcop
