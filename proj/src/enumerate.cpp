#include "gallai/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>

#include "gallai/error.hpp"
#include "gallai/isomorphism.hpp"

namespace gallai {

namespace {

SmallRows unpack_rows(std::uint64_t code, int n) {
  SmallRows rows{};
  int k = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((code >> --k) & 1U) {
        rows[static_cast<std::size_t>(i)] |= 1U << j;
        rows[static_cast<std::size_t>(j)] |= 1U << i;
      }
  return rows;
}

std::vector<std::uint64_t> extend(const std::vector<std::uint64_t>& smaller, int n) {
  const int prev = n - 1;
  std::vector<std::uint64_t> out;
  out.reserve(smaller.size() * 8);
  std::array<std::uint8_t, kMaxCanonicalOrder> labeling{};
  for (std::uint64_t code : smaller) {
    const SmallRows base = unpack_rows(code, prev);
    for (std::uint32_t nb = 1; nb < (1U << prev); ++nb) {
      SmallRows rows = base;
      rows[static_cast<std::size_t>(prev)] = nb;
      for (std::uint32_t r = nb; r; r &= r - 1) rows[static_cast<std::size_t>(std::countr_zero(r))] |= 1U << prev;
      out.push_back(pack_upper_triangle(canonical_rows(rows, n, labeling), n));
    }
    // Keep the working set bounded.
    if (out.size() > (1U << 22)) {
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<std::uint64_t> enumerate_connected_codes(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "order must be positive");
  if (n > kMaxBuiltinOrder)
    throw Error(ErrorCode::SizeLimitExceeded, "builtin enumerator stops at n=" + std::to_string(kMaxBuiltinOrder) +
                                                  "; feed larger orders as graph6");
  static std::mutex lock;
  static std::map<int, std::vector<std::uint64_t>> cache{{1, {0}}};
  std::lock_guard guard(lock);
  for (int k = 2; k <= n; ++k)
    if (!cache.contains(k)) cache[k] = extend(cache[k - 1], k);
  return cache[n];
}

Graph decode_graph(std::uint64_t code, int n) { return unpack_upper_triangle(code, n); }

std::vector<Graph> builtin_enumerate_connected(int n) {
  std::vector<Graph> out;
  for (std::uint64_t code : enumerate_connected_codes(n)) out.push_back(decode_graph(code, n));
  return out;
}

}  // namespace gallai
