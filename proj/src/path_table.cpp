#include "gallai/path_table.hpp"

#include <algorithm>
#include <bit>

#include "gallai/error.hpp"

namespace gallai {

SubsetPathTable::SubsetPathTable(const Graph& g, std::optional<Vertex> start) : n_(g.order()) {
  if (n_ > kMaxTableOrder)
    throw Error(ErrorCode::SizeLimitExceeded, "subset table limited to " + std::to_string(kMaxTableOrder) + " vertices");
  adj_.resize(static_cast<std::size_t>(n_));
  for (Vertex v = 0; v < n_; ++v) adj_[static_cast<std::size_t>(v)] = static_cast<Subset>(g.mask(v));
  ends_.assign(std::size_t{1} << n_, 0);
  if (n_ == 0) return;

  if (start) {
    if (*start < 0 || *start >= n_) throw Error(ErrorCode::VertexOutOfRange, "table start vertex");
    ends_[Subset{1} << *start] = Subset{1} << *start;
  } else {
    for (Vertex v = 0; v < n_; ++v) ends_[Subset{1} << v] = Subset{1} << v;
  }
  // Supersets are numerically larger, so one increasing sweep suffices.
  for (std::size_t s = 1; s < ends_.size(); ++s) {
    const Subset e = ends_[s];
    if (!e) continue;
    const Subset mask = static_cast<Subset>(s);
    max_vertices_ = std::max(max_vertices_, std::popcount(mask));
    for (Subset r = e; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      for (Subset ext = adj_[static_cast<std::size_t>(v)] & ~mask; ext; ext &= ext - 1) {
        const Subset u = ext & (~ext + 1);
        ends_[mask | u] |= u;
      }
    }
  }
}

SubsetPathTable::Subset SubsetPathTable::predecessors(Subset s, Vertex end) const {
  const Subset rest = s & ~(Subset{1} << end);
  if (!rest) return 0;
  return ends_[rest] & adj_[static_cast<std::size_t>(end)];
}

std::vector<Vertex> SubsetPathTable::trace(Subset s, Vertex end) const {
  if (!((ends_[s] >> end) & 1U)) throw Error(ErrorCode::InvalidArgument, "no path on subset ends at vertex");
  std::vector<Vertex> seq{end};
  while (std::popcount(s) > 1) {
    const Subset pred = predecessors(s, seq.back());
    s &= ~(Subset{1} << seq.back());
    seq.push_back(std::countr_zero(pred));
  }
  std::reverse(seq.begin(), seq.end());
  return seq;
}

}  // namespace gallai
