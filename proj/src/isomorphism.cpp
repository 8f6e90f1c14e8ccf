#include "gallai/isomorphism.hpp"

#include <algorithm>
#include <bit>

#include "gallai/error.hpp"

namespace gallai {

namespace {

using Row = std::uint32_t;

struct Partition {
  std::array<Row, kMaxCanonicalOrder> cells{};
  int count = 0;
};

class Canonicalizer {
 public:
  Canonicalizer(const SmallRows& rows, int n) : rows_(rows), n_(n) {
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v) {
        const Row bu = Row{1} << u;
        const Row bv = Row{1} << v;
        if ((rows_[u] & ~bv) == (rows_[v] & ~bu)) {
          twins_[u] |= bv;
          twins_[v] |= bu;
        }
      }
  }

  void run() {
    Partition p;
    if (n_ > 0) {
      p.cells[0] = n_ == 32 ? ~Row{0} : (Row{1} << n_) - 1;
      p.count = 1;
    }
    search(p);
  }

  const SmallRows& best_rows() const { return best_; }
  const std::array<std::uint8_t, kMaxCanonicalOrder>& best_labeling() const { return best_label_; }

 private:
  // Splits every cell by neighbour count into each splitter until stable.
  // Sub-cells are ordered by count, so the result is label-invariant.
  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int s = 0; s < p.count; ++s) {
        const Row splitter = p.cells[s];
        for (int c = 0; c < p.count; ++c) {
          const Row cell = p.cells[c];
          if (std::has_single_bit(cell)) continue;
          std::array<std::uint8_t, kMaxCanonicalOrder> key{};
          int lo = 64;
          int hi = -1;
          for (Row r = cell; r; r &= r - 1) {
            const int v = std::countr_zero(r);
            const int k = std::popcount(rows_[v] & splitter);
            key[v] = static_cast<std::uint8_t>(k);
            lo = std::min(lo, k);
            hi = std::max(hi, k);
          }
          if (lo == hi) continue;
          std::array<Row, kMaxCanonicalOrder> parts{};
          int nparts = 0;
          for (int k = lo; k <= hi; ++k) {
            Row part = 0;
            for (Row r = cell; r; r &= r - 1) {
              const int v = std::countr_zero(r);
              if (key[v] == k) part |= Row{1} << v;
            }
            if (part) parts[nparts++] = part;
          }
          for (int i = p.count - 1; i > c; --i) p.cells[i + nparts - 1] = p.cells[i];
          for (int i = 0; i < nparts; ++i) p.cells[c + i] = parts[i];
          p.count += nparts - 1;
          c += nparts - 1;
          changed = true;
        }
      }
    }
  }

  void search(Partition p) {
    refine(p);
    int target = -1;
    for (int c = 0; c < p.count; ++c)
      if (!std::has_single_bit(p.cells[c])) {
        target = c;
        break;
      }
    if (target < 0) {
      leaf(p);
      return;
    }
    const Row cell = p.cells[target];
    Row tried = 0;
    for (Row r = cell; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      if (twins_[v] & tried) continue;
      tried |= Row{1} << v;
      Partition child;
      child.count = p.count + 1;
      for (int i = 0; i < target; ++i) child.cells[i] = p.cells[i];
      child.cells[target] = Row{1} << v;
      child.cells[target + 1] = cell & ~(Row{1} << v);
      for (int i = target + 1; i < p.count; ++i) child.cells[i + 1] = p.cells[i];
      search(child);
    }
  }

  void leaf(const Partition& p) {
    std::array<std::uint8_t, kMaxCanonicalOrder> label{};
    for (int i = 0; i < p.count; ++i) label[std::countr_zero(p.cells[i])] = static_cast<std::uint8_t>(i);
    SmallRows candidate{};
    for (int i = 0; i < p.count; ++i) {
      const int v = std::countr_zero(p.cells[i]);
      Row out = 0;
      for (Row r = rows_[v]; r; r &= r - 1) out |= Row{1} << label[std::countr_zero(r)];
      candidate[i] = out;
    }
    if (!have_best_ || std::lexicographical_compare(candidate.begin(), candidate.begin() + n_, best_.begin(),
                                                    best_.begin() + n_)) {
      best_ = candidate;
      best_label_ = label;
      have_best_ = true;
    }
  }

  const SmallRows& rows_;
  int n_;
  std::array<Row, kMaxCanonicalOrder> twins_{};
  SmallRows best_{};
  std::array<std::uint8_t, kMaxCanonicalOrder> best_label_{};
  bool have_best_ = false;
};

SmallRows rows_of(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder)
    throw Error(ErrorCode::SizeLimitExceeded, "canonical form limited to " + std::to_string(kMaxCanonicalOrder) + " vertices");
  SmallRows rows{};
  for (Vertex v = 0; v < g.order(); ++v) rows[static_cast<std::size_t>(v)] = static_cast<Row>(g.mask(v));
  return rows;
}

}  // namespace

SmallRows canonical_rows(const SmallRows& rows, int n, std::array<std::uint8_t, kMaxCanonicalOrder>& labeling) {
  Canonicalizer c(rows, n);
  c.run();
  labeling = c.best_labeling();
  return c.best_rows();
}

CanonicalForm canonical_form(const Graph& g) {
  const SmallRows rows = rows_of(g);
  std::array<std::uint8_t, kMaxCanonicalOrder> labeling{};
  const SmallRows canon = canonical_rows(rows, g.order(), labeling);
  CanonicalForm out;
  out.labeling.assign(labeling.begin(), labeling.begin() + g.order());
  out.rows.assign(canon.begin(), canon.begin() + g.order());
  return out;
}

Graph canonical_graph(const Graph& g) {
  const CanonicalForm form = canonical_form(g);
  return g.relabeled(form.labeling);
}

std::uint64_t pack_upper_triangle(const SmallRows& rows, int n) {
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) code = (code << 1) | ((rows[static_cast<std::size_t>(i)] >> j) & 1U);
  return code;
}

Graph unpack_upper_triangle(std::uint64_t code, int n) {
  std::vector<Edge> edges;
  int k = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((code >> --k) & 1U) edges.emplace_back(i, j);
  return Graph::from_edge_list(n, edges);
}

bool are_isomorphic(const Graph& g, const Graph& h, int max_order) {
  if (g.order() > max_order || h.order() > max_order)
    throw Error(ErrorCode::SizeLimitExceeded, "isomorphism test bounded at " + std::to_string(max_order) + " vertices");
  if (g.order() != h.order() || g.size() != h.size()) return false;
  std::vector<int> dg;
  std::vector<int> dh;
  for (Vertex v = 0; v < g.order(); ++v) {
    dg.push_back(g.degree(v));
    dh.push_back(h.degree(v));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  return canonical_form(g).rows == canonical_form(h).rows;
}

}  // namespace gallai
