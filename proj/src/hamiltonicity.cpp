#include "gallai/hamiltonicity.hpp"

#include <algorithm>
#include <bit>

#include "gallai/blocks.hpp"
#include "gallai/error.hpp"
#include "gallai/fixtures.hpp"
#include "gallai/isomorphism.hpp"
#include "gallai/path_table.hpp"

namespace gallai {

namespace {

void check_bound(const Graph& g, int max_order) {
  if (g.order() > std::min(max_order, kMaxTableOrder))
    throw Error(ErrorCode::SizeLimitExceeded, "Hamiltonicity bound is " + std::to_string(max_order) + " vertices");
}

}  // namespace

std::optional<std::vector<Vertex>> hamiltonian_cycle(const Graph& g, int max_order) {
  check_bound(g, max_order);
  if (g.order() < 3) return std::nullopt;
  const SubsetPathTable table(g, Vertex{0});
  const auto all = static_cast<SubsetPathTable::Subset>(full_mask(g.order()));
  const auto closing = table.ends(all) & static_cast<SubsetPathTable::Subset>(g.mask(0));
  if (!closing) return std::nullopt;
  return table.trace(all, std::countr_zero(closing));
}

std::optional<VertexPath> hamiltonian_path(const Graph& g, int max_order) {
  check_bound(g, max_order);
  if (g.order() == 0) return std::nullopt;
  const SubsetPathTable table(g);
  const auto all = static_cast<SubsetPathTable::Subset>(full_mask(g.order()));
  const auto ends = table.ends(all);
  if (!ends) return std::nullopt;
  return VertexPath(table.trace(all, std::countr_zero(ends)));
}

bool is_hamiltonian(const Graph& g, int max_order) { return hamiltonian_cycle(g, max_order).has_value(); }
bool is_traceable(const Graph& g, int max_order) { return hamiltonian_path(g, max_order).has_value(); }

HamiltonicityVerdict decide_hamiltonicity(const Graph& g, int max_order) {
  HamiltonicityVerdict v;
  v.cycle = hamiltonian_cycle(g, max_order);
  v.hamiltonian = v.cycle.has_value();
  if (v.hamiltonian) {
    v.path = VertexPath(*v.cycle);
  } else {
    v.path = hamiltonian_path(g, max_order);
  }
  v.traceable = v.path.has_value();
  return v;
}

std::string_view to_string(Theorem4Verdict v) {
  switch (v) {
    case Theorem4Verdict::NotInClass: return "NotInClass";
    case Theorem4Verdict::Hamiltonian: return "Hamiltonian";
    case Theorem4Verdict::IsoH1: return "IsoH1";
    case Theorem4Verdict::IsoH2: return "IsoH2";
    case Theorem4Verdict::Counterexample: return "COUNTEREXAMPLE";
  }
  return "?";
}

Theorem4Verdict check_theorem4_instance(const Graph& g) {
  if (!is_two_connected(g) || !is_pair_free(g, PatternName::K1_3, PatternName::Z3)) return Theorem4Verdict::NotInClass;
  if (is_hamiltonian(g)) return Theorem4Verdict::Hamiltonian;
  if (g.order() <= kDefaultIsomorphismBound) {
    if (are_isomorphic(g, h1_graph())) return Theorem4Verdict::IsoH1;
    if (are_isomorphic(g, h2_graph())) return Theorem4Verdict::IsoH2;
  }
  return Theorem4Verdict::Counterexample;
}

std::string_view to_string(TraceabilityVerdict v) {
  switch (v) {
    case TraceabilityVerdict::NotInClass: return "NotInClass";
    case TraceabilityVerdict::Traceable: return "Traceable";
    case TraceabilityVerdict::Counterexample: return "COUNTEREXAMPLE";
  }
  return "?";
}

TraceabilityVerdict check_traceability_pair_instance(const Graph& g, PatternName s) {
  const auto allowed = traceable_pair_patterns();
  if (std::find(allowed.begin(), allowed.end(), s) == allowed.end())
    throw Error(ErrorCode::InvalidArgument, std::string(to_string(s)) + " is not a traceability pair pattern");
  if (g.order() == 0 || !is_connected(g) || !is_pair_free(g, PatternName::K1_3, s)) return TraceabilityVerdict::NotInClass;
  return is_traceable(g) ? TraceabilityVerdict::Traceable : TraceabilityVerdict::Counterexample;
}

}  // namespace gallai
