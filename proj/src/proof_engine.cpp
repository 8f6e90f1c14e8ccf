#include "gallai/proof_engine.hpp"

#include <algorithm>
#include <array>

#include "gallai/blocks.hpp"
#include "gallai/error.hpp"
#include "gallai/graph_io.hpp"
#include "gallai/hamiltonicity.hpp"

namespace gallai {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::CertificationFailed, what); }

std::string vertex_list(VertexMask m) {
  std::string out = "{";
  for (Vertex v : mask_to_vector(m)) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

void require_in_class(const Graph& g, PatternName s) {
  if (g.order() == 0 || !is_connected(g)) throw Error(ErrorCode::NotInClass, "graph is empty or disconnected");
  if (!g.has_masks()) throw Error(ErrorCode::SizeLimitExceeded, "certificates need at most 64 vertices");
  if (!is_pair_free(g, PatternName::K1_3, s))
    throw Error(ErrorCode::NotInClass, "graph is not (K1_3, " + std::string(to_string(s)) + ")-free");
}

// Segments of one path outside the block, each listed from its attachment.
// The vertices of a path inside a block form one contiguous run, because
// leaving the block means passing a cutvertex.
std::vector<std::vector<Vertex>> segments_outside(const VertexPath& p, VertexMask block) {
  const auto& vs = p.vertices();
  std::vector<std::vector<Vertex>> out;
  std::size_t first = 0;
  while (first < vs.size() && !(block & bit(vs[first]))) ++first;
  if (first == vs.size()) return out;
  std::size_t last = vs.size() - 1;
  while (!(block & bit(vs[last]))) --last;
  if (first > 0) out.emplace_back(vs.rend() - static_cast<std::ptrdiff_t>(first) - 1, vs.rend());
  if (last + 1 < vs.size()) out.emplace_back(vs.begin() + static_cast<std::ptrdiff_t>(last), vs.end());
  return out;
}

struct DeficientPath {
  std::size_t path_id;
  std::vector<std::vector<Vertex>> segments;
  int outside = 0;  // vertices of the path outside the block
};

std::vector<DeficientPath> deficient_paths(const LongestPathReport& report, VertexMask block) {
  std::vector<DeficientPath> out;
  for (std::size_t i = 0; i < report.paths.size(); ++i) {
    const VertexMask m = report.paths[i].mask();
    if ((m & block) == block) continue;
    out.push_back({i, segments_outside(report.paths[i], block), popcount(m & ~block)});
  }
  return out;
}

bool has_two_distinct_segments(const DeficientPath& d) {
  return d.segments.size() == 2 && d.segments[0].front() != d.segments[1].front();
}

// x_p for the neighbourhood arguments. P6: the smaller attachment. Z3: the
// smaller attachment whose segment has at least two outside vertices.
std::optional<Vertex> chosen_attachment(const DeficientPath& d, ProofCase c) {
  std::optional<Vertex> best;
  for (const auto& seg : d.segments) {
    if (c == ProofCase::NeighborhoodZ3 && seg.size() < 3) continue;
    if (!best || seg.front() < *best) best = seg.front();
  }
  return best;
}

const DeficientPath* short_deficient_path(const std::vector<DeficientPath>& paths) {
  for (const auto& d : paths)
    if (d.outside == 2) return &d;
  return nullptr;
}

Vertex smaller_attachment(const DeficientPath& d) {
  Vertex x = d.segments.front().front();
  for (const auto& seg : d.segments) x = std::min(x, seg.front());
  return x;
}

Certificate block_route(const Graph& g, const std::vector<Vertex>& block, ProofCase c,
                        const LongestPathReport& report) {
  Certificate cert;
  const VertexMask bmask = vector_to_mask(block);
  cert.evidence.block = block;

  if (block.size() == 2) {
    // A cutedge xy: one endpoint is on every longest path.
    cert.route = CertificateRoute::CutedgeEndpoint;
    for (Vertex v : block) {
      const bool everywhere = std::all_of(report.paths.begin(), report.paths.end(),
                                          [v](const VertexPath& p) { return p.contains(v); });
      if (everywhere) {
        cert.vertex = v;
        return cert;
      }
    }
    fail("neither endpoint of cutedge " + vertex_list(bmask) + " lies on every longest path");
  }

  cert.route = CertificateRoute::BlockNeighborhood;
  const std::vector<DeficientPath> deficient = deficient_paths(report, bmask);
  if (deficient.empty()) {
    cert.evidence.subcase = "spanning";
    cert.vertex = block.front();
    return cert;
  }
  for (const auto& d : deficient) {
    if (!has_two_distinct_segments(d))
      fail("longest path " + std::to_string(d.path_id) + " does not have two pendent segments on block " +
           vertex_list(bmask));
  }

  if (c == ProofCase::NeighborhoodZ3) {
    if (const DeficientPath* d = short_deficient_path(deficient)) {
      const Vertex x = smaller_attachment(*d);
      const VertexMask nb = g.neighbors_in(x, bmask);
      if (!nb) fail("attachment " + std::to_string(x) + " has no neighbour in the block");
      cert.evidence.subcase = "z3-short";
      cert.evidence.attachments = {x};
      cert.evidence.neighborhood_intersection = mask_to_vector(nb);
      cert.evidence.short_path = report.paths[d->path_id];
      cert.vertex = lowest(nb);
      return cert;
    }
  }

  cert.evidence.subcase = c == ProofCase::NeighborhoodP6 ? "p6" : "z3";
  VertexMask common = bmask;
  VertexMask chosen = 0;
  for (const auto& d : deficient) {
    const std::optional<Vertex> x = chosen_attachment(d, c);
    if (!x) fail("longest path " + std::to_string(d.path_id) + " has no segment with two outside vertices");
    chosen |= bit(*x);
    common &= g.neighbors_in(*x, bmask);
  }
  cert.evidence.attachments = mask_to_vector(chosen);
  cert.evidence.neighborhood_intersection = mask_to_vector(common);
  if (!common) fail("attachment neighbourhoods " + vertex_list(chosen) + " have empty intersection");
  cert.vertex = lowest(common);
  return cert;
}

Certificate certify(const Graph& g, PatternName s, const LongestPathReport* given, const PathOptions& options) {
  require_in_class(g, s);
  const ProofCase c = proof_case_for(s);
  Certificate cert;
  cert.pair = s;
  cert.graph6 = to_graph6(g);
  const VertexMask exact = longest_path_intersection(g, options);
  const int length = given ? given->length : longest_path_length(g, options);

  if (length == g.order() - 1) {
    cert.route = CertificateRoute::Traceable;
    cert.evidence.hamiltonian_path = hamiltonian_path(g, options.dp_limit);
    if (!cert.evidence.hamiltonian_path) fail("longest path is spanning but no Hamiltonian path was traced");
    cert.vertex = 0;
  } else if (c == ProofCase::Traceable) {
    fail("connected (K1_3, " + std::string(to_string(s)) + ")-free graph is not traceable");
  } else if (c == ProofCase::Comb) {
    std::optional<CombDecomposition> comb = recognize_generalized_comb(g);
    if (!comb) fail("non-traceable (K1_3, B12)-free graph is not a generalized comb");
    cert.route = CertificateRoute::CombBase;
    cert.vertex = comb->base.front();
    cert.evidence.comb = std::move(*comb);
  } else {
    LongestPathReport local;
    if (!given) local = enumerate_longest_paths(g, options);
    const LongestPathReport& report = given ? *given : local;
    const BlockCutTree t = BlockCutTree::build(g);
    const int node = find_central_block(t, report);
    if (!t.is_block_node(node)) {
      cert.route = CertificateRoute::TreeCutvertex;
      cert.vertex = t.cutvertex_at(node);
      cert.evidence.cutvertex = cert.vertex;
    } else {
      Certificate b = block_route(g, t.block(node), c, report);
      b.pair = cert.pair;
      b.graph6 = std::move(cert.graph6);
      cert = std::move(b);
    }
  }
  if (!(exact & bit(cert.vertex)))
    fail("certified vertex " + std::to_string(cert.vertex) + " is not on every longest path (" +
         std::string(to_string(cert.route)) + ")");
  return cert;
}

constexpr std::array kRouteNames{"Traceable", "CombBase", "TreeCutvertex", "CutedgeEndpoint", "BlockNeighborhood"};

}  // namespace

std::string_view to_string(ProofCase c) {
  switch (c) {
    case ProofCase::Traceable: return "traceable";
    case ProofCase::Comb: return "comb";
    case ProofCase::NeighborhoodP6: return "p6";
    case ProofCase::NeighborhoodZ3: return "z3";
  }
  return "?";
}

ProofCase proof_case_for(PatternName s) {
  switch (s) {
    case PatternName::P4:
    case PatternName::P5:
    case PatternName::P6: return ProofCase::NeighborhoodP6;
    case PatternName::C3:
    case PatternName::Z1:
    case PatternName::Z2:
    case PatternName::Z3: return ProofCase::NeighborhoodZ3;
    case PatternName::B11:
    case PatternName::N111: return ProofCase::Traceable;
    case PatternName::B12: return ProofCase::Comb;
    default: break;
  }
  throw Error(ErrorCode::InvalidArgument, "no longest-path argument for (K1_3, " + std::string(to_string(s)) + ")");
}

std::string_view to_string(CertificateRoute r) { return kRouteNames[static_cast<std::size_t>(r)]; }

CertificateRoute parse_certificate_route(std::string_view text) {
  for (std::size_t i = 0; i < kRouteNames.size(); ++i)
    if (text == kRouteNames[i]) return static_cast<CertificateRoute>(i);
  throw Error(ErrorCode::ParseError, "unknown certificate route '" + std::string(text) + "'");
}

Certificate certified_common_vertex(const Graph& g, PatternName s, const PathOptions& options) {
  return certify(g, s, nullptr, options);
}

Certificate certified_common_vertex(const Graph& g, PatternName s, const LongestPathReport& report,
                                    const PathOptions& options) {
  return certify(g, s, &report, options);
}

Certificate block_case_certificate(const Graph& g, const std::vector<Vertex>& block, PatternName s,
                                   const LongestPathReport& report) {
  const ProofCase c = proof_case_for(s);
  if (c != ProofCase::NeighborhoodP6 && c != ProofCase::NeighborhoodZ3)
    throw Error(ErrorCode::InvalidArgument, "the block argument applies to the P6 and Z3 chains only");
  if (!g.has_masks()) throw Error(ErrorCode::SizeLimitExceeded, "certificates need at most 64 vertices");
  Certificate cert = block_route(g, block, c, report);
  cert.pair = s;
  cert.graph6 = to_graph6(g);
  return cert;
}

std::vector<PendentSegment> attachments_of(const Graph& g, const std::vector<Vertex>& block,
                                           const LongestPathReport& report) {
  const VertexMask bmask = vector_to_mask(block);
  const BlockCutTree t = BlockCutTree::build(g);
  std::vector<PendentSegment> out;
  for (const auto& d : deficient_paths(report, bmask)) {
    if (!has_two_distinct_segments(d))
      fail("longest path " + std::to_string(d.path_id) + " does not have two pendent segments");
    for (const auto& seg : d.segments) {
      if (!t.is_cutvertex(seg.front())) fail("attachment " + std::to_string(seg.front()) + " is not a cutvertex");
      out.push_back({d.path_id, seg.front(), seg});
    }
  }
  return out;
}

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::NotApplicable: return "n/a";
  }
  return "?";
}

bool ClaimReport::all_pass() const {
  return std::none_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.status == ClaimStatus::Fail; });
}

const ClaimResult& ClaimReport::claim(std::string_view name) const {
  for (const auto& c : claims)
    if (c.name == name) return c;
  throw Error(ErrorCode::InvalidArgument, "no claim named '" + std::string(name) + "'");
}

ClaimReport verify_claims(const Graph& g, const std::vector<Vertex>& block, PatternName s,
                          const LongestPathReport& report) {
  const ProofCase c = proof_case_for(s);
  if (c != ProofCase::NeighborhoodP6 && c != ProofCase::NeighborhoodZ3)
    throw Error(ErrorCode::InvalidArgument, "block claims apply to the P6 and Z3 chains only");
  const VertexMask bmask = vector_to_mask(block);
  const std::vector<DeficientPath> deficient = deficient_paths(report, bmask);
  if (deficient.empty()) throw Error(ErrorCode::NotApplicable, "every longest path covers the block");

  ClaimReport out;
  out.block = block;
  out.proof_case = c;
  out.deficient_paths = deficient.size();
  auto add = [&](std::string_view name, bool ok, std::string detail) {
    out.claims.push_back({std::string(name), ok ? ClaimStatus::Pass : ClaimStatus::Fail, std::move(detail)});
  };
  auto skip = [&](std::string_view name, std::string detail) {
    out.claims.push_back({std::string(name), ClaimStatus::NotApplicable, std::move(detail)});
  };

  const BlockCutTree t = BlockCutTree::build(g);
  const Graph b = g.induced(block);
  const auto bsize = static_cast<std::size_t>(popcount(bmask));
  const bool b_traceable = is_traceable(b);
  const bool b_hamiltonian = is_hamiltonian(b);
  const bool b_has_cutvertex = std::any_of(block.begin(), block.end(), [&](Vertex v) { return t.is_cutvertex(v); });
  {
    std::size_t need = bsize + (b_hamiltonian && b_has_cutvertex ? 1 : 0);
    const std::size_t got = static_cast<std::size_t>(report.length) + 1;
    add(kClaimPathOrder, b_traceable && got >= need,
        "longest paths have " + std::to_string(got) + " vertices, block has " + std::to_string(bsize) +
            (b_hamiltonian ? " and is Hamiltonian" : (b_traceable ? " and is traceable" : " and is not traceable")));
  }
  {
    std::string bad;
    for (const auto& d : deficient) {
      bool ok = has_two_distinct_segments(d);
      for (const auto& seg : d.segments) ok = ok && t.is_cutvertex(seg.front());
      if (!ok && bad.empty()) bad = "path " + std::to_string(d.path_id) + " fails";
    }
    add(kClaimTwoSegments, bad.empty(), bad.empty() ? std::to_string(deficient.size()) + " deficient paths" : bad);
  }
  {
    Vertex low = -1;
    for (Vertex v : block)
      if (g.degree_in(v, bmask) < 2) low = v;
    add(kClaimBlockDegree, low < 0, low < 0 ? "" : "vertex " + std::to_string(low) + " has block degree below 2");
  }
  {
    std::string bad_clique;
    std::string bad_path;
    for (const auto& d : deficient)
      for (const auto& seg : d.segments) {
        const VertexMask nb = g.neighbors_in(seg.front(), bmask);
        if (!is_clique(g, nb) && bad_clique.empty())
          bad_clique = "N_B(" + std::to_string(seg.front()) + ")=" + vertex_list(nb) + " is not a clique";
        if ((nb & report.paths[d.path_id].mask()) != nb && bad_path.empty())
          bad_path = "N_B(" + std::to_string(seg.front()) + ") leaves path " + std::to_string(d.path_id);
      }
    add(kClaimNeighborhoodClique, bad_clique.empty(), bad_clique);
    add(kClaimNeighborhoodOnPath, bad_path.empty(), bad_path);
  }

  if (c == ProofCase::NeighborhoodZ3) {
    if (const DeficientPath* d = short_deficient_path(deficient)) {
      VertexMask all = ~VertexMask{0};
      for (const auto& p : report.paths) all &= p.mask();
      const Vertex x = smaller_attachment(*d);
      const VertexMask nb = g.neighbors_in(x, bmask);
      add(kClaimShortPath, popcount(nb) >= 2 && (nb & all) == nb,
          "path " + std::to_string(d->path_id) + ", N_B(" + std::to_string(x) + ")=" + vertex_list(nb));
      skip(kClaimPairwise, "settled by the two-outside-vertex shortcut");
      skip(kClaimGlobal, "settled by the two-outside-vertex shortcut");
      return out;
    }
    skip(kClaimShortPath, "every deficient path has at least three outside vertices");
  } else {
    skip(kClaimShortPath, "P6 chain");
  }

  std::vector<std::pair<std::size_t, VertexMask>> hoods;
  std::string missing;
  for (const auto& d : deficient) {
    const std::optional<Vertex> x = chosen_attachment(d, c);
    if (!x) {
      if (missing.empty()) missing = "path " + std::to_string(d.path_id) + " has no qualifying attachment";
      continue;
    }
    hoods.emplace_back(d.path_id, g.neighbors_in(*x, bmask));
  }
  std::string bad_pair = missing;
  for (std::size_t i = 0; i < hoods.size() && bad_pair.empty(); ++i)
    for (std::size_t j = i + 1; j < hoods.size() && bad_pair.empty(); ++j)
      if (!(hoods[i].second & hoods[j].second))
        bad_pair = "paths " + std::to_string(hoods[i].first) + " and " + std::to_string(hoods[j].first);
  add(kClaimPairwise, bad_pair.empty(), bad_pair);
  VertexMask common = bmask;
  for (const auto& h : hoods) common &= h.second;
  add(kClaimGlobal, missing.empty() && common != 0, "intersection " + vertex_list(common));
  return out;
}

std::optional<ClaimReport> block_case_claims(const Graph& g, PatternName s, const LongestPathReport& report) {
  const ProofCase c = proof_case_for(s);
  if (c != ProofCase::NeighborhoodP6 && c != ProofCase::NeighborhoodZ3) return std::nullopt;
  if (!is_connected(g) || !is_pair_free(g, PatternName::K1_3, s)) return std::nullopt;
  if (report.paths.empty() || report.length == g.order() - 1) return std::nullopt;
  const BlockCutTree t = BlockCutTree::build(g);
  const int node = find_central_block(t, report);
  if (!t.is_block_node(node) || t.block(node).size() < 3) return std::nullopt;
  const VertexMask bmask = t.block_mask(node);
  const bool deficient = std::any_of(report.paths.begin(), report.paths.end(),
                                     [bmask](const VertexPath& p) { return (p.mask() & bmask) != bmask; });
  if (!deficient) return std::nullopt;
  return verify_claims(g, t.block(node), s, report);
}

CertificateCheck check_certificate(const Graph& g, const Certificate& cert, const PathOptions& options) {
  CertificateCheck out;
  auto reject = [&](std::string why) {
    out.valid = false;
    out.failures.push_back(std::move(why));
  };
  if (!cert.graph6.empty() && cert.graph6 != to_graph6(g)) reject("graph6 does not match the graph");
  if (cert.vertex < 0 || cert.vertex >= g.order()) {
    reject("certified vertex out of range");
    return out;
  }
  try {
    require_in_class(g, cert.pair);
  } catch (const Error& e) {
    reject(e.what());
    return out;
  }
  if (!(longest_path_intersection(g, options) & bit(cert.vertex)))
    reject("vertex " + std::to_string(cert.vertex) + " misses some longest path");

  const CertificateEvidence& ev = cert.evidence;
  const BlockCutTree t = BlockCutTree::build(g);
  auto is_block = [&](const std::vector<Vertex>& vs) {
    std::vector<Vertex> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    return std::find(t.blocks().begin(), t.blocks().end(), sorted) != t.blocks().end();
  };
  switch (cert.route) {
    case CertificateRoute::Traceable: {
      const auto& p = ev.hamiltonian_path;
      if (!p || !is_valid_path(g, p->vertices()) || static_cast<int>(p->vertex_count()) != g.order())
        reject("missing or invalid Hamiltonian path");
      break;
    }
    case CertificateRoute::CombBase:
      if (!ev.comb || !is_valid_comb(g, *ev.comb)) {
        reject("missing or invalid comb decomposition");
      } else if (std::find(ev.comb->base.begin(), ev.comb->base.end(), cert.vertex) == ev.comb->base.end()) {
        reject("vertex is not in the comb base");
      }
      break;
    case CertificateRoute::TreeCutvertex:
      if (!t.is_cutvertex(cert.vertex) || ev.cutvertex != cert.vertex) reject("vertex is not the recorded cutvertex");
      break;
    case CertificateRoute::CutedgeEndpoint:
      if (ev.block.size() != 2 || !is_block(ev.block)) reject("evidence block is not a cutedge of the graph");
      if (std::find(ev.block.begin(), ev.block.end(), cert.vertex) == ev.block.end())
        reject("vertex is not an endpoint of the cutedge");
      break;
    case CertificateRoute::BlockNeighborhood: {
      if (ev.block.size() < 3 || !is_block(ev.block)) {
        reject("evidence block is not a 2-connected block of the graph");
        break;
      }
      const VertexMask bmask = vector_to_mask(ev.block);
      if (ev.subcase == "spanning") {
        if (!(bmask & bit(cert.vertex))) reject("vertex is not in the block");
        if ((longest_path_intersection(g, options) & bmask) != bmask) reject("some longest path misses the block");
        break;
      }
      VertexMask common = bmask;
      for (Vertex x : ev.attachments) {
        if (x < 0 || x >= g.order() || !(bmask & bit(x)) || !t.is_cutvertex(x)) {
          reject("attachment " + std::to_string(x) + " is not a cutvertex in the block");
          continue;
        }
        common &= g.neighbors_in(x, bmask);
      }
      if (ev.attachments.empty()) reject("no attachments recorded");
      if (mask_to_vector(common) != ev.neighborhood_intersection) reject("neighbourhood intersection does not replay");
      if (!(common & bit(cert.vertex))) reject("vertex is not in the neighbourhood intersection");
      if (ev.subcase == "z3-short") {
        const auto& p = ev.short_path;
        if (!p || !is_valid_path(g, p->vertices()) || p->length() != longest_path_length(g, options) ||
            popcount(p->mask() & ~bmask) != 2 || ev.attachments.size() != 1 || !p->contains(ev.attachments.front()))
          reject("short path evidence does not replay");
      } else if (ev.subcase != "p6" && ev.subcase != "z3") {
        reject("unknown block subcase '" + ev.subcase + "'");
      }
      break;
    }
  }
  return out;
}

}  // namespace gallai
