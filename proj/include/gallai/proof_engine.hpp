#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gallai/comb.hpp"
#include "gallai/graph.hpp"
#include "gallai/paths.hpp"
#include "gallai/patterns.hpp"

namespace gallai {

// Which argument a pair (K1_3, S) is settled by. Each S reduces to the
// largest pattern of its chain: P4, P5 -> P6; C3, Z1, Z2 -> Z3; B11 -> N111
// (traceable); B12 -> generalized comb.
enum class ProofCase { Traceable, Comb, NeighborhoodP6, NeighborhoodZ3 };
std::string_view to_string(ProofCase c);
// Accepts the nine longest-path pair patterns plus N111. Throws
// InvalidArgument otherwise.
ProofCase proof_case_for(PatternName s);

enum class CertificateRoute { Traceable, CombBase, TreeCutvertex, CutedgeEndpoint, BlockNeighborhood };
std::string_view to_string(CertificateRoute r);
CertificateRoute parse_certificate_route(std::string_view text);

struct CertificateEvidence {
  std::optional<VertexPath> hamiltonian_path;  // Traceable
  std::optional<CombDecomposition> comb;       // CombBase
  std::optional<Vertex> cutvertex;             // TreeCutvertex
  std::vector<Vertex> block;                   // CutedgeEndpoint, BlockNeighborhood
  // BlockNeighborhood only: "spanning" when every longest path covers the
  // block, "p6", "z3", or "z3-short" for the two-outside-vertex shortcut.
  std::string subcase;
  std::vector<Vertex> attachments;             // chosen x_p, sorted, distinct
  std::vector<Vertex> neighborhood_intersection;
  std::optional<VertexPath> short_path;        // z3-short: the path with two outside vertices
};

struct Certificate {
  Vertex vertex = -1;
  CertificateRoute route = CertificateRoute::Traceable;
  PatternName pair = PatternName::P6;  // S of (K1_3, S)
  std::string graph6;
  CertificateEvidence evidence;
};

// Runs the case analysis on g and returns a vertex on every longest path.
// Throws NotInClass unless g is connected and (K1_3, s)-free, and
// CertificationFailed if an argument step breaks or the vertex misses the
// exact longest-path intersection.
Certificate certified_common_vertex(const Graph& g, PatternName s, const PathOptions& options = {});
// Same, reusing a complete report for g.
Certificate certified_common_vertex(const Graph& g, PatternName s, const LongestPathReport& report,
                                    const PathOptions& options = {});

// The block step alone, on a caller-chosen block with no class gate and no
// intersection cross-check. Lets diagnostics drive the argument on blocks
// the tie-break would not pick. Throws CertificationFailed where a step
// breaks.
Certificate block_case_certificate(const Graph& g, const std::vector<Vertex>& block, PatternName s,
                                   const LongestPathReport& report);

struct PendentSegment {
  std::size_t path_id = 0;       // index into report.paths
  Vertex attachment = -1;        // x_p
  std::vector<Vertex> segment;   // x_p ... u_p, only x_p inside the block
};

// Pendent segments of every longest path that misses part of the block.
// Throws CertificationFailed if such a path does not have exactly two
// segments with distinct cutvertex attachments.
std::vector<PendentSegment> attachments_of(const Graph& g, const std::vector<Vertex>& block,
                                           const LongestPathReport& report);

enum class ClaimStatus { Pass, Fail, NotApplicable };
std::string_view to_string(ClaimStatus s);

struct ClaimResult {
  std::string name;
  ClaimStatus status = ClaimStatus::NotApplicable;
  std::string detail;
};

struct ClaimReport {
  std::vector<Vertex> block;
  ProofCase proof_case = ProofCase::NeighborhoodP6;
  std::size_t deficient_paths = 0;  // longest paths missing part of the block
  std::vector<ClaimResult> claims;

  bool all_pass() const;  // no Fail
  const ClaimResult& claim(std::string_view name) const;
};

// Claim names, in report order.
inline constexpr std::string_view kClaimPathOrder = "path-order-bound";
inline constexpr std::string_view kClaimTwoSegments = "two-pendent-segments";
inline constexpr std::string_view kClaimBlockDegree = "block-min-degree";
inline constexpr std::string_view kClaimNeighborhoodClique = "attachment-neighborhood-clique";
inline constexpr std::string_view kClaimNeighborhoodOnPath = "attachment-neighborhood-on-path";
inline constexpr std::string_view kClaimShortPath = "two-outside-shortcut";
inline constexpr std::string_view kClaimPairwise = "pairwise-neighborhood-intersection";
inline constexpr std::string_view kClaimGlobal = "global-neighborhood-intersection";

// Evaluates the block-case claims for a 2-connected central block. s picks
// the P6 or Z3 variant. Throws NotApplicable when no longest path misses
// part of the block, InvalidArgument for s outside those two chains.
ClaimReport verify_claims(const Graph& g, const std::vector<Vertex>& block, PatternName s,
                          const LongestPathReport& report);

// verify_claims when in-class g reaches the block case: the projected
// longest paths share no cutvertex, so their common part is a single
// 2-connected block, and some longest path misses part of it. nullopt
// otherwise.
std::optional<ClaimReport> block_case_claims(const Graph& g, PatternName s, const LongestPathReport& report);

struct CertificateCheck {
  bool valid = true;
  std::vector<std::string> failures;
};

// Replays every step of a stored certificate against g.
CertificateCheck check_certificate(const Graph& g, const Certificate& cert, const PathOptions& options = {});

}  // namespace gallai
