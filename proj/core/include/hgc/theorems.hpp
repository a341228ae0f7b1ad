#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgc/coloring.hpp"
#include "hgc/degeneracy.hpp"
#include "hgc/hypergraph.hpp"
#include "hgc/io.hpp"
#include "hgc/property.hpp"
#include "hgc/structure.hpp"

namespace hgc {

struct GallaiQuantities {
  std::size_t delta = 0;
  Rational r_delta;        // δ - 1 + 2/δ
  Rational a_coefficient;  // (δ-2)/(δ²+2δ-2)
};

/// Throws DomainError for δ < 2.
GallaiQuantities gallai_quantities(std::size_t delta);
Rational r_delta(std::size_t delta);
/// δn + (δ-2)/(δ²+2δ-2) n.
Rational a_bound(std::size_t delta, std::size_t n);
/// |V(F)| r_δ - d(F).
Rational sigma(const Hypergraph& f, std::size_t delta);

bool is_complete_graph(const Hypergraph& h);
bool is_odd_cycle(const Hypergraph& h);

/// Throws DomainError unless H is connected and simple.
bool is_gallai_tree(const Hypergraph& h, const Property& p);

/// Throws DomainError for disconnected H.
bool is_epsilon_delta(const Hypergraph& h, std::size_t delta);

/// Simple, connected, Δ <= δ, a Gallai tree and not K_{δ+1}.
bool in_gallai_family(const Hypergraph& t, const Property& p, std::size_t delta);

enum class BlockVerdict { Brick, FPRegular, SmallInP, Violation };

std::string to_string(BlockVerdict v);

struct BlockCheck {
  VertexMask vertices = 0;
  BlockVerdict verdict = BlockVerdict::Violation;
  BrickClassification brick;
  bool fp_regular = false;
  bool small_in_p = false;
};

/// Per-block structure of a hypergraph against the brick / r-regular F(P) /
/// small member of P alternatives.
struct BlockStructureReport {
  std::vector<BlockCheck> blocks;
  bool pass = true;
};

BlockStructureReport classify_blocks(const Hypergraph& h, const Property& p);

struct Theorem3Report {
  Hypergraph low_vertex_hypergraph;
  BlockStructureReport structure;
  bool pass = false;
};

/// Throws DomainError unless H is (P,L)-critical with a non-empty low-vertex
/// hypergraph.
Theorem3Report verify_theorem3(const Hypergraph& h, const Property& p, const ListAssignment& l);

struct Theorem4Report {
  bool partitionable = false;
  std::optional<Partition> partition;
  std::optional<HardPairCertificate> certificate;
  bool certificate_valid = false;
  bool pass = false;  // partition absent <=> valid certificate
};

/// Throws DomainError unless H is connected and f degree-feasible.
Theorem4Report verify_theorem4(const Hypergraph& h, const VectorFunction& f);

struct BrooksReport {
  std::size_t chi_list = 0;
  std::size_t max_degree = 0;
  unsigned r = 0;
  std::size_t bound = 0;  // ⌈Δ/r⌉ + 1
  bool bound_holds = false;
  bool degree_ratio_holds = false;  // (χ^ℓ - 1) r <= Δ
  bool equality = false;
  std::string clause;  // matched characterization when equality holds: "tK", "tC", "F(P)", or ""
  bool pass = false;
};

/// Throws DomainError for non-additive P or disconnected H.
BrooksReport verify_brooks(const Hypergraph& h, const Property& p, const ChoosabilityGuard& guard = {});

struct Theorem6Report {
  bool colorable = false;
  std::optional<BlockStructureReport> structure;  // only when not colorable
  bool pass = false;
};

/// Throws DomainError unless P is additive, H is connected and r|L(v)| >= d_H(v).
Theorem6Report verify_theorem6(const Hypergraph& h, const Property& p, const ListAssignment& l);

struct GallaiBoundReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t delta = 0;
  VertexMask low = 0;  // U
  std::size_t degree_sum = 0;
  std::size_t degree_sum_outside = 0;  // d(H - U)
  std::size_t degree_sum_low = 0;      // d(H(U))
  Rational sigma;
  std::vector<Rational> component_sigma;
  Rational a;
  bool sigma_nonnegative = false;
  bool components_at_least_two = false;
  bool chain_sigma = false;  // d(H) >= d(H-U) + σ + (δ+1-2/δ)|U|
  bool chain_low = false;    // d(H) >= (δ+1)n - |U|
  bool bound_holds = false;
  bool sigma_asserted = false;  // σ conditions are part of `pass` only for δ >= 4
  bool pass = false;
};

/// Throws PreconditionError naming the failed clause: "additive", "r", "lists",
/// "k", "delta", "complete", "critical", "locally-linear".
GallaiBoundReport verify_gallai_bound(const Hypergraph& h, const Property& p, const ListAssignment& l);

struct EndBlockIdentity {
  VertexMask block = 0;
  Rational sigma_tree;
  Rational sigma_trimmed;
  Rational sigma_block;
  bool holds = false;
};

struct SigmaLemmaReport {
  std::size_t delta = 0;
  Rational sigma;
  Rational r_delta;
  bool epsilon_delta = false;
  std::vector<Rational> block_sigma;
  bool block_bounds_hold = false;  // σ(B) = 2 for K_δ, σ(B) >= r_δ otherwise
  std::vector<EndBlockIdentity> end_blocks;
  bool end_blocks_hold = false;
  std::optional<bool> tree_bound_holds;  // evaluated for δ >= 4
  bool pass = false;
};

/// Throws DomainError for δ < 3 or T outside the family of Gallai trees with
/// Δ <= δ other than K_{δ+1}.
SigmaLemmaReport verify_sigma_lemmas(const Hypergraph& t, const Property& p, std::size_t delta);

Json to_json(const Hypergraph& h, const BlockStructureReport& r);
Json to_json(const Hypergraph& h, const Theorem3Report& r);
Json to_json(const Hypergraph& h, const Theorem4Report& r);
Json to_json(const BrooksReport& r);
Json to_json(const Hypergraph& h, const Theorem6Report& r);
Json to_json(const Hypergraph& h, const GallaiBoundReport& r);
Json to_json(const Hypergraph& h, const SigmaLemmaReport& r);

}  // namespace hgc
