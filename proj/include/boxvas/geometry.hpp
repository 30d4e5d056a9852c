#pragma once

#include "boxvas/core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace boxvas {

enum class ConeClass { ZeroOnly, Ray, Line, ProperCone, HalfPlane, FullPlane };
enum class QuadrantRelation {
  ContainsQuadrant,
  ContainedInQuadrant,
  IntersectsViaXAxisSide,
  IntersectsViaYAxisSide,
  Other
};

std::string to_string(ConeClass c);
std::string to_string(QuadrantRelation q);

// 2D cone spanned by the nonzero generators of a 2-VAS.
//
// ProperCone: chi1 is the counter-clockwise extreme, chi2 the clockwise one;
// facets[0] is normal to chi1 and facets[1] normal to chi2.
// HalfPlane: chi1/chi2 are the two opposite boundary generators; one facet.
// Ray/Line: chi1 is a generator on the line; facets are both line normals.
// ZeroOnly and FullPlane have no facets.
struct ConeData {
  ConeClass classification = ConeClass::ZeroOnly;
  std::optional<Vec> chi1, chi2;
  std::optional<std::size_t> chi1_index, chi2_index;
  std::vector<Vec> facets;
  QuadrantRelation quadrant_relation = QuadrantRelation::Other;
  Int source_norm = 0;
  std::vector<std::size_t> nonzero_indices;
};

struct DeepConstant {
  enum class Provenance { Configured, DefaultHeuristic };
  Int value = 0;
  Provenance provenance = Provenance::Configured;
};

std::string to_string(DeepConstant::Provenance p);

// 16 * ||V||^3, tagged DefaultHeuristic.
DeepConstant default_deep_constant(const VasSystem& vas);

struct SeedVector {
  Vec s;
  Vec s_pos;  // 2||V|| * s
  PathRecord witness;  // box-reaches s
  Path s_pos_witness;  // witness repeated 2||V|| times
  bool from_positive_generator = false;
};

struct LatticeResult {
  bool member = false;
  std::vector<Int> coefficients;  // one per generator of the source system
};

struct IntConeResult {
  enum class Status { Member, NonMember, Undecided };
  Status status = Status::NonMember;
  std::vector<Int> coefficients;  // nonnegative, valid when Member
  std::uint64_t work = 0;         // combinations examined
};

struct DitcScanResult {
  std::vector<Vec> counterexamples;  // M-deep, lattice, but not intCone
  std::vector<Vec> undecided;        // intCone search hit its budget
  std::uint64_t scanned = 0;
  std::uint64_t deep_lattice_points = 0;
};

Int cross(const Vec& a, const Vec& b);

ConeData cone_from_generators(const VasSystem& vas);

// Integer lattice of the generators, triangularized once.
class Lattice {
 public:
  explicit Lattice(const VasSystem& vas);
  LatticeResult member(const Vec& v) const;

 private:
  std::size_t dim_, n_;
  std::vector<std::vector<Int>> a_;  // dim x n, lower triangular in pivot columns
  std::vector<std::vector<Int>> u_;  // n x n unimodular
  std::vector<std::size_t> pivot_col_;  // per row, n_ if none
};

LatticeResult lattice_member(const VasSystem& vas, const Vec& v);

constexpr std::uint64_t kDefaultIntConeBudget = 10'000'000;

IntConeResult int_cone_member(const VasSystem& vas, const Vec& v,
                              std::optional<std::uint64_t> coeff_budget = std::nullopt);
IntConeResult int_cone_member(const VasSystem& vas, const ConeData& cone, const Vec& v,
                              std::optional<std::uint64_t> coeff_budget = std::nullopt);

// Real-cone membership (v in cone(V)).
bool in_cone(const ConeData& cone, const Vec& v);
bool is_m_deep(const ConeData& cone, const Vec& v, const DeepConstant& M);

DitcScanResult ditc_falsification_scan(const VasSystem& vas, const DeepConstant& M,
                                       std::int64_t radius,
                                       std::optional<std::uint64_t> coeff_budget = std::nullopt);

// True when the nonzero generators span R^2.
bool has_rank_two(const VasSystem& vas);

SeedVector compute_seed(const VasSystem& vas);

bool facet_product_bound_check(const ConeData& cone, const Vec& v);

}  // namespace boxvas
