#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ashom/presentation.hpp"

namespace ashom {

/// Inverse sequence A_1 <- A_2 <- ... of f.g. groups on canonical generators.
///
/// A finite truncation lists every stage. An eventually periodic tower lists
/// a prefix A_1 .. A_m followed by P <- P <- ... with every map f.
struct Tower {
  enum class Kind { FiniteTruncation, EventuallyPeriodic };

  Kind kind = Kind::FiniteTruncation;
  std::vector<FGAbelianGroup> groups;  // all stages, or the prefix
  std::vector<IntegerMatrix> maps;     // maps[k] : groups[k+1] -> groups[k]
  FGAbelianGroup period;
  IntegerMatrix period_map;  // f : P -> P
  IntegerMatrix link;        // P -> groups.back(), when the prefix is nonempty

  static Tower finite(std::vector<FGAbelianGroup> groups, std::vector<IntegerMatrix> maps);
  static Tower periodic(FGAbelianGroup P, IntegerMatrix f, std::vector<FGAbelianGroup> prefix = {},
                        std::vector<IntegerMatrix> prefix_maps = {}, IntegerMatrix link = {});

  bool is_periodic() const { return kind == Kind::EventuallyPeriodic; }
  /// Stage k >= 1 and the bonding map A_{k+1} -> A_k.
  FGAbelianGroup stage(std::size_t k) const;
  IntegerMatrix bonding(std::size_t k) const;
  /// The first `depth` stages as a finite truncation.
  Tower truncate(std::size_t depth) const;

  /// Throws ShapeMismatch when shapes do not compose or a map does not send
  /// relations to relations.
  void validate() const;

  friend bool operator==(const Tower&, const Tower&) = default;
};

Tower direct_sum(const Tower& a, const Tower& b);

struct LimReport {
  FGAbelianGroup lim;
  bool mittag_leffler = true;
  bool lim1_vanishes = true;
  /// Periodic case: least j with im f^j = im f^{j+1}, counted on the tail.
  std::optional<std::size_t> stabilization_stage;
  std::string note;  // "lim¹ nonzero (not finitely generated)" when lim¹ != 0
};

LimReport lim_report(const Tower& T);
FGAbelianGroup tower_lim(const Tower& T);
bool mittag_leffler(const Tower& T);
bool lim1_vanishes(const Tower& T);

/// Stable image im f^j inside P for a Mittag-Leffler periodic tower.
/// Throws NoStabilization otherwise.
Subquotient stable_image(const Tower& T);

/// Stagewise maps of towers of the same shape; `tail` acts on the periodic part.
struct TowerMorphism {
  std::vector<IntegerMatrix> stages;
  IntegerMatrix tail;
};

struct TowerSequence {
  Tower first, middle, last;
  TowerMorphism i, j;
};

struct SixTermReport {
  LimReport first, middle, last;
  bool lim_exact = false;        // exactness of 0 -> lim -> lim -> lim (-> 0 when all ML)
  bool lim1_consistent = false;  // vanishing pattern allowed by lim¹ T' -> lim¹ T -> lim¹ T'' -> 0
  std::vector<std::string> notes;
  bool pass() const { return lim_exact && lim1_consistent; }
};

/// Throws NotExactTowers unless every stage is a short exact sequence and the
/// maps commute with the bonding maps.
SixTermReport six_term_check(const TowerSequence& S);

struct MilnorDegree {
  int degree = 0;
  enum class Status { Pass, Fail, NotVerifiable } status = Status::Pass;
  FGAbelianGroup lim;
  FGAbelianGroup claimed;
  std::string message;
};

struct MilnorReport {
  std::vector<MilnorDegree> degrees;
  bool pass() const;  // no Fail entries
};

/// towers[k] and limit_homology[k] belong to degree lo + k.
MilnorReport milnor_check(const std::vector<Tower>& towers, const std::vector<FGAbelianGroup>& limit_homology,
                          int lo = 0);

/// D_1 -> D_2 -> ... -> D_m -> Q -> Q -> ... with every tail map g.
struct DirectSystem {
  std::vector<FGAbelianGroup> groups;
  std::vector<IntegerMatrix> maps;  // maps[k] : groups[k] -> groups[k+1]
  FGAbelianGroup tail;
  IntegerMatrix tail_map;  // g : Q -> Q
  IntegerMatrix link;      // groups.back() -> Q, when the prefix is nonempty
};

struct HomExtLimReport {
  bool lim1_hom_vanishes = false;
  FGAbelianGroup ext_colim;
  FGAbelianGroup lim_ext;
  FGAbelianGroup lim2_hom;  // always 0 for towers
  bool exact = false;
};

/// 0 -> lim¹ Hom(D_k; G) -> Ext(colim D; G) -> lim Ext(D_k; G) -> lim² -> 0.
/// Throws NotEventuallyStable when g is not an automorphism.
HomExtLimReport hom_ext_lim_sequence(const DirectSystem& D, const FGAbelianGroup& G);

}  // namespace ashom
