#pragma once

#include <map>
#include <string>
#include <vector>

#include "ashom/complex.hpp"

namespace ashom {

using PointSet = std::vector<int>;        // sorted, no duplicates
using Covering = std::vector<PointSet>;  // indexed family of members

/// Finite point set X, closed subspace A and named coverings of X.
struct FiniteCoveredSpace {
  PointSet points;
  PointSet closed;
  std::map<std::string, Covering> coverings;

  /// Throws ShapeMismatch when a covering covers neither X nor A or uses an
  /// unknown point, or when A is not a subset of X.
  void validate() const;
  const Covering& covering(const std::string& name) const;  // UnknownCovering
};

/// (alpha, beta) with beta a covering of A refining alpha restricted to A.
/// witness[k] is the index of a member of alpha containing beta[k].
struct CoveringPair {
  Covering alpha;
  Covering beta;
  std::vector<std::size_t> witness;
};

/// Builds a pair with witnesses chosen as the smallest admissible index.
/// Throws NotARefinement when some member of beta lies in no member of alpha.
CoveringPair make_covering_pair(const Covering& alpha, const Covering& beta);
/// Checks the witnesses and that beta covers A. Throws NotARefinement.
void validate_pair(const FiniteCoveredSpace& S, const CoveringPair& p);

/// Abstract simplicial complex given by its facets.
struct SimplicialComplexRep {
  std::vector<int> vertices;
  std::vector<PointSet> facets;  // maximal, sorted, deduplicated

  /// All simplices of dimension <= max_dim (all when negative), sorted by
  /// dimension and then lexicographically.
  std::vector<std::vector<PointSet>> simplices(int max_dim = -1) const;
  int dimension() const;
  bool contains(const PointSet& simplex) const;
};

/// Removes non-maximal and duplicate facets.
SimplicialComplexRep make_simplicial_complex(std::vector<int> vertices, std::vector<PointSet> faces);

SimplicialComplexRep vietoris_complex(const PointSet& points, const Covering& alpha);
SimplicialComplexRep vietoris_complex(const FiniteCoveredSpace& S, const std::string& alpha);
/// Vertices are member indices; a subfamily spans a simplex when the members
/// have a common point.
SimplicialComplexRep nerve(const Covering& alpha);

/// Simplicial cochain complex in degrees 0..dim (0..max_degree+1 when
/// max_degree >= 0), using the sorted vertex order as orientation.
IntegerCochainComplex simplicial_cochain_complex(const SimplicialComplexRep& K, int max_degree = -1);

/// Cochains on X(alpha) vanishing on A(beta).
IntegerCochainComplex relative_cochain_complex(const FiniteCoveredSpace& S, const CoveringPair& p,
                                               int max_degree = -1);

/// 0 -> C(X(alpha), A(beta)) -> C(X(alpha)) -> C(A(beta)) -> 0.
struct PairSequence {
  OwnedCochainMap inclusion;    // relative -> absolute
  OwnedCochainMap restriction;  // absolute -> subspace
};
PairSequence pair_cochain_sequence(const FiniteCoveredSpace& S, const CoveringPair& p, int max_degree = -1);

/// Alexander-Spanier n-cochain in the tuple model: values on (n+1)-tuples.
using TupleCochain = std::map<std::vector<int>, Integer>;

struct ExtendedCochain {
  TupleCochain values;                       // every (n+1)-tuple of X
  std::map<std::vector<int>, int> member;    // lowest member containing the tuple, or -1
};

/// Extension by zero of a cochain defined on tuples inside members of alpha.
ExtendedCochain extend_by_zero(const TupleCochain& phi, const PointSet& points, const Covering& alpha, int degree);
/// Restriction of a total cochain to the tuples lying in some member.
TupleCochain restrict_to_covering(const TupleCochain& phi, const Covering& alpha);

/// True when every member of fine lies in some member of coarse.
bool refines(const Covering& fine, const Covering& coarse);

/// Restriction C(X(coarse)) -> C(X(fine)). Throws NotARefinement.
OwnedCochainMap refinement_cochain_map(const PointSet& points, const Covering& fine, const Covering& coarse,
                                       int max_degree = -1);

/// Colimit of H^n along a refinement chain (either listing order).
FGAbelianGroup colimit_cohomology(const PointSet& points, const std::vector<Covering>& chain, int n);

/// H^n(X(alpha)) == H^n(N(alpha)).
bool dowker_check(const PointSet& points, const Covering& alpha, int n);

struct DowkerSweepReport {
  std::size_t spaces = 0;
  std::size_t covers = 0;
  std::size_t comparisons = 0;
  std::size_t failures = 0;
  std::vector<std::string> failure_examples;
};

/// Every family of at most max_members distinct nonempty subsets covering
/// {0..k-1}, for every k <= max_points, compared in degrees 0..max_degree.
DowkerSweepReport dowker_sweep(int max_points, int max_members, int max_degree);

std::string to_string(const Covering& c);

}  // namespace ashom
