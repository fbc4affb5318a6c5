#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "ashom/coverings.hpp"

namespace ashom {

/// Small complexes with known cohomology.
IntegerCochainComplex point_complex();
IntegerCochainComplex circle_complex();   // boundary of a triangle
IntegerCochainComplex sphere_complex();   // boundary of a tetrahedron
IntegerCochainComplex torus_complex();    // 7-vertex triangulation
IntegerCochainComplex rp2_complex();      // 6-vertex triangulation
IntegerCochainComplex klein_complex();    // one 0-cell, two 1-cells, one 2-cell
IntegerCochainComplex interval_complex(); // vertices 0, 1, 2 and edges 01, 12

struct NamedComplex {
  std::string name;
  IntegerCochainComplex complex;
};

std::vector<NamedComplex> golden_corpus();
/// Z, Z/2, Z/4, Z/6, Z (+) Z/2.
std::vector<FGAbelianGroup> corpus_coefficients();

/// A valid complex in degrees 0..3 with ranks <= max_rank and entries in
/// [-bound, bound]: a sum of Z and (Z -d-> Z) pieces in a random basis.
IntegerCochainComplex random_complex(std::mt19937_64& rng, std::size_t max_rank = 6, int bound = 3);

/// Random f.g. abelian group with small rank and invariant factors.
FGAbelianGroup random_group(std::mt19937_64& rng);

/// f, g : source -> target with f - g = delta' D + D delta.
struct HomotopyTriple {
  std::string name;
  std::shared_ptr<const IntegerCochainComplex> source;
  std::shared_ptr<const IntegerCochainComplex> target;
  CochainMap f, g;
  CochainHomotopy D;
};

/// Interval with the identity and the simplicial map 2 -> 1, joined by the
/// prism homotopy.
HomotopyTriple prism_example();
HomotopyTriple random_homotopy_triple(std::mt19937_64& rng);

struct NamedPair {
  std::string name;
  FiniteCoveredSpace space;
  CoveringPair pair;
};

std::vector<NamedPair> pair_corpus();

/// {0..5} covered by three arcs {0,1,2}, {2,3,4}, {4,5,0}.
FiniteCoveredSpace circle_space();

}  // namespace ashom
