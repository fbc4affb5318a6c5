#pragma once

#include <string>
#include <vector>

#include "ashom/cone.hpp"

namespace ashom {

struct SequenceTerm {
  std::string label;  // e.g. "H_1(B)"
  FGAbelianGroup group;
};

struct SequenceMap {
  std::string label;    // "i", "j" or "connecting"
  IntegerMatrix matrix;  // on the homology generators of the adjacent terms
  bool is_zero = false;
};

/// A finite window of a long exact sequence, bounded by zero groups.
struct LongExactSequenceReport {
  std::vector<SequenceTerm> terms;
  std::vector<SequenceMap> maps;  // maps[k] : terms[k] -> terms[k+1]
  std::vector<bool> exact;        // exactness at terms[k]

  bool all_exact() const;
  std::size_t failures() const;
};

/// Throws NotExact (junction = degree) unless 0 -> A -i-> B -j-> C -> 0 is
/// exact in every degree.
void check_short_exact(const PresentedChainMap& i, const PresentedChainMap& j);
/// Same check for cochain complexes of free groups.
void check_short_exact(const CochainMap& f, const CochainMap& g);

/// Homology sequence of a short exact sequence of chain complexes,
/// ... -> H_n(A) -> H_n(B) -> H_n(C) -> H_{n-1}(A) -> ..., from the top
/// nonzero degree down to the bottom one. Connecting maps are computed by the
/// zig-zag with integer lifts. Names label the three complexes.
LongExactSequenceReport homology_sequence(const PresentedChainMap& i, const PresentedChainMap& j,
                                          const std::string& a = "A", const std::string& b = "B",
                                          const std::string& c = "C");

/// 0 -> C -f-> C' -g-> C'' -> 0 of cochain complexes induces
/// 0 -> cone(C'') -> cone(C') -> cone(C) -> 0; returns its homology sequence.
LongExactSequenceReport connecting_sequence(const CochainMap& f, const CochainMap& g, const InjectiveResolution& R,
                                            const SaturationOptions& options = {});

/// 0 -> G -phi-> G1 -psi-> G2 -> 0 of finitely generated groups, given on
/// canonical generators.
struct GroupExtension {
  FGAbelianGroup G, G1, G2;
  IntegerMatrix phi;  // G1.generator_count() x G.generator_count()
  IntegerMatrix psi;  // G2.generator_count() x G1.generator_count()
};

/// Throws NotExactCoefficients unless the sequence is a short exact sequence.
void validate_extension(const GroupExtension& S);

/// Resolutions of G, G1, G2 assembled with G1' = G' (+) G2', G1'' = G'' (+) G2''
/// so that the inclusions and projections form a map of short exact sequences.
struct HorseshoeResolution {
  InjectiveResolution R, R1, R2;
};
HorseshoeResolution horseshoe(const GroupExtension& S);

/// ... -> H_n(C;G) -> H_n(C;G1) -> H_n(C;G2) -> H_{n-1}(C;G) -> ...
LongExactSequenceReport coefficient_les(const IntegerCochainComplex& C, const GroupExtension& S,
                                        const SaturationOptions& options = {});

/// Common stage modulus used for sequences of cones.
Integer common_modulus(const std::vector<const ConeComplex*>& cones, const SaturationOptions& options);

}  // namespace ashom
