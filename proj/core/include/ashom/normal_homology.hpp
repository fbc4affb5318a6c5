#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ashom/coverings.hpp"
#include "ashom/exact_sequence.hpp"

namespace ashom {

struct HomologyResult {
  int degree = 0;
  FGAbelianGroup group;
  FGAbelianGroup coefficient;
  std::vector<Integer> moduli;  // saturation chain that certified the value
};

/// Integer cochain complex of the Vietoris complex of a covering, or the
/// relative complex of a covering pair.
IntegerCochainComplex normal_cochain_complex(const FiniteCoveredSpace& S, const Covering& alpha, int max_degree = -1);
IntegerCochainComplex normal_cochain_complex(const FiniteCoveredSpace& S, const CoveringPair& p, int max_degree = -1);

/// H_n of the cone of C over the canonical resolution of G.
HomologyResult homology(const IntegerCochainComplex& C, const FGAbelianGroup& G, int n,
                        const SaturationOptions& options = {});
/// All degrees of the window [lo - 1, hi + 1].
std::vector<HomologyResult> homology_window(const IntegerCochainComplex& C, const FGAbelianGroup& G,
                                            const SaturationOptions& options = {});

/// Formula value Hom(H^n; G) (+) Ext(H^{n+1}; G).
FGAbelianGroup ucf_prediction(const IntegerCochainComplex& C, const FGAbelianGroup& G, int n);

struct UCFReport {
  int degree = 0;
  FGAbelianGroup hom_part;
  FGAbelianGroup ext_part;
  FGAbelianGroup homology_group;
  FGAbelianGroup rho_image;   // image of rho inside Hom(H^n; G)
  FGAbelianGroup rho_kernel;
  bool rho_surjective = false;
  bool kernel_iso_to_ext = false;
  bool pass() const { return rho_surjective && kernel_iso_to_ext; }
};

/// Builds rho : H_n -> Hom(H^n; G) by evaluating the first component of cone
/// cycles on cocycles, and checks surjectivity and ker rho = Ext(H^{n+1}; G).
UCFReport ucf_check(const IntegerCochainComplex& C, const FGAbelianGroup& G, int n,
                    const SaturationOptions& options = {});

/// Long sequence of the pair 0 -> cone(A) -> cone(X) -> cone(X, A) -> 0.
LongExactSequenceReport pair_sequence_check(const FiniteCoveredSpace& S, const CoveringPair& p,
                                            const FGAbelianGroup& G, const SaturationOptions& options = {});

struct DimensionReport {
  FGAbelianGroup coefficient;
  std::vector<std::pair<int, FGAbelianGroup>> values;  // degrees -2..2
  bool pass = false;
};
DimensionReport dimension_check(const FGAbelianGroup& G, const SaturationOptions& options = {});

struct HomotopyReport {
  std::vector<int> degrees;            // degrees compared
  std::vector<bool> equal;             // f_* == g_* in each degree
  bool cone_identity = false;          // lifted homotopy satisfies the cone identity
  bool pass() const;
};

/// f, g : C -> C' with homotopy D. Compares the maps induced on cone homology.
HomotopyReport homotopy_axiom_check(const CochainMap& f, const CochainMap& g, const CochainHomotopy& D,
                                    const FGAbelianGroup& G, const SaturationOptions& options = {});

struct IndependenceReport {
  int degree = 0;
  std::vector<std::string> variants;
  std::vector<FGAbelianGroup> values;
  bool pass = false;
};

/// Recomputes H_n with reordered and padded resolutions.
IndependenceReport resolution_independence_check(const IntegerCochainComplex& C, const FGAbelianGroup& G, int n,
                                                 const SaturationOptions& options = {});

}  // namespace ashom
