#include "ashom/towers.hpp"

#include <algorithm>

#include "ashom/errors.hpp"
#include "ashom/polynomial.hpp"

namespace ashom {
namespace {

const char* const kLim1Note = "lim¹ nonzero (not finitely generated)";

void check_hom(const FGAbelianGroup& src, const FGAbelianGroup& tgt, const IntegerMatrix& M, const char* what) {
  if (M.rows() != tgt.generator_count() || M.cols() != src.generator_count())
    throw ShapeMismatch(std::string("tower: ") + what + " has the wrong shape");
  Morphism{Presentation::of(src), Presentation::of(tgt), M}.validate();
}

struct ImageChain {
  bool stable = false;
  std::size_t stage = 0;
  IntegerMatrix lattice;  // basis of im f^stage + relations
};

// Descending chain im f^j + R inside Z^g.
ImageChain image_chain(const FGAbelianGroup& P, const IntegerMatrix& f) {
  const std::size_t g = P.generator_count();
  const std::size_t bound = P.rank() + P.torsion_length() + 1;
  IntegerMatrix R = P.relation_matrix();
  IntegerMatrix cur = IntegerMatrix::identity(g);
  for (std::size_t j = 0; j <= bound; ++j) {
    IntegerMatrix next = image_basis(hstack(f * cur, R));
    if (lattice_contains(next, cur, R)) return {true, j, cur};
    cur = next;
  }
  return {false, bound, cur};
}

// lim of (P, f) when images do not stabilize: Z^u (+) lim(T, f|T), where u is
// the rank of the part of P/T on which f acts with unit eigenvalues.
FGAbelianGroup unstable_lim(const FGAbelianGroup& P, const IntegerMatrix& f) {
  const std::size_t r = P.rank(), t = P.torsion().size();
  std::size_t u = 0;
  if (r > 0) {
    IntegerMatrix A = f.block(0, 0, r, r);
    Polynomial h = unit_part(characteristic_polynomial(A));
    IntegerMatrix H = evaluate(h, A), Hr = IntegerMatrix::identity(r);
    for (std::size_t k = 0; k < r; ++k) Hr = Hr * H;
    u = r - matrix_rank(Hr);
  }
  FGAbelianGroup T(0, P.torsion());
  ImageChain c = image_chain(T, f.block(r, r, t, t));
  if (!c.stable) throw NoStabilization("torsion image chain did not stabilize");
  return FGAbelianGroup::free(u) + make_subquotient(c.lattice, T.relation_matrix()).group.canonical();
}

// 0 -> A -i-> B -j-> C -> 0 at one stage.
bool stage_exact(const FGAbelianGroup& A, const FGAbelianGroup& B, const FGAbelianGroup& C, const IntegerMatrix& i,
                 const IntegerMatrix& j) {
  Morphism mi{Presentation::of(A), Presentation::of(B), i};
  Morphism mj{Presentation::of(B), Presentation::of(C), j};
  mi.validate();
  mj.validate();
  if (!mi.is_injective() || !mj.is_surjective()) return false;
  if (!Morphism{Presentation::of(A), Presentation::of(C), j * i}.is_zero()) return false;
  Subquotient K = mj.kernel();
  return lattice_contains(i, K.basis, B.relation_matrix());
}

bool congruent(const FGAbelianGroup& G, const IntegerMatrix& a, const IntegerMatrix& b) {
  Presentation P = Presentation::of(G);
  IntegerMatrix d = a - b;
  for (std::size_t c = 0; c < d.cols(); ++c)
    if (!P.is_zero(d.column(c))) return false;
  return true;
}

void require_same_shape(const Tower& a, const Tower& b) {
  if (a.kind != b.kind || a.groups.size() != b.groups.size())
    throw NotExactTowers("towers in the sequence have different shapes");
}

// An endomorphism of P rewritten on canonical generators.
std::pair<FGAbelianGroup, IntegerMatrix> canonical_endomorphism(const Presentation& P, const IntegerMatrix& M) {
  CanonicalBasis cb = canonical_basis(P);
  return {cb.group, reduce_canonical(cb.group, cb.to_canonical * M * cb.from_canonical)};
}

Presentation power(const FGAbelianGroup& G, std::size_t k) {
  Presentation out = Presentation::free(0);
  for (std::size_t j = 0; j < k; ++j) out = direct_sum(out, Presentation::of(G));
  return out;
}

}  // namespace

Tower Tower::finite(std::vector<FGAbelianGroup> groups, std::vector<IntegerMatrix> maps) {
  Tower T;
  T.kind = Kind::FiniteTruncation;
  T.groups = std::move(groups);
  T.maps = std::move(maps);
  T.validate();
  return T;
}

Tower Tower::periodic(FGAbelianGroup P, IntegerMatrix f, std::vector<FGAbelianGroup> prefix,
                      std::vector<IntegerMatrix> prefix_maps, IntegerMatrix link) {
  Tower T;
  T.kind = Kind::EventuallyPeriodic;
  T.groups = std::move(prefix);
  T.maps = std::move(prefix_maps);
  T.period = std::move(P);
  T.period_map = std::move(f);
  T.link = std::move(link);
  T.validate();
  return T;
}

FGAbelianGroup Tower::stage(std::size_t k) const {
  if (k == 0) throw DegreeOutOfRange("tower stages start at 1");
  if (k <= groups.size()) return groups[k - 1];
  if (!is_periodic()) throw DegreeOutOfRange("stage beyond a finite truncation");
  return period;
}

IntegerMatrix Tower::bonding(std::size_t k) const {
  if (k == 0) throw DegreeOutOfRange("tower stages start at 1");
  if (k < groups.size()) return maps[k - 1];
  if (!is_periodic()) throw DegreeOutOfRange("bonding map beyond a finite truncation");
  if (k == groups.size()) return link;
  return period_map;
}

Tower Tower::truncate(std::size_t depth) const {
  Tower T;
  for (std::size_t k = 1; k <= depth; ++k) {
    T.groups.push_back(stage(k));
    if (k < depth) T.maps.push_back(bonding(k));
  }
  return T;
}

void Tower::validate() const {
  if (groups.empty() ? !maps.empty() : maps.size() + 1 != groups.size())
    throw ShapeMismatch("tower: need one map between consecutive stages");
  for (std::size_t k = 0; k < maps.size(); ++k) check_hom(groups[k + 1], groups[k], maps[k], "bonding map");
  if (!is_periodic()) return;
  check_hom(period, period, period_map, "period map");
  if (!groups.empty())
    check_hom(period, groups.back(), link, "link map");
  else if (link.rows() != 0 || link.cols() != 0)
    throw ShapeMismatch("tower: link map without a prefix");
}

Tower direct_sum(const Tower& a, const Tower& b) {
  if (a.kind != b.kind || a.groups.size() != b.groups.size())
    throw ShapeMismatch("direct sum of towers of different shapes");
  Tower T;
  T.kind = a.kind;
  for (std::size_t k = 0; k < a.groups.size(); ++k) T.groups.push_back(a.groups[k] + b.groups[k]);
  // Canonical generators of A + B interleave free and torsion parts, so maps
  // are permuted into that order.
  auto perm = [](const FGAbelianGroup& x, const FGAbelianGroup& y) {
    return canonical_basis(direct_sum(Presentation::of(x), Presentation::of(y)));
  };
  auto sum_map = [&](const FGAbelianGroup& sx, const FGAbelianGroup& sy, const FGAbelianGroup& tx,
                     const FGAbelianGroup& ty, const IntegerMatrix& m1, const IntegerMatrix& m2) {
    CanonicalBasis s = perm(sx, sy), t = perm(tx, ty);
    return reduce_canonical(t.group, t.to_canonical * ashom::direct_sum(m1, m2) * s.from_canonical);
  };
  for (std::size_t k = 0; k < a.maps.size(); ++k)
    T.maps.push_back(sum_map(a.groups[k + 1], b.groups[k + 1], a.groups[k], b.groups[k], a.maps[k], b.maps[k]));
  if (a.is_periodic()) {
    T.period = a.period + b.period;
    T.period_map = sum_map(a.period, b.period, a.period, b.period, a.period_map, b.period_map);
    if (!a.groups.empty())
      T.link = sum_map(a.period, b.period, a.groups.back(), b.groups.back(), a.link, b.link);
  }
  T.validate();
  return T;
}

LimReport lim_report(const Tower& T) {
  T.validate();
  LimReport rep;
  if (!T.is_periodic()) {
    rep.lim = T.groups.empty() ? FGAbelianGroup::trivial() : T.groups.back();
    return rep;
  }
  ImageChain c = image_chain(T.period, T.period_map);
  if (c.stable) {
    rep.stabilization_stage = c.stage;
    rep.lim = make_subquotient(c.lattice, T.period.relation_matrix()).group.canonical();
    return rep;
  }
  rep.mittag_leffler = false;
  rep.lim1_vanishes = false;
  rep.note = kLim1Note;
  rep.lim = unstable_lim(T.period, T.period_map);
  return rep;
}

FGAbelianGroup tower_lim(const Tower& T) { return lim_report(T).lim; }

bool mittag_leffler(const Tower& T) {
  T.validate();
  return !T.is_periodic() || image_chain(T.period, T.period_map).stable;
}

bool lim1_vanishes(const Tower& T) { return mittag_leffler(T); }

Subquotient stable_image(const Tower& T) {
  if (!T.is_periodic()) throw NoStabilization("stable image of a finite truncation");
  ImageChain c = image_chain(T.period, T.period_map);
  if (!c.stable) throw NoStabilization("image chain of the period map does not stabilize");
  return make_subquotient(c.lattice, T.period.relation_matrix());
}

SixTermReport six_term_check(const TowerSequence& S) {
  const Tower &A = S.first, &B = S.middle, &C = S.last;
  A.validate();
  B.validate();
  C.validate();
  require_same_shape(A, B);
  require_same_shape(B, C);
  const std::size_t m = A.groups.size();
  if (S.i.stages.size() != m || S.j.stages.size() != m) throw NotExactTowers("tower morphism has the wrong length");

  // Stagewise exactness and compatibility, the periodic tail included.
  auto component = [&](const TowerMorphism& phi, std::size_t k) { return k <= m ? phi.stages[k - 1] : phi.tail; };
  const std::size_t depth = A.is_periodic() ? m + 1 : m;
  for (std::size_t k = 1; k <= depth; ++k) {
    try {
      if (!stage_exact(A.stage(k), B.stage(k), C.stage(k), component(S.i, k), component(S.j, k)))
        throw NotExactTowers("stage " + std::to_string(k) + " is not short exact");
    } catch (const ShapeMismatch& e) {
      throw NotExactTowers("stage " + std::to_string(k) + ": " + e.what());
    }
    const bool has_next = A.is_periodic() || k < m;
    if (!has_next) continue;
    const std::size_t n = std::min(k + 1, depth);
    if (!congruent(B.stage(k), component(S.i, k) * A.bonding(k), B.bonding(k) * component(S.i, n)) ||
        !congruent(C.stage(k), component(S.j, k) * B.bonding(k), C.bonding(k) * component(S.j, n)))
      throw NotExactTowers("maps do not commute with the bonding maps at stage " + std::to_string(k));
  }

  SixTermReport rep;
  rep.first = lim_report(A);
  rep.middle = lim_report(B);
  rep.last = lim_report(C);
  const bool mlA = rep.first.mittag_leffler, mlB = rep.middle.mittag_leffler, mlC = rep.last.mittag_leffler;
  rep.lim1_consistent = (!(mlA && mlC) || mlB) && (!mlB || mlC);

  if (!A.is_periodic()) {
    // lims are the last stages, already checked to be short exact.
    rep.lim_exact = true;
    rep.notes.push_back("finite truncations: exactness of the deepest stage");
  } else if (mlA && mlB) {
    Subquotient SA = stable_image(A), SB = stable_image(B), SC = stable_image(C);
    Morphism mi{SA.group, SB.group, SB.coordinates(S.i.tail * SA.basis)};
    Morphism mj{SB.group, SC.group, SC.coordinates(S.j.tail * SB.basis)};
    mi.validate();
    mj.validate();
    Subquotient K = mj.kernel();
    bool middle = Morphism{SA.group, SC.group, mj.matrix * mi.matrix}.is_zero() &&
                  lattice_contains(mi.matrix, K.basis, SB.group.relations());
    rep.lim_exact = mi.is_injective() && mj.is_surjective() && middle;
    rep.notes.push_back("Mittag-Leffler: 0 -> lim -> lim -> lim -> 0 checked on stable images");
  } else {
    // Only ranks are visible: lim T' embeds, and lim T -> lim T'' is onto
    // when T' is Mittag-Leffler.
    const std::size_t ra = rep.first.lim.rank(), rb = rep.middle.lim.rank(), rc = rep.last.lim.rank();
    rep.lim_exact = ra <= rb && rb <= ra + rc && (!mlA || rb == ra + rc);
    rep.notes.push_back("not Mittag-Leffler: rank bounds only");
  }
  return rep;
}

bool MilnorReport::pass() const {
  return std::none_of(degrees.begin(), degrees.end(),
                      [](const MilnorDegree& d) { return d.status == MilnorDegree::Status::Fail; });
}

MilnorReport milnor_check(const std::vector<Tower>& towers, const std::vector<FGAbelianGroup>& limit_homology,
                          int lo) {
  if (towers.size() != limit_homology.size()) throw ShapeMismatch("milnor_check: one claimed group per tower");
  MilnorReport rep;
  for (std::size_t k = 0; k < towers.size(); ++k) {
    MilnorDegree d;
    d.degree = lo + static_cast<int>(k);
    d.lim = tower_lim(towers[k]);
    d.claimed = limit_homology[k];
    const bool next_ml = k + 1 >= towers.size() || lim1_vanishes(towers[k + 1]);
    if (!next_ml) {
      d.status = MilnorDegree::Status::NotVerifiable;
      d.message = "not desk-verifiable: lim¹ term not finitely generated";
    } else if (d.claimed == d.lim) {
      d.status = MilnorDegree::Status::Pass;
      d.message = "lim¹ of the next tower vanishes; gamma is an isomorphism onto lim";
    } else {
      d.status = MilnorDegree::Status::Fail;
      d.message = "lim¹ of the next tower vanishes, so H_" + std::to_string(d.degree) + " must be " +
                  d.lim.to_string() + ", not " + d.claimed.to_string();
    }
    rep.degrees.push_back(d);
  }
  return rep;
}

HomExtLimReport hom_ext_lim_sequence(const DirectSystem& D, const FGAbelianGroup& G) {
  if (D.groups.empty() ? !D.maps.empty() : D.maps.size() + 1 != D.groups.size())
    throw ShapeMismatch("direct system: need one map between consecutive stages");
  for (std::size_t k = 0; k < D.maps.size(); ++k) check_hom(D.groups[k], D.groups[k + 1], D.maps[k], "stage map");
  if (!D.groups.empty()) check_hom(D.groups.back(), D.tail, D.link, "link map");
  const FGAbelianGroup& Q = D.tail;
  check_hom(Q, Q, D.tail_map, "tail map");
  if (!Morphism{Presentation::of(Q), Presentation::of(Q), D.tail_map}.is_isomorphism())
    throw NotEventuallyStable("tail map is not an automorphism; the colimit is not finitely generated");

  const std::size_t a = Q.generator_count(), b = G.generator_count();
  const IntegerMatrix RQ = Presentation::of(Q).relations();  // injective
  const std::size_t t = RQ.cols();
  const IntegerMatrix Ib = IntegerMatrix::identity(b);
  // Hom(Z^a; G) -> Hom(Z^t; G), precomposition with the relations of Q.
  Morphism restrict{power(G, a), power(G, t), kronecker(RQ.transpose(), Ib)};

  // Hom(Q; G) with the pullback along g.
  Subquotient H = restrict.kernel();
  IntegerMatrix pull0 = kronecker(D.tail_map.transpose(), Ib);
  auto [hom_group, hom_map] = canonical_endomorphism(H.group, H.coordinates(pull0 * H.basis));
  LimReport hom_lim = lim_report(Tower::periodic(hom_group, hom_map));

  // Ext(Q; G) = coker(restrict), with g lifted to the relation module.
  Presentation E(t * b, hstack(restrict.matrix, power(G, t).relations()));
  IntegerSolver rel(RQ);
  IntegerMatrix g1(t, t);
  for (std::size_t c = 0; c < t; ++c) g1.set_column(c, rel.solve_or_throw((D.tail_map * RQ).column(c)));
  auto [ext_group, ext_map] = canonical_endomorphism(E, kronecker(g1.transpose(), Ib));
  LimReport ext_lim = lim_report(Tower::periodic(ext_group, ext_map));

  HomExtLimReport rep;
  rep.lim1_hom_vanishes = hom_lim.lim1_vanishes;
  rep.ext_colim = ext(Q, G);
  rep.lim_ext = ext_lim.lim;
  rep.lim2_hom = FGAbelianGroup::trivial();
  rep.exact = rep.lim1_hom_vanishes && rep.ext_colim == rep.lim_ext && ext_group == rep.ext_colim;
  return rep;
}

}  // namespace ashom
