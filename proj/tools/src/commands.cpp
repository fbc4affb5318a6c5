#include "commands.hpp"

#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ashom/corpus.hpp"
#include "ashom/io.hpp"
#include "ashom/normal_homology.hpp"
#include "ashom/towers.hpp"
#include "json.hpp"

namespace ashom::cli {
namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  const JobSpec& job;
  std::ostream& out;
  SaturationOptions options;
  FGAbelianGroup coeff;
};

bool is_space_document(const std::string& text) {
  auto j = json::parse(text, nullptr, false);
  return j.is_object() && j.contains("points");
}

const std::string& only_cover(const FiniteCoveredSpace& S) {
  if (S.coverings.size() != 1) throw UsageError("the space has several coverings; choose one with --cover");
  return S.coverings.begin()->first;
}

// A complex file, or a space file reduced to its normal cochain complex.
IntegerCochainComplex load_complex(const JobSpec& job) {
  if (job.input.empty()) throw UsageError(job.command + " needs an input file");
  std::string text = read_file(job.input);
  if (!is_space_document(text)) {
    if (!job.cover.empty() || !job.subcover.empty()) throw UsageError("--cover needs a space file");
    return parse_complex(text);
  }
  FiniteCoveredSpace S = parse_space(text);
  const std::string& alpha = job.cover.empty() ? only_cover(S) : job.cover;
  if (job.subcover.empty()) return normal_cochain_complex(S, S.covering(alpha));
  CoveringPair p = make_covering_pair(S.covering(alpha), S.covering(job.subcover));
  validate_pair(S, p);
  return normal_cochain_complex(S, p);
}

std::pair<int, int> degrees_or(const JobSpec& job, int lo, int hi) { return job.degrees.value_or(std::make_pair(lo, hi)); }

json moduli_json(const std::vector<Integer>& moduli) {
  json m = json::array();
  for (const auto& N : moduli) m.push_back(N.str());
  return m;
}

void emit(Context& ctx, const json& report, const std::string& text) {
  if (ctx.job.json)
    ctx.out << report.dump(2) << "\n";
  else
    ctx.out << text;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

json sequence_json(const LongExactSequenceReport& r) {
  json terms = json::array();
  for (std::size_t k = 0; k < r.terms.size(); ++k)
    terms.push_back({{"label", r.terms[k].label}, {"group", r.terms[k].group.to_string()}, {"exact", bool(r.exact[k])}});
  return terms;
}

std::string sequence_text(const LongExactSequenceReport& r) {
  std::ostringstream s;
  std::size_t w = 8;
  for (const auto& t : r.terms) w = std::max(w, t.label.size() + 2);
  for (std::size_t k = 0; k < r.terms.size(); ++k)
    s << pad(r.terms[k].label, w) << pad(r.terms[k].group.to_string(), 16) << (r.exact[k] ? "exact" : "NOT EXACT")
      << "\n";
  s << (r.all_exact() ? "pass" : "FAIL") << ": " << r.failures() << " failing terms\n";
  return s.str();
}

int cmd_cohomology(Context& ctx) {
  IntegerCochainComplex C = load_complex(ctx.job);
  auto [a, b] = degrees_or(ctx.job, C.lo(), C.hi());
  json rows = json::array();
  std::ostringstream text;
  text << "degree  H^n\n";
  for (int n = a; n <= b; ++n) {
    FGAbelianGroup H = C.cohomology(n);
    rows.push_back({{"degree", n}, {"group", H.to_string()}});
    text << pad(std::to_string(n), 8) << H.to_string() << "\n";
  }
  emit(ctx, {{"command", "cohomology"}, {"degrees", rows}}, text.str());
  return kPass;
}

int cmd_homology(Context& ctx) {
  IntegerCochainComplex C = load_complex(ctx.job);
  auto [a, b] = degrees_or(ctx.job, C.lo() - 1, C.hi() + 1);
  json rows = json::array();
  std::ostringstream text;
  text << "degree  H_n(C; " << ctx.coeff.to_string() << ")\n";
  for (int n = a; n <= b; ++n) {
    HomologyResult h = homology(C, ctx.coeff, n, ctx.options);
    rows.push_back({{"degree", n}, {"group", h.group.to_string()}, {"moduli", moduli_json(h.moduli)}});
    text << pad(std::to_string(n), 8) << h.group.to_string() << "\n";
  }
  emit(ctx, {{"command", "homology"}, {"coefficient", ctx.coeff.to_string()}, {"degrees", rows}}, text.str());
  return kPass;
}

void ucf_rows(Context& ctx, const std::string& name, const IntegerCochainComplex& C, const FGAbelianGroup& G, int a,
              int b, json& rows, std::ostringstream& text, bool& ok) {
  for (int n = a; n <= b; ++n) {
    UCFReport r = ucf_check(C, G, n, ctx.options);
    ok = ok && r.pass();
    json row{{"degree", n},
             {"coefficient", G.to_string()},
             {"hom", r.hom_part.to_string()},
             {"ext", r.ext_part.to_string()},
             {"homology", r.homology_group.to_string()},
             {"rho_surjective", r.rho_surjective},
             {"kernel_is_ext", r.kernel_iso_to_ext},
             {"pass", r.pass()}};
    if (!name.empty()) row["complex"] = name;
    rows.push_back(row);
    if (!name.empty()) text << name << " ";
    text << "degree " << n << ": Hom=" << r.hom_part.to_string() << ", Ext=" << r.ext_part.to_string() << ", H_" << n
         << "=" << r.homology_group.to_string() << (r.rho_surjective ? ", rho onto" : ", rho NOT onto")
         << (r.kernel_iso_to_ext ? ", ker rho = Ext" : ", ker rho != Ext") << ": " << (r.pass() ? "pass" : "FAIL")
         << "\n";
  }
}

int cmd_ucf_check(Context& ctx) {
  json rows = json::array();
  std::ostringstream text;
  bool ok = true;
  if (ctx.job.input.empty()) {
    // Corpus sweep: golden complexes and random ones drawn from --seed.
    std::mt19937_64 rng(ctx.job.seed);
    std::vector<NamedComplex> corpus = golden_corpus();
    for (int k = 0; k < 100; ++k) corpus.push_back({"random-" + std::to_string(k), random_complex(rng)});
    std::size_t checks = 0;
    for (const auto& [name, C] : corpus)
      for (const auto& G : corpus_coefficients()) {
        json part = json::array();
        std::ostringstream ignored;
        ucf_rows(ctx, name, C, G, C.lo() - 1, C.hi(), part, ignored, ok);
        for (auto& r : part)
          if (!r["pass"].get<bool>()) rows.push_back(r);
        checks += part.size();
      }
    text << "checked " << checks << " degrees over " << corpus.size() << " complexes (seed " << ctx.job.seed
         << "): " << rows.size() << " failures\n";
    emit(ctx, {{"command", "ucf-check"}, {"seed", ctx.job.seed}, {"checks", checks}, {"failures", rows}, {"pass", ok}},
         text.str());
    return ok ? kPass : kCheckFailed;
  }
  IntegerCochainComplex C = load_complex(ctx.job);
  auto [a, b] = degrees_or(ctx.job, C.lo() - 1, C.hi());
  ucf_rows(ctx, "", C, ctx.coeff, a, b, rows, text, ok);
  emit(ctx, {{"command", "ucf-check"}, {"degrees", rows}, {"pass", ok}}, text.str());
  return ok ? kPass : kCheckFailed;
}

int cmd_dowker_check(Context& ctx) {
  if (ctx.job.sweep || ctx.job.input.empty()) {
    DowkerSweepReport r = dowker_sweep(6, 4, 2);
    std::ostringstream text;
    text << "swept " << r.covers << " coverings of " << r.spaces << " point sets, " << r.comparisons
         << " comparisons: " << r.failures << " failures\n";
    for (const auto& e : r.failure_examples) text << "  " << e << "\n";
    emit(ctx,
         {{"command", "dowker-check"},
          {"covers", r.covers},
          {"comparisons", r.comparisons},
          {"failures", r.failures},
          {"examples", r.failure_examples},
          {"pass", r.failures == 0}},
         text.str());
    return r.failures == 0 ? kPass : kCheckFailed;
  }
  FiniteCoveredSpace S = parse_space(read_file(ctx.job.input));
  std::vector<std::string> names;
  if (!ctx.job.cover.empty()) {
    S.covering(ctx.job.cover);
    names.push_back(ctx.job.cover);
  } else {
    for (const auto& [name, c] : S.coverings) names.push_back(name);
  }
  bool ok = true;
  json rows = json::array();
  std::ostringstream text;
  text << "cover           degree  H^n(X(alpha))   H^n(N(alpha))\n";
  for (const auto& name : names) {
    const Covering& alpha = S.covering(name);
    IntegerCochainComplex V = simplicial_cochain_complex(vietoris_complex(S.points, alpha));
    IntegerCochainComplex N = simplicial_cochain_complex(nerve(alpha));
    auto [a, b] = degrees_or(ctx.job, 0, std::max(V.hi(), N.hi()));
    for (int n = a; n <= b; ++n) {
      FGAbelianGroup hv = V.cohomology(n), hn = N.cohomology(n);
      ok = ok && hv == hn;
      rows.push_back({{"cover", name}, {"degree", n}, {"vietoris", hv.to_string()}, {"nerve", hn.to_string()},
                      {"equal", hv == hn}});
      text << pad(name, 16) << pad(std::to_string(n), 8) << pad(hv.to_string(), 16) << hn.to_string()
           << (hv == hn ? "" : "  MISMATCH") << "\n";
    }
  }
  text << (ok ? "pass" : "FAIL") << "\n";
  emit(ctx, {{"command", "dowker-check"}, {"degrees", rows}, {"pass", ok}}, text.str());
  return ok ? kPass : kCheckFailed;
}

int cmd_pair_check(Context& ctx) {
  if (ctx.job.input.empty()) throw UsageError("pair-check needs a space file");
  if (ctx.job.subcover.empty()) throw UsageError("pair-check needs --subcover");
  FiniteCoveredSpace S = parse_space(read_file(ctx.job.input));
  const std::string& alpha = ctx.job.cover.empty() ? only_cover(S) : ctx.job.cover;
  CoveringPair p = make_covering_pair(S.covering(alpha), S.covering(ctx.job.subcover));
  validate_pair(S, p);
  LongExactSequenceReport r = pair_sequence_check(S, p, ctx.coeff, ctx.options);
  emit(ctx,
       {{"command", "pair-check"}, {"coefficient", ctx.coeff.to_string()}, {"terms", sequence_json(r)},
        {"pass", r.all_exact()}},
       sequence_text(r));
  return r.all_exact() ? kPass : kCheckFailed;
}

int cmd_dimension_check(Context& ctx) {
  DimensionReport r = dimension_check(ctx.coeff, ctx.options);
  json rows = json::array();
  std::ostringstream text;
  text << "degree  H_n(point; " << ctx.coeff.to_string() << ")\n";
  for (const auto& [n, h] : r.values) {
    rows.push_back({{"degree", n}, {"group", h.to_string()}});
    text << pad(std::to_string(n), 8) << h.to_string() << "\n";
  }
  text << (r.pass ? "pass" : "FAIL") << "\n";
  emit(ctx, {{"command", "dimension-check"}, {"coefficient", ctx.coeff.to_string()}, {"degrees", rows}, {"pass", r.pass}},
       text.str());
  return r.pass ? kPass : kCheckFailed;
}

Tower load_tower(const JobSpec& job) {
  if (job.input.empty()) throw UsageError(job.command + " needs a tower file");
  return parse_tower(read_file(job.input));
}

json lim_json(const LimReport& r) {
  json j{{"lim", r.lim.to_string()}, {"mittag_leffler", r.mittag_leffler}, {"lim1_vanishes", r.lim1_vanishes}};
  j["stabilization_stage"] = r.stabilization_stage ? json(*r.stabilization_stage) : json(nullptr);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string ml_line(const LimReport& r) {
  return std::string("Mittag-Leffler: ") + (r.mittag_leffler ? "true; lim¹ = 0" : "false; " + r.note);
}

int cmd_tower_lim(Context& ctx) {
  LimReport r = lim_report(load_tower(ctx.job));
  std::ostringstream text;
  text << "lim: " << r.lim.to_string() << "\n" << ml_line(r) << "\n";
  if (r.stabilization_stage) text << "images stabilize at stage " << *r.stabilization_stage << "\n";
  json j = lim_json(r);
  j["command"] = "tower-lim";
  emit(ctx, j, text.str());
  return kPass;
}

int cmd_tower_lim1(Context& ctx) {
  LimReport r = lim_report(load_tower(ctx.job));
  json j = lim_json(r);
  j["command"] = "tower-lim1";
  emit(ctx, j, ml_line(r) + "\n");
  return kPass;
}

int cmd_milnor_check(Context& ctx) {
  if (ctx.job.input.empty()) throw UsageError("milnor-check needs an input file");
  MilnorInput in = parse_milnor(read_file(ctx.job.input));
  MilnorReport r = milnor_check(in.towers, in.limits, in.lo);
  json rows = json::array();
  std::ostringstream text;
  for (const auto& d : r.degrees) {
    const char* status = d.status == MilnorDegree::Status::Pass   ? "pass"
                         : d.status == MilnorDegree::Status::Fail ? "FAIL"
                                                                  : "not verifiable";
    rows.push_back({{"degree", d.degree}, {"lim", d.lim.to_string()}, {"claimed", d.claimed.to_string()},
                    {"status", status}, {"message", d.message}});
    text << "degree " << d.degree << ": lim=" << d.lim.to_string() << ", claimed=" << d.claimed.to_string() << ": "
         << status << " (" << d.message << ")\n";
  }
  emit(ctx, {{"command", "milnor-check"}, {"degrees", rows}, {"pass", r.pass()}}, text.str());
  return r.pass() ? kPass : kCheckFailed;
}

int cmd_coefficient_les(Context& ctx) {
  if (ctx.job.ses.empty()) throw UsageError("coefficient-les needs --ses");
  IntegerCochainComplex C = load_complex(ctx.job);
  GroupExtension S = parse_extension(read_file(ctx.job.ses));
  LongExactSequenceReport r = coefficient_les(C, S, ctx.options);
  emit(ctx, {{"command", "coefficient-les"}, {"terms", sequence_json(r)}, {"pass", r.all_exact()}}, sequence_text(r));
  return r.all_exact() ? kPass : kCheckFailed;
}

}  // namespace

std::pair<int, int> parse_degree_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad degree: " + text);
    return v;
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int n = to_int(text);
    return {n, n};
  }
  int a = to_int(text.substr(0, dots)), b = to_int(text.substr(dots + 2));
  if (a > b) throw std::invalid_argument("empty degree range: " + text);
  return {a, b};
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    Context ctx{job, out, {}, {}};
    try {
      ctx.coeff = parse_group(job.coeff);
    } catch (const std::exception& e) {
      throw UsageError("bad --coeff: " + std::string(e.what()));
    }
    if (job.modulus_cap) {
      try {
        ctx.options.modulus_cap = Integer(*job.modulus_cap);
      } catch (const std::exception&) {
        throw UsageError("bad --modulus-cap: " + *job.modulus_cap);
      }
    }
    const std::string& c = job.command;
    if (c == "cohomology") return cmd_cohomology(ctx);
    if (c == "homology") return cmd_homology(ctx);
    if (c == "ucf-check") return cmd_ucf_check(ctx);
    if (c == "dowker-check") return cmd_dowker_check(ctx);
    if (c == "pair-check") return cmd_pair_check(ctx);
    if (c == "dimension-check") return cmd_dimension_check(ctx);
    if (c == "tower-lim") return cmd_tower_lim(ctx);
    if (c == "tower-lim1") return cmd_tower_lim1(ctx);
    if (c == "milnor-check") return cmd_milnor_check(ctx);
    if (c == "coefficient-les") return cmd_coefficient_les(ctx);
    throw UsageError("unknown command " + c);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return kSchemaError;
  } catch (const UnknownCovering& e) {
    err << "schema error: " << e.what() << "\n";
    return kSchemaError;
  } catch (const NotARefinement& e) {
    err << "schema error: " << e.what() << "\n";
    return kSchemaError;
  } catch (const InvariantError& e) {
    err << "invariant error: " << e.what() << "\n";
    return kInvariantError;
  } catch (const FileError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const SaturationFailure& e) {
    err << "saturation failure: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace ashom::cli
