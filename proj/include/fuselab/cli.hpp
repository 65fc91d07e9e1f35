#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fuselab/catalog.hpp"
#include "fuselab/gauge.hpp"
#include "fuselab/invariant.hpp"
#include "fuselab/io.hpp"
#include "fuselab/nimrep.hpp"
#include "fuselab/oracle.hpp"

namespace fuselab {

/// One CLI invocation, independent of how the arguments were parsed.
struct JobSpec {
  std::vector<std::string> command;  // e.g. {"invariant", "search"}
  std::string data;                  // catalog id or path to a JSON document
  std::optional<int> level;          // completes a bare "su2" id
  std::string graph;                 // A:n, D:n, E:n, regular, custom:<file>, joined with '+'
  std::string gauge;                 // gauge document
  std::string z;                     // invariant document or integer grid
  std::string format = "human";      // human | json
  std::optional<int> bound;
  int digits = 12;
  std::optional<std::uint64_t> cap;
};

struct RunResult {
  int exit_code = 0;  // 0 pass, 1 mathematical failure, 2 input error
  Json report;
  std::optional<std::string> document;  // `catalog export` prints this verbatim
};

inline constexpr int kDefaultEntryBound = 3;

namespace cli_detail {

// Everything the handlers need, resolved once from the job.
struct Inputs {
  std::optional<ModularData> md;
  std::optional<FusionRing> ring;
};

inline bool looks_like_path(const std::string& s) {
  return s.find('/') != std::string::npos || s.ends_with(".json") || std::filesystem::exists(s);
}

inline std::string catalog_id(const JobSpec& job) {
  std::string id = job.data;
  if (id == "su2") {
    if (!job.level) throw ParseError("--data su2 needs --level");
    id += ":" + std::to_string(*job.level);
  } else if (job.level) {
    const auto md_level = id.starts_with("su2:") ? id.substr(4) : std::string();
    if (md_level != std::to_string(*job.level)) throw ParseError("--level conflicts with --data " + id);
  }
  return id;
}

// Without `validate`, a data file is only checked for well-formedness; used by
// verify-fusion so that a failing object is reported rather than rejected.
inline Inputs load_inputs(const JobSpec& job, bool validate = true) {
  Inputs in;
  if (job.data.empty()) throw ParseError("missing --data");
  if (!job.data.starts_with("su2") && looks_like_path(job.data)) {
    auto obj = parse_data_file(job.data, validate);
    if (auto* md = std::get_if<ModularData>(&obj)) {
      in.ring = md->ring();
      in.md = std::move(*md);
    } else if (auto* r = std::get_if<FusionRing>(&obj)) {
      in.ring = std::move(*r);
    } else {
      throw ParseError(job.data + ": expected a fusion-ring or modular-data document");
    }
    return in;
  }
  in.md = catalog(catalog_id(job));
  in.ring = in.md->ring();
  return in;
}

inline const ModularData& need_md(const Inputs& in) {
  if (!in.md) throw ParseError("this command needs modular data, not a bare fusion ring");
  return *in.md;
}

/// Level l when the ring is exactly the su(2)_l fusion ring.
inline std::optional<int> su2_level(const FusionRing& R) {
  if (R == su2_fusion_ring(R.rank() - 1)) return R.rank() - 1;
  return std::nullopt;
}

struct Module {
  NimRep nr;
  std::optional<BoundaryGraph> graph;  // set when every summand is a graph
};

inline Module build_module(const JobSpec& job, const ModularData& md) {
  if (job.graph.empty()) throw ParseError("missing --graph");
  std::vector<std::string> parts;
  std::stringstream ss(job.graph);
  for (std::string p; std::getline(ss, p, '+');) parts.push_back(p);

  std::optional<Module> acc;
  for (const auto& p : parts) {
    Module m;
    if (p == "regular") {
      m.nr = regular_nimrep(md.ring());
    } else {
      BoundaryGraph g;
      const auto colon = p.find(':');
      if (colon == std::string::npos) throw ParseError("graph spec '" + p + "' must look like A:n, D:n, E:n, custom:<file> or regular");
      const std::string fam = p.substr(0, colon), arg = p.substr(colon + 1);
      if (fam == "custom") {
        g = expect_kind<BoundaryGraph>(parse_data_file(arg), "graph");
      } else if (fam == "A" || fam == "D" || fam == "E") {
        const auto n = detail::parse_small_int(arg);
        if (!n) throw ParseError("graph rank must be a non-negative integer: " + p);
        try {
          g = ade_graph(fam[0], *n);
        } catch (const Error& e) {
          throw ParseError(e.what());
        }
      } else {
        throw ParseError("unknown graph family '" + fam + "'");
      }
      const auto level = su2_level(md.ring());
      if (!level) throw ParseError("graph NIM-reps are built for su2 data only; use --graph regular");
      m.nr = su2_nimrep_from_graph(g, *level);
      m.graph = std::move(g);
    }
    if (!acc) {
      acc = std::move(m);
    } else {
      acc->nr = direct_sum(acc->nr, m.nr);
      acc->graph = acc->graph && m.graph ? std::optional(disjoint_union(*acc->graph, *m.graph)) : std::nullopt;
    }
  }
  return std::move(*acc);
}

inline std::uint64_t search_cap(const JobSpec& job) {
  if (job.cap) return *job.cap;
  if (const char* env = std::getenv("FUSELAB_SEARCH_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw ParseError("FUSELAB_SEARCH_CAP must be a positive integer");
    return v;
  }
  return kDefaultSearchCap;
}

inline Json verdict_json(const std::string& name, const Verdict& v) {
  Json j{{"check", name}, {"ok", v.ok}};
  if (!v.ok) {
    j["failed"] = v.check;
    j["witness"] = v.witness;
    if (!v.detail.empty()) j["detail"] = v.detail;
  }
  return j;
}

inline Json int_vector(std::span<const std::int64_t> v) { return Json(std::vector<std::int64_t>(v.begin(), v.end())); }

inline Json scalar(const CycloNumber& x, int digits) {
  const auto c = embed_complex(x, digits);
  Json j{{"exact", x.to_string()}, {"real", c.real}};
  if (!x.is_rational() && c.approx.imag() != 0.0) j["imag"] = c.imag;
  return j;
}

inline Json z_rows(const IntMatrix& Z) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < Z.rows(); ++i) {
    std::string s;
    for (std::size_t j = 0; j < Z.cols(); ++j) s += (j ? " " : "") + std::to_string(Z(i, j));
    rows.push_back(s);
  }
  return rows;
}

inline Json diagonal_of(const IntMatrix& Z, const FusionRing& R) {
  std::vector<std::int64_t> d;
  for (int I = 0; I < R.rank(); ++I) d.push_back(Z(I, R.dual(I)));
  return d;
}

// --- handlers: each fills `rep` and returns whether every check passed ---

inline bool cmd_catalog_list(Json& rep) {
  Json e = Json::array();
  for (const auto& c : catalog_entries()) e.push_back({{"id", c.id}, {"description", c.description}});
  rep["entries"] = std::move(e);
  return true;
}

inline bool cmd_catalog_show(const JobSpec& job, const Inputs& in, Json& rep) {
  const auto& md = need_md(in);
  rep["name"] = md.name();
  rep["rank"] = md.rank();
  rep["labels"] = md.ring().labels();
  Json dims = Json::array();
  for (int I = 0; I < md.rank(); ++I)
    dims.push_back({{"label", md.ring().label(I)}, {"d", md.d()[I].to_string()}, {"d_approx", embed_complex(md.d()[I], job.digits).real},
                    {"t", md.t()[I].to_string()}});
  rep["simples"] = std::move(dims);
  rep["global_dim"] = scalar(md.global_dim(), job.digits);
  rep["document"] = to_json(md);
  return true;
}

inline bool cmd_verify_fusion(const Inputs& in, Json& rep) {
  Json checks = Json::array();
  const Verdict ax = verify_axioms(*in.ring);
  checks.push_back(verdict_json("fusion axioms", ax));
  bool ok = ax.ok;
  if (in.md && ax.ok) {
    const Verdict mv = verify_modular_data(*in.md);
    checks.push_back(verdict_json("modular data", mv));
    ok = ok && mv.ok;
  }
  rep["rank"] = in.ring->rank();
  rep["checks"] = std::move(checks);
  return ok;
}

inline bool cmd_spectrum(const JobSpec& job, const Inputs& in, Json& rep) {
  const auto& md = need_md(in);
  const auto& spec = md.spectrum();
  const auto& idem = md.spectral_idempotents();
  Json pts = Json::array();
  bool ok = true;
  for (int I = 0; I < md.rank(); ++I) {
    Json vals = Json::array();
    for (const auto& v : spec[I].values) vals.push_back(v.to_string());
    const bool agree = idem[I] == tube_idempotent(md, I);
    ok = ok && agree;
    pts.push_back({{"label", md.ring().label(I)},
                   {"norm_sq", spec[I].norm_sq.to_string()},
                   {"norm_sq_approx", embed_complex(spec[I].norm_sq, job.digits).real},
                   {"values", std::move(vals)},
                   {"e_lambda_equals_1_I", agree}});
  }
  rep["points"] = std::move(pts);
  return ok;
}

inline bool cmd_nimrep_check(const JobSpec& job, const Inputs& in, Json& rep) {
  const auto& md = need_md(in);
  const Module m = build_module(job, md);
  rep["graph"] = job.graph;
  rep["boundary_labels"] = m.nr.boundary_labels;
  rep["character"] = int_vector(character(m.nr));
  rep["indecomposable"] = is_indecomposable(m.nr);
  rep["checks"] = Json::array({verdict_json("NIM-rep axioms", Verdict::pass())});
  return true;
}

inline std::vector<std::int64_t> oracle_for(const Module& m, const ModularData& md, Json& rep) {
  if (!m.graph) return {};
  const auto o = adjacency_eigen_oracle(m.graph->adjacency, md.rank() + 1);
  rep["oracle"] = o.counts;
  rep["oracle_unmatched"] = o.unmatched;
  return o.counts;
}

inline bool cmd_profile(const JobSpec& job, const Inputs& in, Json& rep) {
  const auto& md = need_md(in);
  const Module m = build_module(job, md);
  const auto prof = multiplicity_profile(m.nr, md);
  rep["graph"] = job.graph;
  rep["labels"] = md.ring().labels();
  rep["profile"] = prof;
  const auto oracle = oracle_for(m, md, rep);
  if (!m.graph) return true;
  const bool agree = oracle == prof && rep["oracle_unmatched"] == 0;
  rep["checks"] = Json::array({verdict_json("profile = eigen-oracle", agree ? Verdict::pass() : Verdict::fail("oracle mismatch", {}))});
  return agree;
}

inline bool cmd_gauge_solve(const JobSpec& job, const Inputs* in, Json& rep) {
  if (!job.gauge.empty()) {
    const auto gp = expect_kind<GaugeProblem>(parse_data_file(job.gauge, false), "gauge");
    const Verdict v = validate_mu(gp);
    Json check = verdict_json("cocycle", v);
    if (!v.ok) {
      std::vector<std::string> names;
      for (int w : v.witness) names.push_back(gp.nodes.at(w));
      check["witness_nodes"] = names;
      rep["checks"] = Json::array({std::move(check)});
      return false;
    }
    const auto sol = solve_gauge(gp);
    Json comps = Json::array();
    for (const auto& c : sol.components) {
      Json lam = Json::array();
      for (int i : c) lam.push_back({{"node", gp.nodes[i]}, {"lambda", sol.lambda[i].to_string()}});
      comps.push_back({{"root", gp.nodes[c.front()]}, {"lambda", std::move(lam)}});
    }
    rep["components"] = std::move(comps);
    rep["checks"] = Json::array({std::move(check)});
    return true;
  }
  if (!in) throw ParseError("gauge solve needs --gauge, or --data with --graph");
  const auto& md = need_md(*in);
  const Module m = build_module(job, md);
  const auto lambda = d_eigenvector(m.nr, md);
  const auto phi = verify_phi_isomorphism(m.nr, lambda, md);
  const auto E = encircling_matrices(m.nr, lambda);
  const auto profE = multiplicity_profile_from_traces(encircling_traces(E), md);
  const auto profN = multiplicity_profile(m.nr, md);
  Json lam = Json::array();
  for (int i = 0; i < m.nr.size(); ++i)
    lam.push_back({{"node", m.nr.boundary_labels[i]}, {"lambda", lambda[i].to_string()},
                   {"approx", embed_complex(lambda[i], job.digits).real}});
  rep["graph"] = job.graph;
  rep["lambda"] = std::move(lam);
  rep["intertwiner"] = phi.intertwiner;
  rep["lambda_is_d_eigenvector"] = phi.lambda_is_d_eigenvector;
  rep["ones_is_d_eigenvector_of_E"] = phi.ones_is_d_eigenvector;
  rep["profile_N"] = profN;
  rep["profile_E"] = profE;
  const Verdict same = profE == profN ? Verdict::pass() : Verdict::fail("profiles differ", {});
  rep["checks"] = Json::array({verdict_json("phi isomorphism", phi.verdict), verdict_json("profile of E = profile of N", same)});
  return phi.verdict.ok && same.ok;
}

inline bool cmd_tm_dim(const JobSpec& job, const Inputs& in, Json& rep) {
  const auto& md = need_md(in);
  const Module m = build_module(job, md);
  const auto r = tm_dimension_report(m.nr, md);
  rep["graph"] = job.graph;
  rep["dTM"] = scalar(r.dTM, job.digits);
  rep["global_dim"] = scalar(md.global_dim(), job.digits);
  rep["mult_of_unit"] = r.mult_of_unit;
  rep["indecomposable"] = r.indecomposable;
  rep["unit_space_trivial"] = r.unit_space_trivial;
  rep["dTM_equals_global_dim"] = r.dimension_is_global;
  rep["verdict"] = r.indecomposable ? "indecomposable" : "decomposable";
  const Verdict f = r.dimension_formula ? Verdict::pass() : Verdict::fail("d(TM) != mult_of_unit * d(C)", {});
  const Verdict c = r.consistent() ? Verdict::pass() : Verdict::fail("equivalences disagree", {});
  rep["checks"] = Json::array({verdict_json("dimension formula", f), verdict_json("equivalences agree", c)});
  return f.ok && c.ok;
}

inline bool cmd_invariant_verify(const JobSpec& job, const Inputs& in, Json& rep) {
  const auto& md = need_md(in);
  if (job.z.empty()) throw ParseError("missing --z");
  const auto z = load_invariant(job.z);
  const auto v = verify_invariant(z.Z, md);
  Json checks = Json::array({verdict_json("integrality", v.integrality), verdict_json("Z00", v.unit),
                             verdict_json("S-commutation", v.s_commutation), verdict_json("T-compatibility", v.t_compatibility)});
  bool ok = v.ok();
  if (!job.graph.empty()) {
    const Module m = build_module(job, md);
    const Verdict d = match_diagonal(z.Z, m.nr, md);
    checks.push_back(verdict_json("diagonal = NIM-rep profile", d));
    ok = ok && d.ok;
  }
  rep["Z"] = z_rows(z.Z);
  rep["checks"] = std::move(checks);
  return ok;
}

inline bool cmd_invariant_search(const JobSpec& job, const Inputs& in, Json& rep) {
  const auto& md = need_md(in);
  const int bound = job.bound.value_or(kDefaultEntryBound);
  const auto cb = commutant_basis(md);
  const auto found = enumerate_invariants(md, bound, search_cap(job), &cb);
  std::optional<Module> m;
  if (!job.graph.empty()) m = build_module(job, md);
  rep["bound"] = bound;
  rep["commutant_dimension"] = cb.dimension();
  rep["count"] = found.size();
  Json list = Json::array();
  for (const auto& z : found) {
    Json e{{"diagonal", diagonal_of(z.Z, md.ring())}, {"Z", z_rows(z.Z)}};
    if (m) e["matches_profile"] = match_diagonal(z.Z, m->nr, md).ok;
    list.push_back(std::move(e));
  }
  rep["invariants"] = std::move(list);
  if (m) rep["off_diagonal_status"] = "conjectural";
  return true;
}

/// Build the NIM-rep, compare its exact profile with the eigen-oracle, then
/// look for an enumerated invariant whose diagonal is that profile.
inline bool cmd_diag_theorem(const JobSpec& job, const Inputs& in, Json& rep) {
  const auto& md = need_md(in);
  const Module m = build_module(job, md);
  const auto prof = multiplicity_profile(m.nr, md);
  rep["graph"] = job.graph;
  rep["labels"] = md.ring().labels();
  rep["diagonal"] = prof;
  Json checks = Json::array();
  bool ok = true;
  if (m.graph) {
    const auto oracle = oracle_for(m, md, rep);
    const bool agree = oracle == prof && rep["oracle_unmatched"] == 0;
    checks.push_back(verdict_json("profile = eigen-oracle", agree ? Verdict::pass() : Verdict::fail("oracle mismatch", {})));
    ok = ok && agree;
  }
  const int bound = job.bound.value_or(static_cast<int>(std::max<std::int64_t>(1, *std::max_element(prof.begin(), prof.end()))));
  const auto found = enumerate_invariants(md, bound, search_cap(job));
  Json matches = Json::array();
  for (const auto& z : found)
    if (match_diagonal(z.Z, m.nr, md).ok) matches.push_back(z_rows(z.Z));
  rep["bound"] = bound;
  rep["candidates"] = found.size();
  rep["matching_invariants"] = matches;
  rep["off_diagonal_status"] = "conjectural";  // only Z_{I,I*} is tied to the NIM-rep
  checks.push_back(verdict_json("some invariant has this diagonal",
                                matches.empty() ? Verdict::fail("no enumerated invariant matches", {}) : Verdict::pass()));
  ok = ok && !matches.empty();
  rep["checks"] = std::move(checks);
  return ok;
}

inline std::string error_type(const Error& e) {
#define FUSELAB_NAME(T) \
  if (dynamic_cast<const T*>(&e)) return #T;
  FUSELAB_NAME(ParseError)
  FUSELAB_NAME(ValidationError)
  FUSELAB_NAME(ShapeMismatch)
  FUSELAB_NAME(MissingPair)
  FUSELAB_NAME(SearchBudgetExceeded)
  FUSELAB_NAME(Overflow)
  FUSELAB_NAME(NotANimRep)
  FUSELAB_NAME(MultiplicityNotOne)
  FUSELAB_NAME(NonIntegralMultiplicity)
  FUSELAB_NAME(NonIntegralVerlinde)
  FUSELAB_NAME(DegenerateScalar)
#undef FUSELAB_NAME
  return "Error";
}

inline bool is_mathematical(const Error& e) {
  return dynamic_cast<const NotANimRep*>(&e) || dynamic_cast<const MultiplicityNotOne*>(&e) ||
         dynamic_cast<const NonIntegralMultiplicity*>(&e) || dynamic_cast<const NonIntegralVerlinde*>(&e) ||
         dynamic_cast<const DegenerateScalar*>(&e);
}

inline std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

}  // namespace cli_detail

inline RunResult run(const JobSpec& job) {
  using namespace cli_detail;
  RunResult res;
  Json& rep = res.report;
  rep["schema_version"] = kSchemaVersion;
  rep["command"] = join(job.command, " ");
  rep["status"] = "pass";
  if (!job.data.empty()) rep["data"] = job.data;
  if (job.level) rep["level"] = *job.level;

  const std::string cmd = rep["command"];
  try {
    if (job.format != "human" && job.format != "json") throw ParseError("--format must be human or json");
    if (job.bound && *job.bound < 1) throw ParseError("--bound must be at least 1");
    if (job.digits < 1 || job.digits > 1000) throw ParseError("--digits must be in 1..1000");
    bool ok = true;
    if (cmd == "catalog list") {
      ok = cmd_catalog_list(rep);
    } else if (cmd == "gauge solve" && !job.gauge.empty()) {
      ok = cmd_gauge_solve(job, nullptr, rep);
    } else {
      static const std::vector<std::string> known = {"catalog show", "catalog export", "verify-fusion", "spectrum", "nimrep check", "profile",
                                                     "gauge solve", "tm-dim", "invariant verify", "invariant search", "diag-theorem"};
      if (std::find(known.begin(), known.end(), cmd) == known.end()) throw ParseError("unknown command '" + cmd + "'");
      const Inputs in = load_inputs(job, cmd != "verify-fusion");
      if (cmd == "catalog export") res.document = serialize(need_md(in));
      else if (cmd == "catalog show") ok = cmd_catalog_show(job, in, rep);
      else if (cmd == "verify-fusion") ok = cmd_verify_fusion(in, rep);
      else if (cmd == "spectrum") ok = cmd_spectrum(job, in, rep);
      else if (cmd == "nimrep check") ok = cmd_nimrep_check(job, in, rep);
      else if (cmd == "profile") ok = cmd_profile(job, in, rep);
      else if (cmd == "gauge solve") ok = cmd_gauge_solve(job, &in, rep);
      else if (cmd == "tm-dim") ok = cmd_tm_dim(job, in, rep);
      else if (cmd == "invariant verify") ok = cmd_invariant_verify(job, in, rep);
      else if (cmd == "invariant search") ok = cmd_invariant_search(job, in, rep);
      else ok = cmd_diag_theorem(job, in, rep);
    }
    if (!ok) {
      rep["status"] = "fail";
      res.exit_code = 1;
    }
  } catch (const Error& e) {
    const bool math = is_mathematical(e);
    rep["status"] = math ? "fail" : "error";
    Json err{{"type", error_type(e)}, {"message", e.what()}};
    if (!e.witness().empty()) err["witness"] = e.witness();
    rep["error"] = std::move(err);
    res.exit_code = math ? 1 : 2;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Human rendering of a report document

namespace cli_detail {

inline std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

inline bool is_flat_array(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
}

inline std::string flat_text(const Json& j) {
  std::string s = "(";
  bool first = true;
  for (const auto& x : j) {
    s += (first ? "" : ",") + scalar_text(x);
    first = false;
  }
  return s + ")";
}

inline bool is_table(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& row : j) {
    if (!row.is_object()) return false;
    for (const auto& [k, v] : row.items())
      if (!v.is_primitive() && !is_flat_array(v)) return false;
  }
  return true;
}

inline void render(std::ostringstream& os, const Json& j, int indent);

inline void render_table(std::ostringstream& os, const Json& rows, int indent) {
  std::vector<std::string> cols;
  for (const auto& row : rows)
    for (const auto& [k, v] : row.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::string s;
      if (row.contains(cols[c])) s = is_flat_array(row[cols[c]]) ? flat_text(row[cols[c]]) : scalar_text(row[cols[c]]);
      width[c] = std::max(width[c], s.size());
      line.push_back(std::move(s));
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    os << std::string(indent, ' ');
    for (std::size_t c = 0; c < line.size(); ++c) {
      os << line[c];
      if (c + 1 < line.size()) os << std::string(width[c] - line[c].size() + 2, ' ');
    }
    os << "\n";
  };
  emit(cols);
  for (const auto& l : cells) emit(l);
}

inline void render(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [k, v] : j.items()) {
    if (v.is_primitive()) {
      os << pad << k << ": " << scalar_text(v) << "\n";
    } else if (is_flat_array(v)) {
      const bool strings = !v.empty() && v.front().is_string() && k == "Z";
      if (strings) {
        os << pad << k << ":\n";
        for (const auto& row : v) os << pad << "  " << row.get<std::string>() << "\n";
      } else {
        os << pad << k << ": " << flat_text(v) << "\n";
      }
    } else if (is_table(v)) {
      os << pad << k << ":\n";
      render_table(os, v, indent + 2);
    } else if (v.is_array()) {
      os << pad << k << ":\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_object()) {
          os << pad << "  [" << i << "]\n";
          render(os, v[i], indent + 4);
        } else if (is_flat_array(v[i]) && !v[i].empty() && v[i].front().is_string()) {
          os << pad << "  [" << i << "]\n";
          for (const auto& row : v[i]) os << pad << "    " << scalar_text(row) << "\n";
        } else {
          os << pad << "  " << v[i].dump() << "\n";
        }
      }
    } else {
      os << pad << k << ":\n";
      render(os, v, indent + 2);
    }
  }
}

}  // namespace cli_detail

inline std::string render_report(const Json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  std::ostringstream os;
  Json shown = report;
  if (shown.contains("document")) shown.erase("document");  // raw data is only useful in json mode
  cli_detail::render(os, shown, 0);
  return os.str();
}

}  // namespace fuselab
