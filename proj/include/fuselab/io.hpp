#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "fuselab/catalog.hpp"
#include "fuselab/cyclotomic.hpp"
#include "fuselab/errors.hpp"
#include "fuselab/fusion_ring.hpp"
#include "fuselab/gauge.hpp"
#include "fuselab/invariant.hpp"
#include "fuselab/modular_data.hpp"
#include "fuselab/nimrep.hpp"

namespace fuselab {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

using DataObject = std::variant<FusionRing, ModularData, BoundaryGraph, GaugeProblem, InvariantMatrix>;

// ---------------------------------------------------------------------------
// Writing

inline Json big_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

inline Json to_json(const mpq_class& q) { return Json::array({big_to_json(q.get_num()), big_to_json(q.get_den())}); }

/// {order, coeffs: [[num, den], ...]} with one pair per power of zeta.
inline Json to_json(const CycloNumber& x) {
  Json c = Json::array();
  for (const auto& q : x.coeffs()) c.push_back(to_json(q));
  return Json{{"order", x.order()}, {"coeffs", std::move(c)}};
}

inline Json int_grid(const IntMatrix& m) {
  Json g = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    g.push_back(std::move(row));
  }
  return g;
}

inline Json ring_body(const FusionRing& R) { return Json{{"labels", R.labels()}, {"dual", R.duals()}, {"N", R.tensor()}}; }

inline Json to_json(const FusionRing& R) {
  Json j{{"kind", "fusion-ring"}, {"schema_version", kSchemaVersion}};
  j.update(ring_body(R));
  return j;
}

inline Json to_json(const ModularData& md) {
  Json S = Json::array();
  for (int I = 0; I < md.rank(); ++I) {
    Json row = Json::array();
    for (int J = 0; J < md.rank(); ++J) row.push_back(to_json(md.S()(I, J)));
    S.push_back(std::move(row));
  }
  Json t = Json::array();
  for (const auto& p : md.t()) t.push_back(to_json(p.value()));
  return Json{{"kind", "modular-data"}, {"schema_version", kSchemaVersion}, {"name", md.name()}, {"ring", ring_body(md.ring())}, {"S", std::move(S)}, {"t", std::move(t)}};
}

inline Json to_json(const BoundaryGraph& g) {
  return Json{{"kind", "graph"},         {"schema_version", kSchemaVersion},   {"vertices", g.vertices},
              {"family", g.family},      {"family_rank", g.family_rank},       {"adjacency", int_grid(g.adjacency)}};
}

inline Json to_json(const GaugeProblem& gp) {
  Json mu = Json::array();
  for (const auto& [p, v] : gp.mu)
    mu.push_back(Json{{"pair", {gp.nodes[p.first], gp.nodes[p.second]}}, {"value", to_json(v)}});
  return Json{{"kind", "gauge"}, {"schema_version", kSchemaVersion}, {"nodes", gp.nodes}, {"mu", std::move(mu)}};
}

inline Json to_json(const InvariantMatrix& z) {
  return Json{{"kind", "invariant"}, {"schema_version", kSchemaVersion}, {"provenance", z.provenance}, {"Z", int_grid(z.Z)}};
}

inline Json to_json(const DataObject& obj) {
  return std::visit([](const auto& x) { return to_json(x); }, obj);
}

inline std::string serialize(const DataObject& obj) { return to_json(obj).dump(2) + "\n"; }

/// Whitespace-separated integer rows, one matrix row per line.
inline std::string int_grid_text(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Reading

namespace detail {

// Cursor into a document that remembers the key path for error messages.
class Field {
 public:
  Field(const Json& j, std::string path) : j_(j), path_(std::move(path)) {}

  const Json& json() const { return j_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(path_ + ": " + what); }

  Field operator[](const std::string& key) const {
    if (!j_.is_object()) fail("expected an object");
    if (!j_.contains(key)) throw ParseError(path_ + ": missing key '" + key + "'");
    return {j_.at(key), path_ + "." + key};
  }
  Field operator[](std::size_t i) const { return {j_.at(i), path_ + "[" + std::to_string(i) + "]"}; }

  bool has(const char* key) const { return j_.is_object() && j_.contains(key); }

  std::size_t array_size() const {
    if (!j_.is_array()) fail("expected an array");
    return j_.size();
  }

  std::string str() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }

  std::int64_t integer() const {
    if (!j_.is_number_integer()) fail("expected an integer");
    return j_.get<std::int64_t>();
  }

  mpz_class big() const {
    if (j_.is_number_integer()) return mpz_class(std::to_string(j_.get<std::int64_t>()));
    if (j_.is_string()) {
      mpz_class z;
      if (z.set_str(j_.get<std::string>(), 10) != 0) fail("not a decimal integer");
      return z;
    }
    fail("expected an integer or a decimal string");
  }

  /// [num, den], or a bare integer.
  mpq_class rational() const {
    if (j_.is_number_integer() || j_.is_string()) return mpq_class(big());
    if (array_size() != 2) fail("expected [numerator, denominator]");
    const mpz_class den = (*this)[1].big();
    if (den == 0) (*this)[1].fail("zero denominator");
    mpq_class q((*this)[0].big(), den);
    q.canonicalize();
    return q;
  }

  /// {"order": n, "coeffs": [...]}, or a plain rational.
  CycloNumber cyclo() const {
    if (!j_.is_object()) return CycloNumber(rational());
    const auto n = (*this)["order"].integer();
    if (n < 1 || n > 100000) (*this)["order"].fail("order must be a positive integer");
    const Field c = (*this)["coeffs"];
    if (c.array_size() != static_cast<std::size_t>(n)) c.fail("expected one [num, den] pair per power, " + std::to_string(n) + " in total");
    std::vector<mpq_class> q;
    for (std::size_t k = 0; k < c.array_size(); ++k) q.push_back(c[k].rational());
    return CycloNumber::from_coeffs(static_cast<int>(n), q);
  }

  std::vector<std::string> strings() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < array_size(); ++i) out.push_back((*this)[i].str());
    return out;
  }

  std::vector<int> ints() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < array_size(); ++i) {
      const auto v = (*this)[i].integer();
      if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) (*this)[i].fail("integer out of range");
      out.push_back(static_cast<int>(v));
    }
    return out;
  }

  IntMatrix grid() const {
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t i = 0; i < array_size(); ++i) {
      const Field r = (*this)[i];
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < r.array_size(); ++k) row.push_back(r[k].integer());
      rows.push_back(std::move(row));
    }
    if (!rows.empty() && rows[0].size() != rows.size()) fail("expected a square matrix");
    try {
      return IntMatrix::from_rows(rows);
    } catch (const ShapeMismatch&) {
      fail("ragged matrix rows");
    }
  }

 private:
  const Json& j_;
  std::string path_;
};

inline FusionRing ring_from(const Field& f) {
  const auto labels = f["labels"].strings();
  const auto dual = f["dual"].ints();
  const Field Nf = f["N"];
  Tensor3 N;
  for (std::size_t a = 0; a < Nf.array_size(); ++a) {
    N.emplace_back();
    for (std::size_t b = 0; b < Nf[a].array_size(); ++b) N.back().push_back(Nf[a][b].ints());
  }
  try {
    return FusionRing(labels, dual, N);
  } catch (const ShapeMismatch& e) {
    f.fail(e.what());
  }
}

inline int node_index(const std::vector<std::string>& nodes, const Field& f) {
  if (f.json().is_number_integer()) {
    const auto i = f.integer();
    if (i < 0 || i >= static_cast<std::int64_t>(nodes.size())) f.fail("node index out of range");
    return static_cast<int>(i);
  }
  const auto name = f.str();
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i] == name) return static_cast<int>(i);
  f.fail("unknown node '" + name + "'");
}

[[noreturn]] inline void invalid(const std::string& kind, const Verdict& v) {
  throw ValidationError(kind + " fails " + v.check + " at " + format_witness(v.witness) + (v.detail.empty() ? "" : ": " + v.detail),
                        v.witness);
}

}  // namespace detail

/// Integer grid given as plain text rows.
inline IntMatrix parse_int_grid_text(const std::string& text) {
  std::vector<std::vector<std::int64_t>> rows;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::vector<std::int64_t> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw ParseError("line " + std::to_string(lineno) + ": not an integer: '" + tok + "'");
      row.push_back(v);
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows[0].size())
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(rows[0].size()) + " entries");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty matrix");
  if (rows.size() != rows[0].size()) throw ParseError("matrix is not square");
  return IntMatrix::from_rows(rows);
}

/// Parses one JSON document. With `validate`, the described object must also
/// satisfy its mathematical invariants; otherwise ValidationError is thrown
/// carrying the witness.
inline DataObject parse_document(const std::string& text, bool validate = true) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  const detail::Field root(j, "$");
  const std::string kind = root["kind"].str();
  if (root.has("schema_version") && root["schema_version"].integer() != kSchemaVersion)
    root["schema_version"].fail("unsupported schema version");

  if (kind == "fusion-ring") {
    FusionRing R = detail::ring_from(root);
    if (validate)
      if (auto v = verify_axioms(R); !v) detail::invalid("fusion ring", v);
    return R;
  }
  if (kind == "modular-data") {
    const FusionRing R = detail::ring_from(root["ring"]);
    const int r = R.rank();
    const detail::Field Sf = root["S"];
    if (Sf.array_size() != static_cast<std::size_t>(r)) Sf.fail("expected " + std::to_string(r) + " rows");
    CycloMatrix S(r, r);
    for (int I = 0; I < r; ++I) {
      if (Sf[I].array_size() != static_cast<std::size_t>(r)) Sf[I].fail("expected " + std::to_string(r) + " entries");
      for (int J = 0; J < r; ++J) S(I, J) = Sf[I][J].cyclo();
    }
    const detail::Field tf = root["t"];
    if (tf.array_size() != static_cast<std::size_t>(r)) tf.fail("expected " + std::to_string(r) + " phases");
    std::vector<RationalPhase> t;
    for (int I = 0; I < r; ++I) t.emplace_back(tf[I].rational());
    ModularData md(root.has("name") ? root["name"].str() : std::string("custom"), R, std::move(S), std::move(t));
    if (validate) {
      if (auto v = verify_axioms(R); !v) detail::invalid("fusion ring", v);
      if (auto v = verify_modular_data(md); !v) detail::invalid("modular data", v);
    }
    return md;
  }
  if (kind == "graph") {
    BoundaryGraph g;
    g.vertices = root["vertices"].strings();
    g.adjacency = root["adjacency"].grid();
    if (root.has("family")) g.family = root["family"].str();
    if (root.has("family_rank")) g.family_rank = static_cast<int>(root["family_rank"].integer());
    if (g.adjacency.rows() != g.vertices.size()) root["adjacency"].fail("size differs from the vertex count");
    if (validate) {
      if (auto v = validate_graph(g); !v) detail::invalid("graph", v);
      if (g.family == "A" || g.family == "D" || g.family == "E") {
        BoundaryGraph ref;
        try {
          ref = ade_graph(g.family[0], g.family_rank);
        } catch (const Error& e) {
          root["family_rank"].fail(e.what());
        }
        if (!(ref.adjacency == g.adjacency))
          throw ValidationError("graph tagged " + g.family + "_" + std::to_string(g.family_rank) + " does not match that Dynkin graph");
      }
    }
    return g;
  }
  if (kind == "gauge") {
    auto nodes = root["nodes"].strings();
    std::map<std::pair<int, int>, CycloNumber> mu;
    const detail::Field mf = root["mu"];
    for (std::size_t e = 0; e < mf.array_size(); ++e) {
      const detail::Field pr = mf[e]["pair"];
      if (pr.array_size() != 2) pr.fail("expected [i, j]");
      const int i = detail::node_index(nodes, pr[0]), k = detail::node_index(nodes, pr[1]);
      if (!mu.emplace(std::pair{i, k}, mf[e]["value"].cyclo()).second) pr.fail("duplicate pair");
    }
    GaugeProblem gp = GaugeProblem::completed(std::move(nodes), std::move(mu));
    if (validate)
      if (auto v = validate_mu(gp); !v) detail::invalid("gauge data", v);
    return gp;
  }
  if (kind == "invariant") {
    InvariantMatrix z{root["Z"].grid(), root.has("provenance") ? root["provenance"].str() : std::string("user")};
    return z;
  }
  root["kind"].fail("unknown kind '" + kind + "'");
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline DataObject parse_data_file(const std::string& path, bool validate = true) {
  try {
    return parse_document(read_text_file(path), validate);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what(), e.witness());
  } catch (const MissingPair& e) {
    throw MissingPair(path + ": " + e.what(), e.witness());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

template <class T>
T expect_kind(DataObject obj, const std::string& what) {
  if (auto* p = std::get_if<T>(&obj)) return std::move(*p);
  throw ParseError("expected a " + what + " document");
}

/// An invariant file is either a JSON document or a bare integer grid.
inline InvariantMatrix load_invariant(const std::string& path) {
  const std::string text = read_text_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return expect_kind<InvariantMatrix>(parse_data_file(path), "invariant");
  try {
    return {parse_int_grid_text(text), "user"};
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace fuselab
