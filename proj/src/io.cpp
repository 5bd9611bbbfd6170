#include "io.hpp"

#include <openssl/evp.h>
#include <zlib.h>

#include <atomic>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace operad {

using json = nlohmann::ordered_json;

std::string operad_version() { return "0.1.0"; }

namespace {

std::atomic<int> thread_limit_{0};

bool ends_with(const std::string &s, const std::string &suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string &path, const std::string &bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw usage_error("cannot write " + path);
  out << bytes;
  if (!out) throw usage_error("write to " + path + " failed");
}

// fixed level, zeroed mtime, unnamed OS: equal inputs give equal members
std::string gzip_bytes(const std::string &in) {
  z_stream zs{};
  if (deflateInit2(&zs, Z_BEST_COMPRESSION, Z_DEFLATED, 15 + 16, 8,
                   Z_DEFAULT_STRATEGY) != Z_OK)
    throw usage_error("gzip init failed");
  gz_header head{};
  head.os = 255;
  deflateSetHeader(&zs, &head);
  std::string out(deflateBound(&zs, in.size()), '\0');
  zs.next_in = (Bytef *)in.data();
  zs.avail_in = in.size();
  zs.next_out = (Bytef *)out.data();
  zs.avail_out = out.size();
  int rc = deflate(&zs, Z_FINISH);
  deflateEnd(&zs);
  if (rc != Z_STREAM_END) throw usage_error("gzip compression failed");
  out.resize(out.size() - zs.avail_out);
  return out;
}

std::string gunzip_bytes(const std::string &in) {
  z_stream zs{};
  if (inflateInit2(&zs, 15 + 32) != Z_OK)
    throw usage_error("gzip init failed");
  zs.next_in = (Bytef *)in.data();
  zs.avail_in = in.size();
  std::string out;
  char buf[1 << 16];
  int rc = Z_OK;
  while (rc != Z_STREAM_END) {
    zs.next_out = (Bytef *)buf;
    zs.avail_out = sizeof buf;
    rc = inflate(&zs, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END) {
      inflateEnd(&zs);
      throw usage_error("gzip payload is corrupt");
    }
    out.append(buf, sizeof buf - zs.avail_out);
  }
  inflateEnd(&zs);
  return out;
}

json vec_to_json(const Vec &v) {
  json a = json::array();
  for (const Rat &x : v) a.push_back(rat_str(x));
  return a;
}

json mat_to_json(const Mat &m) {
  json rows = json::array();
  for (int r = 0; r < m.nr; r++) rows.push_back(vec_to_json(m.row(r)));
  return rows;
}

// ---- schema helpers; every message names the offending location ----

const json &need(const json &obj, const char *key, const std::string &where) {
  if (!obj.is_object())
    throw usage_error(where + " is not an object");
  auto it = obj.find(key);
  if (it == obj.end())
    throw usage_error(where + " is missing \"" + key + "\"");
  return *it;
}

int need_int(const json &obj, const char *key, const std::string &where) {
  const json &v = need(obj, key, where);
  if (!v.is_number_integer())
    throw usage_error(where + "." + key + " is not an integer");
  return v.get<int>();
}

std::string need_str(const json &obj, const char *key,
                     const std::string &where) {
  const json &v = need(obj, key, where);
  if (!v.is_string())
    throw usage_error(where + "." + key + " is not a string");
  return v.get<std::string>();
}

const json &need_array(const json &obj, const char *key,
                       const std::string &where) {
  const json &v = need(obj, key, where);
  if (!v.is_array())
    throw usage_error(where + "." + key + " is not an array");
  return v;
}

Vec json_to_vec(const json &a, int want, const std::string &where) {
  if (!a.is_array() || (int)a.size() != want)
    throw usage_error(where + " wants " + std::to_string(want) +
                      " rationals");
  Vec v;
  v.reserve(a.size());
  for (const auto &x : a) {
    if (!x.is_string())
      throw usage_error(where + " holds a non-string rational");
    v.push_back(rat_parse(x.get<std::string>()));
  }
  return v;
}

Mat json_to_mat(const json &rows, int nr, int nc, const std::string &where) {
  if (!rows.is_array() || (int)rows.size() != nr)
    throw usage_error(where + " wants " + std::to_string(nr) + " rows");
  Mat m(nr, nc);
  for (int r = 0; r < nr; r++)
    m.set_row(r, json_to_vec(rows[r], nc,
                             where + " row " + std::to_string(r)));
  return m;
}

void reject_unknown(const json &obj, const std::vector<std::string> &known,
                    const std::string &where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const auto &k : known) ok = ok || it.key() == k;
    if (!ok)
      throw usage_error(where + " carries an unknown key \"" + it.key() +
                        "\"");
  }
}

json manifest_or_null(const std::string &text) {
  if (text.empty()) return nullptr;
  return json::parse(text);
}

}  // namespace

std::string Manifest::to_json() const {
  json m;
  m["tool"] = "operad";
  m["version"] = operad_version();
  m["command"] = command;
  json ins = json::array();
  for (const auto &[name, digest] : inputs)
    ins.push_back(json{{"name", name}, {"sha256", digest}});
  m["inputs"] = ins;
  if (horizon >= 0) m["horizon"] = horizon;
  m["field"] = "Q";
  if (!timings.empty()) {
    json t;
    for (const auto &[name, ms] : timings) t[name] = ms;
    m["timings"] = t;
  }
  return m.dump();
}

std::string operad_to_json(const Operad &p, const std::string &manifest) {
  auto t = TableOperad::materialize(p);
  int N = t->max_arity();
  json doc;
  doc["name"] = t->name();
  doc["max_arity"] = N;
  doc["field"] = "Q";
  doc["kind"] = t->kind();
  json comps = json::array();
  for (int n = 0; n <= N; n++) {
    json labels = json::array();
    for (int a = 0; a < t->dim(n); a++) labels.push_back(t->label(n, a));
    comps.push_back(
        json{{"arity", n}, {"dim", t->dim(n)}, {"labels", labels}});
  }
  doc["components"] = comps;
  doc["unit"] = json{{"coords", vec_to_json(t->unit_coords())}};
  if (auto z = t->zero_unit_coords())
    doc["zero_unit"] = json{{"coords", vec_to_json(*z)}};
  else
    doc["zero_unit"] = nullptr;
  if (auto u2 = t->two_unit_coords())
    doc["two_unit"] = json{{"coords", vec_to_json(*u2)}};
  else
    doc["two_unit"] = nullptr;
  if (auto v = t->vanishing_index())
    doc["vanishing"] = *v;
  else
    doc["vanishing"] = nullptr;
  if (auto g = t->grading())
    doc["grading"] = *g;
  else
    doc["grading"] = nullptr;
  json acts = json::array();
  for (int n = 2; n <= N; n++) {
    json gens = json::array();
    for (int j = 1; j <= n - 1; j++) gens.push_back(mat_to_json(t->act_gen(n, j)));
    acts.push_back(json{{"arity", n}, {"generators", gens}});
  }
  doc["actions"] = acts;
  json tables = json::array();
  for (int m = 1; m <= N; m++)
    for (int i = 1; i <= m; i++)
      for (int n = 0; m + n - 1 <= N; n++) {
        const Mat &tab = t->table(m, i, n);
        json rows = json::array();
        for (int a = 0; a < t->dim(m); a++) {
          json cols = json::array();
          for (int b = 0; b < t->dim(n); b++)
            cols.push_back(vec_to_json(tab.row(a * t->dim(n) + b)));
          rows.push_back(cols);
        }
        tables.push_back(
            json{{"m", m}, {"i", i}, {"n", n}, {"table", rows}});
      }
  doc["compositions"] = tables;
  doc["manifest"] = manifest_or_null(manifest);
  return doc.dump() + "\n";
}

StoredOperad operad_from_json(const std::string &text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception &e) {
    throw usage_error(std::string("operad file is not valid JSON: ") +
                      e.what());
  }
  reject_unknown(doc,
                 {"name", "max_arity", "field", "kind", "components", "unit",
                  "zero_unit", "two_unit", "vanishing", "grading", "actions",
                  "compositions", "manifest"},
                 "operad");
  std::string name = need_str(doc, "name", "operad");
  int N = need_int(doc, "max_arity", "operad");
  if (N < 1 || N > 12)
    throw usage_error("max_arity " + std::to_string(N) + " outside 1..12");
  if (need_str(doc, "field", "operad") != "Q")
    throw usage_error("only the field Q is supported");
  std::string kind = need_str(doc, "kind", "operad");

  const json &comps = need_array(doc, "components", "operad");
  if ((int)comps.size() != N + 1)
    throw usage_error("components wants " + std::to_string(N + 1) +
                      " entries");
  std::vector<int> dims(N + 1);
  std::vector<std::vector<std::string>> labels(N + 1);
  for (int n = 0; n <= N; n++) {
    std::string where = "component " + std::to_string(n);
    reject_unknown(comps[n], {"arity", "dim", "labels"}, where);
    if (need_int(comps[n], "arity", where) != n)
      throw usage_error(where + " is out of order");
    dims[n] = need_int(comps[n], "dim", where);
    if (dims[n] < 0) throw usage_error(where + " has negative dimension");
    const json &ls = need_array(comps[n], "labels", where);
    if ((int)ls.size() != dims[n])
      throw usage_error(where + " labels do not match its dimension");
    for (const auto &l : ls) {
      if (!l.is_string()) throw usage_error(where + " holds a non-string label");
      labels[n].push_back(l.get<std::string>());
    }
  }
  if (dims[1] < 1) throw usage_error("the arity-1 component cannot vanish");

  auto op = std::make_shared<TableOperad>(name, N, dims);
  op->set_kind(kind);
  for (int n = 0; n <= N; n++) op->set_labels(n, labels[n]);
  op->set_unit(json_to_vec(
      need_array(need(doc, "unit", "operad"), "coords", "unit"), dims[1],
      "unit.coords"));
  const json &zu = need(doc, "zero_unit", "operad");
  if (!zu.is_null())
    op->set_zero_unit(json_to_vec(need_array(zu, "coords", "zero_unit"),
                                  dims[0], "zero_unit.coords"));
  const json &tu = need(doc, "two_unit", "operad");
  if (!tu.is_null()) {
    if (N < 2) throw usage_error("two_unit outside the horizon");
    op->set_two_unit(json_to_vec(need_array(tu, "coords", "two_unit"),
                                 dims[2], "two_unit.coords"));
  }
  const json &va = need(doc, "vanishing", "operad");
  if (!va.is_null()) {
    if (!va.is_number_integer() || va.get<int>() < 1)
      throw usage_error("vanishing is not a positive integer");
    op->set_vanishing_index(va.get<int>());
  }
  const json &gr = need(doc, "grading", "operad");
  if (!gr.is_null()) {
    if (!gr.is_array() || (int)gr.size() != N + 1)
      throw usage_error("grading wants one block row per arity");
    std::vector<std::vector<int>> g(N + 1);
    for (int n = 0; n <= N; n++) {
      if (!gr[n].is_array() || (int)gr[n].size() != n + 1)
        throw usage_error("grading row " + std::to_string(n) + " wants " +
                          std::to_string(n + 1) + " blocks");
      int total = 0;
      for (const auto &b : gr[n]) {
        if (!b.is_number_integer() || b.get<int>() < 0)
          throw usage_error("grading row " + std::to_string(n) +
                            " holds a bad block size");
        g[n].push_back(b.get<int>());
        total += b.get<int>();
      }
      if (total != dims[n])
        throw usage_error("grading row " + std::to_string(n) +
                          " does not fill the component");
    }
    op->set_grading(g);
  }

  const json &acts = need_array(doc, "actions", "operad");
  if ((int)acts.size() != std::max(0, N - 1))
    throw usage_error("actions wants one entry per arity 2.." +
                      std::to_string(N));
  for (int n = 2; n <= N; n++) {
    std::string where = "actions at arity " + std::to_string(n);
    const json &entry = acts[n - 2];
    reject_unknown(entry, {"arity", "generators"}, where);
    if (need_int(entry, "arity", where) != n)
      throw usage_error(where + " is out of order");
    const json &gens = need_array(entry, "generators", where);
    if ((int)gens.size() != n - 1)
      throw usage_error(where + " wants " + std::to_string(n - 1) +
                        " generators");
    for (int j = 1; j <= n - 1; j++)
      op->set_act_gen(n, j,
                      json_to_mat(gens[j - 1], dims[n], dims[n],
                                  where + " generator " + std::to_string(j)));
  }

  const json &tables = need_array(doc, "compositions", "operad");
  size_t at = 0;
  for (int m = 1; m <= N; m++)
    for (int i = 1; i <= m; i++)
      for (int n = 0; m + n - 1 <= N; n++) {
        std::string where = "composition (" + std::to_string(m) + "," +
                            std::to_string(i) + "," + std::to_string(n) +
                            ")";
        if (at >= tables.size())
          throw usage_error(where + " is missing");
        const json &entry = tables[at++];
        reject_unknown(entry, {"m", "i", "n", "table"}, where);
        if (need_int(entry, "m", where) != m ||
            need_int(entry, "i", where) != i ||
            need_int(entry, "n", where) != n)
          throw usage_error(where + " is out of order");
        const json &rows = need_array(entry, "table", where);
        if ((int)rows.size() != dims[m])
          throw usage_error(where + " wants " + std::to_string(dims[m]) +
                            " rows");
        Mat tab(dims[m] * dims[n], dims[m + n - 1]);
        for (int a = 0; a < dims[m]; a++) {
          if (!rows[a].is_array() || (int)rows[a].size() != dims[n])
            throw usage_error(where + " row " + std::to_string(a) +
                              " wants " + std::to_string(dims[n]) +
                              " entries");
          for (int b = 0; b < dims[n]; b++)
            tab.set_row(a * dims[n] + b,
                        json_to_vec(rows[a][b], dims[m + n - 1],
                                    where + " entry (" + std::to_string(a) +
                                        "," + std::to_string(b) + ")"));
        }
        op->set_table(m, i, n, std::move(tab));
      }
  if (at != tables.size())
    throw usage_error("compositions carries " +
                      std::to_string(tables.size() - at) +
                      " entries beyond the horizon");

  // semantic sweep: operad axioms first, then the optional attestations
  auto rep = verify_axioms(*op);
  if (!rep.ok)
    throw verify_error("axiom " + rep.violations[0].rule + " violated at " +
                       rep.violations[0].instance);
  if (auto u2 = op->two_unit_coords()) {
    auto z = op->zero_unit_coords();
    if (!z) throw usage_error("a designated binary unit wants a 0-ary unit");
    if (compose(*op, 2, 1, 0, *u2, *z) != op->unit_coords() ||
        compose(*op, 2, 2, 0, *u2, *z) != op->unit_coords())
      throw verify_error("the designated binary unit does not collapse to "
                         "the unit");
  }
  if (auto v = op->vanishing_index()) {
    if (!op->zero_unit_coords())
      throw usage_error("a vanishing attestation wants a 0-ary unit");
    for (int n = 0; n <= N; n++) {
      int r = trunc_component(*op, *v, n).nr;
      if (r != 0)
        throw verify_error("the vanishing attestation fails: rung " +
                           std::to_string(*v) + " has rank " +
                           std::to_string(r) + " at arity " +
                           std::to_string(n));
    }
  }

  StoredOperad stored;
  stored.op = op;
  const json &man = need(doc, "manifest", "operad");
  if (!man.is_null()) stored.manifest = man.dump();
  return stored;
}

void save_operad(const Operad &p, const std::string &path,
                 const std::string &manifest) {
  std::string text = operad_to_json(p, manifest);
  if (ends_with(path, ".gz"))
    write_file(path, gzip_bytes(text));
  else
    write_file(path, text);
}

StoredOperad load_operad(const std::string &path) {
  std::string bytes = read_file(path);
  if (ends_with(path, ".gz")) bytes = gunzip_bytes(bytes);
  return operad_from_json(bytes);
}

std::string algebra_to_json(const AugmentedAlgebra &a) {
  json doc;
  doc["d"] = a.d;
  json om = json::array();
  for (int i = 1; i <= a.d; i++) {
    json row = json::array();
    for (int j = 1; j <= a.d; j++) {
      json cell = json::array();
      for (int k = 1; k <= a.d; k++) cell.push_back(rat_str(a.at(i, j, k)));
      row.push_back(cell);
    }
    om.push_back(row);
  }
  doc["omega"] = om;
  return doc.dump() + "\n";
}

AugmentedAlgebra algebra_from_json(const std::string &text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception &e) {
    throw usage_error(std::string("algebra file is not valid JSON: ") +
                      e.what());
  }
  reject_unknown(doc, {"d", "omega"}, "algebra");
  AugmentedAlgebra a;
  a.d = need_int(doc, "d", "algebra");
  if (a.d < 0) throw usage_error("algebra.d is negative");
  a.omega.assign((size_t)a.d * a.d * a.d, Rat(0));
  const json &om = need_array(doc, "omega", "algebra");
  if ((int)om.size() != a.d)
    throw usage_error("algebra.omega wants " + std::to_string(a.d) +
                      " rows");
  for (int i = 1; i <= a.d; i++) {
    if (!om[i - 1].is_array() || (int)om[i - 1].size() != a.d)
      throw usage_error("algebra.omega row " + std::to_string(i) +
                        " wants " + std::to_string(a.d) + " cells");
    for (int j = 1; j <= a.d; j++) {
      Vec cell = json_to_vec(om[i - 1][j - 1], a.d,
                             "algebra.omega[" + std::to_string(i) + "][" +
                                 std::to_string(j) + "]");
      for (int k = 1; k <= a.d; k++) a.at(i, j, k) = cell[k - 1];
    }
  }
  a.validate();
  return a;
}

std::string sw_module_to_json(const SwModule &m) {
  json doc;
  doc["w"] = m.w;
  doc["d"] = m.d;
  json gens = json::array();
  for (const Mat &g : m.gens) gens.push_back(mat_to_json(g));
  doc["generators"] = gens;
  return doc.dump() + "\n";
}

SwModule sw_module_from_json(const std::string &text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception &e) {
    throw usage_error(std::string("module file is not valid JSON: ") +
                      e.what());
  }
  reject_unknown(doc, {"w", "d", "generators"}, "module");
  SwModule m;
  m.w = need_int(doc, "w", "module");
  m.d = need_int(doc, "d", "module");
  if (m.w < 1 || m.d < 0) throw usage_error("module shape is out of range");
  const json &gens = need_array(doc, "generators", "module");
  if ((int)gens.size() != m.w - 1)
    throw usage_error("module wants " + std::to_string(m.w - 1) +
                      " generators");
  for (int j = 0; j < m.w - 1; j++)
    m.gens.push_back(json_to_mat(gens[j], m.d, m.d,
                                 "module generator " + std::to_string(j + 1)));
  m.validate();
  return m;
}

std::string info_json(const Operad &p, const std::string &manifest) {
  json doc;
  doc["name"] = p.name();
  doc["kind"] = p.kind();
  doc["max_arity"] = p.max_arity();
  doc["field"] = "Q";
  json dims = json::array();
  for (int n = 0; n <= p.max_arity(); n++) dims.push_back(p.dim(n));
  doc["dims"] = dims;
  doc["zero_unit"] = p.zero_unit_coords().has_value();
  doc["two_unit"] = p.two_unit_coords().has_value();
  if (auto v = p.vanishing_index())
    doc["vanishing"] = *v;
  else
    doc["vanishing"] = nullptr;
  if (auto g = p.grading())
    doc["grading"] = *g;
  else
    doc["grading"] = nullptr;
  doc["manifest"] = manifest_or_null(manifest);
  return doc.dump() + "\n";
}

std::string signature_json(const Operad &p, const std::string &manifest) {
  json doc;
  doc["signature"] = signature_of(p, p.max_arity());
  doc["manifest"] = manifest_or_null(manifest);
  return doc.dump() + "\n";
}

std::string series_json(const Operad &p, const std::string &manifest) {
  auto cert = growth_certificate(p);
  json doc;
  doc["dims"] = cert.dims;
  auto tr = binomial_transform(to_rats(cert.dims));
  json trj = json::array();
  for (const Rat &x : tr) trj.push_back(rat_str(x));
  doc["transform"] = trj;
  auto form = hilbert_form(tr);
  json rat;
  json num = json::array();
  for (const Rat &x : form.numerator) num.push_back(rat_str(x));
  rat["numerator"] = num;
  rat["denominator_power"] = form.denom_power;
  json terms = json::array();
  for (const Rat &x : form.expansion(p.max_arity() + 1))
    terms.push_back(rat_str(x));
  rat["terms"] = terms;
  doc["rational_terms"] = rat;
  doc["gk"] = json{{"value", cert.value},
                   {"status", cert.status == GrowthStatus::EXACT
                                  ? "exact"
                                  : "lower-bound"},
                   {"note", cert.note}};
  doc["manifest"] = manifest_or_null(manifest);
  return doc.dump() + "\n";
}

std::string truncate_json(const Operad &p, int k,
                          const std::string &manifest) {
  Ideal ideal = trunc_ideal(p, k);
  json doc;
  doc["k"] = k;
  doc["dims"] = ideal.dims();
  json bases;
  for (int n = 0; n <= ideal.max_arity(); n++)
    bases[std::to_string(n)] = mat_to_json(ideal.comp[n]);
  doc["bases"] = bases;
  doc["manifest"] = manifest_or_null(manifest);
  return doc.dump() + "\n";
}

std::string axiom_report_json(const AxiomReport &r) {
  json doc;
  doc["ok"] = r.ok;
  doc["checks"] = r.checks;
  json vs = json::array();
  for (const auto &v : r.violations)
    vs.push_back(json{{"rule", v.rule}, {"instance", v.instance}});
  doc["violations"] = vs;
  return doc.dump();
}

std::string basis_report_json(const BasisReport &r) {
  json doc;
  doc["ok"] = r.ok;
  doc["why"] = r.why;
  doc["block_sizes"] = r.block_sizes;
  return doc.dump();
}

std::string poisson_report_json(const ShufflePoissonReport &r) {
  json doc;
  doc["ok"] = r.ok;
  doc["relations_ok"] = r.relations_ok;
  doc["why"] = r.why;
  doc["generated_dims"] = r.generated_dims;
  doc["top_degree_dims"] = r.top_degree_dims;
  return doc.dump();
}

std::string classification_json(const ClassificationReport &r,
                                const std::string &manifest) {
  json doc;
  doc["subject"] = r.subject;
  doc["ok"] = r.ok;
  json cs = json::array();
  for (const auto &c : r.checks)
    cs.push_back(json{{"claim", c.claim},
                      {"status", c.status},
                      {"witness", c.witness}});
  doc["checks"] = cs;
  doc["manifest"] = manifest_or_null(manifest);
  return doc.dump() + "\n";
}

std::string sha256_file(const std::string &path) {
  std::string bytes = read_file(path);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(),
                  nullptr))
    throw usage_error("sha256 failed on " + path);
  static const char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; i++) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

void set_thread_limit(int n) {
  if (n < 0) throw usage_error("thread limit must be nonnegative");
  thread_limit_.store(n);
}

int thread_limit() { return thread_limit_.load(); }

}  // namespace operad
