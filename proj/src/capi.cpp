#include "operad/operad.h"

#include <cstdlib>
#include <cstring>
#include <json.hpp>

#include "io.hpp"

using json = nlohmann::ordered_json;

struct operad_handle {
  std::shared_ptr<const operad::Operad> op;
  std::string manifest;
};

namespace {

thread_local std::string t_last_error;

template <class F>
int guarded(F &&body) {
  try {
    body();
    return 0;
  } catch (const operad::OperadError &e) {
    t_last_error = e.what();
    return e.code;
  } catch (const std::exception &e) {
    t_last_error = e.what();
    return 2;
  }
}

char *dup_string(const std::string &s) {
  char *p = (char *)std::malloc(s.size() + 1);
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::string or_empty(const char *s) { return s ? s : ""; }

json parse_doc(const char *text, const char *what) {
  try {
    return json::parse(or_empty(text));
  } catch (const json::exception &e) {
    throw operad::usage_error(std::string(what) + " is not valid JSON: " +
                              e.what());
  }
}

int need_int(const json &req, const char *key, const char *where) {
  auto it = req.find(key);
  if (it == req.end() || !it->is_number_integer())
    throw operad::usage_error(std::string(where) + " wants an integer \"" +
                              key + "\"");
  return it->get<int>();
}

const operad_handle *need_handle(const operad_t *p) {
  if (!p || !p->op) throw operad::usage_error("null operad handle");
  return p;
}

operad::SwModule module_from_request(const json &req, const char *where) {
  int w = need_int(req, "w", where);
  bool has_module = req.contains("module");
  bool has_trivial = req.contains("trivial_d");
  bool has_sign = req.value("sign", false);
  if (has_module + has_trivial + has_sign != 1)
    throw operad::usage_error(std::string(where) +
                              " wants exactly one of \"module\", "
                              "\"trivial_d\", \"sign\"");
  if (has_trivial)
    return operad::trivial_sw_module(w, need_int(req, "trivial_d", where));
  if (has_sign) return operad::sign_sw_module(w);
  operad::SwModule m = operad::sw_module_from_json(req["module"].dump());
  if (m.w != w)
    throw operad::usage_error(std::string(where) +
                              " module arity disagrees with \"w\"");
  return m;
}

std::shared_ptr<const operad::Operad> build_from_request(const json &req) {
  if (!req.is_object())
    throw operad::usage_error("build request is not an object");
  auto bit = req.find("builder");
  if (bit == req.end() || !bit->is_string())
    throw operad::usage_error("build request wants a string \"builder\"");
  std::string b = bit->get<std::string>();
  bool allow = req.value("allow_large", false);

  if (b == "as") return operad::build_as(need_int(req, "N", "as"), allow);
  if (b == "com") return operad::build_com(need_int(req, "N", "com"), allow);
  if (b == "uni") return operad::build_uni(need_int(req, "N", "uni"), allow);

  if (b == "d") {
    int N = need_int(req, "N", "d");
    bool has_alg = req.contains("algebra");
    bool has_rand = req.contains("random_d");
    bool has_poly = req.contains("polynomial_d");
    if (has_alg + has_rand + has_poly != 1)
      throw operad::usage_error(
          "builder d wants exactly one of \"algebra\", \"random_d\", "
          "\"polynomial_d\"");
    operad::AugmentedAlgebra a;
    if (has_alg)
      a = operad::algebra_from_json(req["algebra"].dump());
    else if (has_rand)
      a = operad::random_associative_algebra(
          need_int(req, "random_d", "d"),
          (std::uint64_t)req.value("seed", 0L));
    else
      a = operad::truncated_polynomial_algebra(
          need_int(req, "polynomial_d", "d"));
    std::optional<std::vector<std::vector<int>>> chain;
    if (req.contains("chain") && !req["chain"].is_null()) {
      const json &cj = req["chain"];
      if (!cj.is_array())
        throw operad::usage_error("builder d chain is not an array");
      std::vector<std::vector<int>> c;
      for (const auto &row : cj) {
        if (!row.is_array())
          throw operad::usage_error("builder d chain rows are index arrays");
        std::vector<int> r;
        for (const auto &x : row) {
          if (!x.is_number_integer())
            throw operad::usage_error("builder d chain holds a non-integer");
          r.push_back(x.get<int>());
        }
        c.push_back(std::move(r));
      }
      chain = std::move(c);
    }
    return operad::build_d(a, N, allow, chain);
  }

  if (b == "signature-block")
    return operad::build_signature_operad(
        need_int(req, "w", "signature-block"),
        module_from_request(req, "signature-block"),
        need_int(req, "N", "signature-block"), allow);

  if (b == "uni-plus-m")
    return operad::build_uni_plus_m(need_int(req, "w", "uni-plus-m"),
                                    module_from_request(req, "uni-plus-m"),
                                    need_int(req, "N", "uni-plus-m"), allow);

  if (b == "from-signature" || b == "unitary-from-signature") {
    auto it = req.find("signature");
    if (it == req.end() || !it->is_array())
      throw operad::usage_error("builder " + b +
                                " wants an integer array \"signature\"");
    std::vector<long> sig;
    for (const auto &x : *it) {
      if (!x.is_number_integer() || x.get<long>() < 0)
        throw operad::usage_error("signature entries are nonnegative "
                                  "integers");
      sig.push_back(x.get<long>());
    }
    int N = need_int(req, "N", b.c_str());
    return b == "from-signature"
               ? operad::build_from_signature(sig, N, allow)
               : operad::unitary_from_signature(sig, N, allow);
  }

  if (b == "hadamard") {
    if (!req.contains("left") || !req.contains("right"))
      throw operad::usage_error(
          "builder hadamard wants \"left\" and \"right\" requests");
    return operad::hadamard(build_from_request(req["left"]),
                            build_from_request(req["right"]));
  }

  if (b == "sum") {
    auto it = req.find("blocks");
    if (it == req.end() || !it->is_array() || it->empty())
      throw operad::usage_error(
          "builder sum wants a nonempty \"blocks\" array");
    std::vector<operad::OperadPtr> blocks;
    for (const auto &sub : *it) blocks.push_back(build_from_request(sub));
    return operad::com_augmented_sum(blocks);
  }

  throw operad::usage_error("unknown builder \"" + b + "\"");
}

}  // namespace

extern "C" {

const char *operad_version(void) {
  static std::string v = operad::operad_version();
  return v.c_str();
}

const char *operad_last_error(void) { return t_last_error.c_str(); }

void operad_free(operad_t *p) { delete p; }

void operad_string_free(char *s) { std::free(s); }

int operad_build(const char *request_json, operad_t **out) {
  return guarded([&] {
    if (!out) throw operad::usage_error("null output pointer");
    json req = parse_doc(request_json, "build request");
    auto op = build_from_request(req);
    *out = new operad_handle{std::move(op), ""};
  });
}

int operad_load(const char *path, operad_t **out) {
  return guarded([&] {
    if (!out || !path) throw operad::usage_error("null argument");
    operad::StoredOperad s = operad::load_operad(path);
    *out = new operad_handle{std::move(s.op), std::move(s.manifest)};
  });
}

int operad_save(const operad_t *p, const char *path,
                const char *manifest_json) {
  return guarded([&] {
    auto *h = need_handle(p);
    if (!path) throw operad::usage_error("null path");
    operad::save_operad(*h->op, path,
                        manifest_json ? manifest_json : h->manifest.c_str());
  });
}

const char *operad_stored_manifest(const operad_t *p) {
  return p ? p->manifest.c_str() : "";
}

int operad_info_json(const operad_t *p, const char *manifest_json,
                     char **out) {
  return guarded([&] {
    auto *h = need_handle(p);
    if (!out) throw operad::usage_error("null output pointer");
    *out = dup_string(operad::info_json(*h->op, or_empty(manifest_json)));
  });
}

int operad_signature_json(const operad_t *p, const char *manifest_json,
                          char **out) {
  return guarded([&] {
    auto *h = need_handle(p);
    if (!out) throw operad::usage_error("null output pointer");
    *out =
        dup_string(operad::signature_json(*h->op, or_empty(manifest_json)));
  });
}

int operad_series_json(const operad_t *p, const char *manifest_json,
                       char **out) {
  return guarded([&] {
    auto *h = need_handle(p);
    if (!out) throw operad::usage_error("null output pointer");
    *out = dup_string(operad::series_json(*h->op, or_empty(manifest_json)));
  });
}

int operad_truncate_json(const operad_t *p, int k, const char *manifest_json,
                         char **out) {
  return guarded([&] {
    auto *h = need_handle(p);
    if (!out) throw operad::usage_error("null output pointer");
    *out = dup_string(
        operad::truncate_json(*h->op, k, or_empty(manifest_json)));
  });
}

int operad_verify_json(const operad_t *p, const char *what_json,
                       const char *manifest_json, char **out) {
  bool all_ok = true;
  int rc = guarded([&] {
    auto *h = need_handle(p);
    if (!out) throw operad::usage_error("null output pointer");
    json what = parse_doc(what_json && *what_json ? what_json : "{}",
                          "verify request");
    json doc;
    doc["subject"] = h->op->name();
    doc["ok"] = true;
    bool any = false;
    if (what.value("axioms", false)) {
      any = true;
      auto rep = operad::verify_axioms(*h->op);
      doc["axioms"] = json::parse(operad::axiom_report_json(rep));
      all_ok = all_ok && rep.ok;
    } else {
      doc["axioms"] = nullptr;
    }
    if (what.contains("basis_theorem") && !what["basis_theorem"].is_null()) {
      any = true;
      int max_n = need_int(what["basis_theorem"], "max_arity",
                           "verify.basis_theorem");
      auto rep = operad::verify_basis_theorem(*h->op, max_n);
      doc["basis_theorem"] = json::parse(operad::basis_report_json(rep));
      all_ok = all_ok && rep.ok;
    } else {
      doc["basis_theorem"] = nullptr;
    }
    if (what.value("truncatified", false)) {
      any = true;
      std::string why;
      bool ok = operad::is_truncatified(*h->op, &why);
      doc["truncatified"] = json{{"ok", ok}, {"why", why}};
      all_ok = all_ok && ok;
    } else {
      doc["truncatified"] = nullptr;
    }
    if (what.value("poisson", false)) {
      any = true;
      auto rep = operad::poisson_check(*h->op);
      doc["poisson"] = json::parse(operad::poisson_report_json(rep));
      all_ok = all_ok && rep.ok;
    } else {
      doc["poisson"] = nullptr;
    }
    if (!any) throw operad::usage_error("verify request names no checks");
    doc["ok"] = all_ok;
    const std::string man = or_empty(manifest_json);
    doc["manifest"] = man.empty() ? json(nullptr) : json::parse(man);
    *out = dup_string(doc.dump() + "\n");
  });
  if (rc != 0) return rc;
  return all_ok ? 0 : 1;
}

int operad_truncatify(const operad_t *p, operad_t **out) {
  return guarded([&] {
    auto *h = need_handle(p);
    if (!out) throw operad::usage_error("null output pointer");
    *out = new operad_handle{operad::truncatify(*h->op), ""};
  });
}

int operad_classify_json(const operad_t *p, const char *request_json,
                         const char *manifest_json, char **out) {
  bool ok = true;
  int rc = guarded([&] {
    if (!out) throw operad::usage_error("null output pointer");
    json req = parse_doc(request_json, "classify request");
    auto cit = req.find("check");
    if (cit == req.end() || !cit->is_string())
      throw operad::usage_error("classify request wants a string \"check\"");
    std::string check = cit->get<std::string>();
    operad::ClassificationReport rep;
    if (check == "quotient-tower") {
      rep = operad::check_quotient_tower(need_int(req, "N", "quotient-tower"));
    } else if (check == "com-collapse") {
      rep = operad::check_com_collapse(*need_handle(p)->op);
    } else if (check == "roundtrip") {
      if (req.contains("algebra"))
        rep = operad::equivalence_roundtrip(
            operad::algebra_from_json(req["algebra"].dump()),
            need_int(req, "N", "roundtrip"));
      else
        rep = operad::equivalence_roundtrip(*need_handle(p)->op);
    } else {
      throw operad::usage_error("unknown classification check \"" + check +
                                "\"");
    }
    ok = rep.ok;
    *out = dup_string(
        operad::classification_json(rep, or_empty(manifest_json)));
  });
  if (rc != 0) return rc;
  return ok ? 0 : 1;
}

int operad_algebra_to_operad(const char *algebra_json, int max_arity,
                             int allow_large, operad_t **out) {
  return guarded([&] {
    if (!out || !algebra_json) throw operad::usage_error("null argument");
    auto a = operad::algebra_from_json(algebra_json);
    *out = new operad_handle{
        operad::build_d(a, max_arity, allow_large != 0), ""};
  });
}

int operad_sha256_file(const char *path, char **out) {
  return guarded([&] {
    if (!out || !path) throw operad::usage_error("null argument");
    *out = dup_string(operad::sha256_file(path));
  });
}

int operad_set_threads(int n) {
  return guarded([&] { operad::set_thread_limit(n); });
}

}  // extern "C"
