// command-line front end; all real work goes through the C interface
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <vector>

#include "operad/operad.h"

using json = nlohmann::ordered_json;

namespace {

struct HandleDeleter {
  void operator()(operad_t *p) const { operad_free(p); }
};
using Handle = std::unique_ptr<operad_t, HandleDeleter>;

struct CliFailure {
  int status;
};

[[noreturn]] void die(int status) {
  std::cerr << "error: " << operad_last_error() << "\n";
  throw CliFailure{status};
}

std::string take_string(char *s) {
  std::string out = s ? s : "";
  operad_string_free(s);
  return out;
}

std::string read_file_or_die(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    throw CliFailure{2};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_file_or_die(const std::string &path) {
  try {
    return json::parse(read_file_or_die(path));
  } catch (const json::exception &e) {
    std::cerr << "error: " << path << " is not valid JSON: " << e.what()
              << "\n";
    throw CliFailure{2};
  }
}

// manifest embedded in every saved file and report: the command line,
// input digests, and the requested horizon
std::string make_manifest(const std::vector<std::string> &argv_words,
                          const std::vector<std::string> &inputs,
                          int horizon) {
  json m;
  m["tool"] = "operad";
  m["version"] = operad_version();
  std::string cmd;
  for (const auto &w : argv_words) {
    if (!cmd.empty()) cmd += " ";
    cmd += w;
  }
  m["command"] = cmd;
  json ins = json::array();
  for (const auto &path : inputs) {
    char *digest = nullptr;
    if (operad_sha256_file(path.c_str(), &digest) != 0) die(2);
    ins.push_back(json{{"name", path}, {"sha256", take_string(digest)}});
  }
  m["inputs"] = ins;
  if (horizon >= 0) m["horizon"] = horizon;
  m["field"] = "Q";
  return m.dump();
}

Handle load(const std::string &path) {
  operad_t *raw = nullptr;
  int rc = operad_load(path.c_str(), &raw);
  if (rc != 0) die(rc);
  return Handle(raw);
}

void emit(const std::string &text, const std::string &out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    throw CliFailure{2};
  }
  out << text;
}

int horizon_of(const operad_t *p) {
  char *raw = nullptr;
  if (operad_info_json(p, nullptr, &raw) != 0) die(2);
  return json::parse(take_string(raw))["max_arity"].get<int>();
}

}  // namespace

int run(int argc, char **argv) {
  std::vector<std::string> argv_words(argv, argv + argc);

  CLI::App app{"exact-arithmetic toolkit for arity-truncated operads"};
  app.require_subcommand(1);
  int threads = -1;
  app.add_option("--threads", threads,
                 "worker bound (env OPERAD_THREADS is the fallback)");

  // build
  auto *build = app.add_subcommand("build", "construct a named operad");
  std::string builder, out_path, algebra_path, module_path, chain_text;
  int N = 0, w = 0, random_d = -1, polynomial_d = -1, trivial_d = -1;
  long seed = 0;
  bool allow_large = false, sign_module = false;
  std::vector<long> sig_entries;
  build->add_option("builder", builder,
                    "as | com | uni | d | signature-block | from-signature | "
                    "unitary-from-signature | uni-plus-m")
      ->required();
  build->add_option("-N,--max-arity", N, "horizon")->required();
  build->add_option("-o,--output", out_path, "write here instead of stdout");
  build->add_flag("--allow-large", allow_large, "permit horizons above 8");
  build->add_option("--seed", seed, "random algebra seed")
      ->default_val(0);
  build->add_option("--algebra", algebra_path, "augmented algebra file");
  build->add_option("--random-d", random_d, "random algebra dimension");
  build->add_option("--polynomial-d", polynomial_d,
                    "truncated polynomial algebra dimension");
  build->add_option("--chain", chain_text,
                    "nested generator lists, e.g. 1,2;1 for arities 2,3");
  build->add_option("-w,--weight", w, "module arity");
  build->add_option("--module", module_path, "module file");
  build->add_option("--trivial-d", trivial_d, "trivial module dimension");
  build->add_flag("--sign", sign_module, "one-dimensional sign module");
  build->add_option("--signature", sig_entries,
                    "rung ranks from index 2 upward");

  // file subcommands
  std::string in_path;
  auto *info = app.add_subcommand("info", "shape summary of a stored operad");
  info->add_option("file", in_path)->required();

  auto *signature = app.add_subcommand("signature", "diagonal rung ranks");
  bool sig_json = false;
  signature->add_option("file", in_path)->required();
  signature->add_flag("--json", sig_json, "full JSON report");

  auto *series = app.add_subcommand("series", "dimension series and growth");
  bool only_binomial = false, only_rational = false;
  series->add_option("file", in_path)->required();
  series->add_flag("--binomial", only_binomial, "transform view only");
  series->add_flag("--rational", only_rational, "rational view only");

  auto *truncate = app.add_subcommand("truncate", "truncation ideal bases");
  int k = 0;
  truncate->add_option("file", in_path)->required();
  truncate->add_option("-k,--index", k, "truncation index")->required();
  truncate->add_option("-o,--output", out_path);

  auto *verify = app.add_subcommand("verify", "check stored attestations");
  bool v_axioms = false, v_truncatified = false, v_poisson = false;
  int v_basis_arity = -1;
  verify->add_option("file", in_path)->required();
  verify->add_flag("--axioms", v_axioms, "full axiom sweep (the default)");
  verify->add_option("--basis-theorem", v_basis_arity,
                     "basis decomposition up to this arity");
  verify->add_flag("--truncatified", v_truncatified,
                   "composition vanishes under the grading cut");
  verify->add_flag("--poisson", v_poisson,
                   "graded bracket relations and generation");

  auto *truncatify = app.add_subcommand(
      "truncatify", "associated graded operad of the truncation filtration");
  truncatify->add_option("file", in_path)->required();
  truncatify->add_option("-o,--output", out_path);

  auto *classify = app.add_subcommand("classify",
                                      "small-arity classification checks");
  bool c_tower = false, c_collapse = false, c_roundtrip = false;
  classify->add_option("file", in_path, "subject operad");
  classify->add_flag("--quotient-tower", c_tower,
                     "low-growth quotients of the associative tower");
  classify->add_flag("--com-collapse", c_collapse,
                     "line-per-arity subjects collapse to Com");
  classify->add_flag("--roundtrip", c_roundtrip,
                     "algebra-operad equivalence roundtrip");
  classify->add_option("-N,--max-arity", N, "horizon for file-free checks");
  classify->add_option("--algebra", algebra_path,
                       "roundtrip an algebra file instead of an operad");

  auto *a2o = app.add_subcommand("algebra-to-operad",
                                 "2-unitary operad of an augmented algebra");
  a2o->add_option("file", in_path)->required();
  a2o->add_option("-N,--max-arity", N, "horizon")->required();
  a2o->add_flag("--allow-large", allow_large);
  a2o->add_option("-o,--output", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (threads < 0) {
    if (const char *env = std::getenv("OPERAD_THREADS"))
      threads = std::atoi(env);
  }
  if (threads >= 0 && operad_set_threads(threads) != 0) die(2);

  if (build->parsed()) {
    json req;
    req["builder"] = builder;
    req["N"] = N;
    if (allow_large) req["allow_large"] = true;
    if (builder == "d") {
      if (!algebra_path.empty())
        req["algebra"] = parse_file_or_die(algebra_path);
      if (random_d >= 0) {
        req["random_d"] = random_d;
        req["seed"] = seed;
      }
      if (polynomial_d >= 0) req["polynomial_d"] = polynomial_d;
      if (!chain_text.empty()) {
        json chain = json::array();
        std::stringstream rows(chain_text);
        std::string row;
        while (std::getline(rows, row, ';')) {
          json indices = json::array();
          std::stringstream cells(row);
          std::string cell;
          while (std::getline(cells, cell, ','))
            if (!cell.empty()) indices.push_back(std::stol(cell));
          chain.push_back(indices);
        }
        req["chain"] = chain;
      }
    }
    if (builder == "signature-block" || builder == "uni-plus-m") {
      req["w"] = w;
      if (!module_path.empty())
        req["module"] = parse_file_or_die(module_path);
      if (trivial_d >= 0) req["trivial_d"] = trivial_d;
      if (sign_module) req["sign"] = true;
    }
    if (builder == "from-signature" || builder == "unitary-from-signature")
      req["signature"] = sig_entries;

    operad_t *raw = nullptr;
    int rc = operad_build(req.dump().c_str(), &raw);
    if (rc != 0) die(rc);
    Handle p(raw);
    std::vector<std::string> inputs;
    if (!algebra_path.empty()) inputs.push_back(algebra_path);
    if (!module_path.empty()) inputs.push_back(module_path);
    std::string manifest = make_manifest(argv_words, inputs, N);
    if (out_path.empty()) {
      // no -o: print the document instead of saving
      char *text = nullptr;
      if (operad_info_json(p.get(), manifest.c_str(), &text) != 0) die(2);
      std::cout << take_string(text);
      return 0;
    }
    if (operad_save(p.get(), out_path.c_str(), manifest.c_str()) != 0)
      die(2);
    return 0;
  }

  if (info->parsed()) {
    Handle p = load(in_path);
    std::string manifest =
        make_manifest(argv_words, {in_path}, horizon_of(p.get()));
    char *text = nullptr;
    if (operad_info_json(p.get(), manifest.c_str(), &text) != 0) die(2);
    std::cout << take_string(text);
    return 0;
  }

  if (signature->parsed()) {
    Handle p = load(in_path);
    char *text = nullptr;
    if (sig_json) {
      std::string manifest =
          make_manifest(argv_words, {in_path}, horizon_of(p.get()));
      if (operad_signature_json(p.get(), manifest.c_str(), &text) != 0)
        die(2);
      std::cout << take_string(text);
      return 0;
    }
    if (operad_signature_json(p.get(), nullptr, &text) != 0) die(2);
    json doc = json::parse(take_string(text));
    std::string line;
    for (const auto &x : doc["signature"]) {
      if (!line.empty()) line += ",";
      line += std::to_string(x.get<long>());
    }
    std::cout << line << "\n";
    return 0;
  }

  if (series->parsed()) {
    if (only_binomial && only_rational) {
      std::cerr << "error: --binomial and --rational exclude each other\n";
      return 2;
    }
    Handle p = load(in_path);
    std::string manifest =
        make_manifest(argv_words, {in_path}, horizon_of(p.get()));
    char *text = nullptr;
    if (operad_series_json(p.get(), manifest.c_str(), &text) != 0) die(2);
    json doc = json::parse(take_string(text));
    if (only_binomial) doc.erase("rational_terms");
    if (only_rational) doc.erase("transform");
    std::cout << doc.dump() << "\n";
    return 0;
  }

  if (truncate->parsed()) {
    Handle p = load(in_path);
    std::string manifest =
        make_manifest(argv_words, {in_path}, horizon_of(p.get()));
    char *text = nullptr;
    if (operad_truncate_json(p.get(), k, manifest.c_str(), &text) != 0)
      die(2);
    emit(take_string(text), out_path);
    return 0;
  }

  if (verify->parsed()) {
    Handle p = load(in_path);
    if (!v_axioms && v_basis_arity < 0 && !v_truncatified && !v_poisson)
      v_axioms = true;
    json what;
    if (v_axioms) what["axioms"] = true;
    if (v_basis_arity >= 0)
      what["basis_theorem"] = json{{"max_arity", v_basis_arity}};
    if (v_truncatified) what["truncatified"] = true;
    if (v_poisson) what["poisson"] = true;
    std::string manifest =
        make_manifest(argv_words, {in_path}, horizon_of(p.get()));
    char *text = nullptr;
    int rc = operad_verify_json(p.get(), what.dump().c_str(),
                                manifest.c_str(), &text);
    if (rc == 2 || !text) die(2);
    std::cout << take_string(text);
    return rc;
  }

  if (truncatify->parsed()) {
    Handle p = load(in_path);
    operad_t *raw = nullptr;
    if (operad_truncatify(p.get(), &raw) != 0) die(2);
    Handle graded(raw);
    std::string manifest =
        make_manifest(argv_words, {in_path}, horizon_of(p.get()));
    if (out_path.empty()) {
      char *text = nullptr;
      if (operad_info_json(graded.get(), manifest.c_str(), &text) != 0)
        die(2);
      std::cout << take_string(text);
      return 0;
    }
    if (operad_save(graded.get(), out_path.c_str(), manifest.c_str()) != 0)
      die(2);
    return 0;
  }

  if (classify->parsed()) {
    if (c_tower + c_collapse + c_roundtrip != 1) {
      std::cerr << "error: pick exactly one of --quotient-tower, "
                   "--com-collapse, --roundtrip\n";
      return 2;
    }
    json req;
    Handle p;
    std::vector<std::string> inputs;
    int horizon = -1;
    if (c_tower) {
      req["check"] = "quotient-tower";
      req["N"] = N;
      horizon = N;
    } else if (c_collapse) {
      req["check"] = "com-collapse";
    } else {
      req["check"] = "roundtrip";
      if (!algebra_path.empty()) {
        req["algebra"] = parse_file_or_die(algebra_path);
        req["N"] = N;
        horizon = N;
        inputs.push_back(algebra_path);
      }
    }
    if ((c_collapse || (c_roundtrip && algebra_path.empty()))) {
      if (in_path.empty()) {
        std::cerr << "error: this check wants an operad file\n";
        return 2;
      }
      p = load(in_path);
      inputs.push_back(in_path);
      horizon = horizon_of(p.get());
    }
    std::string manifest = make_manifest(argv_words, inputs, horizon);
    char *text = nullptr;
    int rc = operad_classify_json(p.get(), req.dump().c_str(),
                                  manifest.c_str(), &text);
    if (rc == 2 || !text) die(2);
    std::cout << take_string(text);
    return rc;
  }

  if (a2o->parsed()) {
    std::string algebra_text = read_file_or_die(in_path);
    operad_t *raw = nullptr;
    int rc = operad_algebra_to_operad(algebra_text.c_str(), N,
                                      allow_large ? 1 : 0, &raw);
    if (rc != 0) die(rc);
    Handle p(raw);
    std::string manifest = make_manifest(argv_words, {in_path}, N);
    if (out_path.empty()) {
      char *text = nullptr;
      if (operad_info_json(p.get(), manifest.c_str(), &text) != 0) die(2);
      std::cout << take_string(text);
      return 0;
    }
    if (operad_save(p.get(), out_path.c_str(), manifest.c_str()) != 0)
      die(2);
    return 0;
  }

  return 2;
}

int main(int argc, char **argv) {
  try {
    return run(argc, argv);
  } catch (const CliFailure &f) {
    return f.status;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
