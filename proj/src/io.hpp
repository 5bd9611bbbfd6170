#pragma once

#include <string>

#include "basis.hpp"
#include "classify.hpp"
#include "truncatify.hpp"

namespace operad {

// Everything on disk is one JSON document; a ".gz" suffix wraps the same
// bytes in a deterministic gzip member. Serialization is canonical: fixed
// key order, rationals in lowest terms, compact layout, one trailing
// newline. Equal operads give byte-equal files.

std::string operad_version();

// Provenance block embedded in artifacts. The command line and input
// digests come from the caller; loads carry the block through unchanged,
// so a plain load-save keeps the original bytes.
struct Manifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // name, sha256
  int horizon = -1;
  // report-only wall-clock entries (name, milliseconds); operad files
  // never carry timings or they would break byte-equal saves
  std::vector<std::pair<std::string, long>> timings;

  std::string to_json() const;
};

struct StoredOperad {
  std::shared_ptr<TableOperad> op;
  std::string manifest;  // canonical manifest text, "" when absent
};

std::string operad_to_json(const Operad &p, const std::string &manifest = "");
// schema check, then the full axiom sweep; the thrown error names the
// violated instance
StoredOperad operad_from_json(const std::string &text);

void save_operad(const Operad &p, const std::string &path,
                 const std::string &manifest = "");
StoredOperad load_operad(const std::string &path);

// {d, omega} with omega a d x d x d array of rationals
std::string algebra_to_json(const AugmentedAlgebra &a);
AugmentedAlgebra algebra_from_json(const std::string &text);

// {w, d, generators} with one d x d matrix per adjacent transposition
std::string sw_module_to_json(const SwModule &m);
SwModule sw_module_from_json(const std::string &text);

// report serializers; every document embeds the caller's manifest text
// ("" becomes null)
std::string info_json(const Operad &p, const std::string &manifest = "");
std::string signature_json(const Operad &p, const std::string &manifest = "");
std::string series_json(const Operad &p, const std::string &manifest = "");
std::string truncate_json(const Operad &p, int k,
                          const std::string &manifest = "");
std::string axiom_report_json(const AxiomReport &r);
std::string basis_report_json(const BasisReport &r);
std::string poisson_report_json(const ShufflePoissonReport &r);
std::string classification_json(const ClassificationReport &r,
                                const std::string &manifest = "");

// lowercase hex digest of a file's bytes
std::string sha256_file(const std::string &path);

// advisory worker bound for the process (OPERAD_THREADS is the CLI
// fallback); results never depend on it
void set_thread_limit(int n);
int thread_limit();

}  // namespace operad
