#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace operad {

using Rat = mpq_class;
using Vec = std::vector<Rat>;

// Errors carry the CLI exit code: 1 = verification failure, 2 = usage/schema.
struct OperadError : std::runtime_error {
  int code;
  OperadError(int code, const std::string &msg)
      : std::runtime_error(msg), code(code) {}
};

inline OperadError usage_error(const std::string &msg) {
  return OperadError(2, msg);
}
inline OperadError verify_error(const std::string &msg) {
  return OperadError(1, msg);
}

// Canonical text form "p" or "p/q" with q > 0 and gcd(p,q) = 1.
inline std::string rat_str(const Rat &r) { return r.get_str(); }

// Accepts only what rat_str produces (plus a leading minus).
inline Rat rat_parse(const std::string &s) {
  if (s.empty()) throw usage_error("empty rational");
  size_t pos = 0;
  if (s[pos] == '-') pos++;
  size_t digits = 0;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') pos++, digits++;
  if (digits == 0) throw usage_error("bad rational: " + s);
  if (pos < s.size()) {
    if (s[pos] != '/') throw usage_error("bad rational: " + s);
    pos++;
    size_t den = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') pos++, den++;
    if (den == 0 || pos != s.size()) throw usage_error("bad rational: " + s);
  }
  Rat r(s);
  if (r.get_den() == 0) throw usage_error("zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline Vec zero_vec(int d) { return Vec((size_t)d, Rat(0)); }

inline Vec basis_vec(int d, int a) {
  Vec v = zero_vec(d);
  v[(size_t)a] = 1;
  return v;
}

inline bool is_zero_vec(const Vec &v) {
  for (const Rat &x : v)
    if (x != 0) return false;
  return true;
}

inline void axpy(Vec &y, const Rat &c, const Vec &x) {
  for (size_t i = 0; i < y.size(); i++)
    if (x[i] != 0) y[i] += c * x[i];
}

}  // namespace operad
