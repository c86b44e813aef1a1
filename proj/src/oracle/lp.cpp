#include <sstream>

#include "shortness/errors.hpp"
#include "shortness/oracle.hpp"

namespace shortness::oracle {

// x_v: v in S. u_v_k: v is outside S and carries component label k.
// z_k: label k is used. Adjacent outside vertices share a label, so each
// label class is a union of components and sum z_k <= c(G - S).
std::string export_lp(const Graph& g, const Rational& t) {
  if (t <= Rational(0)) throw Error(ErrorKind::InvalidInput, "threshold must be positive");
  const int n = g.order();
  const int labels = n <= 64 ? max_independent_set_size(g) : n;
  const std::int64_t p = t.num(), q = t.den();
  std::ostringstream os;
  os << "\\ toughness violation at t = " << t.str() << ": feasible iff some S has " << p
     << " c(G - S) > " << q << " |S|\n";
  os << "\\ n = " << n << ", labels = " << labels << "\n";
  os << "Maximize\n obj:";
  for (int k = 0; k < labels; ++k) os << " + " << p << " z" << k;
  for (int v = 0; v < n; ++v) os << " - " << q << " x" << v;
  os << "\nSubject To\n";
  os << " violation:";
  for (int k = 0; k < labels; ++k) os << " + " << p << " z" << k;
  for (int v = 0; v < n; ++v) os << " - " << q << " x" << v;
  os << " >= 1\n";
  os << " separating:";
  for (int k = 0; k < labels; ++k) os << " + z" << k;
  os << " >= 2\n";
  for (int v = 0; v < n; ++v) {
    os << " one_" << v << ": x" << v;
    for (int k = 0; k < labels; ++k) os << " + u" << v << "_" << k;
    os << " = 1\n";
  }
  for (const auto& [a, b] : g.edges())
    for (int k = 0; k < labels; ++k)
      os << " e" << a << "_" << b << "_" << k << ": u" << a << "_" << k << " - u" << b << "_" << k << " - x" << a
         << " - x" << b << " <= 0\n"
         << " f" << a << "_" << b << "_" << k << ": u" << b << "_" << k << " - u" << a << "_" << k << " - x" << a
         << " - x" << b << " <= 0\n";
  for (int k = 0; k < labels; ++k) {
    os << " used_" << k << ": z" << k;
    for (int v = 0; v < n; ++v) os << " - u" << v << "_" << k;
    os << " <= 0\n";
  }
  os << "Binary\n";
  for (int v = 0; v < n; ++v) os << " x" << v << "\n";
  for (int k = 0; k < labels; ++k) os << " z" << k << "\n";
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < labels; ++k) os << " u" << v << "_" << k << "\n";
  os << "End\n";
  return os.str();
}

}  // namespace shortness::oracle
