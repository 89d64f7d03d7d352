#include "sigample/exact/rational_poly.hpp"

#include "sigample/error.hpp"

namespace sigample::qpoly {

void trim(Coeffs& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Coeffs trimmed(Coeffs p) {
  trim(p);
  return p;
}

int degree(const Coeffs& p) {
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

Rational evaluate(const Coeffs& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Coeffs derivative(const Coeffs& p) {
  Coeffs d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  trim(d);
  return d;
}

Coeffs add(const Coeffs& a, const Coeffs& b) {
  Coeffs out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

Coeffs sub(const Coeffs& a, const Coeffs& b) {
  Coeffs out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Coeffs scale(const Coeffs& a, const Rational& factor) {
  if (factor == 0) return {};
  Coeffs out = a;
  for (auto& c : out) c *= factor;
  trim(out);
  return out;
}

std::pair<Coeffs, Coeffs> divmod(const Coeffs& num, const Coeffs& den) {
  const int dd = degree(den);
  if (dd < 0) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  Coeffs rem = trimmed(num);
  const int dn = degree(rem);
  if (dn < dd) return {Coeffs{}, rem};
  Coeffs quo(static_cast<std::size_t>(dn - dd + 1), Rational(0));
  const Rational& lead = den[static_cast<std::size_t>(dd)];
  for (int k = dn; k >= dd; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] / lead;
    quo[static_cast<std::size_t>(k - dd)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k - dd + j)] -= c * den[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  trim(rem);
  trim(quo);
  return {quo, rem};
}

Coeffs gcd(Coeffs a, Coeffs b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  return scale(a, 1 / Rational(a.back()));
}

Coeffs squarefree_part(const Coeffs& p) {
  Coeffs q = trimmed(p);
  if (degree(q) <= 0) return q;
  const Coeffs g = gcd(q, derivative(q));
  return divmod(q, g).first;
}

Coeffs substitute_square(const Coeffs& p) {
  Coeffs out;
  if (p.empty()) return out;
  out.assign(2 * p.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i) out[2 * i] = p[i];
  return out;
}

}  // namespace sigample::qpoly
