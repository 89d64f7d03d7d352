#include "sigample/exact/real_roots.hpp"

#include <algorithm>

#include "sigample/error.hpp"
#include "sigample/exact/rational_poly.hpp"

namespace sigample {

namespace {

using qpoly::Coeffs;

/// Sturm chain of the squarefree part: p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i).
class SturmChain {
 public:
  explicit SturmChain(std::span<const Rational> coeffs) {
    Coeffs p = qpoly::squarefree_part(Coeffs(coeffs.begin(), coeffs.end()));
    if (p.empty()) {
      throw Error(ErrorKind::InvalidArgument, "root isolation of the zero polynomial");
    }
    chain_.push_back(p);
    Coeffs d = qpoly::derivative(p);
    while (!d.empty()) {
      Coeffs r = qpoly::scale(qpoly::divmod(chain_.back(), d).second, Rational(-1));
      chain_.push_back(std::move(d));
      d = std::move(r);
    }
  }

  const Coeffs& base() const { return chain_.front(); }

  std::size_t sign_changes(const Rational& x) const {
    std::size_t changes = 0;
    int last = 0;
    for (const auto& p : chain_) {
      const int s = sgn(qpoly::evaluate(p, x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  /// Distinct roots in (lo, hi].
  std::size_t count(const Rational& lo, const Rational& hi) const {
    if (hi <= lo) return 0;
    return sign_changes(lo) - sign_changes(hi);
  }

 private:
  std::vector<Coeffs> chain_;
};

void isolate(const SturmChain& chain, const Rational& lo, const Rational& hi,
             std::size_t n_roots, const Rational& max_width,
             std::vector<RationalInterval>& out) {
  if (n_roots == 0) return;
  if (n_roots == 1 && hi - lo <= max_width) {
    out.push_back({lo, hi});
    return;
  }
  const Rational mid = (lo + hi) / 2;
  const std::size_t left = chain.count(lo, mid);
  isolate(chain, lo, mid, left, max_width, out);
  isolate(chain, mid, hi, n_roots - left, max_width, out);
}

}  // namespace

Rational cauchy_bound(std::span<const Rational> coeffs) {
  const Coeffs p = qpoly::trimmed(Coeffs(coeffs.begin(), coeffs.end()));
  if (p.size() <= 1) return 1;
  Rational max_ratio = 0;
  const Rational lead = abs(p.back());
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const Rational ratio = abs(p[i]) / lead;
    if (ratio > max_ratio) max_ratio = ratio;
  }
  return 1 + max_ratio;
}

std::size_t count_real_roots(std::span<const Rational> coeffs, const Rational& lo,
                             const Rational& hi) {
  return SturmChain(coeffs).count(lo, hi);
}

std::vector<RationalInterval> isolate_real_roots(std::span<const Rational> coeffs,
                                                 const Rational& max_width) {
  if (max_width <= 0) {
    throw Error(ErrorKind::InvalidArgument, "isolation width must be positive");
  }
  const SturmChain chain(coeffs);
  std::vector<RationalInterval> out;
  if (qpoly::degree(chain.base()) <= 0) return out;
  const Rational bound = cauchy_bound(chain.base());
  isolate(chain, -bound, bound, chain.count(-bound, bound), max_width, out);
  return out;
}

std::optional<RationalInterval> largest_real_root(std::span<const Rational> coeffs,
                                                const Rational& max_width) {
  if (max_width <= 0) {
    throw Error(ErrorKind::InvalidArgument, "isolation width must be positive");
  }
  const SturmChain chain(coeffs);
  if (qpoly::degree(chain.base()) <= 0) return std::nullopt;
  Rational hi = cauchy_bound(chain.base());
  Rational lo = -hi;
  if (chain.count(lo, hi) == 0) return std::nullopt;
  // invariant: no root above hi, at least one root in (lo, hi]
  while (hi - lo > max_width) {
    const Rational mid = (lo + hi) / 2;
    if (chain.count(mid, hi) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return RationalInterval{lo, hi};
}

}  // namespace sigample
