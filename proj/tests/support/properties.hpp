#pragma once

// Property checks over catalog scheme files. Each returns a tally of checks
// and violations so the acceptance binary and the unit suites share them.

#include <set>
#include <sstream>
#include <string>

#include "sigample/cli/catalog.hpp"
#include "sigample/cli/scheme_file.hpp"
#include "support/oracles.hpp"

namespace sigample::testing {

struct Tally {
  std::size_t checks = 0;
  std::vector<std::string> violations;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (violations.size() < 20) {
      violations.push_back(what);
    } else {
      overflow = true;
    }
  }
  void merge(const Tally& other) {
    checks += other.checks;
    for (const auto& v : other.violations) {
      if (violations.size() < 20) violations.push_back(v);
    }
    overflow = overflow || other.overflow;
  }
  bool ok() const { return violations.empty(); }
  bool overflow = false;
};

inline std::vector<cli::SchemeFile> catalog_files() {
  std::vector<cli::SchemeFile> out;
  for (const auto& name : cli::catalog_names()) out.push_back(cli::catalog_entry(name));
  return out;
}

/// The file's actions, their inverses and all pairwise products, deduplicated.
inline std::vector<AutomorphismAction> action_closure(const cli::SchemeFile& f) {
  std::vector<AutomorphismAction> gens;
  for (const auto& a : f.automorphisms) {
    gens.push_back(a);
    gens.push_back({a.name + "^-1", unimodular_inverse(a.matrix)});
  }
  std::vector<AutomorphismAction> out;
  std::set<std::string> seen;
  auto add = [&](const AutomorphismAction& a) {
    if (seen.insert(a.matrix.to_string()).second) out.push_back(a);
  };
  for (const auto& g : gens) add(g);
  for (const auto& g : gens)
    for (const auto& h : gens) add({g.name + "*" + h.name, g.matrix * h.matrix});
  return out;
}

inline std::vector<DivisorClass> sample_divisors(const cli::SchemeFile& f, UnimodularSampler& s,
                                                 std::size_t count) {
  std::vector<DivisorClass> out;
  for (const auto& d : f.divisors) out.push_back(d.divisor);
  for (std::size_t i = 0; i < count; ++i) out.push_back(s.divisor(f.scheme.rank, 6));
  return out;
}

inline std::string where(const cli::SchemeFile& f, const AutomorphismAction& a, const DivisorClass& d) {
  return f.name + " " + a.name + " " + d.to_string();
}

/// Even k for quasi-unipotent actions, and top_form(N^{i_1}D, …) = 0 whenever
/// Σ i_j > k(n-1) for the unipotent reduction.
inline Tally even_k_and_vanishing(const cli::SchemeFile& f, UnimodularSampler& s, std::size_t samples) {
  Tally t;
  const auto divisors = sample_divisors(f, s, samples);
  for (const auto& a : action_closure(f)) {
    if (!validate(f.scheme, a).valid()) continue;
    const auto c = classify(a.matrix);
    if (!c.quasi_unipotent()) continue;
    const auto& v = std::get<QuasiUnipotentAction>(c.kind);
    t.expect(v.k % 2 == 0, f.name + " " + a.name + ": odd k");
    const IntegerMatrix u = mat_pow(a.matrix, static_cast<std::int64_t>(v.q));
    const IntegerMatrix nil = u - IntegerMatrix::identity(u.size());
    for (const auto& d : divisors) {
      std::vector<DivisorClass> orbit{d};
      for (std::size_t i = 0; i < v.k; ++i) orbit.push_back(apply(nil, orbit.back()));
      for (const auto& comp : f.scheme.components) {
        const std::size_t n = comp.dim;
        std::vector<std::size_t> idx(n, 0);
        while (true) {
          std::size_t total = 0;
          for (auto i : idx) total += i;
          if (total > v.k * (n - 1)) {
            std::vector<DivisorClass> args;
            for (auto i : idx) args.push_back(orbit[i]);
            t.expect(intersect(comp, args) == 0, where(f, a, d) + ": vanishing fails on " + comp.name);
          }
          std::size_t pos = 0;
          while (pos < n && ++idx[pos] == v.k + 1) idx[pos++] = 0;
          if (pos == n) break;
        }
      }
    }
  }
  return t;
}

/// Verdicts agree for P and P⁻¹, for (D, P) and (τD, τPτ⁻¹), are stable
/// under D ↦ D + D' for nef D', and depend only on the numerical data.
inline Tally verdict_symmetries(const cli::SchemeFile& f, UnimodularSampler& s, std::size_t samples) {
  Tally t;
  const auto divisors = sample_divisors(f, s, samples);
  std::vector<AutomorphismAction> taus;
  for (const auto& a : f.automorphisms) {
    taus.push_back(a);
    taus.push_back({a.name + "^-1", unimodular_inverse(a.matrix)});
  }
  for (const auto& oracle : f.oracles) {
    std::vector<DivisorClass> nef;
    for (const auto& d : divisors) {
      if (is_nef(oracle, d)) nef.push_back(d);
    }
    for (const auto& a : action_closure(f)) {
      if (!validate(f.scheme, a).valid()) continue;
      const AutomorphismAction inv{a.name + "^-1", unimodular_inverse(a.matrix)};
      for (std::size_t di = 0; di < divisors.size(); ++di) {
        const DivisorClass& d = divisors[di];
        const auto v = is_sigma_ample(f.scheme, a, oracle, d);
        t.expect(v.sigma_ample == is_sigma_ample(f.scheme, inv, oracle, d).sigma_ample,
                 where(f, a, d) + ": P vs P^-1");
        for (const auto& tau : taus) {
          const AutomorphismAction conj{"conj", tau.matrix * a.matrix * unimodular_inverse(tau.matrix)};
          t.expect(v.sigma_ample == is_sigma_ample(f.scheme, conj, oracle, apply(tau, d)).sigma_ample,
                   where(f, a, d) + ": conjugation by " + tau.name);
        }
        if (v.sigma_ample) {
          const DivisorClass& e = nef[di % std::max<std::size_t>(nef.size(), 1)];
          if (!nef.empty()) {
            t.expect(is_sigma_ample(f.scheme, a, oracle, d + e).sigma_ample,
                     where(f, a, d) + ": nef sum with " + e.to_string());
          }
        }
        // numerical determination: renamed copies give the same verdict
        const AutomorphismAction renamed{"other", a.matrix};
        SchemeDescriptor copy = f.scheme;
        for (auto& comp : copy.components) comp.name += "'";
        const auto w = is_sigma_ample(copy, renamed, oracle, DivisorClass(d.coords));
        t.expect(w.sigma_ample == v.sigma_ample && w.witness_m == v.witness_m && w.reason == v.reason,
                 where(f, a, d) + ": hidden state");
      }
    }
  }
  return t;
}

/// Δ'_m(D') from delta_symbolic equals Δ_{qm}(D) by iterated summation for
/// m = 0…m_max; non-quasi-unipotent actions are checked concretely.
inline Tally delta_agreement(const cli::SchemeFile& f, const std::vector<DivisorClass>& divisors,
                             long m_max = 25) {
  Tally t;
  for (const auto& a : action_closure(f)) {
    const auto qu = quasi_unipotence(a.matrix);
    for (const auto& d : divisors) {
      if (!qu.quasi_unipotent()) {
        for (long m = 0; m <= m_max; ++m) {
          t.expect(delta_concrete(a.matrix, d, static_cast<std::uint64_t>(m)) == iterated_delta(a.matrix, d, m),
                   where(f, a, d) + ": concrete delta at m=" + std::to_string(m));
        }
        continue;
      }
      const long q = static_cast<long>(*qu.q);
      const IntegerMatrix u = mat_pow(a.matrix, q);
      const DivisorClass dq = iterated_delta(a.matrix, d, q);
      const auto fam = delta_symbolic(u, dq);
      for (long m = 0; m <= m_max; ++m) {
        t.expect(DivisorClass(evaluate_family(fam, m)) == iterated_delta(a.matrix, d, q * m),
                 where(f, a, d) + ": delta at m=" + std::to_string(m));
      }
      if (q == 1) {
        const auto direct = delta_symbolic(a.matrix, d);
        for (long m = 0; m <= m_max; ++m) {
          t.expect(DivisorClass(evaluate_family(direct, m)) == iterated_delta(a.matrix, d, m),
                   where(f, a, d) + ": unreduced delta at m=" + std::to_string(m));
        }
      }
    }
  }
  return t;
}

/// σ^m D ≡ P^m D: the orbit polynomials of the unipotent reduction reproduce
/// the iterated intersection numbers against each basis class.
inline Tally orbit_polynomials(const cli::SchemeFile& f, const std::vector<DivisorClass>& divisors,
                               long m_max = 50) {
  Tally t;
  for (const auto& a : action_closure(f)) {
    const auto qu = quasi_unipotence(a.matrix);
    if (!qu.quasi_unipotent()) continue;
    const IntegerMatrix u = mat_pow(a.matrix, static_cast<std::int64_t>(*qu.q));
    for (const auto& d : divisors) {
      const auto orbit = orbit_symbolic(u, d);
      DivisorClass iter = d;
      for (long m = 1; m <= m_max; ++m) {
        iter = apply(u, iter);
        const DivisorClass poly(evaluate_family(orbit, m));
        t.expect(poly == iter, where(f, a, d) + ": orbit at m=" + std::to_string(m));
        for (const auto& comp : f.scheme.components) {
          for (std::size_t b = 0; b < f.scheme.rank; ++b) {
            std::vector<DivisorClass> args(comp.dim, DivisorClass::basis(f.scheme.rank, b));
            args[0] = poly;
            std::vector<DivisorClass> direct = args;
            direct[0] = iter;
            t.expect(intersect(comp, args) == intersect(comp, direct),
                     where(f, a, d) + ": pairing at m=" + std::to_string(m));
          }
        }
      }
    }
  }
  return t;
}

/// GK dimension does not depend on the ample class, respects the k + n + 1
/// and k(n-1) + n + 1 bounds, and the top self-intersection has positive
/// leading coefficient.
inline Tally gk_properties(const cli::SchemeFile& f, UnimodularSampler& s, std::size_t samples) {
  Tally t;
  const auto divisors = sample_divisors(f, s, samples);
  for (const auto& oracle : f.oracles) {
    for (const auto& a : action_closure(f)) {
      if (!validate(f.scheme, a).valid()) continue;
      const auto c = classify(a.matrix);
      if (!c.quasi_unipotent()) continue;
      const std::size_t k = std::get<QuasiUnipotentAction>(c.kind).k;
      std::optional<std::size_t> first;
      for (const auto& d : divisors) {
        if (!is_ample(oracle, d)) continue;
        const auto rep = gk_dimension(f.scheme, a, oracle, d);
        if (!first) first = rep.gk_dim;
        t.expect(rep.gk_dim == *first, where(f, a, d) + ": gk dimension depends on D");
        t.expect(rep.gk_dim == rep.degree + 1, where(f, a, d) + ": gk != degree + 1");
        if (f.scheme.components.size() == 1) {
          const std::size_t n = f.scheme.components[0].dim;
          t.expect(k + n + 1 <= rep.gk_dim && rep.gk_dim <= k * (n - 1) + n + 1,
                   where(f, a, d) + ": outside bounds");
        }
        for (const auto& g : rep.components) {
          t.expect(!g.self_intersection.is_zero() && degree_leading(g.self_intersection).leading > 0,
                   where(f, a, d) + ": leading coefficient not positive");
        }
      }
    }
  }
  return t;
}

inline std::string describe(const Tally& t) {
  std::ostringstream os;
  os << t.checks << " checks, " << t.violations.size() << (t.overflow ? "+" : "") << " violations";
  for (const auto& v : t.violations) os << "\n    " << v;
  return os.str();
}

}  // namespace sigample::testing
