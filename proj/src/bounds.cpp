#include "qpb/bounds.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qpb/errors.hpp"
#include "qpb/spectrum.hpp"

namespace qpb {

const char* to_string(BoundName name) {
  switch (name) {
    case BoundName::lemma33: return "lemma33";
    case BoundName::lemma34: return "lemma34";
    case BoundName::thm35: return "thm35";
    case BoundName::thm36: return "thm36";
    case BoundName::thm37: return "thm37";
    case BoundName::b1: return "b1";
    case BoundName::cor35_scalar: return "cor35_scalar";
    case BoundName::cor36_scalar: return "cor36_scalar";
    case BoundName::cor37_scalar: return "cor37_scalar";
  }
  return "?";
}

double sqrt_clamped(double disc) {
  if (disc >= 0.0) return std::sqrt(disc);
  if (disc >= -1e-12) return 0.0;
  throw NumericalError("discriminant " + std::to_string(disc) +
                       " below the roundoff clamp window");
}

namespace {

void require_degree(const MatrixPolynomial& p, Index floor, const char* who) {
  if (p.degree() < floor)
    throw DegreeError(std::string(who) + ": degree " + std::to_string(p.degree()) +
                      ", need >= " + std::to_string(floor));
}

BoundReport make_report(BoundName name, const MatrixPolynomial& p) {
  BoundReport r;
  r.name = name;
  r.degree = p.degree();
  r.block_size = p.block_size();
  return r;
}

std::vector<double> coeff_norms(const MatrixPolynomial& p) {
  std::vector<double> s(static_cast<std::size_t>(p.degree()));
  for (Index i = 0; i < p.degree(); ++i)
    s[static_cast<std::size_t>(i)] = spectral_norm(p.coeff(i));
  return s;
}

std::vector<double> family_norms(const std::vector<QMatrix>& f) {
  std::vector<double> s(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) s[i] = spectral_norm(f[i]);
  return s;
}

double sum_squares(const std::vector<double>& s, Index lo, Index hi) {
  double acc = 0.0;
  for (Index i = lo; i <= hi; ++i) acc += s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(i)];
  return acc;
}

// Spectral norm bound for a 2 x kn block row pair [first; second] over the
// index window [lo, hi]: largest eigenvalue of the 2x2 norm majorant of the
// Gram matrix, whose off-diagonal block is the SUM of first_i * second_i^H
// (norm of the sum, not sum of norms).
double row_pair_norm(const std::vector<QMatrix>& first, const std::vector<QMatrix>& second,
                     const std::vector<double>& first_norms,
                     const std::vector<double>& second_norms, Index lo, Index hi) {
  double sum_ff = 0.0, sum_ss = 0.0;
  for (Index i = lo; i <= hi; ++i) {
    sum_ff += first_norms[static_cast<std::size_t>(i)] * first_norms[static_cast<std::size_t>(i)];
    sum_ss += second_norms[static_cast<std::size_t>(i)] * second_norms[static_cast<std::size_t>(i)];
  }
  const Index n = first.empty() ? 0 : first.front().rows();
  QMatrix cross_sum = QMatrix::Zero(n, n);
  for (Index i = lo; i <= hi; ++i)
    cross_sum = cross_sum + first[static_cast<std::size_t>(i)] *
                                conj_transpose(second[static_cast<std::size_t>(i)]);
  const double cross = spectral_norm(cross_sum);
  const double diff = sum_ff - sum_ss;
  return std::sqrt(0.5 * (sum_ff + sum_ss + sqrt_clamped(diff * diff + 4.0 * cross * cross)));
}

}  // namespace

BoundReport lemma33_value(const MatrixPolynomial& p) {
  require_degree(p, 3, "lemma33_value");
  const Index k = p.degree();
  const std::vector<double> s = coeff_norms(p);
  const double xi0 = sum_squares(s, 0, k - 2);
  const double head = s[0] * s[0] + s[1] * s[1];
  const double one_plus = 1.0 + xi0;

  BoundReport r = make_report(BoundName::lemma33, p);
  r.value = 0.5 * (one_plus + sqrt_clamped(one_plus * one_plus - 4.0 * head));
  r.intermediates["xi0"] = xi0;
  r.computed = true;
  return r;
}

BoundReport lemma34_value(const MatrixPolynomial& p) {
  require_degree(p, 4, "lemma34_value");
  const Index k = p.degree();
  const std::vector<double> s = coeff_norms(p);
  const double alpha = sum_squares(s, 0, k - 3);
  const double head = s[0] * s[0] + s[1] * s[1] + s[2] * s[2];
  const double one_plus = 1.0 + alpha;

  BoundReport r = make_report(BoundName::lemma34, p);
  r.value = 0.5 * (one_plus + sqrt_clamped(one_plus * one_plus - 4.0 * head));
  r.intermediates["alpha"] = alpha;
  r.computed = true;
  return r;
}

BoundReport thm35_bound(const MatrixPolynomial& p) {
  require_degree(p, 4, "thm35_bound");
  const Index k = p.degree();
  const std::vector<double> s = coeff_norms(p);
  const DerivedCoefficients d = derived_coefficients(p);
  const std::vector<double> nb = family_norms(d.b);

  // Shared subexpression with lemma33_value, bit for bit: same call, same value.
  const double xi1 = std::sqrt(lemma33_value(p).value);
  const double xi2 = std::sqrt(sum_squares(nb, 0, k - 2));
  const double tail = nb[static_cast<std::size_t>(k - 1)];
  const double lead = std::sqrt(1.0 + s[static_cast<std::size_t>(k - 1)] * s[static_cast<std::size_t>(k - 1)]);
  const double gap = xi1 - tail;

  BoundReport r = make_report(BoundName::thm35, p);
  r.value = std::sqrt(0.5 * (xi1 + tail + sqrt_clamped(gap * gap + 4.0 * xi2 * lead)));
  r.intermediates["xi1"] = xi1;
  r.intermediates["xi2"] = xi2;
  r.computed = true;
  return r;
}

BoundReport thm36_bound(const MatrixPolynomial& p) {
  require_degree(p, 4, "thm36_bound");
  const Index k = p.degree();
  const std::vector<double> s = coeff_norms(p);
  const DerivedCoefficients d = derived_coefficients(p);
  const std::vector<double> nb = family_norms(d.b);

  const double beta1 = row_pair_norm(p.coeffs(), d.b, s, nb, 0, k - 3);
  const double beta2 = row_pair_norm(p.coeffs(), d.b, s, nb, k - 2, k - 1);
  const double t = beta1 * beta1 + beta2 * beta2;

  BoundReport r = make_report(BoundName::thm36, p);
  r.value = std::pow(
      1.0 + 0.5 * (t + sqrt_clamped(t * t + 4.0 * (2.0 * beta1 * beta2 + 1.0))), 0.25);
  r.intermediates["beta1"] = beta1;
  r.intermediates["beta2"] = beta2;
  r.computed = true;
  return r;
}

BoundReport thm37_bound(const MatrixPolynomial& p) {
  require_degree(p, 5, "thm37_bound");
  const Index k = p.degree();
  const std::vector<double> s = coeff_norms(p);
  const DerivedCoefficients d = derived_coefficients(p);
  const std::vector<double> nb = family_norms(d.b);
  const std::vector<double> nc = family_norms(d.c);

  const double eta1 = std::sqrt(lemma34_value(p).value);
  const double eta2 = row_pair_norm(d.b, d.c, nb, nc, k - 2, k - 1);
  const double tau2 = row_pair_norm(d.b, d.c, nb, nc, 0, k - 3);
  const double sk1 = s[static_cast<std::size_t>(k - 1)];
  const double sk2 = s[static_cast<std::size_t>(k - 2)];
  const double tau1 = std::sqrt(sk1 * sk1 + sk2 * sk2 + 1.0);
  const double gap = eta1 - eta2;

  BoundReport r = make_report(BoundName::thm37, p);
  r.value = std::cbrt(0.5 * (eta1 + eta2 + sqrt_clamped(gap * gap + 4.0 * tau1 * tau2)));
  r.intermediates["eta1"] = eta1;
  r.intermediates["eta2"] = eta2;
  r.intermediates["tau1"] = tau1;
  r.intermediates["tau2"] = tau2;
  r.computed = true;
  return r;
}

BoundReport b1_bound(const MatrixPolynomial& p) {
  require_degree(p, 2, "b1_bound");
  const Index k = p.degree();
  const std::vector<double> s = coeff_norms(p);
  const double lead = s[static_cast<std::size_t>(k - 1)];
  const double tail_root = std::sqrt(sum_squares(s, 0, k - 2));
  const double gap = lead - 1.0;

  BoundReport r = make_report(BoundName::b1, p);
  r.value = 0.5 * (1.0 + lead + sqrt_clamped(gap * gap + 4.0 * tail_root));
  r.computed = true;
  return r;
}

BoundSet all_bounds(const MatrixPolynomial& p) {
  BoundSet set;
  const std::pair<BoundName, BoundReport (*)(const MatrixPolynomial&)> table[] = {
      {BoundName::thm35, thm35_bound},
      {BoundName::thm36, thm36_bound},
      {BoundName::thm37, thm37_bound},
      {BoundName::b1, b1_bound},
  };
  for (const auto& [name, fn] : table) {
    try {
      set.reports.push_back(fn(p));
    } catch (const Error& e) {
      BoundReport r = make_report(name, p);
      r.skip_reason = e.what();
      set.reports.push_back(std::move(r));
    }
  }
  double best = 0.0;
  for (const BoundReport& r : set.reports) {
    if (!r.computed) continue;
    if (!set.tightest || r.value < best) {
      set.tightest = r.name;
      best = r.value;
    }
  }
  return set;
}

BoundReport scalar_bound(const std::vector<Quaterniond>& coeffs, BoundName which) {
  BoundName matrix_name;
  switch (which) {
    case BoundName::cor35_scalar: matrix_name = BoundName::thm35; break;
    case BoundName::cor36_scalar: matrix_name = BoundName::thm36; break;
    case BoundName::cor37_scalar: matrix_name = BoundName::thm37; break;
    default:
      throw ParameterError(std::string("scalar_bound: ") + to_string(which) +
                           " is not a scalar bound label");
  }
  const MatrixPolynomial p = MatrixPolynomial::from_scalar(coeffs);
  BoundReport r = matrix_name == BoundName::thm35   ? thm35_bound(p)
                  : matrix_name == BoundName::thm36 ? thm36_bound(p)
                                                    : thm37_bound(p);
  r.name = which;
  return r;
}

}  // namespace qpb
