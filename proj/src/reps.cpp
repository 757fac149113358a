#include "qclifford/reps.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <random>

#include "qclifford/errors.hpp"
#include "qclifford/text.hpp"

namespace qcl {

namespace poly {

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const Poly& p) {
  for (std::size_t k = p.size(); k > 0; --k)
    if (!p[k - 1].is_zero()) return static_cast<int>(k) - 1;
  return -1;
}

Poly multiply(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  const int db = degree(b);
  if (db < 0) throw std::domain_error("polynomial division by zero");
  r = a;
  trim(r);
  q.assign(std::max(0, degree(r) - db + 1), Scalar(0));
  const Scalar lead = b[db];
  for (int dr = degree(r); dr >= db; dr = degree(r)) {
    const Scalar c = r[dr] / lead;
    q[dr - db] = c;
    for (int k = 0; k <= db; ++k) r[dr - db + k] -= c * b[k];
    trim(r);
  }
  trim(q);
}

namespace {
Poly monic(Poly p) {
  trim(p);
  if (p.empty()) return p;
  const Scalar lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Poly subtract(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
  trim(a);
  return a;
}
}  // namespace

Poly monic_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Poly derivative(const Poly& p) {
  Poly out;
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * Scalar(static_cast<long>(k)));
  trim(out);
  return out;
}

Scalar evaluate(const Poly& p, const Scalar& x) {
  Scalar acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string to_text(const Poly& p) {
  std::string out;
  for (int k = degree(p); k >= 0; --k) {
    if (p[k].is_zero()) continue;
    std::string coeff = p[k].to_string();
    const bool negative = coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    const std::string power = k == 0 ? "" : k == 1 ? "t" : "t^" + std::to_string(k);
    std::string term = k == 0 ? coeff : (coeff == "1" ? power : coeff + "*" + power);
    if (out.empty()) out = negative ? "-" + term : term;
    else out += (negative ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

// s with s b = 1 mod a, for coprime a and b.
std::optional<Poly> inverse_mod(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b, s0, s1{Scalar(1)};
  trim(r1);
  while (degree(r1) > 0) {
    Poly q, r;
    divmod(r0, r1, q, r);
    Poly s = subtract(s0, multiply(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (degree(r1) != 0) return std::nullopt;  // common factor
  const Scalar c = r1[0];
  for (auto& x : s1) x /= c;
  Poly q, rem;
  divmod(s1, a, q, rem);
  return rem;
}

}  // namespace poly

mpq_class rationalize(double x, long max_den) {
  // Continued-fraction convergents h/k, stopping before k exceeds max_den.
  const bool negative = x < 0;
  double v = std::fabs(x);
  long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int step = 0; step < 64; ++step) {
    const double a = std::floor(v);
    if (a > 1e15) break;
    const long long ai = static_cast<long long>(a);
    const long long h2 = ai * h1 + h0;
    const long long k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    const double frac = v - a;
    if (frac < 1e-15) break;
    v = 1.0 / frac;
  }
  if (k1 == 0) return mpq_class(0);
  mpq_class out(mpz_class(std::to_string(h1)), mpz_class(std::to_string(k1)));
  out.canonicalize();
  return negative ? mpq_class(-out) : out;
}

bool is_idempotent(const Algebra& alg, const Multivector& f) { return alg.product(f, f) == f; }

namespace {

std::vector<Multivector> independent(const Algebra& alg, const std::vector<Multivector>& elems) {
  Matrix rows(elems.size(), alg.basis_size());
  for (std::size_t r = 0; r < elems.size(); ++r)
    for (const auto& [b, c] : elems[r].terms()) rows(r, b.bits) = c;
  std::vector<Multivector> out;
  for (std::size_t r : independent_rows(rows)) out.push_back(elems[r]);
  return out;
}

void require_idempotent(const Algebra& alg, const Multivector& f) {
  if (!f.context()->same_algebra(alg.form())) throw ContextMismatch();
  if (!is_idempotent(alg, f)) throw NotIdempotentError();
}

Multivector evaluate_at(const Algebra& alg, const poly::Poly& p, const Multivector& z, const Multivector& unit) {
  Multivector acc = alg.zero();
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = alg.product(acc, z) + *it * unit;
  return acc;
}

// Minimal polynomial of z inside the unital corner with unit f.
poly::Poly minimal_polynomial(const Algebra& alg, const Multivector& z, const Multivector& f, std::size_t bound) {
  std::vector<std::vector<Scalar>> powers{f.dense()};
  Multivector current = f;
  for (std::size_t d = 1; d <= bound; ++d) {
    current = alg.product(current, z);
    const std::vector<Scalar> v = current.dense();
    Matrix cols(v.size(), powers.size());
    for (std::size_t c = 0; c < powers.size(); ++c)
      for (std::size_t r = 0; r < v.size(); ++r) cols(r, c) = powers[c][r];
    if (auto x = solve(cols, v)) {
      poly::Poly m(d + 1);
      for (std::size_t k = 0; k < d; ++k) m[k] = -(*x)[k];
      m[d] = Scalar(1);
      return m;
    }
    powers.push_back(v);
  }
  throw ComputeError("minimal polynomial exceeds the corner dimension");
}

std::vector<std::complex<double>> numeric_roots(const poly::Poly& p) {
  const int d = poly::degree(p);
  if (d < 1) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  for (int k = 1; k < d; ++k) companion(k, k - 1) = 1.0;
  for (int k = 0; k < d; ++k) companion(k, d - 1) = -(p[k] / p[d]).to_complex();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<std::complex<double>> roots(solver.eigenvalues().data(), solver.eigenvalues().data() + d);
  std::sort(roots.begin(), roots.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

std::optional<Scalar> rationalize_scalar(std::complex<double> c, Ring ring, const SplitOptions& opt) {
  const double scale = 1.0 + std::abs(c);
  if (ring == Ring::Rational && std::fabs(c.imag()) > opt.tolerance * scale) return std::nullopt;
  Scalar s(rationalize(c.real(), opt.max_denominator),
           ring == Ring::Rational ? mpq_class(0) : rationalize(c.imag(), opt.max_denominator));
  if (std::abs(s.to_complex() - (ring == Ring::Rational ? std::complex<double>(c.real(), 0) : c)) >
      opt.tolerance * scale)
    return std::nullopt;
  return s;
}

// Rational factor of the squarefree polynomial sf with the chosen roots, if
// its coefficients reconstruct exactly.
std::optional<poly::Poly> factor_from_roots(const std::vector<std::complex<double>>& roots, std::uint32_t subset,
                                            const poly::Poly& sf, Ring ring, const SplitOptions& opt) {
  std::vector<std::complex<double>> coeffs{1.0};
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (!((subset >> k) & 1U)) continue;
    std::vector<std::complex<double>> next(coeffs.size() + 1, 0.0);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] += coeffs[j];
      next[j] -= roots[k] * coeffs[j];
    }
    coeffs = std::move(next);
  }
  poly::Poly p;
  for (auto c : coeffs) {
    auto s = rationalize_scalar(c, ring, opt);
    if (!s) return std::nullopt;
    p.push_back(*s);
  }
  poly::Poly q, r;
  poly::divmod(sf, p, q, r);
  if (!r.empty()) return std::nullopt;
  return p;
}

std::vector<std::uint32_t> subsets(std::size_t count) {
  std::vector<std::uint32_t> out;
  const std::size_t max_size = count <= 12 ? count - 1 : 2;
  for (std::size_t size = 1; size <= max_size; ++size)
    for (std::uint32_t s = 1; s + 1 < (std::uint32_t{1} << count); ++s)
      if (static_cast<std::size_t>(std::popcount(s)) == size) out.push_back(s);
  return out;
}

struct Candidate {
  Multivector e;
  poly::Poly factor;
};

// Spectral idempotent of z for a rational factor p of its minimal polynomial.
std::optional<Candidate> spectral_idempotent(const Algebra& alg, const Multivector& z, const Multivector& f,
                                             const poly::Poly& m, const poly::Poly& p) {
  // Full multiplicity part: gcd(m, p^deg m).
  poly::Poly q, power;
  poly::divmod(p, m, q, power);
  for (int k = 1; k < poly::degree(m); ++k) {
    poly::divmod(poly::multiply(power, p), m, q, power);
    if (power.empty()) break;
  }
  const poly::Poly full = poly::monic_gcd(m, power);
  poly::Poly cofactor, rem;
  poly::divmod(m, full, cofactor, rem);
  if (!rem.empty() || poly::degree(cofactor) < 1 || poly::degree(full) < 1) return std::nullopt;
  // e = s(z) c(z) with s c = 1 mod full projects onto ker full(z).
  auto s = poly::inverse_mod(full, cofactor);
  if (!s) return std::nullopt;
  Multivector e = evaluate_at(alg, poly::multiply(*s, cofactor), z, f);
  return Candidate{std::move(e), full};
}

bool certify(const Algebra& alg, const Multivector& f, const Multivector& e) {
  if (e.is_zero() || e == f) return false;
  if (alg.product(e, e) != e) return false;
  if (alg.product(e, f) != e || alg.product(f, e) != e) return false;
  const Multivector rest = f - e;
  return alg.product(rest, rest) == rest && alg.product(e, rest).is_zero() && alg.product(rest, e).is_zero();
}

}  // namespace

IdealBasis left_ideal(const Algebra& alg, const Multivector& f) {
  require_idempotent(alg, f);
  std::vector<Multivector> spans;
  for (std::uint32_t b = 0; b < alg.basis_size(); ++b) spans.push_back(alg.product(alg.blade(Blade(b)), f));
  return IdealBasis{f, independent(alg, spans)};
}

CornerBasis peirce_corner(const Algebra& alg, const Multivector& f) {
  require_idempotent(alg, f);
  std::vector<Multivector> spans;
  for (std::uint32_t b = 0; b < alg.basis_size(); ++b)
    spans.push_back(alg.product(alg.product(f, alg.blade(Blade(b))), f));
  return CornerBasis{f, independent(alg, spans)};
}

const char* split_outcome_name(SplitOutcome o) {
  switch (o) {
    case SplitOutcome::Primitive: return "primitive";
    case SplitOutcome::Split: return "split";
    case SplitOutcome::NoSplitFound: break;
  }
  return "no-split-found";
}

SplitResult corner_split_search(const Algebra& alg, const Multivector& f, const SplitOptions& options) {
  const CornerBasis corner = peirce_corner(alg, f);
  SplitResult result;
  result.corner_dimension = corner.dimension();
  result.transcript.push_back("corner dimension " + std::to_string(corner.dimension()));
  if (corner.primitive()) {
    result.outcome = SplitOutcome::Primitive;
    result.transcript.push_back("one-dimensional corner: primitive");
    return result;
  }

  std::vector<Multivector> candidates = corner.basis;
  for (unsigned s = 0; s < options.seeds; ++s) {
    std::mt19937 rng(options.seed + s);
    std::uniform_int_distribution<long> coeff(-2, 2);
    Multivector z = alg.zero();
    for (const auto& b : corner.basis) z += Scalar(coeff(rng)) * b;
    candidates.push_back(std::move(z));
  }

  for (const auto& z : candidates) {
    ++result.candidates_tried;
    if (z.is_zero()) continue;
    const poly::Poly m = minimal_polynomial(alg, z, f, corner.dimension());
    const int deg = poly::degree(m);
    if (deg < 2) continue;
    poly::Poly sf, rem;
    poly::divmod(m, poly::monic_gcd(m, poly::derivative(m)), sf, rem);
    const auto roots = numeric_roots(sf);
    if (roots.size() < 2) continue;
    bool found = false;
    for (std::uint32_t subset : subsets(roots.size())) {
      auto p = factor_from_roots(roots, subset, sf, alg.form().ring(), options);
      if (!p) continue;
      auto cand = spectral_idempotent(alg, z, f, m, *p);
      if (!cand || !certify(alg, f, cand->e)) continue;
      result.outcome = SplitOutcome::Split;
      result.witness = z;
      result.minimal_polynomial = m;
      result.factor = cand->factor;
      result.f2 = f - cand->e;
      result.f1 = std::move(cand->e);
      result.transcript.push_back("candidate " + std::to_string(result.candidates_tried) + ": z = " + to_text(z));
      result.transcript.push_back("minimal polynomial degree " + std::to_string(deg) + ", factor degree " +
                                  std::to_string(poly::degree(result.factor)));
      result.transcript.push_back("f1 = " + to_text(*result.f1));
      result.transcript.push_back("f2 = " + to_text(*result.f2));
      result.transcript.push_back("verified exactly: f1^2 = f1, f2^2 = f2, f1 f2 = f2 f1 = 0, f1 + f2 = f");
      found = true;
      break;
    }
    if (found) {
      result.real_split_only = false;
      return result;
    }
    const auto real_roots = std::count_if(roots.begin(), roots.end(), [&](std::complex<double> r) {
      return std::fabs(r.imag()) <= options.tolerance * (1.0 + std::abs(r));
    });
    if (real_roots >= 2 && !result.real_split_only) {
      result.real_split_only = true;
      result.real_witness = z;
      result.real_witness_polynomial = m;
      std::string listed;
      for (const auto& r : roots)
        if (std::fabs(r.imag()) <= options.tolerance * (1.0 + std::abs(r)))
          listed += (listed.empty() ? "" : ", ") + std::to_string(r.real());
      result.transcript.push_back("candidate " + std::to_string(result.candidates_tried) + ": z = " + to_text(z) +
                                  " has minimal polynomial " + poly::to_text(m) + " with distinct real roots " +
                                  listed + " but no rational factor");
    }
  }
  result.transcript.push_back("no split among " + std::to_string(result.candidates_tried) + " candidates");
  if (result.real_split_only)
    result.transcript.push_back("f splits over the reals, but no certificate exists with rational coefficients");
  return result;
}

PrimitiveDecomposition primitive_decomposition(const Algebra& alg, const Multivector& f,
                                               const SplitOptions& options) {
  PrimitiveDecomposition out;
  std::vector<Multivector> stack{f};
  while (!stack.empty()) {
    Multivector piece = std::move(stack.back());
    stack.pop_back();
    SplitResult r = corner_split_search(alg, piece, options);
    switch (r.outcome) {
      case SplitOutcome::Primitive:
        out.pieces.push_back(std::move(piece));
        break;
      case SplitOutcome::Split:
        stack.push_back(std::move(*r.f2));
        stack.push_back(std::move(*r.f1));
        break;
      case SplitOutcome::NoSplitFound:
        out.certified = false;
        out.pieces.push_back(std::move(piece));
        break;
    }
  }
  return out;
}

}  // namespace qcl
