#include "frames/witness.hpp"

#include <algorithm>
#include <string>

#include "frames/errors.hpp"

namespace frames {

namespace {

std::string describe(StratumIndex s) {
  return "(" + std::to_string(s.p) + "," + std::to_string(s.q) + ")";
}

void require_shape(const FrameSpaceParams& params, const Matrix& a) {
  if (static_cast<Int>(a.rows()) != params.d() || static_cast<Int>(a.cols()) != params.n()) {
    throw InvalidArgument("matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                          ", expected " + std::to_string(params.d()) + "x" + std::to_string(params.n()));
  }
}

FrameInvariants require_variety(const PrimeField& f, const Matrix& a) {
  auto inv = frame_invariants(f, a);
  if (!inv.in_variety) throw PreconditionError("matrix is not an orthogonal frame (Gram matrix not diagonal)");
  return inv;
}

JacobianCertificate make_certificate(const PrimeField& f, const FrameSpaceParams& params, const Matrix& a,
                                     StratumIndex s, Int bound, SmoothnessCriterion criterion) {
  JacobianCertificate c{params, a, s, jacobian_rank(f, a), bound, false, criterion};
  c.passed = c.jacobian_rank >= c.required_bound;
  return c;
}

Vector random_combination(const PrimeField& f, Rng& rng, const Matrix& basis) {
  Vector w(basis.rows(), 0);
  for (std::size_t k = 0; k < basis.cols(); ++k) {
    const Scalar c = rng.uniform(f);
    for (std::size_t i = 0; i < basis.rows(); ++i) w[i] = f.add(w[i], f.mul(c, basis.at(i, k)));
  }
  return w;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](Scalar x) { return x == 0; });
}

std::vector<std::size_t> isotropic_columns(const FrameInvariants& inv, std::size_t cols) {
  std::vector<std::size_t> iso;
  for (std::size_t j = 0; j < cols; ++j) {
    if (!std::binary_search(inv.anisotropic_columns.begin(), inv.anisotropic_columns.end(), j)) iso.push_back(j);
  }
  return iso;
}

PerturbationWitness start_perturbation(const PrimeField& f, const FrameSpaceParams& params, const Matrix& a,
                                       StratumIndex target, Scalar epsilon, FrameInvariants& inv) {
  require_shape(params, a);
  if (epsilon % f.modulus() == 0) throw InvalidArgument("epsilon must be nonzero");
  inv = require_variety(f, a);
  if (!in_domain(params, target)) {
    throw PreconditionError("target stratum " + describe(target) + " is outside the domain");
  }
  const auto column = dependent_isotropic_column(f, a);
  if (!column) throw PreconditionError("no isotropic column lies in the span of the other isotropic columns");
  PerturbationWitness w;
  w.base = a;
  w.base_stratum = inv.stratum();
  w.direction_column = *column;
  w.epsilon = epsilon % f.modulus();
  w.target = target;
  return w;
}

bool finish_perturbation(const PrimeField& f, PerturbationWitness& w, const Vector& direction) {
  w.direction = direction;
  w.perturbed = perturbed_at(f, w, w.epsilon);
  const auto inv = frame_invariants(f, w.perturbed);
  return inv.in_variety && inv.stratum() == w.target;
}

}  // namespace

JacobianPattern build_jacobian(const FrameSpaceParams& params) {
  JacobianPattern pat;
  pat.d = static_cast<std::size_t>(params.d());
  pat.n = static_cast<std::size_t>(params.n());
  for (std::size_t h = 0; h < pat.n; ++h)
    for (std::size_t k = h + 1; k < pat.n; ++k) pat.row_pairs.emplace_back(h, k);
  pat.entries.resize(pat.rows() * pat.cols());
  for (std::size_t r = 0; r < pat.rows(); ++r) {
    const auto [h, k] = pat.row_pairs[r];
    for (std::size_t c = 0; c < pat.cols(); ++c) {
      const auto [i, j] = pat.column_variable(c);
      if (j == h) {
        pat.entries[r * pat.cols() + c] = VariableRef{i, k};
      } else if (j == k) {
        pat.entries[r * pat.cols() + c] = VariableRef{i, h};
      }
    }
  }
  return pat;
}

Matrix evaluate_jacobian(const PrimeField& f, const Matrix& a) {
  const std::size_t d = a.rows();
  const std::size_t n = a.cols();
  Matrix theta(n * (n - (n > 0 ? 1 : 0)) / 2, d * n);
  std::size_t r = 0;
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t k = h + 1; k < n; ++k, ++r) {
      for (std::size_t i = 0; i < d; ++i) {
        theta.at(r, i * n + h) = a.at(i, k) % f.modulus();
        theta.at(r, i * n + k) = a.at(i, h) % f.modulus();
      }
    }
  }
  return theta;
}

Matrix evaluate_pattern(const PrimeField& f, const JacobianPattern& pattern, const Matrix& a) {
  if (a.rows() != pattern.d || a.cols() != pattern.n) throw InvalidArgument("matrix shape does not match pattern");
  Matrix theta(pattern.rows(), pattern.cols());
  for (std::size_t r = 0; r < pattern.rows(); ++r)
    for (std::size_t c = 0; c < pattern.cols(); ++c)
      if (const auto& v = pattern.at(r, c)) theta.at(r, c) = a.at(v->i, v->j) % f.modulus();
  return theta;
}

Int jacobian_rank(const PrimeField& f, const Matrix& a) {
  return static_cast<Int>(rank(f, evaluate_jacobian(f, a)));
}

std::string_view to_string(SmoothnessCriterion c) noexcept {
  return c == SmoothnessCriterion::StratumBound ? "stratum-bound" : "full-rank";
}

Int smoothness_bound(const FrameSpaceParams& params, StratumIndex s) {
  return std::min(choose2(params.n()), checked_sub(checked_mul(params.n(), params.d()), sigma(params, s)));
}

Matrix sample_stratum_point(const PrimeField& f, const FrameSpaceParams& params, StratumIndex s,
                            std::uint64_t seed) {
  if (!in_domain(params, s)) throw DomainError("stratum " + describe(s) + " is outside the domain");
  const auto d = static_cast<std::size_t>(params.d());
  const auto n = static_cast<std::size_t>(params.n());
  const auto p = static_cast<std::size_t>(s.p);
  const auto q = static_cast<std::size_t>(s.q);
  Matrix a(d, n);
  for (std::size_t j = 0; j < p; ++j) a.at(j, j) = 1;
  for (std::size_t k = 0; k < q; ++k) {
    a.at(p + 2 * k, p + k) = 1;
    a.at(p + 2 * k + 1, p + k) = f.nu();
  }
  Rng rng(seed);
  for (std::size_t j = p + q; j < n; ++j) {
    for (std::size_t k = 0; k < q; ++k) {
      const Scalar c = rng.uniform(f);
      for (std::size_t i = 0; i < d; ++i) a.at(i, j) = f.add(a.at(i, j), f.mul(c, a.at(i, p + k)));
    }
  }
  return a;
}

JacobianCertificate certify_smooth(const PrimeField& f, const FrameSpaceParams& params, const Matrix& a) {
  require_shape(params, a);
  const auto inv = require_variety(f, a);
  const auto s = inv.stratum();
  if (!on_boundary(params, s)) {
    throw DomainError("stratum " + describe(s) + " is not on the boundary; the dimension bound does not apply");
  }
  return make_certificate(f, params, a, s, smoothness_bound(params, s), SmoothnessCriterion::StratumBound);
}

JacobianCertificate certify_full_rank(const PrimeField& f, const FrameSpaceParams& params, const Matrix& a) {
  require_shape(params, a);
  const auto inv = require_variety(f, a);
  return make_certificate(f, params, a, inv.stratum(), choose2(params.n()), SmoothnessCriterion::FullRank);
}

Matrix extend_witness(const Matrix& a) {
  Matrix e(a.rows() + 1, a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) e.at(i, j) = a.at(i, j);
  e.at(a.rows(), a.cols()) = 1;
  return e;
}

Matrix isotropic_block_witness(const PrimeField& f, std::size_t d, std::size_t n) {
  if (d < 2 * n) throw InvalidArgument("isotropic block needs d >= 2n");
  Matrix a(d, n);
  for (std::size_t j = 0; j < n; ++j) {
    a.at(j, j) = 1;
    a.at(n + j, j) = f.nu();
  }
  return a;
}

Matrix doubled_block(const PrimeField& f, const Matrix& b) { return vstack(b, scale(f, b, f.nu())); }

JacobianCertificate certify_smooth_p0_general(const PrimeField& f, const FrameSpaceParams& params, Int q,
                                              std::uint64_t seed, int trials) {
  if (params.d() != 2 * q) throw InvalidArgument("d must equal 2q");
  if (q < 1 || q > params.n()) throw InvalidArgument("q must lie in [1, n]");
  if (trials < 1) throw InvalidArgument("trials must be positive");
  Rng rng(seed);
  std::optional<JacobianCertificate> last;
  for (int t = 0; t < trials; ++t) {
    const Matrix a =
        doubled_block(f, random_matrix(f, rng, static_cast<std::size_t>(q), static_cast<std::size_t>(params.n())));
    const auto inv = frame_invariants(f, a);
    if (!inv.in_variety || inv.stratum() != StratumIndex{0, q}) continue;
    last = certify_smooth(f, params, a);
    if (last->passed) return *last;
  }
  if (!last) throw SearchExhausted("no draw landed in the stratum (0," + std::to_string(q) + ")");
  return *last;
}

JacobianCertificate constructive_smooth_witness(const PrimeField& f, const FrameSpaceParams& params,
                                                StratumIndex s, std::uint64_t seed, int trials) {
  if (!on_boundary(params, s)) throw DomainError("stratum " + describe(s) + " is not on the boundary");
  if (trials < 1) throw InvalidArgument("trials must be positive");
  const auto p = static_cast<std::size_t>(s.p);
  const auto q = static_cast<std::size_t>(s.q);
  const auto d0 = static_cast<std::size_t>(params.d()) - p;
  const auto n0 = static_cast<std::size_t>(params.n()) - p;
  const auto n = static_cast<std::size_t>(params.n());

  std::vector<std::size_t> order;
  for (std::size_t j = n0; j < n; ++j) order.push_back(j);
  for (std::size_t j = 0; j < n0; ++j) order.push_back(j);

  Rng rng(seed);
  std::optional<JacobianCertificate> last;
  for (int t = 0; t < trials; ++t) {
    Matrix a = q == n0 ? isotropic_block_witness(f, d0, n0) : doubled_block(f, random_matrix(f, rng, q, n0));
    for (std::size_t k = 0; k < p; ++k) a = extend_witness(a);
    a = select_columns(a, order);
    const auto inv = frame_invariants(f, a);
    if (!inv.in_variety || inv.stratum() != s) continue;
    last = certify_smooth(f, params, a);
    if (last->passed) return *last;
    if (q == n0) break;
  }
  if (!last) throw SearchExhausted("no draw landed in the stratum " + describe(s));
  return *last;
}

Matrix perturbed_at(const PrimeField& f, const PerturbationWitness& w, Scalar epsilon) {
  Matrix m = w.base;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    m.at(i, w.direction_column) = f.add(m.at(i, w.direction_column), f.mul(epsilon, w.direction[i]));
  }
  return m;
}

std::optional<std::size_t> dependent_isotropic_column(const PrimeField& f, const Matrix& a) {
  const auto inv = frame_invariants(f, a);
  if (!inv.in_variety) return std::nullopt;
  const auto iso = isotropic_columns(inv, a.cols());
  for (std::size_t k = 0; k < iso.size(); ++k) {
    auto others = iso;
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(k));
    if (static_cast<Int>(rank(f, select_columns(a, others))) == inv.rk_iso) return iso[k];
  }
  return std::nullopt;
}

PerturbationWitness perturb_increase_p(const PrimeField& f, const FrameSpaceParams& params, const Matrix& a,
                                       std::uint64_t seed, Scalar epsilon, int retries) {
  FrameInvariants inv;
  const StratumIndex base = frame_invariants(f, a).stratum();
  auto w = start_perturbation(f, params, a, {base.p + 1, base.q}, epsilon, inv);
  const Matrix perp = nullspace(f, a.transpose());
  Rng rng(seed);
  for (int t = 0; t < retries; ++t) {
    const Vector dir = random_combination(f, rng, perp);
    if (bilinear(f, dir, dir) == 0) continue;
    if (finish_perturbation(f, w, dir)) return w;
  }
  throw SearchExhausted("no anisotropic vector orthogonal to the frame found in " + std::to_string(retries) +
                        " draws");
}

PerturbationWitness perturb_increase_q(const PrimeField& f, const FrameSpaceParams& params, const Matrix& a,
                                       std::uint64_t seed, Scalar epsilon, int retries) {
  FrameInvariants inv;
  const StratumIndex base = frame_invariants(f, a).stratum();
  auto w = start_perturbation(f, params, a, {base.p, base.q + 1}, epsilon, inv);

  const Matrix perp = nullspace(f, a.transpose());
  Matrix span = select_columns(a, isotropic_columns(inv, a.cols()));
  std::size_t span_rank = rank(f, span);
  std::vector<std::size_t> complement;
  for (std::size_t k = 0; k < perp.cols(); ++k) {
    Matrix trial = hstack(span, select_columns(perp, {k}));
    const std::size_t r = rank(f, trial);
    if (r > span_rank) {
      span = std::move(trial);
      span_rank = r;
      complement.push_back(k);
    }
  }
  const Matrix residual = select_columns(perp, complement);
  if (residual.cols() < 2) throw PreconditionError("residual space too small for an isotropic direction");

  Rng rng(seed);
  for (int t = 0; t < retries; ++t) {
    const Vector u = random_combination(f, rng, residual);
    const Vector v = random_combination(f, rng, residual);
    const Scalar quu = bilinear(f, u, u);
    const Scalar quv = bilinear(f, u, v);
    const Scalar qvv = bilinear(f, v, v);
    Vector dir;
    if (qvv == 0) {
      dir = v;
    } else {
      const auto root = f.sqrt(f.sub(f.mul(quv, quv), f.mul(quu, qvv)));
      if (!root) continue;
      const Scalar tval = f.mul(f.sub(*root, quv), f.inv(qvv));
      dir = u;
      for (std::size_t i = 0; i < dir.size(); ++i) dir[i] = f.add(dir[i], f.mul(tval, v[i]));
    }
    if (is_zero(dir)) continue;
    if (finish_perturbation(f, w, dir)) return w;
  }
  throw SearchExhausted("no isotropic direction outside the isotropic span found in " + std::to_string(retries) +
                        " draws");
}

}  // namespace frames
