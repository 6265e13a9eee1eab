#include "nilcortex/cortex.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "nilcortex/gd_family.hpp"
#include "nilcortex/sampling.hpp"

namespace nilcortex {

Covector image_point(const LieAlgebra& alg, std::span<const Rational> x, std::span<const Rational> ell) {
  return ad_star(alg, x, ell);
}

SparsePoly pullback_on_image(std::size_t d) {
  const SparsePoly q = cortex_poly(d);
  const GdLayout at{d};
  // target space: a_1..a_d at 0..d-1, z_1..z_d at d..2d-1
  const std::size_t m = 2 * d;
  auto a = [&](std::size_t j) { return SparsePoly::variable(m, j - 1); };
  auto z = [&](std::size_t i) { return SparsePoly::variable(m, d + i - 1); };

  std::vector<SparsePoly> subs(at.dim(), SparsePoly(m));
  for (std::size_t j = 1; j <= d; ++j) subs[at.y(2 * j - 1)] = -(a(j) * z(1));
  for (std::size_t j = 1; j < d; ++j) subs[at.y(2 * j)] = -(a(j) * z(j + 1));
  SparsePoly tail(m);
  for (std::size_t i = 2; i <= d; ++i) tail += z(i);
  subs[at.y(2 * d)] = -(a(d) * tail);
  return q.compose(subs);
}

bool cortex_membership_gd(std::size_t d, std::span<const Rational> ell) {
  const GdLayout at{d};
  if (d < 2) throw ArgumentError("g_d needs d >= 2");
  if (ell.size() != at.dim()) throw DimensionError("g_d covector must have length " + std::to_string(at.dim()));
  for (std::size_t i = 1; i <= d; ++i)
    if (sgn(ell[at.z(i)]) != 0) return false;
  return sgn(cortex_poly(d).eval(ell)) == 0;
}

namespace {

void require_on_variety(std::size_t d, std::span<const Rational> target) {
  if (!cortex_membership_gd(d, target))
    throw MembershipError("target is not on the cortex variety z = 0, Q_" + std::to_string(d) + " = 0");
}

WitnessStep witness_step(const GdDescriptor& gd, std::span<const Rational> target, const Rational& eps) {
  const std::size_t d = gd.d;
  const GdLayout at = gd.layout();
  WitnessStep step;
  step.epsilon = eps;
  step.start = Covector(at.dim());
  step.generator = RatVector(at.dim());

  Rational ratio_max = 1;
  step.start[at.z(1)] = eps;
  for (std::size_t j = 1; j < d; ++j) {
    const Rational ratio = target[at.y(2 * j)] / target[at.y(2 * j - 1)];
    step.start[at.z(j + 1)] = eps * ratio;
    ratio_max = std::max(ratio_max, Rational(abs(ratio)));
  }
  for (std::size_t j = 1; j <= d; ++j) step.generator[at.x(j)] = -target[at.y(2 * j - 1)] / eps;
  for (std::size_t k = 1; k <= d; ++k) step.generator[at.y(2 * k - 1)] = target[at.x(k)] / eps;

  step.image = coadjoint_exp(gd.algebra, step.generator, step.start);
  step.residual = sub(step.image, target);
  step.bound = eps * ratio_max;
  return step;
}

}  // namespace

WitnessSchedule witness_sequence(std::size_t d, std::span<const Rational> target,
                                 std::span<const Rational> epsilons) {
  const GdDescriptor gd = make_gd(d);
  require_on_variety(d, target);
  const GdLayout at = gd.layout();
  for (std::size_t j = 1; j < d; ++j)
    if (sgn(target[at.y(2 * j - 1)]) == 0)
      throw DegenerateStratumError("y" + std::to_string(2 * j - 1) +
                                   " = 0: target lies on the degenerate stratum; use the perturbed schedule");
  for (const auto& eps : epsilons)
    if (sgn(eps) <= 0) throw ArgumentError("epsilon must be positive, got " + to_string(eps));

  WitnessSchedule out{d, Covector(target.begin(), target.end()), {}};
  for (const auto& eps : epsilons) out.steps.push_back(witness_step(gd, target, eps));
  return out;
}

Covector perturb_to_generic_stratum(std::size_t d, std::span<const Rational> target, const Rational& eta_in) {
  require_on_variety(d, target);
  if (sgn(eta_in) <= 0) throw ArgumentError("eta must be positive, got " + to_string(eta_in));
  const GdLayout at{d};
  auto y = [&](std::size_t j) -> const Rational& { return target[at.y(j)]; };

  std::vector<std::size_t> free_zero;  // j < d with y_{2j-1} = y_{2j} = 0
  std::vector<std::size_t> blowup;     // j < d with y_{2j-1} = 0 != y_{2j}
  for (std::size_t j = 1; j < d; ++j) {
    if (sgn(y(2 * j - 1)) != 0) continue;
    (sgn(y(2 * j)) == 0 ? free_zero : blowup).push_back(j);
  }
  if (free_zero.empty() && blowup.empty()) return Covector(target.begin(), target.end());

  // The image of the exact schedule is parametrized by odd coordinates a_j
  // and ratios r_j: y_{2j-1} = a_j, y_{2j} = a_j r_j (j < d),
  // y_{2d-1} = a_d, y_{2d} = a_d sum_j r_j. Pick (a, r) so that every a_j
  // (j < d) is nonzero and the point tends to the target as eta -> 0.
  Rational eta = eta_in;
  while (true) {
    std::vector<Rational> a(d + 1), r(d + 1);
    Rational known = 0;
    for (std::size_t j = 1; j < d; ++j)
      if (sgn(y(2 * j - 1)) != 0) {
        a[j] = y(2 * j - 1);
        r[j] = y(2 * j) / a[j];
        known += r[j];
      }
    const bool last_odd_zero = sgn(y(2 * d - 1)) == 0;
    const bool last_even_zero = sgn(y(2 * d)) == 0;

    // blow-up ratios y_{2j} / eta; the last one may serve as the balancing term
    auto assign_blowups = [&](std::size_t count) {
      Rational sum = 0;
      for (std::size_t idx = 0; idx < count; ++idx) {
        const std::size_t j = blowup[idx];
        a[j] = eta;
        r[j] = y(2 * j) / eta;
        sum += r[j];
      }
      return sum;
    };

    bool ok = true;
    if (last_odd_zero && last_even_zero) {
      // y'_{2d} = a_d sum r with sum r = O(1/eta); a_d = eta^2 keeps it O(eta)
      assign_blowups(blowup.size());
      for (auto j : free_zero) {
        a[j] = eta;
        r[j] = 0;
      }
      a[d] = eta * eta;
    } else {
      a[d] = last_odd_zero ? eta : y(2 * d - 1);
      const Rational needed = y(2 * d) / a[d];  // required sum of ratios
      if (!free_zero.empty()) {
        const Rational blow = assign_blowups(blowup.size());
        for (std::size_t idx = 1; idx < free_zero.size(); ++idx) {
          a[free_zero[idx]] = eta;
          r[free_zero[idx]] = 0;
        }
        const std::size_t js = free_zero.front();
        a[js] = eta * eta;
        r[js] = needed - known - blow;
      } else {
        if (blowup.size() < 2 && !last_odd_zero)
          throw MembershipError("target is not on the cortex variety");
        const std::size_t k = blowup.back();
        Rational others = 0;
        for (std::size_t idx = 0; idx + 1 < blowup.size(); ++idx) others += y(2 * blowup[idx]);
        // avoid a cancelling leading term by weighting the first blow-up ratio
        Rational first_weight = 1;
        if (!last_odd_zero && blowup.size() >= 2 && sgn(others) == 0) first_weight = 2;
        if (last_odd_zero && y(2 * d) == others) a[d] = eta / 2;

        Rational sum = known;
        for (std::size_t idx = 0; idx + 1 < blowup.size(); ++idx) {
          const std::size_t j = blowup[idx];
          a[j] = idx == 0 ? eta * first_weight : eta;
          r[j] = y(2 * j) / a[j];
          sum += r[j];
        }
        r[k] = y(2 * d) / a[d] - sum;
        if (sgn(r[k]) == 0) {
          ok = false;
        } else {
          a[k] = y(2 * k) / r[k];
        }
      }
    }
    if (!ok) {
      eta /= 2;
      continue;
    }

    Covector out(target.begin(), target.end());
    Rational ratio_sum = 0;
    for (std::size_t j = 1; j < d; ++j) {
      out[at.y(2 * j - 1)] = a[j];
      out[at.y(2 * j)] = a[j] * r[j];
      ratio_sum += r[j];
    }
    out[at.y(2 * d - 1)] = a[d];
    out[at.y(2 * d)] = a[d] * ratio_sum;
    return out;
  }
}

PerturbedWitness perturbed_witness(std::size_t d, std::span<const Rational> target,
                                   std::span<const Rational> etas, std::span<const Rational> epsilons) {
  require_on_variety(d, target);
  PerturbedWitness out{d, Covector(target.begin(), target.end()), {}};
  for (const auto& eta : etas) {
    const Covector moved = perturb_to_generic_stratum(d, target, eta);
    const WitnessSchedule schedule = witness_sequence(d, moved, epsilons);
    for (const auto& step : schedule.steps) {
      PerturbedStep p;
      p.eta = eta;
      p.epsilon = step.epsilon;
      p.perturbed_target = moved;
      p.start = step.start;
      p.image = step.image;
      p.start_norm = max_abs(step.start);
      p.distance = max_abs(sub(step.image, target));
      out.steps.push_back(std::move(p));
    }
  }
  return out;
}

bool icor_membership(std::span<const SparsePoly> generators, std::span<const Rational> ell) {
  for (const auto& g : generators) {
    const RatVector origin(g.nvars());
    if (g.eval(ell) != g.eval(origin)) return false;
  }
  return true;
}

SparsePoly coadjoint_derivation(const LieAlgebra& alg, const SparsePoly& p, std::size_t b) {
  const std::size_t n = alg.dim();
  if (p.nvars() != n) throw DimensionError("polynomial is not over the dual coordinates of the algebra");
  if (b >= n) throw ArgumentError("basis index " + std::to_string(b + 1) + " out of range");

  SparsePoly out(n);
  for (std::size_t k = 0; k < n; ++k) {
    // (ad*_{U_b} l)_k = -l([U_b, U_k]) = -sum_m c_{bk}^m l_m
    const auto& s = alg.structure(b, k);
    if (s.empty()) continue;
    RatVector coeffs(n);
    for (const auto& [m, c] : s) coeffs[m] = -c;
    const SparsePoly dp = p.partial(k);
    if (dp.is_zero()) continue;
    out += dp * SparsePoly::linear(coeffs);
  }
  return out;
}

ClassifierReport codim_classifier(const LieAlgebra& alg, std::size_t trials, std::uint64_t seed) {
  if (!alg.is_two_step()) throw ClassError("codimension classifier needs a two-step nilpotent algebra");
  ClassifierReport rep;
  rep.dim = alg.dim();
  rep.center_dim = center(alg).dim();
  rep.z_perp_dim = rep.dim - rep.center_dim;
  rep.trials = std::max<std::size_t>(trials, 1);

  RationalSampler sampler(seed);
  rep.min_orbit_dim = rep.dim;
  for (std::size_t t = 0; t < rep.trials; ++t) {
    const std::size_t od = orbit_dimension(alg, sampler.vector(rep.dim));
    rep.generic_orbit_dim = std::max(rep.generic_orbit_dim, od);
    rep.min_orbit_dim = std::min(rep.min_orbit_dim, od);
  }
  rep.codim = rep.z_perp_dim - rep.generic_orbit_dim;
  rep.all_sampled_codim_le_1 = rep.z_perp_dim - rep.min_orbit_dim <= 1;
  rep.cor_equals_z_perp = rep.codim <= 1;
  if (rep.z_perp_dim == 0)
    rep.verdict = "Cor = z^perp = {0}";
  else if (rep.cor_equals_z_perp)
    rep.verdict = "Cor = z^perp (generic orbits have codimension " + std::to_string(rep.codim) +
                  " in z^perp; sampled generic layer)";
  else
    rep.verdict = "inconclusive: generic orbits have codimension " + std::to_string(rep.codim) +
                  " in z^perp; use membership/witness tools";
  return rep;
}

PointCloud approximate_cortex(const LieAlgebra& alg, const CloudOptions& options) {
  if (!alg.is_two_step()) throw ClassError("cortex sampling needs a two-step nilpotent algebra");
  if (options.scales.empty() && options.samples > 0) throw ArgumentError("scale schedule is empty");
  const std::size_t n = alg.dim();
  PointCloud cloud;
  cloud.dim = n;
  if (options.samples == 0 || options.window_lo > options.window_hi) return cloud;

  // coef[(i*n + k)] = list of (m, c_{ik}^m) in double precision
  std::vector<std::vector<std::pair<std::size_t, double>>> coef(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& [m, c] : alg.structure(i, k)) coef[i * n + k].emplace_back(m, c.get_d());

  std::vector<std::vector<double>> slots(options.samples);
  std::vector<char> kept(options.samples, 0);

  auto run = [&](std::size_t begin, std::size_t end) {
    std::vector<double> x(n), ell(n), img(n);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (std::size_t s = begin; s < end; ++s) {
      std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                        static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32)};
      std::mt19937_64 rng(seq);
      const double delta = options.scales[s % options.scales.size()];
      for (auto& v : ell) v = delta * unit(rng);
      for (auto& v : x) v = options.ball_radius / delta * unit(rng);

      double norm = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          if (x[i] == 0.0) continue;
          for (const auto& [m, c] : coef[i * n + k]) acc -= x[i] * c * ell[m];
        }
        img[k] = acc;
        norm = std::max(norm, std::abs(acc));
      }
      if (norm < options.window_lo || norm > options.window_hi || norm == 0.0) continue;
      for (auto& v : img) v /= norm;
      slots[s] = img;
      kept[s] = 1;
    }
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, options.samples));
  if (threads <= 1) {
    run(0, options.samples);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (options.samples + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t b = t * chunk;
      const std::size_t e = std::min(options.samples, b + chunk);
      if (b < e) pool.emplace_back(run, b, e);
    }
  }
  for (std::size_t s = 0; s < options.samples; ++s)
    if (kept[s]) cloud.points.push_back(std::move(slots[s]));
  return cloud;
}

}  // namespace nilcortex
