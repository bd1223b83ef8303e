// Copyright 2026 The invenc developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "invenc/twirl.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace invenc {

namespace {

constexpr double kPi = std::numbers::pi;

/// Pairwise (tree) summation: the result is independent of any partition of
/// the inputs across threads.
Matrix pairwise_sum(std::vector<Matrix> terms) {
  if (terms.empty()) {
    throw std::invalid_argument("pairwise_sum: no terms");
  }
  while (terms.size() > 1) {
    std::vector<Matrix> next;
    next.reserve((terms.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < terms.size(); i += 2) {
      next.push_back(terms[i] + terms[i + 1]);
    }
    if (terms.size() % 2 == 1) next.push_back(terms.back());
    terms = std::move(next);
  }
  return terms.front();
}

int thread_cap() {
  if (const char* env = std::getenv("INVENC_MAX_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

/// Evaluates fn(i) for i in [0, n) into a vector, chunked across threads.
template <typename Fn>
auto parallel_map(int n, Fn&& fn) {
  using Result = decltype(fn(0));
  std::vector<Result> out(n);
  const int threads = std::min(thread_cap(), n);
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  std::atomic<int> cursor{0};
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = cursor.fetch_add(1); i < n; i = cursor.fetch_add(1)) {
        out[i] = fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

Eigen::Vector3d sample_unit_axis(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Vector3d v;
  do {
    v << gauss(rng), gauss(rng), gauss(rng);
  } while (v.norm() < 1e-6);
  return v.normalized();
}

}  // namespace

GroupMeasure GroupMeasure::delta(const LorentzTransform& g) {
  GroupMeasure m;
  m.kind = Kind::Delta;
  m.elements = {g};
  m.weights = {1.0};
  return m;
}

GroupMeasure GroupMeasure::discrete(std::vector<LorentzTransform> elements,
                                    std::vector<double> weights) {
  GroupMeasure m;
  m.kind = Kind::Discrete;
  m.elements = std::move(elements);
  m.weights = std::move(weights);
  return m;
}

std::vector<std::pair<LorentzTransform, double>> GroupMeasure::realize()
    const {
  std::vector<std::pair<LorentzTransform, double>> out;
  if (kind == Kind::Delta || kind == Kind::Discrete) {
    if (elements.size() != weights.size() || elements.empty()) {
      throw std::invalid_argument("GroupMeasure: elements/weights mismatch");
    }
    double total = 0.0;
    for (double w : weights) {
      if (w < 0.0) {
        throw std::invalid_argument("GroupMeasure: negative weight");
      }
      total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) {
      throw std::invalid_argument("GroupMeasure: weights must sum to 1");
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
      out.emplace_back(elements[i], weights[i]);
    }
    return out;
  }

  if (samples < 1) {
    throw std::invalid_argument("GroupMeasure: sample count must be >= 1");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double w = 1.0 / samples;
  for (int k = 0; k < samples; ++k) {
    LorentzTransform g = LorentzTransform::identity();
    if (include_rotations) {
      const Eigen::Vector3d axis =
          rotation_axis ? *rotation_axis : sample_unit_axis(rng);
      g = LorentzTransform::rotation(2.0 * kPi * uniform(rng), axis) * g;
    }
    if (rapidity_dist != RapidityDist::None) {
      double chi = 0.0;
      if (rapidity_dist == RapidityDist::HalfGaussian) {
        chi = std::abs(rapidity_scale * gauss(rng));
      } else {
        chi = std::abs(rapidity_scale * std::tan(kPi * (uniform(rng) - 0.5)));
      }
      chi = std::min(chi, rapidity_cap);
      const Eigen::Vector3d axis =
          boost_axis ? *boost_axis : sample_unit_axis(rng);
      g = LorentzTransform::boost(chi, axis) * g;
    }
    out.emplace_back(std::move(g), w);
  }
  return out;
}

std::string GroupMeasure::describe() const {
  std::ostringstream s;
  switch (kind) {
    case Kind::Delta:
      s << "delta(" << elements.front().built_from << ")";
      return s.str();
    case Kind::Discrete:
      s << "discrete(" << elements.size() << " elements)";
      return s.str();
    case Kind::Sampler:
      break;
  }
  s << "sampler(";
  if (include_rotations) {
    s << "rotations=" << (rotation_axis ? "fixed-axis" : "uniform") << ", ";
  }
  switch (rapidity_dist) {
    case RapidityDist::None: s << "boosts=none"; break;
    case RapidityDist::HalfGaussian:
      s << "boosts=half-gaussian(sigma=" << rapidity_scale << ")";
      break;
    case RapidityDist::HalfCauchy:
      s << "boosts=half-cauchy(scale=" << rapidity_scale
        << ", cap=" << rapidity_cap << ")";
      break;
  }
  if (boost_axis) s << ", boost-axis=fixed";
  s << ", samples=" << samples << ", seed=" << seed << ")";
  return s.str();
}

Matrix twirl(const Matrix& rho, const GroupAction& rep,
             const GroupMeasure& measure) {
  const auto realized = measure.realize();
  auto terms = parallel_map(
      static_cast<int>(realized.size()), [&](int k) -> Matrix {
        const auto& [g, w] = realized[k];
        const Matrix u = rep(g);
        if ((u * u.adjoint() - Matrix::Identity(u.rows(), u.cols()))
                .cwiseAbs()
                .maxCoeff() > 1e-10) {
          throw std::invalid_argument(
              "twirl: representation image is not unitary");
        }
        return w * (u * rho * u.adjoint());
      });
  return pairwise_sum(std::move(terms));
}

GroupAction lorentz_rep_massive(int n_particles, double s,
                                const FourMomentum& p) {
  if (p.is_massless()) {
    throw std::invalid_argument("lorentz_rep_massive: massless momentum");
  }
  if (n_particles < 1) {
    throw std::invalid_argument("lorentz_rep_massive: need N >= 1");
  }
  return [n_particles, s, p](const LorentzTransform& g) {
    const WignerElement w = wigner_rotation_massive(g, p);
    const Matrix d = spin_rep_matrix(s, w);
    Matrix u = Matrix::Identity(1, 1);
    for (int k = 0; k < n_particles; ++k) u = kron(u, d);
    return u;
  };
}

GroupAction lorentz_rep_massless(int n_particles, const FourMomentum& p) {
  if (!p.is_massless()) {
    throw std::invalid_argument("lorentz_rep_massless: massive momentum");
  }
  if (n_particles < 1) {
    throw std::invalid_argument("lorentz_rep_massless: need N >= 1");
  }
  return [n_particles, p](const LorentzTransform& g) {
    const double omega = wigner_phase_massless(g, p).angle;
    const Eigen::Index dim = Eigen::Index{1} << n_particles;
    CVector diag(dim);
    for (Eigen::Index b = 0; b < dim; ++b) {
      const int h = n_particles - 2 * __builtin_popcountll(b);
      diag(b) = std::exp(Complex(0.0, h * omega));
    }
    return Matrix(diag.asDiagonal());
  };
}

GroupAction lorentz_rep_dyon_branches(const DyonEncoding& encoding) {
  if (encoding.branches.empty()) {
    throw std::invalid_argument("lorentz_rep_dyon_branches: no branches");
  }
  // All non-zero pairwise helicities involve one particle per species, and
  // species momenta are equal, so a single phase serves every pair.
  const DyonConfiguration& ref = encoding.branches.front();
  int a_electric = -1, a_magnetic = -1;
  for (int i = 0; i < ref.n_particles(); ++i) {
    if (ref.electric[i] != 0 && a_electric < 0) a_electric = i;
    if (ref.magnetic[i] != 0 && a_magnetic < 0) a_magnetic = i;
  }
  if (a_electric < 0 || a_magnetic < 0) {
    throw std::invalid_argument(
        "lorentz_rep_dyon_branches: need both charge species");
  }
  const FourMomentum pe = ref.momenta[a_electric];
  const FourMomentum pg = ref.momenta[a_magnetic];
  std::vector<int> q_sums;
  for (const auto& branch : encoding.branches) {
    q_sums.push_back(branch.total_pairwise_helicity());
  }
  return [pe, pg, q_sums](const LorentzTransform& g) {
    const double phi = pairwise_phase(g, pe, pg).angle;
    CVector diag(static_cast<Eigen::Index>(q_sums.size()));
    for (std::size_t k = 0; k < q_sums.size(); ++k) {
      diag(static_cast<Eigen::Index>(k)) = std::exp(Complex(0.0, q_sums[k] * phi));
    }
    return Matrix(diag.asDiagonal());
  };
}

GroupAction lorentz_rep_total_momentum(const TotalMomentumLabel& label) {
  const int full_dim = static_cast<int>(std::round(2.0 * label.total_spin)) + 1;
  if (label.dim_irrep_restriction > 0 &&
      label.dim_irrep_restriction != full_dim) {
    throw std::invalid_argument(
        "lorentz_rep_total_momentum: restricted irrep dimensions are "
        "bookkeeping only; the group action needs the full 2J+1 block");
  }
  const int d_mult = static_cast<int>(label.multiplicity_labels.size());
  const double j = label.total_spin;
  const FourMomentum p_total = label.total_momentum;
  return [j, d_mult, p_total](const LorentzTransform& g) {
    const WignerElement w = wigner_rotation_massive(g, p_total);
    return kron(spin_rep_matrix(j, w), Matrix::Identity(d_mult, d_mult));
  };
}

GroupAction lorentz_rep_for(const InvariantState& state) {
  switch (state.scheme) {
    case Scheme::Massive:
      return lorentz_rep_massive(state.basis->n_sites, 0.5,
                                 state.momenta.front());
    case Scheme::Massless:
      return lorentz_rep_massless(state.basis->n_sites, state.momenta.front());
    case Scheme::TotalMomentum: {
      TotalMomentumLabel label;
      label.mandelstam = state.mandelstam;
      label.total_spin = state.total_spin;
      label.total_momentum = state.momenta.front();
      label.multiplicity_labels.resize(state.basis->dim_mult.front());
      return lorentz_rep_total_momentum(label);
    }
    case Scheme::Dyon:
      throw std::invalid_argument(
          "lorentz_rep_for: dyon encodings use lorentz_rep_dyon_branches");
  }
  throw std::logic_error("lorentz_rep_for: unknown scheme");
}

TwirlReport invariance_report_generic(const Matrix& rho_product,
                                      const SchurBasis& basis,
                                      const GroupAction& rep,
                                      const GroupMeasure& measure,
                                      const std::string& scheme) {
  const auto realized = measure.realize();
  const Matrix rho_schur = basis.to_schur(rho_product);
  const int n_blocks = static_cast<int>(basis.irrep_labels.size());

  std::vector<Matrix> ref_coeffs;
  for (int i = 0; i < n_blocks; ++i) {
    ref_coeffs.push_back(decode_multiplicity(rho_schur, basis, i));
  }

  struct SampleResult {
    Matrix weighted_term;
    std::vector<double> block_dev;
    std::vector<double> coeff_dev;
    double full_dev;
  };
  auto results = parallel_map(
      static_cast<int>(realized.size()), [&](int k) -> SampleResult {
        const auto& [g, w] = realized[k];
        const Matrix u = rep(g);
        if ((u * u.adjoint() - Matrix::Identity(u.rows(), u.cols()))
                .cwiseAbs()
                .maxCoeff() > 1e-10) {
          throw std::invalid_argument(
              "invariance_report: representation image is not unitary");
        }
        const Matrix conj = u * rho_product * u.adjoint();
        const Matrix conj_schur = basis.to_schur(conj);
        SampleResult r;
        r.weighted_term = w * conj;
        r.full_dev = (conj_schur - rho_schur).cwiseAbs().maxCoeff();
        for (int i = 0; i < n_blocks; ++i) {
          const Eigen::Index off = basis.block_offset(i);
          const Eigen::Index sz =
              static_cast<Eigen::Index>(basis.dim_irrep[i]) * basis.dim_mult[i];
          r.block_dev.push_back((conj_schur.block(off, off, sz, sz) -
                                 rho_schur.block(off, off, sz, sz))
                                    .cwiseAbs()
                                    .maxCoeff());
          r.coeff_dev.push_back(
              (decode_multiplicity(conj_schur, basis, i) - ref_coeffs[i])
                  .cwiseAbs()
                  .maxCoeff());
        }
        return r;
      });

  TwirlReport report;
  report.scheme = scheme;
  report.measure = measure.describe();
  report.samples = static_cast<int>(realized.size());
  report.seed = measure.seed;
  std::vector<Matrix> terms;
  terms.reserve(results.size());
  for (auto& r : results) terms.push_back(std::move(r.weighted_term));
  report.global_trace_distance =
      trace_distance(pairwise_sum(std::move(terms)), rho_product);

  for (int i = 0; i < n_blocks; ++i) {
    BlockDeviation d;
    d.irrep_label = basis.irrep_labels[i];
    d.dim_irrep = basis.dim_irrep[i];
    d.dim_mult = basis.dim_mult[i];
    d.avg_deviation = 0.0;
    d.worst_deviation = 0.0;
    d.coeff_deviation = 0.0;
    for (const auto& r : results) {
      d.avg_deviation += r.block_dev[i] / results.size();
      d.worst_deviation = std::max(d.worst_deviation, r.block_dev[i]);
      d.coeff_deviation = std::max(d.coeff_deviation, r.coeff_dev[i]);
    }
    report.per_block.push_back(d);
  }
  for (const auto& r : results) {
    report.avg_case += r.full_dev / results.size();
    report.worst_case = std::max(report.worst_case, r.full_dev);
  }
  return report;
}

TwirlReport invariance_report(const InvariantState& state,
                              const GroupMeasure& measure) {
  return invariance_report_generic(state.density_product(), *state.basis,
                                   lorentz_rep_for(state), measure,
                                   scheme_name(state.scheme));
}

TwirlReport dyon_invariance_report(const DyonEncoding& encoding,
                                   const GroupMeasure& measure) {
  const auto realized = measure.realize();
  const DyonConfiguration& ref = encoding.branches.front();

  // Spin sector: one spin-1/2 pair per charge species, each prepared in the
  // collective singlet so the species-wise Wigner rotations act trivially.
  int n_electric = 0, n_magnetic = 0;
  FourMomentum pe = ref.momenta.front(), pg = ref.momenta.front();
  for (int i = 0; i < ref.n_particles(); ++i) {
    if (ref.electric[i] != 0) {
      ++n_electric;
      pe = ref.momenta[i];
    } else {
      ++n_magnetic;
      pg = ref.momenta[i];
    }
  }
  auto singlet_pair = []() {
    CVector v = CVector::Zero(4);
    v(1) = 1.0 / std::sqrt(2.0);
    v(2) = -1.0 / std::sqrt(2.0);
    return Matrix(v * v.adjoint());
  };
  Matrix rho_spin = Matrix::Identity(1, 1);
  for (int k = 0; k + 1 < n_electric; k += 2) rho_spin = kron(rho_spin, singlet_pair());
  if (n_electric % 2 == 1) rho_spin = kron(rho_spin, 0.5 * Matrix::Identity(2, 2));
  for (int k = 0; k + 1 < n_magnetic; k += 2) rho_spin = kron(rho_spin, singlet_pair());
  if (n_magnetic % 2 == 1) rho_spin = kron(rho_spin, 0.5 * Matrix::Identity(2, 2));

  const Matrix rho_branch =
      encoding.amplitudes.amps * encoding.amplitudes.amps.adjoint();
  const Matrix rho = kron(rho_spin, rho_branch);

  const GroupAction branch_rep = lorentz_rep_dyon_branches(encoding);
  const int n_pairs_e = n_electric / 2, n_pairs_g = n_magnetic / 2;
  const GroupAction full_rep = [&, pe, pg](const LorentzTransform& g) {
    const Matrix de = spin_rep_matrix(0.5, wigner_rotation_massive(g, pe));
    const Matrix dg = spin_rep_matrix(0.5, wigner_rotation_massive(g, pg));
    Matrix u = Matrix::Identity(1, 1);
    for (int k = 0; k < 2 * n_pairs_e + (n_electric % 2); ++k) u = kron(u, de);
    for (int k = 0; k < 2 * n_pairs_g + (n_magnetic % 2); ++k) u = kron(u, dg);
    return kron(u, branch_rep(g));
  };

  const Eigen::Index spin_dim = rho_spin.rows();
  const Eigen::Index branch_dim = rho_branch.rows();

  struct SampleResult {
    Matrix weighted_term;
    double branch_dev;
  };
  auto results = parallel_map(
      static_cast<int>(realized.size()), [&](int k) -> SampleResult {
        const auto& [g, w] = realized[k];
        const Matrix u = full_rep(g);
        const Matrix conj = u * rho * u.adjoint();
        SampleResult r;
        r.weighted_term = w * conj;
        const Matrix reduced = partial_trace(conj, {spin_dim, branch_dim}, {1});
        r.branch_dev = (reduced - rho_branch).cwiseAbs().maxCoeff();
        return r;
      });

  TwirlReport report;
  report.scheme = "dyon";
  report.measure = measure.describe();
  report.samples = static_cast<int>(realized.size());
  report.seed = measure.seed;
  std::vector<Matrix> terms;
  for (auto& r : results) terms.push_back(std::move(r.weighted_term));
  const Matrix averaged = pairwise_sum(std::move(terms));
  report.global_trace_distance = trace_distance(averaged, rho);
  for (const auto& r : results) {
    report.avg_case += r.branch_dev / results.size();
    report.worst_case = std::max(report.worst_case, r.branch_dev);
  }

  // One report row per pairwise-helicity sum present among the branches.
  std::vector<int> q_sums;
  for (const auto& b : encoding.branches) {
    q_sums.push_back(b.total_pairwise_helicity());
  }
  std::vector<int> distinct = q_sums;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const Matrix reduced_avg =
      partial_trace(averaged, {spin_dim, branch_dim}, {1});
  for (int q : distinct) {
    BlockDeviation d;
    d.irrep_label = q;
    d.dim_irrep = 1;
    d.dim_mult = static_cast<int>(std::count(q_sums.begin(), q_sums.end(), q));
    double dev = 0.0;
    for (std::size_t b1 = 0; b1 < q_sums.size(); ++b1) {
      for (std::size_t b2 = 0; b2 < q_sums.size(); ++b2) {
        if (q_sums[b1] == q && q_sums[b2] == q) {
          dev = std::max(dev, std::abs(reduced_avg(b1, b2) - rho_branch(b1, b2)));
        }
      }
    }
    d.avg_deviation = dev;
    d.worst_deviation = report.worst_case;
    d.coeff_deviation = dev;
    report.per_block.push_back(d);
  }
  return report;
}

SloccResult slocc_twirl(const Matrix& rho, int n_particles,
                        const SloccMeasure& measure) {
  if (n_particles < 1 || measure.samples < 1) {
    throw std::invalid_argument("slocc_twirl: bad N or sample count");
  }
  const Eigen::Index dim = Eigen::Index{1} << n_particles;
  if (rho.rows() != dim || rho.cols() != dim) {
    throw std::invalid_argument("slocc_twirl: state dimension mismatch");
  }

  std::mt19937_64 rng(measure.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto haar_su2 = [&]() {
    // Unit quaternion -> SU(2).
    Eigen::Vector4d q;
    do {
      q << gauss(rng), gauss(rng), gauss(rng), gauss(rng);
    } while (q.norm() < 1e-6);
    q.normalize();
    Matrix u(2, 2);
    u << Complex(q(0), q(1)), Complex(q(2), q(3)),
        Complex(-q(2), q(3)), Complex(q(0), -q(1));
    return u;
  };

  const SchurBasis basis = build_schur_basis_su2(n_particles);
  const int n_blocks = static_cast<int>(basis.irrep_labels.size());
  const Matrix in_schur = basis.to_schur(rho);

  std::vector<std::vector<Matrix>> per_sample_blocks(n_blocks);
  std::vector<Matrix> terms;
  for (int k = 0; k < measure.samples; ++k) {
    const double a = std::exp(measure.singular_scale * gauss(rng));
    if (a == 0.0 || 1.0 / a == 0.0) {
      throw std::invalid_argument("slocc_twirl: zero diagonal entry in A");
    }
    Matrix an = Matrix::Zero(2, 2);
    const double scale = std::max(a, 1.0 / a);
    an(0, 0) = a / scale;
    an(1, 1) = (1.0 / a) / scale;
    const Matrix m = haar_su2() * an * haar_su2();
    Matrix mn = Matrix::Identity(1, 1);
    for (int i = 0; i < n_particles; ++i) mn = kron(mn, m);
    const Matrix term_schur =
        (1.0 / measure.samples) * basis.to_schur(mn * rho * mn.adjoint());
    for (int b = 0; b < n_blocks; ++b) {
      const Eigen::Index off = basis.block_offset(b);
      const Eigen::Index sz =
          static_cast<Eigen::Index>(basis.dim_irrep[b]) * basis.dim_mult[b];
      per_sample_blocks[b].push_back(term_schur.block(off, off, sz, sz));
    }
    terms.push_back(term_schur);
  }

  SloccResult result;
  result.output = basis.to_product(pairwise_sum(std::move(terms)));

  auto fit = [](const Matrix& in, const Matrix& out) {
    const Complex denom = (in.adjoint() * in).trace();
    const Complex beta = std::abs(denom) > 1e-300
                             ? (in.adjoint() * out).trace() / denom
                             : Complex(0.0, 0.0);
    const double residual = (out - beta * in).cwiseAbs().maxCoeff();
    return std::make_pair(beta, residual);
  };

  const int n = measure.samples;
  for (int b = 0; b < n_blocks; ++b) {
    const Eigen::Index off = basis.block_offset(b);
    const Eigen::Index sz =
        static_cast<Eigen::Index>(basis.dim_irrep[b]) * basis.dim_mult[b];
    const Matrix in_block = in_schur.block(off, off, sz, sz);
    const Matrix total = pairwise_sum(per_sample_blocks[b]);
    auto [beta, residual] = fit(in_block, total);
    const Matrix delta = total - beta * in_block;

    // Elementwise jackknife: leave-one-out replicates of the residual
    // matrix, with the proportionality coefficient refit per replicate.
    std::vector<Matrix> loo(n);
    Matrix loo_mean = Matrix::Zero(sz, sz);
    for (int k = 0; k < n; ++k) {
      const Matrix replicate =
          (total - per_sample_blocks[b][k]) * (static_cast<double>(n) / (n - 1));
      loo[k] = replicate - fit(in_block, replicate).first * in_block;
      loo_mean += loo[k] / static_cast<double>(n);
    }
    Eigen::MatrixXd var = Eigen::MatrixXd::Zero(sz, sz);
    for (int k = 0; k < n; ++k) {
      var += (loo[k] - loo_mean).cwiseAbs2();
    }
    const Eigen::MatrixXd se = ((n - 1.0) / n * var).cwiseSqrt();

    SloccBlockFit f;
    f.irrep_label = basis.irrep_labels[b];
    f.beta = beta;
    f.residual = residual;
    f.residual_se = 0.0;
    f.max_sigma = 0.0;
    for (Eigen::Index i = 0; i < sz; ++i) {
      for (Eigen::Index j = 0; j < sz; ++j) {
        const double dev = std::abs(delta(i, j));
        if (dev >= f.residual - 1e-300) f.residual_se = se(i, j);
        if (dev < 1e-14 && se(i, j) < 1e-14) continue;
        f.max_sigma =
            std::max(f.max_sigma, dev / std::max(se(i, j), 1e-300));
      }
    }
    result.fits.push_back(f);
  }
  return result;
}

}  // namespace invenc
