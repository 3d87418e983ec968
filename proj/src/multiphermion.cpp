#include "phermion/multiphermion.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <bit>
#include <cmath>
#include <utility>

namespace phermion {

namespace {

constexpr int kMaxSites = 12;

SparseComplex sparse_id(Index n) {
  SparseComplex m(n, n);
  m.setIdentity();
  return m;
}

SparseComplex sparse_diag(const Eigen::VectorXd& d) {
  SparseComplex m(d.size(), d.size());
  m.reserve(Eigen::VectorXi::Constant(static_cast<int>(d.size()), 1));
  for (Index k = 0; k < d.size(); ++k) m.insert(k, k) = d(k);
  m.makeCompressed();
  return m;
}

SparseComplex sparse_kron(const SparseComplex& a, const SparseComplex& b) {
  SparseComplex out(a.rows() * b.rows(), a.cols() * b.cols());
  out = Eigen::kroneckerProduct(a, b);
  return out;
}

SparseComplex comm(const SparseComplex& a, const SparseComplex& b) {
  return SparseComplex(a * b - b * a);
}

SparseComplex anti(const SparseComplex& a, const SparseComplex& b) {
  return SparseComplex(a * b + b * a);
}

RelationResidual sparse_check(std::string name, double residual, double tol,
                              double scale) {
  return check_value(std::move(name), residual, tol, std::max(1.0, scale));
}

Complex i_power(int k) {
  constexpr Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[((k % 4) + 4) % 4];
}

void require_site(const MultiPhermionSystem& sys, int site, const char* what) {
  if (site < 1 || site > sys.ell) {
    throw RangeError(std::string(what) + " site index " + std::to_string(site) +
                     " outside 1.." + std::to_string(sys.ell));
  }
}

void require_pair(const MultiPhermionSystem& sys, int i, int j) {
  require_site(sys, i, "pair");
  require_site(sys, j, "pair");
  if (i >= j) {
    throw RangeError("pair operators need site indices i < j, got (" +
                     std::to_string(i) + ", " + std::to_string(j) + ")");
  }
}

}  // namespace

SparseComplex MultiPhermionSystem::eta() const { return sparse_diag(eta_diagonal); }

MetricOperator MultiPhermionSystem::metric() const {
  return MetricOperator::diagonal(std::vector<double>(
      eta_diagonal.data(), eta_diagonal.data() + eta_diagonal.size()));
}

const SparseComplex& MultiPhermionSystem::annihilator(int site) const {
  require_site(*this, site, "annihilator");
  return site_annihilators[static_cast<std::size_t>(site - 1)];
}

const SparseComplex& MultiPhermionSystem::creator(int site) const {
  require_site(*this, site, "creator");
  return site_creators[static_cast<std::size_t>(site - 1)];
}

MultiPhermionSystem build_multi(int ell) {
  if (ell < 2 || ell > kMaxSites) {
    throw ConfigError("site count must lie in 2.." + std::to_string(kMaxSites) +
                      ", got " + std::to_string(ell));
  }
  MultiPhermionSystem sys;
  sys.ell = ell;
  sys.dim = Index{1} << ell;

  // Two-level building blocks.
  SparseComplex annihilate(2, 2), sigma3(2, 2);
  annihilate.insert(0, 1) = Complex(0, 1);  // i alpha
  sigma3.insert(0, 0) = 1.0;
  sigma3.insert(1, 1) = -1.0;
  annihilate.makeCompressed();
  sigma3.makeCompressed();
  const SparseComplex id2 = sparse_id(2);

  for (int site = 1; site <= ell; ++site) {
    SparseComplex op = sparse_id(1);
    for (int s = 1; s <= ell; ++s) {
      const SparseComplex& factor =
          s < site ? sigma3 : (s == site ? annihilate : id2);
      op = sparse_kron(op, factor);
    }
    sys.site_annihilators.push_back(std::move(op));
  }

  sys.eta_diagonal.resize(sys.dim);
  for (Index x = 0; x < sys.dim; ++x) {
    sys.eta_diagonal(x) =
        std::popcount(static_cast<unsigned long long>(x)) % 2 == 0 ? 1.0 : -1.0;
  }
  const SparseComplex eta = sys.eta();

  for (const SparseComplex& a : sys.site_annihilators) {
    sys.site_creators.emplace_back(eta * SparseComplex(a.adjoint()) * eta);
  }

  sys.total_number = SparseComplex(sys.dim, sys.dim);
  for (int site = 0; site < ell; ++site) {
    sys.total_number = SparseComplex(
        sys.total_number -
        sys.site_creators[static_cast<std::size_t>(site)] *
            sys.site_annihilators[static_cast<std::size_t>(site)]);
  }
  return sys;
}

OccupationState occupation_state(const MultiPhermionSystem& sys,
                                 const std::vector<int>& nu) {
  if (static_cast<int>(nu.size()) != sys.ell) {
    throw ConfigError("occupation list must have one entry per site");
  }
  for (int v : nu) {
    if (v != 0 && v != 1) throw ConfigError("occupations must be 0 or 1");
  }
  OccupationState state;
  state.occupation = nu;
  ComplexVector v = ComplexVector::Zero(sys.dim);
  v(0) = 1.0;  // vacuum: simultaneous kernel of every annihilator
  for (int site = sys.ell; site >= 1; --site) {
    if (nu[static_cast<std::size_t>(site - 1)] == 1) {
      v = sys.creator(site) * v;
    }
  }
  state.vector = std::move(v);
  const Eigen::VectorXd& signs = sys.eta_diagonal;
  Complex norm = 0.0;
  for (Index x = 0; x < sys.dim; ++x) {
    norm += std::conj(state.vector(x)) * signs(x) * state.vector(x);
  }
  state.eta_norm = norm.real();
  return state;
}

std::vector<OccupationState> occupation_basis(const MultiPhermionSystem& sys) {
  std::vector<OccupationState> basis;
  basis.reserve(static_cast<std::size_t>(sys.dim));
  for (Index x = 0; x < sys.dim; ++x) {
    std::vector<int> nu(static_cast<std::size_t>(sys.ell));
    for (int site = 1; site <= sys.ell; ++site) {
      nu[static_cast<std::size_t>(site - 1)] =
          static_cast<int>((x >> (sys.ell - site)) & 1);
    }
    basis.push_back(occupation_state(sys, nu));
  }
  return basis;
}

PhysicalSubspace physical_subspace(const MultiPhermionSystem& sys) {
  PhysicalSubspace phys;
  const Index phys_dim = sys.dim / 2;
  phys.basis.resize(sys.dim, phys_dim);
  phys.basis.reserve(Eigen::VectorXi::Constant(static_cast<int>(phys_dim), 1));
  phys.projector.resize(sys.dim, sys.dim);
  phys.projector.reserve(Eigen::VectorXi::Constant(static_cast<int>(sys.dim), 1));
  Index col = 0;
  for (Index x = 0; x < sys.dim; ++x) {
    const int total = std::popcount(static_cast<unsigned long long>(x));
    if (total % 2 != 0) continue;
    std::vector<int> nu(static_cast<std::size_t>(sys.ell));
    for (int site = 1; site <= sys.ell; ++site) {
      nu[static_cast<std::size_t>(site - 1)] =
          static_cast<int>((x >> (sys.ell - site)) & 1);
    }
    phys.basis.insert(x, col) = i_power(total);
    phys.projector.insert(x, x) = 1.0;
    phys.occupations.push_back(std::move(nu));
    ++col;
  }
  phys.basis.makeCompressed();
  phys.projector.makeCompressed();
  return phys;
}

Index physical_dimension(int ell) {
  if (ell < 1) throw ConfigError("site count must be at least 1");
  return Index{1} << (ell - 1);
}

SparseComplex pair_annihilator(const MultiPhermionSystem& sys, int i, int j) {
  require_pair(sys, i, j);
  return SparseComplex(sys.annihilator(i) * sys.annihilator(j));
}

SparseComplex pair_creator(const MultiPhermionSystem& sys, int i, int j) {
  require_pair(sys, i, j);
  return SparseComplex(sys.creator(j) * sys.creator(i));
}

SparseComplex shift(const MultiPhermionSystem& sys, int i, int j) {
  require_site(sys, i, "shift");
  require_site(sys, j, "shift");
  return SparseComplex(sys.creator(i) * sys.annihilator(j));
}

const SparseComplex& PhysicalOperators::annihilator(int i, int j) const {
  for (std::size_t k = 0; k < pair_index.size(); ++k) {
    if (pair_index[k] == std::pair<int, int>(i, j)) return annihilators[k];
  }
  throw RangeError("no pair operator (" + std::to_string(i) + ", " +
                   std::to_string(j) + ")");
}

const SparseComplex& PhysicalOperators::creator(int i, int j) const {
  for (std::size_t k = 0; k < pair_index.size(); ++k) {
    if (pair_index[k] == std::pair<int, int>(i, j)) return creators[k];
  }
  throw RangeError("no pair operator (" + std::to_string(i) + ", " +
                   std::to_string(j) + ")");
}

const SparseComplex& PhysicalOperators::shift(int i, int j) const {
  const int ell = static_cast<int>(
      std::round(std::sqrt(static_cast<double>(shifts.size()))));
  if (i < 1 || i > ell || j < 1 || j > ell) {
    throw RangeError("no shift operator (" + std::to_string(i) + ", " +
                     std::to_string(j) + ")");
  }
  return shifts[static_cast<std::size_t>((i - 1) * ell + (j - 1))];
}

PhysicalOperators physical_ops(const MultiPhermionSystem& sys) {
  PhysicalOperators ops;
  for (int i = 1; i <= sys.ell; ++i) {
    for (int j = i + 1; j <= sys.ell; ++j) {
      ops.pair_index.emplace_back(i, j);
      ops.annihilators.push_back(pair_annihilator(sys, i, j));
      ops.creators.push_back(pair_creator(sys, i, j));
    }
  }
  for (int i = 1; i <= sys.ell; ++i) {
    for (int j = 1; j <= sys.ell; ++j) {
      ops.shifts.push_back(shift(sys, i, j));
    }
  }
  return ops;
}

std::vector<RelationResidual> verify_multi_relations(
    const MultiPhermionSystem& sys, double tol) {
  std::vector<RelationResidual> out;
  const SparseComplex eta = sys.eta();
  const SparseComplex id = sparse_id(sys.dim);

  double r_anti = 0.0, r_mixed = 0.0, s_site = 1.0;
  for (int i = 1; i <= sys.ell; ++i) {
    const SparseComplex& ai = sys.annihilator(i);
    s_site = std::max(s_site, ai.norm() * ai.norm());
    for (int j = i; j <= sys.ell; ++j) {
      r_anti = std::max(r_anti, anti(ai, sys.annihilator(j)).norm());
    }
    for (int j = 1; j <= sys.ell; ++j) {
      SparseComplex lhs = anti(ai, sys.creator(j));
      if (i == j) lhs = SparseComplex(lhs + id);
      r_mixed = std::max(r_mixed, lhs.norm());
    }
  }
  out.push_back(
      sparse_check("{alpha_i, alpha_j} == 0 (all sites)", r_anti, tol, s_site));
  out.push_back(sparse_check("{alpha_i, alpha_j#} == -delta_ij (all sites)",
                             r_mixed, tol, s_site));

  // The pseudo-adjoint of a site annihilator must coincide with the direct
  // string construction carrying i alpha^dag at the site.
  SparseComplex create2(2, 2), sigma3(2, 2);
  create2.insert(1, 0) = Complex(0, 1);  // i alpha^dag
  sigma3.insert(0, 0) = 1.0;
  sigma3.insert(1, 1) = -1.0;
  const SparseComplex id2 = sparse_id(2);
  double r_string = 0.0;
  for (int site = 1; site <= sys.ell; ++site) {
    SparseComplex direct = sparse_id(1);
    for (int s = 1; s <= sys.ell; ++s) {
      direct = sparse_kron(direct, s < site ? sigma3
                                            : (s == site ? create2 : id2));
    }
    r_string =
        std::max(r_string, SparseComplex(sys.creator(site) - direct).norm());
  }
  out.push_back(sparse_check(
      "alpha_i# == sigma3 string (x) (i alpha^dag) (x) 1 (all sites)", r_string,
      tol, std::sqrt(s_site)));

  const SparseComplex n_sharp(eta * SparseComplex(sys.total_number.adjoint()) *
                              eta);
  out.push_back(sparse_check("N# == N",
                             SparseComplex(n_sharp - sys.total_number).norm(),
                             tol, sys.total_number.norm()));
  double r_num = 0.0;
  for (int i = 1; i <= sys.ell; ++i) {
    r_num = std::max(r_num, SparseComplex(comm(sys.annihilator(i),
                                               sys.total_number) -
                                          sys.annihilator(i))
                                .norm());
  }
  out.push_back(sparse_check("[alpha_i, N] == alpha_i (all sites)", r_num, tol,
                             std::sqrt(s_site) * sys.total_number.norm()));

  const std::vector<OccupationState> basis = occupation_basis(sys);
  double r_count = 0.0, r_sign = 0.0;
  std::vector<Eigen::Triplet<Complex>> triplets;
  Eigen::VectorXd expected_diag(sys.dim);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const OccupationState& mu = basis[b];
    int total = 0;
    for (int v : mu.occupation) total += v;
    r_count = std::max(
        r_count, (sys.total_number * mu.vector -
                  static_cast<double>(total) * mu.vector)
                     .norm());
    r_sign = std::max(r_sign,
                      std::abs(mu.eta_norm - (total % 2 == 0 ? 1.0 : -1.0)));
    expected_diag(static_cast<Index>(b)) = total % 2 == 0 ? 1.0 : -1.0;
    for (Index x = 0; x < sys.dim; ++x) {
      if (mu.vector(x) != Complex(0, 0)) {
        triplets.emplace_back(static_cast<int>(x), static_cast<int>(b),
                              mu.vector(x));
      }
    }
  }
  SparseComplex states(sys.dim, sys.dim);
  states.setFromTriplets(triplets.begin(), triplets.end());
  const SparseComplex gram(SparseComplex(states.adjoint()) * eta * states);
  out.push_back(sparse_check("N |nu> == (sum nu) |nu> (all occupations)",
                             r_count, tol, sys.total_number.norm()));
  out.push_back(sparse_check("eta-norm of |nu> == (-1)^(sum nu)", r_sign, tol,
                             1.0));
  out.push_back(sparse_check(
      "<<mu|nu>> == (-1)^(sum nu) delta(mu, nu)",
      SparseComplex(gram - sparse_diag(expected_diag)).norm(), tol, 1.0));
  return out;
}

SparseComplex pair_commutator_closed_form(const MultiPhermionSystem& sys,
                                          int i, int j, int k, int l) {
  require_pair(sys, i, j);
  require_pair(sys, k, l);
  auto d = [](int a, int b) { return a == b ? 1.0 : 0.0; };
  SparseComplex out(sys.dim, sys.dim);
  const double id_coeff = d(i, k) * d(j, l) - d(i, l) * d(j, k);
  if (id_coeff != 0.0) {
    out = SparseComplex(id_coeff * sparse_id(sys.dim));
  }
  if (d(j, l) != 0.0) out = SparseComplex(out + shift(sys, k, i));
  if (d(j, k) != 0.0) out = SparseComplex(out - shift(sys, l, i));
  if (d(i, l) != 0.0) out = SparseComplex(out - shift(sys, k, j));
  if (d(i, k) != 0.0) out = SparseComplex(out + shift(sys, l, j));
  return out;
}

PhysCommutatorReport verify_phys_commutators(const MultiPhermionSystem& sys,
                                             double tol) {
  PhysCommutatorReport report;
  const PhysicalOperators ops = physical_ops(sys);
  const SparseComplex eta = sys.eta();
  const ComplexVector vacuum = [&] {
    ComplexVector v = ComplexVector::Zero(sys.dim);
    v(0) = 1.0;
    return v;
  }();

  auto d = [](int a, int b) { return a == b ? 1.0 : 0.0; };
  double r_closed = 0.0, s_closed = 1.0;
  double r_ann = 0.0, r_cre = 0.0, s_pair = 1.0;
  for (std::size_t a = 0; a < ops.pair_index.size(); ++a) {
    const auto [i, j] = ops.pair_index[a];
    s_pair = std::max(s_pair, ops.annihilators[a].norm() *
                                  ops.annihilators[a].norm());
    for (std::size_t b = 0; b < ops.pair_index.size(); ++b) {
      const auto [k, l] = ops.pair_index[b];
      const SparseComplex brute = comm(ops.annihilators[a], ops.creators[b]);
      const SparseComplex closed =
          pair_commutator_closed_form(sys, i, j, k, l);
      PairCommutatorCheck check;
      check.i = i;
      check.j = j;
      check.k = k;
      check.l = l;
      check.identity_coeff = d(i, k) * d(j, l) - d(i, l) * d(j, k);
      check.beta_ki_coeff = d(j, l);
      check.beta_li_coeff = -d(j, k);
      check.beta_kj_coeff = -d(i, l);
      check.beta_lj_coeff = d(i, k);
      check.residual = SparseComplex(brute - closed).norm();
      const double scale =
          std::max(1.0, std::max(brute.norm(), closed.norm()));
      check.pass = check.residual <= tol * scale;
      s_closed = std::max(s_closed, scale);
      r_closed = std::max(r_closed, check.residual);
      report.tuples.push_back(check);

      r_ann = std::max(r_ann,
                       comm(ops.annihilators[a], ops.annihilators[b]).norm());
      r_cre = std::max(r_cre, comm(ops.creators[a], ops.creators[b]).norm());
    }
  }
  report.checks.push_back(sparse_check(
      "[alpha_ij, alpha+_kl] == (d_ik d_jl - d_il d_jk) 1 + d_jl b_ki - "
      "d_jk b_li - d_il b_kj + d_ik b_lj (full sweep)",
      r_closed, tol, s_closed));
  report.checks.push_back(sparse_check(
      "[alpha_ij, alpha_kl] == 0 (full sweep)", r_ann, tol, s_pair));
  report.checks.push_back(sparse_check(
      "[alpha+_ij, alpha+_kl] == 0 (full sweep)", r_cre, tol, s_pair));

  double r_beta = 0.0, s_beta = 1.0;
  for (int i = 1; i <= sys.ell; ++i) {
    for (int j = 1; j <= sys.ell; ++j) {
      const SparseComplex& b_ij = ops.shift(i, j);
      s_beta = std::max(s_beta, b_ij.norm() * b_ij.norm());
      for (int k = 1; k <= sys.ell; ++k) {
        for (int l = 1; l <= sys.ell; ++l) {
          SparseComplex expected(sys.dim, sys.dim);
          if (l == i) expected = SparseComplex(expected + ops.shift(k, j));
          if (j == k) expected = SparseComplex(expected - ops.shift(i, l));
          r_beta = std::max(
              r_beta,
              SparseComplex(comm(b_ij, ops.shift(k, l)) - expected).norm());
        }
      }
    }
  }
  report.checks.push_back(sparse_check(
      "[beta_ij, beta_kl] == d_li beta_kj - d_jk beta_il (full sweep)", r_beta,
      tol, s_beta));

  double r_beta_n = 0.0;
  for (int i = 1; i <= sys.ell; ++i) {
    for (int j = 1; j <= sys.ell; ++j) {
      r_beta_n = std::max(r_beta_n,
                          comm(ops.shift(i, j), sys.total_number).norm());
    }
  }
  report.checks.push_back(sparse_check("[beta_ij, N] == 0 (all shifts)",
                                       r_beta_n, tol,
                                       s_beta));

  double r_sharp = 0.0, r_parity = 0.0, r_vacuum = 0.0;
  for (std::size_t a = 0; a < ops.pair_index.size(); ++a) {
    const SparseComplex sharp(eta *
                              SparseComplex(ops.annihilators[a].adjoint()) *
                              eta);
    r_sharp = std::max(r_sharp,
                       SparseComplex(ops.creators[a] - sharp).norm());
    r_parity = std::max(r_parity, comm(ops.annihilators[a], eta).norm());
    r_parity = std::max(r_parity, comm(ops.creators[a], eta).norm());
    r_vacuum = std::max(r_vacuum, (ops.annihilators[a] * vacuum).norm());
  }
  for (const SparseComplex& b : ops.shifts) {
    r_parity = std::max(r_parity, comm(b, eta).norm());
  }
  report.checks.push_back(sparse_check("alpha+_ij == (alpha_ij)# (all pairs)",
                                       r_sharp, tol, std::sqrt(s_pair)));
  report.checks.push_back(sparse_check(
      "[physical op, sigma3^(x)ell] == 0 (parity preserved)", r_parity, tol,
      std::sqrt(s_pair)));
  report.checks.push_back(sparse_check(
      "alpha_ij |vacuum> == 0 (all pairs)", r_vacuum, tol, std::sqrt(s_pair)));
  return report;
}

}  // namespace phermion
