#include "sepcrit/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sepcrit {

namespace {

Verdict verdict_from_margin(double margin) {
  return margin > kMarginEps ? Verdict::Entangled : Verdict::Inconclusive;
}

bool ppt_is_conclusive(const std::vector<int>& dims) {
  if (dims.size() != 2) return false;
  const int lo = std::min(dims[0], dims[1]);
  const int hi = std::max(dims[0], dims[1]);
  return lo == 2 && (hi == 2 || hi == 3);
}

bool is_matrix_kind(WitnessKind kind) {
  return kind == WitnessKind::BodyMatrix || kind == WitnessKind::AugmentedMatrix;
}

bool is_augmented_kind(WitnessKind kind) {
  return kind == WitnessKind::AugmentedMatrix || kind == WitnessKind::AugmentedTensor;
}

RealTensor witness_side_tensor(const DensityMatrix& rho, const Witness& w) {
  if (is_matrix_kind(w.kind()) && rho.parties() != 2)
    throw NotBipartite("matrix witness needs a two-party state");
  if (w.has_bases()) {
    return is_augmented_kind(w.kind()) ? augmented_tensor(rho, w.bases())
                                       : correlation_tensor(rho, w.bases());
  }
  return is_augmented_kind(w.kind()) ? augmented_tensor(rho) : correlation_tensor(rho);
}

double witness_scale(const DensityMatrix& rho, const Witness& w) {
  return is_augmented_kind(w.kind()) ? augmented_bound(rho.dims()) : body_bound(rho.dims());
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Entangled:
      return "entangled";
    case Verdict::SeparableProven:
      return "separable-proven";
    case Verdict::Inconclusive:
      break;
  }
  return "inconclusive";
}

double body_bound(const std::vector<int>& dims) {
  double b = 1.0;
  for (int d : dims) b *= std::sqrt((d - 1.0) / (2.0 * d));
  return b;
}

double augmented_bound(const std::vector<int>& dims) {
  double b = 1.0;
  for (int d : dims) b *= std::sqrt((static_cast<double>(d) * d - d + 2.0) / (2.0 * d * d));
  return b;
}

Witness::Witness(WitnessKind kind, RealTensor entries) : kind_(kind), entries_(std::move(entries)) {
  if (is_matrix_kind(kind_) && entries_.order() != 2)
    throw ShapeMismatch("matrix witness entries must have order 2");
  if (entries_.order() < 2) throw ShapeMismatch("witness entries must have order >= 2");
  mode_sigmas_.reserve(static_cast<std::size_t>(entries_.order()));
  for (Eigen::Index n = 0; n < entries_.order(); ++n)
    mode_sigmas_.push_back(spectral_norm(unfold(entries_, n)));
}

Witness::Witness(WitnessKind kind, RealTensor entries, std::vector<GellMannBasis> bases)
    : Witness(kind, std::move(entries)) {
  if (static_cast<Eigen::Index>(bases.size()) != entries_.order())
    throw ShapeMismatch("need one generator basis per witness mode");
  for (std::size_t k = 0; k < bases.size(); ++k) {
    const Eigen::Index d = bases[k].dim();
    const Eigen::Index want = is_augmented_kind(kind_) ? d * d : d * d - 1;
    if (entries_.modes()[k] != want)
      throw ShapeMismatch("witness mode extent does not match its basis");
  }
  bases_ = std::move(bases);
}

double Witness::sigma_max() const {
  return *std::max_element(mode_sigmas_.begin(), mode_sigmas_.end());
}

double Witness::sigma_max(Eigen::Index mode) const {
  if (mode < 0 || mode >= static_cast<Eigen::Index>(mode_sigmas_.size()))
    throw BadMode("mode index out of range");
  return mode_sigmas_[static_cast<std::size_t>(mode)];
}

std::vector<CriterionReport> ppt(const DensityMatrix& rho) {
  std::vector<CriterionReport> reports;
  const int cuts = rho.parties() == 2 ? 1 : rho.parties();
  reports.reserve(static_cast<std::size_t>(cuts));
  for (int party = 0; party < cuts; ++party) {
    // For two parties, transposing either side gives the same spectrum.
    const int transposed = rho.parties() == 2 ? 1 : party;
    const RealVector eigs = hermitian_eigenvalues(partial_transpose(rho, transposed));
    CriterionReport rep;
    rep.criterion = "ppt";
    rep.lhs = -eigs(0);
    rep.bound = 0.0;
    rep.margin = rep.lhs;
    rep.detail["min_eigenvalue"] = eigs(0);
    if (rho.parties() > 2) rep.detail["party"] = static_cast<double>(party);
    if (rep.margin > kMarginEps)
      rep.verdict = Verdict::Entangled;
    else if (ppt_is_conclusive(rho.dims()))
      rep.verdict = Verdict::SeparableProven;
    else
      rep.verdict = Verdict::Inconclusive;
    reports.push_back(std::move(rep));
  }
  return reports;
}

CriterionReport realignment_criterion(const DensityMatrix& rho) {
  CriterionReport rep;
  rep.criterion = "realignment";
  rep.lhs = trace_norm(realign(rho));
  rep.bound = 1.0;
  rep.margin = rep.lhs - rep.bound;
  rep.verdict = verdict_from_margin(rep.margin);
  return rep;
}

namespace {

CriterionReport ky_fan_report(const DensityMatrix& rho, bool augmented) {
  const RealTensor t = augmented ? augmented_tensor(rho) : correlation_tensor(rho);
  CriterionReport rep;
  if (rho.parties() == 2)
    rep.criterion = augmented ? "augmented-cm" : "cm";
  else
    rep.criterion = augmented ? "augmented-gcm" : "gcm";
  double best = -1.0;
  for (Eigen::Index n = 0; n < t.order(); ++n) {
    const double v = unfolding_trace_norm(t, n);
    rep.detail["trace_norm_mode_" + std::to_string(n)] = v;
    if (v > best) {
      best = v;
      rep.detail["kf_mode"] = static_cast<double>(n);
    }
  }
  rep.lhs = best;
  rep.bound = augmented ? augmented_bound(rho.dims()) : body_bound(rho.dims());
  rep.margin = rep.lhs - rep.bound;
  rep.verdict = verdict_from_margin(rep.margin);
  return rep;
}

}  // namespace

CriterionReport correlation_criterion(const DensityMatrix& rho) {
  return ky_fan_report(rho, false);
}

CriterionReport augmented_correlation_criterion(const DensityMatrix& rho) {
  return ky_fan_report(rho, true);
}

CriterionReport witness_criterion(const DensityMatrix& rho, const Witness& w) {
  const RealTensor t = witness_side_tensor(rho, w);
  if (t.modes() != w.entries().modes())
    throw ShapeMismatch("witness shape does not match the state's tensor");
  const double scale = witness_scale(rho, w);
  const double contraction = contract(w.entries(), t);

  CriterionReport rep;
  rep.criterion = "witness";
  rep.lhs = std::abs(contraction);
  rep.detail["contraction"] = contraction;
  double sigma = std::numeric_limits<double>::infinity();
  for (Eigen::Index n = 0; n < w.entries().order(); ++n) {
    const double s = w.sigma_max(n);
    sigma = std::min(sigma, s);
    if (w.entries().order() > 2) {
      rep.detail["sigma_mode_" + std::to_string(n)] = s;
      rep.detail["margin_mode_" + std::to_string(n)] = rep.lhs - scale * s;
    }
  }
  rep.detail["sigma"] = sigma;
  rep.bound = scale * sigma;
  rep.margin = rep.lhs - rep.bound;
  rep.verdict = verdict_from_margin(rep.margin);
  return rep;
}

CriterionReport witness_criterion(const DensityMatrix& rho, const Witness& w, Eigen::Index mode) {
  const RealTensor t = witness_side_tensor(rho, w);
  if (t.modes() != w.entries().modes())
    throw ShapeMismatch("witness shape does not match the state's tensor");
  const double scale = witness_scale(rho, w);
  const double contraction = contract(w.entries(), t);

  CriterionReport rep;
  rep.criterion = "witness";
  rep.lhs = std::abs(contraction);
  rep.detail["contraction"] = contraction;
  rep.detail["sigma"] = w.sigma_max(mode);
  rep.detail["mode"] = static_cast<double>(mode);
  rep.bound = scale * w.sigma_max(mode);
  rep.margin = rep.lhs - rep.bound;
  rep.verdict = verdict_from_margin(rep.margin);
  return rep;
}

Witness optimal_witness(const RealTensor& tensor, WitnessKind kind) {
  if (is_matrix_kind(kind) && tensor.order() != 2)
    throw ShapeMismatch("matrix witness kinds need an order-2 tensor");
  const KyFanNorm kf = ky_fan_norm(tensor);
  Eigen::JacobiSVD<RealMatrix> svd(unfold(tensor, kf.mode),
                                   Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealMatrix unfolded = svd.matrixU() * svd.matrixV().transpose();
  Witness w(kind, fold(unfolded, kf.mode, tensor.modes()));
  w.construction_mode_ = kf.mode;
  return w;
}

std::vector<CriterionReport> battery(const DensityMatrix& rho) {
  std::vector<CriterionReport> reports = ppt(rho);
  if (rho.parties() == 2) reports.push_back(realignment_criterion(rho));
  reports.push_back(correlation_criterion(rho));
  reports.push_back(augmented_correlation_criterion(rho));
  return reports;
}

}  // namespace sepcrit
