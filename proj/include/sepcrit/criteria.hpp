#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sepcrit/bloch.hpp"
#include "sepcrit/density.hpp"
#include "sepcrit/tensor.hpp"

namespace sepcrit {

// A criterion never proves separability except where stated (PPT in the low
// dimensions where it is exact), so the three-way verdict is asymmetric:
// Entangled is a proof, Inconclusive is not evidence of separability.
enum class Verdict { Entangled, Inconclusive, SeparableProven };

std::string to_string(Verdict v);

// Margins within kMarginEps of zero count as "not violated" so roundoff on a
// saturating state cannot flip a verdict.
inline constexpr double kMarginEps = 1e-9;

struct CriterionReport {
  std::string criterion;
  double lhs = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // lhs - bound; > kMarginEps proves entanglement
  Verdict verdict = Verdict::Inconclusive;
  std::map<std::string, double> detail;
};

// Separable ceilings for the two tensor flavors:
//   body:      prod_k sqrt((d_k - 1) / (2 d_k))
//   augmented: prod_k sqrt((d_k^2 - d_k + 2) / (2 d_k^2))
// Each factor is the largest Euclidean norm a pure state's (augmented) Bloch
// vector can have, so the product bounds any separable correlation tensor.
double body_bound(const std::vector<int>& dims);
double augmented_bound(const std::vector<int>& dims);

// What a witness tensor contracts against: the body correlation tensor or
// the augmented one; Matrix kinds are the bipartite (order-2) case.
enum class WitnessKind { BodyMatrix, AugmentedMatrix, BodyTensor, AugmentedTensor };

// An entanglement witness in correlation-tensor form.  Entries live in the
// same index convention as the tensor they contract against; a witness may
// carry its own generator bases when its entries are expressed in a
// convention other than the library default.
class Witness {
 public:
  Witness(WitnessKind kind, RealTensor entries);
  Witness(WitnessKind kind, RealTensor entries, std::vector<GellMannBasis> bases);

  WitnessKind kind() const { return kind_; }
  const RealTensor& entries() const { return entries_; }

  // Spectral norms of the mode unfoldings.  sigma_max() is their maximum;
  // for matrix witnesses both modes agree and it is the spectral norm.
  double sigma_max() const;
  double sigma_max(Eigen::Index mode) const;
  const std::vector<double>& mode_sigmas() const { return mode_sigmas_; }

  bool has_bases() const { return !bases_.empty(); }
  const std::vector<GellMannBasis>& bases() const { return bases_; }

  // Set when the witness came out of optimal_witness: the unfolding mode the
  // construction normalized, where sigma_max is 1.
  std::optional<Eigen::Index> construction_mode() const { return construction_mode_; }

 private:
  friend Witness optimal_witness(const RealTensor& tensor, WitnessKind kind);

  WitnessKind kind_;
  RealTensor entries_;
  std::vector<GellMannBasis> bases_;
  std::vector<double> mode_sigmas_;
  std::optional<Eigen::Index> construction_mode_;
};

// Positive partial transpose: lhs is the negativity witness -lambda_min of
// the transposed matrix, bound 0.  One report per party for multipartite
// states (detail carries the party index).  A PSD partial transpose proves
// separability only for 2x2 and 2x3.
std::vector<CriterionReport> ppt(const DensityMatrix& rho);

// Realignment (bipartite): trace norm of the realigned matrix against 1.
CriterionReport realignment_criterion(const DensityMatrix& rho);

// Ky Fan norm of the body correlation tensor against body_bound.  Reported
// as "cm" for two parties and "gcm" otherwise; the bipartite case reduces to
// the trace norm of the correlation matrix.
CriterionReport correlation_criterion(const DensityMatrix& rho);

// Same with the augmented tensor and augmented_bound ("augmented-cm" /
// "augmented-gcm").  Strictly stronger than the body version.
CriterionReport augmented_correlation_criterion(const DensityMatrix& rho);

// Witness evaluation: lhs = |<W, tensor>| against scale * sigma, where scale
// is the body or augmented bound and sigma is the spectral norm of a witness
// unfolding.  Every mode yields a valid bound, so the modeless overload uses
// the smallest (strongest) one and reports the per-mode picture in detail;
// the mode overload pins one unfolding.
CriterionReport witness_criterion(const DensityMatrix& rho, const Witness& w);
CriterionReport witness_criterion(const DensityMatrix& rho, const Witness& w, Eigen::Index mode);

// Builds the witness that saturates the criterion for the given tensor: from
// the SVD of the Ky-Fan-achieving unfolding U S V^T, the witness unfolds to
// U V^T there, so its spectral norm on that mode is 1 and its contraction
// with the source tensor is the Ky Fan norm.
Witness optimal_witness(const RealTensor& tensor, WitnessKind kind);

// Every criterion applicable to the state's arity, in a fixed order.
std::vector<CriterionReport> battery(const DensityMatrix& rho);

}  // namespace sepcrit
