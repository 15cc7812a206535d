#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "sepcrit/errors.hpp"
#include "sepcrit/matrix.hpp"

namespace sepcrit {

// Dense order-N tensor stored row-major (last mode varies fastest).  Modes
// are 0-based throughout.
template <typename Scalar>
class Tensor {
 public:
  Tensor() = default;

  explicit Tensor(std::vector<Eigen::Index> modes) : modes_(std::move(modes)) {
    if (modes_.empty()) throw ShapeMismatch("tensor needs at least one mode");
    Eigen::Index n = 1;
    for (Eigen::Index m : modes_) {
      if (m < 1) throw ShapeMismatch("every mode extent must be positive");
      n *= m;
    }
    data_ = Eigen::VectorX<Scalar>::Zero(n);
  }

  Eigen::Index order() const { return static_cast<Eigen::Index>(modes_.size()); }
  const std::vector<Eigen::Index>& modes() const { return modes_; }
  Eigen::Index size() const { return data_.size(); }

  Eigen::VectorX<Scalar>& data() { return data_; }
  const Eigen::VectorX<Scalar>& data() const { return data_; }

  Scalar& at(const std::vector<Eigen::Index>& idx) { return data_(offset(idx)); }
  Scalar at(const std::vector<Eigen::Index>& idx) const { return data_(offset(idx)); }

  template <typename... Ix>
  Scalar& operator()(Ix... ix) {
    return data_(offset({static_cast<Eigen::Index>(ix)...}));
  }
  template <typename... Ix>
  Scalar operator()(Ix... ix) const {
    return data_(offset({static_cast<Eigen::Index>(ix)...}));
  }

  Eigen::Index offset(std::initializer_list<Eigen::Index> idx) const {
    return offset(std::vector<Eigen::Index>(idx));
  }
  Eigen::Index offset(const std::vector<Eigen::Index>& idx) const {
    if (static_cast<Eigen::Index>(idx.size()) != order())
      throw ShapeMismatch("index arity does not match tensor order");
    Eigen::Index off = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] < 0 || idx[k] >= modes_[k]) throw ShapeMismatch("tensor index out of range");
      off = off * modes_[k] + idx[k];
    }
    return off;
  }

 private:
  std::vector<Eigen::Index> modes_;
  Eigen::VectorX<Scalar> data_;
};

using RealTensor = Tensor<double>;
using ComplexTensor = Tensor<Complex>;

namespace tensor_detail {

// Row-major size of the modes before / after a given one.
inline std::pair<Eigen::Index, Eigen::Index> split_at(const std::vector<Eigen::Index>& modes,
                                                      Eigen::Index mode) {
  Eigen::Index lead = 1, trail = 1;
  for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(modes.size()); ++k) {
    if (k < mode) lead *= modes[static_cast<std::size_t>(k)];
    if (k > mode) trail *= modes[static_cast<std::size_t>(k)];
  }
  return {lead, trail};
}

inline void check_mode(const std::vector<Eigen::Index>& modes, Eigen::Index mode) {
  if (mode < 0 || mode >= static_cast<Eigen::Index>(modes.size()))
    throw BadMode("mode index out of range");
}

}  // namespace tensor_detail

// Mode-n unfolding: rows indexed by the chosen mode, columns by the remaining
// modes in increasing order with the last one varying fastest.  With row-major
// storage the column index of entry (..., i_n, ...) is lead * trail_extent +
// trail where lead/trail are the row-major offsets of the modes before/after n.
template <typename Scalar>
Eigen::MatrixX<Scalar> unfold(const Tensor<Scalar>& t, Eigen::Index mode) {
  tensor_detail::check_mode(t.modes(), mode);
  const auto [lead, trail] = tensor_detail::split_at(t.modes(), mode);
  const Eigen::Index extent = t.modes()[static_cast<std::size_t>(mode)];
  Eigen::MatrixX<Scalar> out(extent, lead * trail);
  for (Eigen::Index a = 0; a < lead; ++a)
    for (Eigen::Index i = 0; i < extent; ++i)
      for (Eigen::Index b = 0; b < trail; ++b)
        out(i, a * trail + b) = t.data()((a * extent + i) * trail + b);
  return out;
}

// Inverse of unfold for a matrix of matching shape.
template <typename Scalar>
Tensor<Scalar> fold(const Eigen::MatrixX<Scalar>& m, Eigen::Index mode,
                    const std::vector<Eigen::Index>& modes) {
  tensor_detail::check_mode(modes, mode);
  Tensor<Scalar> t(modes);
  const auto [lead, trail] = tensor_detail::split_at(modes, mode);
  const Eigen::Index extent = modes[static_cast<std::size_t>(mode)];
  if (m.rows() != extent || m.cols() != lead * trail)
    throw ShapeMismatch("matrix shape does not match the requested folding");
  for (Eigen::Index a = 0; a < lead; ++a)
    for (Eigen::Index i = 0; i < extent; ++i)
      for (Eigen::Index b = 0; b < trail; ++b)
        t.data()((a * extent + i) * trail + b) = m(i, a * trail + b);
  return t;
}

// Mode-n product: applies A (rows x extent_n) along mode n, changing that
// mode's extent to A.rows().
template <typename Scalar>
Tensor<Scalar> mode_apply(const Tensor<Scalar>& t, const Eigen::MatrixX<Scalar>& a,
                          Eigen::Index mode) {
  tensor_detail::check_mode(t.modes(), mode);
  if (a.cols() != t.modes()[static_cast<std::size_t>(mode)])
    throw ShapeMismatch("matrix columns do not match the mode extent");
  Eigen::MatrixX<Scalar> applied = a * unfold(t, mode);
  std::vector<Eigen::Index> new_modes = t.modes();
  new_modes[static_cast<std::size_t>(mode)] = a.rows();
  return fold(applied, mode, new_modes);
}

// Trace norm of one unfolding.
inline double unfolding_trace_norm(const RealTensor& t, Eigen::Index mode) {
  return trace_norm(unfold(t, mode));
}

// Ky Fan tensor norm: the largest unfolding trace norm.  Also reports which
// mode attains it (smallest index on ties).
struct KyFanNorm {
  double value;
  Eigen::Index mode;
};

inline KyFanNorm ky_fan_norm(const RealTensor& t) {
  KyFanNorm best{-1.0, 0};
  for (Eigen::Index n = 0; n < t.order(); ++n) {
    const double v = unfolding_trace_norm(t, n);
    if (v > best.value) best = {v, n};
  }
  return best;
}

// Outer product of per-mode vectors: entry (i_1,...,i_N) = prod_k v_k(i_k).
inline RealTensor outer(const std::vector<RealVector>& factors) {
  if (factors.empty()) throw ShapeMismatch("outer product needs at least one factor");
  std::vector<Eigen::Index> modes;
  modes.reserve(factors.size());
  for (const auto& v : factors) modes.push_back(v.size());
  RealTensor t(modes);
  // Row-major order means the result is the repeated Kronecker product of the
  // factors as flat vectors.
  RealVector acc = factors[0];
  for (std::size_t k = 1; k < factors.size(); ++k) {
    RealVector next(acc.size() * factors[k].size());
    for (Eigen::Index a = 0; a < acc.size(); ++a)
      next.segment(a * factors[k].size(), factors[k].size()) = acc(a) * factors[k];
    acc = std::move(next);
  }
  t.data() = std::move(acc);
  return t;
}

// Full contraction sum of elementwise products; shapes must agree.
inline double contract(const RealTensor& a, const RealTensor& b) {
  if (a.modes() != b.modes()) throw ShapeMismatch("contraction needs matching shapes");
  return a.data().dot(b.data());
}

}  // namespace sepcrit
