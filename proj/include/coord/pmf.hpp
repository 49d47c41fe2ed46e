#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "coord/errors.hpp"

namespace coord {

struct Variable {
  std::string name;
  std::vector<std::string> alphabet;
};

// Row-major multi-index over a list of axis sizes (last axis fastest).
class AxisIndexer {
 public:
  AxisIndexer() = default;
  explicit AxisIndexer(std::vector<Eigen::Index> sizes);

  Eigen::Index total() const { return total_; }
  Eigen::Index axes() const { return static_cast<Eigen::Index>(sizes_.size()); }
  Eigen::Index size(Eigen::Index axis) const { return sizes_[axis]; }
  Eigen::Index stride(Eigen::Index axis) const { return strides_[axis]; }
  const std::vector<Eigen::Index>& sizes() const { return sizes_; }

  Eigen::Index flat(std::span<const int> digits) const;
  void unrank(Eigen::Index flat, std::span<int> digits) const;
  int digit(Eigen::Index flat, Eigen::Index axis) const {
    return static_cast<int>((flat / strides_[axis]) % sizes_[axis]);
  }

 private:
  std::vector<Eigen::Index> sizes_;
  std::vector<Eigen::Index> strides_;
  Eigen::Index total_ = 1;
};

// A joint pmf over named finite-alphabet variables. Probabilities live in a
// flat row-major tensor: the last listed variable varies fastest. Immutable
// after construction.
//
// Construction accepts a total within 1e-9 of one and stores the exactly
// renormalized tensor, so downstream code can rely on the 1e-12 invariant.
class JointPMF {
 public:
  JointPMF(std::vector<Variable> vars, Eigen::ArrayXd probs);

  Eigen::Index size() const { return probs_.size(); }
  Eigen::Index var_count() const { return static_cast<Eigen::Index>(vars_.size()); }
  const std::vector<Variable>& variables() const { return vars_; }
  const Variable& variable(Eigen::Index i) const { return vars_[i]; }
  const Eigen::ArrayXd& probs() const { return probs_; }
  const AxisIndexer& indexer() const { return idx_; }

  // Axis position of a named variable; Name error if absent.
  Eigen::Index axis_of(const std::string& name) const;
  bool has_variable(const std::string& name) const;

  double at(std::span<const int> digits) const { return probs_[idx_.flat(digits)]; }

 private:
  std::vector<Variable> vars_;
  Eigen::ArrayXd probs_;
  AxisIndexer idx_;
};

// A conditional pmf P(target | given), one normalized row per given-assignment.
// Rows whose conditioning event has zero probability in the source joint are
// flagged undefined and must be excluded from downstream expectations.
class ConditionalPMF {
 public:
  ConditionalPMF(std::vector<Variable> target, std::vector<Variable> given,
                 Eigen::ArrayXXd rows, std::vector<bool> defined);

  const std::vector<Variable>& target() const { return target_; }
  const std::vector<Variable>& given() const { return given_; }
  Eigen::Index row_count() const { return rows_.rows(); }
  Eigen::Index col_count() const { return rows_.cols(); }
  const Eigen::ArrayXXd& rows() const { return rows_; }
  bool row_defined(Eigen::Index g) const { return defined_[g]; }
  const AxisIndexer& given_indexer() const { return gidx_; }
  const AxisIndexer& target_indexer() const { return tidx_; }

  // Row as a distribution over target assignments; an undefined row is
  // surfaced as the uniform distribution so samplers stay total.
  Eigen::ArrayXd row_dist(Eigen::Index g) const;
  double at(Eigen::Index g, Eigen::Index t) const { return rows_(g, t); }

 private:
  std::vector<Variable> target_;
  std::vector<Variable> given_;
  Eigen::ArrayXXd rows_;
  std::vector<bool> defined_;
  AxisIndexer gidx_, tidx_;
};

// A ⫫ C given B, encoded as A - B - C. `mid` may be empty (plain independence).
struct MarkovChainSpec {
  std::vector<std::string> left;
  std::vector<std::string> mid;
  std::vector<std::string> right;
};

// --- core manipulation -------------------------------------------------

// Sums out all variables not in `keep`. Result variables retain p's order.
JointPMF marginal(const JointPMF& p, std::span<const std::string> keep);

// Conditional of `target` given `given`; the sets must be disjoint.
ConditionalPMF condition(const JointPMF& p, std::span<const std::string> target,
                         std::span<const std::string> given);

// Product extension over n i.i.d. copies. Sequence variables are named
// "<base>.<k>" for k = 1..n, grouped by base variable. `cap` bounds the
// extended tensor size.
JointPMF iid_extend(const JointPMF& p, int n, Eigen::Index cap = Eigen::Index{1} << 24);

// Axis permutation to the given variable-name order.
JointPMF reorder(const JointPMF& p, std::span<const std::string> order);

// Joint over p's variables plus the channel's target: q(a, t) = p(a) * c(t | g(a)).
// The channel's given variables must all appear in p with matching alphabets.
JointPMF extend_with_channel(const JointPMF& p, const ConditionalPMF& c);

// Adjoins a deterministic variable computed from existing ones. `fn` maps the
// digit tuple of `sources` (in the order given) to an index into `alphabet`.
JointPMF adjoin_function(const JointPMF& p, std::span<const std::string> sources,
                         const Variable& new_var,
                         const std::function<int(std::span<const int>)>& fn);

// Variables of the n-fold sequence extension of `base_vars` (iid_extend naming).
std::vector<Variable> sequence_variables(const std::vector<Variable>& base_vars, int n);

std::vector<Eigen::Index> resolve_axes(const JointPMF& p, std::span<const std::string> names);

}  // namespace coord
