#pragma once

#include <Eigen/Dense>

namespace decpomdp {

/// Probability vector over the state set. Construction always validates, so a
/// BeliefVector in flight is a simplex point (nonnegative, sums to one within
/// 1e-10).
class BeliefVector {
 public:
  BeliefVector() = default;

  static BeliefVector uniform(int size);
  static BeliefVector one_hot(int state, int size);

  /// Normalizes a nonnegative vector into a belief. Throws if the vector has
  /// no mass or a non-finite/negative entry.
  static BeliefVector from_unnormalized(Eigen::VectorXd values);

  /// Accepts an already-normalized vector (sum within 1e-10 of one).
  static BeliefVector from_probabilities(Eigen::VectorXd values);

  int size() const { return static_cast<int>(values_.size()); }
  double operator()(int s) const { return values_(s); }
  const Eigen::VectorXd& vec() const { return values_; }

  bool is_valid(double tol = 1e-10) const;

 private:
  explicit BeliefVector(Eigen::VectorXd values) : values_(std::move(values)) {}

  Eigen::VectorXd values_;
};

/// Unnormalized log-probability vector; the working representation for
/// likelihood products and geometric averages. Entries may be -inf (zero
/// mass) but never NaN.
class LogBelief {
 public:
  explicit LogBelief(Eigen::VectorXd log_values) : log_values_(std::move(log_values)) {}

  static LogBelief from_belief(const BeliefVector& belief);

  /// Normalizes via max-shifted exponentiation. Throws when every entry is
  /// -inf (no probability mass anywhere).
  BeliefVector normalize() const;

  Eigen::VectorXd& values() { return log_values_; }
  const Eigen::VectorXd& values() const { return log_values_; }
  int size() const { return static_cast<int>(log_values_.size()); }

 private:
  Eigen::VectorXd log_values_;
};

}  // namespace decpomdp
