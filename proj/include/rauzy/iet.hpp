#pragma once

#include <cstddef>
#include <vector>

#include <nlohmann/json.hpp>

#include "rauzy/numerics.hpp"
#include "rauzy/permutation.hpp"

namespace rauzy {

/// Interval exchange T_(lambda, pi) on [0, |lambda|_1).
///
/// Interval I_i = [alpha_{i-1}, alpha_i) is translated onto the slot
/// pi(i) of the permuted partition, whose breakpoints are the partial sums
/// of lambda^pi (lambda^pi_i = lambda_{pi^{-1}(i)}).
class Iet {
 public:
  /// Throws DomainError unless every length is strictly positive and the
  /// sizes agree.
  static Iet build(RVector lengths, Perm perm);

  const RVector& lengths() const { return lengths_; }
  const Perm& permutation() const { return perm_; }
  int size() const { return perm_.size(); }

  /// alpha_0 = 0, ..., alpha_n = |lambda|_1.
  const std::vector<Rational>& breakpoints() const { return breaks_; }
  /// Partial sums of lambda^pi.
  const std::vector<Rational>& image_breakpoints() const { return image_breaks_; }
  /// T(x) = x + offsets()[i-1] on I_i.
  const std::vector<Rational>& offsets() const { return offsets_; }
  const Rational& total_length() const { return breaks_.back(); }

  /// 1-based index i with x in I_i. Throws DomainError outside [0, |lambda|).
  int interval_of(const Rational& x) const;
  bool is_interior_breakpoint(const Rational& x) const;

  Rational operator()(const Rational& x) const;

 private:
  RVector lengths_;
  Perm perm_;
  std::vector<Rational> breaks_;
  std::vector<Rational> image_breaks_;
  std::vector<Rational> offsets_;
};

inline Rational eval(const Iet& t, const Rational& x) { return t(x); }

struct FirstReturn {
  Rational image;
  std::size_t return_time = 0;
};

/// First return of x under t to [0, cut).
///
/// Throws BreakpointError when an intermediate orbit point (one that is
/// still outside [0, cut) and must be iterated again) sits exactly on an
/// interior breakpoint, and IterationCapError when the orbit has not
/// returned after `cap` applications.
FirstReturn first_return(const Iet& t, const Rational& cut, const Rational& x,
                         std::size_t cap = 1000);

nlohmann::json to_json(const Iet& t);

}  // namespace rauzy
