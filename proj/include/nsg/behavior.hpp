#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nsg/rational.hpp"
#include "nsg/tuples.hpp"

namespace nsg {

/// Complete conditional probability table p(answers | questions) over every
/// joint cell. Cells are indexed question-tuple-major with answers varying
/// fastest, matching the LP variable layout.
class Behavior {
 public:
  Behavior(std::vector<int> question_sizes, std::vector<int> answer_sizes);

  static Behavior uniform(std::vector<int> question_sizes,
                          std::vector<int> answer_sizes);

  int players() const { return questions_.arity(); }
  const TupleSpace& questions() const { return questions_; }
  const TupleSpace& answers() const { return answers_; }

  Rational& at(std::span<const int> a, std::span<const int> q);
  const Rational& at(std::span<const int> a, std::span<const int> q) const;

  Rational& cell(std::uint64_t index) { return p_[index]; }
  const Rational& cell(std::uint64_t index) const { return p_[index]; }
  std::uint64_t cells() const { return p_.size(); }

  bool operator==(const Behavior& o) const = default;

 private:
  TupleSpace questions_, answers_;
  std::vector<Rational> p_;
};

struct BehaviorViolation {
  std::string what;         // human-readable description of the first failure
  std::vector<int> subset;  // parties whose questions changed (no-signaling
                            // failures only; empty otherwise)
};

/// Exact check of positivity, normalization, and no-signaling for EVERY
/// nonempty proper subset S of parties: the marginal on the complement of S
/// must not depend on the questions inside S. Returns the first violation,
/// or nullopt on a valid no-signaling behavior.
std::optional<BehaviorViolation> validate_behavior(const Behavior& b);

/// CHSH operator expectation between two parties with binary answers and
/// at least two questions each, using questions {0,1}:
///   sum_{qx,qy} (-1)^(qx AND qy) sum_a (-1)^(ax XOR ay) p_marg(ax,ay|qx,qy).
/// The two-party marginal is computed with all other questions fixed to 0
/// and is verified to be independent of that choice; a question-dependent
/// marginal raises SignalingError.
Rational chsh_expectation(const Behavior& b, int party_x, int party_y);

}  // namespace nsg
