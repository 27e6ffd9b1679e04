#include "nsg/behavior.hpp"

#include <sstream>
#include <stdexcept>

#include "nsg/errors.hpp"

namespace nsg {
namespace {

std::string join(std::span<const int> t) {
  std::ostringstream os;
  for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  return os.str();
}

}  // namespace

Behavior::Behavior(std::vector<int> question_sizes, std::vector<int> answer_sizes)
    : questions_(std::move(question_sizes)), answers_(std::move(answer_sizes)) {
  if (questions_.arity() != answers_.arity())
    throw ValidationError("behavior question/answer arity mismatch");
  if (questions_.total() > (std::uint64_t{1} << 24) ||
      answers_.total() > (std::uint64_t{1} << 24) ||
      questions_.total() * answers_.total() > (std::uint64_t{1} << 26))
    throw BudgetError("behavior table too large to materialize");
  p_.assign(questions_.total() * answers_.total(), Rational(0));
}

Behavior Behavior::uniform(std::vector<int> question_sizes,
                           std::vector<int> answer_sizes) {
  Behavior b(std::move(question_sizes), std::move(answer_sizes));
  const Rational w(1, static_cast<long>(b.answers_.total()));
  for (auto& cell : b.p_) cell = w;
  return b;
}

Rational& Behavior::at(std::span<const int> a, std::span<const int> q) {
  return p_[questions_.index_of(q) * answers_.total() + answers_.index_of(a)];
}

const Rational& Behavior::at(std::span<const int> a, std::span<const int> q) const {
  return p_[questions_.index_of(q) * answers_.total() + answers_.index_of(a)];
}

std::optional<BehaviorViolation> validate_behavior(const Behavior& b) {
  const int m = b.players();
  const auto& qs = b.questions();
  const auto& as = b.answers();

  std::vector<int> q(m, 0);
  do {
    Rational sum;
    std::vector<int> a(m, 0);
    do {
      const Rational& v = b.at(a, q);
      if (v.sign() < 0)
        return BehaviorViolation{"negative entry p(" + join(a) + "|" + join(q) +
                                     ") = " + v.str(),
                                 {}};
      sum += v;
    } while (as.next(a));
    if (!(sum == Rational(1)))
      return BehaviorViolation{
          "normalization failure at q=(" + join(q) + "): sum = " + sum.str(), {}};
  } while (qs.next(q));

  // No-signaling for every nonempty proper subset S: marginal over the
  // answers of S must be the same for every question assignment inside S.
  for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) {
    std::vector<int> in_s, out_s;
    for (int i = 0; i < m; ++i)
      (mask >> i & 1 ? in_s : out_s).push_back(i);

    std::vector<int> s_qsizes, s_asizes, o_qsizes, o_asizes;
    for (int i : in_s) { s_qsizes.push_back(qs.sizes()[i]); s_asizes.push_back(as.sizes()[i]); }
    for (int i : out_s) { o_qsizes.push_back(qs.sizes()[i]); o_asizes.push_back(as.sizes()[i]); }
    const TupleSpace sq(s_qsizes), sa(s_asizes), oq(o_qsizes), oa(o_asizes);

    std::vector<int> q_out(out_s.size(), 0);
    std::vector<int> q_full(m), a_full(m);
    do {
      std::vector<int> a_out(out_s.size(), 0);
      do {
        // reference marginal at q_S = (0,...,0)
        bool have_ref = false;
        Rational ref;
        std::vector<int> q_in(in_s.size(), 0);
        do {
          Rational marg;
          std::vector<int> a_in(in_s.size(), 0);
          do {
            for (size_t i = 0; i < in_s.size(); ++i) {
              q_full[in_s[i]] = q_in[i];
              a_full[in_s[i]] = a_in[i];
            }
            for (size_t i = 0; i < out_s.size(); ++i) {
              q_full[out_s[i]] = q_out[i];
              a_full[out_s[i]] = a_out[i];
            }
            marg += b.at(a_full, q_full);
          } while (sa.next(a_in));
          if (!have_ref) {
            ref = std::move(marg);
            have_ref = true;
          } else if (!(marg == ref)) {
            std::vector<int> parties;
            for (int i : in_s) parties.push_back(i);
            return BehaviorViolation{
                "no-signaling failure: marginal on parties {" + join(out_s) +
                    "} at answers (" + join(a_out) + "), questions (" +
                    join(q_out) + ") changes when S={" + join(in_s) +
                    "} switches questions from all-zero to (" + join(q_in) +
                    "): " + ref.str() + " vs " + marg.str(),
                parties};
          }
        } while (sq.next(q_in));
      } while (oa.next(a_out));
    } while (oq.next(q_out));
  }
  return std::nullopt;
}

Rational chsh_expectation(const Behavior& b, int party_x, int party_y) {
  const int m = b.players();
  if (party_x < 0 || party_x >= m || party_y < 0 || party_y >= m ||
      party_x == party_y)
    throw std::invalid_argument("chsh_expectation: bad party indices");
  if (b.questions().sizes()[party_x] < 2 || b.questions().sizes()[party_y] < 2)
    throw std::invalid_argument("chsh_expectation: parties need >= 2 questions");
  if (b.answers().sizes()[party_x] != 2 || b.answers().sizes()[party_y] != 2)
    throw std::invalid_argument("chsh_expectation: parties must answer bits");

  std::vector<int> others;
  for (int i = 0; i < m; ++i)
    if (i != party_x && i != party_y) others.push_back(i);
  std::vector<int> o_qsizes, o_asizes;
  for (int i : others) {
    o_qsizes.push_back(b.questions().sizes()[i]);
    o_asizes.push_back(b.answers().sizes()[i]);
  }
  const TupleSpace oq(o_qsizes), oa(o_asizes);

  // marginal for one (qx,qy,ax,ay), checked across every bystander question
  const auto marginal = [&](int qx, int qy, int ax, int ay) {
    std::vector<int> q_full(m), a_full(m);
    q_full[party_x] = qx; q_full[party_y] = qy;
    a_full[party_x] = ax; a_full[party_y] = ay;
    bool have_ref = false;
    Rational ref;
    std::vector<int> q_o(others.size(), 0);
    do {
      for (size_t i = 0; i < others.size(); ++i) q_full[others[i]] = q_o[i];
      Rational marg;
      std::vector<int> a_o(others.size(), 0);
      do {
        for (size_t i = 0; i < others.size(); ++i) a_full[others[i]] = a_o[i];
        marg += b.at(a_full, q_full);
      } while (oa.next(a_o));
      if (!have_ref) {
        ref = std::move(marg);
        have_ref = true;
      } else if (!(marg == ref)) {
        throw SignalingError(
            "two-party marginal depends on bystander questions (" + join(q_o) +
            "); behavior is signaling");
      }
    } while (oq.next(q_o));
    return ref;
  };

  Rational total;
  for (int qx = 0; qx < 2; ++qx)
    for (int qy = 0; qy < 2; ++qy) {
      Rational correlator;
      for (int ax = 0; ax < 2; ++ax)
        for (int ay = 0; ay < 2; ++ay) {
          const Rational term = marginal(qx, qy, ax, ay);
          correlator += (ax ^ ay) ? -term : term;
        }
      total += (qx & qy) ? -correlator : correlator;
    }
  return total;
}

}  // namespace nsg
