#include "conway/classify.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

namespace conway {
namespace {

std::string Decimal(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", value);
  return buffer;
}

Claim Implication(std::string id, bool hypothesis, std::string hypothesis_text,
                  bool conclusion, std::string conclusion_text) {
  Claim claim{std::move(id), ClaimStatus::kNotApplicable, {}};
  if (!hypothesis) {
    claim.witness = "hypothesis fails: not (" + hypothesis_text + ")";
  } else if (conclusion) {
    claim.status = ClaimStatus::kHolds;
    claim.witness = hypothesis_text + " and " + conclusion_text;
  } else {
    claim.status = ClaimStatus::kViolated;
    claim.witness = hypothesis_text + " but not " + conclusion_text;
  }
  return claim;
}

bool OrderIs(const GroupOrder& order, std::initializer_list<unsigned> values) {
  return std::any_of(values.begin(), values.end(),
                     [&](unsigned v) { return order == v; });
}

}  // namespace

Signature ComputeSignature(const Group& group) {
  Signature sig;
  sig.degree = group.degree();
  sig.order = group.Order();
  sig.transitive = group.IsTransitive();
  if (sig.transitive) sig.primitive = group.IsPrimitive();
  sig.generously_transitive = group.IsGenerouslyTransitive();
  sig.contains_alt = group.ContainsAlternating();
  sig.all_even = std::all_of(
      group.generators().begin(), group.generators().end(),
      [](const Permutation& g) { return g.parity() == Parity::kEven; });
  return sig;
}

std::string Recognize(std::size_t degree, const GroupOrder& order) {
  if (order == 1) return "trivial";
  static const std::map<std::pair<std::size_t, unsigned>, std::string> kTable{
      {{8, 288}, "Alt(4) wr C2"},
      {{12, 95040}, "M12"},
      {{12, 7920}, "M11"},
      {{15, 20160}, "SL4(2) or Alt(8) (ambiguous by order)"},
      {{15, 720}, "Sym(6)"},
      {{15, 2520}, "Alt(7)"},
      {{15, 360}, "Alt(6)"},
  };
  if (order <= 95040) {
    auto it = kTable.find({degree, order.convert_to<unsigned>()});
    if (it != kTable.end()) return it->second;
  }
  GroupOrder full = Factorial(degree);
  if (degree >= 2 && order == full) return "Sym(" + std::to_string(degree) + ")";
  if (degree >= 3 && order * 2 == full) return "Alt(" + std::to_string(degree) + ")";
  return "unrecognized";
}

std::string ToString(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::kHolds: return "holds";
    case ClaimStatus::kViolated: return "violated";
    case ClaimStatus::kNotApplicable: return "not-applicable";
  }
  return "unknown";
}

std::string ToString(CriterionCase c) {
  switch (c) {
    case CriterionCase::kSmallSupportElement: return "small_support_element";
    case CriterionCase::kSharedTranspositionPair: return "shared_transposition_pair";
    case CriterionCase::kNeither: return "neither";
  }
  return "unknown";
}

bool ConsistencyReport::HasViolation() const {
  return std::any_of(claims.begin(), claims.end(), [](const Claim& c) {
    return c.status == ClaimStatus::kViolated;
  });
}

const Claim* ConsistencyReport::Find(const std::string& id) const {
  for (const auto& c : claims) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

ConsistencyReport CheckDegreeBounds(std::size_t n, std::size_t lambda,
                                    const Signature& sig) {
  const long long nn = static_cast<long long>(n);
  const long long l = static_cast<long long>(lambda);
  const std::string n_text = "n=" + std::to_string(n);
  ConsistencyReport report;

  report.claims.push_back(Implication(
      "transitive_bound", 7 * (nn - 1) > 24 * l,
      n_text + " > " + Decimal(24.0 * l / 7.0 + 1.0), sig.transitive, "transitive"));

  report.claims.push_back(Implication(
      "primitive_bound", nn > 9 * l - 6, n_text + " > " + std::to_string(9 * l - 6),
      sig.primitive.value_or(false), "primitive"));

  report.claims.push_back(Implication(
      "generous_bound", nn >= 10 * l - 5,
      n_text + " >= " + std::to_string(10 * l - 5), sig.generously_transitive,
      "generously transitive"));

  const long long quadratic = 9 * l * l - 12 * l + 5;
  const bool projective_exception = lambda == 1 && n == 13 && sig.order == 95040;
  report.claims.push_back(Implication(
      "alternating_bound", nn > quadratic, n_text + " > " + std::to_string(quadratic),
      sig.contains_alt || projective_exception,
      sig.contains_alt ? "contains Alt(n-1)"
                       : "contains Alt(n-1) or is the order-95040 plane exception"));
  return report;
}

ConsistencyReport CheckLambda3Classification(std::size_t n, const Signature& sig) {
  if (sig.degree + 1 != n) {
    throw Error("signature degree " + std::to_string(sig.degree) +
                " does not match n-1 for n=" + std::to_string(n));
  }
  ConsistencyReport report;
  const std::string n_text = "n=" + std::to_string(n);
  const std::string order_text = "order " + sig.order.str();

  Claim row{"classification_row", ClaimStatus::kViolated, {}};
  if (sig.contains_alt) {
    row.status = ClaimStatus::kHolds;
    row.witness = "contains Alt(" + std::to_string(sig.degree) + ")";
  } else if (!sig.transitive) {
    bool ok = n == 8 && sig.order == 1;
    row.status = ok ? ClaimStatus::kHolds : ClaimStatus::kViolated;
    row.witness = ok ? "intransitive trivial group at n=8"
                     : "intransitive with " + order_text + " at " + n_text +
                           "; only n=8 with the trivial group is permitted";
  } else if (!sig.primitive.value_or(false)) {
    if (n == 9 && sig.order == 288) {
      row.status = ClaimStatus::kHolds;
      row.witness = "imprimitive Alt(4) wr C2 at n=9";
    } else if (n == 13 || n == 16 || n == 17 || n == 21) {
      row.status = ClaimStatus::kHolds;
      row.witness = "permitted-unknown: imprimitive case open at " + n_text;
    } else {
      row.witness = "imprimitive with " + order_text + " at " + n_text +
                    "; permitted only at n in {9, 13, 16, 17, 21}";
    }
  } else {
    bool ok = (n == 13 && OrderIs(sig.order, {95040, 7920})) ||
              (n == 16 && OrderIs(sig.order, {20160, 720, 2520, 360})) || n == 17;
    row.status = ok ? ClaimStatus::kHolds : ClaimStatus::kViolated;
    row.witness = (ok ? "permitted primitive group with " : "primitive non-alternating ") +
                  order_text + " at " + n_text;
    if (n == 17 && ok) row.witness = "permitted-unknown: primitive case open at n=17";
  }
  report.claims.push_back(std::move(row));

  report.claims.push_back(Implication("transitive_above_11", n > 11, n_text + " > 11",
                                      sig.transitive, "transitive"));
  report.claims.push_back(Implication("primitive_above_21", n > 21, n_text + " > 21",
                                      sig.primitive.value_or(false), "primitive"));
  report.claims.push_back(Implication("alternating_above_50", n > 50,
                                      n_text + " > 50", sig.contains_alt,
                                      "contains Alt(n-1)"));
  report.claims.push_back(Claim{
      "even_generators", sig.all_even ? ClaimStatus::kHolds : ClaimStatus::kViolated,
      sig.all_even ? "every generator is even" : "an odd generator exists"});
  return report;
}

CriterionResult SupportCriterion(const Group& group, std::size_t lambda,
                                 std::uint64_t cap) {
  if (lambda == 0) throw Error("lambda must be positive");
  const std::size_t threshold = 6 * (lambda - 1);
  const std::size_t involution_cycles = 3 * (lambda - 1);

  std::optional<Permutation> small;
  std::vector<Permutation> involutions;
  group.ForEachElement(cap, [&](const Permutation& g) {
    std::size_t support = g.SupportSize();
    if (support == 0) return;
    if (support < threshold) {
      if (!small || g < *small) small = g;
      return;
    }
    if (involution_cycles == 0 || support != 2 * involution_cycles) return;
    auto cycles = g.cycle_type();
    if (cycles == CycleType(involution_cycles, 2)) involutions.push_back(g);
  });

  CriterionResult result;
  if (small) {
    result.which = CriterionCase::kSmallSupportElement;
    result.witnesses = {*small};
    return result;
  }
  std::sort(involutions.begin(), involutions.end());
  std::map<std::pair<Point, Point>, std::size_t> first_owner;
  for (std::size_t i = 0; i < involutions.size(); ++i) {
    for (const auto& cycle : involutions[i].ToCycles()) {
      std::pair<Point, Point> t{cycle[0], cycle[1]};
      auto [it, inserted] = first_owner.emplace(t, i);
      if (!inserted) {
        result.which = CriterionCase::kSharedTranspositionPair;
        result.witnesses = {involutions[it->second], involutions[i]};
        result.shared_transposition = t;
        return result;
      }
    }
  }
  return result;
}

}  // namespace conway
