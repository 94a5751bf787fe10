#include "b1f/balance.hpp"

namespace b1f {

PairProfile pair_profile(const OneFactorisation& f) {
  PairProfile profile;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) ++profile[cycle_type(f.factor(i), f.factor(j))];
  }
  return profile;
}

BalanceReport classify_balance(const OneFactorisation& f) {
  BalanceReport report;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      auto type = cycle_type(f.factor(i), f.factor(j));
      ++report.profile[type];
      report.pair_types.emplace(FactorPair{i, j}, std::move(type));
    }
  }
  if (report.profile.empty()) return report;

  const int first = report.profile.begin()->second;
  bool equal = true;
  for (const auto& [type, count] : report.profile) equal = equal && count == first;
  if (equal) report.balanced_m = static_cast<int>(report.profile.size());

  report.is_uniform = report.balanced_m == 1;
  report.is_perfect = report.is_uniform && report.profile.begin()->first.is_hamiltonian(f.graph().order());
  return report;
}

std::string BalanceReport::verdict() const {
  return balanced_m ? "MBalanced(" + std::to_string(*balanced_m) + ")" : "Unbalanced";
}

bool is_feasible(int regularity, int m) noexcept {
  const int pairs = regularity * (regularity - 1) / 2;
  return m >= 1 && pairs % m == 0;
}

}  // namespace b1f
