#include "gammalab/profile.hpp"

#include <algorithm>

namespace gammalab {

const char* to_string(OpenDirection dir) {
  return dir == OpenDirection::Paper ? "paper" : "standard";
}

bool is_monotone(const Operation& op) {
  const auto& opens = op.space().opens();
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = 0; j < opens.size(); ++j) {
      if (opens[i].subset_of(opens[j]) && !op.at(i).subset_of(op.at(j))) return false;
    }
  }
  return true;
}

bool is_regular(const Operation& op) {
  const FiniteSpace& sp = op.space();
  const auto& opens = sp.opens();
  for (int x = 0; x < sp.points(); ++x) {
    std::vector<std::size_t> nbds;
    for (std::size_t i = 0; i < opens.size(); ++i) {
      if (opens[i].contains(x)) nbds.push_back(i);
    }
    for (std::size_t u : nbds) {
      for (std::size_t v : nbds) {
        const Subset meet = op.at(u) & op.at(v);
        const bool dominated = std::any_of(nbds.begin(), nbds.end(),
                                           [&](std::size_t w) { return op.at(w).subset_of(meet); });
        if (!dominated) return false;
      }
    }
  }
  return true;
}

bool is_open_operation(const GammaCalculus& calc, OpenDirection dir) {
  const Operation& op = calc.op();
  const auto& opens = op.space().opens();
  for (int x = 0; x < calc.points(); ++x) {
    for (std::size_t i = 0; i < opens.size(); ++i) {
      if (!opens[i].contains(x)) continue;
      const Subset value = op.at(i);
      bool found = false;
      calc.gamma_open().for_each([&](Subset b) {
        if (found || !b.contains(x)) return;
        found = dir == OpenDirection::Paper ? value.subset_of(b) : b.subset_of(value);
      });
      if (!found) return false;
    }
  }
  return true;
}

bool is_open_operation(const Operation& op, OpenDirection dir) {
  return is_open_operation(GammaCalculus(op), dir);
}

OperationProfile profile(const GammaCalculus& calc) {
  return OperationProfile{
      .monotone = is_monotone(calc.op()),
      .regular = is_regular(calc.op()),
      .open_paper = is_open_operation(calc, OpenDirection::Paper),
      .open_standard = is_open_operation(calc, OpenDirection::Standard),
      .closed_defs_agree = calc.closed_defs_agree(),
  };
}

OperationProfile profile(const Operation& op) { return profile(GammaCalculus(op)); }

InducedOperation induced_subspace_operation(const Operation& op, Subset b, SubspacePolicy policy) {
  InducedOperation out{subspace(op.space(), b), std::nullopt, {}};
  const Subspace& sub = out.subspace;
  std::vector<Subset> values(sub.space.opens().size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::vector<Subset> candidates;
    for (Subset u : sub.traces[i]) {
      const Subset v = sub.restrict(op.apply(u));
      if (std::find(candidates.begin(), candidates.end(), v) == candidates.end()) {
        candidates.push_back(v);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    Subset merged;
    for (Subset v : candidates) merged |= v;
    values[i] = merged;
    if (candidates.size() > 1) out.ambiguities.push_back({sub.space.opens()[i], std::move(candidates)});
  }
  if (policy == SubspacePolicy::Union || out.ambiguities.empty()) {
    out.operation = Operation::from_table(sub.space, std::move(values));
  }
  return out;
}

}  // namespace gammalab
