#include "belyi/covering.hpp"

#include <deque>
#include <stdexcept>

namespace belyi {

std::string_view name(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::Tau:
      return "tau";
    case EdgeKind::Alpha:
      return "alpha";
    case EdgeKind::Xi:
      return "xi";
  }
  return "?";
}

GluingTable::GluingTable(Integer n, std::array<std::vector<Integer>, 3> targets)
    : n_(n), targets_(std::move(targets)) {
  for (const auto& row : targets_) {
    if (static_cast<Integer>(row.size()) != n_) {
      throw RangeError("gluing table needs one target per sheet");
    }
    std::vector<bool> hit(static_cast<std::size_t>(n_), false);
    for (Integer t : row) {
      if (t < 0 || t >= n_ || hit[static_cast<std::size_t>(t)]) {
        throw RangeError("gluing rule is not a bijection on sheets");
      }
      hit[static_cast<std::size_t>(t)] = true;
    }
  }
}

Residue GluingTable::target(Residue sheet, EdgeKind kind) const {
  return {targets_[static_cast<std::size_t>(kind)][static_cast<std::size_t>(sheet.value())], n_};
}

Residue GluingTable::source(Residue sheet, EdgeKind kind) const {
  const auto& row = targets_[static_cast<std::size_t>(kind)];
  for (Integer s = 0; s < n_; ++s) {
    if (row[static_cast<std::size_t>(s)] == sheet.value()) return {s, n_};
  }
  throw std::logic_error("gluing row is not surjective");
}

GluingTable gluing_table(const CurveParams& p) {
  const Integer n = p.n();
  // Crossing a lift of a slit counterclockwise around a branch point moves
  // from sheet i - a to sheet i, where zeta^a generates inertia there.
  const Residue tau_step = p.inertia()[0];
  const Residue alpha_step = p.inertia()[2];
  std::array<std::vector<Integer>, 3> targets;
  for (auto& row : targets) row.resize(static_cast<std::size_t>(n));
  for (Integer i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    targets[static_cast<std::size_t>(EdgeKind::Tau)][idx] = (p.residue(i) - tau_step).value();
    targets[static_cast<std::size_t>(EdgeKind::Alpha)][idx] = (p.residue(i) + alpha_step).value();
    targets[static_cast<std::size_t>(EdgeKind::Xi)][idx] = i;
  }
  return GluingTable{n, std::move(targets)};
}

BoundaryLoop lift_boundary_loop(const CurveParams& p) {
  const Integer n = p.n();
  const GluingTable table = gluing_table(p);

  TraversalLog log;
  std::vector<std::pair<EdgePath, std::size_t>> raw;  // path, revolution
  Residue sheet = p.residue(0);
  for (Integer r = 0; r < n; ++r) {
    // Clockwise around the slits: eta_1 -> eta_0 -> eta_1 -> eta_inf -> eta_1,
    // then across alpha onto the next sheet.
    const Residue lower_tau = table.source(sheet, EdgeKind::Tau);
    const Residue next = table.target(sheet, EdgeKind::Alpha);
    Revolution rev{sheet,
                   {{EdgeKind::Xi, sheet.value(), -1},
                    {EdgeKind::Tau, lower_tau.value(), 1},
                    {EdgeKind::Tau, sheet.value(), -1},
                    {EdgeKind::Alpha, sheet.value(), 1},
                    {EdgeKind::Alpha, sheet.value(), -1},
                    {EdgeKind::Xi, next.value(), 1}},
                   {Letter{lower_tau.value(), 1}, Letter{sheet.value(), -1}},
                   next};
    for (const EdgePath& e : rev.paths) raw.emplace_back(e, static_cast<std::size_t>(r));
    log.revolutions.push_back(std::move(rev));
    sheet = next;
  }
  if (sheet.value() != 0) {
    throw std::logic_error("lifted loop does not close up on sheet R_0");
  }

  // Cyclic free reduction of the edge path, recording each cancelled pair.
  std::deque<std::pair<EdgePath, std::size_t>> stack;
  for (const auto& item : raw) {
    if (!stack.empty() && stack.back().first == item.first.inverse()) {
      log.cancellations.push_back({item.second, stack.back().first, item.first});
      stack.pop_back();
    } else {
      stack.push_back(item);
    }
  }
  while (stack.size() >= 2 && stack.front().first == stack.back().first.inverse()) {
    log.cancellations.push_back({stack.back().second, stack.back().first, stack.front().first});
    stack.pop_front();
    stack.pop_back();
  }

  Word word(n);
  for (const auto& [edge, rev] : stack) {
    if (edge.kind != EdgeKind::Tau) {
      throw std::logic_error("non-tau edge survived cancellation");
    }
    log.reduced.push_back(edge);
  }
  // eps^a tau . (eps^b tau)^{-1} = E_a . E_b^{-1}
  for (const EdgePath& edge : log.reduced) word.push_back({edge.label, edge.sign});
  return {std::move(log), std::move(word)};
}

Word boundary_loop_formula(const CurveParams& p) {
  const Integer n = p.n();
  const Integer step = n - p.k() - 1;
  Word w(n);
  for (Integer j = 0; j < n; ++j) {
    w.push_back({j * step + 1, 1});
    w.push_back({j * step, -1});
  }
  return w;
}

}  // namespace belyi
