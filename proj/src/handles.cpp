#include "mixsing/handles.hpp"

#include <algorithm>
#include <numeric>

#include "mixsing/error.hpp"

namespace mixsing {

HandleDecomposition build(const SeifertLinkData& s, const std::vector<double>& critical_values) {
  const int ell = static_cast<int>(s.n);
  if (!critical_values.empty() && static_cast<int>(critical_values.size()) != ell) {
    throw DomainError("need one critical value per round handle");
  }
  const std::int64_t d_p = degrees(s).d_p;

  HandleDecomposition h;
  for (int j = 1; j <= ell; ++j) h.solid_tori.push_back({j});

  std::vector<int> order(ell);
  std::iota(order.begin(), order.end(), 1);
  if (!critical_values.empty()) {
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return critical_values[a - 1] < critical_values[b - 1]; });
  }

  FiberStage stage{0, euler_characteristic_base(s.p, s.q, s.m - s.n), ell + 1, s.m + s.n, std::nullopt};
  h.stages.push_back(stage);
  for (int i = 1; i <= ell; ++i) {
    // The ball side always carries every piece attached so far, so each new
    // handle lands on a distinct, not yet joined solid torus.
    h.round_handles.push_back({i, d_p, h.ball_piece.id, order[i - 1]});
    stage.index = i;
    stage.chi -= 2 * d_p;
    stage.components -= 1;
    stage.surgery = SurgeryRecord{2 * d_p, d_p};
    h.stages.push_back(stage);
  }
  return h;
}

std::vector<std::string> check_ledger(const HandleDecomposition& h) {
  std::vector<std::string> problems;
  const int pieces = 1 + static_cast<int>(h.solid_tori.size());
  std::vector<int> parent(pieces);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& handle : h.round_handles) {
    if (handle.joins_a < 0 || handle.joins_a >= pieces || handle.joins_b < 0 || handle.joins_b >= pieces) {
      problems.push_back("handle " + std::to_string(handle.index) + " joins an unknown component");
      continue;
    }
    int a = find(handle.joins_a), b = find(handle.joins_b);
    if (a == b) {
      problems.push_back("handle " + std::to_string(handle.index) + " has both feet on one component");
    }
    parent[a] = b;
  }
  if (pieces - static_cast<int>(h.round_handles.size()) != 1) problems.push_back("pieces - handles != 1");
  if (h.stages.size() != h.round_handles.size() + 1) problems.push_back("stage count != handles + 1");
  const std::size_t checked = std::min(h.stages.size(), h.round_handles.size() + 1);
  for (std::size_t i = 1; i < checked; ++i) {
    const auto& prev = h.stages[i - 1];
    const auto& cur = h.stages[i];
    const std::int64_t d_p = h.round_handles[i - 1].d_p;
    if (cur.chi != prev.chi - 2 * d_p) problems.push_back("stage " + std::to_string(i) + ": chi step != -2 d_p");
    if (cur.components != prev.components - 1) problems.push_back("stage " + std::to_string(i) + ": components");
    if (cur.boundary_circles != prev.boundary_circles) {
      problems.push_back("stage " + std::to_string(i) + ": boundary changed");
    }
  }
  if (!h.stages.empty() && h.stages.back().components != 1) problems.push_back("final fiber is disconnected");
  return problems;
}

GenusReport genus_report(const HandleDecomposition& h) {
  if (h.stages.empty()) throw DomainError("empty ledger");
  const FiberStage& last = h.stages.back();
  if (last.components != 1) throw DomainError("final fiber is disconnected");
  const std::int64_t twice = 2 - last.chi - last.boundary_circles;
  if (twice < 0 || twice % 2 != 0) throw DomainError("ledger gives a non-integral genus");
  return {twice / 2, last.boundary_circles};
}

}  // namespace mixsing
