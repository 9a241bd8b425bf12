#include <algorithm>
#include <atomic>
#include <thread>

#include "rootheight/identities.hpp"

namespace rootheight {

std::vector<IdentityReport> run_suite(const std::vector<RootSystem>& systems, const std::vector<std::string>& ids,
                                      const CheckOptions& opts, int jobs) {
  struct Task {
    const RootSystem* rs;
    const std::string* id;
  };
  std::vector<Task> tasks;
  for (const auto& rs : systems)
    for (const auto& id : ids)
      if (check_applies(id, rs)) tasks.push_back({&rs, &id});

  std::vector<IdentityReport> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) out[i] = run_check(*tasks[i].id, *tasks[i].rs, opts);
  };
  const int n = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  }

  // Sort by system in catalog order, then by check id.
  std::vector<std::pair<RootSystemId, std::size_t>> order;
  for (std::size_t i = 0; i < tasks.size(); ++i) order.emplace_back(tasks[i].rs->id(), i);
  std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return out[a.second].identity_id < out[b.second].identity_id;
  });
  std::vector<IdentityReport> sorted;
  sorted.reserve(out.size());
  for (const auto& [id, i] : order) sorted.push_back(std::move(out[i]));
  return sorted;
}

}  // namespace rootheight
