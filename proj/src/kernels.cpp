#include "taquin/kernels.hpp"

#include "taquin/trace_forest.hpp"

#include <algorithm>
#include <functional>

namespace taquin {

namespace {

// Runs body(i) for i in [0, count), serially or across OpenMP threads.
void run_indexed(std::size_t count, Execution exec, const std::function<void(std::size_t)>& body) {
  const long n = static_cast<long>(count);
  if (exec == Execution::serial) {
    for (long i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
    return;
  }
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
}

CheckSummary summarise(const std::vector<std::string>& errors) {
  CheckSummary s;
  s.cases = errors.size();
  for (const std::string& e : errors) {
    if (e.empty()) continue;
    if (s.failures++ == 0) s.first_failure = e;
  }
  return s;
}

void tuple_rec(int n, int k, std::vector<int>& current, std::vector<bool>& used,
               const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(current.size()) == k) {
    visit(current);
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (used[static_cast<std::size_t>(v)]) continue;
    used[static_cast<std::size_t>(v)] = true;
    current.push_back(v);
    tuple_rec(n, k, current, used, visit);
    current.pop_back();
    used[static_cast<std::size_t>(v)] = false;
  }
}

std::string describe(const SlideCase& c) {
  std::string out = "T = " + to_string(c.tableau) + ", removed =";
  for (int a : c.removed) out += " " + std::to_string(a);
  return out;
}

}  // namespace

std::vector<std::vector<BigInt>> skew_count_table(const std::vector<Partition>& outers,
                                                  const std::vector<Partition>& inners, Execution exec) {
  std::vector<std::vector<BigInt>> table(outers.size(), std::vector<BigInt>(inners.size()));
  run_indexed(outers.size() * inners.size(), exec, [&](std::size_t idx) {
    const std::size_t i = idx / inners.size();
    const std::size_t j = idx % inners.size();
    table[i][j] = count_skew(outers[i], inners[j]);
  });
  return table;
}

void for_each_tuple(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  if (k < 0 || k > n) return;
  std::vector<int> current;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  tuple_rec(n, k, current, used, visit);
}

std::vector<std::map<Partition, long>> inner_shape_histograms(const std::vector<Tableau>& tableaux, int k,
                                                              Execution exec) {
  std::vector<std::map<Partition, long>> out(tableaux.size());
  run_indexed(tableaux.size(), exec, [&](std::size_t i) {
    for_each_tuple(tableaux[i].size(), k, [&](const std::vector<int>& a) { ++out[i][exit_shape(tableaux[i], a)]; });
  });
  return out;
}

std::vector<SlideCase> exhaustive_slide_cases(int n_max, int k_max) {
  std::vector<SlideCase> cases;
  for (int n = 1; n <= n_max; ++n)
    for (const Partition& lambda : partitions_of(n))
      for_each_standard_tableau(lambda, [&](const Tableau& t) {
        for (int k = 1; k <= std::min(k_max, n); ++k)
          for_each_tuple(n, k, [&](const std::vector<int>& a) { cases.push_back({t, a}); });
      });
  return cases;
}

CheckSummary check_round_trips(const std::vector<SlideCase>& cases, Execution exec) {
  std::vector<std::string> errors(cases.size());
  run_indexed(cases.size(), exec, [&](std::size_t i) {
    const SlideCase& c = cases[i];
    try {
      const BijectionImage image = bijection_forward(c.tableau, c.removed);
      if (!validate(image.skew) || !validate(image.exit_order) ||
          image.skew.outer() != c.tableau.outer() || image.exit_order.size() != static_cast<int>(c.removed.size())) {
        errors[i] = "malformed image for " + describe(c);
        return;
      }
      const auto [back, removed] = bijection_backward(image);
      if (back != c.tableau || removed != c.removed) errors[i] = "round trip differs for " + describe(c);
    } catch (const std::exception& e) {
      errors[i] = std::string("exception for ") + describe(c) + ": " + e.what();
    }
  });
  return summarise(errors);
}

std::vector<SeparationCase> exhaustive_separation_cases(int n_max) {
  std::vector<SeparationCase> cases;
  for (int n = 1; n <= n_max; ++n)
    for (const Partition& lambda : partitions_of(n))
      for_each_standard_tableau(lambda, [&](const Tableau& t) {
        for (const Cell& c : cells(lambda)) cases.push_back({t, c});
      });
  return cases;
}

CheckSummary check_separation(const std::vector<SeparationCase>& cases, Execution exec) {
  std::vector<std::string> errors(cases.size());
  run_indexed(cases.size(), exec, [&](std::size_t i) {
    const SeparationCase& c = cases[i];
    try {
      if (!verify_separation(c.tableau, c.cell))
        errors[i] = "separation fails for T = " + to_string(c.tableau) + " (shape " + c.tableau.shape().to_string() +
                    ") at " + to_string(c.cell);
    } catch (const std::exception& e) {
      errors[i] = std::string("exception: ") + e.what();
    }
  });
  return summarise(errors);
}

}  // namespace taquin
