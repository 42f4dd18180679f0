#include "pgg/solve.hpp"

namespace pgg {

namespace {

// Per-node sequential counter over its neighbor decision variables.
// ge[j][r] (1-based in both coordinates) holds the variable meaning
// "at least r of the first j neighbors play 1". Clauses pin it in both
// directions, so in every model ge[j][r] equals that predicate exactly.
struct CounterVars {
  std::vector<std::vector<int>> ge;
};

CounterVars allocate_counter(int degree, int& next_var) {
  CounterVars c;
  c.ge.resize(static_cast<size_t>(degree) + 1);
  for (int j = 1; j <= degree; ++j) {
    c.ge[static_cast<size_t>(j)].resize(static_cast<size_t>(j) + 1);
    for (int r = 1; r <= j; ++r) c.ge[static_cast<size_t>(j)][static_cast<size_t>(r)] = next_var++;
  }
  return c;
}

}  // namespace

CnfEncoding encode_ntpne_cnf(const PggInstance& inst) {
  const Graph& g = inst.graph;
  const Pattern& t = inst.pattern;
  const int n = g.node_count();
  CnfEncoding enc;
  enc.node_var.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) enc.node_var[static_cast<size_t>(i)] = i + 1;
  int next_var = n + 1;
  auto emit = [&](std::vector<int> clause) { enc.clauses.push_back(std::move(clause)); };

  for (int i = 0; i < n; ++i) {
    const int s = enc.node_var[static_cast<size_t>(i)];
    const int d = g.degree(i);
    if (d == 0) {
      emit({t.query(0) ? s : -s});
      continue;
    }
    std::vector<int> x(static_cast<size_t>(d) + 1);
    {
      int j = 1;
      for (int nb : g.neighbors(i)) x[static_cast<size_t>(j++)] = enc.node_var[static_cast<size_t>(nb)];
    }
    CounterVars cnt = allocate_counter(d, next_var);
    auto ge = [&](int j, int r) { return cnt.ge[static_cast<size_t>(j)][static_cast<size_t>(r)]; };

    // Count reached implies the flag: x_j -> ge[j][1]; carrying forward from
    // the j-1 prefix, with or without x_j's contribution.
    for (int j = 1; j <= d; ++j) emit({-x[static_cast<size_t>(j)], ge(j, 1)});
    for (int j = 2; j <= d; ++j) {
      for (int r = 1; r <= j - 1; ++r) emit({-ge(j - 1, r), ge(j, r)});
      for (int r = 2; r <= j; ++r)
        emit({-x[static_cast<size_t>(j)], -ge(j - 1, r - 1), ge(j, r)});
    }
    // Flag implies the count: the r ones must come from somewhere.
    for (int j = 1; j <= d; ++j) {
      for (int r = 1; r <= j; ++r) {
        if (r <= j - 1)
          emit({-ge(j, r), ge(j - 1, r), x[static_cast<size_t>(j)]});
        else
          emit({-ge(j, j), x[static_cast<size_t>(j)]});
        if (r >= 2) {
          if (r <= j - 1)
            emit({-ge(j, r), ge(j - 1, r), ge(j - 1, r - 1)});
          else
            emit({-ge(j, j), ge(j - 1, j - 1)});
        }
      }
    }

    // Exactly-k indicators: eq[k] <-> ge[d][k] and not ge[d][k+1], with the
    // out-of-range flags treated as constants.
    std::vector<int> eq(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) eq[static_cast<size_t>(k)] = next_var++;
    for (int k = 0; k <= d; ++k) {
      const int e = eq[static_cast<size_t>(k)];
      if (k >= 1) emit({-e, ge(d, k)});
      if (k <= d - 1) emit({-e, -ge(d, k + 1)});
      std::vector<int> back;
      if (k >= 1) back.push_back(-ge(d, k));
      if (k <= d - 1) back.push_back(ge(d, k + 1));
      back.push_back(e);
      emit(std::move(back));
    }

    // Tie the node's decision to its neighbor count through the pattern.
    std::vector<int> ones{-s};
    std::vector<int> zeros{s};
    for (int k = 0; k <= d; ++k) {
      const int e = eq[static_cast<size_t>(k)];
      if (t.query(k)) {
        emit({-e, s});
        ones.push_back(e);
      } else {
        emit({-e, -s});
        zeros.push_back(e);
      }
    }
    emit(std::move(ones));
    emit(std::move(zeros));
  }

  // Rule out the all-zero profile.
  std::vector<int> some_one;
  some_one.reserve(static_cast<size_t>(n));
  for (int v : enc.node_var) some_one.push_back(v);
  emit(std::move(some_one));

  enc.variable_count = next_var - 1;
  return enc;
}

}  // namespace pgg
