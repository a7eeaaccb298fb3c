#include "cayleyrep/classification.hpp"

#include <cstdlib>
#include <future>
#include <stdexcept>
#include <thread>

namespace cayley {

namespace {

int worker_count(size_t tasks) {
  unsigned n = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("CAYLEY_REP_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) n = static_cast<unsigned>(v);
  }
  if (n < 1) n = 1;
  if (n > tasks) n = static_cast<unsigned>(tasks);
  return static_cast<int>(n);
}

std::optional<std::string> identify(const RootSystemData& rs, const Weight& w) {
  switch (rs.family) {
    case Family::A:
      if (rs.rank == 1) {
        if (w == rs.fundamental_weights[0]) return "standard";
        Weight adjoint = rs.fundamental_weights[0] + rs.fundamental_weights[0];
        if (w == adjoint) return "adjoint-of-A1";
      }
      if (rs.rank == 3 && w == rs.fundamental_weights[1]) return "lambda2-sl4";
      return std::nullopt;
    case Family::B:
      if (w == rs.fundamental_weights[0]) return "standard";
      if (rs.rank == 2 && w == rs.fundamental_weights[1]) return "spin-B2";
      return std::nullopt;
    case Family::C:
      if (w == rs.fundamental_weights[0]) return "standard";
      return std::nullopt;
    case Family::D:
      if (w == rs.fundamental_weights[0]) return "standard";
      if (rs.rank == 4) {
        if (w == rs.fundamental_weights[3]) return "spin8-plus";
        if (w == rs.fundamental_weights[2]) return "spin8-minus";
      }
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Weight> enumerate_dominant(const RootSystemData& rs, int bound) {
  if (bound < 1) throw std::invalid_argument("enumerate_dominant: bound must be >= 1");
  const int n = rs.rank;
  std::vector<Weight> out;
  std::vector<long> coeffs(n, 0);
  for (;;) {
    // advance the odometer, least-significant position last (lex order)
    int pos = n - 1;
    while (pos >= 0 && coeffs[pos] == bound) {
      coeffs[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++coeffs[pos];
    std::vector<Rat> rc(coeffs.begin(), coeffs.end());
    out.push_back(weight_from_fundamental(rc, rs));
  }
  return out;
}

std::vector<ClassificationRow> classify(Family family, int rank, int bound) {
  const RootSystemData rs = build_root_system(family, rank);
  const std::vector<Weight> candidates = enumerate_dominant(rs, bound);

  std::vector<ClassificationRow> rows(candidates.size());
  auto evaluate = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      ClassificationRow& row = rows[i];
      row.family = rs.family;
      row.rank = rs.rank;
      row.highest = candidates[i];
      for (const auto& c : fundamental_coefficients(candidates[i], rs)) {
        row.coeffs.push_back(c.get_num().get_si());
      }
      ConfigReport report =
          is_cayley_configuration(candidates[i], rs, ConfigEvidence::screening);
      row.verdict = report.verdict;
      if (row.verdict) row.identification = identify(rs, candidates[i]);
    }
  };

  const int workers = worker_count(candidates.size());
  if (workers <= 1) {
    evaluate(0, candidates.size());
  } else {
    std::vector<std::future<void>> futures;
    const size_t chunk = (candidates.size() + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      size_t begin = w * chunk;
      size_t end = std::min(candidates.size(), begin + chunk);
      if (begin >= end) break;
      futures.push_back(std::async(std::launch::async, evaluate, begin, end));
    }
    for (auto& f : futures) f.get();
  }
  return rows;
}

std::vector<ClassificationRow> full_report(int max_rank, int bound) {
  if (max_rank < 1 || max_rank > 8) {
    throw std::invalid_argument("full_report: max_rank must be in [1, 8]");
  }
  if (bound < 1 || bound > 3) {
    throw std::invalid_argument("full_report: bound must be in [1, 3]");
  }
  std::vector<ClassificationRow> rows;
  const std::pair<Family, int> starts[] = {{Family::A, 1}, {Family::B, 2},
                                           {Family::C, 3}, {Family::D, 4}};
  for (const auto& [family, min_rank] : starts) {
    for (int r = min_rank; r <= max_rank; ++r) {
      auto part = classify(family, r, bound);
      rows.insert(rows.end(), std::make_move_iterator(part.begin()),
                  std::make_move_iterator(part.end()));
    }
  }
  return rows;
}

}  // namespace cayley
