#include "toepsense/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

#include "toepsense/error.hpp"
#include "toepsense/report.hpp"

namespace toepsense {

namespace {

ClassificationRecord classify_any_shape(const Permutation& sigma, std::size_t d,
                                        const OracleConfig& cfg) {
  const std::size_t n = sigma.size();
  ClassificationRecord rec;
  rec.sigma = sigma;
  rec.r0 = r_zero(sigma);
  if (auto prediction = predict_rank(sigma, d)) {
    rec.eligible = std::move(prediction->witnesses);
    rec.predicted_rank = prediction->rank;
  }
  rec.covered = !rec.eligible.empty();

  const std::size_t full = std::min(n, 2 * d);
  rec.oracle_rank = oracle_rank_vpv(sigma, n, d, cfg);
  rec.trials_used = cfg.trials;
  if (rec.oracle_rank < full && cfg.trials < kEscalatedTrials) {
    OracleConfig more = cfg;
    more.trials = kEscalatedTrials;
    rec.oracle_rank = oracle_rank_vpv(sigma, n, d, more);
    rec.trials_used = kEscalatedTrials;
  }
  rec.consistent = !rec.predicted_rank || *rec.predicted_rank == rec.oracle_rank;
  return rec;
}

// Aggregates for one contiguous index block; merged in block order.
struct BlockResult {
  std::uint64_t index = 0;
  std::map<std::size_t, std::uint64_t> histogram;
  std::uint64_t covered = 0;
  std::uint64_t not_covered = 0;
  std::uint64_t classified = 0;
  std::vector<ClassificationRecord> counterexamples;
  std::vector<ClassificationRecord> inconsistencies;
};

json block_to_json(const BlockResult& b) {
  json hist = json::object();
  for (const auto& [rank, count] : b.histogram) hist[std::to_string(rank)] = count;
  json cex = json::array();
  for (const auto& r : b.counterexamples) cex.push_back(to_json(r));
  json bad = json::array();
  for (const auto& r : b.inconsistencies) bad.push_back(to_json(r));
  return {{"index", b.index},         {"histogram", std::move(hist)},
          {"covered", b.covered},     {"not_covered", b.not_covered},
          {"classified", b.classified}, {"counterexamples", std::move(cex)},
          {"inconsistencies", std::move(bad)}};
}

BlockResult block_from_json(const json& j) {
  BlockResult b;
  b.index = j.at("index").get<std::uint64_t>();
  for (const auto& [rank, count] : j.at("histogram").items()) {
    b.histogram[std::stoul(rank)] = count.get<std::uint64_t>();
  }
  b.covered = j.at("covered").get<std::uint64_t>();
  b.not_covered = j.at("not_covered").get<std::uint64_t>();
  b.classified = j.at("classified").get<std::uint64_t>();
  for (const auto& r : j.at("counterexamples")) b.counterexamples.push_back(record_from_json(r));
  for (const auto& r : j.at("inconsistencies")) b.inconsistencies.push_back(record_from_json(r));
  return b;
}

json checkpoint_header(const HarnessConfig& cfg, std::size_t n, std::size_t block_size) {
  return {{"schema", std::string(kSchemaTag)},
          {"kind", "conjecture-checkpoint"},
          {"n", n},
          {"d", cfg.d},
          {"seed", cfg.oracle.seed},
          {"trials", cfg.oracle.trials},
          {"prime", cfg.oracle.field.modulus()},
          {"symmetry_reduction", cfg.symmetry_reduction},
          {"block_size", block_size}};
}

void write_checkpoint(const std::string& path, json header,
                      const std::map<std::uint64_t, BlockResult>& done) {
  json blocks = json::array();
  for (const auto& [_, b] : done) blocks.push_back(block_to_json(b));
  header["blocks"] = std::move(blocks);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error(ErrorCode::kIo, "cannot write checkpoint " + tmp);
    out << header.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

Permutation reversal_conjugate(const Permutation& sigma) {
  const std::size_t n = sigma.size();
  std::vector<std::size_t> image(n);
  for (std::size_t j = 0; j < n; ++j) image[j] = n - 1 - sigma(n - 1 - j);
  return Permutation(std::move(image));
}

ClassificationRecord classify(const Permutation& sigma, std::size_t d,
                              const OracleConfig& cfg) {
  if (d < 1 || sigma.size() != 2 * d) {
    throw Error(ErrorCode::kInvalidArgument,
                "classify requires n = 2d, got n=" + std::to_string(sigma.size()) +
                    " d=" + std::to_string(d));
  }
  cfg.validate();
  ClassificationRecord rec = classify_any_shape(sigma, d, cfg);
  rec.index = rank_permutation(sigma);
  return rec;
}

HarnessReport verify_conjecture(const HarnessConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  cfg.oracle.validate();
  const std::size_t d = cfg.d;
  const std::size_t n = cfg.n == 0 ? 2 * d : cfg.n;
  if (n != 2 * d && !cfg.exploratory) {
    throw Error(ErrorCode::kInvalidArgument,
                "the conjecture concerns n = 2d; pass the exploratory flag for n=" +
                    std::to_string(n));
  }
  if (d < 1 || n < 2 * d || n > 10) {
    throw Error(ErrorCode::kInvalidArgument,
                "harness supports d >= 1 and 2d <= n <= 10, got n=" + std::to_string(n) +
                    " d=" + std::to_string(d));
  }
  const std::uint64_t total = factorial(n);
  const std::size_t full = 2 * d;

  std::size_t block_size = std::max<std::size_t>(1, cfg.block_size);
  std::map<std::uint64_t, BlockResult> done;
  HarnessReport report;
  std::uint64_t restored_records = 0;

  if (cfg.checkpoint_path && std::filesystem::exists(*cfg.checkpoint_path)) {
    std::ifstream in(*cfg.checkpoint_path);
    json saved;
    try {
      in >> saved;
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kIo, "unreadable checkpoint: " + std::string(e.what()));
    }
    block_size = saved.at("block_size").get<std::size_t>();
    json expected = checkpoint_header(cfg, n, block_size);
    for (const auto& [key, value] : expected.items()) {
      if (saved.at(key) != value) {
        throw Error(ErrorCode::kInvalidArgument,
                    "checkpoint was written with a different " + key);
      }
    }
    for (const auto& b : saved.at("blocks")) {
      BlockResult r = block_from_json(b);
      std::uint64_t covered_span =
          std::min<std::uint64_t>(total, (r.index + 1) * block_size) - r.index * block_size;
      report.resumed += covered_span;
      restored_records += r.classified;
      done.emplace(r.index, std::move(r));
    }
  }

  const std::uint64_t block_count = (total + block_size - 1) / block_size;
  std::vector<std::uint64_t> pending;
  for (std::uint64_t b = 0; b < block_count; ++b)
    if (!done.contains(b)) pending.push_back(b);

  std::mutex mu;
  std::atomic<std::size_t> next{0};
  std::uint64_t since_checkpoint = 0;
  std::uint64_t finished = report.resumed;
  std::exception_ptr failure;
  const json header = checkpoint_header(cfg, n, block_size);

  auto work = [&]() {
    try {
      for (;;) {
        const std::size_t slot = next.fetch_add(1);
        if (slot >= pending.size()) return;
        BlockResult res;
        res.index = pending[slot];
        const std::uint64_t first = res.index * block_size;
        const std::uint64_t last = std::min<std::uint64_t>(total, first + block_size);
        for_each_permutation(n, first, last, [&](std::uint64_t index, const Permutation& sigma) {
          std::uint64_t weight = 1;
          if (cfg.symmetry_reduction) {
            const Permutation mirror = reversal_conjugate(sigma);
            if (!(mirror == sigma)) {
              if (rank_permutation(mirror) < index) return;
              weight = 2;
            }
          }
          OracleConfig oc = cfg.oracle;
          oc.seed = derive_seed(cfg.oracle.seed, index);
          ClassificationRecord rec = classify_any_shape(sigma, d, oc);
          rec.index = index;
          rec.orbit_size = weight;
          ++res.classified;
          res.histogram[rec.oracle_rank] += weight;
          (rec.covered ? res.covered : res.not_covered) += weight;
          if (!rec.consistent) res.inconsistencies.push_back(rec);
          if (!rec.covered && rec.oracle_rank < full) res.counterexamples.push_back(std::move(rec));
        });

        std::lock_guard lock(mu);
        done.emplace(res.index, std::move(res));
        finished += last - first;
        since_checkpoint += last - first;
        if (cfg.checkpoint_path && since_checkpoint >= cfg.checkpoint_every) {
          write_checkpoint(*cfg.checkpoint_path, header, done);
          since_checkpoint = 0;
        }
        if (cfg.progress) cfg.progress(finished, total);
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
      next.store(pending.size());
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, cfg.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  if (cfg.checkpoint_path) write_checkpoint(*cfg.checkpoint_path, header, done);

  report.n = n;
  report.d = d;
  report.total = total;
  report.in_conjecture_scope = n == 2 * d;
  report.symmetry_reduction = cfg.symmetry_reduction;
  report.trials = cfg.oracle.trials;
  report.seed = cfg.oracle.seed;
  report.prime = cfg.oracle.field.modulus();
  report.workers = workers;
  for (auto& [_, b] : done) {
    for (const auto& [rank, count] : b.histogram) report.rank_histogram[rank] += count;
    report.covered += b.covered;
    report.not_covered += b.not_covered;
    report.classified += b.classified;
    for (auto& r : b.counterexamples) report.counterexamples.push_back(std::move(r));
    for (auto& r : b.inconsistencies) report.inconsistencies.push_back(std::move(r));
  }
  report.classified -= restored_records;
  // A sampled rank falls short only if a nonzero minor of degree <= n
  // vanishes at every one of the trials.
  report.per_permutation_error_bound =
      std::pow(static_cast<double>(n) / static_cast<double>(report.prime),
               static_cast<double>(cfg.oracle.trials));
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace toepsense
