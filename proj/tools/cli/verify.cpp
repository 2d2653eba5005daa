// Copyright 2026 The simcore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "simcore/checked.hpp"
#include "simcore/core_predicates.hpp"
#include "simcore/errors.hpp"
#include "simcore/extremal.hpp"
#include "simcore/partition.hpp"

namespace simcore::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct Cell {
  std::string label;
  bool knife_edge = false;
  std::function<std::vector<Discrepancy>()> run;
};

struct Maxima {
  Size largest = 0;
  std::vector<Partition> maximizers;
  std::uint64_t count = 0;

  void Add(const Partition& p) {
    ++count;
    const Size size = p.size();
    if (maximizers.empty() || size > largest) {
      largest = size;
      maximizers = {p};
    } else if (size == largest) {
      maximizers.push_back(p);
    }
  }
};

std::string FormatSet(std::vector<Partition> v) {
  std::sort(v.begin(), v.end());
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

class Collector {
 public:
  Collector(std::string suite, std::string cell)
      : suite_(std::move(suite)), cell_(std::move(cell)) {}

  template <typename T>
  void Expect(const std::string& check, const T& expected, const T& actual) {
    if (expected == actual) return;
    std::ostringstream e;
    std::ostringstream a;
    e << expected;
    a << actual;
    out_.push_back({suite_, cell_, check, e.str(), a.str()});
  }

  void Fail(const std::string& check, const std::string& detail) {
    out_.push_back({suite_, cell_, check, "", detail});
  }

  std::vector<Discrepancy> Take() { return std::move(out_); }

 private:
  std::string suite_;
  std::string cell_;
  std::vector<Discrepancy> out_;
};

bool HalfFraction(const Rational& r) {
  return r.FractionalPart() == Rational(1, 2);
}

bool IsKnifeEdge(Modulus t, std::uint64_t m, Family family) {
  if (family == Family::kPlus) return HalfFraction(Alpha(m, t, 1));
  if (m == 1) return t >= 3 && HalfFraction(Alpha(1, t - 1, 1));
  const bool vertex_inside =
      (t % 2 == 1 && t > m + 1) || (t % 2 == 0 && t > 2 * m + 3);
  return HalfFraction(Alpha(m, t, 3)) ||
         (vertex_inside && HalfFraction(Alpha(m, t, -1)));
}

std::string FamilyCellLabel(Modulus t, std::uint64_t m, Family family) {
  return "t=" + std::to_string(t) + " m=" + std::to_string(m) +
         " family=" + std::string(FamilyName(family));
}

void GuardFamilySize(Modulus t, std::uint64_t m, Family family,
                     const ResourceGuard& guard) {
  std::uint64_t n = 0;
  try {
    n = CountDistinctCore(t, m, family);
  } catch (const OverflowError&) {
    n = UINT64_MAX;
  }
  if (n > guard.max_estimated_count) {
    throw ResourceLimitExceeded(FamilyCellLabel(t, m, family) + " has " +
                                std::to_string(n) +
                                " members, above the guard of " +
                                std::to_string(guard.max_estimated_count));
  }
}

std::vector<Discrepancy> ClosedFormCell(const std::string& suite, Modulus t,
                                     std::uint64_t m, Family family,
                                     const ResourceGuard& guard) {
  Collector c(suite, FamilyCellLabel(t, m, family));
  ExtremalReport report;
  try {
    report = Extremal(t, m, family);
  } catch (const std::logic_error& e) {
    c.Fail("closed form", e.what());
    return c.Take();
  }

  Maxima by_sequences;
  SequenceEnumerator seqs(t, m, family);
  while (auto s = seqs.Next()) by_sequences.Add(FromSequence(*s));

  Maxima by_ideals;
  CoreBetaSetEnumerator ideals(t, SecondModulus(t, m, family), true, guard);
  while (auto beta = ideals.Next()) by_ideals.Add(FromBetaSet(*beta));

  for (const auto& [name, oracle] :
       {std::pair<const char*, const Maxima*>{"sequences", &by_sequences},
        {"order ideals", &by_ideals}}) {
    const std::string tag = std::string(" vs ") + name;
    c.Expect("largest_size" + tag, oracle->largest, report.largest_size);
    c.Expect("maximizer_count" + tag,
             static_cast<std::uint64_t>(oracle->maximizers.size()),
             report.maximizer_count);
    c.Expect("maximizers" + tag, FormatSet(oracle->maximizers),
             FormatSet(report.maximizers));
  }
  c.Expect("family size", by_sequences.count, by_ideals.count);
  if (family == Family::kMinus && report.maximizer_count > 2) {
    c.Fail("maximizer_count <= 2", std::to_string(report.maximizer_count));
  }
  for (const Partition& p : report.maximizers) {
    if (!InFamily(p, t, m, family) || p.size() != report.largest_size) {
      c.Fail("witness validity", FormatPartition(p));
    }
  }
  if (family == Family::kPlus && m == 1) {
    const ExtremalReport consecutive = LargestTTPlus1(t);
    c.Expect("(t, t+1) largest_size", consecutive.largest_size,
             report.largest_size);
    c.Expect("(t, t+1) maximizers", FormatSet(consecutive.maximizers),
             FormatSet(report.maximizers));
  }
  return c.Take();
}

std::vector<Discrepancy> BijectionCell(Modulus t, std::uint64_t m,
                                       Family family,
                                       const ResourceGuard& guard) {
  Collector c("bijections", FamilyCellLabel(t, m, family));
  std::uint64_t sequences = 0;
  SequenceEnumerator seqs(t, m, family);
  while (auto s = seqs.Next()) {
    ++sequences;
    const Partition p = FromSequence(*s);
    if (!InFamily(p, t, m, family)) {
      c.Fail("image membership", FormatSequence(*s));
    } else if (!(ToSequence(p, t, m, family) == *s)) {
      c.Fail("sequence round trip", FormatSequence(*s));
    }
  }
  const std::uint64_t beta_bound = m * t - (family == Family::kPlus ? 1 : 2);
  std::uint64_t members = 0;
  CoreBetaSetEnumerator ideals(t, SecondModulus(t, m, family), true, guard);
  while (auto beta = ideals.Next()) {
    ++members;
    const Partition p = FromBetaSet(*beta);
    if (!beta->empty() && beta->max() > beta_bound) {
      c.Fail("beta-set bound", FormatBetaSet(*beta));
    }
    if (!(FromSequence(ToSequence(p, t, m, family)) == p)) {
      c.Fail("partition round trip", FormatPartition(p));
    }
  }
  c.Expect("cardinality (sequences vs order ideals)", sequences, members);
  c.Expect("cardinality (transfer matrix vs sequences)", sequences,
           CountDistinctCore(t, m, family));
  return c.Take();
}

std::vector<Discrepancy> ClassicalPairCell(Modulus a, Modulus b,
                                           const ResourceGuard& guard) {
  Collector c("classical", "a=" + std::to_string(a) + " b=" + std::to_string(b));
  const FamilyStats stats = ComputeFamilyStats(a, b, false, guard);
  // C(a + b, a) / (a + b), built exactly in 128 bits.
  checked::UInt128 binom = 1;
  for (std::uint64_t i = 1; i <= a; ++i) binom = binom * (b + i) / i;
  c.Expect("Anderson count", static_cast<std::uint64_t>(binom / (a + b)),
           stats.count);
  c.Expect("Olsson-Stanton largest size", (a * a - 1) * (b * b - 1) / 24,
           stats.largest_size);
  c.Expect("Armstrong average size",
           Rational(static_cast<std::int64_t>((a - 1) * (b - 1) * (a + b + 1)),
                    24)
               .ToString(),
           stats.average_size().ToString());
  return c.Take();
}

std::vector<Discrepancy> FibonacciCell(Modulus t, const ResourceGuard& guard) {
  Collector c("classical", "fibonacci t=" + std::to_string(t));
  std::uint64_t prev = 1;
  std::uint64_t cur = 1;  // F(1), F(2)
  for (Modulus i = 2; i <= t; ++i) {
    const std::uint64_t next = prev + cur;
    prev = cur;
    cur = next;
  }
  const std::uint64_t dp = CountDistinctCore(t, 1, Family::kPlus);
  c.Expect("transfer matrix vs F(t+1)", cur, dp);
  std::uint64_t enumerated = 0;
  CoreBetaSetEnumerator ideals(t, t + 1, true, guard);
  while (ideals.Advance()) ++enumerated;
  c.Expect("order ideals vs transfer matrix", dp, enumerated);
  return c.Take();
}

std::vector<Cell> BuildCells(const VerifySuiteConfig& config) {
  const auto& [t_lo, t_hi] = config.t_range;
  const auto& [m_lo, m_hi] = config.m_range;
  if (t_lo < 2) throw InvalidArgument("t range must start at >= 2");
  std::vector<Cell> cells;
  const ResourceGuard guard = config.guard;
  const std::string& suite = config.suite;

  if (suite == "thm-plus" || suite == "thm-minus" || suite == "bijections") {
    if (m_lo < 1) throw InvalidArgument("m range must start at >= 1");
    std::vector<Family> families;
    if (suite != "thm-minus") families.push_back(Family::kPlus);
    if (suite != "thm-plus") families.push_back(Family::kMinus);
    for (Modulus t = t_lo; t <= t_hi; ++t) {
      for (std::uint64_t m = m_lo; m <= m_hi; ++m) {
        for (Family family : families) {
          GuardFamilySize(t, m, family, guard);
          Cell cell;
          cell.label = FamilyCellLabel(t, m, family);
          cell.knife_edge =
              suite != "bijections" && IsKnifeEdge(t, m, family);
          if (suite == "bijections") {
            cell.run = [=] { return BijectionCell(t, m, family, guard); };
          } else {
            cell.run = [=] { return ClosedFormCell(suite, t, m, family, guard); };
          }
          cells.push_back(std::move(cell));
        }
      }
    }
    return cells;
  }
  if (suite == "classical") {
    for (Modulus a = t_lo; a <= t_hi; ++a) {
      for (Modulus b = a + 1; b <= t_hi; ++b) {
        if (std::gcd(a, b) != 1) continue;
        if (EstimatedCoreCount(a, b) > guard.max_estimated_count) {
          throw ResourceLimitExceeded("(" + std::to_string(a) + ", " +
                                      std::to_string(b) +
                                      ")-core family exceeds the guard");
        }
        cells.push_back({"a=" + std::to_string(a) + " b=" + std::to_string(b),
                         false, [=] { return ClassicalPairCell(a, b, guard); }});
      }
    }
    for (Modulus t = t_lo; t <= t_hi; ++t) {
      cells.push_back({"fibonacci t=" + std::to_string(t), false,
                       [=] { return FibonacciCell(t, guard); }});
    }
    return cells;
  }
  throw InvalidArgument("unknown verify suite '" + suite + "'");
}

}  // namespace

InclusiveRange ParseRange(std::string_view text) {
  const std::size_t dots = text.find("..");
  std::vector<std::uint64_t> bounds;
  if (dots == std::string_view::npos) {
    bounds = ParseIntegerList(text);
    if (bounds.size() != 1) throw ParseError("expected A..B or A");
    bounds.push_back(bounds[0]);
  } else {
    const auto lo = ParseIntegerList(text.substr(0, dots));
    const auto hi = ParseIntegerList(text.substr(dots + 2));
    if (lo.size() != 1 || hi.size() != 1) throw ParseError("expected A..B");
    bounds = {lo[0], hi[0]};
  }
  if (bounds[0] > bounds[1]) {
    throw ParseError("empty range " + std::string(text));
  }
  return {bounds[0], bounds[1]};
}

const std::vector<std::string>& VerifySuiteNames() {
  static const std::vector<std::string> names = {"thm-plus", "thm-minus",
                                                 "bijections", "classical"};
  return names;
}

nlohmann::json ToJson(const VerifyResult& result) {
  nlohmann::json discrepancies = nlohmann::json::array();
  for (const Discrepancy& d : result.discrepancies) {
    discrepancies.push_back({{"suite", d.suite},
                             {"cell", d.cell},
                             {"check", d.check},
                             {"expected", d.expected},
                             {"actual", d.actual}});
  }
  return {{"suite", result.suite},
          {"cells", result.cells},
          {"knife_edge_cells", result.knife_edge_cells},
          {"passed", result.passed()},
          {"discrepancies", std::move(discrepancies)}};
}

VerifyResult RunVerifySuite(const VerifySuiteConfig& config,
                            std::ostream* progress) {
  const auto start = Clock::now();
  const std::vector<Cell> cells = BuildCells(config);

  std::vector<std::vector<Discrepancy>> per_cell(cells.size());
  std::vector<char> ran(cells.size(), 0);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::exception_ptr failure;

  auto worker = [&] {
    while (!stop.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      const auto cell_start = Clock::now();
      try {
        per_cell[i] = cells[i].run();
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        stop = true;
        return;
      }
      ran[i] = 1;
      if (config.fail_fast && !per_cell[i].empty()) stop = true;
      if (progress != nullptr) {
        const double secs =
            std::chrono::duration<double>(Clock::now() - cell_start).count();
        std::lock_guard<std::mutex> lock(mu);
        *progress << "[" << config.suite << "] " << cells[i].label << ' '
                  << (per_cell[i].empty() ? "ok" : "FAIL") << " ("
                  << secs << " s)\n";
      }
    }
  };

  const unsigned jobs = std::max(1u, config.parallelism);
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  VerifyResult result;
  result.suite = config.suite;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!ran[i]) continue;
    ++result.cells;
    result.knife_edge_cells += cells[i].knife_edge;
    for (auto& d : per_cell[i]) result.discrepancies.push_back(std::move(d));
  }
  result.seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

}  // namespace simcore::cli
