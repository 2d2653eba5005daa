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

#include "cli/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cli/verify.hpp"
#include "simcore/bijections.hpp"
#include "simcore/core_predicates.hpp"
#include "simcore/enumeration.hpp"
#include "simcore/errors.hpp"
#include "simcore/extremal.hpp"
#include "simcore/json_io.hpp"
#include "simcore/partition.hpp"
#include "simcore/stream_writer.hpp"

namespace simcore::cli {

namespace {

constexpr char kMaxCountEnv[] = "SIMCORE_MAX_COUNT";

struct GlobalOptions {
  std::optional<std::uint64_t> max_count;
  std::optional<std::uint64_t> max_poset;
};

ResourceGuard MakeGuard(const GlobalOptions& g) {
  ResourceGuard guard;
  if (const char* env = std::getenv(kMaxCountEnv); env != nullptr) {
    const auto values = ParseIntegerList(env);
    if (values.size() != 1) {
      throw ParseError(std::string(kMaxCountEnv) + " must be one integer");
    }
    guard.max_estimated_count = values[0];
  }
  if (g.max_count) guard.max_estimated_count = *g.max_count;
  if (g.max_poset) guard.max_poset_elements = *g.max_poset;
  return guard;
}

void PrintReport(const ExtremalReport& report, bool json, bool witness,
                 std::ostream& out) {
  if (json) {
    out << ToJson(report).dump() << '\n';
    return;
  }
  out << "largest_size " << report.largest_size << '\n'
      << "maximizer_count " << report.maximizer_count << '\n';
  if (witness) {
    for (const Partition& p : report.maximizers) {
      out << "maximizer " << p << '\n';
    }
  }
}

// Orders the moduli so that a < b.
std::pair<Modulus, Modulus> Normalized(Modulus a, Modulus b) {
  return {std::min(a, b), std::max(a, b)};
}

// Distinct-part (a, b)-cores with b = ma + 1 or b = ma - 1 are counted by
// the sequence transfer matrix instead of by enumeration.
std::optional<std::uint64_t> CountByTransferMatrix(Modulus a, Modulus b) {
  if (a < 2) return std::nullopt;
  if (b % a == 1) return CountDistinctCore(a, b / a, Family::kPlus);
  if (b % a == a - 1) return CountDistinctCore(a, b / a + 1, Family::kMinus);
  return std::nullopt;
}

std::uint64_t CountByEnumeration(Modulus a, Modulus b, bool distinct,
                                 const ResourceGuard& guard) {
  CoreBetaSetEnumerator it(a, b, distinct, guard);
  std::uint64_t n = 0;
  while (it.Advance()) ++n;
  return n;
}

void PrintRow(std::ostream& out, StreamFormat format,
              const std::vector<std::string>& keys,
              const nlohmann::json& row) {
  switch (format) {
    case StreamFormat::kJson:
      out << row.dump() << '\n';
      break;
    case StreamFormat::kCsv: {
      for (std::size_t i = 0; i < keys.size(); ++i) {
        out << (i ? "," : "") << keys[i];
      }
      out << '\n';
      for (std::size_t i = 0; i < keys.size(); ++i) {
        const auto& v = row.at(keys[i]);
        out << (i ? "," : "") << (v.is_string() ? v.get<std::string>() : v.dump());
      }
      out << '\n';
      break;
    }
    case StreamFormat::kText:
      for (const auto& key : keys) {
        const auto& v = row.at(key);
        out << key << ' '
            << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      }
      break;
  }
}

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {
    app_.require_subcommand(1);
    app_.option_defaults()->always_capture_default();
    app_.add_option("--max-count", global_.max_count,
                    "Refuse full enumeration of families larger than this "
                    "(also " + std::string(kMaxCountEnv) + ")");
    app_.add_option("--max-poset", global_.max_poset,
                    "Refuse enumeration over gap posets larger than this");
    AddPartitionCommands();
    AddPredicateCommands();
    AddSequenceCommands();
    AddExtremalCommands();
    AddEnumerationCommands();
    AddVerifyCommand();
  }

  int Run(const std::vector<std::string>& args) {
    std::vector<std::string> storage{"simcore"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());
    try {
      app_.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
      return app_.exit(e, out_, err_);
    } catch (const CLI::CallForAllHelp& e) {
      return app_.exit(e, out_, err_);
    } catch (const CLI::ParseError& e) {
      app_.exit(e, out_, err_);
      return kExitUsage;
    }
    try {
      return action_();
    } catch (const ResourceLimitExceeded& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitResource;
    } catch (const OverflowError& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitResource;
    } catch (const std::invalid_argument& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const std::exception& e) {
      err_ << "internal error: " << e.what() << '\n';
      return kExitDiscrepancy;
    }
  }

 private:
  CLI::App* Command(const std::string& name, const std::string& help,
                    std::function<int()> action) {
    CLI::App* sub = app_.add_subcommand(name, help);
    sub->callback([this, action = std::move(action)] { action_ = action; });
    return sub;
  }

  void AddPartitionCommands() {
    auto* hooks = Command("hooks", "Print the hook length of every box", [this] {
      const HookMatrix h = HookLengths(ParsePartition(text_));
      if (json_) {
        out_ << nlohmann::json(h).dump() << '\n';
      } else {
        for (const auto& row : h) {
          for (std::size_t j = 0; j < row.size(); ++j) {
            out_ << (j ? " " : "") << row[j];
          }
          out_ << '\n';
        }
      }
      return kExitOk;
    });
    AddPartitionArg(hooks);

    auto* beta = Command("beta", "Print the beta-set of a partition", [this] {
      const BetaSet b = ToBetaSet(ParsePartition(text_));
      if (json_) {
        out_ << nlohmann::json(b.elements()).dump() << '\n';
      } else {
        out_ << FormatBetaSet(b) << '\n';
      }
      return kExitOk;
    });
    AddPartitionArg(beta);

    auto* from_beta =
        Command("from-beta", "Recover a partition from its beta-set", [this] {
          const Partition p = FromBetaSet(ParseBetaSet(text_));
          if (json_) {
            out_ << ToJson(p).dump() << '\n';
          } else {
            out_ << FormatPartition(p) << '\n';
          }
          return kExitOk;
        });
    from_beta->add_option("beta", text_, "Comma-separated beta-set")
        ->required();
    from_beta->add_flag("--json", json_, "Emit JSON");
  }

  void AddPredicateCommands() {
    auto* is_core = Command(
        "is-core", "Test whether a partition is a core for every modulus",
        [this] {
          const Partition p = ParsePartition(text_);
          const auto moduli = ParseIntegerList(moduli_text_);
          if (moduli.empty()) throw InvalidArgument("--t needs a modulus");
          bool verdict = IsSimultaneousCore(p, moduli);
          if (distinct_) verdict = verdict && HasDistinctParts(p);
          if (json_) {
            out_ << nlohmann::json{{"partition", ToJson(p)},
                                   {"moduli", moduli},
                                   {"distinct", distinct_},
                                   {"result", verdict}}
                        .dump()
                 << '\n';
          } else {
            out_ << (verdict ? "true" : "false") << '\n';
          }
          return kExitOk;
        });
    is_core->add_option("--t", moduli_text_, "Comma-separated moduli")
        ->required();
    is_core->add_flag("--distinct", distinct_, "Also require distinct parts");
    AddPartitionArg(is_core);

    auto* profile = Command(
        "profile", "Residue counts n_1..n_{t-1} of a t-core's beta-set",
        [this] {
          const Partition p = ParsePartition(text_);
          const ResidueProfile rp = ResidueProfileOf(p, t_);
          if (json_) {
            out_ << nlohmann::json{{"t", t_},
                                   {"counts", rp.counts()},
                                   {"size", SizeFromProfile(rp)}}
                        .dump()
                 << '\n';
          } else {
            out_ << FormatIntegerList(rp.counts()) << '\n';
          }
          return kExitOk;
        });
    profile->add_option("--t", t_, "Modulus")->required();
    AddPartitionArg(profile);
  }

  void AddSequenceCommands() {
    auto* to_seq = Command(
        "to-sequence", "Map a family member to its constrained sequence",
        [this] {
          const CoreSequence s =
              ToSequence(ParsePartition(text_), t_, m_, ParseFamily(family_));
          if (json_) {
            out_ << nlohmann::json(s.entries()).dump() << '\n';
          } else {
            out_ << FormatSequence(s) << '\n';
          }
          return kExitOk;
        });
    AddFamilyOptions(to_seq);
    AddPartitionArg(to_seq);

    auto* from_seq = Command(
        "from-sequence", "Map a constrained sequence back to its partition",
        [this] {
          const Partition p = FromSequence(
              ParseSequence(text_, t_, m_, ParseFamily(family_)));
          if (json_) {
            out_ << ToJson(p).dump() << '\n';
          } else {
            out_ << FormatPartition(p) << '\n';
          }
          return kExitOk;
        });
    AddFamilyOptions(from_seq);
    from_seq->add_option("sequence", text_, "Comma-separated entries")
        ->required();
    from_seq->add_flag("--json", json_, "Emit JSON");

    auto* sequences = Command(
        "sequences", "Stream every sequence of a family", [this] {
          RecordWriter writer(out_, ParseStreamFormat(format_),
                              RecordKind::kSequence);
          SequenceEnumerator it(t_, m_, ParseFamily(family_));
          while (auto s = it.Next()) writer.Write(*s);
          return kExitOk;
        });
    AddFamilyOptions(sequences);
    AddFormatOption(sequences);
  }

  void AddExtremalCommands() {
    auto* largest = Command(
        "largest", "Largest size and maximizers of a (t, mt+-1) family",
        [this] {
          PrintReport(Extremal(t_, m_, ParseFamily(family_)), json_, witness_,
                      out_);
          return kExitOk;
        });
    AddFamilyOptions(largest);
    largest->add_flag("--witness", witness_, "List the maximizers");
    largest->add_flag("--json", json_, "Emit JSON");

    auto* consecutive = Command(
        "largest-consecutive", "Largest (t, t+1)-cores with distinct parts", [this] {
          PrintReport(LargestTTPlus1(t_), json_, witness_, out_);
          return kExitOk;
        });
    consecutive->add_option("--t", t_, "Modulus")->required();
    consecutive->add_flag("--witness", witness_, "List the maximizers");
    consecutive->add_flag("--json", json_, "Emit JSON");
  }

  void AddEnumerationCommands() {
    auto* enumerate = Command(
        "enumerate", "Stream every (a, b)-core", [this] {
          const auto [a, b] = Normalized(a_, b_);
          const RecordKind kind =
              beta_ ? RecordKind::kBetaSet : RecordKind::kPartition;
          RecordWriter writer(out_, ParseStreamFormat(format_), kind);
          CoreBetaSetEnumerator it(a, b, distinct_, MakeGuard(global_));
          while (auto beta = it.Next()) {
            if (beta_) {
              writer.Write(*beta);
            } else {
              writer.Write(FromBetaSet(*beta));
            }
          }
          return kExitOk;
        });
    AddPairOptions(enumerate);
    enumerate->add_flag("--beta", beta_, "Emit beta-sets instead of partitions");
    AddFormatOption(enumerate);

    auto* count = Command("count", "Count a family", [this] {
      const StreamFormat format = ParseStreamFormat(format_);
      if (t_ != 0 || m_ != 0 || !family_.empty()) {
        if (a_ != 0 || b_ != 0) {
          throw InvalidArgument("give either --a/--b or --t/--m/--family");
        }
        if (family_.empty()) throw InvalidArgument("--family is required");
        const Family family = ParseFamily(family_);
        PrintCount(format, {{"t", t_}, {"m", m_}, {"family", family_}},
                   CountDistinctCore(t_, m_, family));
        return kExitOk;
      }
      const auto [a, b] = Normalized(a_, b_);
      ValidateCoprime(a, b);
      std::optional<std::uint64_t> n;
      if (distinct_) n = CountByTransferMatrix(a, b);
      if (!n) n = CountByEnumeration(a, b, distinct_, MakeGuard(global_));
      PrintCount(format, {{"a", a}, {"b", b}, {"distinct_only", distinct_}},
                 *n);
      return kExitOk;
    });
    count->add_option("--a", a_, "First modulus");
    count->add_option("--b", b_, "Second modulus");
    count->add_flag("--distinct", distinct_, "Only cores with distinct parts");
    count->add_option("--t", t_, "Modulus t of a (t, mt+-1) family");
    count->add_option("--m", m_, "Multiplier m of a (t, mt+-1) family");
    count->add_option("--family", family_, "plus or minus")
        ->check(CLI::IsMember({"plus", "minus"}));
    AddFormatOption(count);

    auto* stats = Command("stats", "Exact size statistics of a family", [this] {
      const auto [a, b] = Normalized(a_, b_);
      const FamilyStatsRecord record{
          a, b, distinct_, ComputeFamilyStats(a, b, distinct_, MakeGuard(global_))};
      PrintRow(out_, ParseStreamFormat(format_),
               {"a", "b", "distinct_only", "count", "largest_size",
                "maximizer_count", "total_size", "average_size"},
               ToJson(record));
      return kExitOk;
    });
    AddPairOptions(stats);
    AddFormatOption(stats);
  }

  void AddVerifyCommand() {
    auto* verify = Command(
        "verify", "Check closed forms and bijections against enumeration",
        [this] {
          VerifySuiteConfig config;
          config.suite = suite_;
          config.t_range = ParseRange(t_range_);
          config.m_range = ParseRange(m_range_);
          config.parallelism =
              jobs_ != 0 ? jobs_ : std::max(1u, std::thread::hardware_concurrency());
          config.fail_fast = fail_fast_;
          config.guard = MakeGuard(global_);
          const VerifyResult result =
              RunVerifySuite(config, quiet_ ? nullptr : &err_);
          out_ << ToJson(result).dump(2) << '\n';
          err_ << "suite " << result.suite << ": " << result.cells
               << " cells (" << result.knife_edge_cells
               << " knife-edge), " << result.discrepancies.size()
               << " discrepancies, " << result.seconds << " s\n";
          return result.passed() ? kExitOk : kExitDiscrepancy;
        });
    verify->add_option("--suite", suite_, "Suite to run")
        ->required()
        ->check(CLI::IsMember(VerifySuiteNames()));
    verify->add_option("--t", t_range_, "t range, A..B");
    verify->add_option("--m", m_range_, "m range, A..B");
    verify->add_option("--jobs", jobs_, "Worker threads (0 = all cores)");
    verify->add_flag("--fail-fast", fail_fast_, "Stop at the first failing cell");
    verify->add_flag("--quiet", quiet_, "Suppress per-cell progress");
  }

  void PrintCount(StreamFormat format, nlohmann::json row, std::uint64_t n) {
    if (format == StreamFormat::kText) {
      out_ << n << '\n';
      return;
    }
    std::vector<std::string> keys;
    for (const auto& [key, value] : row.items()) keys.push_back(key);
    row["count"] = n;
    keys.push_back("count");
    PrintRow(out_, format, keys, row);
  }

  void AddPartitionArg(CLI::App* sub) {
    sub->add_option("partition", text_, "Comma-separated parts, e.g. 7,2,1")
        ->required();
    sub->add_flag("--json", json_, "Emit JSON");
  }

  void AddFamilyOptions(CLI::App* sub) {
    sub->add_option("--t", t_, "Modulus t")->required();
    sub->add_option("--m", m_, "Multiplier m")->required();
    sub->add_option("--family", family_, "plus (mt+1) or minus (mt-1)")
        ->required()
        ->check(CLI::IsMember({"plus", "minus"}));
  }

  void AddPairOptions(CLI::App* sub) {
    sub->add_option("--a", a_, "First modulus")->required();
    sub->add_option("--b", b_, "Second modulus")->required();
    sub->add_flag("--distinct", distinct_, "Only cores with distinct parts");
  }

  void AddFormatOption(CLI::App* sub) {
    sub->add_option("--format", format_, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  }

  std::ostream& out_;
  std::ostream& err_;
  CLI::App app_{"Simultaneous core partitions with distinct parts",
                "simcore"};
  GlobalOptions global_;
  std::function<int()> action_;

  std::string text_;
  std::string moduli_text_;
  std::string family_;
  std::string format_ = "text";
  std::string suite_;
  std::string t_range_ = "2..12";
  std::string m_range_ = "1..5";
  std::uint64_t t_ = 0;
  std::uint64_t m_ = 0;
  std::uint64_t a_ = 0;
  std::uint64_t b_ = 0;
  unsigned jobs_ = 0;
  bool json_ = false;
  bool witness_ = false;
  bool distinct_ = false;
  bool beta_ = false;
  bool fail_fast_ = false;
  bool quiet_ = false;
};

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Cli cli(out, err);
  return cli.Run(args);
}

}  // namespace simcore::cli
