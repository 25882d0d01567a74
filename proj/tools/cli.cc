/*
 * Copyright 2026 The groupauth Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "groupauth/errors.h"
#include "groupauth/fixtures.h"
#include "groupauth/nscrypt.h"
#include "groupauth/policy.h"
#include "groupauth/protocol.h"
#include "groupauth/serialize.h"
#include "groupauth/sharesplit.h"

namespace groupauth::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Bad arguments or unreadable input; exits with kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  // keygen
  std::size_t n = 0;
  std::string force_p, force_s, prime_strategy = "least";
  // compile / audit
  std::string policy, universe, mode, merge, partition = "balanced", key;
  std::optional<std::size_t> max_size;
  bool pack = false;
  // challenge
  std::string pub, state_path, plaintext;
  std::optional<std::size_t> slots;
  bool per_index_random = false;
  // respond
  std::string share, challenge, null_policy = "one";
  // verify
  std::vector<std::string> responses;
  bool no_merged = false;
  // audit
  std::string shares_dir;
  std::size_t trials = 1;
  // demo
  std::string fixture;
  // shared
  std::string seed, output;
  bool json_output = false;
};

std::string Load(FileSystem& files, const std::string& path) {
  try {
    return files.Read(path);
  } catch (const std::exception& e) {
    throw UsageError("cannot read " + path + ": " + e.what());
  }
}

// Runs a document parser, tagging schema errors with the file name.
template <typename Parse>
auto ParseFile(FileSystem& files, const std::string& path, Parse parse) {
  const std::string text = Load(files, path);
  try {
    return parse(text);
  } catch (const SchemaError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Rng MakeRng(const std::string& seed) {
  if (seed.empty()) return Rng::FromEntropy();
  try {
    return Rng::FromHex(seed);
  } catch (const DomainError& e) {
    throw UsageError(std::string("--seed: ") + e.what());
  }
}

Nat DecimalFlag(const std::string& flag, const std::string& text) {
  try {
    return ParseDecimal(text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::string PrimeSet(const std::vector<Nat>& primes) {
  std::string out = "{";
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i) out += ",";
    out += primes[i].str();
  }
  return out + "}";
}

std::string PrimeSet(const PrimeSubset& subset) {
  std::vector<Nat> primes;
  for (const auto& entry : subset) primes.push_back(entry.prime);
  return PrimeSet(primes);
}

std::vector<std::size_t> AllIndices(std::size_t n) {
  std::vector<std::size_t> out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

void PrintPlan(std::ostream& out, const SlotPlan& plan,
               const std::vector<Nat>& primes) {
  const Universe& u = plan.universe;
  out << "slot";
  for (const auto& name : u.names()) out << "  " << name;
  out << "  authorized\n";
  for (std::size_t i = 0; i < plan.slots.size(); ++i) {
    const SlotAssignment& slot = plan.slots[i];
    out << std::setw(4) << i + 1;
    for (std::size_t h = 0; h < u.size(); ++h) {
      out << "  ";
      auto it = slot.member_part.find(h);
      if (it == slot.member_part.end()) {
        out << "-";
        continue;
      }
      std::vector<Nat> part;
      for (std::size_t index : slot.parts[it->second]) {
        part.push_back(primes[index]);
      }
      out << PrimeSet(part);
    }
    out << "  " << FormatFamily(AuthorizedGroups(slot), u) << "\n";
  }
}

void WriteShares(FileSystem& files, const std::string& dir,
                 const std::map<std::string, std::string>& documents) {
  files.CreateDirectories(dir);
  for (const auto& [holder, text] : documents) {
    files.Write(fs::path(dir) / ShareFileName(holder), text);
  }
}

Universe UniverseFlag(const std::string& csv) {
  try {
    return Universe::FromCsv(csv);
  } catch (const DomainError& e) {
    throw UsageError(std::string("--universe: ") + e.what());
  }
}

int Keygen(const Options& o, std::ostream& out, FileSystem& files) {
  KeygenOptions options;
  options.n = o.n;
  if (o.prime_strategy == "random") {
    options.strategy = PrimeStrategy::kSeededRandom;
  } else if (o.prime_strategy != "least") {
    throw UsageError("--prime must be least or random");
  }
  if (!o.force_p.empty()) options.force_p = DecimalFlag("--force-p", o.force_p);
  if (!o.force_s.empty()) options.force_s = DecimalFlag("--force-s", o.force_s);
  Rng rng = MakeRng(o.seed);
  KeyPair keys;
  try {
    keys = groupauth::Keygen(options, rng);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  files.CreateDirectories(o.output);
  files.Write(fs::path(o.output) / "pub.json", Serialize(keys.pub));
  files.Write(fs::path(o.output) / "priv.json", Serialize(keys.priv));
  out << "n=" << keys.pub.n() << " p=" << keys.pub.p << "\n";
  for (std::size_t i = 0; i < keys.pub.n(); ++i) {
    out << "v" << i + 1 << " = " << keys.pub.v[i] << "\n";
  }
  return kExitOk;
}

int Compile(const Options& o, std::ostream& out, std::ostream& err,
            FileSystem& files) {
  const Universe universe = UniverseFlag(o.universe);
  const Expr expr = ParsePolicy(o.policy, universe);
  const Mode mode = ParseMode(o.mode);
  const PrivateKey priv = ParseFile(files, o.key, ParsePrivateKey);
  Rng rng = MakeRng(o.seed);
  PartitionStrategy strategy = PartitionStrategy::kBalancedContiguous;
  if (o.partition == "random") {
    strategy = PartitionStrategy::kSeededRandom;
  } else if (o.partition != "balanced") {
    throw UsageError("--partition must be balanced or random");
  }

  std::map<std::string, std::string> documents;
  if (mode == Mode::kMonotone) {
    if (!o.merge.empty() && o.merge != "or") {
      throw UsageError("monotone mode merges with or");
    }
    if (o.max_size) throw UsageError("--max-size needs --mode sequence");
    if (o.pack) throw UsageError("--pack needs --mode sequence");
    if (!IsMonotone(expr)) {
      err << "policy is not monotone (it contains NOT); use --mode sequence\n";
      return kExitFailure;
    }
    const MonotoneSplit split = BlSplit(expr, universe, AllIndices(priv.n()),
                                        priv.n(), strategy, &rng);
    for (const auto& [holder, share] : IssueMonotone(split, priv)) {
      documents[holder] = Serialize(share);
      out << holder << "  " << PrimeSet(share.primes) << "\n";
    }
  } else {
    const MergeRule merge = ParseMergeRule(o.merge.empty() ? "sum" : o.merge);
    if (merge == MergeRule::kOr) throw UsageError("sequence mode merges with sum or xor");
    const GroupFamily family = AuthorizedFamily(expr, universe, o.max_size);
    if (family.empty()) {
      err << "policy authorizes no group\n";
      return kExitFailure;
    }
    const SlotPlan plan = o.pack ? SlotsPacked(family, universe, priv.n())
                                 : SlotsBaseline(family, universe, priv.n());
    if (merge == MergeRule::kXor && HasSharedParts(plan)) {
      err << "the packed plan gives several holders the same part; xor merging "
             "cancels repeated parts, so compile without --pack\n";
      return kExitFailure;
    }
    for (const auto& [holder, share] : IssueSequence(plan, priv)) {
      documents[holder] = Serialize(share);
    }
    out << family.size() << " groups, " << plan.slots.size() << " slots\n";
    PrintPlan(out, plan, priv.primes);
  }
  WriteShares(files, o.output, documents);
  return kExitOk;
}

int MakeChallengeCommand(const Options& o, std::ostream& out,
                         FileSystem& files) {
  const PublicKey pub = ParseFile(files, o.pub, ParsePublicKey);
  ChallengeOptions options;
  options.slot_count = o.slots.value_or(1);
  const std::string mode =
      !o.mode.empty() ? o.mode : (o.slots ? "sequence" : "monotone");
  options.mode = ParseMode(mode);
  options.merge = ParseMergeRule(
      !o.merge.empty() ? o.merge
                       : (options.mode == Mode::kMonotone ? "or" : "sum"));
  options.per_index_random = o.per_index_random;
  ValidateChallengeOptions(options);
  Rng rng = MakeRng(o.seed);

  std::pair<Challenge, VerifierState> session;
  if (!o.plaintext.empty()) {
    char id[33];
    std::snprintf(id, sizeof(id), "%016llx%016llx",
                  static_cast<unsigned long long>(rng.Next()),
                  static_cast<unsigned long long>(rng.Next()));
    session = MakeChallengeFor(pub, options,
                               {DecimalFlag("--plaintext", o.plaintext)}, id);
  } else {
    session = MakeChallenge(pub, options, rng);
  }
  files.Write(o.output, Serialize(session.first));
  files.Write(o.state_path, Serialize(session.second));
  out << "session " << session.first.session_id << "\n";
  return kExitOk;
}

int Respond(const Options& o, std::ostream& out, FileSystem& files) {
  const Challenge challenge = ParseFile(files, o.challenge, ParseChallenge);
  const NullPolicy null_policy = ParseNullPolicy(o.null_policy);
  const std::string text = Load(files, o.share);
  ResponseVector response;
  try {
    const std::string kind = DocumentKind(text);
    if (kind == kKindShareMonotone) {
      response = TokenRespond(ParseKeyShare(text), challenge);
    } else if (kind == kKindShareSequence) {
      Rng rng = MakeRng(o.seed);
      response = TokenRespond(ParseShareSequence(text), challenge,
                              null_policy, rng);
    } else {
      throw SchemaError("kind", "expected a share document");
    }
  } catch (const SchemaError& e) {
    throw UsageError(o.share + ": " + e.what());
  }
  files.Write(o.output, Serialize(response));
  out << "wrote " << response.values.size() << " value(s)\n";
  return kExitOk;
}

void PrintVerdict(std::ostream& out, const Verdict& verdict, bool as_json) {
  if (as_json) {
    out << Serialize(verdict);
    return;
  }
  if (verdict.accepted) {
    out << "accepted (slot " << *verdict.matching_slot + 1 << ")\n";
  } else {
    out << "rejected\n";
  }
}

int VerifyCommand(const Options& o, std::ostream& out, std::ostream& err,
                  FileSystem& files) {
  const VerifierState state = ParseFile(files, o.state_path, ParseVerifierState);
  if (!o.merge.empty() && ParseMergeRule(o.merge) != state.merge) {
    throw UsageError("--merge " + o.merge + " differs from the session's " +
                     std::string(ToString(state.merge)));
  }
  std::vector<ResponseVector> responses;
  for (const std::string& path : o.responses) {
    responses.push_back(ParseFile(files, path, ParseResponse));
    if (responses.back().session_id != state.session_id) {
      err << path << ": response belongs to another session\n";
      return kExitFailure;
    }
  }
  const Verdict verdict =
      Verify(state, Merge(responses, state.merge, state.slot_count),
             !o.no_merged);
  if (!o.output.empty()) files.Write(o.output, Serialize(verdict));
  PrintVerdict(out, verdict, o.json_output);
  return verdict.accepted ? kExitOk : kExitFailure;
}

void PrintAudit(std::ostream& out, const AuditReport& report,
                const GroupFamily& expected, const Universe& u,
                bool as_json) {
  std::vector<Group> order;
  for (const auto& [group, count] : report.acceptance_counts) {
    order.push_back(group);
  }
  std::sort(order.begin(), order.end());
  if (as_json) {
    json subsets = json::array();
    for (Group g : order) {
      subsets.push_back({{"group", FormatGroup(g, u)},
                         {"expected", expected.contains(g)},
                         {"accepted", report.acceptance_counts.at(g)}});
    }
    json doc = {{"trials", report.trials.size()},
                {"all_agree", report.all_agree},
                {"subsets", subsets}};
    out << doc.dump(2) << "\n";
    return;
  }
  const std::size_t trials = report.trials.size();
  out << "group       expected  accepted\n";
  for (Group g : order) {
    const std::size_t count = report.acceptance_counts.at(g);
    const bool want = expected.contains(g);
    const bool ok = count == (want ? trials : 0);
    out << std::left << std::setw(12) << FormatGroup(g, u) << std::setw(10)
        << (want ? "yes" : "no") << count << "/" << trials
        << (ok ? "" : "  MISMATCH") << "\n";
  }
  out << std::right;
  std::size_t agreeing = 0;
  for (const auto& trial : report.trials) agreeing += trial.agrees;
  out << agreeing << "/" << trials << " trials agree with the policy\n";
}

int AuditCommand(const Options& o, std::ostream& out, FileSystem& files) {
  const Universe universe = UniverseFlag(o.universe);
  const Expr expr = ParsePolicy(o.policy, universe);
  const PrivateKey priv = ParseFile(files, o.key, ParsePrivateKey);

  std::map<std::string, KeyShare> monotone;
  std::map<std::string, ShareSequence> sequence;
  for (const std::string& name : universe.names()) {
    const fs::path path = fs::path(o.shares_dir) / ShareFileName(name);
    if (!files.Exists(path)) continue;
    const std::string text = Load(files, path.string());
    try {
      if (DocumentKind(text) == kKindShareMonotone) {
        monotone.emplace(name, ParseKeyShare(text));
      } else {
        sequence.emplace(name, ParseShareSequence(text));
      }
    } catch (const SchemaError& e) {
      throw UsageError(path.string() + ": " + e.what());
    }
  }
  if (monotone.empty() == sequence.empty()) {
    throw UsageError(o.shares_dir +
                     ": expected share files of a single kind for the universe");
  }
  ShareBundle bundle{universe, {}};
  if (!monotone.empty()) {
    bundle.shares = std::move(monotone);
  } else {
    bundle.shares = std::move(sequence);
  }

  AuditOptions options;
  options.trials = o.trials;
  options.merge = ParseMergeRule(o.merge.empty() ? "sum" : o.merge);
  options.null_policy = ParseNullPolicy(o.null_policy);
  options.per_index_random = o.per_index_random;
  if (!o.plaintext.empty()) {
    options.fixed_plaintext = DecimalFlag("--plaintext", o.plaintext);
  }
  if (bundle.mode() == Mode::kMonotone) options.merge = MergeRule::kOr;
  if (bundle.mode() == Mode::kSequence && options.merge == MergeRule::kOr) {
    throw UsageError("sequence shares merge with sum or xor");
  }
  const GroupFamily expected = AuthorizedFamily(expr, universe, o.max_size);
  Rng rng = MakeRng(o.seed);
  const AuditReport report = Audit(priv, bundle, expected, options, rng);
  PrintAudit(out, report, expected, universe, o.json_output);
  return report.all_agree ? kExitOk : kExitFailure;
}

int DemoAirplane(std::ostream& out) {
  using namespace fixtures;
  const Universe u = AirplaneUniverse();
  const KeyPair keys = AirplaneKeys();
  bool ok = true;

  out << "policy: " << kAirplanePolicy << " (at most " << kAirplaneSeats
      << " seats)\n";
  out << "p = " << keys.pub.p << ", s = " << keys.priv.s << "\n";
  const bool table_matches = keys.pub.v == PublishedAirplanePublicValues();
  out << "public values " << (table_matches ? "match" : "DIFFER from")
      << " the published table\n";
  ok = ok && table_matches;

  const Nat m = AirplanePlaintext();
  const Nat c = Encrypt(keys.pub, m);
  out << "m = " << m << ", c = " << c << "\n";
  if (c != PrintedAirplaneCiphertext()) {
    out << "  erratum: the printed ciphertext is " << PrintedAirplaneCiphertext()
        << ", which is not a valid encryption of m\n";
  }
  ok = ok && Decrypt(keys.priv, c) == m;

  const SlotPlan plan = PublishedAirplanePlan();
  out << "\nshare plan\n";
  PrintPlan(out, plan, keys.priv.primes);

  const auto shares = IssueSequence(plan, keys.priv);
  const ChallengeOptions options{Mode::kSequence, MergeRule::kSum,
                                 plan.slots.size(), false};
  const auto [challenge, state] = MakeChallengeFor(keys.pub, options, {m}, "demo");
  Rng rng(0);
  std::vector<ResponseVector> responses;
  for (const auto& name : u.names()) {
    responses.push_back(
        TokenRespond(shares.at(name), challenge, NullPolicy::kOne, rng));
  }
  out << "\nresponses to c\nslot";
  for (const auto& name : u.names()) out << std::setw(7) << name;
  out << "\n";
  for (std::size_t i = 0; i < plan.slots.size(); ++i) {
    out << std::setw(4) << i + 1;
    for (const auto& r : responses) out << std::setw(7) << r.values[i];
    out << "\n";
  }
  const auto printed = PrintedAirplaneResponses();
  for (std::size_t i = 0; i < printed.size(); ++i) {
    for (std::size_t h = 0; h < u.size(); ++h) {
      if (printed[i][h] != responses[h].values[i]) {
        out << "  erratum: slot " << i + 1 << " " << u.name(h)
            << " is printed as " << printed[i][h] << "\n";
      }
    }
  }

  const GroupFamily expected = AirplaneGroups();
  AuditOptions audit_options;
  audit_options.fixed_plaintext = m;
  const ShareBundle bundle{u, shares};
  const AuditReport report =
      Audit(keys.priv, bundle, expected, audit_options, rng);
  out << "\naudit of all " << report.acceptance_counts.size()
      << " subsets (sum merge, null 1)\n";
  out << "accepted: " << FormatFamily(report.trials[0].accepted, u) << "\n";
  out << "policy:   " << FormatFamily(expected, u) << "\n";
  ok = ok && report.all_agree;

  const SlotPlan packed = SlotsPacked(expected, u, keys.priv.n());
  const AuditReport packed_report =
      Audit(keys.priv, {u, IssueSequence(packed, keys.priv)}, expected,
            audit_options, rng);
  out << "compiled packed plan: " << packed.slots.size() << " slots, "
      << (packed_report.all_agree ? "exact" : "NOT exact") << "\n";
  ok = ok && packed_report.all_agree;

  out << (ok ? "demo ok\n" : "demo FAILED\n");
  return ok ? kExitOk : kExitFailure;
}

int DemoSmall(std::ostream& out) {
  using namespace fixtures;
  const Universe u = SmallUniverse();
  const KeyPair keys = SmallKeys();
  const Expr expr = ParsePolicy(kSmallPolicy, u);
  const auto shares = IssueMonotone(
      BlSplit(expr, u, AllIndices(keys.priv.n()), keys.priv.n()), keys.priv);
  out << "policy: " << kSmallPolicy << "\n";
  out << "p = " << keys.pub.p << ", s = " << keys.priv.s << "\n";
  for (const auto& [name, share] : shares) {
    out << name << "  " << PrimeSet(share.primes) << "\n";
  }
  const auto [challenge, state] =
      MakeChallengeFor(keys.pub, {}, {SmallPlaintext()}, "demo");
  out << "m = " << SmallPlaintext() << ", c = " << challenge.ciphertexts[0]
      << "\n";
  bool ok = challenge.ciphertexts[0] == SmallCiphertext();
  std::map<std::string, ResponseVector> answers;
  for (const auto& [name, share] : shares) {
    answers[name] = TokenRespond(share, challenge);
    out << name << " -> " << answers[name].values[0] << "\n";
  }
  for (Group g = Group(1); g.bits() < (1U << u.size()); g = Group(g.bits() + 1)) {
    std::vector<ResponseVector> present;
    for (std::size_t h : g.members()) present.push_back(answers.at(u.name(h)));
    const Nat merged = MergeMonotone(present);
    const bool accepted = Verify(state, {merged}).accepted;
    out << std::left << std::setw(12) << FormatGroup(g, u) << std::right
        << merged << (accepted ? "  accepted" : "  rejected") << "\n";
    ok = ok && accepted == Evaluate(expr, g);
  }
  out << (ok ? "demo ok\n" : "demo FAILED\n");
  return ok ? kExitOk : kExitFailure;
}

int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err, FileSystem& files) {
  Options o;
  CLI::App app{"Group authentication with split Naccache-Stern keys",
               "groupauth"};
  app.require_subcommand(1);

  auto* keygen = app.add_subcommand("keygen", "Generate a key pair");
  keygen->add_option("--n", o.n, "Number of small primes")->required();
  keygen->add_option("--seed", o.seed, "Hex seed");
  keygen->add_option("--force-p", o.force_p, "Use this prime modulus");
  keygen->add_option("--force-s", o.force_s, "Use this secret exponent");
  keygen->add_option("--prime", o.prime_strategy, "least or random");
  keygen->add_option("-o,--output", o.output, "Output directory")->required();

  auto* compile = app.add_subcommand("compile", "Issue shares for a policy");
  compile->add_option("--policy", o.policy)->required();
  compile->add_option("--universe", o.universe)->required();
  compile->add_option("--max-size", o.max_size);
  compile->add_option("--mode", o.mode)->required();
  compile->add_option("--merge", o.merge, "sum or xor (sequence mode)");
  compile->add_flag("--pack", o.pack, "Pack groups into fewer slots");
  compile->add_option("--partition", o.partition, "balanced or random");
  compile->add_option("--seed", o.seed);
  compile->add_option("--key", o.key, "Private key file")->required();
  compile->add_option("-o,--output", o.output, "Share directory")->required();

  auto* challenge = app.add_subcommand("challenge", "Start a session");
  challenge->add_option("--pub", o.pub)->required();
  challenge->add_option("--slots", o.slots);
  challenge->add_option("--mode", o.mode);
  challenge->add_option("--merge", o.merge);
  challenge->add_flag("--per-index-random", o.per_index_random);
  challenge->add_option("--plaintext", o.plaintext, "Fixed m instead of a draw");
  challenge->add_option("--seed", o.seed);
  challenge->add_option("-o,--output", o.output)->required();
  challenge->add_option("--state", o.state_path)->required();

  auto* respond = app.add_subcommand("respond", "Answer as one token");
  respond->add_option("--share", o.share)->required();
  respond->add_option("--challenge", o.challenge)->required();
  respond->add_option("--null", o.null_policy, "one or random");
  respond->add_option("--seed", o.seed);
  respond->add_option("-o,--output", o.output)->required();

  auto* verify = app.add_subcommand("verify", "Merge responses and decide");
  verify->add_option("--state", o.state_path)->required();
  verify->add_option("--responses", o.responses)->expected(0, -1);
  verify->add_option("--merge", o.merge);
  verify->add_flag("--json", o.json_output);
  verify->add_flag("--no-merged", o.no_merged, "Omit merged values");
  verify->add_option("-o,--output", o.output, "Also write the verdict here");

  auto* audit = app.add_subcommand("audit", "Check every subset end to end");
  audit->add_option("--key", o.key)->required();
  audit->add_option("--shares", o.shares_dir)->required();
  audit->add_option("--policy", o.policy)->required();
  audit->add_option("--universe", o.universe)->required();
  audit->add_option("--max-size", o.max_size);
  audit->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  audit->add_option("--merge", o.merge);
  audit->add_option("--null", o.null_policy);
  audit->add_option("--plaintext", o.plaintext);
  audit->add_flag("--per-index-random", o.per_index_random);
  audit->add_option("--seed", o.seed);
  audit->add_flag("--json", o.json_output);

  auto* demo = app.add_subcommand("demo", "Rebuild the worked examples");
  demo->add_option("--fixture", o.fixture)
      ->required()
      ->check(CLI::IsMember({"airplane", "small"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  if (*keygen) return Keygen(o, out, files);
  if (*compile) return Compile(o, out, err, files);
  if (*challenge) return MakeChallengeCommand(o, out, files);
  if (*respond) return Respond(o, out, files);
  if (*verify) return VerifyCommand(o, out, err, files);
  if (*audit) return AuditCommand(o, out, files);
  return o.fixture == "airplane" ? DemoAirplane(out) : DemoSmall(out);
}

}  // namespace

std::string DiskFileSystem::Read(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("no such file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void DiskFileSystem::Write(const fs::path& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot write " + path.string());
  file << contents;
}

bool DiskFileSystem::Exists(const fs::path& path) { return fs::exists(path); }

void DiskFileSystem::CreateDirectories(const fs::path& path) {
  fs::create_directories(path);
}

std::string ShareFileName(const std::string& holder) {
  return "share_" + holder + ".json";
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err, FileSystem& files) {
  try {
    return Dispatch(args, out, err, files);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const groupauth::ParseError& e) {
    err << "error: policy: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownIdentifier& e) {
    err << "error: policy: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  DiskFileSystem files;
  return RunCli(args, out, err, files);
}

}  // namespace groupauth::cli
