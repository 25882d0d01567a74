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

// Python bindings for the main groupauth operations.

#include <optional>
#include <string>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "groupauth/errors.h"
#include "groupauth/nscrypt.h"
#include "groupauth/policy.h"
#include "groupauth/protocol.h"
#include "groupauth/serialize.h"
#include "groupauth/sharesplit.h"

namespace py = pybind11;

// Nat <-> Python int, through the decimal representation.
namespace pybind11::detail {
template <>
struct type_caster<groupauth::Nat> {
  PYBIND11_TYPE_CASTER(groupauth::Nat, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    const std::string text = py::str(src);
    if (!text.empty() && text[0] == '-') return false;
    value = groupauth::Nat(text);
    return true;
  }

  static handle cast(const groupauth::Nat& n, return_value_policy, handle) {
    return PyLong_FromString(n.str().c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace groupauth {
namespace {

Rng SeededOrEntropy(std::optional<std::uint64_t> seed) {
  return seed ? Rng(*seed) : Rng::FromEntropy();
}

std::vector<std::vector<std::string>> FamilyNames(const GroupFamily& family,
                                                  const Universe& u) {
  std::vector<std::vector<std::string>> out;
  for (Group g : family) {
    std::vector<std::string> names;
    for (std::size_t h : g.members()) names.push_back(u.name(h));
    out.push_back(std::move(names));
  }
  return out;
}

std::vector<std::size_t> AllIndices(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

py::dict AuditToDict(const AuditReport& report, const GroupFamily& expected,
                     const Universe& u) {
  py::list subsets;
  for (const auto& [group, count] : report.acceptance_counts) {
    py::list names;
    for (std::size_t h : group.members()) names.append(u.name(h));
    py::dict row;
    row["group"] = names;
    row["expected"] = expected.contains(group);
    row["accepted"] = count;
    subsets.append(row);
  }
  py::dict out;
  out["trials"] = report.trials.size();
  out["all_agree"] = report.all_agree;
  out["subsets"] = subsets;
  return out;
}

}  // namespace
}  // namespace groupauth

PYBIND11_MODULE(_core, m) {
  using namespace groupauth;
  m.doc() = "Group authentication with split Naccache-Stern keys";

  auto base = py::register_exception<Error>(m, "GroupAuthError");
  py::register_exception<DomainError>(m, "DomainError", base);
  py::register_exception<MalformedCiphertext>(m, "MalformedCiphertext", base);
  py::register_exception<ParseError>(m, "PolicyParseError", base);
  py::register_exception<UnknownIdentifier>(m, "UnknownIdentifier", base);
  py::register_exception<InsufficientPrimes>(m, "InsufficientPrimes", base);
  py::register_exception<NonMonotone>(m, "NonMonotone", base);
  py::register_exception<GroupLargerThanPrimeCount>(
      m, "GroupLargerThanPrimeCount", base);
  py::register_exception<SchemaError>(m, "SchemaError", base);

  py::class_<PublicKey>(m, "PublicKey")
      .def_readonly("p", &PublicKey::p)
      .def_readonly("v", &PublicKey::v)
      .def_property_readonly("n", &PublicKey::n)
      .def("to_json", [](const PublicKey& k) { return Serialize(k); })
      .def_static("from_json", &ParsePublicKey)
      .def(py::self == py::self);

  py::class_<PrivateKey>(m, "PrivateKey")
      .def_readonly("p", &PrivateKey::p)
      .def_readonly("s", &PrivateKey::s)
      .def_readonly("primes", &PrivateKey::primes)
      .def_property_readonly("n", &PrivateKey::n)
      .def_property_readonly("public_key", &DerivePublicKey)
      .def("to_json", [](const PrivateKey& k) { return Serialize(k); })
      .def_static("from_json", &ParsePrivateKey)
      .def(py::self == py::self);

  py::class_<KeyShare>(m, "KeyShare")
      .def_readonly("holder", &KeyShare::holder)
      .def_property_readonly("primes",
                             [](const KeyShare& s) {
                               std::vector<Nat> out;
                               for (const auto& e : s.primes) out.push_back(e.prime);
                               return out;
                             })
      .def("to_json", [](const KeyShare& s) { return Serialize(s); })
      .def_static("from_json", &ParseKeyShare);

  py::class_<ShareSequence>(m, "ShareSequence")
      .def_readonly("holder", &ShareSequence::holder)
      .def_property_readonly(
          "slots",
          [](const ShareSequence& s) {
            std::vector<std::optional<std::vector<Nat>>> out;
            for (const auto& slot : s.slots) {
              if (!slot) {
                out.emplace_back();
                continue;
              }
              std::vector<Nat> primes;
              for (const auto& e : *slot) primes.push_back(e.prime);
              out.emplace_back(std::move(primes));
            }
            return out;
          })
      .def("to_json", [](const ShareSequence& s) { return Serialize(s); })
      .def_static("from_json", &ParseShareSequence);

  py::class_<Challenge>(m, "Challenge")
      .def_readonly("session_id", &Challenge::session_id)
      .def_readonly("slot_count", &Challenge::slot_count)
      .def_readonly("ciphertexts", &Challenge::ciphertexts)
      .def("to_json", [](const Challenge& c) { return Serialize(c); })
      .def_static("from_json", &ParseChallenge);

  py::class_<VerifierState>(m, "VerifierState")
      .def_readonly("session_id", &VerifierState::session_id)
      .def_readonly("plaintexts", &VerifierState::plaintexts)
      .def("to_json", [](const VerifierState& s) { return Serialize(s); })
      .def_static("from_json", &ParseVerifierState);

  py::class_<ResponseVector>(m, "Response")
      .def_readonly("session_id", &ResponseVector::session_id)
      .def_readonly("values", &ResponseVector::values)
      .def("to_json", [](const ResponseVector& r) { return Serialize(r); })
      .def_static("from_json", &ParseResponse);

  py::class_<Verdict>(m, "Verdict")
      .def_readonly("session_id", &Verdict::session_id)
      .def_readonly("accepted", &Verdict::accepted)
      .def_readonly("matching_slot", &Verdict::matching_slot)
      .def_readonly("merged", &Verdict::merged)
      .def("__bool__", [](const Verdict& v) { return v.accepted; })
      .def("to_json", [](const Verdict& v) { return Serialize(v); })
      .def_static("from_json", &ParseVerdict);

  m.def(
      "keygen",
      [](std::size_t n, std::optional<std::uint64_t> seed,
         std::optional<Nat> force_p, std::optional<Nat> force_s,
         bool random_prime) {
        KeygenOptions options;
        options.n = n;
        options.force_p = force_p;
        options.force_s = force_s;
        if (random_prime) options.strategy = PrimeStrategy::kSeededRandom;
        Rng rng = SeededOrEntropy(seed);
        return Keygen(options, rng).priv;
      },
      py::arg("n"), py::kw_only(), py::arg("seed") = py::none(),
      py::arg("force_p") = py::none(), py::arg("force_s") = py::none(),
      py::arg("random_prime") = false,
      "Generate a private key; its public half is .public_key.");
  m.def("encrypt", &Encrypt, py::arg("pub"), py::arg("m"));
  m.def("decrypt", &Decrypt, py::arg("priv"), py::arg("c"));

  m.def(
      "authorized_groups",
      [](const std::string& policy, const std::vector<std::string>& universe,
         std::optional<std::size_t> max_size) {
        const Universe u(universe);
        return FamilyNames(AuthorizedFamily(ParsePolicy(policy, u), u, max_size),
                           u);
      },
      py::arg("policy"), py::arg("universe"), py::arg("max_size") = py::none());
  m.def(
      "is_monotone",
      [](const std::string& policy, const std::vector<std::string>& universe) {
        return IsMonotone(ParsePolicy(policy, Universe(universe)));
      },
      py::arg("policy"), py::arg("universe"));

  m.def(
      "compile_monotone",
      [](const std::string& policy, const std::vector<std::string>& universe,
         const PrivateKey& priv) {
        const Universe u(universe);
        return IssueMonotone(BlSplit(ParsePolicy(policy, u), u,
                                     AllIndices(priv.n()), priv.n()),
                             priv);
      },
      py::arg("policy"), py::arg("universe"), py::arg("priv"),
      "One share per holder; OR-merged responses cover m iff the policy holds.");
  m.def(
      "compile_sequence",
      [](const std::string& policy, const std::vector<std::string>& universe,
         const PrivateKey& priv, std::optional<std::size_t> max_size,
         bool pack) {
        const Universe u(universe);
        const GroupFamily family =
            AuthorizedFamily(ParsePolicy(policy, u), u, max_size);
        const SlotPlan plan = pack ? SlotsPacked(family, u, priv.n())
                                   : SlotsBaseline(family, u, priv.n());
        return IssueSequence(plan, priv);
      },
      py::arg("policy"), py::arg("universe"), py::arg("priv"),
      py::arg("max_size") = py::none(), py::arg("pack") = false);

  m.def(
      "make_challenge",
      [](const PublicKey& pub, const std::string& mode,
         std::optional<std::string> merge, std::size_t slots,
         std::optional<Nat> plaintext, bool per_index_random,
         std::optional<std::uint64_t> seed) {
        ChallengeOptions options;
        options.mode = ParseMode(mode);
        options.merge = ParseMergeRule(
            merge ? *merge : (options.mode == Mode::kMonotone ? "or" : "sum"));
        options.slot_count = slots;
        options.per_index_random = per_index_random;
        Rng rng = SeededOrEntropy(seed);
        if (plaintext) {
          auto session = MakeChallenge(pub, options, rng);
          return MakeChallengeFor(pub, options, {*plaintext},
                                  session.first.session_id);
        }
        return MakeChallenge(pub, options, rng);
      },
      py::arg("pub"), py::kw_only(), py::arg("mode") = "monotone",
      py::arg("merge") = py::none(), py::arg("slots") = 1,
      py::arg("plaintext") = py::none(), py::arg("per_index_random") = false,
      py::arg("seed") = py::none(),
      "Returns (challenge, verifier_state).");

  m.def(
      "respond",
      [](const KeyShare& share, const Challenge& challenge) {
        return TokenRespond(share, challenge);
      },
      py::arg("share"), py::arg("challenge"));
  m.def(
      "respond",
      [](const ShareSequence& share, const Challenge& challenge,
         const std::string& null, std::optional<std::uint64_t> seed) {
        Rng rng = SeededOrEntropy(seed);
        return TokenRespond(share, challenge, ParseNullPolicy(null), rng);
      },
      py::arg("share"), py::arg("challenge"), py::arg("null") = "one",
      py::arg("seed") = py::none());

  m.def(
      "verify",
      [](const VerifierState& state, const std::vector<ResponseVector>& responses,
         bool diagnostics) {
        return Verify(state, Merge(responses, state.merge, state.slot_count),
                      diagnostics);
      },
      py::arg("state"), py::arg("responses"), py::arg("diagnostics") = true,
      "Merge the responses by the session's rule and decide.");

  m.def(
      "audit",
      [](const PrivateKey& priv, const std::string& policy,
         const std::vector<std::string>& universe,
         std::optional<std::size_t> max_size, std::optional<std::string> mode,
         bool pack, const std::string& merge, const std::string& null,
         std::size_t trials, std::optional<Nat> plaintext,
         std::optional<std::uint64_t> seed) {
        const Universe u(universe);
        const Expr expr = ParsePolicy(policy, u);
        const GroupFamily expected = AuthorizedFamily(expr, u, max_size);
        ShareBundle bundle{u, {}};
        const Mode chosen =
            ParseMode(mode ? *mode : (max_size || !IsMonotone(expr) ? "sequence"
                                                                   : "monotone"));
        if (chosen == Mode::kMonotone) {
          bundle.shares = IssueMonotone(
              BlSplit(expr, u, AllIndices(priv.n()), priv.n()), priv);
        } else {
          bundle.shares = IssueSequence(
              pack ? SlotsPacked(expected, u, priv.n())
                   : SlotsBaseline(expected, u, priv.n()),
              priv);
        }
        AuditOptions options;
        options.trials = trials;
        options.merge = chosen == Mode::kMonotone ? MergeRule::kOr
                                                  : ParseMergeRule(merge);
        options.null_policy = ParseNullPolicy(null);
        options.fixed_plaintext = plaintext;
        Rng rng = SeededOrEntropy(seed);
        return AuditToDict(Audit(priv, bundle, expected, options, rng),
                           expected, u);
      },
      py::arg("priv"), py::arg("policy"), py::arg("universe"), py::kw_only(),
      py::arg("max_size") = py::none(), py::arg("mode") = py::none(),
      py::arg("pack") = false, py::arg("merge") = "sum", py::arg("null") = "one",
      py::arg("trials") = 1, py::arg("plaintext") = py::none(),
      py::arg("seed") = py::none(),
      "Compile shares and run every subset of the universe end to end.");
}
