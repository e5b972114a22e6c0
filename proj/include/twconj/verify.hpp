#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace twconj {

/// One verification driver per lemma/theorem; the CLI `verify`
/// subcommand and the acceptance suite share these.
struct VerifyOptions {
  bool exhaustive = false;
  int samples = 0;  // 0 = per-driver default
  std::uint64_t seed = 0x5eed2024u;
  int max_order = 0;  // 0 = per-driver default
  std::int64_t budget = 10'000'000;
};

struct VerifyResult {
  std::string id;
  bool ok = false;
  std::int64_t cases = 0;
  std::string summary;
  nlohmann::ordered_json counterexample;  // null when ok
};

std::vector<std::string> verifier_ids();
VerifyResult run_verifier(const std::string& id, const VerifyOptions& options);

}  // namespace twconj
