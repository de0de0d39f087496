#ifndef OMEGA_REPORT_HPP
#define OMEGA_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "omega/checker.hpp"
#include "omega/parser.hpp"

namespace omega {

constexpr const char* kEngineName = "omega-kernel";
constexpr const char* kEngineVersion = "0.1.0";
constexpr const char* kOrderName = "wdegrevlex-lex";

/// One module's full report. Serialization is canonical: fixed key
/// order, integers only; wallTimeMs is the single nondeterministic field.
struct ReportDocument {
  std::string label;
  PresentationDocument doc;
  InvariantReport invariants;
  std::optional<ConditionVerdict> conditions;
  std::optional<GapOneReport> gapOne;
  std::int64_t wallTimeMs = 0;

  std::string toJson() const;
  /// toJson with wallTimeMs forced to 0 (for determinism comparisons).
  std::string toJsonStable() const;
  std::string toText() const;
};

/// invariants-only report (cmdInvariants).
ReportDocument buildInvariantsReport(const PresentationDocument& doc);
/// invariants + conditions + gap-one (cmdCheck).
ReportDocument buildCheckReport(const PresentationDocument& doc);

struct CorpusSummary {
  std::size_t files = 0;
  std::size_t agree = 0;
  std::size_t inconsistent = 0;
  std::size_t gapOneConfirmed = 0;
  std::size_t gapNotOne = 0;
  std::size_t refuted = 0;
  std::size_t refutedWithClaim = 0;
  std::size_t errors = 0;
};

struct CorpusEntry {
  std::string file;
  std::string error; // empty on success
  std::optional<ReportDocument> report;
};

struct CorpusResult {
  std::vector<CorpusEntry> entries; // sorted by filename
  CorpusSummary summary;

  std::string toJson(bool stable = false) const;
  std::string toText() const;
};

/// Runs cmdCheck over every .gmod file in the directory, at most `jobs`
/// concurrently; per-file errors are collected, never abort the batch.
CorpusResult runCorpus(const std::string& directory, std::size_t jobs);

} // namespace omega

#endif
