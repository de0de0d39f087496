#ifndef OMEGA_PARSER_HPP
#define OMEGA_PARSER_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "omega/presented.hpp"

namespace omega {

/// Parsed .gmod presentation: ring header, generator list, homogeneous
/// relations and metadata. Parsing validates homogeneity line by line.
struct PresentationDocument {
  RingPtr ring;
  std::vector<std::string> generatorNames;
  std::vector<std::int64_t> generatorDegrees;
  std::vector<FreeModuleElement> relations;
  std::string label;
  bool claimCohomologyRing = false;
  std::map<std::string, std::string> meta;

  PresentedModule toModule() const;
};

PresentationDocument parsePresentation(const std::string& text);
PresentationDocument parsePresentationFile(const std::string& path);

/// Canonical text form; parse(prettyPrint(doc)) reproduces doc.
std::string prettyPrint(const PresentationDocument& doc);

} // namespace omega

#endif
