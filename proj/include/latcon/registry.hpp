#pragma once

// Published lattice-model constants, stored at exactly the precision they
// were published with, and comparison of computed values against them.

#include <string>
#include <vector>

#include "latcon/core.hpp"

namespace latcon {

enum class EntryKind { Exact, Estimate, BoundPair };

std::string to_string(EntryKind k);

struct RegistryEntry {
  std::string key;
  EntryKind kind = EntryKind::Estimate;
  std::string value_text;  // as published; empty for BoundPair
  std::string lower_text;  // BoundPair only
  std::string upper_text;
  std::string description;
  std::string source;

  HighReal value() const;
  HighReal lower() const;
  HighReal upper() const;
};

const std::vector<RegistryEntry>& registry();
const RegistryEntry& registry_entry(const std::string& key);

struct CompareLine {
  std::string key;
  double computed = 0.0;
  std::string reference;  // value or "(lower, upper)"
  std::optional<double> relative_error;
  std::optional<bool> inside;
  std::string text;
};

/// Relative error against Exact/Estimate entries; open-interval containment
/// against BoundPair entries. Unknown keys throw DomainError.
CompareLine registry_compare(const std::string& key, double computed);

}  // namespace latcon
