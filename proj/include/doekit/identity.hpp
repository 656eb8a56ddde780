#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

namespace doekit {

struct AuthorIdentity {
  std::string canonical_id; // never empty
  std::string display_name;
  std::set<std::string> emails;
};

// Maps an alias email (or "name <email>" form) to a canonical id.
using AliasMap = std::map<std::string, std::string>;

// File format: one "alias_email canonical_email" pair per line, '#' comments.
AliasMap load_alias_map(const std::string& path);

// Canonical id defaults to the lowercased email; an empty email falls back
// to the lowercased name. The alias map is consulted with the lowercased
// email first, then with "name <email>".
AuthorIdentity resolve_identity(const std::string& name,
                                const std::string& email,
                                const AliasMap* alias_map = nullptr);

} // namespace doekit
