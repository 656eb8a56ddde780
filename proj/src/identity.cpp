#include "doekit/identity.hpp"

#include <fstream>
#include <sstream>

#include "doekit/errors.hpp"
#include "doekit/strutil.hpp"

namespace doekit {

AliasMap load_alias_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open alias map: " + path);
  AliasMap map;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string alias, canonical;
    if (!(fields >> alias >> canonical)) continue;
    map[to_lower(alias)] = to_lower(canonical);
  }
  return map;
}

AuthorIdentity resolve_identity(const std::string& name,
                                const std::string& email,
                                const AliasMap* alias_map) {
  std::string key = to_lower(trim(email));
  std::string canonical = key.empty() ? to_lower(trim(name)) : key;
  if (alias_map) {
    if (auto it = alias_map->find(key); it != alias_map->end()) {
      canonical = it->second;
    } else {
      std::string with_name = to_lower(trim(name)) + " <" + key + ">";
      if (auto it2 = alias_map->find(with_name); it2 != alias_map->end())
        canonical = it2->second;
    }
  }
  AuthorIdentity id;
  id.canonical_id = canonical;
  id.display_name = name;
  if (!key.empty()) id.emails.insert(key);
  return id;
}

} // namespace doekit
