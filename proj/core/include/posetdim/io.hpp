#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "posetdim/poset.hpp"

namespace posetdim {

/// Contents of a poset text file:
///
///   poset <name>
///   elements <n>
///   rel <i> <j>                      (i < j; any generating set)
///   bipartite A: <i...> B: <i...>    (optional)
///
/// Blank lines and lines starting with '#' are ignored.
struct PosetFile {
  std::string name;
  Poset poset;
  std::optional<BipartitePoset> bipartite;
};

PosetFile parse_poset(std::istream& in);
PosetFile load_poset(const std::string& path);

/// Writes the cover relation only.
void write_poset(std::ostream& out, const std::string& name, const Poset& p);
void write_poset(std::ostream& out, const std::string& name, const BipartitePoset& bp);
void save_poset(const std::string& path, const std::string& name, const Poset& p);
void save_poset(const std::string& path, const std::string& name, const BipartitePoset& bp);
std::string to_text(const std::string& name, const Poset& p);
std::string to_text(const std::string& name, const BipartitePoset& bp);

/// Realizer files hold one extension per line as a space-separated
/// permutation, lowest element first.
std::vector<LinearExtension> parse_realizer(std::istream& in);
std::vector<LinearExtension> load_realizer(const std::string& path);
void write_realizer(std::ostream& out, const std::vector<LinearExtension>& family);
void save_realizer(const std::string& path, const std::vector<LinearExtension>& family);

}  // namespace posetdim
