#include "posetdim/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "posetdim/errors.hpp"

namespace posetdim {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

int parse_int(const std::string& token, std::size_t line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, "expected an integer, found '" + token + "'");
  return value;
}

Element parse_element(const std::string& token, std::size_t line, int n) {
  int x = parse_int(token, line);
  if (x < 0 || x >= n) throw ParseError(line, "element " + token + " outside 0.." + std::to_string(n - 1));
  return x;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  return out;
}

void write_body(std::ostream& out, const std::string& name, const Poset& p) {
  out << "poset " << (name.empty() ? "unnamed" : name) << "\n";
  out << "elements " << p.size() << "\n";
  for (auto [x, y] : p.covers()) out << "rel " << x << " " << y << "\n";
}

}  // namespace

PosetFile parse_poset(std::istream& in) {
  PosetFile file;
  int n = -1;
  std::vector<Relation> relations;
  std::optional<std::pair<ElementSet, ElementSet>> sides;
  std::size_t bipartite_line = 0;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    auto t = tokens(line);
    if (t.empty() || t[0][0] == '#') continue;
    if (t[0] == "poset") {
      if (t.size() != 2) throw ParseError(number, "expected 'poset <name>'");
      file.name = t[1];
    } else if (t[0] == "elements") {
      if (t.size() != 2) throw ParseError(number, "expected 'elements <n>'");
      if (n >= 0) throw ParseError(number, "duplicate 'elements' line");
      n = parse_int(t[1], number);
      if (n < 0) throw ParseError(number, "negative element count");
    } else if (t[0] == "rel") {
      if (n < 0) throw ParseError(number, "'rel' before 'elements'");
      if (t.size() != 3) throw ParseError(number, "expected 'rel <i> <j>'");
      relations.emplace_back(parse_element(t[1], number, n), parse_element(t[2], number, n));
    } else if (t[0] == "bipartite") {
      if (n < 0) throw ParseError(number, "'bipartite' before 'elements'");
      if (sides) throw ParseError(number, "duplicate 'bipartite' line");
      if (t.size() < 3 || t[1] != "A:") throw ParseError(number, "expected 'bipartite A: <i...> B: <i...>'");
      ElementSet a, b;
      bool on_b = false;
      for (std::size_t k = 2; k < t.size(); ++k) {
        if (t[k] == "B:") {
          if (on_b) throw ParseError(number, "repeated 'B:'");
          on_b = true;
          continue;
        }
        (on_b ? b : a).push_back(parse_element(t[k], number, n));
      }
      if (!on_b) throw ParseError(number, "missing 'B:'");
      sides.emplace(std::move(a), std::move(b));
      bipartite_line = number;
    } else {
      throw ParseError(number, "unknown keyword '" + t[0] + "'");
    }
  }
  if (n < 0) throw ParseError(0, "missing 'elements' line");
  file.poset = Poset::from_relations(n, relations);
  if (sides) {
    try {
      file.bipartite.emplace(file.poset, sides->first, sides->second);
    } catch (const InvalidBipartition& e) {
      throw ParseError(bipartite_line, e.what());
    }
  }
  return file;
}

PosetFile load_poset(const std::string& path) {
  auto in = open_in(path);
  return parse_poset(in);
}

void write_poset(std::ostream& out, const std::string& name, const Poset& p) { write_body(out, name, p); }

void write_poset(std::ostream& out, const std::string& name, const BipartitePoset& bp) {
  write_body(out, name, bp.poset());
  out << "bipartite A:";
  for (Element a : bp.a_side()) out << " " << a;
  out << " B:";
  for (Element b : bp.b_side()) out << " " << b;
  out << "\n";
}

void save_poset(const std::string& path, const std::string& name, const Poset& p) {
  auto out = open_out(path);
  write_poset(out, name, p);
}

void save_poset(const std::string& path, const std::string& name, const BipartitePoset& bp) {
  auto out = open_out(path);
  write_poset(out, name, bp);
}

std::string to_text(const std::string& name, const Poset& p) {
  std::ostringstream out;
  write_poset(out, name, p);
  return out.str();
}

std::string to_text(const std::string& name, const BipartitePoset& bp) {
  std::ostringstream out;
  write_poset(out, name, bp);
  return out.str();
}

std::vector<LinearExtension> parse_realizer(std::istream& in) {
  std::vector<LinearExtension> family;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    auto t = tokens(line);
    if (t.empty() || t[0][0] == '#') continue;
    std::vector<Element> order;
    for (const auto& token : t) order.push_back(parse_int(token, number));
    try {
      family.emplace_back(std::move(order));
    } catch (const InvalidExtension& e) {
      throw ParseError(number, e.what());
    }
  }
  return family;
}

std::vector<LinearExtension> load_realizer(const std::string& path) {
  auto in = open_in(path);
  return parse_realizer(in);
}

void write_realizer(std::ostream& out, const std::vector<LinearExtension>& family) {
  for (const auto& l : family) {
    for (std::size_t i = 0; i < l.order().size(); ++i) out << (i ? " " : "") << l.order()[i];
    out << "\n";
  }
}

void save_realizer(const std::string& path, const std::vector<LinearExtension>& family) {
  auto out = open_out(path);
  write_realizer(out, family);
}

}  // namespace posetdim
