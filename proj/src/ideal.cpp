#include "bsroots/ideal.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace bsr {

namespace {

bool dominates(const ZVec& a, const ZVec& b) {
  // a >= b componentwise
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

}  // namespace

bool MonomialIdeal::is_unit() const {
  for (const ZVec& g : generators) {
    bool zero = true;
    for (Eigen::Index i = 0; i < g.size(); ++i)
      if (g[i] != 0) { zero = false; break; }
    if (zero) return true;
  }
  return false;
}

bool MonomialIdeal::is_nontrivial_proper() const {
  return !generators.empty() && !is_unit();
}

Integer MonomialIdeal::max_coordinate() const {
  Integer m(0);
  for (const ZVec& g : generators)
    for (Eigen::Index i = 0; i < g.size(); ++i)
      if (g[i] > m) m = g[i];
  return m;
}

bool MonomialIdeal::gamma_contains(const ZVec& u) const {
  for (const ZVec& g : generators)
    if (dominates(u, g)) return true;
  return false;
}

MonomialIdeal minimalize_generators(std::vector<ZVec> raw,
                                    std::vector<std::string> names) {
  if (raw.empty())
    throw std::invalid_argument("minimalize_generators: empty generator list");
  const Eigen::Index dim = raw.front().size();
  for (const ZVec& g : raw) {
    if (g.size() != dim)
      throw std::invalid_argument("minimalize_generators: mixed dimensions");
    for (Eigen::Index i = 0; i < dim; ++i)
      if (g[i] < 0)
        throw std::invalid_argument("minimalize_generators: negative exponent");
  }
  std::vector<ZVec> kept;
  for (const ZVec& g : raw) {
    bool dominated = false;
    for (const ZVec& h : raw) {
      if (&h == &g) continue;
      if (dominates(g, h) && !same(g, h)) { dominated = true; break; }
    }
    if (dominated) continue;
    bool dup = false;
    for (const ZVec& k : kept)
      if (same(k, g)) { dup = true; break; }
    if (!dup) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end(), lex_less);
  MonomialIdeal out;
  out.dim = dim;
  out.generators = std::move(kept);
  out.names = std::move(names);
  return out;
}

MonomialIdeal product_ideal(const MonomialIdeal& a, const MonomialIdeal& b) {
  const Eigen::Index n = a.dim, m = b.dim;
  std::vector<ZVec> gens;
  for (const ZVec& g : a.generators)
    for (const ZVec& h : b.generators) {
      ZVec p(n + m);
      p.head(n) = g;
      p.tail(m) = h;
      gens.push_back(p);
    }
  std::vector<std::string> names;
  if (!a.names.empty() && !b.names.empty()) {
    names = a.names;
    names.insert(names.end(), b.names.begin(), b.names.end());
  }
  return minimalize_generators(std::move(gens), std::move(names));
}

namespace {

struct TermParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit TermParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= s.size();
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() &&
        (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      ++pos;
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                s[pos] == '_'))
        ++pos;
    }
    if (start == pos)
      throw std::invalid_argument("ideal parse: expected variable at position " +
                                  std::to_string(pos));
    return s.substr(start, pos - start);
  }

  long exponent() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos)
      throw std::invalid_argument("ideal parse: expected nonnegative exponent at position " +
                                  std::to_string(pos));
    return std::stol(s.substr(start, pos - start));
  }
};

MonomialIdeal parse_term_string(const std::string& text) {
  TermParser p(text);
  std::vector<std::string> names;
  std::map<std::string, Eigen::Index> index;
  std::vector<std::map<std::string, long>> monomials;

  while (true) {
    std::map<std::string, long> mono;
    while (true) {
      std::string var = p.identifier();
      long e = 1;
      if (p.peek() == '^') {
        ++p.pos;
        e = p.exponent();
      }
      if (index.find(var) == index.end()) {
        index[var] = static_cast<Eigen::Index>(names.size());
        names.push_back(var);
      }
      mono[var] += e;
      if (p.peek() == '*') {
        ++p.pos;
        continue;
      }
      break;
    }
    monomials.push_back(std::move(mono));
    if (p.peek() == ',') {
      ++p.pos;
      continue;
    }
    break;
  }
  if (!p.eof())
    throw std::invalid_argument("ideal parse: trailing input at position " +
                                std::to_string(p.pos));

  const Eigen::Index dim = static_cast<Eigen::Index>(names.size());
  std::vector<ZVec> gens;
  for (const auto& mono : monomials) {
    ZVec g = ZVec::Zero(dim);
    for (const auto& [var, e] : mono) g[index[var]] = e;
    gens.push_back(g);
  }
  return minimalize_generators(std::move(gens), std::move(names));
}

MonomialIdeal parse_json_ideal(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object() || !j.contains("vars") || !j.contains("generators"))
    throw std::invalid_argument("ideal parse: JSON needs \"vars\" and \"generators\"");
  const Eigen::Index dim = j["vars"].get<Eigen::Index>();
  if (dim <= 0) throw std::invalid_argument("ideal parse: vars must be positive");
  std::vector<ZVec> gens;
  for (const auto& row : j["generators"]) {
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim)
      throw std::invalid_argument("ideal parse: generator arity mismatch");
    ZVec g(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      long e = row[static_cast<std::size_t>(i)].get<long>();
      if (e < 0) throw std::invalid_argument("ideal parse: negative exponent");
      g[i] = e;
    }
    gens.push_back(g);
  }
  std::vector<std::string> names;
  if (j.contains("names")) {
    for (const auto& n : j["names"]) names.push_back(n.get<std::string>());
    if (static_cast<Eigen::Index>(names.size()) != dim)
      throw std::invalid_argument("ideal parse: names arity mismatch");
  }
  return minimalize_generators(std::move(gens), std::move(names));
}

}  // namespace

MonomialIdeal parse_ideal(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '{') {
    try {
      return parse_json_ideal(text);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("ideal parse: ") + e.what());
    }
  }
  return parse_term_string(text);
}

std::string ideal_to_json(const MonomialIdeal& ideal) {
  nlohmann::ordered_json j;
  j["vars"] = ideal.dim;
  if (!ideal.names.empty()) j["names"] = ideal.names;
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const ZVec& g : ideal.generators) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < g.size(); ++i) row.push_back(g[i].get_si());
    gens.push_back(row);
  }
  j["generators"] = gens;
  return j.dump();
}

}  // namespace bsr
