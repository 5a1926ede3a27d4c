#pragma once

// Finite permutation groups expanded into element tables, and the text
// catalogue format "name; degree; perm, perm, ..." (disjoint-cycle notation).

#include "seifert/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace seifert {

/// Images of the points 0..degree-1.
using Permutation = std::vector<std::uint32_t>;

struct CatalogueLimits {
  std::size_t max_degree = 64;
  std::size_t max_order = 10080;
  // full Cayley table only up to this order; larger groups multiply on demand
  std::size_t max_table_order = 2048;
};

/// A permutation group with every element listed. Element 0 is the identity;
/// the product x*y applies x first, then y.
class FiniteGroupTable {
 public:
  FiniteGroupTable(std::string name, std::size_t degree, std::vector<Permutation> generators,
                   const CatalogueLimits& limits = {})
      : name_(std::move(name)), degree_(degree), generators_(std::move(generators)) {
    if (degree_ == 0) throw DomainError("group degree must be positive");
    if (degree_ > limits.max_degree) throw ResourceError("group " + name_ + " exceeds the degree cap");
    for (const auto& g : generators_) check_permutation(g);
    expand(limits);
  }

  const std::string& name() const { return name_; }
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }

  std::uint32_t identity() const { return 0; }

  std::uint32_t multiply(std::uint32_t x, std::uint32_t y) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(x) * order() + y];
    return index_of(compose(elements_[x], elements_[y]));
  }

  std::uint32_t inverse(std::uint32_t x) const { return inverses_[x]; }

  std::uint32_t index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw DomainError("permutation is not an element of " + name_);
    return it->second;
  }

  bool is_abelian() const {
    for (std::uint32_t x = 0; x < order(); ++x)
      for (std::uint32_t y = 0; y < x; ++y)
        if (multiply(x, y) != multiply(y, x)) return false;
    return true;
  }

  /// Size of the subgroup generated by the listed elements.
  std::size_t generated_order(const std::vector<std::uint32_t>& gens) const {
    std::vector<char> seen(order(), 0);
    std::vector<std::uint32_t> frontier{identity()};
    seen[identity()] = 1;
    std::size_t count = 1;
    while (!frontier.empty()) {
      std::uint32_t x = frontier.back();
      frontier.pop_back();
      for (auto g : gens) {
        std::uint32_t y = multiply(x, g);
        if (!seen[y]) {
          seen[y] = 1;
          ++count;
          frontier.push_back(y);
        }
      }
    }
    return count;
  }

  static Permutation compose(const Permutation& x, const Permutation& y) {
    Permutation out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = y[x[i]];
    return out;
  }

 private:
  void check_permutation(const Permutation& p) const {
    if (p.size() != degree_) throw DomainError("generator degree mismatch in " + name_);
    std::vector<char> hit(degree_, 0);
    for (auto x : p) {
      if (x >= degree_ || hit[x]) throw DomainError("generator of " + name_ + " is not a permutation");
      hit[x] = 1;
    }
  }

  void expand(const CatalogueLimits& limits) {
    Permutation id(degree_);
    for (std::uint32_t i = 0; i < degree_; ++i) id[i] = i;
    elements_.push_back(id);
    index_.emplace(id, 0);
    for (std::size_t k = 0; k < elements_.size(); ++k) {
      for (const auto& g : generators_) {
        Permutation y = compose(elements_[k], g);
        if (index_.count(y)) continue;
        if (elements_.size() >= limits.max_order)
          throw ResourceError("group " + name_ + " exceeds the order cap of " + std::to_string(limits.max_order));
        index_.emplace(y, static_cast<std::uint32_t>(elements_.size()));
        elements_.push_back(std::move(y));
      }
    }
    // lexicographic element order; the identity is the smallest permutation
    std::sort(elements_.begin(), elements_.end());
    index_.clear();
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], static_cast<std::uint32_t>(i));

    const std::size_t n = elements_.size();
    if (n <= limits.max_table_order) {
      table_.resize(n * n);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          table_[x * n + y] = index_.at(compose(elements_[x], elements_[y]));
    }
    inverses_.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
      Permutation inv(degree_);
      for (std::uint32_t i = 0; i < degree_; ++i) inv[elements_[x][i]] = i;
      inverses_[x] = index_.at(inv);
    }
  }

  std::string name_;
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::map<Permutation, std::uint32_t> index_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverses_;
};

/// Parses disjoint-cycle notation with 1-based points, e.g. "(1 2)(3 4)" or "()".
inline Permutation parse_permutation(std::string_view text, std::size_t degree) {
  Permutation p(degree);
  for (std::uint32_t i = 0; i < degree; ++i) p[i] = i;
  std::vector<char> used(degree, 0);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos == text.size()) throw ParseError("empty permutation", pos);
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in permutation", pos);
    ++pos;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      std::uint64_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (v > 1000000) throw ParseError("point out of range", start);
        ++pos;
      }
      if (pos == start) throw ParseError("expected a point or ')' in permutation", pos);
      if (v < 1 || v > degree)
        throw ParseError("point " + std::to_string(v) + " exceeds degree " + std::to_string(degree), start);
      if (used[v - 1]) throw ParseError("point " + std::to_string(v) + " repeated", start);
      used[v - 1] = 1;
      cycle.push_back(static_cast<std::uint32_t>(v - 1));
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) p[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip();
  }
  return p;
}

inline std::string render_permutation(const Permutation& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::uint32_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start) continue;
    out += "(";
    for (std::uint32_t x = start; !seen[x]; x = p[x]) {
      seen[x] = 1;
      if (x != start) out += " ";
      out += std::to_string(x + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

namespace detail {
inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}
}  // namespace detail

/// One group per line: "name; degree; perm, perm, ...". Lines starting with
/// '#' and blank lines are skipped. Error positions are byte offsets into
/// `source`.
inline std::vector<FiniteGroupTable> load_catalogue(std::string_view source, const CatalogueLimits& limits = {}) {
  std::vector<FiniteGroupTable> groups;
  std::set<std::string> names;
  std::size_t line_start = 0;
  while (line_start <= source.size()) {
    std::size_t line_end = source.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = source.size();
    std::string_view line = source.substr(line_start, line_end - line_start);
    const std::size_t offset = line_start;
    line_start = line_end + 1;

    std::string trimmed = detail::trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;

    std::size_t s1 = line.find(';');
    std::size_t s2 = s1 == std::string_view::npos ? s1 : line.find(';', s1 + 1);
    if (s2 == std::string_view::npos) throw ParseError("expected 'name; degree; generators'", offset);
    if (line.find(';', s2 + 1) != std::string_view::npos)
      throw ParseError("too many ';' separators", offset + line.find(';', s2 + 1));

    std::string name = detail::trim(line.substr(0, s1));
    if (name.empty()) throw ParseError("empty group name", offset);
    if (!names.insert(name).second) throw ParseError("duplicate group name '" + name + "'", offset);

    std::string degree_text = detail::trim(line.substr(s1 + 1, s2 - s1 - 1));
    std::size_t degree = 0;
    if (degree_text.empty() || degree_text.size() > 9 ||
        !std::all_of(degree_text.begin(), degree_text.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw ParseError("degree must be a positive integer", offset + s1 + 1);
    degree = std::stoul(degree_text);
    if (degree == 0) throw ParseError("degree must be a positive integer", offset + s1 + 1);
    if (degree > limits.max_degree) throw ResourceError("group " + name + " exceeds the degree cap");

    std::vector<Permutation> gens;
    std::string_view perms = line.substr(s2 + 1);
    if (!detail::trim(perms).empty()) {
      std::size_t p = 0;
      while (p <= perms.size()) {
        std::size_t comma = perms.find(',', p);
        if (comma == std::string_view::npos) comma = perms.size();
        std::string_view piece = perms.substr(p, comma - p);
        try {
          gens.push_back(parse_permutation(piece, degree));
        } catch (const ParseError& e) {
          throw ParseError(e.message() + " in group '" + name + "'", offset + s2 + 1 + p + e.position());
        }
        p = comma + 1;
      }
    }
    groups.emplace_back(std::move(name), degree, std::move(gens), limits);
  }
  return groups;
}

inline std::vector<FiniteGroupTable> load_catalogue_file(const std::string& path, const CatalogueLimits& limits = {}) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open catalogue file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_catalogue(buf.str(), limits);
}

/// Stable identifier of a catalogue: FNV-1a over names and generator text.
inline std::string catalogue_id(const std::vector<FiniteGroupTable>& catalogue) {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&h](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  };
  for (const auto& g : catalogue) {
    feed(g.name());
    feed(std::to_string(g.degree()));
    for (const auto& p : g.generators()) feed(render_permutation(p));
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xf];
  return out;
}

}  // namespace seifert
