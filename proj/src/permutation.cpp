#include "jacflow/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "jacflow/error.hpp"

namespace jacflow {

Permutation::Permutation(std::vector<std::uint32_t> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (auto y : image_) {
    if (y >= image_.size() || hit[y]) throw Error(ErrorKind::InvalidGroup, "image array is not a permutation");
    hit[y] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(image_.size());
  for (std::uint32_t x = 0; x < image_.size(); ++x) inv[image_[x]] = x;
  Permutation p;
  p.image_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (std::uint32_t x = 0; x < image_.size(); ++x)
    if (image_[x] != x) return false;
  return true;
}

bool Permutation::has_fixed_point() const {
  for (std::uint32_t x = 0; x < image_.size(); ++x)
    if (image_[x] == x) return true;
  return false;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  std::vector<bool> seen(image_.size(), false);
  for (std::uint32_t x = 0; x < image_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::uint32_t y = x; !seen[y]; y = image_[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(image_.size(), false);
  for (std::uint32_t x = 0; x < image_.size(); ++x) {
    if (seen[x] || image_[x] == x) continue;
    out += '(';
    for (std::uint32_t y = x; !seen[y]; y = image_[y]) {
      if (y != x) out += ' ';
      out += std::to_string(y);
      seen[y] = true;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw Error(ErrorKind::DimensionMismatch, "composing permutations of different degree");
  Permutation p;
  p.image_.resize(a.degree());
  for (std::uint32_t x = 0; x < a.degree(); ++x) p.image_[x] = a.image_[b.image_[x]];
  return p;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::Parse, "cycle notation at offset " + std::to_string(pos) + ": " + why);
  };
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') fail("expected '('");
    auto close = text.find(')', pos);
    if (close == std::string_view::npos) fail("unterminated cycle");
    std::string_view body = text.substr(pos + 1, close - pos - 1);
    bool separated = body.find_first_of(" ,") != std::string_view::npos;
    std::vector<std::uint32_t> cyc;
    std::string tok;
    auto flush = [&] {
      if (tok.empty()) return;
      unsigned long v = std::stoul(tok);
      if (v >= degree) fail("point " + tok + " out of range");
      cyc.push_back(static_cast<std::uint32_t>(v));
      tok.clear();
    };
    for (char c : body) {
      if (std::isdigit(static_cast<unsigned char>(c))) {
        tok += c;
        if (!separated) flush();
      } else if (c == ' ' || c == ',') {
        flush();
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
    }
    flush();
    for (auto v : cyc) {
      if (used[v]) fail("point " + std::to_string(v) + " appears twice");
      used[v] = true;
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) img[cyc[i]] = cyc[(i + 1) % cyc.size()];
    pos = close + 1;
  }
  return Permutation(std::move(img));
}

void PermGroup::reindex() {
  index_.clear();
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i].image(), i);
}

PermGroup PermGroup::trivial(std::size_t degree) {
  PermGroup g;
  g.degree_ = degree;
  g.elements_.push_back(Permutation::identity(degree));
  g.reindex();
  return g;
}

PermGroup PermGroup::generate(std::size_t degree, std::vector<Permutation> generators, std::size_t order_cap) {
  PermGroup g;
  g.degree_ = degree;
  for (const auto& s : generators)
    if (s.degree() != degree) throw Error(ErrorKind::DimensionMismatch, "generator degree differs from group degree");
  g.generators_ = std::move(generators);
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> layer{Permutation::identity(degree)};
  while (!layer.empty()) {
    g.elements_.insert(g.elements_.end(), layer.begin(), layer.end());
    std::set<Permutation> next;
    for (const auto& p : layer)
      for (const auto& s : g.generators_) {
        Permutation q = s * p;
        if (seen.insert(q).second) next.insert(q);
      }
    if (seen.size() > order_cap)
      throw Error(ErrorKind::ScaleExceeded, "group order exceeds " + std::to_string(order_cap));
    layer.assign(next.begin(), next.end());
  }
  g.reindex();
  return g;
}

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermGroup g;
  g.degree_ = degree;
  g.elements_ = std::move(elements);
  if (g.elements_.empty() || !g.elements_.front().is_identity())
    throw Error(ErrorKind::InvalidGroup, "element list must contain the identity");
  g.reindex();
  // Greedy generating set: add any element outside the span so far.
  std::set<Permutation> span{Permutation::identity(degree)};
  for (const auto& p : g.elements_) {
    if (span.count(p)) continue;
    g.generators_.push_back(p);
    std::vector<Permutation> frontier(span.begin(), span.end());
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& q : frontier)
        for (const auto& s : g.generators_) {
          Permutation r = s * q;
          if (span.insert(r).second) next.push_back(std::move(r));
        }
      frontier = std::move(next);
    }
  }
  return g;
}

std::size_t PermGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p.image());
  if (it == index_.end()) throw Error(ErrorKind::InvalidGroup, "permutation is not a group element");
  return it->second;
}

bool PermGroup::is_abelian() const {
  for (const auto& a : generators_)
    for (const auto& b : generators_)
      if (a * b != b * a) return false;
  return true;
}

bool PermGroup::is_closed() const {
  for (const auto& a : elements_)
    for (const auto& b : generators_)
      if (!contains(b * a)) return false;
  return true;
}

}  // namespace jacflow
