#include "elx/interpretation.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "elx/error.hpp"

namespace elx {

namespace {
constexpr std::size_t kWordBits = 64;
std::size_t word_count(std::size_t universe) { return (universe + kWordBits - 1) / kWordBits; }
}  // namespace

ElementSet::ElementSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.insert(i);
  return s;
}

ElementSet ElementSet::singleton(std::size_t universe, std::size_t element) {
  ElementSet s(universe);
  s.insert(element);
  return s;
}

ElementSet ElementSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > kWordBits) throw std::invalid_argument("from_mask needs a universe of at most 64 elements");
  ElementSet s(universe);
  if (universe > 0) {
    s.words_[0] = universe == kWordBits ? mask : mask & ((std::uint64_t{1} << universe) - 1);
  }
  return s;
}

bool ElementSet::contains(std::size_t e) const noexcept {
  return e < universe_ && (words_[e / kWordBits] >> (e % kWordBits)) & 1U;
}

void ElementSet::insert(std::size_t e) {
  if (e >= universe_) throw std::out_of_range("element outside the domain");
  words_[e / kWordBits] |= std::uint64_t{1} << (e % kWordBits);
}

void ElementSet::erase(std::size_t e) {
  if (e < universe_) words_[e / kWordBits] &= ~(std::uint64_t{1} << (e % kWordBits));
}

void ElementSet::clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

bool ElementSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t ElementSet::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::intersects(const ElementSet& other) const noexcept {
  const auto n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const auto theirs = i < other.words_.size() ? other.words_[i] : 0;
    if (words_[i] & ~theirs) return false;
  }
  return true;
}

std::vector<std::size_t> ElementSet::elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < universe_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
  }
  return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) noexcept {
  const auto n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] |= other.words_[i];
  return *this;
}

// --- FiniteInterpretation --------------------------------------------------

FiniteInterpretation::FiniteInterpretation(std::vector<std::string> domain) : domain_(std::move(domain)) {
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (domain_[i].empty()) throw Error("empty domain element name");
    if (!index_.emplace(domain_[i], i).second) throw Error("duplicate domain element '" + domain_[i] + "'");
  }
}

std::optional<std::size_t> FiniteInterpretation::element_index(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementSet& FiniteInterpretation::concept_extension_mut(const std::string& name) {
  auto it = concepts_.find(name);
  if (it == concepts_.end()) it = concepts_.emplace(name, ElementSet(size())).first;
  return it->second;
}

FiniteInterpretation::Successors& FiniteInterpretation::role_extension_mut(const std::string& role) {
  auto it = roles_.find(role);
  if (it == roles_.end()) it = roles_.emplace(role, Successors(size(), ElementSet(size()))).first;
  return it->second;
}

void FiniteInterpretation::add_concept_member(const std::string& name, std::size_t element) {
  concept_extension_mut(name).insert(element);
}

void FiniteInterpretation::add_role_pair(const std::string& role, std::size_t from, std::size_t to) {
  if (from >= size() || to >= size()) throw std::out_of_range("role pair outside the domain");
  role_extension_mut(role)[from].insert(to);
}

ElementSet FiniteInterpretation::concept_extension(const std::string& name) const {
  if (const auto* ext = find_concept(name)) return *ext;
  return ElementSet(size());
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteInterpretation::role_pairs(const std::string& role) const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (const auto* succ = find_role(role)) {
    for (std::size_t d = 0; d < succ->size(); ++d) {
      for (auto e : (*succ)[d].elements()) out.emplace_back(d, e);
    }
  }
  return out;
}

const ElementSet* FiniteInterpretation::find_concept(const std::string& name) const {
  auto it = concepts_.find(name);
  return it == concepts_.end() ? nullptr : &it->second;
}

const FiniteInterpretation::Successors* FiniteInterpretation::find_role(const std::string& role) const {
  auto it = roles_.find(role);
  return it == roles_.end() ? nullptr : &it->second;
}

std::vector<std::string> FiniteInterpretation::concept_names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : concepts_) out.push_back(name);
  return out;
}

std::vector<std::string> FiniteInterpretation::role_names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : roles_) out.push_back(name);
  return out;
}

std::string FiniteInterpretation::format_set(const ElementSet& set) const {
  std::string out = "{";
  bool first = true;
  for (auto e : set.elements()) {
    if (!first) out += ',';
    out += domain_.at(e);
    first = false;
  }
  return out + "}";
}

bool is_singleton(const Valuation& eta) {
  return std::all_of(eta.begin(), eta.end(), [](const auto& kv) { return kv.second.count() == 1; });
}

}  // namespace elx
