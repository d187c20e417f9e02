#pragma once

// Finite interpretations and variable valuations.

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace elx {

/// Subset of a finite domain, as a bitset over element indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);

  static ElementSet full(std::size_t universe);
  static ElementSet singleton(std::size_t universe, std::size_t element);
  /// Low bits of `mask` (universe must be at most 64).
  static ElementSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(std::size_t e) const noexcept;
  void insert(std::size_t e);
  void erase(std::size_t e);
  void clear() noexcept;
  bool empty() const noexcept;
  std::size_t count() const noexcept;
  bool intersects(const ElementSet& other) const noexcept;
  bool is_subset_of(const ElementSet& other) const noexcept;
  std::vector<std::size_t> elements() const;

  ElementSet& operator&=(const ElementSet& other) noexcept;
  ElementSet& operator|=(const ElementSet& other) noexcept;
  friend bool operator==(const ElementSet& a, const ElementSet& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

 private:
  std::size_t universe_ = 0;
  boost::container::small_vector<std::uint64_t, 1> words_;
};

/// Finite interpretation with named domain elements.
///
/// Names without an extension denote the empty set. Role extensions are kept
/// as per-element successor sets.
class FiniteInterpretation {
 public:
  using Successors = std::vector<ElementSet>;

  FiniteInterpretation() = default;
  /// Throws elx::Error on duplicate or empty element names.
  explicit FiniteInterpretation(std::vector<std::string> domain);

  std::size_t size() const noexcept { return domain_.size(); }
  const std::vector<std::string>& domain() const noexcept { return domain_; }
  const std::string& element(std::size_t i) const { return domain_.at(i); }
  std::optional<std::size_t> element_index(std::string_view name) const;

  void add_concept_member(const std::string& name, std::size_t element);
  void add_role_pair(const std::string& role, std::size_t from, std::size_t to);
  /// Registers the name with an empty extension if absent.
  ElementSet& concept_extension_mut(const std::string& name);
  Successors& role_extension_mut(const std::string& role);

  ElementSet concept_extension(const std::string& name) const;
  std::vector<std::pair<std::size_t, std::size_t>> role_pairs(const std::string& role) const;
  /// nullptr when the name has no extension.
  const ElementSet* find_concept(const std::string& name) const;
  const Successors* find_role(const std::string& role) const;

  std::vector<std::string> concept_names() const;
  std::vector<std::string> role_names() const;

  /// Renders a set as "{a,b}".
  std::string format_set(const ElementSet& set) const;

 private:
  std::vector<std::string> domain_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::map<std::string, ElementSet> concepts_;
  std::map<std::string, Successors> roles_;
};

/// Assignment of concept variables to subsets of the domain.
using Valuation = std::map<std::string, ElementSet>;

bool is_singleton(const Valuation& eta);

}  // namespace elx
