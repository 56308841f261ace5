#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "eds/errors.hpp"

namespace eds {

/// Strictly increasing tuple of basis indices (1-based).  Indices 1..n refer
/// to coframe members; indices above n refer to declared auxiliary 1-forms.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> indices);

  int degree() const { return static_cast<int>(idx_.size()); }
  const std::vector<int>& indices() const { return idx_; }
  bool contains(int i) const;

  auto operator<=>(const MultiIndex&) const = default;

 private:
  std::vector<int> idx_;
};

class Space;
using SpacePtr = std::shared_ptr<const Space>;

/// A fixed coframe (n named, independent 1-forms spanning the cotangent
/// space at the working point) plus optional auxiliary 1-form symbols.
/// Auxiliaries are formal degree-1 generators of the algebra; their value at
/// the point and their exterior derivative are supplied separately by a
/// StructureDifferential.
class Space {
 public:
  static SpacePtr make(std::vector<std::string> coframe_names,
                       std::vector<std::string> auxiliary_names = {});

  /// Coframe w1, ..., wn with no auxiliaries.
  static SpacePtr standard(int n);

  int dim() const { return static_cast<int>(coframe_.size()); }
  int basis_size() const { return static_cast<int>(coframe_.size() + aux_.size()); }
  int auxiliary_count() const { return static_cast<int>(aux_.size()); }

  bool is_coframe_index(int idx) const { return idx >= 1 && idx <= dim(); }
  bool is_auxiliary_index(int idx) const { return idx > dim() && idx <= basis_size(); }

  const std::string& basis_name(int idx) const;
  const std::vector<std::string>& coframe_names() const { return coframe_; }
  const std::vector<std::string>& auxiliary_names() const { return aux_; }

  /// 1-based basis index of a name, 0 when unknown.
  int index_of(const std::string& name) const;

  bool operator==(const Space& other) const = default;

 private:
  Space(std::vector<std::string> coframe, std::vector<std::string> aux);

  std::vector<std::string> coframe_;
  std::vector<std::string> aux_;
};

/// True when both handles describe the same basis (pointer or deep equality).
bool same_space(const SpacePtr& a, const SpacePtr& b);

}  // namespace eds
