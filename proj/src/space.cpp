#include "eds/space.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace eds {

MultiIndex::MultiIndex(std::vector<int> indices) : idx_(std::move(indices)) {
  for (std::size_t k = 0; k < idx_.size(); ++k) {
    if (idx_[k] < 1) throw error("multi-index entries must be positive");
    if (k > 0 && idx_[k] <= idx_[k - 1]) throw error("multi-index must be strictly increasing");
  }
}

bool MultiIndex::contains(int i) const { return std::binary_search(idx_.begin(), idx_.end(), i); }

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

}  // namespace

Space::Space(std::vector<std::string> coframe, std::vector<std::string> aux)
    : coframe_(std::move(coframe)), aux_(std::move(aux)) {}

SpacePtr Space::make(std::vector<std::string> coframe_names, std::vector<std::string> auxiliary_names) {
  if (coframe_names.empty()) throw error("coframe must have positive dimension");
  std::unordered_set<std::string> seen;
  for (const auto* list : {&coframe_names, &auxiliary_names})
    for (const auto& name : *list) {
      if (!valid_name(name)) throw error("invalid basis name '" + name + "'");
      if (!seen.insert(name).second) throw error("duplicate basis name '" + name + "'");
    }
  return SpacePtr(new Space(std::move(coframe_names), std::move(auxiliary_names)));
}

SpacePtr Space::standard(int n) {
  if (n < 1) throw error("coframe must have positive dimension");
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 1; i <= n; ++i) names.push_back("w" + std::to_string(i));
  return make(std::move(names));
}

const std::string& Space::basis_name(int idx) const {
  if (is_coframe_index(idx)) return coframe_[idx - 1];
  if (is_auxiliary_index(idx)) return aux_[idx - dim() - 1];
  throw error("basis index " + std::to_string(idx) + " out of range");
}

int Space::index_of(const std::string& name) const {
  for (int i = 0; i < dim(); ++i)
    if (coframe_[i] == name) return i + 1;
  for (std::size_t i = 0; i < aux_.size(); ++i)
    if (aux_[i] == name) return dim() + static_cast<int>(i) + 1;
  return 0;
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return true;
  return a && b && *a == *b;
}

}  // namespace eds
