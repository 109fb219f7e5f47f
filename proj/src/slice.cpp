#include "cts/slice.hpp"

#include <stdexcept>

namespace cts {

Slice::Slice(const SigPtr& sig, int k) : k_(k) {
  entries_ = field_slice_entries(*sig, k);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    index_.emplace(Key{entries_[i].m, entries_[i].dir}, i);
}

std::vector<std::uint32_t> Slice::coords(const VectorField& X) const {
  std::vector<std::uint32_t> v(entries_.size(), 0);
  const Signature& sig = *X.signature();
  for (std::uint32_t i = 0; i < sig.count(); ++i)
    for (const auto& t : X.coefficient(i).terms()) {
      auto it = index_.find(Key{t.m, i});
      if (it == index_.end()) throw std::invalid_argument("Slice::coords: field has a term outside degree " + std::to_string(k_));
      v[it->second] = t.c;
    }
  return v;
}

VectorField Slice::field(const SigPtr& sig, const std::vector<std::uint32_t>& coords) const {
  VectorField X(sig);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i]) continue;
    X.coefficient(entries_[i].dir).add_term(entries_[i].m, coords[i]);
  }
  return X;
}

const Slice& Slice::get(const SigPtr& sig, int k) {
  // process-lifetime memo; single-threaded engine
  static std::map<std::pair<const Signature*, int>, std::unique_ptr<Slice>> memo;
  static std::vector<SigPtr> keepalive;
  auto key = std::make_pair(sig.get(), k);
  auto it = memo.find(key);
  if (it == memo.end()) {
    keepalive.push_back(sig);
    it = memo.emplace(key, std::make_unique<Slice>(sig, k)).first;
  }
  return *it->second;
}

}  // namespace cts
