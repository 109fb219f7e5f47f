#ifndef CTS_SLICE_HPP
#define CTS_SLICE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "cts/vfield.hpp"

namespace cts {

/// Indexed basis of the degree-k slice of W(m;N|n;r): canonical entry list
/// plus a reverse lookup, enabling exact coordinates for homogeneous
/// fields.  Slices are memoized per signature instance.
class Slice {
public:
  Slice(const SigPtr& sig, int k);

  std::size_t dim() const { return entries_.size(); }
  const std::vector<SliceEntry>& entries() const { return entries_; }
  int degree() const { return k_; }

  /// Coordinates of a degree-k homogeneous field (throws if a term falls
  /// outside the slice).
  std::vector<std::uint32_t> coords(const VectorField& X) const;

  VectorField field(const SigPtr& sig, const std::vector<std::uint32_t>& coords) const;

  static const Slice& get(const SigPtr& sig, int k);

private:
  struct Key {
    Monomial m;
    std::uint32_t dir;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = k.dir;
      for (auto b : k.m.ev) h = h * 1315423911u + b;
      h = h * 1315423911u + k.m.odd;
      return h;
    }
  };
  int k_;
  std::vector<SliceEntry> entries_;
  std::unordered_map<Key, std::size_t, KeyHash> index_;
};

}  // namespace cts

#endif
