#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace pesp {

// Integer vector tagged with the quantity it holds, so that a timetable cannot
// be passed where a tension or an offset is expected.
template <class Tag>
class IntVector {
 public:
  using value_type = std::int64_t;

  IntVector() = default;
  explicit IntVector(std::vector<std::int64_t> values)
      : values_(std::move(values)) {}
  explicit IntVector(std::size_t n, std::int64_t fill = 0) : values_(n, fill) {}
  IntVector(std::initializer_list<std::int64_t> init) : values_(init) {}

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  std::int64_t& operator[](std::size_t i) { return values_[i]; }
  std::int64_t operator[](std::size_t i) const { return values_[i]; }
  auto begin() { return values_.begin(); }
  auto end() { return values_.end(); }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }
  const std::vector<std::int64_t>& values() const { return values_; }

  friend bool operator==(const IntVector&, const IntVector&) = default;
  friend auto operator<=>(const IntVector&, const IntVector&) = default;

 private:
  std::vector<std::int64_t> values_;
};

// pi, indexed by vertex.
using Timetable = IntVector<struct TimetableTag>;
// x, indexed by arc.
using Tension = IntVector<struct TensionTag>;
// p, indexed by arc.
using OffsetVector = IntVector<struct OffsetTag>;
// z, indexed by basis cycle.
using CycleOffset = IntVector<struct CycleOffsetTag>;

}  // namespace pesp
