#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace agpm {

// Sorted-list set kernels. Every element comparison is tallied into `work`
// so engine work_units are bit-reproducible for fixed inputs.

constexpr size_t kGallopRatio = 32;

// binary search; counts one unit per probe
inline bool sorted_contains(std::span<const uint32_t> s, uint32_t x, uint64_t& work) {
  size_t lo = 0, hi = s.size();
  while (lo < hi) {
    size_t mid = lo + (hi - lo) / 2;
    ++work;
    if (s[mid] < x)
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo < s.size() && s[lo] == x;
}

inline void intersect_into(std::span<const uint32_t> a, std::span<const uint32_t> b,
                           std::vector<uint32_t>& out, uint64_t& work) {
  out.clear();
  if (a.size() > b.size()) std::swap(a, b);
  if (a.empty()) return;
  if (b.size() / a.size() > kGallopRatio) {
    for (uint32_t x : a)
      if (sorted_contains(b, x, work)) out.push_back(x);
    return;
  }
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    ++work;
    if (a[i] < b[j])
      ++i;
    else if (b[j] < a[i])
      ++j;
    else {
      out.push_back(a[i]);
      ++i;
      ++j;
    }
  }
}

// out = a \ b
inline void difference_into(std::span<const uint32_t> a, std::span<const uint32_t> b,
                            std::vector<uint32_t>& out, uint64_t& work) {
  out.clear();
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    ++work;
    if (a[i] < b[j])
      out.push_back(a[i++]);
    else if (b[j] < a[i])
      ++j;
    else {
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
}

inline void union_into(std::span<const uint32_t> a, std::span<const uint32_t> b,
                       std::vector<uint32_t>& out, uint64_t& work) {
  out.clear();
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    ++work;
    if (a[i] < b[j])
      out.push_back(a[i++]);
    else if (b[j] < a[i])
      out.push_back(b[j++]);
    else {
      out.push_back(a[i]);
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
}

}  // namespace agpm
