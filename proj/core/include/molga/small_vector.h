//
// molga - genetic algorithms for molecular graphs
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGA_SMALL_VECTOR_H_
#define MOLGA_SMALL_VECTOR_H_

#include <array>
#include <cstddef>
#include <initializer_list>

namespace molga {

// Fixed-capacity list of allowed valences; at most three per element.
class ValenceList {
 public:
  ValenceList() = default;
  ValenceList(std::initializer_list<int> values) {
    for (int v : values) push_back(v);
  }

  void push_back(int v) { data_[size_++] = v; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  int operator[](std::size_t i) const { return data_[i]; }
  int back() const { return data_[size_ - 1]; }
  const int *begin() const { return data_.data(); }
  const int *end() const { return data_.data() + size_; }

 private:
  std::array<int, 3> data_{};
  std::size_t size_ = 0;
};

}  // namespace molga

#endif  // MOLGA_SMALL_VECTOR_H_
