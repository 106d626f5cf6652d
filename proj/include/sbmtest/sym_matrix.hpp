#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace sbmtest {

// Dense symmetric matrix; writes mirror across the diagonal. Dimensions stay
// small here (group counts, plug-in block probabilities, co-clustering), so
// full dense storage is fine.
template <typename T>
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int dim, T init = T{})
      : dim_(dim), data_(static_cast<std::size_t>(dim) * dim, init) {}

  int dim() const { return dim_; }

  T operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * dim_ + j];
  }

  void set(int i, int j, T value) {
    data_[static_cast<std::size_t>(i) * dim_ + j] = value;
    data_[static_cast<std::size_t>(j) * dim_ + i] = value;
  }

  void add(int i, int j, T delta) {
    data_[static_cast<std::size_t>(i) * dim_ + j] += delta;
    if (i != j) data_[static_cast<std::size_t>(j) * dim_ + i] += delta;
  }

  // append a zero-initialized row/column
  void grow() {
    SymmetricMatrix out(dim_ + 1);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j <= i; ++j) out.set(i, j, (*this)(i, j));
    *this = std::move(out);
  }

  // drop row/column `k`, shifting higher indices down
  void erase(int k) {
    if (k < 0 || k >= dim_) throw std::out_of_range("SymmetricMatrix::erase");
    SymmetricMatrix out(dim_ - 1);
    for (int i = 0; i < dim_; ++i) {
      if (i == k) continue;
      const int ii = i < k ? i : i - 1;
      for (int j = 0; j <= i; ++j) {
        if (j == k) continue;
        const int jj = j < k ? j : j - 1;
        out.set(ii, jj, (*this)(i, j));
      }
    }
    *this = std::move(out);
  }

  bool operator==(const SymmetricMatrix&) const = default;

 private:
  int dim_ = 0;
  std::vector<T> data_;
};

}  // namespace sbmtest
