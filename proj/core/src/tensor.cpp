#include "crayon/tensor.hpp"

#include <sstream>

#include "crayon/errors.hpp"

namespace crayon {

int64_t shape_numel(const std::vector<int>& shape) {
  int64_t n = 1;
  for (int d : shape) n *= d;
  return n;
}

std::string shape_str(const std::vector<int>& shape) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < shape.size(); ++i) {
    if (i) os << ",";
    os << shape[i];
  }
  os << ")";
  return os.str();
}

Tensor::Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
  for (int d : shape_) {
    if (d < 1) throw DimensionError("tensor dimension must be >= 1, got shape " + crayon::shape_str(shape_));
  }
  data_.assign(static_cast<size_t>(shape_numel(shape_)), 0.0f);
}

Tensor::Tensor(std::vector<int> shape, std::vector<float> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  for (int d : shape_) {
    if (d < 1) throw DimensionError("tensor dimension must be >= 1, got shape " + crayon::shape_str(shape_));
  }
  if (static_cast<int64_t>(data_.size()) != shape_numel(shape_)) {
    throw DimensionError("tensor data length " + std::to_string(data_.size()) +
                         " does not match shape " + crayon::shape_str(shape_));
  }
}

Tensor Tensor::full(std::vector<int> shape, float value) {
  Tensor t(std::move(shape));
  t.fill(value);
  return t;
}

std::string Tensor::shape_str() const { return crayon::shape_str(shape_); }

Tensor Tensor::unsqueezed() const {
  std::vector<int> s;
  s.reserve(shape_.size() + 1);
  s.push_back(1);
  s.insert(s.end(), shape_.begin(), shape_.end());
  return Tensor(std::move(s), data_);
}

void Tensor::fill(float value) { data_.assign(data_.size(), value); }

}  // namespace crayon
