// Copyright 2026 The qsat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsat/sparse_state.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsat {

void SparseState::append(std::span<const std::uint64_t> key, std::complex<double> amplitude) {
  if (key.size() != static_cast<std::size_t>(key_words_)) {
    throw std::invalid_argument("key width mismatch");
  }
  keys_.insert(keys_.end(), key.begin(), key.end());
  amps_.push_back(amplitude);
}

double SparseState::norm_squared() const {
  double sum = 0.0;
  double compensation = 0.0;
  for (const std::complex<double>& amp : amps_) {
    const double term = amp.real() * amp.real() + amp.imag() * amp.imag();
    const double y = term - compensation;
    const double t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
  }
  return sum;
}

std::optional<std::complex<double>> SparseState::amplitude_of(
    std::span<const std::uint64_t> key) const {
  if (key.size() != static_cast<std::size_t>(key_words_)) {
    throw std::invalid_argument("key width mismatch");
  }
  for (std::size_t entry = 0; entry < amps_.size(); ++entry) {
    if (std::equal(key.begin(), key.end(), keys_.begin() + entry * key_words_)) {
      return amps_[entry];
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> SparseState::entries_sorted_by_key() const {
  std::vector<std::size_t> order(amps_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
    for (int w = key_words_ - 1; w >= 0; --w) {
      const std::uint64_t wa = keys_[a * key_words_ + w];
      const std::uint64_t wb = keys_[b * key_words_ + w];
      if (wa != wb) return wa < wb;
    }
    return false;
  });
  return order;
}

}  // namespace qsat
