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

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qsat {

/// Amplitude map keyed by computational-basis index, stored flat: one
/// amplitude and key_words() 64-bit key words per entry. Qubit i is bit i%64
/// of key word i/64 (LSB first), so registers wider than 64 qubits work.
///
/// Entries keep insertion order and keys stay pairwise distinct throughout the
/// pipeline: every circuit gate permutes basis indices, so relabeling keys in
/// place never collides and never changes the entry count.
class SparseState {
 public:
  explicit SparseState(int num_qubits)
      : num_qubits_(num_qubits),
        key_words_(num_qubits <= 64 ? 1 : (num_qubits + 63) / 64) {}

  int num_qubits() const { return num_qubits_; }
  int key_words() const { return key_words_; }
  std::size_t size() const { return amps_.size(); }

  void reserve(std::size_t entries) {
    keys_.reserve(entries * static_cast<std::size_t>(key_words_));
    amps_.reserve(entries);
  }

  /// Appends an entry whose key has `low_word` in word 0 and zeros above.
  void append(std::uint64_t low_word, std::complex<double> amplitude) {
    keys_.push_back(low_word);
    keys_.resize(keys_.size() + static_cast<std::size_t>(key_words_ - 1), 0);
    amps_.push_back(amplitude);
  }

  void append(std::span<const std::uint64_t> key, std::complex<double> amplitude);

  bool key_bit(std::size_t entry, int qubit) const {
    return (keys_[entry * key_words_ + (qubit >> 6)] >> (qubit & 63)) & 1u;
  }

  void flip_key_bit(std::size_t entry, int qubit) {
    keys_[entry * key_words_ + (qubit >> 6)] ^= std::uint64_t{1} << (qubit & 63);
  }

  std::complex<double> amplitude(std::size_t entry) const { return amps_[entry]; }
  std::complex<double>& amplitude(std::size_t entry) { return amps_[entry]; }

  std::span<const std::uint64_t> key(std::size_t entry) const {
    return {keys_.data() + entry * key_words_, static_cast<std::size_t>(key_words_)};
  }

  /// Low `count` key bits as an integer (count <= 64); used to read the
  /// variable register, which always sits at the bottom of the key.
  std::uint64_t key_low_bits(std::size_t entry, int count) const {
    const std::uint64_t word = keys_[entry * key_words_];
    return count >= 64 ? word : word & ((std::uint64_t{1} << count) - 1);
  }

  /// Compensated sum of |amplitude|^2 over all entries.
  double norm_squared() const;

  /// Linear scan for the entry with this key; empty when absent.
  std::optional<std::complex<double>> amplitude_of(std::span<const std::uint64_t> key) const;

  /// Entry indices ordered by key (highest word first); for state comparisons.
  std::vector<std::size_t> entries_sorted_by_key() const;

 private:
  int num_qubits_;
  int key_words_;
  std::vector<std::uint64_t> keys_;
  std::vector<std::complex<double>> amps_;
};

}  // namespace qsat
