//===----------------------------------------------------------------------===//
//
// Copyright 2026 Contributors to the trc project
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
//
//===----------------------------------------------------------------------===//

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trc {

struct Progression {
  uint64_t offset = 0;
  uint64_t period = 1;
  bool operator==(const Progression &) const = default;
};

class SemilinearError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Finite part plus arithmetic progressions, kept canonical: every progression
// is maximal (not contained in another progression of the set), the finite
// part holds only elements outside all progressions.
class SemilinearSet {
public:
  SemilinearSet() = default;

  static SemilinearSet empty() { return {}; }
  static SemilinearSet naturals() { return progression(0, 1); }
  static SemilinearSet singleton(uint64_t k) { return finite({k}); }
  static SemilinearSet finite(std::vector<uint64_t> ks);
  static SemilinearSet progression(uint64_t offset, uint64_t period);
  static SemilinearSet from_parts(std::vector<uint64_t> ks,
                                  std::vector<Progression> ps);
  static SemilinearSet parse(std::string_view text);

  bool contains(uint64_t k) const;
  bool is_empty() const { return finite_.empty() && progs_.empty(); }
  bool is_finite() const { return progs_.empty(); }
  uint64_t min() const;
  // Largest finite element or offset; 0 for the empty set.
  uint64_t threshold() const;
  uint64_t lcm_periods() const;

  SemilinearSet unite(const SemilinearSet &o) const;
  SemilinearSet shift(uint64_t d) const;
  SemilinearSet tail_from_min() const;
  bool equals(const SemilinearSet &o) const;
  bool subset_of(const SemilinearSet &o) const;

  const std::vector<uint64_t> &finite_part() const { return finite_; }
  const std::vector<Progression> &progressions() const { return progs_; }

  std::string str() const;

  bool operator==(const SemilinearSet &o) const {
    return finite_ == o.finite_ && progs_ == o.progs_;
  }

  // Cap on lcm of periods during canonicalization.
  static void set_lcm_cap(uint64_t cap);
  static uint64_t lcm_cap();

private:
  void canonicalize();

  std::vector<uint64_t> finite_;
  std::vector<Progression> progs_;
};

SemilinearSet unite(const SemilinearSet &a, const SemilinearSet &b);

} // namespace trc
