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

#include "trc/semilinear.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <numeric>

namespace trc {

namespace {

std::atomic<uint64_t> g_lcm_cap{1000000};

uint64_t lcm_checked(uint64_t a, uint64_t b) {
  uint64_t g = std::gcd(a, b);
  uint64_t r = a / g * b;
  if (r > g_lcm_cap.load())
    throw SemilinearError("semilinear: lcm of periods exceeds cap (" +
                          std::to_string(g_lcm_cap.load()) + ")");
  return r;
}

std::vector<uint64_t> divisors(uint64_t n) {
  std::vector<uint64_t> lo, hi;
  for (uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      lo.push_back(d);
      if (d != n / d)
        hi.push_back(n / d);
    }
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

bool in_prog(const Progression &p, uint64_t k) {
  return k >= p.offset && (k - p.offset) % p.period == 0;
}

} // namespace

void SemilinearSet::set_lcm_cap(uint64_t cap) { g_lcm_cap = cap; }
uint64_t SemilinearSet::lcm_cap() { return g_lcm_cap.load(); }

SemilinearSet SemilinearSet::finite(std::vector<uint64_t> ks) {
  return from_parts(std::move(ks), {});
}

SemilinearSet SemilinearSet::progression(uint64_t offset, uint64_t period) {
  return from_parts({}, {Progression{offset, period}});
}

SemilinearSet SemilinearSet::from_parts(std::vector<uint64_t> ks,
                                        std::vector<Progression> ps) {
  for (auto &p : ps)
    if (p.period == 0)
      throw SemilinearError("semilinear: period must be positive");
  SemilinearSet s;
  s.finite_ = std::move(ks);
  s.progs_ = std::move(ps);
  s.canonicalize();
  return s;
}

bool SemilinearSet::contains(uint64_t k) const {
  if (std::binary_search(finite_.begin(), finite_.end(), k))
    return true;
  for (auto &p : progs_)
    if (in_prog(p, k))
      return true;
  return false;
}

uint64_t SemilinearSet::min() const {
  if (is_empty())
    throw SemilinearError("semilinear: min of empty set");
  uint64_t m = UINT64_MAX;
  if (!finite_.empty())
    m = finite_.front();
  for (auto &p : progs_)
    m = std::min(m, p.offset);
  return m;
}

uint64_t SemilinearSet::threshold() const {
  uint64_t t = 0;
  if (!finite_.empty())
    t = finite_.back();
  for (auto &p : progs_)
    t = std::max(t, p.offset);
  return t;
}

uint64_t SemilinearSet::lcm_periods() const {
  uint64_t l = 1;
  for (auto &p : progs_)
    l = lcm_checked(l, p.period);
  return l;
}

void SemilinearSet::canonicalize() {
  std::sort(finite_.begin(), finite_.end());
  finite_.erase(std::unique(finite_.begin(), finite_.end()), finite_.end());
  if (progs_.empty())
    return;

  uint64_t t0 = finite_.empty() ? 0 : finite_.back() + 1;
  for (auto &p : progs_)
    t0 = std::max(t0, p.offset);
  const uint64_t L = lcm_periods();
  const uint64_t n = t0 + 2 * L;
  std::vector<char> bits(n, 0);
  for (uint64_t k : finite_)
    bits[k] = 1;
  for (auto &p : progs_)
    for (uint64_t k = p.offset; k < n; k += p.period)
      bits[k] = 1;

  uint64_t per = L;
  for (uint64_t d : divisors(L)) {
    bool ok = true;
    for (uint64_t k = t0; k < t0 + L && ok; ++k)
      ok = bits[k] == bits[k + d];
    if (ok) {
      per = d;
      break;
    }
  }

  std::vector<Progression> chosen;
  for (uint64_t d : divisors(per)) {
    for (uint64_t c = 0; c < d; ++c) {
      uint64_t k0 = t0 + ((c + d - t0 % d) % d);
      bool full = true;
      for (uint64_t k = k0; k < t0 + per && full; k += d)
        full = bits[k];
      if (!full)
        continue;
      uint64_t r = k0;
      while (r >= d && bits[r - d])
        r -= d;
      bool covered = false;
      for (auto &q : chosen)
        if (d % q.period == 0 && r >= q.offset &&
            (r - q.offset) % q.period == 0) {
          covered = true;
          break;
        }
      if (!covered)
        chosen.push_back({r, d});
    }
  }

  std::vector<uint64_t> rest;
  for (uint64_t k = 0; k < t0; ++k) {
    if (!bits[k])
      continue;
    bool covered = false;
    for (auto &q : chosen)
      if (in_prog(q, k)) {
        covered = true;
        break;
      }
    if (!covered)
      rest.push_back(k);
  }
  std::sort(chosen.begin(), chosen.end(), [](auto &a, auto &b) {
    return a.period != b.period ? a.period < b.period : a.offset < b.offset;
  });
  finite_ = std::move(rest);
  progs_ = std::move(chosen);
}

SemilinearSet SemilinearSet::unite(const SemilinearSet &o) const {
  if (o.is_empty())
    return *this;
  if (is_empty())
    return o;
  std::vector<uint64_t> ks = finite_;
  ks.insert(ks.end(), o.finite_.begin(), o.finite_.end());
  std::vector<Progression> ps = progs_;
  ps.insert(ps.end(), o.progs_.begin(), o.progs_.end());
  return from_parts(std::move(ks), std::move(ps));
}

SemilinearSet unite(const SemilinearSet &a, const SemilinearSet &b) {
  return a.unite(b);
}

SemilinearSet SemilinearSet::shift(uint64_t d) const {
  if (d == 0)
    return *this;
  SemilinearSet s = *this;
  for (auto &k : s.finite_)
    k += d;
  for (auto &p : s.progs_)
    p.offset += d;
  return s;
}

SemilinearSet SemilinearSet::tail_from_min() const {
  return progression(min(), 1);
}

bool SemilinearSet::equals(const SemilinearSet &o) const {
  uint64_t t = std::max(threshold(), o.threshold());
  uint64_t l = lcm_checked(lcm_periods(), o.lcm_periods());
  uint64_t bound = t + 2 * l;
  for (uint64_t k = 0; k <= bound; ++k)
    if (contains(k) != o.contains(k))
      return false;
  return true;
}

bool SemilinearSet::subset_of(const SemilinearSet &o) const {
  return unite(o).equals(o);
}

std::string SemilinearSet::str() const {
  if (is_empty())
    return "{}";
  std::string out;
  auto sep = [&] {
    if (!out.empty())
      out += " u ";
  };
  if (!finite_.empty()) {
    out += "{";
    for (size_t i = 0; i < finite_.size(); ++i) {
      if (i)
        out += ",";
      out += std::to_string(finite_[i]);
    }
    out += "}";
  }
  for (auto &p : progs_) {
    sep();
    if (p.period != 1)
      out += std::to_string(p.period);
    out += "N";
    if (p.offset != 0)
      out += "+" + std::to_string(p.offset);
  }
  return out;
}

namespace {

struct SetLexer {
  std::string_view s;
  size_t i = 0;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
      ++i;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool at_digit() {
    ws();
    return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
  }
  uint64_t number() {
    ws();
    if (!at_digit())
      fail("expected number");
    uint64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + static_cast<uint64_t>(s[i] - '0');
      ++i;
    }
    return v;
  }
  [[noreturn]] void fail(const std::string &m) {
    throw SemilinearError("semilinear: " + m + " at offset " +
                          std::to_string(i) + " in '" + std::string(s) + "'");
  }
};

} // namespace

SemilinearSet SemilinearSet::parse(std::string_view text) {
  SetLexer lx{text};
  std::vector<uint64_t> ks;
  std::vector<Progression> ps;
  for (;;) {
    if (lx.eat('{')) {
      if (!lx.eat('}')) {
        do
          ks.push_back(lx.number());
        while (lx.eat(','));
        if (!lx.eat('}'))
          lx.fail("expected '}'");
      }
    } else {
      uint64_t p = 1;
      bool have_num = lx.at_digit();
      if (have_num)
        p = lx.number();
      if (lx.eat('N')) {
        uint64_t o = 0;
        if (lx.eat('+'))
          o = lx.number();
        if (p == 0)
          lx.fail("period must be positive");
        ps.push_back({o, p});
      } else if (have_num) {
        ks.push_back(p);
      } else {
        lx.fail("expected set term");
      }
    }
    lx.ws();
    if (lx.i < text.size() && text[lx.i] == 'u') {
      ++lx.i;
      continue;
    }
    break;
  }
  lx.ws();
  if (lx.i != text.size())
    lx.fail("trailing input");
  return from_parts(std::move(ks), std::move(ps));
}

} // namespace trc
