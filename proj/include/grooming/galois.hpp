// Copyright 2026 The Ring Grooming Authors
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

// Small finite fields GF(p^m) with table arithmetic. Elements are encoded as
// integers whose base-p digits are polynomial coefficients.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace grooming {

// (p, m) with q = p^m, or nullopt when q is not a prime power.
inline std::optional<std::pair<int, int>> prime_power(int q) {
  if (q < 2) return std::nullopt;
  int p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  int m = 0;
  int x = q;
  while (x % p == 0) {
    x /= p;
    ++m;
  }
  if (x != 1) return std::nullopt;
  return std::make_pair(p, m);
}

inline bool is_prime(int q) {
  auto pp = prime_power(q);
  return pp && pp->second == 1;
}

class GaloisField {
 public:
  explicit GaloisField(int q) : q_(q) {
    auto pp = prime_power(q);
    if (!pp) throw std::invalid_argument("GF(" + std::to_string(q) + ") needs a prime power order");
    p_ = pp->first;
    m_ = pp->second;
    add_.assign(static_cast<std::size_t>(q_) * q_, 0);
    for (int a = 0; a < q_; ++a)
      for (int b = 0; b < q_; ++b) add_[idx(a, b)] = digit_add(a, b);
    // Monic degree-m modulus: coefficients of x^0..x^{m-1} encoded in `low`.
    for (int low = 0; low < q_; ++low) {
      build_mul(low);
      if (is_field()) return;
    }
    throw std::logic_error("no irreducible polynomial found");
  }

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int add(int a, int b) const { return add_[idx(a, b)]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int neg(int a) const {
    for (int b = 0; b < q_; ++b)
      if (add(a, b) == 0) return b;
    return 0;
  }
  int sub(int a, int b) const { return add(a, neg(b)); }

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * q_ + b; }

  int digit_add(int a, int b) const {
    int out = 0;
    int scale = 1;
    for (int i = 0; i < m_; ++i) {
      out += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return out;
  }

  void build_mul(int low) {
    std::vector<int> modulus(m_);
    for (int i = 0, x = low; i < m_; ++i, x /= p_) modulus[i] = x % p_;
    mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
    for (int a = 0; a < q_; ++a)
      for (int b = 0; b < q_; ++b) {
        std::vector<int> pa(m_), pb(m_), prod(2 * m_, 0);
        for (int i = 0, x = a; i < m_; ++i, x /= p_) pa[i] = x % p_;
        for (int i = 0, x = b; i < m_; ++i, x /= p_) pb[i] = x % p_;
        for (int i = 0; i < m_; ++i)
          for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
        // x^m = -(modulus low part)
        for (int d = 2 * m_ - 1; d >= m_; --d) {
          int coef = prod[d];
          if (coef == 0) continue;
          prod[d] = 0;
          for (int i = 0; i < m_; ++i)
            prod[d - m_ + i] = ((prod[d - m_ + i] - coef * modulus[i]) % p_ + p_) % p_;
        }
        int out = 0;
        for (int i = m_ - 1; i >= 0; --i) out = out * p_ + prod[i];
        mul_[idx(a, b)] = out;
      }
  }

  bool is_field() const {
    for (int a = 1; a < q_; ++a) {
      bool inv = false;
      for (int b = 1; b < q_ && !inv; ++b) inv = mul(a, b) == 1;
      if (!inv) return false;
    }
    return true;
  }

  int q_;
  int p_ = 0;
  int m_ = 0;
  std::vector<int> add_;
  std::vector<int> mul_;
};

}  // namespace grooming
