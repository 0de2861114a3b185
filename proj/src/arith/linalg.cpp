// Copyright 2026 The ecrank Authors
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

#include "ecrank/arith/linalg.hpp"

namespace ecrank {

QPoly characteristic_polynomial(const QMatrix& m0) {
  if (m0.rows() != m0.cols()) throw InvalidArgument("characteristic polynomial of a non-square matrix");
  const std::size_t n = m0.rows();
  QMatrix h = m0;
  // Similarity transform to upper Hessenberg form.
  for (std::size_t c = 0; c + 2 <= n; ++c) {
    std::size_t p = c + 1;
    while (p < n && sgn(h(p, c)) == 0) ++p;
    if (p == n) continue;
    if (p != c + 1) {
      h.swap_rows(p, c + 1);
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, p), h(i, c + 1));
    }
    for (std::size_t i = c + 2; i < n; ++i) {
      if (sgn(h(i, c)) == 0) continue;
      Rational f = h(i, c) / h(c + 1, c);
      for (std::size_t j = 0; j < n; ++j) h(i, j) -= f * h(c + 1, j);
      for (std::size_t j = 0; j < n; ++j) h(j, c + 1) += f * h(j, i);
    }
  }
  // Recurrence on leading principal submatrices.
  std::vector<QPoly> p(n + 1);
  p[0] = QPoly(Rational(1));
  const QPoly t = QPoly::x();
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = (t - QPoly(h(k - 1, k - 1))) * p[k - 1];
    Rational prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      prod *= h(k - i, k - i - 1);
      if (sgn(prod) == 0) break;
      p[k] -= QPoly(prod * h(k - i - 1, k - 1)) * p[k - i - 1];
    }
  }
  return p[n];
}

}  // namespace ecrank
