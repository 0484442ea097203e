#include "mac/linalg.hpp"

#include <utility>

#include "mac/kernels.hpp"

namespace mac {

std::size_t rank_f2(BitMatrix& a) {
  std::size_t row = 0;
  const std::size_t w = a.words();
  for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
    std::size_t p = row;
    while (p < a.rows() && !a.get(p, c)) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t k = 0; k < w; ++k) std::swap(a.row(p)[k], a.row(row)[k]);
    // columns left of c are already zero in rows below the pivot, so start at word c/64
    std::size_t w0 = c / 64;
    for (std::size_t i = row + 1; i < a.rows(); ++i)
      if (a.get(i, c)) kernels::xor_words(a.row(i) + w0, a.row(row) + w0, w - w0);
    ++row;
  }
  return row;
}

}  // namespace mac
