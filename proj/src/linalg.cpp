#include "cubicspan/linalg.hpp"

namespace cubicspan {

std::vector<int> rref_in_place(const Field& f, Mat& m) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t sel = r;
    while (sel < m.rows && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols; ++j)
        std::swap(m.at(sel, j), m.at(r, j));
    Fe s = f.inv(m.at(r, c));
    if (s != 1)
      for (std::size_t j = c; j < m.cols; ++j)
        m.at(r, j) = f.mul(m.at(r, j), s);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      Fe v = m.at(i, c);
      if (v == 0) continue;
      Fe nv = f.neg(v);
      for (std::size_t j = c; j < m.cols; ++j)
        m.at(i, j) = f.add(m.at(i, j), f.mul(nv, m.at(r, j)));
    }
    pivots.push_back(int(c));
    ++r;
  }
  return pivots;
}

std::size_t rank(const Field& f, Mat m) { return rref_in_place(f, m).size(); }

std::vector<std::vector<Fe>> null_space(const Field& f, Mat m) {
  auto pivots = rref_in_place(f, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Fe>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Fe> v(m.cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = f.neg(m.at(i, free));
    // scale so the first nonzero entry is 1
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (v[j]) {
        Fe s = f.inv(v[j]);
        if (s != 1)
          for (std::size_t t = j; t < m.cols; ++t) v[t] = f.mul(v[t], s);
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_gf2(std::vector<std::uint64_t>& rows, std::size_t nrows,
                     std::size_t words) {
  std::size_t rank = 0;
  std::size_t ncols = words * 64;
  for (std::size_t c = 0; c < ncols && rank < nrows; ++c) {
    std::size_t w = c >> 6;
    std::uint64_t mask = std::uint64_t(1) << (c & 63);
    std::size_t sel = rank;
    while (sel < nrows && !(rows[sel * words + w] & mask)) ++sel;
    if (sel == nrows) continue;
    if (sel != rank)
      for (std::size_t j = 0; j < words; ++j)
        std::swap(rows[sel * words + j], rows[rank * words + j]);
    const std::uint64_t* prow = &rows[rank * words];
    for (std::size_t i = rank + 1; i < nrows; ++i) {
      std::uint64_t* r = &rows[i * words];
      if (r[w] & mask)
        for (std::size_t j = 0; j < words; ++j) r[j] ^= prow[j];
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_gf3(std::vector<std::uint8_t>& a, std::size_t nrows,
                     std::size_t ncols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < nrows; ++c) {
    std::size_t sel = rank;
    while (sel < nrows && a[sel * ncols + c] == 0) ++sel;
    if (sel == nrows) continue;
    if (sel != rank)
      for (std::size_t j = 0; j < ncols; ++j)
        std::swap(a[sel * ncols + j], a[rank * ncols + j]);
    std::uint8_t* prow = &a[rank * ncols];
    if (prow[c] == 2)  // scale by 2 = inverse of 2 mod 3
      for (std::size_t j = c; j < ncols; ++j) {
        std::uint8_t v = std::uint8_t(prow[j] << 1);
        prow[j] = std::uint8_t(v >= 3 ? v - 3 : v);
      }
    for (std::size_t i = rank + 1; i < nrows; ++i) {
      std::uint8_t* r = &a[i * ncols];
      std::uint8_t fct = r[c];
      if (!fct) continue;
      std::uint8_t m = std::uint8_t(3 - fct);  // add m * pivot row
      for (std::size_t j = c; j < ncols; ++j) {
        std::uint8_t v = std::uint8_t(r[j] + m * prow[j]);
        v = std::uint8_t(v >= 3 ? v - 3 : v);
        r[j] = std::uint8_t(v >= 3 ? v - 3 : v);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace cubicspan
