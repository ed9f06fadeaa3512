#pragma once

#include <initializer_list>

#include "mtt/matrix.hpp"

namespace helpers {

inline mtt::MatrixQ make_matrix(
    std::initializer_list<std::initializer_list<long long>> rows) {
  const mtt::Index n = static_cast<mtt::Index>(rows.size());
  mtt::MatrixQ m(n, rows.begin()->size());
  mtt::Index i = 0;
  for (const auto& row : rows) {
    mtt::Index j = 0;
    for (const long long v : row) m(i, j++) = mtt::Rational(v);
    ++i;
  }
  return m;
}

}  // namespace helpers
