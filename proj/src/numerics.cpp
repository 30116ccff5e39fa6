#include "rauzy/numerics.hpp"

#include <utility>

namespace rauzy {

IMatrix identity(Eigen::Index n) {
  IMatrix m = IMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IMatrix elementary_b1() { return make_imatrix({{1, 1}, {0, 1}}); }
IMatrix elementary_b2() { return make_imatrix({{1, 0}, {1, 1}}); }

IMatrix mat_mul(const IMatrix& a, const IMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("mat_mul: inner dimensions differ");
  return a.lazyProduct(b);
}

RVector apply(const IMatrix& a, const RVector& v) {
  if (a.cols() != v.size()) throw DimensionError("apply: matrix/vector size mismatch");
  RVector out(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Rational sum(0);
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) sum += Rational(a(i, j)) * v(j);
    out(i) = sum;
  }
  return out;
}

Integer determinant(const IMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("determinant: matrix not square");
  const Eigen::Index n = a.rows();
  if (n == 0) return 1;
  IMatrix m = a;
  Integer previous = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && m(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      m.row(k).swap(m.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
        m(i, j) = t;
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool is_unimodular(const IMatrix& a) {
  if (a.rows() != a.cols()) return false;
  return abs(determinant(a)) == 1;
}

IMatrix unimodular_inverse(const IMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("unimodular_inverse: matrix not square");
  if (!is_unimodular(a)) throw DomainError("unimodular_inverse: determinant is not +-1");
  const Eigen::Index n = a.rows();
  Matrix<Rational> m(n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = Rational(a(i, j));
      m(i, n + j) = (i == j) ? 1 : 0;
    }
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (m(pivot, col) == 0) ++pivot;
    if (pivot != col) m.row(col).swap(m.row(pivot));
    const Rational p = m(col, col);
    for (Eigen::Index j = 0; j < 2 * n; ++j) m(col, j) /= p;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == col || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (Eigen::Index j = 0; j < 2 * n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  IMatrix inv(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Rational& x = m(i, n + j);
      // det = +-1 forces an integral inverse
      inv(i, j) = x.get_num();
    }
  return inv;
}

RVector make_rvector(std::initializer_list<Rational> entries) {
  RVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const auto& e : entries) v(i++) = e;
  return v;
}

IMatrix make_imatrix(std::initializer_list<std::initializer_list<long>> rows) {
  const auto n_rows = static_cast<Eigen::Index>(rows.size());
  const auto n_cols = n_rows == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  IMatrix m(n_rows, n_cols);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != n_cols)
      throw DimensionError("make_imatrix: ragged rows");
    Eigen::Index j = 0;
    for (long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

Eigen::VectorXd to_double(const RVector& v) {
  Eigen::VectorXd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i).get_d();
  return out;
}

Eigen::MatrixXd to_double(const IMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw DomainError("exact_rational: non-finite input");
  return Rational(x);
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("ratio: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw DomainError("parse_rational: empty string");
  Rational q;
  // mpq_set_str rejects decimal points, which is what we want
  if (q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw DomainError("parse_rational: malformed rational '" + s + "'");
  q.canonicalize();
  return q;
}

nlohmann::json to_json(const RVector& v) {
  auto j = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(to_string(v(i)));
  return j;
}

nlohmann::json to_json(const IMatrix& m) {
  auto j = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    j.push_back(std::move(row));
  }
  return j;
}

RVector rvector_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw DomainError("rvector_from_json: expected an array");
  RVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = parse_rational(j[i].get<std::string>());
  return v;
}

IMatrix imatrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw DomainError("imatrix_from_json: expected an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? 0 : static_cast<Eigen::Index>(j[0].size());
  IMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j[i].size()) != cols)
      throw DimensionError("imatrix_from_json: ragged rows");
    for (Eigen::Index k = 0; k < cols; ++k) {
      Integer z;
      if (z.set_str(j[i][k].get<std::string>(), 10) != 0)
        throw DomainError("imatrix_from_json: malformed integer");
      m(i, k) = z;
    }
  }
  return m;
}

}  // namespace rauzy
