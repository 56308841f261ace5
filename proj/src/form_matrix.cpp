#include "eds/form_matrix.hpp"

namespace eds {

FormMatrix::FormMatrix(SpacePtr space, int rows, int cols, int degree)
    : space_(std::move(space)), rows_(rows), cols_(cols), degree_(degree) {
  if (rows_ < 0 || cols_ < 0) throw error("form matrix shape must be nonnegative");
  entries_.assign(static_cast<std::size_t>(rows_) * cols_, Form(space_, degree_));
}

void FormMatrix::set(int r, int c, Form f) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw error("form matrix index out of range");
  if (!same_space(f.space(), space_)) throw error("form matrix entry: coframe mismatch");
  if (f.degree() != degree_) throw error("form matrix entry: degree mismatch");
  entries_[static_cast<std::size_t>(r) * cols_ + c] = std::move(f);
}

bool FormMatrix::is_zero() const {
  for (const Form& f : entries_)
    if (!f.is_zero()) return false;
  return true;
}

FormMatrix matrix_wedge(const FormMatrix& a, const FormMatrix& b) {
  if (a.cols() != b.rows()) throw error("matrix wedge: shapes not conformable");
  if (!same_space(a.space(), b.space())) throw error("matrix wedge: coframe mismatch");
  FormMatrix out(a.space(), a.rows(), b.cols(), a.degree() + b.degree());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      Form sum(a.space(), a.degree() + b.degree());
      for (int k = 0; k < a.cols(); ++k) sum = sum + a.at(i, k).wedge(b.at(k, j));
      out.set(i, j, std::move(sum));
    }
  return out;
}

FormMatrix matrix_d(const FormMatrix& a, const StructureDifferential& sd) {
  FormMatrix out(a.space(), a.rows(), a.cols(), a.degree() + 1);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.set(i, j, sd.d(a.at(i, j)));
  return out;
}

FormMatrix matrix_add(const FormMatrix& a, const FormMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw error("matrix add: shape mismatch");
  FormMatrix out(a.space(), a.rows(), a.cols(), a.degree());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j) + b.at(i, j));
  return out;
}

FormMatrix matrix_sub(const FormMatrix& a, const FormMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw error("matrix sub: shape mismatch");
  FormMatrix out(a.space(), a.rows(), a.cols(), a.degree());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j) - b.at(i, j));
  return out;
}

bool check_skew(const FormMatrix& m) {
  if (m.rows() != m.cols()) throw error("check_skew: matrix not square");
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i; j < m.cols(); ++j)
      if (!(m.at(i, j) + m.at(j, i)).is_zero()) return false;
  return true;
}

}  // namespace eds
