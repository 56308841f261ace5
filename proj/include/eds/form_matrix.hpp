#pragma once

#include <vector>

#include "eds/form.hpp"
#include "eds/structure.hpp"

namespace eds {

/// Rectangular matrix of forms sharing one degree, e.g. a connection 1-form
/// matrix or a curvature 2-form matrix.
class FormMatrix {
 public:
  FormMatrix(SpacePtr space, int rows, int cols, int degree);

  static FormMatrix zero(SpacePtr space, int rows, int cols, int degree) {
    return FormMatrix(std::move(space), rows, cols, degree);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int degree() const { return degree_; }
  const SpacePtr& space() const { return space_; }

  /// 0-based access.
  const Form& at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, Form f);

  bool is_zero() const;
  bool operator==(const FormMatrix&) const = default;

 private:
  SpacePtr space_;
  int rows_, cols_, degree_;
  std::vector<Form> entries_;
};

/// Matrix product with the wedge as entrywise multiplication.
FormMatrix matrix_wedge(const FormMatrix& a, const FormMatrix& b);
FormMatrix matrix_d(const FormMatrix& a, const StructureDifferential& sd);
FormMatrix matrix_add(const FormMatrix& a, const FormMatrix& b);
FormMatrix matrix_sub(const FormMatrix& a, const FormMatrix& b);

/// True iff M is square with M_ij = -M_ji (zero diagonal included).
bool check_skew(const FormMatrix& m);

}  // namespace eds
