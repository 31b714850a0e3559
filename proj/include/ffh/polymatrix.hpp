#pragma once

// Matrices over F_q[t]: determinants, column Hermite form, Smith invariants,
// determinantal divisors, kernel modules and the small-solution solver.
// Column convention throughout: solutions x satisfy A x = 0.

#include <string>
#include <vector>

#include "ffh/fqt.hpp"

namespace ffh {

using PolyVector = std::vector<RingElement>;

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(Field f, int rows, int cols);
  static PolyMatrix identity(Field f, int n);
  // PreconditionError on ragged or empty input.
  static PolyMatrix from_rows(Field f, const std::vector<PolyVector>& rows);

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  RingElement& operator()(int i, int j) { return a_[index(i, j)]; }
  const RingElement& operator()(int i, int j) const { return a_[index(i, j)]; }

  // N = max entry degree; kNegInf for the zero matrix.
  int max_degree() const;
  PolyVector column(int j) const;
  PolyMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyVector operator*(const PolyVector& x) const;
  bool operator==(const PolyMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  // Rows separated by ';', entries by ','.
  std::string to_string() const;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j); }
  Field field_;
  int rows_ = 0, cols_ = 0;
  std::vector<RingElement> a_;
};

int max_degree(const PolyVector& v);
bool is_zero_vector(const PolyVector& v);
std::string to_string(const PolyVector& v);

// Fraction-free (Bareiss) elimination. PreconditionError unless square.
RingElement determinant(const PolyMatrix& A);

struct HermiteResult {
  PolyMatrix H;  // = A * U
  PolyMatrix U;  // unimodular
  std::vector<int> pivot_rows;  // pivot row of column c, for c < rank
};
// Column Hermite form: lower echelon, monic pivots, entries left of each
// pivot in its row reduced modulo the pivot (degree below it).
HermiteResult hermite_form(const PolyMatrix& A);

// Nonzero invariant factors (monic, each dividing the next).
std::vector<RingElement> smith_invariants(const PolyMatrix& A);

// Monic gcd of all s x s minors (zero if they all vanish), from the Smith
// invariants; when the number of minors is small it is also computed by
// direct minor enumeration and a disagreement raises ConsistencyError.
RingElement determinantal_divisor(const PolyMatrix& A, int s);
RingElement determinantal_divisor_by_minors(const PolyMatrix& A, int s);

// Rank over F_q(t), computed by specialising t at enough points of an
// extension field. A caller that has proved rank <= upper_bound may pass it to
// stop as soon as a specialisation reaches it.
int rank(const PolyMatrix& A, int upper_bound = -1);

// Basis of the right kernel module, column reduced (distinct leading
// positions), sorted by degree.
std::vector<PolyVector> kernel_basis(const PolyMatrix& A);

// Minimal max-degree element of the reduced kernel basis, scaled so that its
// first entry of maximal degree is monic; ties broken by printed form.
// PreconditionError when the kernel is trivial.
PolyVector minimal_kernel_vector(const PolyMatrix& A);

struct ThueSiegelCertificate {
  int s = 0, r = 0, N = 0, deg_D = 0;
  int achieved = 0;              // max deg x_i
  Rational bound;                // (sN - deg D) / (r - s)
  bool within_bound = false;
  bool within_ceiled_bound = false;
};

struct ThueSiegelResult {
  PolyVector x;
  ThueSiegelCertificate certificate;
};

// Nonzero x with A x = 0 and max deg x_i <= (sN - deg D)/(r - s) for a full
// rank s x r matrix with r > s. A violated bound raises ConsistencyError whose
// message says whether the ceiled bound still holds.
ThueSiegelResult thue_siegel_solve(const PolyMatrix& A);

}  // namespace ffh
