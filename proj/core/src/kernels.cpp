#include "spts/kernels.hpp"

#include <cblas.h>

#include <algorithm>
#include <cmath>

extern "C" void openblas_set_num_threads(int);

namespace spts::kernels {

namespace {
bool pin_blas_threads() {
  openblas_set_num_threads(1);
  return true;
}
const bool blas_pinned = pin_blas_threads();
}  // namespace

void gemm(bool trans_a, bool trans_b, int m, int n, int k, float alpha, const float* a, int lda,
          const float* b, int ldb, float beta, float* c, int ldc) {
  (void)blas_pinned;
  cblas_sgemm(CblasRowMajor, trans_a ? CblasTrans : CblasNoTrans,
              trans_b ? CblasTrans : CblasNoTrans, m, n, k, alpha, a, lda, b, ldb, beta, c, ldc);
}

void gemm(bool trans_a, bool trans_b, int m, int n, int k, double alpha, const double* a, int lda,
          const double* b, int ldb, double beta, double* c, int ldc) {
  (void)blas_pinned;
  cblas_dgemm(CblasRowMajor, trans_a ? CblasTrans : CblasNoTrans,
              trans_b ? CblasTrans : CblasNoTrans, m, n, k, alpha, a, lda, b, ldb, beta, c, ldc);
}

template <typename T>
void softmax_row(T* x, int n) {
  T m = x[0];
  for (int i = 1; i < n; ++i) m = std::max(m, x[i]);
  T sum = 0;
  for (int i = 0; i < n; ++i) {
    x[i] = std::exp(x[i] - m);
    sum += x[i];
  }
  T inv = T{1} / sum;
  for (int i = 0; i < n; ++i) x[i] *= inv;
}

template <typename T>
void layer_norm_row(const T* x, const T* gamma, const T* beta, T eps, T* y, int n) {
  T mean = 0;
  for (int i = 0; i < n; ++i) mean += x[i];
  mean /= n;
  T var = 0;
  for (int i = 0; i < n; ++i) {
    T d = x[i] - mean;
    var += d * d;
  }
  var /= n;
  T inv = T{1} / std::sqrt(var + eps);
  for (int i = 0; i < n; ++i) y[i] = gamma[i] * (x[i] - mean) * inv + beta[i];
}

template void softmax_row<float>(float*, int);
template void softmax_row<double>(double*, int);
template void layer_norm_row<float>(const float*, const float*, const float*, float, float*, int);
template void layer_norm_row<double>(const double*, const double*, const double*, double, double*,
                                     int);

}  // namespace spts::kernels
