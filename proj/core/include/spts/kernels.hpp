#pragma once

#include <cstdint>

namespace spts::kernels {

// C = alpha * op(A) * op(B) + beta * C, row-major.
// Pinned to a single BLAS thread so results are bit-reproducible run to run.
void gemm(bool trans_a, bool trans_b, int m, int n, int k, float alpha, const float* a, int lda,
          const float* b, int ldb, float beta, float* c, int ldc);
void gemm(bool trans_a, bool trans_b, int m, int n, int k, double alpha, const double* a, int lda,
          const double* b, int ldb, double beta, double* c, int ldc);

// In-place softmax over one contiguous row of length n (max-subtracted).
template <typename T>
void softmax_row(T* x, int n);

// y = gamma * (x - mean) / sqrt(var + eps) + beta over one row of length n.
template <typename T>
void layer_norm_row(const T* x, const T* gamma, const T* beta, T eps, T* y, int n);

}  // namespace spts::kernels
