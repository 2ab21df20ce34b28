#pragma once

#include <string>

namespace imumix::kernels {

// Dense double-precision kernels behind the model's inner loops. Each entry
// has a scalar reference implementation and, where the CPU supports it, a
// SIMD variant. The active table is chosen once at startup (or forced via
// set_backend / the IMUMIX_KERNELS environment variable) so a run uses one
// backend throughout; scalar and SIMD variants are equivalence-tested against
// each other in the test suite.
//
// Matrices are row-major with explicit leading dimensions so sub-blocks
// (e.g. per-head slices) can be addressed without copies.
struct Kernels {
    const char* name;

    // C[m x n] = (acc ? C : 0) + A[m x k] * B[k x n]
    void (*gemm_nn)(int m, int n, int k, const double* A, int lda,
                    const double* B, int ldb, double* C, int ldc, bool acc);
    // C[m x n] = (acc ? C : 0) + A[m x k] * B[n x k]^T
    void (*gemm_nt)(int m, int n, int k, const double* A, int lda,
                    const double* B, int ldb, double* C, int ldc, bool acc);
    // C[m x n] = (acc ? C : 0) + A[k x m]^T * B[k x n]
    void (*gemm_tn)(int m, int n, int k, const double* A, int lda,
                    const double* B, int ldb, double* C, int ldc, bool acc);

    // y += a * x
    void (*axpy)(int n, double a, const double* x, double* y);
    double (*dot)(int n, const double* x, const double* y);
    double (*sum_sq)(int n, const double* x);

    // Fused AdamW update over flat arrays. bc1/bc2 are the bias corrections
    // (1 - beta^t) for the current step.
    void (*adamw_update)(int n, double* p, const double* g, double* m, double* v,
                         double beta1, double beta2, double bc1, double bc2,
                         double lr, double eps, double weight_decay);
};

const Kernels& scalar();

// Null when the binary was built without AVX2 support or the CPU lacks it.
const Kernels* avx2();

// The preferred table for this process: the best supported SIMD variant, or
// scalar. Honors IMUMIX_KERNELS=scalar|avx2|auto on first use.
const Kernels& active();

// Force a backend ("scalar", "avx2", "auto"). Throws if unavailable.
void set_backend(const std::string& name);

}  // namespace imumix::kernels
