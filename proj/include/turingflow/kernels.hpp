#pragma once

// Data-parallel inner-loop kernels used by the linear solvers and the
// reaction-diffusion stepper. Each kernel has a scalar reference
// implementation and an AVX2 variant; the backend is selected once at
// runtime from CPU capabilities and can be pinned for equivalence tests.
//
// Reductions (dot, norm2) accumulate over fixed 4096-element chunks with the
// per-chunk partials summed in chunk order, so the result is independent of
// the thread count. Results still differ between backends in the last ulps
// (lane sums, FMA); the equivalence tests bound that difference.

#include <cstddef>
#include <string>
#include <vector>

namespace turingflow::kernels {

enum class Backend { scalar, avx2 };

/// Backend active for all kernel calls in this process.
Backend active_backend();

/// Pin a specific backend (throws InvalidArgument if unavailable on this CPU).
void set_backend(Backend b);

/// True when the CPU supports AVX2+FMA and the build carries the AVX2 kernels.
bool avx2_supported();

std::string backend_name();

/// Per-cell coefficients of a 5-point stencil, SoA layout, same indexing as
/// Field2D (idx = j*nx + i). Coefficients referring to neighbors outside the
/// grid must be zero; they are never read.
struct Stencil5 {
    int nx = 0, ny = 0;
    std::vector<double> c, e, w, n, s;

    void resize(int nx_, int ny_);
    std::size_t size() const { return c.size(); }
};

/// 9-point variant with corner couplings (anisotropic diffusion).
struct Stencil9 {
    int nx = 0, ny = 0;
    std::vector<double> c, e, w, n, s, ne, nw, se, sw;

    void resize(int nx_, int ny_);
    std::size_t size() const { return c.size(); }
};

double dot(const double* a, const double* b, std::size_t n);
double norm2_sq(const double* a, std::size_t n);

/// y += alpha * x
void axpy(double alpha, const double* x, double* y, std::size_t n);

/// y = x + alpha * y
void aypx(double alpha, const double* x, double* y, std::size_t n);

/// y = A x for the 5-point stencil.
void apply_stencil5(const Stencil5& a, const double* x, double* y);

/// y = A x for the 9-point stencil.
void apply_stencil9(const Stencil9& a, const double* x, double* y);

}  // namespace turingflow::kernels
