#pragma once

#include <complex>
#include <cstddef>

namespace hartree::fft {

// Multi-dimensional DFT helpers around FFTW, all with deterministic
// FFTW_ESTIMATE plans cached per shape.  Conventions:
//   forward:  F_k = sum_j f_j exp(-2 pi i <j,k>/N)   (unnormalized)
//   inverse:  f_j = N^{-dim} sum_k F_k exp(+2 pi i <j,k>/N)
// so inverse(forward(f)) == f up to rounding.
void forward(int dim, int n, std::complex<double>* data);
void inverse(int dim, int n, std::complex<double>* data);

// Real transforms with FFTW's half-spectrum layout: the last axis stores
// n/2+1 complex entries.  `spectrum_size` gives the complex element count.
std::size_t spectrum_size(int dim, int n);
void forward_real(int dim, int n, const double* in, std::complex<double>* out);
// Includes the 1/N^dim normalization; input spectrum is left untouched.
void inverse_real(int dim, int n, const std::complex<double>* in, double* out);

}  // namespace hartree::fft
