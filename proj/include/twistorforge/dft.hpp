#pragma once

#include <complex>
#include <vector>

namespace tf {

// Plain O(M^2) discrete Fourier transform.  All uses here are on <= 256
// nodes so no FFT machinery is warranted.
//
// forward: c_k = (1/M) sum_j f_j exp(-2 pi i j k / M), k = 0..M-1.
// With f_j = g(r e^{2 pi i j / M}) for g holomorphic, c_k ~ a_k r^k where
// a_k are the Taylor coefficients of g.
inline std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& f) {
    const std::size_t m = f.size();
    std::vector<std::complex<double>> c(m);
    const double w = -2.0 * M_PI / static_cast<double>(m);
    for (std::size_t k = 0; k < m; ++k) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t j = 0; j < m; ++j) {
            double ph = w * static_cast<double>(j * k % m);
            acc += f[j] * std::complex<double>(std::cos(ph), std::sin(ph));
        }
        c[k] = acc / static_cast<double>(m);
    }
    return c;
}

// Signed frequency of DFT bin k for sample count m: 0..m/2-1, then negative.
inline int dftFrequency(std::size_t k, std::size_t m) {
    return k < m / 2 ? static_cast<int>(k) : static_cast<int>(k) - static_cast<int>(m);
}

}  // namespace tf
