#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

namespace eigenshape {

using Vec2 = Eigen::Vector2d;
using Cplx = std::complex<double>;

// In-place radix-2 FFT; size must be a power of two.
// sign = -1: forward transform, sign = +1: inverse (includes the 1/n factor).
void fft(std::vector<Cplx>& a, int sign);

// Discrete conjugation operator on equispaced circle samples: for f with
// Fourier series sum a_k e^{ikt}, returns the samples of sum (-i sgn k) a_k e^{ikt},
// i.e. the boundary trace of the harmonic conjugate (zero-mean normalization).
std::vector<double> circle_conjugate(const std::vector<double>& samples);

double mean(const std::vector<double>& v);

// Gauss-Legendre nodes and weights on [a, b].
void gauss_legendre(int n, double a, double b, std::vector<double>& x,
                    std::vector<double>& w);

// Least-squares line fit y = slope*x + intercept with standard errors
// estimated from the residual variance.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double se_slope = 0.0;
    double se_intercept = 0.0;
    double r2 = 0.0;
    int n = 0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

Eigen::VectorXd lstsq(const Eigen::MatrixXd& A, const Eigen::VectorXd& b);

// Small deterministic generator (splitmix64 core). Used instead of <random>
// distributions so that streams are identical across standard libraries.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : state_(seed) {}
    double uniform();  // [0, 1)
    double normal();   // Box-Muller

private:
    std::uint64_t next();
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace eigenshape
