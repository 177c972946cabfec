#include "bernoulli/gamma.hpp"

namespace bernoulli {

namespace {

// Godfrey's Lanczos coefficients, g = 607/128.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    3.3994649984811888699e-5,
    4.6523628927048575665e-5,
    -9.8374475304879564677e-5,
    1.5808870322491248884e-4,
    -2.1026444172410488319e-4,
    2.1743961811521264320e-4,
    -1.6431810653676389022e-4,
    8.4418223983852743293e-5,
    -2.6190838401581408670e-5,
    3.6899182659531622704e-6,
};

bool is_nonpositive_integer(const Complex& z) {
    return is_real_integer(z) && z.real() <= 0.0;
}

Complex gamma_lanczos(Complex z) {
    // valid for Re(z) >= 0.5
    z -= 1.0;
    Complex x = kLanczos[0];
    for (int k = 1; k < 15; ++k) x += kLanczos[k] / (z + static_cast<double>(k));
    const Complex t = z + (kLanczosG + 0.5);
    return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

}  // namespace

Complex gamma(const Complex& z) {
    if (is_nonpositive_integer(z)) throw std::domain_error("gamma: pole at nonpositive integer");
    if (z.real() < 0.5) return kPi / (sinpi_c(z) * gamma_lanczos(1.0 - z));
    return gamma_lanczos(z);
}

Complex digamma(const Complex& z) {
    if (is_nonpositive_integer(z)) throw std::domain_error("digamma: pole at nonpositive integer");
    if (z.real() < 0.5) {
        // psi(z) = psi(1-z) - pi cot(pi z)
        return digamma(1.0 - z) - kPi * (cospi_c(z) / sinpi_c(z));
    }
    Complex w = z;
    Complex acc = 0.0;
    while (w.real() < 10.0) {
        acc -= 1.0 / w;
        w += 1.0;
    }
    // B_{2k}/(2k) for the asymptotic tail
    static constexpr double kTail[] = {
        1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0,
        1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
    };
    const Complex inv2 = 1.0 / (w * w);
    Complex p = inv2;
    Complex tail = 0.0;
    for (double coeff : kTail) {
        tail += coeff * p;
        p *= inv2;
    }
    return acc + std::log(w) - 0.5 / w - tail;
}

}  // namespace bernoulli
