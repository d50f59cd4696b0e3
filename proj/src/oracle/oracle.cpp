#include "eigenfence/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <string>

namespace eigenfence::oracle {

namespace {

// Working copy with 1-based access, which keeps the QR sweep close to its
// textbook form.
class Work {
public:
    explicit Work(const RealMatrix& a) : n_(static_cast<int>(a.size())), d_(a.size() * a.size()) {
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) (*this)(i, j) = a(i - 1, j - 1);
    }
    int n() const { return n_; }
    double& operator()(int i, int j) { return d_[(i - 1) * n_ + (j - 1)]; }

private:
    int n_;
    std::vector<double> d_;
};

double sign_of(double a, double b) { return b >= 0.0 ? std::abs(a) : -std::abs(a); }

// Diagonal similarity by powers of two until row and column norms balance.
void balance(Work& a) {
    constexpr double radix = 2.0;
    constexpr double sqrdx = radix * radix;
    const int n = a.n();
    bool done = false;
    while (!done) {
        done = true;
        for (int i = 1; i <= n; ++i) {
            double r = 0.0, c = 0.0;
            for (int j = 1; j <= n; ++j)
                if (j != i) {
                    c += std::abs(a(j, i));
                    r += std::abs(a(i, j));
                }
            if (c == 0.0 || r == 0.0) continue;
            double g = r / radix, f = 1.0;
            const double s = c + r;
            while (c < g) {
                f *= radix;
                c *= sqrdx;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= sqrdx;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                g = 1.0 / f;
                for (int j = 1; j <= n; ++j) a(i, j) *= g;
                for (int j = 1; j <= n; ++j) a(j, i) *= f;
            }
        }
    }
}

// Householder reduction to upper Hessenberg form.
void to_hessenberg(Work& a) {
    const int n = a.n();
    std::vector<double> v(n + 1);
    for (int k = 1; k <= n - 2; ++k) {
        double scale = 0.0;
        for (int i = k + 1; i <= n; ++i) scale += std::abs(a(i, k));
        if (scale == 0.0) continue;
        double norm2 = 0.0;
        for (int i = k + 1; i <= n; ++i) {
            v[i] = a(i, k) / scale;
            norm2 += v[i] * v[i];
        }
        const double alpha = -sign_of(std::sqrt(norm2), v[k + 1]);
        v[k + 1] -= alpha;
        double vnorm2 = 0.0;
        for (int i = k + 1; i <= n; ++i) vnorm2 += v[i] * v[i];
        if (vnorm2 == 0.0) continue;
        // H = I - 2 v v^T / (v^T v), applied on both sides.
        for (int j = 1; j <= n; ++j) {
            double s = 0.0;
            for (int i = k + 1; i <= n; ++i) s += v[i] * a(i, j);
            s *= 2.0 / vnorm2;
            for (int i = k + 1; i <= n; ++i) a(i, j) -= s * v[i];
        }
        for (int i = 1; i <= n; ++i) {
            double s = 0.0;
            for (int j = k + 1; j <= n; ++j) s += a(i, j) * v[j];
            s *= 2.0 / vnorm2;
            for (int j = k + 1; j <= n; ++j) a(i, j) -= s * v[j];
        }
        for (int i = k + 2; i <= n; ++i) a(i, k) = 0.0;
    }
}

// Francis double-shift QR on an upper Hessenberg matrix. Returns false when
// the sweep budget is exhausted; eigenvalues found so far are in `out`.
bool hessenberg_qr(Work& a, std::vector<ComplexPoint>& out, int max_sweeps) {
    const int n = a.n();
    std::vector<double> wr(n + 1, 0.0), wi(n + 1, 0.0);
    std::vector<bool> found(n + 1, false);

    double anorm = 0.0;
    for (int i = 1; i <= n; ++i)
        for (int j = std::max(i - 1, 1); j <= n; ++j) anorm += std::abs(a(i, j));

    int nn = n;
    double t = 0.0;
    int sweeps = 0;
    bool ok = true;
    while (nn >= 1 && ok) {
        int its = 0;
        int l = 0;
        do {
            for (l = nn; l >= 2; --l) {
                double s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
                if (s == 0.0) s = anorm;
                if (std::abs(a(l, l - 1)) + s == s) {
                    a(l, l - 1) = 0.0;
                    break;
                }
            }
            if (l < 1) l = 1;
            double x = a(nn, nn);
            if (l == nn) {
                wr[nn] = x + t;
                wi[nn] = 0.0;
                found[nn] = true;
                --nn;
            } else {
                double y = a(nn - 1, nn - 1);
                double w = a(nn, nn - 1) * a(nn - 1, nn);
                if (l == nn - 1) {
                    const double p = 0.5 * (y - x);
                    const double q = p * p + w;
                    double z = std::sqrt(std::abs(q));
                    x += t;
                    if (q >= 0.0) {
                        z = p + sign_of(z, p);
                        wr[nn - 1] = wr[nn] = x + z;
                        if (z != 0.0) wr[nn] = x - w / z;
                        wi[nn - 1] = wi[nn] = 0.0;
                    } else {
                        wr[nn - 1] = wr[nn] = x + p;
                        wi[nn - 1] = z;
                        wi[nn] = -z;
                    }
                    found[nn - 1] = found[nn] = true;
                    nn -= 2;
                } else {
                    if (++sweeps > max_sweeps) {
                        ok = false;
                        break;
                    }
                    if (its == 10 || its == 20) {
                        // exceptional shift
                        t += x;
                        for (int i = 1; i <= nn; ++i) a(i, i) -= x;
                        const double s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
                        y = x = 0.75 * s;
                        w = -0.4375 * s * s;
                    }
                    ++its;
                    int m = nn - 2;
                    double p = 0.0, q = 0.0, r = 0.0, z = 0.0;
                    for (; m >= l; --m) {
                        z = a(m, m);
                        r = x - z;
                        double s = y - z;
                        p = (r * s - w) / a(m + 1, m) + a(m, m + 1);
                        q = a(m + 1, m + 1) - z - r - s;
                        r = a(m + 2, m + 1);
                        s = std::abs(p) + std::abs(q) + std::abs(r);
                        p /= s;
                        q /= s;
                        r /= s;
                        if (m == l) break;
                        const double u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
                        const double v = std::abs(p) * (std::abs(a(m - 1, m - 1)) + std::abs(z) + std::abs(a(m + 1, m + 1)));
                        if (u + v == v) break;
                    }
                    for (int i = m + 2; i <= nn; ++i) {
                        a(i, i - 2) = 0.0;
                        if (i != m + 2) a(i, i - 3) = 0.0;
                    }
                    for (int k = m; k <= nn - 1; ++k) {
                        if (k != m) {
                            p = a(k, k - 1);
                            q = a(k + 1, k - 1);
                            r = 0.0;
                            if (k != nn - 1) r = a(k + 2, k - 1);
                            if ((x = std::abs(p) + std::abs(q) + std::abs(r)) != 0.0) {
                                p /= x;
                                q /= x;
                                r /= x;
                            }
                        }
                        const double s = sign_of(std::sqrt(p * p + q * q + r * r), p);
                        if (s == 0.0) continue;
                        if (k == m) {
                            if (l != m) a(k, k - 1) = -a(k, k - 1);
                        } else {
                            a(k, k - 1) = -s * x;
                        }
                        p += s;
                        x = p / s;
                        y = q / s;
                        z = r / s;
                        q /= p;
                        r /= p;
                        for (int j = k; j <= nn; ++j) {
                            p = a(k, j) + q * a(k + 1, j);
                            if (k != nn - 1) {
                                p += r * a(k + 2, j);
                                a(k + 2, j) -= p * z;
                            }
                            a(k + 1, j) -= p * y;
                            a(k, j) -= p * x;
                        }
                        const int mmin = nn < k + 3 ? nn : k + 3;
                        for (int i = l; i <= mmin; ++i) {
                            p = x * a(i, k) + y * a(i, k + 1);
                            if (k != nn - 1) {
                                p += z * a(i, k + 2);
                                a(i, k + 2) -= p * r;
                            }
                            a(i, k + 1) -= p * q;
                            a(i, k) -= p;
                        }
                    }
                }
            }
        } while (ok && l < nn - 1);
    }

    out.clear();
    for (int i = 1; i <= n; ++i)
        if (found[i]) out.emplace_back(wr[i], wi[i]);
    return ok;
}

RealMatrix random_orthogonal(std::size_t n, std::mt19937_64& rng) {
    // Gram-Schmidt on a Gaussian matrix, twice for stability.
    std::normal_distribution<double> normal;
    RealMatrix q(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q(i, j) = normal(rng);
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < j; ++k) {
                double dot = 0.0;
                for (std::size_t i = 0; i < n; ++i) dot += q(i, j) * q(i, k);
                for (std::size_t i = 0; i < n; ++i) q(i, j) -= dot * q(i, k);
            }
            double norm = 0.0;
            for (std::size_t i = 0; i < n; ++i) norm += q(i, j) * q(i, j);
            norm = std::sqrt(norm);
            for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
        }
    }
    return q;
}

double frobenius(const RealMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (double x : a.row(i)) s += x * x;
    return std::sqrt(s);
}

}  // namespace

std::uint64_t seed_from_environment() {
    const char* env = std::getenv("EIGENFENCE_SEED");
    if (env == nullptr || *env == '\0') return kDefaultSeed;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 0);
    return (end != nullptr && *end == '\0') ? static_cast<std::uint64_t>(v) : kDefaultSeed;
}

Spectrum eigenvalues(const RealMatrix& a, std::uint64_t seed) {
    const std::size_t n = a.size();
    if (n > 64) throw SizeError("oracle eigensolver is limited to n <= 64");
    Spectrum spec;
    spec.residual_bound = static_cast<double>(n) * std::numeric_limits<double>::epsilon() * frobenius(a) * 10.0;
    if (n == 0) return spec;

    std::mt19937_64 rng(seed);
    RealMatrix current = a;
    constexpr int kRestarts = 3;
    for (int attempt = 0;; ++attempt) {
        Work w(current);
        balance(w);
        to_hessenberg(w);
        if (hessenberg_qr(w, spec.values, 100 * static_cast<int>(n))) return spec;
        if (attempt == kRestarts)
            throw ConvergenceError("QR iteration did not converge", spec);
        const auto q = random_orthogonal(n, rng);
        current = q.transpose() * (a * q);
    }
}

double determinant(const RealMatrix& a) {
    const std::size_t n = a.size();
    RealMatrix lu = a;
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(lu(i, k)) > std::abs(lu(piv, k))) piv = i;
        if (lu(piv, k) == 0.0) return 0.0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
            det = -det;
        }
        det *= lu(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = lu(i, k) / lu(k, k);
            for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
        }
    }
    return det;
}

std::vector<ComplexPoint> sorted_by_modulus(std::vector<ComplexPoint> values) {
    std::sort(values.begin(), values.end(), [](const ComplexPoint& x, const ComplexPoint& y) {
        if (std::abs(x) != std::abs(y)) return std::abs(x) > std::abs(y);
        if (x.real() != y.real()) return x.real() > y.real();
        return x.imag() > y.imag();
    });
    return values;
}

std::vector<ComplexPoint> without_nearest(std::vector<ComplexPoint> values, double lambda) {
    if (values.empty()) return values;
    auto it = std::min_element(values.begin(), values.end(), [lambda](const ComplexPoint& x, const ComplexPoint& y) {
        return std::abs(x - lambda) < std::abs(y - lambda);
    });
    values.erase(it);
    return values;
}

}  // namespace eigenfence::oracle
