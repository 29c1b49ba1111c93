#include "mubtk/mub.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mubtk {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

// Polynomial helpers over F_p, coefficient vectors low degree first.
std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    std::vector<int> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return out;
}

// Remainder of a modulo monic divisor g.
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& g, int p) {
    while (a.size() >= g.size()) {
        const int c = a.back();
        if (c != 0) {
            const std::size_t shift = a.size() - g.size();
            for (std::size_t i = 0; i < g.size(); ++i)
                a[shift + i] = ((a[shift + i] - c * g[i]) % p + p) % p;
        }
        a.pop_back();
    }
    return a;
}

bool is_zero(const std::vector<int>& a) {
    for (int c : a)
        if (c != 0) return false;
    return true;
}

// Monic polynomial of degree deg encoded by its lower coefficients.
std::vector<int> decode_monic(long long enc, int deg, int p) {
    std::vector<int> c(deg + 1, 0);
    for (int i = 0; i < deg; ++i) {
        c[i] = static_cast<int>(enc % p);
        enc /= p;
    }
    c[deg] = 1;
    return c;
}

// No monic divisor of degree 1..deg/2 means irreducible (deg <= 4).
bool is_irreducible(const std::vector<int>& m, int p) {
    const int deg = static_cast<int>(m.size()) - 1;
    for (int d = 1; d <= deg / 2; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long enc = 0; enc < count; ++enc) {
            if (is_zero(poly_rem(m, decode_monic(enc, d, p), p))) return false;
        }
    }
    return true;
}

}  // namespace

GaloisField::GaloisField(int p, int k) : p_(p), k_(k) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("GaloisField: p must be an odd prime");
    if (k < 1 || k > 4) throw std::invalid_argument("GaloisField: k must be in 1..4");
    q_ = 1;
    for (int i = 0; i < k; ++i) q_ *= p;

    // Lexicographically smallest monic irreducible, ordered by the integer
    // encoding of the lower coefficients (low digit = constant term).
    long long count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (long long enc = 0; enc < count; ++enc) {
        auto m = decode_monic(enc, k, p);
        if (is_irreducible(m, p)) {
            modulus_.assign(m.begin(), m.end() - 1);
            break;
        }
    }
    std::vector<int> monic(modulus_);
    monic.push_back(1);

    auto decode = [&](int e) {
        std::vector<int> c(k_, 0);
        for (int i = 0; i < k_; ++i) {
            c[i] = e % p_;
            e /= p_;
        }
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        int e = 0;
        for (int i = k_ - 1; i >= 0; --i) e = e * p_ + (i < static_cast<int>(c.size()) ? c[i] : 0);
        return e;
    };

    mul_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
    for (int a = 0; a < q_; ++a)
        for (int b = 0; b < q_; ++b) {
            auto prod = poly_rem(poly_mul(decode(a), decode(b), p_), monic, p_);
            mul_table_[static_cast<std::size_t>(a) * q_ + b] = encode(prod);
        }

    trace_table_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        int t = 0;  // running sum a^(p^i) in the field
        int term = a;
        for (int i = 0; i < k_; ++i) {
            t = add(t, term);
            term = pow(term, p_);
        }
        auto c = decode(t);
        for (int i = 1; i < k_; ++i)
            if (c[i] != 0) throw std::logic_error("GaloisField: trace left the prime field");
        trace_table_[a] = c[0];
    }
}

int GaloisField::add(int a, int b) const {
    int out = 0, mult = 1;
    for (int i = 0; i < k_; ++i) {
        out += ((a % p_ + b % p_) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

int GaloisField::mul(int a, int b) const { return mul_table_[static_cast<std::size_t>(a) * q_ + b]; }

int GaloisField::pow(int a, long long e) const {
    int out = 1, base = a;
    while (e > 0) {
        if (e & 1) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

int GaloisField::trace(int a) const { return trace_table_[a]; }

namespace {

// exp(2*pi*i*t/p) / norm, with the argument computed from the integer residue
// so repeated multiplication cannot drift.
Complex root_of_unity(long long t, int p, double norm) {
    const long long r = ((t % p) + p) % p;
    return std::polar(norm, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(p));
}

}  // namespace

MubSystem construct_d2() {
    const double s = 1.0 / std::sqrt(2.0);
    MubSystem out;
    out.dim = 2;
    out.bases.push_back(Matrix::identity(2));
    out.bases.push_back(Matrix(2, {s, s, s, -s}));
    out.bases.push_back(Matrix(2, {s, s, Complex{0, s}, Complex{0, -s}}));
    return out;
}

MubSystem construct_prime(int p) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("construct_prime: p must be an odd prime");
    const double norm = 1.0 / std::sqrt(static_cast<double>(p));
    MubSystem out;
    out.dim = p;
    out.bases.push_back(Matrix::identity(p));
    for (int k = 0; k < p; ++k) {
        Matrix b(p);
        for (int j = 0; j < p; ++j)       // vector index (column)
            for (int l = 0; l < p; ++l)   // component (row)
                b(l, j) = root_of_unity(static_cast<long long>(k) * l * l + static_cast<long long>(j) * l, p, norm);
        out.bases.push_back(std::move(b));
    }
    return out;
}

MubSystem construct_prime_power(int p, int k) {
    if (p == 2) throw std::invalid_argument("construct_prime_power: even prime powers are not supported");
    if (k < 2) throw std::invalid_argument("construct_prime_power: k must be >= 2 (use construct_prime)");
    long long qll = 1;
    for (int i = 0; i < k; ++i) qll *= p;
    if (qll > 49) throw std::invalid_argument("construct_prime_power: q = " + std::to_string(qll) + " above cap 49");
    GaloisField f(p, k);
    const int q = f.q();

    const double norm = 1.0 / std::sqrt(static_cast<double>(q));
    MubSystem out;
    out.dim = q;
    out.bases.push_back(Matrix::identity(q));
    for (int a = 0; a < q; ++a) {
        Matrix m(q);
        for (int b = 0; b < q; ++b) {       // vector index (column)
            for (int x = 0; x < q; ++x) {   // component (row)
                const int t = f.trace(f.add(f.mul(a, f.mul(x, x)), f.mul(b, x)));
                m(x, b) = root_of_unity(t, p, norm);
            }
        }
        out.bases.push_back(std::move(m));
    }
    return out;
}

MubSystem construct(int d) {
    if (d < 2) throw std::invalid_argument("construct: d must be >= 2");
    if (d == 2) return construct_d2();
    int p = d, k = 1;
    for (int f = 2; f * f <= p; ++f) {
        if (p % f == 0) {
            p = f;
            k = 0;
            int rest = d;
            while (rest % f == 0) {
                rest /= f;
                ++k;
            }
            if (rest != 1)
                throw std::invalid_argument("construct: d = " + std::to_string(d) +
                                            " is not a prime power; no construction available");
            break;
        }
    }
    if (p == 2) throw std::invalid_argument("construct: even prime powers >= 4 are not supported");
    return k == 1 ? construct_prime(p) : construct_prime_power(p, k);
}

VerifyReport verify_mub(const MubSystem& b, const Tolerance& tol) {
    VerifyReport rep;
    rep.ok = true;
    const double target = 1.0 / std::sqrt(static_cast<double>(b.dim));
    const int m = static_cast<int>(b.bases.size());
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const Matrix q = matmul(adjoint(b.bases[i]), b.bases[j]);
            if (!is_scaled_hadamard(q, tol)) rep.ok = false;
            double dev = 0.0;
            for (const auto& z : q.entries()) dev = std::max(dev, std::abs(std::abs(z) - target));
            if (dev > rep.worst_deviation) {
                rep.worst_deviation = dev;
                rep.worst_pair = {i, j};
            }
        }
    }
    return rep;
}

}  // namespace mubtk
