#include "icbounds/lattice.hpp"

#include <cmath>

#include "icbounds/rng.hpp"

namespace icb {

namespace {

bool is_integer_ratio(double num, double den) {
    const double q = num / den;
    return std::abs(q - std::round(q)) < 1e-9 * std::max(1.0, std::abs(q)) &&
           std::round(q) >= 1.0;
}

void check_dim(const ScaledLattice& lat, const Vec& x) {
    if (static_cast<int>(x.size()) != lat.n) {
        throw PreconditionError("vector dimension does not match the lattice");
    }
}

bool on_lattice(const ScaledLattice& lat, const Vec& x) {
    for (double v : x) {
        const double q = v / lat.a;
        if (std::abs(q - std::round(q)) > 1e-9 * std::max(1.0, std::abs(q))) {
            return false;
        }
    }
    return true;
}

bool in_cell(const ScaledLattice& lat, const Vec& d) {
    for (double v : d) {
        if (v < -lat.a / 2.0 || v >= lat.a / 2.0) return false;
    }
    return true;
}

Vec add(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

// Distance between two Voronoi representatives as elements of the quotient
// group R^n / lat: rounding can flip a representative sitting exactly on
// the half-open cell edge by one full step, which is still the same coset.
double coset_distance(const ScaledLattice& lat, const Vec& a, const Vec& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        const double wrapped = d - lat.a * std::round(d / lat.a);
        m = std::max(m, std::abs(wrapped));
    }
    return m;
}

}  // namespace

ScaledLattice::ScaledLattice(double spacing, int dim) : a(spacing), n(dim) {
    if (!(a > 0.0)) throw PreconditionError("lattice spacing must be > 0");
    if (n < 1) throw PreconditionError("lattice dimension must be >= 1");
}

NestedChain::NestedChain(double coding, double shape1, double shape3, int dim)
    : ac(coding), a1(shape1), a3(shape3), n(dim) {
    if (!(ac > 0.0 && a1 > 0.0 && a3 > 0.0)) {
        throw PreconditionError("chain spacings must be > 0");
    }
    if (n < 1) throw PreconditionError("chain dimension must be >= 1");
    if (!is_integer_ratio(a1, ac) || !is_integer_ratio(a3, a1)) {
        throw PreconditionError(
            "nesting requires a1/ac and a3/a1 to be positive integers");
    }
}

Vec quantize(const ScaledLattice& lat, const Vec& x) {
    check_dim(lat, x);
    Vec out(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        // round-half-up keeps the Voronoi cell half open: [-a/2, a/2)
        out[i] = lat.a * std::floor(x[i] / lat.a + 0.5);
    }
    return out;
}

DitheredCodeword make_dithered_codeword(const ScaledLattice& coding,
                                        const ScaledLattice& shaping,
                                        const Vec& codeword, uint64_t seed,
                                        uint64_t stream) {
    if (coding.n != shaping.n) {
        throw PreconditionError("lattice dimensions differ");
    }
    check_dim(coding, codeword);
    if (!on_lattice(coding, codeword)) {
        throw PreconditionError("codeword must lie on the coding lattice");
    }
    if (!in_cell(shaping, codeword)) {
        throw PreconditionError("codeword must lie in the shaping cell");
    }
    DitheredCodeword out;
    out.codeword = codeword;
    out.dither = sample_dither(shaping, seed, stream);
    Vec sum(codeword.size());
    for (size_t i = 0; i < sum.size(); ++i) {
        sum[i] = codeword[i] + out.dither[i];
    }
    out.transmit = mod_lattice(shaping, sum);
    return out;
}

Vec mod_lattice(const ScaledLattice& lat, const Vec& x) {
    const Vec q = quantize(lat, x);
    return sub(x, q);
}

double mmse_beta(double S, double N) {
    if (!(S >= 0.0)) throw PreconditionError("signal power must be >= 0");
    if (!(N > 0.0)) throw PreconditionError("noise power must be > 0");
    return S / (S + N);
}

bool lemma1_check(const NestedChain& chain, const Vec& t11, const Vec& t3,
                  const Vec& d11, const Vec& d3, double tol) {
    const ScaledLattice lc = chain.coding();
    const ScaledLattice l1 = chain.shape1();
    const ScaledLattice l3 = chain.shape3();
    check_dim(lc, t11);
    check_dim(lc, t3);
    if (!on_lattice(lc, t11) || !on_lattice(lc, t3)) {
        throw PreconditionError("codewords must lie on the coding lattice");
    }
    if (!in_cell(l1, d11) || !in_cell(l3, d3)) {
        throw PreconditionError("dithers must lie in the shaping cells");
    }
    const Vec x11 = mod_lattice(l1, add(t11, d11));
    const Vec x3 = mod_lattice(l3, add(t3, d3));
    const Vec xf = add(x11, x3);
    const Vec df = add(d11, d3);
    const Vec lhs = mod_lattice(l1, sub(xf, df));
    const Vec tf = mod_lattice(l1, add(t11, t3));
    return coset_distance(l1, lhs, tf) < tol;
}

bool lemma2_check(const ScaledLattice& l1, const ScaledLattice& l3,
                  const Vec& x, double tol) {
    if (l1.n != l3.n) throw PreconditionError("lattice dimensions differ");
    if (!is_integer_ratio(l3.a, l1.a)) {
        throw PreconditionError("lattices are not nested (a3/a1 not integer)");
    }
    check_dim(l1, x);
    const Vec lhs = mod_lattice(l1, mod_lattice(l3, x));
    const Vec rhs = mod_lattice(l1, x);
    return coset_distance(l1, lhs, rhs) < tol;
}

bool lemma3_check(const NestedChain& chain, const Vec& t11, const Vec& t3,
                  const Vec& d11, const Vec& d3, double tol) {
    const ScaledLattice lc = chain.coding();
    const ScaledLattice l1 = chain.shape1();
    const ScaledLattice l3 = chain.shape3();
    check_dim(lc, t11);
    check_dim(lc, t3);
    if (!on_lattice(lc, t11) || !on_lattice(lc, t3)) {
        throw PreconditionError("codewords must lie on the coding lattice");
    }
    if (!in_cell(l1, d11) || !in_cell(l3, d3)) {
        throw PreconditionError("dithers must lie in the shaping cells");
    }
    const Vec x11 = mod_lattice(l1, add(t11, d11));
    const Vec x3 = mod_lattice(l3, add(t3, d3));
    const Vec xf = add(x11, x3);
    const Vec df = add(d11, d3);
    const Vec tf = mod_lattice(l1, add(t11, t3));
    const Vec lhs = mod_lattice(l1, add(tf, df));
    const Vec rhs = mod_lattice(l1, xf);
    return coset_distance(l1, lhs, rhs) < tol;
}

std::optional<Vec> recover_real_sum(const Vec& y2, const Vec& tf,
                                    const Vec& df, const ScaledLattice& l1,
                                    double noise_bound) {
    check_dim(l1, y2);
    if (!(noise_bound > 0.0 && noise_bound <= l1.a / 2.0)) {
        throw PreconditionError("noise bound must lie in (0, a1/2]");
    }
    const Vec m = mod_lattice(l1, add(tf, df));
    const Vec q = quantize(l1, sub(y2, m));
    const Vec xf = add(m, q);
    // Residual consistency: on success the residual is the channel noise,
    // on a wrong coarse point it is off by at least a1 - noise_bound.
    for (size_t i = 0; i < y2.size(); ++i) {
        if (std::abs(y2[i] - xf[i]) >= noise_bound) return std::nullopt;
    }
    return xf;
}

Vec sample_dither(const ScaledLattice& lat, uint64_t seed, uint64_t stream) {
    Rng rng(seed, stream);
    Vec d(static_cast<size_t>(lat.n));
    for (double& v : d) {
        v = lat.a * (rng.uniform() - 0.5);  // uniform on [-a/2, a/2)
    }
    return d;
}

double effective_noise_mc(double S, double N, int samples, uint64_t seed) {
    if (samples < 1) throw PreconditionError("samples must be >= 1");
    const double beta = mmse_beta(S, N);
    const double half_width = std::sqrt(3.0 * S);
    const double sigma = std::sqrt(N);

    // Batched streaming variance (Welford within a batch, Chan's merge
    // across batches) so per-batch seeds stay independent.
    constexpr int kBatch = 4096;
    double count = 0.0, mean = 0.0, m2 = 0.0;
    int remaining = samples;
    uint64_t batch_idx = 0;
    while (remaining > 0) {
        const int this_batch = remaining < kBatch ? remaining : kBatch;
        Rng rng(seed, batch_idx++);
        double c = 0.0, mu = 0.0, acc = 0.0;
        for (int i = 0; i < this_batch; ++i) {
            const double x = half_width * (2.0 * rng.uniform() - 1.0);
            const double z = sigma * rng.normal();
            const double ze = (beta - 1.0) * x + beta * z;
            c += 1.0;
            const double delta = ze - mu;
            mu += delta / c;
            acc += delta * (ze - mu);
        }
        const double delta = mu - mean;
        const double tot = count + c;
        m2 += acc + delta * delta * count * c / tot;
        mean += delta * c / tot;
        count = tot;
        remaining -= this_batch;
    }
    if (count < 2.0) return 0.0;
    return m2 / (count - 1.0);
}

}  // namespace icb
