#pragma once

// Scaled integer lattice machinery: quantization/modulo algebra, nested
// chains, dithered codewords, MMSE scaling, the aligned-sum recovery step
// and a Monte Carlo check of the effective noise variance.
//
// Desk-scale stand-in for the coding-theoretic constructions: the algebra
// is lattice-shape-agnostic, so cubic lattices a*Z^n suffice.

#include <cstdint>
#include <optional>
#include <vector>

#include "icbounds/channel.hpp"

namespace icb {

using Vec = std::vector<double>;

// a * Z^n. The Voronoi cell is the half-open cube [-a/2, a/2)^n: ties at
// half spacing quantize upward so the decomposition x = Q(x) + M(x) is
// exact and deterministic.
struct ScaledLattice {
    double a = 1.0;
    int n = 1;

    ScaledLattice(double spacing, int dim);
};

// Coding lattice spacing ac with shaping lattices a1 = k1*ac and
// a3 = k3*a1 (integer k1, k3 >= 1), so a3*Z^n <= a1*Z^n <= ac*Z^n
// as point sets.
struct NestedChain {
    double ac = 1.0, a1 = 1.0, a3 = 1.0;
    int n = 1;

    NestedChain(double coding, double shape1, double shape3, int dim);

    ScaledLattice coding() const { return {ac, n}; }
    ScaledLattice shape1() const { return {a1, n}; }
    ScaledLattice shape3() const { return {a3, n}; }
};

// Codeword on the coding lattice inside the shaping cell, its dither, and
// the transmit signal x = [t + d] mod shaping. x always lies in the
// shaping cell and averages the cell's second moment over the dither.
struct DitheredCodeword {
    Vec codeword;
    Vec dither;
    Vec transmit;
};

DitheredCodeword make_dithered_codeword(const ScaledLattice& coding,
                                        const ScaledLattice& shaping,
                                        const Vec& codeword, uint64_t seed,
                                        uint64_t stream);

Vec quantize(const ScaledLattice& lat, const Vec& x);
Vec mod_lattice(const ScaledLattice& lat, const Vec& x);

// MMSE scaling factor S/(S+N); the induced effective noise variance is
// beta*N = S*N/(S+N).
double mmse_beta(double S, double N);

// [x_f - d_f] mod L1 == t_f with x_f = [t11+d11] mod L1 + [t3+d3] mod L3
// and t_f = [t11+t3] mod L1. Codewords must lie on the coding lattice and
// dithers within the respective shaping cells.
bool lemma1_check(const NestedChain& chain, const Vec& t11, const Vec& t3,
                  const Vec& d11, const Vec& d3, double tol = 1e-9);

// [mod_L3(x)] mod L1 == [x] mod L1 for nested L3 <= L1.
bool lemma2_check(const ScaledLattice& l1, const ScaledLattice& l3,
                  const Vec& x, double tol = 1e-9);

// [t_f + d_f] mod L1 == [x_f] mod L1.
bool lemma3_check(const NestedChain& chain, const Vec& t11, const Vec& t3,
                  const Vec& d11, const Vec& d3, double tol = 1e-9);

// Aligned-sum recovery from y2 = x_f + z'': reconstruct the modulo part
// from (t_f, d_f), quantize the remainder to the coarse point, add. Returns
// nullopt when the residual exceeds noise_bound (recovery not trustworthy).
std::optional<Vec> recover_real_sum(const Vec& y2, const Vec& tf,
                                    const Vec& df, const ScaledLattice& l1,
                                    double noise_bound);

// Uniform dither over the Voronoi cell, splitmix64 stream (seed, stream).
Vec sample_dither(const ScaledLattice& lat, uint64_t seed, uint64_t stream);

// Draws x uniform on a cell with second moment S, z ~ N(0, N), forms
// (beta-1)x + beta*z and returns the sample variance. Expectation
// S*N/(S+N). Batched with per-batch derived seeds, merged by streaming
// variance combination.
double effective_noise_mc(double S, double N, int samples, uint64_t seed);

}  // namespace icb
