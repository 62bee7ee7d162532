#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <utility>
#include <vector>

// Discretized single-particle space L^2(R^s, d^s p), the test-function
// families supported in the ball O_r, the subspaces L+/L-, and the
// configuration-space conjugation J.
//
// Vectors are kept in weighted coordinates: component i stores
// sqrt(w_i) * f(p_i), so the weighted quadrature inner product becomes the
// plain Hermitian dot product. Diagonal multipliers (omega, cutoffs,
// translation phases) act identically in either representation.

namespace pslab {

struct MomentumGrid {
    int s = 1;                 // spatial dimension
    double m = 1.0;            // mass
    double P_max = 10.0;       // per-axis momentum cutoff
    int n_per_axis = 0;

    Eigen::MatrixXd nodes;     // N x s
    Eigen::VectorXd weights;   // N
    Eigen::VectorXd sqrt_w;    // N
    Eigen::VectorXd omega;     // N, dispersion sqrt(|p|^2 + m^2)
    std::vector<int> reflect;  // index of the node -p

    int size() const { return static_cast<int>(weights.size()); }

    // antiunitary J: (Jv)(p) = conj(v(-p)); exact involution on this grid
    Eigen::VectorXcd conjugation(const Eigen::VectorXcd& v) const;

    // diagonal multiplier samples
    Eigen::VectorXd omega_power(double expnt) const;
    Eigen::VectorXcd translation_phase(double x0, const Eigen::VectorXd& xvec) const;

    // weighted-coordinate conversions for sample-space data
    Eigen::VectorXcd from_samples(const Eigen::VectorXcd& f) const { return sqrt_w.array() * f.array(); }
    Eigen::VectorXcd to_samples(const Eigen::VectorXcd& v) const { return v.array() / sqrt_w.array(); }
};

MomentumGrid make_grid(int s, double P_max, int n_nodes, double m);

// J applied as a free function (the spec-level operation)
Eigen::VectorXcd apply_conjugation(const MomentumGrid& grid, const Eigen::VectorXcd& v);

// Smooth bump envelope exp(-r^2/(r^2-|x|^2)) times low-order trig factors.
// Members are stored both as momentum samples on the grid (weighted
// coordinates) and as configuration-space samples, so transforms can be
// re-evaluated on arbitrary momentum sets (refinement and defect checks).
struct TestFunctionFamily {
    double r = 1.0;
    int count = 0;
    const MomentumGrid* grid = nullptr;

    Eigen::MatrixXcd members;        // N x count, weighted coords
    std::vector<int> labels;

    // configuration-space quadrature data (flattened s-dim grid)
    Eigen::MatrixXd xnodes;          // Nx x s
    Eigen::VectorXd xweights;        // Nx
    Eigen::MatrixXd xsamples;        // Nx x count (members are real)

    double gram_condition = 0;
    double leakage = 0;              // worst relative mass outside [-r-tol, r+tol]
    double band_tail = 0;            // worst relative member mass beyond P_max
    std::vector<std::string> warnings;

    // evaluate the momentum transform of member k on arbitrary nodes
    Eigen::VectorXcd transform_at(int k, const Eigen::MatrixXd& p_nodes) const;
};

TestFunctionFamily build_test_family(const MomentumGrid& grid, double r, int count);

struct SubspaceBasis {
    enum class Kind { Lplus, Lminus };
    Kind kind;
    const MomentumGrid* grid = nullptr;
    Eigen::MatrixXcd columns;          // N x rank, orthonormal
    Eigen::VectorXd singular_values;   // all values, descending (discarded included)
    int rank = 0;
    double j_invariance = 0;           // max ||(1-P)J c|| over columns

    Eigen::MatrixXcd projector() const { return columns * columns.adjoint(); }
    Eigen::VectorXcd project(const Eigen::VectorXcd& v) const { return columns * (columns.adjoint() * v); }
};

std::pair<SubspaceBasis, SubspaceBasis>
build_local_subspaces(const TestFunctionFamily& family);

// orthonormal basis of the span of the given columns (SVD, relative threshold)
Eigen::MatrixXcd orthonormal_span(const Eigen::MatrixXcd& cols, double rel_tol = 1e-10,
                                  Eigen::VectorXd* svals = nullptr);

} // namespace pslab
