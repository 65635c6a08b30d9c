// spectral_models.hpp — Spatial-temporal bath correlation and spectral
// functions: phenomenological kernels, the dissipative Ising chain, the
// tight-binding bosonic chain, and tabulated data, all behind one
// evaluation interface C(omega, r_j, r_k).

#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace corrbath::spectral {

enum class Kind { exponential, gaussian, step, ising, bosonic_chain, tabulated };
enum class BathOp { hermitian, annihilate, create };
enum class Occupation { boltzmann, bose_einstein };
enum class Dispersion { cosine, linear };
enum class PairChannel { bdag_b, b_bdag, bb, bdag_bdag };

const char* to_string(Kind kind);

/// Thrown when a spectral function is evaluated exactly at an integrable
/// singular point (bosonic band edge); callers must integrate around it.
struct SingularPointError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Dissipative Ising chain: coupling J, inverse temperature beta, single-spin
/// switching rate alpha/2, environmental lattice spacing w.
struct IsingParams {
    double j_coupling = 1.0;
    double beta = 1.0;
    double alpha = 1.0;
    double spacing = 1.0;

    double eta() const;     // tanh(beta J)
    double zeta() const;    // cosh(2 beta J)
    double gamma_t() const; // tanh(2 beta J), temporal Bessel argument
    void validate() const;
};

/// Tight-binding chain of oscillators: on-site energy omega0, hopping g,
/// inverse temperature beta, N modes, lattice spacing w.
struct BosonicChainParams {
    double omega0 = 0.0;
    double g = 1.0;
    double beta = 1.0;
    int n_modes = 4096;
    double spacing = 1.0;
    Occupation occupation = Occupation::boltzmann;
    Dispersion dispersion = Dispersion::cosine;

    double mode_frequency(double theta) const;  // theta = k w in [-pi, pi)
    double occupation_at(double omega) const;
    void validate() const;
};

struct TruncatedSum {
    double value = 0.0;
    double bound = 0.0;  // a-posteriori tail bound for the dropped terms
    int l_max = 0;
};

// Homogeneous phenomenological kernels (exponential / gaussian / step) at
// integer site separation m, decay parameter a = d/xi.
double phenomenological_kernel(Kind kind, double a, long m);

// Equal-time Ising chain correlation tanh^{|dx|}(beta J).
double ising_spatial(const IsingParams& params, long dx);

// Bessel-sum spatial-temporal correlation of the Glauber-driven chain,
// truncated at |l| <= l_max with a reported tail bound.
TruncatedSum ising_spatiotemporal(const IsingParams& params, long dx,
                                  double tau, int l_max);

// Grows l_max until the tail bound drops below `tol` (absolute).
TruncatedSum ising_spatiotemporal_adaptive(const IsingParams& params, long dx,
                                           double tau, double tol = 1e-9);

// Zero-frequency spectral function 2 (|dx| + zeta) zeta eta^|dx| / alpha.
double ising_spectral_zero(const IsingParams& params, long dx);

// Finite-N mode sum for the chain correlators; BB and B+B+ channels are
// identically zero.
std::complex<double> bosonic_correlation_exact(const BosonicChainParams& params,
                                               long dx, double tau,
                                               PairChannel channel);

// Closed-form spectral function with the band-gap cutoff. Throws
// SingularPointError exactly at |omega shifted| = 2|g|.
double bosonic_spectral(const BosonicChainParams& params, double omega, long dx,
                        PairChannel channel = PairChannel::bdag_b);

// Normalized equal-time correlation profile (2 beta g)^2/((2 beta g)^2 + dx^2),
// valid in the large beta g regime with linearized dispersion.
double bosonic_tau0_profile(const BosonicChainParams& params, long dx);

/// Rectangular (omega, dx) table with bilinear interpolation.
class TabulatedKernel {
  public:
    TabulatedKernel(std::vector<double> omegas, std::vector<double> dxs,
                    Eigen::MatrixXd c_real, Eigen::MatrixXd c_imag);

    static TabulatedKernel load_csv(const std::string& path);

    double real_at(double omega, double dx) const;
    double imag_at(double omega, double dx) const;

    const std::vector<double>& omegas() const { return omegas_; }
    const std::vector<double>& dxs() const { return dxs_; }

  private:
    double interpolate(const Eigen::MatrixXd& table, double omega, double dx) const;

    std::vector<double> omegas_;
    std::vector<double> dxs_;
    Eigen::MatrixXd c_real_;
    Eigen::MatrixXd c_imag_;
};

/// A system coupling's environmental attachment point: position in units of
/// the environmental lattice spacing, bath group, and bath operator type.
struct SiteInfo {
    double position = 0.0;
    int group = 0;
    BathOp bath_op = BathOp::hermitian;
};

/// Uniform evaluation interface over every bath model. Cross-group pairs are
/// exactly zero; homogeneous kinds depend only on |r_j - r_k|; positions must
/// sit on the environmental lattice.
class SpectralModel {
  public:
    static SpectralModel exponential(double a, double c00 = 1.0);
    static SpectralModel gaussian(double a, double c00 = 1.0);
    static SpectralModel step(double c00 = 1.0);
    static SpectralModel ising(IsingParams params);
    static SpectralModel bosonic(BosonicChainParams params);
    static SpectralModel tabulated(TabulatedKernel table);

    Kind kind() const { return kind_; }
    double decay_parameter() const { return a_; }
    double scale() const { return c00_; }
    const IsingParams& ising_params() const;
    const BosonicChainParams& bosonic_params() const;

    /// Real part of C_jk(omega, r_j, r_k).
    double evaluate(double omega, const SiteInfo& j, const SiteInfo& k) const;

    /// Imaginary part F_jk of the one-sided transform (zero unless tabulated).
    double evaluate_imag(double omega, const SiteInfo& j, const SiteInfo& k) const;

    /// True when the kernel does not depend on omega (phenomenological kinds).
    bool flat_in_omega() const;

    /// Relative variation of C(omega, 0) over the given frequencies; Markov
    /// smoothness diagnostic, never an error.
    double smoothness_diagnostic(const std::vector<double>& bohr_frequencies) const;

  private:
    SpectralModel() = default;

    long integer_separation(const SiteInfo& j, const SiteInfo& k) const;
    double eval_kind(double omega, long dx, BathOp bj, BathOp bk) const;

    Kind kind_ = Kind::exponential;
    double a_ = 1.0;
    double c00_ = 1.0;
    std::optional<IsingParams> ising_;
    std::optional<BosonicChainParams> bosonic_;
    std::optional<TabulatedKernel> table_;
};

}  // namespace corrbath::spectral
