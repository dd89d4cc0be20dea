#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

namespace pentasim::spin {

/// Electron gyromagnetic ratio, MHz/mT.
inline constexpr double kGammaE = 28.0;

/// Zero-field splitting parameters in MHz. E is signed.
struct ZfsParams {
  double d_MHz = 0.0;
  double e_MHz = 0.0;
  void validate() const;  // D > 0, |E| <= D/3
};

/// Magnetic field components in mT (lab frame; identity orientation means
/// lab = molecular frame).
struct FieldVector {
  double bx_mT = 0.0;
  double by_mT = 0.0;
  double bz_mT = 0.0;
  Eigen::Vector3d vec() const { return {bx_mT, by_mT, bz_mT}; }
  double magnitude() const { return vec().norm(); }
  void validate() const;  // finite components
};

/// ZYZ Euler angles (radians) mapping lab-frame vectors into the molecular
/// frame: v_mol = Rz(alpha) * Ry(beta) * Rz(gamma) * v_lab.
struct Orientation {
  double alpha_rad = 0.0;
  double beta_rad = 0.0;
  double gamma_rad = 0.0;
  Eigen::Matrix3d rotation() const;
  static Orientation from_rotation(const Eigen::Matrix3d& r);
};

/// 3x3 Hermitian matrix in MHz over the zero-field basis {|Tx>,|Ty>,|Tz>}.
using Hamiltonian3 = Eigen::Matrix3cd;

// Spin-1 operators in the zero-field basis. The phase convention is chosen
// so that D(Sz^2 - 2/3) + E(Sx^2 - Sy^2) = diag(D/3 + E, D/3 - E, -2D/3):
// with E < 0 this places Tx below Ty, making Txz = D + E and Tyz = D - E.
const Eigen::Matrix3cd& spin_x();
const Eigen::Matrix3cd& spin_y();
const Eigen::Matrix3cd& spin_z();

struct TripletEigensystem {
  Eigen::Vector3d energies_MHz;  // ascending
  Eigen::Matrix3cd vectors;      // orthonormal columns, matching order
};

enum class TransitionLabel { Txy, Txz, Tyz };
const char* to_string(TransitionLabel label);
TransitionLabel transition_label_from_string(const std::string& s);

struct Transition {
  TransitionLabel label;
  double frequency_MHz;
  double dipole_weight;  // |<i|S.n|j>|^2 for the chosen drive axis
};

/// D(Sz^2 - 2/3) + E(Sx^2 - Sy^2) + gamma_e (B.S), with B rotated into the
/// molecular frame first. Result is Hermitian and traceless at zero field.
Hamiltonian3 build_hamiltonian(const ZfsParams& zfs, const FieldVector& field,
                               const Orientation& orient = {});

/// Sorted eigenvalues and orthonormal eigenvectors; throws InvalidInputError
/// if H deviates from Hermitian by more than 1e-9 MHz.
TripletEigensystem eigensystem(const Hamiltonian3& h);

/// Generic drive axis giving all three lines nonzero weight.
Eigen::Vector3d default_drive_axis();

/// The three pairwise transitions, labelled by the dominant zero-field
/// character of each eigenvector (maximum-overlap assignment).
std::array<Transition, 3> transition_table(
    const TripletEigensystem& es,
    const Eigen::Vector3d& drive_axis = default_drive_axis());

struct ZeemanPoint {
  double b_mT;
  double f_xy_MHz;
  double f_xz_MHz;
  double f_yz_MHz;
};

/// Transition frequencies versus |B| along a fixed axis. Labels follow
/// adiabatic continuation from the zero-field assignment, so lines stay
/// continuous through mixing regions.
std::vector<ZeemanPoint> zeeman_sweep(const ZfsParams& zfs,
                                      const Eigen::Vector3d& axis_lab,
                                      const std::vector<double>& b_values_mT,
                                      const Orientation& orient = {});

}  // namespace pentasim::spin
