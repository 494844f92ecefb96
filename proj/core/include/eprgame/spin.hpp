// Spin-projection observables along a direction and their eigenstates.
#pragma once

#include <array>
#include <complex>

#include "eprgame/direction.hpp"

namespace eprgame {

using Complex = std::complex<double>;

// 2x2 complex matrix in row-major order.
using Matrix2 = std::array<std::array<Complex, 2>, 2>;

// Matrices returned by sigma_dot_n are Hermitian with eigenvalues {+1, -1}.
using HermitianObservable = Matrix2;

// Single-qubit state as amplitudes on the computational basis |0>, |1>.
struct QubitState {
    Complex amp0;
    Complex amp1;
};

// The spin projection along d: x*sigma_x + y*sigma_y + z*sigma_z, i.e.
// [[z, x - i y], [x + i y, -z]]. Traceless with determinant -1.
HermitianObservable sigma_dot_n(const Direction& d);

// Normalized eigenstate of sigma_dot_n(d) for the given eigenvalue, in the
// half-angle form
//   +1: (cos(theta/2),  e^{i phi} sin(theta/2))
//   -1: (sin(theta/2), -e^{i phi} cos(theta/2)),
// which stays well defined at the poles. Throws std::invalid_argument unless
// outcome is +1 or -1.
QubitState spin_eigenstate(const Direction& d, int outcome);

}  // namespace eprgame
