/*
 * (C) Copyright 2026 mubkit developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include "mubkit/basis.hpp"
#include "mubkit/linalg.hpp"

namespace mub {

/// Trial-division primality (scope is d <= 16, so nothing fancier needed).
bool is_prime(std::size_t n);

/// Cyclic shift: X e_k = e_{k+1 mod d}.
ComplexMatrix weyl_x(std::size_t d);

/// Phase operator: Z e_k = w^k e_k with w = e^{2*pi*i/d}.
ComplexMatrix weyl_z(std::size_t d);

/// True iff Z X - w X Z vanishes within 1e-12.
bool commutator_check(std::size_t d);

/// Orthonormal eigenbasis of the unitary X Z^a for prime d, eigenvectors
/// ordered by eigenvalue phase ascending in [0, 2pi) and rephased so the
/// first component of modulus > 1e-8 is real-positive. a = 0 (the shift
/// eigenbasis) is served in closed form by Fourier columns; other powers go
/// through the two-stage Hermitian split of the unitary.
Basis weyl_eigenbasis(std::size_t d, std::size_t z_power);

/// The d+1 bases for prime d: computational plus the eigenbases of X Z^a
/// for a = 0..d-1. Verified and certified at 1e-10 before returning.
MubSet weyl_mub_set(std::size_t d);

}  // namespace mub
