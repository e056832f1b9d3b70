/*
 Copyright 2026 The mmac Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#ifndef MMAC_LINALG_HPP
#define MMAC_LINALG_HPP

#include "mmac/types.hpp"

namespace mmac::linalg {

Matrix symmetrize(const Matrix& m);

double max_abs(const Matrix& m);
double asymmetry(const Matrix& m);

// Extreme eigenvalues of the symmetric part of `m`.
double min_eigenvalue(const Matrix& m);
double max_eigenvalue(const Matrix& m);

double spectral_radius(const Matrix& m);

// Projection onto the PSD cone (negative eigenvalues clipped to zero).
Matrix psd_part(const Matrix& m);

// Symmetric PSD square root.
Matrix psd_sqrt(const Matrix& m);

// Quadratic form v' M v.
double quad(const Vector& v, const Matrix& m);

}  // namespace mmac::linalg

#endif  // MMAC_LINALG_HPP
