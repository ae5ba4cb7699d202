#pragma once

#include "noetherres/shortres.hpp"

// The example inputs used across the test suites. The two non-matrix
// ideals are produced by elimination from their parametrizations, so the
// suites validate the whole chain from the defining data.
namespace fixtures {

using namespace nres;

// projective monomial curve 0 < 1 < 2 < 6 < 7 intersected with a
// zero-dimensional ideal; standard grading, d = 2, A = k[x4, x5]
ShortResInput dim2_zero_divisor_ideal();

// 3-dimensional simplicial presentation with weights (9,11,11,11,2,2,2)
ToricPresentation surface_9_11();

// the homogeneous degree-12 surface with |B0| = 204
ToricPresentation surface_deg12();

// the degree-4 surface with |C| = 3 and B1 = B1'
ToricPresentation surface_deg4();

// the 6x16 matrix whose Betti numbers depend on the characteristic
ToricPresentation char_dependent_matrix();

// prime but non-binomial ideal from a perturbed degree-4 surface
// parametrization; d = 3, all weights 4
ShortResInput perturbed_surface_ideal();

// generic implicitization helper: eliminate the first `nt` variables from
// the given generators (built over nt + nx variables) and return the
// result in the nx-variable ring with the given weights
std::vector<Polynomial> eliminate_prefix(const std::vector<Polynomial>& gens, std::size_t nt,
                                         const std::vector<std::uint32_t>& wx,
                                         const FieldSpec& F);

} // namespace fixtures
