#pragma once
/**
 * @file suites.hpp
 * @brief Internal: suite entry points and the random generators they share.
 */

#include "filtharm/harness.hpp"

#include <string>

namespace fh::harness::detail {

CycNum rand_value(Lcg& rng, int p);
/// Random table, never identically zero.
Fn0 rand_table(Lcg& rng, const FinSpace& sp);
/// Nonzero rational of the form c·q^k with small c and k.
Rational rand_scale(Lcg& rng, int q);
LinMap rand_map(Lcg& rng, const FinSpace& src, const FinSpace& tgt);

std::string win(long lo, long hi);

/// Window points capped; false when the window exceeds `cap` or the table cap.
bool fits(const C1Model& m, long lo, long hi, std::size_t cap);

/// One case comparing two functions on every admissible window in [-range, range].
void cmp_fn(Recorder& rec, const Fn1& a, const Fn1& b, const std::string& identity, const std::string& where, long range,
            std::size_t cap);
void cmp_dist(Recorder& rec, const Dist1& a, const Dist1& b, const std::string& identity, const std::string& where,
              long range, std::size_t cap);

// dim0
void suite_poisson0(FieldPtr, const SuiteArgs&, Lcg&, Recorder&);
void suite_fourier0_laws(FieldPtr, const SuiteArgs&, Lcg&, Recorder&);
void suite_character(FieldPtr, const SuiteArgs&, Lcg&, Recorder&);
// c1
void suite_poisson1(FieldPtr, const SuiteArgs&, Lcg&, Recorder&);
void suite_haar_lattice_fourier(FieldPtr, const SuiteArgs&, Lcg&, Recorder&);
void suite_fourier1_laws(FieldPtr, const SuiteArgs&, Lcg&, Recorder&);
void suite_fubini(FieldPtr, const SuiteArgs&, Lcg&, Recorder&);
void suite_projection(FieldPtr, const SuiteArgs&, Lcg&, Recorder&);
void suite_composition(FieldPtr, const SuiteArgs&, Lcg&, Recorder&);
void suite_base_change(FieldPtr, const SuiteArgs&, Lcg&, Recorder&);
void suite_fourier_image(FieldPtr, const SuiteArgs&, Lcg&, Recorder&);
// c2
void suite_virtual_measure(FieldPtr, const SuiteArgs&, Lcg&, Recorder&);
void suite_poisson2_I(FieldPtr, const SuiteArgs&, Lcg&, Recorder&);
void suite_poisson2_II(FieldPtr, const SuiteArgs&, Lcg&, Recorder&);
void suite_central_ext(FieldPtr, const SuiteArgs&, Lcg&, Recorder&);
void suite_representation(FieldPtr, const SuiteArgs&, Lcg&, Recorder&);
void suite_fourier_intertwine(FieldPtr, const SuiteArgs&, Lcg&, Recorder&);
void suite_base_change2(FieldPtr, const SuiteArgs&, Lcg&, Recorder&);
void suite_fourier_image2(FieldPtr, const SuiteArgs&, Lcg&, Recorder&);

}  // namespace fh::harness::detail
