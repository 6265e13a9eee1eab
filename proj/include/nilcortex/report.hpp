#pragma once

// Human-readable and machine-readable renderings of every command result.
// Both renderings carry the same data; rationals are always rational
// strings, floating values appear only in point-cloud CSV.

#include <cstddef>
#include <span>
#include <string>

#include "nilcortex/cortex.hpp"
#include "nilcortex/lie_algebra.hpp"

namespace nilcortex {

enum class Format { Text, Record };

/// Rendered output plus the command's truth value (drives exit status).
struct Rendered {
  std::string text;
  bool truth = true;
};

Rendered report_validate(const LieAlgebra& alg, Format fmt);
std::string report_orbit(const LieAlgebra& alg, std::span<const Rational> ell, Format fmt);
std::string report_jump(const LieAlgebra& alg, std::span<const Rational> ell, Format fmt);
/// truth: every generator has identically zero coadjoint derivation.
Rendered report_invariants(std::size_t d, Format fmt);
/// truth: cortex membership.
Rendered report_cortex_test(std::size_t d, std::span<const Rational> ell, Format fmt);
std::string report_witness(const WitnessSchedule& schedule, Format fmt);
std::string report_perturbed_witness(const PerturbedWitness& witness, Format fmt);
/// truth: Cor = z^perp established.
Rendered report_classify(const ClassifierReport& rep, Format fmt);
std::string report_cross_section(std::size_t d, std::span<const Rational> ell, Format fmt);
std::string report_cortex_poly(std::size_t d, Format fmt);

/// One point per row, coordinates with 17 significant digits.
std::string cloud_csv(const PointCloud& cloud);
std::string format_double(double v);

}  // namespace nilcortex
