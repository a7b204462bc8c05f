#pragma once

#include <cstdint>
#include <optional>

#include "newtonspec/numerics.hpp"
#include "newtonspec/poly.hpp"
#include "newtonspec/polytope.hpp"

namespace newtonspec {

struct SpectrumOptions {
  /// Largest truncation level tried by the generating-series route; defaults to 8n.
  std::optional<std::int64_t> max_truncation;
  /// Worker threads for the 2^n coordinate restrictions.
  unsigned threads = 1;
};

enum class SpectrumRoute { Box, Oracle };

const char* to_string(SpectrumRoute route);

struct ToricSpectrum {
  Series series;
  SpectrumRoute route = SpectrumRoute::Box;
};

/// Sum over distinguished faces D of (z-1)^{n-1-dim D} sum_{v in Box(D)} z^{nu(v)}.
/// Throws NotSimplicialFaces when a distinguished face is not a simplex.
Series toric_spectrum_box(const PolytopeModel& m);

/// (1-z)^n sum_{v in N^n} z^{nu(v)}, computed from truncations nu(v) <= T for
/// T = n+1, n+2, ... and accepted once the exact part (exponents <= T-n) has
/// nonnegative coefficients summing to the normalized volume.
/// Throws NoConvergence when T would exceed the cap.
Series toric_spectrum_oracle(const PolytopeModel& m, const SpectrumOptions& opts = {});

/// Box route when the distinguished faces are simplices, else the oracle.
ToricSpectrum toric_spectrum(const PolytopeModel& m, const SpectrumOptions& opts = {});

/// Alternating sum over coordinate restrictions of their toric spectra, the
/// full restriction contributing (-1)^n. In local mode this is the local
/// singularity spectrum.
Series spectrum_at_infinity(const Poly& p, const SpectrumOptions& opts = {});

struct MilnorRoutes {
  std::int64_t from_spectrum = 0;  // value at z = 1 of the spectrum at infinity
  std::int64_t from_volumes = 0;   // alternating sum of normalized volumes
};

MilnorRoutes milnor_routes(const Poly& p, const SpectrumOptions& opts = {});

/// Throws InternalMismatch when the two routes disagree.
std::int64_t milnor_number(const Poly& p, const SpectrumOptions& opts = {});

/// #{v in N^n : nu(v) = 1}.
std::int64_t boundary_lattice_points(const PolytopeModel& m);

}  // namespace newtonspec
