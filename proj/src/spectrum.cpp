#include "newtonspec/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include "newtonspec/error.hpp"

namespace newtonspec {

const char* to_string(SpectrumRoute route) { return route == SpectrumRoute::Box ? "box" : "oracle"; }

Series toric_spectrum_box(const PolytopeModel& m) {
  if (!m.distinguished_simplicial())
    throw Error(ErrorKind::NotSimplicialFaces, "box formula: a face off the coordinate hyperplanes is not a simplex");
  const auto n = static_cast<int>(m.dim());
  Series total;
  for (auto fi : m.distinguished_faces()) {
    Series box;
    for (const auto& bp : m.box_points(fi)) box.add_term(bp.nu, 1);
    total += z_minus_one_pow(static_cast<unsigned>(n - 1 - m.faces()[fi].dim)) * box;
  }
  return total;
}

Series toric_spectrum_oracle(const PolytopeModel& m, const SpectrumOptions& opts) {
  const auto n = static_cast<std::int64_t>(m.dim());
  const std::int64_t cap = opts.max_truncation.value_or(8 * n);
  const std::int64_t mass = m.normalized_volume();
  for (std::int64_t level = n + 1; level <= cap; ++level) {
    Series partial;
    m.for_each_point_up_to(Rat(level), [&](const ExpVec&, const Rat& nu) { partial.add_term(nu, 1); });
    // coefficients at exponents <= level are already exact after (1-z)^n
    Series exact = mul_one_minus_z_pow(partial, static_cast<unsigned>(n)).truncated(Rat(0), Rat(level - n));
    if (exact.has_nonnegative_coefficients() && eval_at_one(exact) == mass) return exact;
  }
  std::ostringstream msg;
  msg << "generating-series oracle: no stable truncation up to level " << cap << " (normalized volume " << mass
      << ")";
  throw Error(ErrorKind::NoConvergence, msg.str());
}

ToricSpectrum toric_spectrum(const PolytopeModel& m, const SpectrumOptions& opts) {
  if (m.distinguished_simplicial()) return {toric_spectrum_box(m), SpectrumRoute::Box};
  return {toric_spectrum_oracle(m, opts), SpectrumRoute::Oracle};
}

namespace {

std::set<std::size_t> subset_of(unsigned mask, std::size_t n) {
  std::set<std::size_t> s;
  for (std::size_t i = 0; i < n; ++i)
    if (mask & (1u << i)) s.insert(i);
  return s;
}

// Runs job(mask) for every mask in [0, 2^n) and returns results by mask, so
// the caller's summation order never depends on scheduling.
template <typename T>
std::vector<T> over_restrictions(std::size_t n, unsigned threads, const std::function<T(unsigned)>& job) {
  const unsigned count = 1u << n;
  std::vector<T> results(count);
  if (threads <= 1) {
    for (unsigned mask = 0; mask < count; ++mask) results[mask] = job(mask);
    return results;
  }
  std::atomic<unsigned> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min(threads, count); ++t) {
    pool.emplace_back([&] {
      for (unsigned mask = next++; mask < count; mask = next++) {
        try {
          results[mask] = job(mask);
        } catch (...) {
          errors[mask] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace

Series spectrum_at_infinity(const Poly& p, const SpectrumOptions& opts) {
  check_convenient(p);
  const std::size_t n = p.nvars();
  const unsigned full = (1u << n) - 1;
  std::function<Series(unsigned)> job = [&](unsigned mask) {
    if (mask == full) return Series::constant(1);
    Poly q = mask == 0 ? p : restrict_poly(p, subset_of(mask, n));
    return toric_spectrum(PolytopeModel::build(q), opts).series;
  };
  auto parts = over_restrictions<Series>(n, opts.threads, job);
  Series total;
  for (unsigned mask = 0; mask <= full; ++mask) {
    if (__builtin_popcount(mask) % 2 == 0)
      total += parts[mask];
    else
      total -= parts[mask];
  }
  return total;
}

MilnorRoutes milnor_routes(const Poly& p, const SpectrumOptions& opts) {
  check_convenient(p);
  const std::size_t n = p.nvars();
  const unsigned full = (1u << n) - 1;
  std::function<std::int64_t(unsigned)> job = [&](unsigned mask) -> std::int64_t {
    if (mask == full) return 1;
    Poly q = mask == 0 ? p : restrict_poly(p, subset_of(mask, n));
    return PolytopeModel::build(q).normalized_volume();
  };
  auto volumes = over_restrictions<std::int64_t>(n, opts.threads, job);
  MilnorRoutes r;
  for (unsigned mask = 0; mask <= full; ++mask)
    r.from_volumes += (__builtin_popcount(mask) % 2 == 0 ? 1 : -1) * volumes[mask];
  r.from_spectrum = eval_at_one(spectrum_at_infinity(p, opts));
  return r;
}

std::int64_t milnor_number(const Poly& p, const SpectrumOptions& opts) {
  auto r = milnor_routes(p, opts);
  if (r.from_spectrum != r.from_volumes) {
    std::ostringstream msg;
    msg << "milnor number: spectrum at infinity gives " << r.from_spectrum
        << " but the alternating volume sum gives " << r.from_volumes;
    throw Error(ErrorKind::InternalMismatch, msg.str());
  }
  return r.from_volumes;
}

std::int64_t boundary_lattice_points(const PolytopeModel& m) {
  std::int64_t count = 0;
  m.for_each_point_up_to(Rat(1), [&](const ExpVec&, const Rat& nu) { count += nu == 1 ? 1 : 0; });
  return count;
}

}  // namespace newtonspec
