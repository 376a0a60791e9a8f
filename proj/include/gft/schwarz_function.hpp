#pragma once

#include <complex>
#include <string>
#include <variant>

#include "gft/series.hpp"

namespace gft {

/// ω(z) = z^k, k ≥ 1.
struct Monomial {
  int k = 1;
};

/// ω(z) = λz, |λ| ≤ 1.
struct Rotation {
  Complex lambda{1.0, 0.0};
};

/// ω(z) = e^{iφ} z (z - a)/(1 - ā z), a ∈ 𝔻. The Dieudonné equality case.
struct BlaschkeDeg2Fix0 {
  Complex a{};
  double phi = 0.0;
};

/// ω(z) = e^{iφ} (z - α)/(1 - ᾱ z), α ∈ 𝔻. Used as a harmonic dilatation.
struct Automorphism {
  Complex alpha{};
  double phi = 0.0;
};

/// ω with its first two derivatives at a point.
struct OmegaJet {
  Complex w;
  Complex d1;
  Complex d2;
};

/// A closed-form self-map of the disk from one of four verified families.
class SchwarzSpec {
 public:
  using Variant = std::variant<Monomial, Rotation, BlaschkeDeg2Fix0, Automorphism>;

  /// Throws std::invalid_argument if the family parameters leave the disk.
  SchwarzSpec(Variant v);  // NOLINT(google-explicit-constructor)
  SchwarzSpec(Monomial m) : SchwarzSpec(Variant(m)) {}  // NOLINT
  SchwarzSpec(Rotation r) : SchwarzSpec(Variant(r)) {}  // NOLINT
  SchwarzSpec(BlaschkeDeg2Fix0 b) : SchwarzSpec(Variant(b)) {}  // NOLINT
  SchwarzSpec(Automorphism a) : SchwarzSpec(Variant(a)) {}  // NOLINT

  const Variant& variant() const noexcept { return v_; }

  /// True for the Schwarz-class families (ω(0) = 0).
  bool fixes_origin() const noexcept;
  /// True for Automorphism with α = 0, i.e. ω(z) = e^{iφ} z.
  bool is_rotation_of_identity() const noexcept;

  Complex value(Complex z) const;
  /// n-th derivative, n ≥ 0, closed form.
  Complex derivative(Complex z, int n) const;
  OmegaJet jet(Complex z) const;

  /// q(z) = ω(z)/z and its first two derivatives; only for fixes_origin().
  OmegaJet quotient_jet(Complex z) const;

  /// Taylor coefficients of ω about 0.
  PowerSeries taylor(std::size_t order) const;
  /// Taylor coefficients of ω(z)/z; only for fixes_origin().
  PowerSeries quotient_taylor(std::size_t order) const;

  std::string describe() const;

 private:
  Variant v_;
};

/// (ω, ω', ω'') for any SchwarzSpec; the closed forms of the automorphism
/// e^{iφ}(z-α)/(1-ᾱz) are ω' = e^{iφ}(1-|α|²)/(1-ᾱz)², ω'' = 2ᾱ e^{iφ}(1-|α|²)/(1-ᾱz)³.
OmegaJet aut_disk_eval(const SchwarzSpec& w, DiskPoint z);

}  // namespace gft
