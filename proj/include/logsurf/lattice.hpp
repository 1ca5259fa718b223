#pragma once

#include "logsurf/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace logsurf {

/// One tracked curve class on a smooth projective surface.
struct CurveRecord {
  std::string name;
  long long pa = 0;   ///< arithmetic genus
  long long kdeg = 0; ///< canonical degree K.C, kept consistent with adjunction

  bool operator==(const CurveRecord&) const = default;
};

/// The intersection lattice of a finite set of curves.
///
/// `gram[i][i]` is the self-intersection of curve i and `gram[i][j]` the
/// intersection number of two distinct curves. The struct is a plain value:
/// nothing is checked on construction, `validate` reports every violated
/// invariant. Transforms return new configs and never mutate their input.
struct CurveConfig {
  std::vector<CurveRecord> curves;
  std::vector<std::vector<long long>> gram;
  bool assume_tracked_complete = false;

  std::size_t size() const noexcept { return curves.size(); }
  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws Error("unknown-curve") when absent.
  std::size_t index_of(std::string_view name) const;
  const CurveRecord& curve(std::string_view name) const { return curves[index_of(name)]; }
  long long self(std::string_view name) const;
  long long meet(std::string_view a, std::string_view b) const;
  std::vector<std::string> names() const;

  bool operator==(const CurveConfig&) const = default;
};

/// Incremental construction with kdeg derived from adjunction.
class ConfigBuilder {
public:
  ConfigBuilder& curve(std::string name, long long self_intersection, long long pa = 0);
  /// Adds `m` to the intersection of two distinct curves.
  ConfigBuilder& meet(std::string_view a, std::string_view b, long long m = 1);
  ConfigBuilder& tracked_complete(bool flag);
  CurveConfig build() const { return config_; }

private:
  CurveConfig config_;
};

/// Q-linear combination of named curves. Zero coefficients are never stored,
/// so two divisors compare equal iff they have the same coefficients.
class QDivisor {
public:
  using Map = std::map<std::string, Rational>;

  QDivisor() = default;
  QDivisor(std::initializer_list<std::pair<const std::string, Rational>> init);

  static QDivisor of(std::string name, const Rational& coeff = 1);
  /// Reduced sum of the given curves.
  static QDivisor sum_of(std::span<const std::string> names);

  Rational operator[](std::string_view name) const;
  void set(const std::string& name, const Rational& coeff);
  void add(const std::string& name, const Rational& coeff);

  const Map& coeffs() const noexcept { return coeffs_; }
  bool empty() const noexcept { return coeffs_.empty(); }
  std::vector<std::string> support() const;
  bool is_effective() const;

  QDivisor operator+(const QDivisor& other) const;
  QDivisor operator-(const QDivisor& other) const;
  QDivisor operator*(const Rational& scale) const;
  QDivisor operator-() const { return *this * Rational(-1); }

  bool operator==(const QDivisor&) const = default;

private:
  Map coeffs_;
};

inline QDivisor operator*(const Rational& scale, const QDivisor& d) { return d * scale; }

/// Violation descriptions; empty iff every CurveConfig invariant holds.
std::vector<std::string> validate(const CurveConfig& config);

/// Dense coefficient vector in curve order. Throws Error("unknown-curve").
std::vector<Rational> dense(const CurveConfig& config, const QDivisor& d);
QDivisor sparse(const CurveConfig& config, std::span<const Rational> coeffs);

/// Products D.C_i for every tracked curve, in curve order.
std::vector<Rational> intersections(const CurveConfig& config, const QDivisor& d);

Rational pairing(const CurveConfig& config, const QDivisor& d1, const QDivisor& d2);
Rational kdot(const CurveConfig& config, const QDivisor& d);
/// 1 + (D^2 + K.D)/2.
Rational pa_of(const CurveConfig& config, const QDivisor& d);
/// (K + D).C_i for every tracked curve, using the stored canonical degrees.
std::vector<Rational> log_intersections(const CurveConfig& config, const QDivisor& d);

bool is_negative_definite(const CurveConfig& config, const std::set<std::string>& subset);
bool is_nef_on_tracked(const CurveConfig& config, const QDivisor& d);
/// Componentwise D >= D2.
bool divisor_geq(const QDivisor& d, const QDivisor& d2);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  bool operator==(const Inertia&) const = default;
};
/// Sylvester inertia of the full Gram matrix.
Inertia inertia(const CurveConfig& config);

/// Connected components of the incidence graph restricted to `subset`,
/// each listed in curve order; components ordered by their first curve.
std::vector<std::vector<std::string>> connected_components(const CurveConfig& config,
                                                           const std::set<std::string>& subset);

/// Weighted dual-graph isomorphism (self-intersections, genera and edge
/// multiplicities must match) between two sub-configurations.
bool dual_graphs_isomorphic(const CurveConfig& a, std::span<const std::string> a_curves,
                            const CurveConfig& b, std::span<const std::string> b_curves);

} // namespace logsurf
