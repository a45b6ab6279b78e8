#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hsalg/exactcore/gauss_rational.hpp"

namespace hsalg {

/// Non-increasing list of positive row lengths. The spinorial flag marks labels
/// whose rows are the integer parts [s] of half-integers; it is carried for
/// bookkeeping only.
struct YoungDiagram {
  std::vector<int> rows;
  bool spinorial = false;

  YoungDiagram() = default;
  /// Trailing zero rows are dropped; throws when rows increase or are negative.
  explicit YoungDiagram(std::vector<int> row_lengths, bool spinorial = false);
  static YoungDiagram from_columns(const std::vector<int>& columns);
  /// Parses "[3,1]", "3,1" or "[]".
  static YoungDiagram parse(const std::string& text);

  std::vector<int> columns() const;
  int boxes() const;
  int height() const { return static_cast<int>(rows.size()); }
  std::string to_string() const;

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
};

/// Dimension of the irreducible O(N) module (Weyl dimension formula on the B/D
/// root system; diagrams with first column above N/2 are replaced by their
/// associated diagram, and D-type labels with a full last row count both
/// chiral halves). Throws for spinorial labels and when c1 + c2 > N.
Integer o_dim(const YoungDiagram& d, int N);

/// Dimension of the irreducible GL(N) module (hook-content formula).
Integer gl_dim(const YoungDiagram& d, int N);

struct UnitarityBound {
  std::string kind;  // "scalar", "spinor" or "spin-s"
  Rational s;
  int k = 0;  // height of the leading rectangle (0 for scalar/spinor)
  Rational bound;
  bool trivial_allowed = false;  // E0 = 0 is also unitary (scalar case)
  Rational twist_at_bound;
  bool saturates = false;  // twist at the bound equals n/2 - 1

  Rational twist(const Rational& e0) const { return abs(e0) - s; }
  nlohmann::json to_json() const;
};

/// Lowest-energy bound for an o(n) ground-state label.
UnitarityBound unitarity_bound(int n, const YoungDiagram& d);

struct SingletonLabel {
  int n = 0;
  Rational s;
  Rational e0;
  YoungDiagram ground;
  std::string name;
  Rational twist;
  /// Rectangle of n/2 - 1 rows of length [s] (n even only).
  std::optional<YoungDiagram> poincare_label;
  /// Lowest energy s - 1 + (n-1)/2 of the corresponding singleton one dimension lower.
  Rational lower_singleton_e0;

  nlohmann::json to_json() const;
};

/// Throws for s < 0, s not a half-integer, or n odd with s >= 1.
SingletonLabel singleton_label(int n, const Rational& s);

struct BranchingRow {
  int t = 0;
  Rational energy;
  YoungDiagram diagram;
  std::optional<Integer> dim;  // absent for spinorial labels
  int multiplicity = 1;
};

std::vector<BranchingRow> branching_table(int n, const Rational& s, int tmax);

struct HsDiagram {
  YoungDiagram diagram;
  Integer dim;  // as an o(n+2) diagram
  /// True when a single column counted twice would exceed n+2.
  bool readings_differ = false;
};

/// Diagrams with even columns, distinct column pairs summing to at most n+2,
/// and every column after the 2s-th of length two, up to max_boxes boxes.
/// The empty diagram is included.
std::vector<HsDiagram> hs_adjoint_diagrams(int n, int s, int max_boxes);

}  // namespace hsalg
