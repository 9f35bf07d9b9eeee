#pragma once

#include "heatspec/exact/coeff_expr.hpp"

#include <array>
#include <string>
#include <vector>

namespace heatspec::invariants {

using exact::CoeffExpr;

/// The universal constants d_0..d_21 and e_0..e_8 of the a_3 boundary integrand.
struct CoefficientTable {
  std::array<CoeffExpr, 22> d;
  std::array<CoeffExpr, 9> e;

  /// Entry by name, e.g. "d16" or "e0".
  CoeffExpr& at(const std::string& name);
  const CoeffExpr& at(const std::string& name) const;
};

/// The closed-form table; built once and shared.
const CoefficientTable& coefficient_table();

/// Copy of the table with 1 added to the named entry (negative control).
CoefficientTable tampered_table(const std::string& entry);

struct RelationResult {
  int group;          // 1..11
  std::string label;  // e.g. "2b"
  CoeffExpr residual;
  bool pass;
};

struct Lemma2Report {
  std::vector<RelationResult> relations;
  bool all_pass() const;
  /// Per group: true iff every relation in it passes.
  std::array<bool, 12> group_pass() const;
  /// One line per relation: "label  residual  PASS|FAIL".
  std::string render() const;
};

Lemma2Report lemma2_verify(const CoefficientTable& table = coefficient_table());

}  // namespace heatspec::invariants
