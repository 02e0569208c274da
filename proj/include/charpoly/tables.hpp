#pragma once

#include <functional>
#include <string>
#include <vector>

#include "charpoly/fredholm.hpp"
#include "charpoly/rational.hpp"
#include "charpoly/structured.hpp"

namespace charpoly {

/// Test point for the appendix rows.
struct TablePoint {
  Rational a{1, 2};
  Rational b{1, 3};
  Rational c{1, 5};
};

/// One printed row: a closed form in (a, b, c) and the group average it states.
struct TableRow {
  std::string name;   ///< e.g. "R_S(4)", "I_O+(5)(a,b)"
  GroupTarget target;
  /// Which symbol the row is about: ratio rows use A={a}, C={c} (B=A, D=C for
  /// U); moment rows use A={a,b}, C=empty.
  bool moment = false;
  std::function<Rational(const Rational&, const Rational&, const Rational&)> fixture;
};

std::vector<TableRow> appendix_rows();

struct TableCheck {
  std::string name;
  Rational fixture;
  Rational determinant;
  Rational ratios;
  bool pass = false;
};

TableCheck check_row(const TableRow& row, const TablePoint& p = {});

/// The listed factorizations R_U(1..5), I_U(1..4) at the test point.
std::vector<IdentityReport> appendix_factorizations(const TablePoint& p = {});

}  // namespace charpoly
