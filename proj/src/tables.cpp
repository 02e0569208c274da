#include "charpoly/tables.hpp"

#include "charpoly/ratios.hpp"

namespace charpoly {

namespace {

using R = Rational;

R p(const R& x, long k) { return x.pow(k); }

TableRow ratio_row(std::string name, Family f, int n,
                   std::function<R(const R&, const R&, const R&)> fx) {
  return TableRow{std::move(name), {f, n}, false, std::move(fx)};
}

TableRow moment_row(std::string name, Family f, int n,
                    std::function<R(const R&, const R&, const R&)> fx) {
  return TableRow{std::move(name), {f, n}, true, std::move(fx)};
}

// Second factor of I_U(4); the first is its image under (a, b) -> (-a, -b).
R u4_plus(const R& a, const R& b) {
  return 1 + a + a * a + p(a, 3) + p(a, 4) + b + 2 * a * b + 2 * a * a * b + 2 * p(a, 3) * b +
         p(a, 4) * b + b * b + 2 * a * b * b + 3 * a * a * b * b + 2 * p(a, 3) * b * b +
         p(a, 4) * b * b + p(b, 3) + 2 * a * p(b, 3) + 2 * a * a * p(b, 3) + 2 * p(a, 3) * p(b, 3) +
         p(a, 4) * p(b, 3) + p(b, 4) + a * p(b, 4) + a * a * p(b, 4) + p(a, 3) * p(b, 4) +
         p(a, 4) * p(b, 4);
}

R u4_minus(const R& a, const R& b) {
  return 1 - a + a * a - p(a, 3) + p(a, 4) - b + 2 * a * b - 2 * a * a * b + 2 * p(a, 3) * b -
         p(a, 4) * b + b * b - 2 * a * b * b + 3 * a * a * b * b - 2 * p(a, 3) * b * b +
         p(a, 4) * b * b - p(b, 3) + 2 * a * p(b, 3) - 2 * a * a * p(b, 3) + 2 * p(a, 3) * p(b, 3) -
         p(a, 4) * p(b, 3) + p(b, 4) - a * p(b, 4) + a * a * p(b, 4) - p(a, 3) * p(b, 4) +
         p(a, 4) * p(b, 4);
}

R u2_plus(const R& a, const R& b) {
  return 1 + a + a * a + b + 2 * a * b + a * a * b + b * b + a * b * b + a * a * b * b;
}

R u2_minus(const R& a, const R& b) {
  return 1 - a + a * a - b + 2 * a * b - a * a * b + b * b - a * b * b + a * a * b * b;
}

R o4_moment(const R& a, const R& b) {
  return 1 + p(a, 4) + a * b + p(a, 3) * b + 2 * a * a * b * b + a * p(b, 3) + p(a, 3) * p(b, 3) +
         p(b, 4) + p(a, 4) * p(b, 4);
}

}  // namespace

std::vector<TableRow> appendix_rows() {
  std::vector<TableRow> rows;
  using F = Family;

  rows.push_back(ratio_row("R_U(1)", F::U, 1, [](const R& a, const R&, const R& c) {
    return (1 - 2 * a * c + a * a) / (1 - c * c);
  }));
  rows.push_back(ratio_row("R_U(2)", F::U, 2, [](const R& a, const R&, const R& c) {
    return (1 - a + a * a - a * c) * (1 + a + a * a - a * c) / (1 - c * c);
  }));
  rows.push_back(ratio_row("R_U(3)", F::U, 3, [](const R& a, const R&, const R& c) {
    return (1 + a * a - a * c) * (1 + p(a, 4) - a * c - p(a, 3) * c) / (1 - c * c);
  }));
  rows.push_back(ratio_row("R_U(4)", F::U, 4, [](const R& a, const R&, const R& c) {
    return (1 + a + a * a + p(a, 3) + p(a, 4) - a * c - a * a * c - p(a, 3) * c) *
           (1 - a + a * a - p(a, 3) + p(a, 4) - a * c + a * a * c - p(a, 3) * c) / (1 - c * c);
  }));

  rows.push_back(ratio_row("R_S(2)", F::USp, 2, [](const R& a, const R&, const R& c) {
    return 1 + a * a - a * c;
  }));
  rows.push_back(ratio_row("R_S(4)", F::USp, 4, [](const R& a, const R&, const R& c) {
    return 1 + a * a + p(a, 4) - a * c - p(a, 3) * c;
  }));
  // printed "a^4-+a^6"
  rows.push_back(ratio_row("R_S(6)", F::USp, 6, [](const R& a, const R&, const R& c) {
    return 1 + a * a + p(a, 4) + p(a, 6) - a * c - p(a, 3) * c - p(a, 5) * c;
  }));
  rows.push_back(ratio_row("R_S(8)", F::USp, 8, [](const R& a, const R&, const R& c) {
    return 1 + a * a + p(a, 4) + p(a, 6) + p(a, 8) - a * c - p(a, 3) * c - p(a, 5) * c - p(a, 7) * c;
  }));

  rows.push_back(ratio_row("R_O+(1)", F::OPlus, 1, [](const R& a, const R&, const R& c) {
    return (1 - a) / (1 - c);
  }));
  rows.push_back(ratio_row("R_O+(2)", F::OPlus, 2, [](const R& a, const R&, const R& c) {
    return (1 + a * a - 2 * a * c) / (1 - c * c);
  }));
  rows.push_back(ratio_row("R_O+(3)", F::OPlus, 3, [](const R& a, const R&, const R& c) {
    return (1 - a * c - p(a, 3) + a * a * c) / (1 - c * c);
  }));
  rows.push_back(ratio_row("R_O+(4)", F::OPlus, 4, [](const R& a, const R&, const R& c) {
    return (1 - a * c + p(a, 4) - p(a, 3) * c) / (1 - c * c);
  }));
  rows.push_back(ratio_row("R_O+(5)", F::OPlus, 5, [](const R& a, const R&, const R& c) {
    return (1 - a * c - p(a, 5) + p(a, 4) * c) / (1 - c * c);
  }));
  rows.push_back(ratio_row("R_O+(6)", F::OPlus, 6, [](const R& a, const R&, const R& c) {
    return (1 - a * c + p(a, 6) - p(a, 5) * c) / (1 - c * c);
  }));

  rows.push_back(ratio_row("R_O-(1)", F::OMinus, 1, [](const R& a, const R&, const R& c) {
    return (1 + a) / (1 + c);
  }));
  rows.push_back(ratio_row("R_O-(2)", F::OMinus, 2, [](const R& a, const R&, const R& c) {
    return (1 - a * a) / (1 - c * c);
  }));
  rows.push_back(ratio_row("R_O-(3)", F::OMinus, 3, [](const R& a, const R&, const R& c) {
    return (1 - a * c + p(a, 3) - a * a * c) / (1 - c * c);
  }));
  rows.push_back(ratio_row("R_O-(4)", F::OMinus, 4, [](const R& a, const R&, const R& c) {
    return (1 - a * c - p(a, 4) + p(a, 3) * c) / (1 - c * c);
  }));
  rows.push_back(ratio_row("R_O-(5)", F::OMinus, 5, [](const R& a, const R&, const R& c) {
    return (1 - a * c + p(a, 5) - p(a, 4) * c) / (1 - c * c);
  }));
  rows.push_back(ratio_row("R_O-(6)", F::OMinus, 6, [](const R& a, const R&, const R& c) {
    return (1 - a * c - p(a, 6) + p(a, 5) * c) / (1 - c * c);
  }));

  rows.push_back(moment_row("I_U(1)(a,b)", F::U, 1, [](const R& a, const R& b, const R&) {
    return 1 + a * a + 2 * a * b + b * b + a * a * b * b;
  }));
  rows.push_back(moment_row("I_U(2)(a,b)", F::U, 2, [](const R& a, const R& b, const R&) {
    return u2_minus(a, b) * u2_plus(a, b);
  }));
  rows.push_back(moment_row("I_U(3)(a,b)", F::U, 3, [](const R& a, const R& b, const R&) {
    return (1 + a * a + a * b + b * b + a * a * b * b) * o4_moment(a, b);
  }));
  // first factor printed without an operator before b^3
  rows.push_back(moment_row("I_U(4)(a,b)", F::U, 4, [](const R& a, const R& b, const R&) {
    return u4_minus(a, b) * u4_plus(a, b);
  }));

  rows.push_back(moment_row("I_USp(2)(a,b)", F::USp, 2, [](const R& a, const R& b, const R&) {
    return 1 + a * a + a * b + b * b + a * a * b * b;
  }));
  rows.push_back(moment_row("I_USp(4)(a,b)", F::USp, 4, [](const R& a, const R& b, const R&) {
    return 1 + a * a + p(a, 4) + a * b + p(a, 3) * b + b * b + 2 * a * a * b * b + p(a, 4) * b * b +
           a * p(b, 3) + p(a, 3) * p(b, 3) + p(b, 4) + a * a * p(b, 4) + p(a, 4) * p(b, 4);
  }));

  rows.push_back(moment_row("I_O-(3)(a,b)", F::OMinus, 3, [](const R& a, const R& b, const R&) {
    return (1 + a) * (1 + b) * u2_minus(a, b);
  }));
  rows.push_back(moment_row("I_O+(3)(a,b)", F::OPlus, 3, [](const R& a, const R& b, const R&) {
    return (1 - a) * (1 - b) * u2_plus(a, b);
  }));
  rows.push_back(moment_row("I_O-(5)(a,b)", F::OMinus, 5, [](const R& a, const R& b, const R&) {
    return (1 + a) * (1 + b) * u4_minus(a, b);
  }));
  rows.push_back(moment_row("I_O+(5)(a,b)", F::OPlus, 5, [](const R& a, const R& b, const R&) {
    return (1 - a) * (1 - b) * u4_plus(a, b);
  }));
  rows.push_back(moment_row("I_O+(4)(a,b)", F::OPlus, 4, [](const R& a, const R& b, const R&) {
    return o4_moment(a, b);
  }));
  return rows;
}

TableCheck check_row(const TableRow& row, const TablePoint& pt) {
  const Generator g = row.moment ? Generator{{pt.a, pt.b}, {}} : Generator{{pt.a}, {pt.c}};
  TableCheck out;
  out.name = row.name;
  out.fixture = row.fixture(pt.a, pt.b, pt.c);
  out.determinant = group_average(row.target, g).value;
  const int n = row.target.size;
  switch (row.target.family) {
    case Family::U:
      out.ratios = ratio_unitary(g.a, g.a, g.c, g.c, n);
      break;
    case Family::USp:
      out.ratios = ratio_symplectic(g.a, g.c, n);
      break;
    case Family::OPlus:
      out.ratios = ratio_orthogonal(g.a, g.c, n, OrthogonalSign::plus);
      break;
    case Family::OMinus:
      out.ratios = ratio_orthogonal(g.a, g.c, n, OrthogonalSign::minus);
      break;
  }
  out.pass = out.fixture == out.determinant && out.fixture == out.ratios;
  return out;
}

std::vector<IdentityReport> appendix_factorizations(const TablePoint& pt) {
  std::vector<IdentityReport> out;
  const Generator ratio{{pt.a}, {pt.c}};
  for (int n = 1; n <= 5; ++n) {
    auto r = verify_factorization(ratio, n);
    r.identity = "R_U(" + std::to_string(n) + ")";
    out.push_back(r);
  }
  const Generator moment{{pt.a, pt.b}, {}};
  for (int n = 1; n <= 4; ++n) {
    auto r = verify_factorization(moment, n);
    r.identity = "I_U(" + std::to_string(n) + ")(a,b)";
    out.push_back(r);
  }
  return out;
}

}  // namespace charpoly
