#include "spincalc/pic/solve_zg.hpp"

#include "spincalc/error.hpp"
#include "spincalc/kernel/matrix.hpp"
#include "spincalc/ring/presets.hpp"

namespace spincalc::pic {

namespace {

struct Row {
  std::string label;
  std::vector<Scalar> coeffs;
  Scalar value;
};

Scalar porteous_lambda(int g) {
  const auto curve = ring::preset_universal_curve(g);
  const auto pushed = ring::pushforward_relative(ring::porteous_integrand(curve));
  return pushed.coefficient({0, 1});
}

}  // namespace

ZgSolution solve_zg(int g) {
  if (g < 3) throw DomainError("solve_zg needs g >= 3");
  const PicBasis b = PicBasis::spin(g);
  const std::size_t n = b.size();
  std::vector<Row> rows;
  std::vector<std::string> assumed;

  auto curve_row = [&](const TestCurve& t, const Scalar& value) {
    rows.push_back({t.name, t.pairings, value});
    for (const auto& z : t.assumed_zero) assumed.push_back(t.name + "." + z);
  };
  for (int i = 1; i <= b.half(); ++i) {
    curve_row(test_curve("F", g, i), Scalar(4 * (g - i) * (i - 1)));
    curve_row(test_curve("G", g, i), Scalar(4 * i * (i - 1)));
  }
  curve_row(test_curve("F0", g), Scalar(0));
  curve_row(test_curve("G0", g), Scalar(0));
  curve_row(test_curve("H0", g), Scalar(2 * (g - 2)));

  std::vector<Scalar> unit(n, Scalar(0));
  unit[b.lambda()] = Scalar(1);
  rows.push_back({"porteous", unit, porteous_lambda(g)});
  // F_1 and G_1 pair to zero with everything, so alpha_1 is fixed directly.
  unit.assign(n, Scalar(0));
  unit[b.alpha(1)] = Scalar(1);
  rows.push_back({"alpha1", unit, Scalar(-2 * (g - 1))});

  RatMatrix m(rows.size(), n);
  std::vector<Scalar> rhs;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rows[r].coeffs[c];
    rhs.push_back(rows[r].value);
  }
  const LinearSolution sol = solve_linear(m, rhs);
  const DivisorClass closed = zg_class(g);

  ZgSolution out{closed, sol.rank, n, false, {}, false, {}};
  out.notes.push_back("alpha1 coefficient taken as -2(g-1); F1 and G1 carry no information");
  if (!assumed.empty()) {
    std::string list;
    for (const auto& a : assumed) list += (list.empty() ? "" : ", ") + a;
    out.notes.push_back("zero pairings assumed: " + list);
  }

  switch (sol.status) {
    case LinearSolution::Status::inconsistent:
      throw InvariantViolation("Z_g test-curve system is inconsistent at row " + rows[*sol.witness_row].label);
    case LinearSolution::Status::unique:
      out.cls = DivisorClass(b, sol.values);
      out.matches_closed_form = out.cls == closed;
      break;
    case LinearSolution::Status::rank_deficient: {
      out.degenerate = true;
      for (std::size_t i : sol.undetermined) out.undetermined.push_back(b.name(i));
      // The closed form must still satisfy every row.
      const auto check = m.apply(closed.coefficients());
      out.matches_closed_form = check == rhs;
      out.notes.push_back("degenerate system: closed form returned");
      break;
    }
  }
  return out;
}

}  // namespace spincalc::pic
