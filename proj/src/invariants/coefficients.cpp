#include "heatspec/invariants/coefficients.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace heatspec::invariants {

using exact::Rational;
using exact::RationalFunction;

namespace {

const RationalFunction M = RationalFunction::m();
const CoeffExpr B = CoeffExpr::beta();

RationalFunction q(long num, long den = 1) { return RationalFunction(Rational(num, den)); }
CoeffExpr c(const RationalFunction& r) { return CoeffExpr(r); }

CoefficientTable build_table() {
  CoefficientTable t;
  const RationalFunction m2 = M - q(2), m1 = M - q(1), p1 = M + q(1), m3 = M - q(3);
  t.d[0] = (c(q(1)) - B / m2) / q(32);
  t.d[2] = (c(q(5) - q(2) * M) + c((q(7) - q(8) * M + q(2) * M * M) / m2) * B) / q(16);
  t.d[3] = (c(q(2) * M - q(3)) - c((q(2) * M * M - q(6) * M + q(5)) / m2) * B) / (q(32) * m1);
  t.d[5] = (c(q(1)) + c((q(3) - q(2) * M) / m2) * B) / (q(16) * m1);
  t.d[12] = -(c(m1 / m2) * B - c(q(1))) / q(48);
  t.d[13] = (c(q(1)) - c((q(4) * M - q(10)) / m2) * B) / q(48);
  t.d[16] = c((q(17) + q(5) * M) / (q(192) * p1)) +
            c((q(23) - q(2) * M - q(4) * M * M) / (q(48) * m2 * p1)) * B;
  t.d[17] = c(-(q(17) + q(7) * M * M) / (q(384) * (M * M - q(1)))) +
            c((q(4) * M * M * M - q(11) * M * M + q(5) * M - q(1)) / (q(48) * (M * M - q(1)) * m2)) * B;
  t.d[20] = (c((q(5) * M - q(7)) / q(8)) - c((q(5) * M - q(9)) / q(3)) * B) / (q(8) * m3);
  t.d[21] = c(m1 / (q(16) * m3)) * (c(q(-1)) + c(q(2)) * B);
  t.e[0] = B / (q(8) * m2);
  t.e[1] = B / (q(8) * m1 * m2);
  return t;
}

std::pair<char, int> parse_name(const std::string& name) {
  if (name.size() < 2 || (name[0] != 'd' && name[0] != 'e'))
    throw std::invalid_argument("unknown coefficient '" + name + "'");
  int idx = -1;
  try {
    std::size_t used = 0;
    idx = std::stoi(name.substr(1), &used);
    if (used != name.size() - 1) idx = -1;
  } catch (const std::exception&) {
    idx = -1;
  }
  const int limit = name[0] == 'd' ? 22 : 9;
  if (idx < 0 || idx >= limit) throw std::invalid_argument("unknown coefficient '" + name + "'");
  return {name[0], idx};
}

}  // namespace

CoeffExpr& CoefficientTable::at(const std::string& name) {
  const auto [kind, idx] = parse_name(name);
  return kind == 'd' ? d[idx] : e[idx];
}

const CoeffExpr& CoefficientTable::at(const std::string& name) const {
  const auto [kind, idx] = parse_name(name);
  return kind == 'd' ? d[idx] : e[idx];
}

const CoefficientTable& coefficient_table() {
  static const CoefficientTable table = build_table();
  return table;
}

CoefficientTable tampered_table(const std::string& entry) {
  CoefficientTable t = coefficient_table();
  t.at(entry) += CoeffExpr(1);
  return t;
}

bool Lemma2Report::all_pass() const {
  return std::all_of(relations.begin(), relations.end(), [](const RelationResult& r) { return r.pass; });
}

std::array<bool, 12> Lemma2Report::group_pass() const {
  std::array<bool, 12> g{};
  g.fill(true);
  g[0] = false;
  for (const auto& r : relations) g[r.group] = g[r.group] && r.pass;
  return g;
}

std::string Lemma2Report::render() const {
  std::ostringstream os;
  for (const auto& r : relations)
    os << "(" << r.label << ")  residual = " << r.residual << "  " << (r.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

Lemma2Report lemma2_verify(const CoefficientTable& t) {
  Lemma2Report rep;
  auto add = [&rep](int group, std::string label, CoeffExpr residual) {
    const bool pass = residual.is_zero();
    rep.relations.push_back({group, std::move(label), std::move(residual), pass});
  };
  const auto& d = t.d;
  const auto& e = t.e;
  const CoeffExpr m = CoeffExpr::m();
  const CoeffExpr one(1);
  const CoeffExpr ratio = c((M - q(1)) / (M - q(2))) * B - one;  // (m-1)/(m-2) beta - 1

  for (const char* name : {"d1", "d4", "d7", "d8", "d11", "d19", "e2", "e5", "e7"})
    add(1, std::string("1 ") + name, t.at(name));
  add(2, "2a e3", e[3]);
  add(2, "2a e8", e[8]);
  add(2, "2b", e[0] - (m - one) * e[1]);
  add(2, "2c", e[4] - (m - one) * e[6]);
  add(3, "3 d14", d[14]);
  add(3, "3 d15", d[15]);
  add(4, "4 d6", d[6]);
  add(4, "4 d10", d[10]);
  add(5, "5a", d[18]);
  add(5, "5b", CoeffExpr(2) * (m - one) * d[12] + d[13] - CoeffExpr(2) * d[16] + CoeffExpr(2) * (one - m) * d[17] +
                   (CoeffExpr(3) - m) * d[20]);
  add(5, "5c", CoeffExpr(2) * (one - m) * d[12] + (one - m) * d[13] + (CoeffExpr(3) - m) * d[21]);
  add(6, "6a", CoeffExpr(2) * d[0] + d[2] + (m - CoeffExpr(3)) * (CoeffExpr(2) * d[3] + d[5]));
  add(6, "6b", CoeffExpr(-2) * d[0] + d[2] + (m - one) * (CoeffExpr(2) * d[3] - d[5]));
  add(6, "6c", e[4] + (m - CoeffExpr(3)) * e[6]);
  add(6, "6d", d[9]);
  add(7, "7", CoeffExpr(-2) * d[0] + d[2] - (m - one) * (CoeffExpr(2) * d[3] - d[5]) -
                  (m - CoeffExpr(2)) / q(4) * (B - one));
  add(8, "8", (B - one) / q(4) + CoeffExpr(2) * d[0] + d[2] + CoeffExpr(2) * (m - one) * d[3] + (m - one) * d[5] +
                  e[0] + e[1] * (m - one) - CoeffExpr(2) * e[4] - CoeffExpr(2) * e[6] * (m - one));
  add(9, "9a", CoeffExpr(2) * d[0] + d[2] - (m - CoeffExpr(3)) / q(8) * ratio);
  add(9, "9b", CoeffExpr(2) * d[3] + d[5] + ratio / q(8));
  add(9, "9c", d[12] + ratio / q(48));
  add(10, "10a", d[16] + (m - one) * d[17] - c((q(17) - q(7) * M) / q(384)) - c((q(4) * M - q(11)) / q(48)) * B);
  add(10, "10b", d[20] - (c((q(5) * M - q(7)) / q(8)) - c((q(5) * M - q(9)) / q(3)) * B) / (q(8) * (M - q(3))));
  add(10, "10c", d[21] - c((M - q(1)) / (q(16) * (M - q(3)))) * (CoeffExpr(-1) + CoeffExpr(2) * B));
  add(11, "11", d[16] + d[17] -
                    (c((M * M + q(8) * M - q(17)) / q(8)) - c(q(3) * M - q(4)) * B) / (q(16) * (M * M - q(1))));
  return rep;
}

}  // namespace heatspec::invariants
