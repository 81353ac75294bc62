#include "curvedef/gluing_poly.hpp"

#include <sstream>
#include <vector>

namespace curvedef {

Rat GluingPoly::coeff(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rat(0) : it->second;
}

void GluingPoly::add_term(const Key& k, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GluingPoly GluingPoly::operator+(const GluingPoly& o) const {
  GluingPoly r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

GluingPoly GluingPoly::operator-(const GluingPoly& o) const {
  GluingPoly r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

GluingPoly GluingPoly::operator-() const {
  GluingPoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

GluingPoly GluingPoly::operator*(const GluingPoly& o) const {
  GluingPoly r;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_)
      r.add_term({ka.ex + kb.ex, ka.ey1 + kb.ey1, ka.ey2 + kb.ey2}, ca * cb);
  return r;
}

GluingPoly GluingPoly::pow(int k) const {
  if (k < 0) throw StructureError("negative power of GluingPoly");
  GluingPoly r;
  r.add_term({0, 0, 0}, 1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool GluingPoly::depends_on_y1() const {
  for (const auto& [k, c] : terms_)
    if (k.ey1 > 0) return true;
  return false;
}

bool GluingPoly::has_negative_x() const {
  for (const auto& [k, c] : terms_)
    if (k.ex < 0) return true;
  return false;
}

unsigned GluingPoly::min_y_degree() const {
  if (terms_.empty()) return 0;
  return terms_.begin()->first.y_degree();
}

unsigned GluingPoly::max_y_degree() const {
  if (terms_.empty()) return 0;
  return terms_.rbegin()->first.y_degree();
}

ChartSeries GluingPoly::substituted(const ChartSeries& y1_val,
                                    const ChartSeries& y2_val,
                                    int trunc_degree) const {
  if (y1_val.var() != Var::X || y2_val.var() != Var::X)
    throw StructureError("substitution values must be series in x");
  if (y1_val.arity() != y2_val.arity()) throw StructureError("arity mismatch");
  const int arity = y1_val.arity();
  // Powers of the y-values are cached; each term is a shifted product.
  std::vector<ChartSeries> p1{ChartSeries(Var::X, arity)};
  std::vector<ChartSeries> p2{ChartSeries(Var::X, arity)};
  p1[0].add_term(0, ParamPoly::constant(arity, 1));
  p2[0].add_term(0, ParamPoly::constant(arity, 1));
  auto power = [trunc_degree](std::vector<ChartSeries>& cache,
                              const ChartSeries& base,
                              unsigned k) -> const ChartSeries& {
    while (cache.size() <= k) {
      ChartSeries next = cache.back() * base;
      if (trunc_degree >= 0) next = next.truncated(trunc_degree);
      cache.push_back(std::move(next));
    }
    return cache[k];
  };
  ChartSeries result(Var::X, arity);
  for (const auto& [k, c] : terms_) {
    ChartSeries term = power(p1, y1_val, k.ey1) * power(p2, y2_val, k.ey2);
    if (trunc_degree >= 0) term = term.truncated(trunc_degree);
    result = result + (term * ParamPoly::constant(arity, c)).shifted(k.ex);
  }
  return result;
}

std::string GluingPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rat mag = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::string mono;
    auto append = [&mono](const char* name, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += name;
      if (e != 1) mono += "^" + std::to_string(e);
    };
    append("x", k.ex);
    append("y1", static_cast<int>(k.ey1));
    append("y2", static_cast<int>(k.ey2));
    if (mono.empty()) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str() << "*";
      out << mono;
    }
  }
  return out.str();
}

}  // namespace curvedef
