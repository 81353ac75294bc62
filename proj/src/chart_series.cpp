#include "curvedef/chart_series.hpp"

#include <sstream>

namespace curvedef {

ChartSeries::ChartSeries(Var var, int arity) : var_(var), arity_(arity) {
  if (arity < 1) throw StructureError("ChartSeries arity must be >= 1");
}

void ChartSeries::check_compat(const ChartSeries& o) const {
  if (var_ != o.var_) throw StructureError("ChartSeries variable mismatch");
  if (arity_ != o.arity_) throw StructureError("ChartSeries arity mismatch");
}

ParamPoly ChartSeries::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? ParamPoly(arity_) : it->second;
}

void ChartSeries::add_term(int exponent, const ParamPoly& c) {
  if (c.arity() != arity_) throw StructureError("coefficient arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ChartSeries ChartSeries::operator+(const ChartSeries& o) const {
  check_compat(o);
  ChartSeries r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

ChartSeries ChartSeries::operator-(const ChartSeries& o) const {
  check_compat(o);
  ChartSeries r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

ChartSeries ChartSeries::operator-() const {
  ChartSeries r(var_, arity_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

ChartSeries ChartSeries::operator*(const ChartSeries& o) const {
  check_compat(o);
  ChartSeries r(var_, arity_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

ChartSeries ChartSeries::operator*(const ParamPoly& c) const {
  ChartSeries r(var_, arity_);
  for (const auto& [e, k] : terms_) r.add_term(e, k * c);
  return r;
}

ChartSeries ChartSeries::pow(int k, int trunc_degree) const {
  if (k < 0) throw StructureError("negative power of ChartSeries");
  ChartSeries r(var_, arity_);
  r.add_term(0, ParamPoly::constant(arity_, 1));
  for (int i = 0; i < k; ++i) {
    r = r * *this;
    if (trunc_degree >= 0) r = r.truncated(trunc_degree);
  }
  return r;
}

bool ChartSeries::operator==(const ChartSeries& o) const {
  return var_ == o.var_ && arity_ == o.arity_ && terms_ == o.terms_;
}

ChartSeries ChartSeries::shifted(int k) const {
  ChartSeries r(var_, arity_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

ChartSeries ChartSeries::converted() const {
  ChartSeries r(var_ == Var::X ? Var::W : Var::X, arity_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

ChartSeries ChartSeries::truncated(int max_degree) const {
  ChartSeries r(var_, arity_);
  for (const auto& [e, c] : terms_) {
    ParamPoly t = c.truncated(max_degree);
    if (!t.is_zero()) r.terms_.emplace(e, std::move(t));
  }
  return r;
}

ChartSeries ChartSeries::homogeneous_part(int d) const {
  ChartSeries r(var_, arity_);
  for (const auto& [e, c] : terms_) {
    ParamPoly t = c.homogeneous_part(d);
    if (!t.is_zero()) r.terms_.emplace(e, std::move(t));
  }
  return r;
}

bool ChartSeries::holomorphic() const {
  return terms_.empty() || terms_.begin()->first >= 0;
}

int ChartSeries::min_exponent() const {
  return terms_.empty() ? 0 : terms_.begin()->first;
}

int ChartSeries::max_exponent() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

int ChartSeries::max_param_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, c.total_degree());
  return d;
}

ChartSeries ChartSeries::composed_at(const ChartSeries& wmap,
                                     int trunc_degree) const {
  if (var_ != Var::W || wmap.var() != Var::X)
    throw StructureError("composed_at expects a w-series and an x-valued map");
  if (!holomorphic())
    throw StructureError(
        "unsupported composition: negative exponents in the w-series");
  if (arity_ != wmap.arity()) throw StructureError("arity mismatch");
  ChartSeries result(Var::X, arity_);
  ChartSeries power(Var::X, arity_);
  power.add_term(0, ParamPoly::constant(arity_, 1));
  int current = 0;
  for (const auto& [e, c] : terms_) {
    while (current < e) {
      power = power * wmap;
      if (trunc_degree >= 0) power = power.truncated(trunc_degree);
      ++current;
    }
    result = result + power * c;
  }
  if (trunc_degree >= 0) result = result.truncated(trunc_degree);
  return result;
}

std::string ChartSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  const char* v = var_name(var_);
  for (const auto& [e, c] : terms_) {
    std::string cs = c.to_string();
    bool needs_parens = c.terms().size() > 1;
    std::string term;
    if (e == 0) {
      term = needs_parens ? "(" + cs + ")" : cs;
    } else {
      term = needs_parens ? "(" + cs + ")" : cs;
      term += "*";
      term += v;
      if (e != 1) term += "^" + std::to_string(e);
    }
    if (first) {
      out << term;
      first = false;
    } else if (!needs_parens && !term.empty() && term[0] == '-') {
      out << " - " << term.substr(1);
    } else {
      out << " + " << term;
    }
  }
  return out.str();
}

}  // namespace curvedef
