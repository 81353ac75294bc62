#include "curvedef/param_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace curvedef {

namespace {
int degree_of(const ParamPoly::Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}
}  // namespace

bool ParamPoly::TermLess::operator()(const Exponents& a,
                                     const Exponents& b) const {
  const int da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db;
  // Within a degree, higher a_0 power first, then higher a_1, ...
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

ParamPoly::ParamPoly(int arity) : arity_(arity) {
  if (arity < 1) throw StructureError("ParamPoly arity must be >= 1");
}

ParamPoly ParamPoly::constant(int arity, Rat c) {
  ParamPoly p(arity);
  p.add_term(Exponents(arity, 0), c);
  return p;
}

ParamPoly ParamPoly::variable(int arity, int index) {
  if (index < 0 || index >= arity)
    throw StructureError("parameter index out of range");
  ParamPoly p(arity);
  Exponents e(arity, 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

void ParamPoly::check_arity(const ParamPoly& o) const {
  if (arity_ != o.arity_) throw StructureError("ParamPoly arity mismatch");
}

Rat ParamPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void ParamPoly::add_term(const Exponents& e, const Rat& c) {
  if (static_cast<int>(e.size()) != arity_)
    throw StructureError("exponent vector length != arity");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
  check_arity(o);
  ParamPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
  check_arity(o);
  ParamPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r(arity_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
  check_arity(o);
  ParamPoly r(arity_);
  Exponents e(arity_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

ParamPoly ParamPoly::operator*(const Rat& c) const {
  ParamPoly r(arity_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

ParamPoly ParamPoly::pow(int k) const {
  if (k < 0) throw StructureError("negative power of ParamPoly");
  ParamPoly r = constant(arity_, 1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool ParamPoly::operator==(const ParamPoly& o) const {
  return arity_ == o.arity_ && terms_ == o.terms_;
}

ParamPoly ParamPoly::derivative(int index) const {
  if (index < 0 || index >= arity_)
    throw StructureError("parameter index out of range");
  ParamPoly r(arity_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponents d = e;
    d[index] -= 1;
    r.add_term(d, c * Rat(e[index]));
  }
  return r;
}

ParamPoly ParamPoly::truncated(int max_degree) const {
  ParamPoly r(arity_);
  for (const auto& [e, c] : terms_)
    if (degree_of(e) <= max_degree) r.terms_.emplace(e, c);
  return r;
}

ParamPoly ParamPoly::homogeneous_part(int d) const {
  ParamPoly r(arity_);
  for (const auto& [e, c] : terms_)
    if (degree_of(e) == d) r.terms_.emplace(e, c);
  return r;
}

int ParamPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return degree_of(terms_.rbegin()->first);
}

int ParamPoly::min_degree() const {
  if (terms_.empty()) return -1;
  return degree_of(terms_.begin()->first);
}

double ParamPoly::eval(const std::vector<double>& a) const {
  if (static_cast<int>(a.size()) != arity_)
    throw StructureError("evaluation point length mismatch");
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double mono = 1.0;
    for (int i = 0; i < arity_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) mono *= a[i];
    sum += to_double(c) * mono;
  }
  return sum;
}

Rat ParamPoly::eval_exact(const std::vector<Rat>& a) const {
  if (static_cast<int>(a.size()) != arity_)
    throw StructureError("evaluation point length mismatch");
  Rat sum = 0;
  for (const auto& [e, c] : terms_) {
    Rat mono = 1;
    for (int i = 0; i < arity_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) mono *= a[i];
    sum += c * mono;
  }
  return sum;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat mag = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::string mono;
    for (int i = 0; i < arity_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "a" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out << mag.str();
    } else {
      out << mag.str() << "*" << mono;
    }
  }
  return out.str();
}

}  // namespace curvedef
