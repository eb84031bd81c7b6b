#include "efv/chow.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <sstream>

namespace efv::chow {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_int(const std::string& s, std::int64_t& v) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == s.size();
}

void same_model(const DivisorClass& a, const DivisorClass& b) {
  if (!a.model() || a.model() != b.model()) throw ModelError("divisor classes belong to different models");
}

}  // namespace

DivisorClass::DivisorClass(const IntersectionModel* model) : model_(model), c_(model->size(), 0) {}

std::int64_t DivisorClass::coeff(const std::string& name) const {
  int i = model_->index_of(name);
  if (i < 0) throw ModelError("unknown basis class " + name);
  return c_[static_cast<std::size_t>(i)];
}

std::map<std::string, std::int64_t> DivisorClass::terms() const {
  std::map<std::string, std::int64_t> out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) out[model_->basis()[i]] = c_[i];
  return out;
}

bool DivisorClass::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t v) { return v == 0; });
}

std::string DivisorClass::str() const {
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    std::int64_t v = c_[i];
    if (!v) continue;
    if (s.empty())
      s += v < 0 ? "-" : "";
    else
      s += v < 0 ? " - " : " + ";
    std::int64_t a = v < 0 ? -v : v;
    if (a != 1) s += std::to_string(a) + " ";
    s += model_->basis()[i];
  }
  return s.empty() ? "0" : s;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  same_model(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  same_model(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

DivisorClass operator*(std::int64_t k, DivisorClass a) {
  for (auto& v : a.c_) v *= k;
  return a;
}

std::string Expectation::text() const {
  std::string s;
  switch (kind) {
    case Kind::Triple: s = "triple"; break;
    case Kind::Genus: s = "genus"; break;
    case Kind::Contraction: s = "contraction"; break;
  }
  for (auto& a : args) s += " " + a;
  return s + " = " + expected;
}

IntersectionModel::IntersectionModel(std::vector<std::string> basis) : basis_(std::move(basis)) {
  if (basis_.empty()) throw ModelError("empty basis");
  if (basis_.size() > 2000) throw ModelError("basis too large");
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (!index_.emplace(basis_[i], static_cast<int>(i)).second) throw ModelError("repeated basis name " + basis_[i]);
  disjoint_.assign(basis_.size(), std::vector<bool>(basis_.size(), false));
}

int IntersectionModel::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

std::uint64_t IntersectionModel::key(std::size_t i, std::size_t j, std::size_t k) const {
  std::array<std::size_t, 3> a{i, j, k};
  std::sort(a.begin(), a.end());
  const std::uint64_t n = basis_.size();
  return (a[0] * n + a[1]) * n + a[2];
}

void IntersectionModel::set_triple(const std::string& a, const std::string& b, const std::string& c, std::int64_t v) {
  std::array<int, 3> ix{index_of(a), index_of(b), index_of(c)};
  for (int t = 0; t < 3; ++t)
    if (ix[static_cast<std::size_t>(t)] < 0) throw ModelError("unknown basis class in triple " + a + " " + b + " " + c);
  auto i = static_cast<std::size_t>(ix[0]), j = static_cast<std::size_t>(ix[1]), k = static_cast<std::size_t>(ix[2]);
  if (v != 0 && (disjoint(i, j) || disjoint(i, k) || disjoint(j, k)))
    throw ModelError("nonzero triple " + a + " " + b + " " + c + " on disjoint classes");
  auto [it, fresh] = table_.emplace(key(i, j, k), v);
  if (!fresh && it->second != v)
    throw ModelError("conflicting values for " + a + " " + b + " " + c + ": " + std::to_string(it->second) + " and " +
                     std::to_string(v));
}

void IntersectionModel::set_disjoint(const std::string& a, const std::string& b) {
  int i = index_of(a), j = index_of(b);
  if (i < 0 || j < 0) throw ModelError("unknown basis class in disjoint " + a + " " + b);
  if (i == j) throw ModelError("class " + a + " cannot be disjoint from itself");
  const std::size_t n = basis_.size();
  for (std::size_t k = 0; k < n; ++k)
    if (value(static_cast<std::size_t>(i), static_cast<std::size_t>(j), k) != 0)
      throw ModelError("disjoint " + a + " " + b + " contradicts a nonzero triple with " + basis_[k]);
  disjoint_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
  disjoint_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = true;
}

bool IntersectionModel::disjoint(std::size_t i, std::size_t j) const { return disjoint_[i][j]; }

std::int64_t IntersectionModel::value(std::size_t i, std::size_t j, std::size_t k) const {
  auto it = table_.find(key(i, j, k));
  return it == table_.end() ? 0 : it->second;
}

bool IntersectionModel::listed(std::size_t i, std::size_t j, std::size_t k) const {
  return table_.count(key(i, j, k)) > 0;
}

DivisorClass IntersectionModel::basis_class(const std::string& name) const {
  int i = index_of(name);
  if (i < 0) throw ModelError("unknown basis class " + name);
  DivisorClass d(this);
  d.add(static_cast<std::size_t>(i), 1);
  return d;
}

void IntersectionModel::define(const std::string& name, DivisorClass c) {
  if (c.model() != this) throw ModelError("class " + name + " belongs to another model");
  if (index_of(name) >= 0 || classes_.count(name)) throw ModelError("name " + name + " is already defined");
  classes_.emplace(name, std::move(c));
  class_order_.push_back(name);
}

DivisorClass IntersectionModel::operator[](const std::string& name) const {
  auto it = classes_.find(name);
  if (it != classes_.end()) return it->second;
  return basis_class(name);
}

DivisorClass IntersectionModel::parse_class(const std::string& expr) const {
  DivisorClass out(this);
  auto tok = split_ws(expr);
  if (tok.empty()) throw ModelError("empty class expression");
  std::size_t p = 0;
  bool first = true;
  while (p < tok.size()) {
    std::int64_t sign = 1;
    if (tok[p] == "+" || tok[p] == "-") {
      sign = tok[p] == "-" ? -1 : 1;
      ++p;
    } else if (!first) {
      throw ModelError("expected + or - in class expression before " + tok[p]);
    }
    if (p >= tok.size()) throw ModelError("dangling sign in class expression");
    std::int64_t k = 1;
    if (parse_int(tok[p], k)) {
      ++p;
      if (p >= tok.size()) throw ModelError("coefficient without a class name");
    }
    out += (sign * k) * (*this)[tok[p]];
    ++p;
    first = false;
  }
  return out;
}

std::shared_ptr<IntersectionModel> IntersectionModel::parse(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  std::shared_ptr<IntersectionModel> m;
  std::string title;
  int lineno = 0;
  auto fail = [&](const std::string& msg) { throw ModelError(source + ":" + std::to_string(lineno) + ": " + msg); };
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::string line = raw;
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      if (!m && title.empty()) title = trim(line.substr(hash + 1));
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    try {
      if (line.rfind("basis:", 0) == 0) {
        if (m) fail("second basis line");
        m = std::make_shared<IntersectionModel>(split_ws(line.substr(6)));
        m->title_ = title;
        continue;
      }
      if (!m) fail("basis line must come first");
      auto tok = split_ws(line);
      const std::string& kw = tok[0];
      if (kw == "class") {
        auto eq = line.find('=');
        if (tok.size() < 4 || tok[2] != "=" || eq == std::string::npos) fail("expected: class NAME = expression");
        m->define(tok[1], m->parse_class(line.substr(eq + 1)));
      } else if (kw == "disjoint") {
        auto colon = line.find(':');
        if (colon == std::string::npos) fail("expected: disjoint A: B C ...");
        auto lhs = split_ws(line.substr(8, colon - 8));
        if (lhs.size() != 1) fail("expected one class before ':'");
        for (auto& b : split_ws(line.substr(colon + 1))) m->set_disjoint(lhs[0], b);
      } else if (kw == "triple") {
        std::int64_t v = 0;
        if (tok.size() != 6 || tok[4] != "=" || !parse_int(tok[5], v)) fail("expected: triple A B C = integer");
        m->set_triple(tok[1], tok[2], tok[3], v);
      } else if (kw == "expect") {
        Expectation e;
        e.line = lineno;
        if (tok.size() < 2) fail("empty expect line");
        std::size_t nargs = 0;
        if (tok[1] == "triple") {
          e.kind = Expectation::Kind::Triple;
          nargs = 3;
        } else if (tok[1] == "genus") {
          e.kind = Expectation::Kind::Genus;
          nargs = 1;
        } else if (tok[1] == "contraction") {
          e.kind = Expectation::Kind::Contraction;
          nargs = 2;
        } else {
          fail("unknown expectation " + tok[1]);
        }
        if (tok.size() != nargs + 4 || tok[nargs + 2] != "=") fail("malformed expect line");
        e.args.assign(tok.begin() + 2, tok.begin() + 2 + static_cast<std::ptrdiff_t>(nargs));
        e.expected = tok.back();
        for (auto& a : e.args) (void)(*m)[a];
        if (e.kind == Expectation::Kind::Contraction) (void)contraction_from_string(e.expected);
        m->expects_.push_back(std::move(e));
      } else {
        fail("unknown keyword " + kw);
      }
    } catch (const ModelError& err) {
      std::string what = err.what();
      if (what.rfind(source + ":", 0) == 0) throw;
      fail(what);
    }
  }
  if (!m) throw ModelError(source + ": no basis line");
  return m;
}

std::shared_ptr<IntersectionModel> IntersectionModel::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ModelError("cannot open model file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str(), path);
}

std::int64_t triple(const DivisorClass& a, const DivisorClass& b, const DivisorClass& c) {
  same_model(a, b);
  same_model(a, c);
  const IntersectionModel& m = *a.model();
  auto support = [](const DivisorClass& d) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < d.coeffs().size(); ++i)
      if (d.coeff(i)) s.push_back(i);
    return s;
  };
  auto sa = support(a), sb = support(b), sc = support(c);
  std::int64_t t = 0;
  for (auto i : sa)
    for (auto j : sb) {
      const std::int64_t ab = a.coeff(i) * b.coeff(j);
      for (auto k : sc) t += ab * c.coeff(k) * m.value(i, j, k);
    }
  return t;
}

std::int64_t genus(const DivisorClass& s) {
  std::int64_t s3 = triple(s, s, s);
  if (s3 % 2 != 0) throw std::domain_error("genus: S^3 = " + std::to_string(s3) + " is odd");
  return s3 / 2 + 1;
}

std::string to_string(Contraction c) {
  switch (c) {
    case Contraction::ToPoint: return "to_point";
    case Contraction::ToCurve: return "to_curve";
    case Contraction::NotContracted: return "not_contracted";
  }
  return "?";
}

Contraction contraction_from_string(const std::string& s) {
  if (s == "to_point") return Contraction::ToPoint;
  if (s == "to_curve") return Contraction::ToCurve;
  if (s == "not_contracted") return Contraction::NotContracted;
  throw ModelError("unknown contraction type " + s);
}

Contraction contraction_type(const DivisorClass& s, const DivisorClass& d) {
  same_model(s, d);
  const IntersectionModel& m = *s.model();
  bool all_zero = true;
  for (auto& b : m.basis())
    if (triple(s, d, m.basis_class(b)) != 0) {
      all_zero = false;
      break;
    }
  if (all_zero) return Contraction::ToPoint;
  return triple(s, s, d) == 0 ? Contraction::ToCurve : Contraction::NotContracted;
}

std::vector<ExpectationResult> check_expectations(const IntersectionModel& m) {
  std::vector<ExpectationResult> out;
  for (auto& e : m.expectations()) {
    ExpectationResult r;
    r.expectation = e;
    switch (e.kind) {
      case Expectation::Kind::Triple:
        r.actual = std::to_string(triple(m[e.args[0]], m[e.args[1]], m[e.args[2]]));
        break;
      case Expectation::Kind::Genus:
        try {
          r.actual = std::to_string(genus(m[e.args[0]]));
        } catch (const std::domain_error& err) {
          r.actual = err.what();
        }
        break;
      case Expectation::Kind::Contraction:
        r.actual = to_string(contraction_type(m[e.args[0]], m[e.args[1]]));
        break;
    }
    r.ok = r.actual == e.expected;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Aggregate> aggregates_of(const IntersectionModel& m) {
  std::vector<Aggregate> out;
  for (auto& e : m.expectations()) {
    const std::string label = e.text();
    if (e.kind == Expectation::Kind::Triple) {
      out.push_back({label, m[e.args[0]], m[e.args[1]], m[e.args[2]]});
    } else if (e.kind == Expectation::Kind::Genus) {
      DivisorClass s = m[e.args[0]];
      out.push_back({label, s, s, s});
    } else {
      DivisorClass s = m[e.args[0]], d = m[e.args[1]];
      out.push_back({label, s, s, d});
      for (auto& b : m.basis()) out.push_back({label, s, d, m.basis_class(b)});
    }
  }
  return out;
}

std::vector<Sensitivity> sensitivity(const IntersectionModel& m, const std::vector<Aggregate>& aggregates) {
  const std::size_t n = m.size();
  // Unlisted keys on pairwise-meeting classes.
  std::vector<std::array<std::size_t, 3>> open;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (m.disjoint(i, j)) continue;
      for (std::size_t k = j; k < n; ++k)
        if (!m.disjoint(i, k) && !m.disjoint(j, k) && !m.listed(i, j, k)) open.push_back({i, j, k});
    }
  std::vector<Sensitivity> out;
  for (auto key : open) {
    std::set<std::array<std::size_t, 3>> perms;
    auto p = key;
    do perms.insert(p);
    while (std::next_permutation(p.begin(), p.end()));
    for (auto& ag : aggregates) {
      same_model(ag.a, ag.b);
      same_model(ag.a, ag.c);
      if (ag.a.model() != &m) throw ModelError("aggregate belongs to another model");
      std::int64_t w = 0;
      for (auto& q : perms) w += ag.a.coeff(q[0]) * ag.b.coeff(q[1]) * ag.c.coeff(q[2]);
      if (w != 0) {
        out.push_back({m.basis()[key[0]] + " " + m.basis()[key[1]] + " " + m.basis()[key[2]], ag.label, w});
        break;
      }
    }
  }
  return out;
}

}  // namespace efv::chow
