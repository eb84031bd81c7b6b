#include "efv/text.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace efv::poly {

using namespace efv::gf;

namespace {

class Parser {
 public:
  Parser(const std::string& s, const RingPtr& r) : s_(s), ring_(r) {}

  Polynomial poly() {
    std::vector<Term> terms;
    skip();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
      skip();
    }
    for (;;) {
      Term t = term();
      if (negative) t.c = neg(t.c);
      if (t.c) terms.push_back(t);
      skip();
      if (pos_ == s_.size()) break;
      char c = get();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      negative = c == '-';
      skip();
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  // Decimal literal reduced mod p.
  u32 nat_mod() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected number");
    u64 v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = (v * 10 + static_cast<u64>(get() - '0')) % Field::prime();
    return static_cast<u32>(v);
  }
  int nat_small() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
      if (v > kMaxExponent) fail("exponent too large");
    }
    return static_cast<int>(v);
  }

  int var() {
    std::size_t start = pos_;
    while (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '\'') ++pos_;
    if (pos_ == start) fail("expected variable");
    // Indexed names are the canonical form; bare names are accepted for
    // rings built from plain names.
    if (peek() == '_') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index");
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    std::string name = s_.substr(start, pos_ - start);
    int idx = ring_->index_of(name);
    if (idx < 0) {
      pos_ = start;
      fail("unknown variable " + name);
    }
    return idx;
  }

  void factor(Monomial& m) {
    skip();
    int v = var();
    skip();
    int e = 1;
    if (peek() == '^') {
      ++pos_;
      skip();
      e = nat_small();
    }
    m.set(v, m[v] + e);
  }

  Term term() {
    Term t{Monomial(), 1};
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.c = nat_mod();
      skip();
      if (peek() != '*') return t;
      ++pos_;
      skip();
    }
    factor(t.m);
    skip();
    while (peek() == '*') {
      ++pos_;
      factor(t.m);
      skip();
    }
    return t;
  }

  const std::string& s_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse(const std::string& text, const RingPtr& ring) { return Parser(text, ring).poly(); }

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& t : f.terms()) {
    if (!first) out += " + ";
    first = false;
    std::string mon;
    for (int i = 0; i < f.nvars(); ++i) {
      int e = t.m[i];
      if (!e) continue;
      if (!mon.empty()) mon += "*";
      mon += f.ring()->name(i);
      if (e > 1) mon += "^" + std::to_string(e);
    }
    if (mon.empty()) {
      out += std::to_string(t.c);
    } else if (t.c == 1) {
      out += mon;
    } else {
      out += std::to_string(t.c) + "*" + mon;
    }
  }
  return out;
}

IdealText parse_ideal_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  IdealText res;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    if (!res.ring) {
      std::istringstream h(line);
      std::string kw, base;
      int n = -1;
      h >> kw >> base;
      if (kw == "ring" && base.find(',') != std::string::npos) {
        // Explicit list: ring a,b,c
        std::vector<std::string> names;
        std::istringstream ls(base);
        for (std::string v; std::getline(ls, v, ',');)
          if (!v.empty()) names.push_back(v);
        res.ring = Ring::make(std::move(names));
        continue;
      }
      h >> n;
      if (kw != "ring" || base.empty() || n <= 0)
        throw ParseError("expected header 'ring <name> <count>' on line " + std::to_string(lineno), 0);
      res.ring = Ring::indexed(base, n);
      continue;
    }
    try {
      res.gens.push_back(parse(line, res.ring));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.position);
    }
  }
  if (!res.ring) throw ParseError("missing ring header", 0);
  return res;
}

std::string format_ideal_text(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  const std::string& v0 = ring->name(0);
  const std::string base = v0.substr(0, v0.rfind('_'));
  std::string out;
  if (*Ring::indexed(base, ring->nvars()) == *ring) {
    out = "ring " + base + " " + std::to_string(ring->nvars()) + "\n";
  } else {
    out = "ring ";
    for (int i = 0; i < ring->nvars(); ++i) out += (i ? "," : "") + ring->name(i);
    out += "\n";
  }
  for (auto& g : gens) out += to_string(g) + "\n";
  return out;
}

IdealText read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_ideal_text(ss.str());
}

void write_ideal_file(const std::string& path, const RingPtr& ring, const std::vector<Polynomial>& gens) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << format_ideal_text(ring, gens);
}

}  // namespace efv::poly
