#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "efv/polynomial.hpp"

namespace efv::poly {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

// poly := term (('+'|'-') term)*
// term := coeff | coeff '*' factors | factors
// factors := var ('^' nat)? ('*' var ('^' nat)?)*
// var := name ('_' index)?   (the index is optional only for plain-name rings)
// A leading sign on the first term is accepted as well.
Polynomial parse(const std::string& text, const RingPtr& ring);
std::string to_string(const Polynomial& f);

// `ring s 4` (or an explicit list `ring t,x,y`) followed by one polynomial
// per line; blank lines and `#` comments are skipped.
struct IdealText {
  RingPtr ring;
  std::vector<Polynomial> gens;
};
IdealText parse_ideal_text(const std::string& text);
std::string format_ideal_text(const RingPtr& ring, const std::vector<Polynomial>& gens);
IdealText read_ideal_file(const std::string& path);
void write_ideal_file(const std::string& path, const RingPtr& ring, const std::vector<Polynomial>& gens);

}  // namespace efv::poly
