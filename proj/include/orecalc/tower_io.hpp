#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "orecalc/tower.hpp"

namespace orecalc {

/// Reads the line-based tower format:
///
///   field 2^2
///   var t1 sigma_K=frob^1 delta_K=0
///   var t2 sigma_K=id delta_K=0
///   sigma t1 = 1:1
///   delta t1 = 1:0
///
/// `sigma`/`delta` lines attach to the most recent `var`.  Blank lines and
/// `#` comments are ignored.  Errors carry the line number.
TowerSpec parse_tower_spec(std::istream& in);
Tower load_tower(const std::string& path);
std::string format_tower(const Tower& tower);

/// Named towers: weyl-f<p>, classical-f<q>-<n>, f<q>-frobenius-<n>,
/// f4-sec21-<n>var.
Tower preset_tower(std::string_view name);
std::vector<std::string> preset_examples();

/// Compact form: `+`-joined terms `coef:l1,...,lk`; `0` is the zero element.
MultiPoly parse_multipoly(const Field& field, std::string_view text, unsigned level);
std::string format_multipoly_compact(const MultiPoly& f);
/// Readable form with variable names, e.g. `t1^2*t2 + 3*t1 + 1`.
std::string format_multipoly(const Tower& tower, const MultiPoly& f);

/// Sum of products.  Factors are element codes, variable names, `name^k`
/// or compact terms `coef:l1,...`, separated by spaces or `*`; terms are
/// separated by `+` or `-`.
Expression parse_expression(const Tower& tower, std::string_view text);
/// A single product of variables with an optional leading coefficient code.
Word parse_word(const Tower& tower, std::string_view text);
std::string format_word(const Tower& tower, const Word& w);

/// Whitespace-separated element codes, one per coordinate.
Point parse_point(const Tower& tower, std::string_view text);
/// One point per non-blank line.
std::vector<Point> parse_points(const Tower& tower, std::istream& in);
std::string format_point(const Point& p);

}  // namespace orecalc
