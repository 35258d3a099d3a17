#include "galg/unipoly.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "galg/errors.hpp"

namespace galg {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::identity() { return UniPoly({0, 1}); }

UniPoly UniPoly::exp_minus_one(std::size_t degree) {
  std::vector<Rational> c(degree + 1, 0);
  Rational term = 1;
  for (std::size_t k = 1; k <= degree; ++k) {
    term /= static_cast<unsigned long>(k);
    c[k] = term;
  }
  return UniPoly(std::move(c));
}

UniPoly UniPoly::log_one_plus(std::size_t degree) {
  std::vector<Rational> c(degree + 1, 0);
  for (std::size_t k = 1; k <= degree; ++k) {
    c[k] = Rational(k % 2 == 1 ? 1 : -1, static_cast<unsigned long>(k));
  }
  return UniPoly(std::move(c));
}

Rational UniPoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

bool UniPoly::has_zero_constant_term() const { return coefficient(0) == 0; }

bool UniPoly::has_nonzero_linear_term() const { return coefficient(1) != 0; }

UniPoly UniPoly::truncated(std::size_t degree) const {
  if (coeffs_.size() <= degree + 1) return *this;
  return UniPoly(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(degree + 1)));
}

std::string UniPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) out += ", ";
    out += coeffs_[i].get_str();
  }
  return out;
}

UniPoly parse_unipoly(std::string_view text) {
  // Split on commas, remembering the line where each item's text starts.
  std::vector<std::string> items(1);
  std::vector<std::size_t> item_line{0};
  std::size_t line = 1;
  bool in_comment = false;
  for (char ch : text) {
    if (ch == '\n') {
      ++line;
      in_comment = false;
      continue;
    }
    if (ch == '#') in_comment = true;
    if (in_comment) continue;
    if (ch == ',') {
      items.emplace_back();
      item_line.push_back(0);
      continue;
    }
    if (item_line.back() == 0 && !std::isspace(static_cast<unsigned char>(ch))) item_line.back() = line;
    items.back() += ch;
  }
  if (items.size() == 1 && item_line.front() == 0) throw ParseError(1, "no coefficients");
  if (items.size() > 1 && item_line.back() == 0) throw ParseError(line, "trailing comma");
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < items.size(); ++i) {
    try {
      coeffs.push_back(parse_rational(items[i]));
    } catch (const InvalidInput& e) {
      throw ParseError(item_line[i] == 0 ? line : item_line[i], e.what());
    }
  }
  return UniPoly(std::move(coeffs));
}

UniPoly read_unipoly_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open polynomial file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_unipoly(buf.str());
}

}  // namespace galg
