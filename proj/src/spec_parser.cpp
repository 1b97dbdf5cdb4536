#include "fnspect/spec_parser.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

#include "fnspect/errors.hpp"

namespace fnspect {

namespace {

struct Token {
  std::string text;
  int line;
  int col;
};

std::vector<std::vector<Token>> tokenize(const std::string& text, int& line_count) {
  std::vector<std::vector<Token>> lines;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      toks.push_back(Token{raw.substr(start, i - start), lineno,
                           static_cast<int>(start) + 1});
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  line_count = lineno;
  return lines;
}

Rational parse_number(const Token& t) {
  auto q = Rational::parse(t.text);
  if (!q) throw SpecError(t.line, t.col, "expected integer or p/q fraction, got '" + t.text + "'");
  return *q;
}

long parse_index(const Token& t) {
  for (char c : t.text)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw SpecError(t.line, t.col, "expected non-negative integer index, got '" + t.text + "'");
  try {
    return std::stol(t.text);
  } catch (const std::exception&) {
    throw SpecError(t.line, t.col, "index out of range: '" + t.text + "'");
  }
}

}  // namespace

FunctionModel parse_spec(const std::string& text) {
  int line_count = 0;
  auto lines = tokenize(text, line_count);
  const int end_line = line_count > 0 ? line_count : 1;

  bool have_domain = false, have_breakpoints = false, have_values = false;
  Rational domain_lo, domain_hi;
  std::vector<Rational> breakpoints;
  std::vector<Token> breakpoint_tokens;
  std::map<long, std::vector<Rational>> piece_coeffs;
  Token values_token{"", end_line, 1};
  std::vector<Rational> values;
  std::optional<CountableModification> modification;
  std::vector<Token> mod_point_tokens;

  for (const auto& toks : lines) {
    const Token& head = toks[0];
    if (head.text == "domain") {
      if (have_domain) throw SpecError(head.line, head.col, "duplicate domain line");
      if (toks.size() != 3)
        throw SpecError(head.line, head.col, "domain needs exactly two numerals");
      domain_lo = parse_number(toks[1]);
      domain_hi = parse_number(toks[2]);
      if (!(domain_lo < domain_hi))
        throw SpecError(toks[1].line, toks[1].col, "domain must be nonempty (lo < hi)");
      have_domain = true;
    } else if (head.text == "breakpoints") {
      if (have_breakpoints)
        throw SpecError(head.line, head.col, "duplicate breakpoints line");
      if (toks.size() < 3)
        throw SpecError(head.line, head.col, "breakpoints needs at least two numerals");
      for (std::size_t i = 1; i < toks.size(); ++i) {
        Rational x = parse_number(toks[i]);
        if (!breakpoints.empty() && !(breakpoints.back() < x))
          throw SpecError(toks[i].line, toks[i].col,
                          "breakpoints must be strictly increasing");
        breakpoints.push_back(std::move(x));
        breakpoint_tokens.push_back(toks[i]);
      }
      have_breakpoints = true;
    } else if (head.text == "piece") {
      if (toks.size() < 4 || toks[2].text != "coeffs")
        throw SpecError(head.line, head.col,
                        "expected: piece <i> coeffs <c0> <c1> ...");
      long idx = parse_index(toks[1]);
      if (piece_coeffs.count(idx))
        throw SpecError(toks[1].line, toks[1].col,
                        "duplicate piece index " + std::to_string(idx));
      std::vector<Rational> coeffs;
      for (std::size_t i = 3; i < toks.size(); ++i)
        coeffs.push_back(parse_number(toks[i]));
      if (static_cast<int>(coeffs.size()) - 1 > kMaxPieceDegree)
        throw SpecError(toks[3].line, toks[3].col,
                        "piece degree exceeds limit of " +
                            std::to_string(kMaxPieceDegree));
      piece_coeffs[idx] = std::move(coeffs);
    } else if (head.text == "values") {
      if (have_values) throw SpecError(head.line, head.col, "duplicate values line");
      if (toks.size() < 2)
        throw SpecError(head.line, head.col, "values needs at least one numeral");
      for (std::size_t i = 1; i < toks.size(); ++i)
        values.push_back(parse_number(toks[i]));
      values_token = head;
      have_values = true;
    } else if (head.text == "modify") {
      if (modification)
        throw SpecError(head.line, head.col, "duplicate modify line");
      if (toks.size() < 2)
        throw SpecError(head.line, head.col, "modify needs a kind: finite or dense");
      if (toks[1].text == "finite") {
        if (toks.size() < 3)
          throw SpecError(toks[1].line, toks[1].col,
                          "modify finite needs at least one (x,v) pair");
        std::vector<CountableModification::PointValue> points;
        for (std::size_t i = 2; i < toks.size(); ++i) {
          const Token& t = toks[i];
          const std::string& s = t.text;
          if (s.size() < 5 || s.front() != '(' || s.back() != ')')
            throw SpecError(t.line, t.col, "expected (x,v) pair, got '" + s + "'");
          std::size_t comma = s.find(',');
          if (comma == std::string::npos)
            throw SpecError(t.line, t.col, "expected comma inside (x,v) pair");
          auto x = Rational::parse(s.substr(1, comma - 1));
          auto v = Rational::parse(s.substr(comma + 1, s.size() - comma - 2));
          if (!x || !v)
            throw SpecError(t.line, t.col, "malformed numerals in (x,v) pair");
          if (!points.empty() && !(points.back().x < *x))
            throw SpecError(t.line, t.col,
                            "modification points must be strictly increasing");
          points.push_back({*x, *v});
          mod_point_tokens.push_back(t);
        }
        modification = CountableModification::finite(std::move(points));
      } else if (toks[1].text == "dense") {
        if (toks.size() != 4)
          throw SpecError(toks[1].line, toks[1].col,
                          "expected: modify dense rationals|dyadics <v>");
        DenseTag tag;
        if (toks[2].text == "rationals")
          tag = DenseTag::Rationals;
        else if (toks[2].text == "dyadics")
          tag = DenseTag::Dyadics;
        else
          throw SpecError(toks[2].line, toks[2].col,
                          "dense set must be 'rationals' or 'dyadics'");
        modification = CountableModification::dense(tag, parse_number(toks[3]));
      } else {
        throw SpecError(toks[1].line, toks[1].col,
                        "modify kind must be 'finite' or 'dense'");
      }
    } else {
      throw SpecError(head.line, head.col, "unknown directive '" + head.text + "'");
    }
  }

  if (!have_domain) throw SpecError(end_line, 1, "missing domain line");
  if (!have_breakpoints) throw SpecError(end_line, 1, "missing breakpoints line");
  if (!have_values) throw SpecError(end_line, 1, "missing values line");
  if (piece_coeffs.empty()) throw SpecError(end_line, 1, "missing piece lines");

  if (breakpoints.front() != domain_lo || breakpoints.back() != domain_hi)
    throw SpecError(breakpoint_tokens.front().line, breakpoint_tokens.front().col,
                    "breakpoints must start and end at the domain endpoints");

  const std::size_t n_pieces = breakpoints.size() - 1;
  if (piece_coeffs.size() != n_pieces) {
    throw SpecError(end_line, 1,
                    "piece count mismatch: expected " + std::to_string(n_pieces) +
                        " pieces, got " + std::to_string(piece_coeffs.size()));
  }
  std::vector<Polynomial> pieces;
  for (std::size_t i = 0; i < n_pieces; ++i) {
    auto it = piece_coeffs.find(static_cast<long>(i));
    if (it == piece_coeffs.end())
      throw SpecError(end_line, 1, "missing piece index " + std::to_string(i));
    pieces.emplace_back(it->second);
  }
  if (values.size() != breakpoints.size())
    throw SpecError(values_token.line, values_token.col,
                    "values count mismatch: expected " +
                        std::to_string(breakpoints.size()) + ", got " +
                        std::to_string(values.size()));

  if (modification &&
      modification->kind() == CountableModification::Kind::Finite) {
    for (std::size_t i = 0; i < modification->points().size(); ++i) {
      const auto& pv = modification->points()[i];
      if (pv.x < domain_lo || domain_hi < pv.x) {
        const Token& t = mod_point_tokens[i];
        throw SpecError(t.line, t.col, "modification point outside domain");
      }
    }
  }

  PiecewiseFunction base;
  base.breakpoints = std::move(breakpoints);
  base.pieces = std::move(pieces);
  base.point_values = std::move(values);
  try {
    return FunctionModel(std::move(base), std::move(modification));
  } catch (const std::invalid_argument& e) {
    throw SpecError(end_line, 1, e.what());
  }
}

std::string print_spec(const FunctionModel& f) {
  std::ostringstream out;
  out << "domain " << f.domain_lo() << " " << f.domain_hi() << "\n";
  out << "breakpoints";
  for (const auto& x : f.base().breakpoints) out << " " << x;
  out << "\n";
  for (std::size_t i = 0; i < f.base().pieces.size(); ++i) {
    out << "piece " << i << " coeffs";
    const auto& coeffs = f.base().pieces[i].coeffs();
    if (coeffs.empty()) {
      out << " 0";
    } else {
      for (const auto& c : coeffs) out << " " << c;
    }
    out << "\n";
  }
  out << "values";
  for (const auto& v : f.base().point_values) out << " " << v;
  out << "\n";
  if (f.modification()) {
    const auto& mod = *f.modification();
    if (mod.kind() == CountableModification::Kind::Finite) {
      out << "modify finite";
      for (const auto& pv : mod.points())
        out << " (" << pv.x << "," << pv.value << ")";
      out << "\n";
    } else {
      out << "modify dense " << dense_tag_name(mod.tag()) << " "
          << mod.dense_value() << "\n";
    }
  }
  return out.str();
}

}  // namespace fnspect
