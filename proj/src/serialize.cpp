#include "tl/serialize.hpp"

#include <sstream>

#include "tl/errors.hpp"

namespace tl {

using nlohmann::json;

namespace {

json integer_to_json(const Integer& c) {
  if (c.fits_slong_p()) return json(c.get_si());
  return json(c.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer out;
    if (out.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer string");
    return out;
  }
  throw ParseError("expected an integer");
}

int int_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
    throw ParseError(std::string("missing integer field '") + key + "'");
  }
  return j.at(key).get<int>();
}

}  // namespace

json to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(json::array({e, integer_to_json(c)}));
  return out;
}

json to_json(const Scalar& s) { return {{"num", to_json(s.num())}, {"den", to_json(s.den())}}; }

json to_json(const Matching& m) {
  json pairs = json::array();
  for (auto [a, b] : m.pairs()) pairs.push_back(json::array({a, b}));
  return {{"bottom", m.bottom()}, {"top", m.top()}, {"pairs", pairs}};
}

json to_json(const Morphism& m) {
  json terms = json::array();
  for (const auto& [diagram, coeff] : m.terms()) {
    terms.push_back({{"matching", to_json(diagram)}, {"coeff", to_json(coeff)}});
  }
  return {{"bottom", m.bottom()}, {"top", m.top()}, {"terms", terms}};
}

json to_json(const SignSeq& e) { return json(e.entries()); }

LaurentPoly laurent_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("laurent polynomial: expected an array");
  std::vector<std::pair<int, Integer>> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer()) {
      throw ParseError("laurent polynomial: expected [exponent, coefficient]");
    }
    terms.emplace_back(t[0].get<int>(), integer_from_json(t[1]));
  }
  return LaurentPoly::from_terms(terms);
}

Scalar scalar_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw ParseError("scalar: expected {\"num\", \"den\"}");
  }
  try {
    return Scalar(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
  } catch (const DivisionByZero&) {
    throw ParseError("scalar: zero denominator");
  }
}

Matching matching_from_json(const json& j) {
  const int bottom = int_field(j, "bottom"), top = int_field(j, "top");
  if (!j.contains("pairs") || !j.at("pairs").is_array()) throw ParseError("matching: no pairs");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
        !p[1].is_number_integer()) {
      throw ParseError("matching: pair must be [a, b]");
    }
    pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  try {
    return Matching(bottom, top, pairs);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Morphism morphism_from_json(const json& j) {
  const int bottom = int_field(j, "bottom"), top = int_field(j, "top");
  if (!j.contains("terms") || !j.at("terms").is_array()) throw ParseError("morphism: no terms");
  try {
    Morphism out(bottom, top);
    for (const auto& t : j.at("terms")) {
      if (!t.is_object() || !t.contains("matching") || !t.contains("coeff")) {
        throw ParseError("morphism: term needs matching and coeff");
      }
      out.add_term(matching_from_json(t.at("matching")), scalar_from_json(t.at("coeff")));
    }
    return out;
  } catch (const BoundaryMismatch& e) {
    throw ParseError(e.what());
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

SignSeq seq_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("sequence: expected an array");
  std::vector<int> values;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError("sequence: entries must be integers");
    values.push_back(v.get<int>());
  }
  try {
    return SignSeq(values);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

// ----------------------------------------------------------------------- text

std::string to_text(const Matching& m) {
  auto name = [&](int label) {
    return std::string(m.is_bottom_label(label) ? "b" : "t") + std::to_string(m.position_of(label));
  };
  std::vector<std::pair<std::string, std::string>> arcs;
  for (auto [a, b] : m.pairs()) {
    std::string x = name(a), y = name(b);
    // Bottom endpoint first, then left to right within a side.
    if (!m.is_bottom_label(a) && !m.is_bottom_label(b) && m.position_of(a) > m.position_of(b)) {
      std::swap(x, y);
    }
    arcs.emplace_back(x, y);
  }
  std::string out = "[";
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i) out += " ";
    out += arcs[i].first + "-" + arcs[i].second;
  }
  return out + "]";
}

std::string to_ascii(const Matching& m) {
  std::string bottom(m.bottom(), '?'), top(m.top(), '?');
  char letter = 'a';
  for (int i = 0; i < m.bottom(); ++i) {
    const int other = m.partner(m.bottom_label(i));
    if (m.is_bottom_label(other)) {
      bottom[i] = other > i ? '(' : ')';
    } else {
      bottom[i] = letter;
      top[m.position_of(other)] = letter;
      letter = letter == 'z' ? 'A' : static_cast<char>(letter + 1);
    }
  }
  for (int j = 0; j < m.top(); ++j) {
    const int other = m.partner(m.top_label(j));
    if (!m.is_bottom_label(other)) top[j] = m.position_of(other) > j ? '(' : ')';
  }
  auto spaced = [](const std::string& row) {
    std::string out;
    for (char c : row) {
      if (!out.empty()) out += ' ';
      out += c;
    }
    return out.empty() ? std::string("-") : out;
  };
  return "top    " + spaced(top) + "\nbottom " + spaced(bottom) + "\n";
}

std::string series_to_string(const Scalar& s, int order) {
  std::vector<std::pair<int, Integer>> terms = series_expand(s, order);
  std::string body = terms.empty() ? "0" : to_string(LaurentPoly::from_terms(terms));
  return body + " + O(q^" + std::to_string(order + 1) + ")";
}

std::string to_text(const Morphism& m, int series_order) {
  std::ostringstream os;
  os << "TL(" << m.bottom() << "," << m.top() << "), " << m.size()
     << (m.size() == 1 ? " term" : " terms") << "\n";
  for (const auto& [diagram, coeff] : m.terms()) {
    os << "  " << to_string(coeff) << "  " << to_text(diagram) << "\n";
    if (series_order > 0) {
      try {
        os << "    ~ " << series_to_string(coeff, series_order) << "\n";
      } catch (const NotExpandable&) {
        os << "    ~ (no expansion in Z[q^-1][[q]])\n";
      }
    }
  }
  return os.str();
}

std::string to_ascii(const Morphism& m) {
  std::ostringstream os;
  os << "TL(" << m.bottom() << "," << m.top() << "), " << m.size()
     << (m.size() == 1 ? " term" : " terms") << "\n";
  for (const auto& [diagram, coeff] : m.terms()) {
    os << "\n" << to_string(coeff) << " *\n";
    std::istringstream rows(to_ascii(diagram));
    for (std::string line; std::getline(rows, line);) os << "  " << line << "\n";
  }
  return os.str();
}

}  // namespace tl
